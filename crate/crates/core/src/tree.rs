//! Validated trees and their rooted level-order decoration.

use std::collections::VecDeque;

use crate::connectivity::is_connected;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A connected acyclic graph with its degree profile cached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    graph: Graph,
    d1: Vec<usize>,
    d2: Vec<usize>,
    is_path: bool,
}

/// Checks that `g` is a tree and records its degree-one and degree-two
/// vertices.
pub fn validate_tree(g: Graph) -> Result<Tree> {
    Tree::new(g)
}

impl Tree {
    pub fn new(graph: Graph) -> Result<Self> {
        if graph.n() == 0 {
            return Err(Error::NotATree("graph has no vertices"));
        }
        if graph.m() + 1 != graph.n() {
            return Err(Error::NotATree("edge count is not n - 1"));
        }
        if !is_connected(&graph) {
            return Err(Error::NotATree("graph is disconnected"));
        }
        let by_degree = |d| (0..graph.n()).filter(|&v| graph.degree(v) == d).collect();
        let d1 = by_degree(1);
        let d2 = by_degree(2);
        let is_path = graph.max_degree() <= 2;
        Ok(Tree {
            graph,
            d1,
            d2,
            is_path,
        })
    }

    #[inline]
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Degree-one vertices, ascending.
    pub fn d1(&self) -> &[usize] {
        &self.d1
    }

    /// Degree-two vertices, ascending.
    pub fn d2(&self) -> &[usize] {
        &self.d2
    }

    pub fn l1(&self) -> usize {
        self.d1.len()
    }

    pub fn l2(&self) -> usize {
        self.d2.len()
    }

    /// Maximum degree at most two.
    pub fn is_path(&self) -> bool {
        self.is_path
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }
}

/// A non-path tree rooted at a maximum-degree vertex, with BFS ordering and
/// DFS entry/exit times for constant-time ancestry queries.
///
/// Branch `B_i` (the root-to-leaf path of the `i`-th leaf in `leaf_order`) is
/// not stored; `u ∈ B_i` exactly when `u` is an ancestor of that leaf.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedDecoration {
    root: usize,
    parent: Vec<Option<usize>>,
    level: Vec<usize>,
    level_order: Vec<usize>,
    leaf_order: Vec<usize>,
    w_order: Vec<usize>,
    tin: Vec<usize>,
    tout: Vec<usize>,
}

/// Roots `t` at its smallest-id maximum-degree vertex and performs a BFS
/// that expands children in ascending id order.
pub fn decorate(t: &Tree) -> Result<RootedDecoration> {
    if t.is_path() {
        return Err(Error::Contract(
            "decorate requires a tree with a vertex of degree >= 3",
        ));
    }
    let g = t.graph();
    let n = g.n();
    let max_deg = g.max_degree();
    let root = (0..n)
        .find(|&v| g.degree(v) == max_deg)
        .expect("non-empty tree");

    let mut parent = vec![None; n];
    let mut level = vec![0; n];
    let mut level_order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([root]);
    seen[root] = true;
    while let Some(u) = queue.pop_front() {
        level_order.push(u);
        for &v in g.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                parent[v] = Some(u);
                level[v] = level[u] + 1;
                queue.push_back(v);
            }
        }
    }

    let leaf_order = level_order
        .iter()
        .copied()
        .filter(|&v| g.degree(v) == 1)
        .collect();
    let w_order = level_order
        .iter()
        .copied()
        .filter(|&v| g.degree(v) == 2)
        .collect();

    let mut tin = vec![0; n];
    let mut tout = vec![0; n];
    let mut timer = 0;
    let mut stack = vec![(root, 0usize)];
    tin[root] = timer;
    timer += 1;
    while let Some(frame) = stack.last_mut() {
        let (u, idx) = *frame;
        if let Some(&v) = g.neighbors(u).get(idx) {
            frame.1 += 1;
            if Some(v) != parent[u] {
                tin[v] = timer;
                timer += 1;
                stack.push((v, 0));
            }
        } else {
            tout[u] = timer;
            stack.pop();
        }
    }

    Ok(RootedDecoration {
        root,
        parent,
        level,
        level_order,
        leaf_order,
        w_order,
        tin,
        tout,
    })
}

/// True iff `u` lies on the root-to-`v` path (so `is_ancestor(d, v, v)`).
pub fn is_ancestor(d: &RootedDecoration, u: usize, v: usize) -> bool {
    d.is_ancestor(u, v)
}

impl RootedDecoration {
    pub fn root(&self) -> usize {
        self.root
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn level(&self, v: usize) -> usize {
        self.level[v]
    }

    /// All vertices in BFS order, root first.
    pub fn level_order(&self) -> &[usize] {
        &self.level_order
    }

    /// Leaves `v_1..v_l` in BFS order.
    pub fn leaf_order(&self) -> &[usize] {
        &self.leaf_order
    }

    /// Degree-two vertices `w_1..w_k` in BFS order.
    pub fn w_order(&self) -> &[usize] {
        &self.w_order
    }

    #[inline]
    pub fn is_ancestor(&self, u: usize, v: usize) -> bool {
        self.tin[u] <= self.tin[v] && self.tout[v] <= self.tout[u]
    }

    /// True iff `u` and `v` lie on a common root-to-leaf path.
    #[inline]
    pub fn comparable(&self, u: usize, v: usize) -> bool {
        self.is_ancestor(u, v) || self.is_ancestor(v, u)
    }

    /// Leaves in the subtree of `u`, in leaf order. These are the leaves
    /// whose branch contains `u`.
    pub fn branch_leaves(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.leaf_order
            .iter()
            .copied()
            .filter(move |&leaf| self.is_ancestor(u, leaf))
    }

    /// Membership test `u ∈ B_i` for 0-based leaf index `i`.
    pub fn in_branch(&self, u: usize, i: usize) -> bool {
        self.is_ancestor(u, self.leaf_order[i])
    }
}
