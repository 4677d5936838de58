//! Minimum augmentation of a tree to a 3-vertex-connected graph.
//!
//! Every 3-connected graph has minimum degree three, so each leaf needs two
//! new incident edges and each degree-two vertex needs one. That gives the
//! lower bound `⌈(2·l1 + l2)/2⌉`, and both constructions below meet it
//! exactly: every added edge joins two deficient vertices, except possibly
//! one edge when the total deficiency is odd.

use std::collections::VecDeque;
use std::fmt;

use crate::connectivity::is_k_connected;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::tree::{decorate, RootedDecoration, Tree};

/// Which construction branch produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AugmentCase {
    PathEvenN,
    PathOddN,
    NonPathAEmpty,
    NonPathAEven,
    NonPathAOdd,
}

impl AugmentCase {
    pub fn token(self) -> &'static str {
        match self {
            AugmentCase::PathEvenN => "path-even-n",
            AugmentCase::PathOddN => "path-odd-n",
            AugmentCase::NonPathAEmpty => "nonpath-A-empty",
            AugmentCase::NonPathAEven => "nonpath-A-even",
            AugmentCase::NonPathAOdd => "nonpath-A-odd",
        }
    }
}

impl fmt::Display for AugmentCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AugmentationResult {
    /// Added edges in the order they were augmented.
    pub edges: Vec<(usize, usize)>,
    pub bound: usize,
    pub case_taken: AugmentCase,
    /// Cross-branch pairs of degree-two vertices, empty for paths.
    pub matched_pairs: Vec<(usize, usize)>,
    /// Degree-two vertices left unmatched, in level order. Empty for paths.
    pub residual_chain: Vec<usize>,
}

impl AugmentationResult {
    /// `T + edges`.
    pub fn augmented_graph(&self, t: &Tree) -> Result<Graph> {
        t.graph().with_edges(&self.edges)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AugmentOptions {
    /// Re-check the output with the exhaustive 3-connectivity test.
    pub verify: bool,
    pub wiring: ChainWiring,
}

/// How the open ends of the residual chain are joined to the leaf cycle.
///
/// The residual chain `x_1..x_m` lies on one root-to-leaf path. After the
/// chain pairing, `x_((m+1)/2)` (odd `m`) or `x_1` and `x_(m/2+1)` (even `m`)
/// still need one edge each, and they take it from the ends `v_1`, `v_l` of
/// the leaf ordering.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum ChainWiring {
    /// The middle chain vertex always goes to a leaf outside the subtree of
    /// `x_1`. Without such an escape, `x_1` together with the vertex below
    /// the chain separates the lower chain from the rest of the graph.
    #[default]
    OutsideSubtree,
    /// Only avoid creating a tree edge: the middle vertex goes to `v_l`
    /// unless it is the parent of `v_l`. Kept for comparison; it is not
    /// 3-connected in general (the smallest failures have seven vertices).
    TreeAdjacency,
}

/// Output of the greedy pairing of degree-two vertices.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Matching {
    pub pairs: Vec<(usize, usize)>,
    pub residual: Vec<usize>,
}

/// `⌈(2·l1 + l2)/2⌉`.
pub fn lower_bound(t: &Tree) -> usize {
    (2 * t.l1() + t.l2()).div_ceil(2)
}

/// Closes the path into a cycle, then adds chords of cycle length `⌊n/2⌋`
/// from every vertex in the first half that still has degree two.
pub fn path_augmentation(t: &Tree) -> Result<AugmentationResult> {
    if !t.is_path() {
        return Err(Error::Contract("path_augmentation requires a path"));
    }
    let n = t.n();
    if n < 4 {
        return Err(Error::Contract("path_augmentation requires n >= 4"));
    }
    let g = t.graph();

    // v[0..n] walks the path from the smaller-id endpoint.
    let mut v = Vec::with_capacity(n);
    let mut prev = usize::MAX;
    let mut cur = t.d1()[0];
    loop {
        v.push(cur);
        match g.neighbors(cur).iter().find(|&&x| x != prev) {
            Some(&next) => {
                prev = cur;
                cur = next;
            }
            None => break,
        }
    }
    debug_assert_eq!(v.len(), n);

    let mut deg = g.degrees();
    let mut edges = Vec::with_capacity(lower_bound(t));
    let mut add = |a: usize, b: usize, deg: &mut Vec<usize>| {
        deg[a] += 1;
        deg[b] += 1;
        edges.push((a, b));
    };

    add(v[0], v[n - 1], &mut deg);
    let half = n / 2;
    for i in 0..n.div_ceil(2) {
        if deg[v[i]] == 2 {
            add(v[i], v[half + i], &mut deg);
        }
    }
    if deg[v[n - 1]] == 2 {
        add(v[n - 1], v[half], &mut deg);
    }

    Ok(AugmentationResult {
        edges,
        bound: lower_bound(t),
        case_taken: if n.is_multiple_of(2) {
            AugmentCase::PathEvenN
        } else {
            AugmentCase::PathOddN
        },
        matched_pairs: Vec::new(),
        residual_chain: Vec::new(),
    })
}

/// Scans the degree-two vertices in level order and pairs each unmarked
/// `w_i` with the earliest unmarked `w_j` (`j < i`) on a different branch,
/// meaning neither is an ancestor of the other.
///
/// Two unmarked vertices that end up incomparable would have been paired
/// when the later one was scanned, so the unmarked set is always an ancestry
/// chain. Level order puts its ancestors of `w_i` first, so the partner is
/// the first chain member past that prefix.
pub fn greedy_cross_branch_matching(d: &RootedDecoration) -> Matching {
    let mut chain: VecDeque<usize> = VecDeque::new();
    let mut pairs = Vec::new();
    for &v in d.w_order() {
        let k = chain.partition_point(|&c| d.is_ancestor(c, v));
        match chain.remove(k) {
            Some(u) => pairs.push((v, u)),
            None => chain.push_back(v),
        }
    }
    Matching {
        pairs,
        residual: chain.into(),
    }
}

/// Augmentation for trees with maximum degree at least three.
///
/// Pairs degree-two vertices across branches, then closes the leaves into a
/// cycle (or a path when the residual chain has even length) and joins the
/// residual chain to it.
pub fn non_path_augmentation(t: &Tree) -> Result<AugmentationResult> {
    non_path_augmentation_with(t, ChainWiring::default())
}

pub fn non_path_augmentation_with(t: &Tree, wiring: ChainWiring) -> Result<AugmentationResult> {
    if t.is_path() {
        return Err(Error::Contract(
            "non_path_augmentation requires a vertex of degree >= 3",
        ));
    }
    let d = decorate(t)?;
    let g = t.graph();
    let Matching { pairs, residual } = greedy_cross_branch_matching(&d);

    let mut leaves = d.leaf_order().to_vec();
    let l = leaves.len();
    let x = &residual;
    let m = x.len();
    // only evaluated when the chain is nonempty
    let outside = |v: usize| !d.is_ancestor(x[0], v);

    let mut edges = pairs.clone();
    edges.reserve(lower_bound(t) - pairs.len());

    let case_taken = if m == 0 {
        edges.push((leaves[0], leaves[l - 1]));
        edges.extend(leaves.windows(2).map(|p| (p[0], p[1])));
        AugmentCase::NonPathAEmpty
    } else if m.is_multiple_of(2) {
        // 1-based pairs {x_j, x_(m+2-j)} for j = 2..=m/2; x_1 and x_(m/2+1) stay open.
        edges.extend((1..m / 2).map(|j| (x[j], x[m - j])));
        let (top, mid) = (x[0], x[m / 2]);
        let swap = match wiring {
            ChainWiring::TreeAdjacency => g.has_edge(mid, leaves[l - 1]),
            ChainWiring::OutsideSubtree => {
                if !outside(leaves[l - 1]) && !outside(leaves[0]) {
                    // Cut the leaf cycle just after the first outside leaf,
                    // so that leaf ends the path.
                    let p = leaves
                        .iter()
                        .position(|&v| outside(v))
                        .expect("root has another branch");
                    leaves.rotate_left(p + 1);
                }
                !outside(leaves[l - 1])
            }
        };
        edges.extend(leaves.windows(2).map(|p| (p[0], p[1])));
        let (first, last) = (leaves[0], leaves[l - 1]);
        if swap {
            edges.push((top, last));
            edges.push((mid, first));
        } else {
            edges.push((top, first));
            edges.push((mid, last));
        }
        AugmentCase::NonPathAEven
    } else {
        // 1-based pairs {x_j, x_(m+1-j)} for j = 1..=m/2; x_((m+1)/2) stays open.
        edges.extend((0..m / 2).map(|j| (x[j], x[m - 1 - j])));
        let (first, last) = (leaves[0], leaves[l - 1]);
        edges.push((first, last));
        edges.extend(leaves.windows(2).map(|p| (p[0], p[1])));
        let mid = x[m / 2];
        let target = match wiring {
            ChainWiring::TreeAdjacency if g.has_edge(mid, last) => first,
            ChainWiring::TreeAdjacency => last,
            ChainWiring::OutsideSubtree => [last, first]
                .into_iter()
                .chain(leaves.iter().copied())
                .find(|&v| outside(v))
                .expect("root has another branch"),
        };
        edges.push((mid, target));
        AugmentCase::NonPathAOdd
    };

    Ok(AugmentationResult {
        edges,
        bound: lower_bound(t),
        case_taken,
        matched_pairs: pairs,
        residual_chain: residual,
    })
}

/// Dispatches on the tree's shape. Fails for trees with fewer than four
/// vertices, which have no simple 3-connected supergraph.
pub fn tri_augment(t: &Tree) -> Result<AugmentationResult> {
    tri_augment_with(t, AugmentOptions::default())
}

pub fn tri_augment_with(t: &Tree, opts: AugmentOptions) -> Result<AugmentationResult> {
    if t.n() < 4 {
        return Err(Error::TooSmall(t.n()));
    }
    let result = if t.is_path() {
        path_augmentation(t)?
    } else {
        non_path_augmentation_with(t, opts.wiring)?
    };
    if opts.verify {
        verify(t, &result)?;
    }
    Ok(result)
}

fn verify(t: &Tree, result: &AugmentationResult) -> Result<()> {
    let h = result
        .augmented_graph(t)
        .map_err(|e| Error::VerificationFailed(format!("edge set is not simple: {e}")))?;
    if result.edges.len() != result.bound {
        return Err(Error::VerificationFailed(format!(
            "added {} edges, bound is {}",
            result.edges.len(),
            result.bound
        )));
    }
    if !is_k_connected(&h, 3) {
        return Err(Error::VerificationFailed(
            "result is not 3-connected".into(),
        ));
    }
    Ok(())
}
