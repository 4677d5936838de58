//! Simple undirected graphs over contiguous vertex ids `0..n`.

use crate::error::{Error, Result};

/// A simple undirected graph. Neighbor lists are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

/// Builds a graph on `n` vertices, rejecting loops, repeated edges and
/// ids outside `0..n`.
pub fn graph_from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    let mut g = Graph::empty(n);
    g.add_edges(edges.iter().copied())?;
    Ok(g)
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Returns a copy of `self` with `extra` edges added. Fails on the same
    /// conditions as [`graph_from_edges`], including an edge already present.
    pub fn with_edges(&self, extra: &[(usize, usize)]) -> Result<Graph> {
        let mut g = self.clone();
        g.add_edges(extra.iter().copied())?;
        Ok(g)
    }

    fn add_edges(&mut self, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<()> {
        let n = self.n();
        for (u, v) in edges {
            for id in [u, v] {
                if id >= n {
                    return Err(Error::VertexOutOfRange { id, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            match self.adj[u].binary_search(&v) {
                Ok(_) => return Err(Error::DuplicateEdge(u.min(v), u.max(v))),
                Err(pos) => self.adj[u].insert(pos, v),
            }
            let pos = self.adj[v].binary_search(&u).unwrap_err();
            self.adj[v].insert(pos, u);
            self.m += 1;
        }
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// All vertex pairs that are not edges, `(u, v)` with `u < v`, lexicographic.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut out = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        graph_from_edges(n, &edges).expect("complete graph is simple")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a simple cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        graph_from_edges(n, &edges).expect("cycle is simple")
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        graph_from_edges(n, &edges).expect("path is simple")
    }

    pub fn star(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
        graph_from_edges(n, &edges).expect("star is simple")
    }
}
