//! Brute-force ground truth for small trees.

use crate::connectivity::is_k_connected;
use crate::error::{Error, Result};
use crate::gen::prufer_decode;
use crate::tree::Tree;

/// Largest tree the exhaustive augmentation search accepts.
pub const ORACLE_MAX_N: usize = 8;
/// Largest `n` for labeled-tree enumeration (`9^7` trees).
pub const ENUMERATE_MAX_N: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub minimum: usize,
    /// Lexicographically first optimal edge set over the sorted non-edges.
    pub witness: Vec<(usize, usize)>,
    /// Candidate sets that reached the connectivity check.
    pub explored: u64,
}

/// `⌈Σ max(0, 3 - deg(v)) / 2⌉`, computed straight from the degrees.
pub fn degree_deficiency_bound(t: &Tree) -> usize {
    let g = t.graph();
    let total: usize = (0..g.n()).map(|v| 3usize.saturating_sub(g.degree(v))).sum();
    total.div_ceil(2)
}

/// Smallest set of non-edges whose addition makes `t` 3-connected.
///
/// Sizes are tried upward from the degree-deficiency bound (no smaller set
/// can lift every vertex to degree three). Within a size, subsets are
/// visited in lexicographic order of non-edge index and a branch is cut as
/// soon as the edges still to be chosen cannot cover the remaining deficiency.
pub fn min_augmentation_bruteforce(t: &Tree) -> Result<OracleResult> {
    let n = t.n();
    if n < 4 {
        return Err(Error::TooSmall(n));
    }
    if n > ORACLE_MAX_N {
        return Err(Error::Budget(format!(
            "exhaustive search is limited to n <= {ORACLE_MAX_N}, got {n}"
        )));
    }
    let g = t.graph();
    let candidates = g.non_edges();
    let mut search = Search {
        tree: t,
        candidates: &candidates,
        degree: g.degrees(),
        chosen: Vec::new(),
        explored: 0,
    };
    for size in degree_deficiency_bound(t)..=candidates.len() {
        if search.run(0, size) {
            let witness = search.chosen.iter().map(|&i| candidates[i]).collect();
            return Ok(OracleResult {
                minimum: size,
                witness,
                explored: search.explored,
            });
        }
    }
    unreachable!("K_n is 3-connected for n >= 4")
}

struct Search<'a> {
    tree: &'a Tree,
    candidates: &'a [(usize, usize)],
    degree: Vec<usize>,
    chosen: Vec<usize>,
    explored: u64,
}

impl Search<'_> {
    fn deficiency(&self) -> usize {
        self.degree.iter().map(|&d| 3usize.saturating_sub(d)).sum()
    }

    /// Extends `chosen` with indices `>= from` up to `size` edges. Leaves
    /// `chosen` holding the witness on success.
    fn run(&mut self, from: usize, size: usize) -> bool {
        let left = size - self.chosen.len();
        if left == 0 {
            if self.deficiency() > 0 {
                return false;
            }
            self.explored += 1;
            let edges: Vec<_> = self.chosen.iter().map(|&i| self.candidates[i]).collect();
            let h = self
                .tree
                .graph()
                .with_edges(&edges)
                .expect("candidates are non-edges");
            return is_k_connected(&h, 3);
        }
        if self.deficiency() > 2 * left || from + left > self.candidates.len() {
            return false;
        }
        for i in from..=self.candidates.len() - left {
            let (u, v) = self.candidates[i];
            self.degree[u] += 1;
            self.degree[v] += 1;
            self.chosen.push(i);
            if self.run(i + 1, size) {
                return true;
            }
            self.chosen.pop();
            self.degree[u] -= 1;
            self.degree[v] -= 1;
        }
        false
    }
}

/// Every labeled tree on `n` vertices, one per Prüfer sequence, in
/// lexicographic sequence order.
pub fn enumerate_labeled_trees(n: usize) -> Result<LabeledTrees> {
    if !(2..=ENUMERATE_MAX_N).contains(&n) {
        return Err(Error::Budget(format!(
            "labeled tree enumeration supports 2 <= n <= {ENUMERATE_MAX_N}, got {n}"
        )));
    }
    Ok(LabeledTrees {
        n,
        seq: vec![0; n - 2],
        done: false,
    })
}

#[derive(Debug, Clone)]
pub struct LabeledTrees {
    n: usize,
    seq: Vec<usize>,
    done: bool,
}

impl Iterator for LabeledTrees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        if self.done {
            return None;
        }
        let tree = prufer_decode(self.n, &self.seq).expect("sequence is in range");
        // odometer increment, last position fastest
        self.done = true;
        for pos in (0..self.seq.len()).rev() {
            self.seq[pos] += 1;
            if self.seq[pos] < self.n {
                self.done = false;
                break;
            }
            self.seq[pos] = 0;
        }
        Some(tree)
    }
}
