//! Deterministic tree generators and Prüfer sequence coding.
//!
//! Random trees decode a Prüfer sequence whose entries are drawn one at a
//! time with `rng.gen_range(0..n as u32)` from `ChaCha8Rng::seed_from_u64(seed)`
//! (`rand` 0.8, `rand_chacha` 0.3). Every labeled tree is equally likely.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{graph_from_edges, Graph};
use crate::tree::Tree;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Shape {
    Path,
    Star,
    Spider,
    Caterpillar,
    Random,
}

impl Shape {
    pub const ALL: [Shape; 5] = [
        Shape::Path,
        Shape::Star,
        Shape::Spider,
        Shape::Caterpillar,
        Shape::Random,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Shape::Path => "path",
            Shape::Star => "star",
            Shape::Spider => "spider",
            Shape::Caterpillar => "caterpillar",
            Shape::Random => "random",
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Shape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Shape::ALL
            .into_iter()
            .find(|shape| shape.name() == s)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown shape `{s}`")))
    }
}

/// Parameters for one generated tree.
///
/// `legs` is the number of legs of a spider (default 3) or the number of
/// leaves hung on each spine vertex of a caterpillar (default 1). `spine` is
/// the caterpillar spine length (default `⌈n/2⌉`). `seed` only affects
/// random trees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeGenSpec {
    pub shape: Shape,
    pub n: usize,
    pub seed: u64,
    pub legs: Option<usize>,
    pub spine: Option<usize>,
}

impl TreeGenSpec {
    pub fn new(shape: Shape, n: usize) -> Self {
        TreeGenSpec {
            shape,
            n,
            seed: 0,
            legs: None,
            spine: None,
        }
    }

    pub fn random(n: usize, seed: u64) -> Self {
        TreeGenSpec {
            seed,
            ..TreeGenSpec::new(Shape::Random, n)
        }
    }
}

pub fn generate(spec: &TreeGenSpec) -> Result<Tree> {
    let n = spec.n;
    if n < 2 {
        return Err(Error::InvalidSpec(format!("need n >= 2, got {n}")));
    }
    let edges: Vec<(usize, usize)> = match spec.shape {
        Shape::Path => (1..n).map(|i| (i - 1, i)).collect(),
        Shape::Star => (1..n).map(|i| (0, i)).collect(),
        Shape::Spider => spider_edges(n, spec.legs.unwrap_or(3))?,
        Shape::Caterpillar => caterpillar_edges(
            n,
            spec.spine.unwrap_or(n.div_ceil(2)),
            spec.legs.unwrap_or(1),
        )?,
        Shape::Random => {
            let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
            let seq: Vec<usize> = (0..n - 2)
                .map(|_| rng.gen_range(0..n as u32) as usize)
                .collect();
            return prufer_decode(n, &seq);
        }
    };
    Tree::new(graph_from_edges(n, &edges)?)
}

/// Center 0 with `legs` legs whose lengths differ by at most one. Leg `i`
/// uses consecutive ids.
fn spider_edges(n: usize, legs: usize) -> Result<Vec<(usize, usize)>> {
    if legs == 0 || legs > n - 1 {
        return Err(Error::InvalidSpec(format!(
            "spider on {n} vertices needs 1..={} legs, got {legs}",
            n - 1
        )));
    }
    let (base, extra) = ((n - 1) / legs, (n - 1) % legs);
    let mut edges = Vec::with_capacity(n - 1);
    let mut next = 1;
    for leg in 0..legs {
        let mut prev = 0;
        for _ in 0..base + usize::from(leg < extra) {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Ok(edges)
}

/// Spine `0..spine` as a path; the remaining vertices are hung as leaves,
/// `legs` per spine vertex, filling spine vertices in order.
fn caterpillar_edges(n: usize, spine: usize, legs: usize) -> Result<Vec<(usize, usize)>> {
    if spine == 0 || spine > n || spine + spine * legs < n {
        return Err(Error::InvalidSpec(format!(
            "caterpillar with spine {spine} and {legs} legs per vertex cannot hold {n} vertices"
        )));
    }
    let mut edges: Vec<_> = (1..spine).map(|i| (i - 1, i)).collect();
    edges.extend((spine..n).map(|leaf| ((leaf - spine) / legs, leaf)));
    Ok(edges)
}

/// Decodes a Prüfer sequence of length `n - 2` over `0..n` in linear time.
pub fn prufer_decode(n: usize, seq: &[usize]) -> Result<Tree> {
    if n < 2 || seq.len() != n - 2 {
        return Err(Error::InvalidSpec(format!(
            "Prüfer sequence for {n} vertices must have length {}",
            n.saturating_sub(2)
        )));
    }
    if let Some(&bad) = seq.iter().find(|&&x| x >= n) {
        return Err(Error::VertexOutOfRange { id: bad, n });
    }
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = (0..n).find(|&v| degree[v] == 1).expect("some leaf exists");
    let mut leaf = ptr;
    for &x in seq {
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 && x < ptr {
            leaf = x;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    Tree::new(graph_from_edges(n, &edges)?)
}

/// Prüfer sequence of a tree on `n >= 2` vertices.
pub fn prufer_encode(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut degree = g.degrees();
    let mut removed = vec![false; n];
    let mut seq = Vec::with_capacity(n.saturating_sub(2));
    let mut ptr = (0..n).find(|&v| degree[v] == 1).unwrap_or(0);
    let mut leaf = ptr;
    for _ in 0..n.saturating_sub(2) {
        removed[leaf] = true;
        let next = *g
            .neighbors(leaf)
            .iter()
            .find(|&&u| !removed[u])
            .expect("leaf has a remaining neighbor");
        seq.push(next);
        degree[next] -= 1;
        if degree[next] == 1 && next < ptr {
            leaf = next;
        } else {
            ptr += 1;
            while degree[ptr] != 1 || removed[ptr] {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    seq
}
