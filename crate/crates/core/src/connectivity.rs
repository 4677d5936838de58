//! Vertex-connectivity checks.
//!
//! A graph is k-connected when it has more than k vertices and no set of
//! fewer than k vertices separates it. With `n > k` it suffices to try
//! separators of size exactly `k - 1`: any smaller separator can be padded
//! while keeping one vertex from each of two components.

use itertools::Itertools;

use crate::graph::Graph;

/// True iff `g` has at most one connected component. The empty graph counts
/// as connected.
pub fn is_connected(g: &Graph) -> bool {
    is_connected_after_removal(g, &[])
}

/// True iff `g - removed` has exactly one component (or no vertices at all).
pub fn is_connected_after_removal(g: &Graph, removed: &[usize]) -> bool {
    let n = g.n();
    let mut seen = vec![false; n];
    for &v in removed {
        seen[v] = true;
    }
    let remaining = n - seen.iter().filter(|&&s| s).count();
    let Some(start) = (0..n).find(|&v| !seen[v]) else {
        return true;
    };
    let mut stack = vec![start];
    seen[start] = true;
    let mut reached = 1;
    while let Some(u) = stack.pop() {
        for &v in g.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                reached += 1;
                stack.push(v);
            }
        }
    }
    reached == remaining
}

/// True iff `g - removed` is connected and no single further vertex
/// disconnects it. Uses one low-link DFS.
fn survives_any_single_removal(g: &Graph, removed: &[usize]) -> bool {
    let n = g.n();
    let mut gone = vec![false; n];
    for &v in removed {
        gone[v] = true;
    }
    let remaining = n - gone.iter().filter(|&&s| s).count();
    let Some(root) = (0..n).find(|&v| !gone[v]) else {
        return true;
    };

    const UNVISITED: usize = usize::MAX;
    let mut disc = vec![UNVISITED; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    let mut root_children = 0;
    // (vertex, parent, next neighbor index)
    let mut stack: Vec<(usize, usize, usize)> = vec![(root, UNVISITED, 0)];
    disc[root] = timer;
    low[root] = timer;
    timer += 1;

    while let Some(frame) = stack.last_mut() {
        let (u, parent, idx) = *frame;
        if let Some(&v) = g.neighbors(u).get(idx) {
            frame.2 += 1;
            if gone[v] || v == parent {
                continue;
            }
            if disc[v] == UNVISITED {
                disc[v] = timer;
                low[v] = timer;
                timer += 1;
                if u == root {
                    root_children += 1;
                }
                stack.push((v, u, 0));
            } else {
                low[u] = low[u].min(disc[v]);
            }
        } else {
            stack.pop();
            if parent != UNVISITED {
                low[parent] = low[parent].min(low[u]);
                if parent != root && low[u] >= disc[parent] {
                    return false;
                }
            }
        }
    }

    timer == remaining && root_children <= 1
}

/// True iff `g` is k-connected. For `k >= 2` this enumerates every vertex
/// set of size `k - 2` and runs an articulation-point search on the rest,
/// which is equivalent to removing every set of size `k - 1`.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if g.n() <= k {
        return false;
    }
    if k == 1 {
        return is_connected(g);
    }
    (0..g.n())
        .combinations(k - 2)
        .all(|s| survives_any_single_removal(g, &s))
}

/// Literal form of [`is_k_connected`]: removes every vertex set of size
/// `k - 1` and checks connectivity of what is left.
pub fn is_k_connected_exhaustive(g: &Graph, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if g.n() <= k {
        return false;
    }
    (0..g.n())
        .combinations(k - 1)
        .all(|s| is_connected_after_removal(g, &s))
}

/// κ(g): the largest k for which `g` is k-connected. `K_n` gives `n - 1`
/// and a disconnected graph gives 0. Exhaustive, so keep `n` small.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let mut k = 0;
    while is_k_connected(g, k + 1) {
        k += 1;
    }
    k
}
