//! Connectivity and 3-connectivity by brute-force vertex removal.

use rayon::prelude::*;

use crate::graph::Graph;

/// `true` iff `g` has exactly one connected component.
pub fn is_connected(g: &Graph) -> bool {
    connected_without(g, &[])
}

/// Whether `g` stays connected after deleting the vertices in `removed`.
/// Deleting every vertex leaves an empty graph, which counts as connected.
pub fn connected_without(g: &Graph, removed: &[usize]) -> bool {
    let mut seen = vec![false; g.n()];
    for &r in removed {
        seen[r] = true;
    }
    let Some(start) = (0..g.n()).find(|&v| !seen[v]) else {
        return true;
    };
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.iter().all(|&s| s)
}

/// Some vertex whose removal disconnects `g`.
pub fn articulation_point(g: &Graph) -> Option<usize> {
    (0..g.n()).find(|&v| !connected_without(g, &[v]))
}

/// Some pair of vertices whose removal disconnects `g`, smallest first.
pub fn separation_pair(g: &Graph) -> Option<(usize, usize)> {
    let n = g.n();
    (0..n).into_par_iter().find_map_first(|u| {
        (u + 1..n)
            .find(|&v| !connected_without(g, &[u, v]))
            .map(|v| (u, v))
    })
}

/// `n >= 4`, connected, no articulation point and no separation pair.
pub fn is_3_connected(g: &Graph) -> bool {
    g.n() >= 4 && is_connected(g) && articulation_point(g).is_none() && separation_pair(g).is_none()
}
