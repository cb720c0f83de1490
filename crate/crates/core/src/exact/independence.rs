use std::time::Instant;

use super::{check_s, SolveResult, SolveStats};
use crate::error::{ClubError, Result};
use crate::graph::{bfs_limited, diameter, Graph, VertexSet};

/// Three pairwise non-adjacent vertices, if any exist.
pub fn complement_triangle(g: &Graph) -> Option<[usize; 3]> {
    let n = g.n();
    let rows = g.adjacency_bitsets();
    for u in 0..n {
        for v in u + 1..n {
            if rows[u].contains(v) {
                continue;
            }
            // A third vertex adjacent to neither, past `v` to report sorted triples.
            let hit = (v + 1..n).find(|&w| !rows[u].contains(w) && !rows[v].contains(w));
            if let Some(w) = hit {
                return Some([u, v, w]);
            }
        }
    }
    None
}

/// Maximum s-club on graphs without three pairwise non-adjacent vertices.
///
/// For every ordered pair `(v, u)` let `G'` be `G` minus the common
/// neighbors of `v` and `u` (and `u` itself when adjacent to `v`). The
/// candidate is the closed neighborhood of `v` in `G'` together with the
/// neighbors of `u` in `G'` that are within distance `s` of `v` in `G'`.
/// Some candidate is a maximum s-club.
pub fn independence2_solve(g: &Graph, s: usize) -> Result<SolveResult> {
    check_s(s, 2)?;
    if let Some(t) = complement_triangle(g) {
        return Err(ClubError::Precondition(format!(
            "the graph has the independent set {t:?} of size three"
        )));
    }
    let start = Instant::now();
    let n = g.n();
    if diameter(g).is_some_and(|d| d <= s) {
        let stats = SolveStats { elapsed: start.elapsed(), ..SolveStats::default() };
        return SolveResult::new(VertexSet::full(n), stats).verified(g, s, "independence2_solve");
    }
    let mut best = VertexSet::new();
    let mut pairs = 0u64;
    let mut alive = vec![true; n];
    for v in 0..n {
        for u in (0..n).filter(|&u| u != v) {
            pairs += 1;
            let removed: Vec<usize> = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| w == u || g.has_edge(w, u))
                .collect();
            for &w in &removed {
                alive[w] = false;
            }
            let dist = bfs_limited(g, v, Some(&alive), s);
            let mut cand: Vec<usize> = vec![v];
            cand.extend(g.neighbors(v).iter().copied().filter(|&w| alive[w]));
            if alive[u] {
                cand.extend(g.neighbors(u).iter().copied().filter(|&w| alive[w] && w != v && dist[w] <= s));
            }
            for &w in &removed {
                alive[w] = true;
            }
            let cand = VertexSet::from(cand);
            if cand.len() > best.len() {
                best = cand;
            }
        }
    }
    let stats = SolveStats { branch_nodes: pairs, table_entries: 0, elapsed: start.elapsed() };
    SolveResult::new(best, stats).verified(g, s, "independence2_solve")
}
