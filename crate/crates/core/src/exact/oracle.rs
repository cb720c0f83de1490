use std::time::Instant;

use super::{SolveResult, SolveStats};
use crate::error::{ClubError, Result};
use crate::graph::{ball, Graph, VertexSet};

/// Largest graph the brute-force oracle accepts (one machine word per row).
pub const ORACLE_MAX_VERTICES: usize = 64;

fn is_two_club(rows: &[u64], set: u64) -> bool {
    let mut rest = set;
    while rest != 0 {
        let a = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        // Every later member must be adjacent to `a` or share a member neighbor with it.
        let mut others = rest & !rows[a];
        while others != 0 {
            let b = others.trailing_zeros() as usize;
            others &= others - 1;
            if rows[a] & rows[b] & set == 0 {
                return false;
            }
        }
    }
    true
}

/// Maximum 2-club by exhaustive search. Each vertex `v` is tried as the
/// smallest member of the solution, and only subsets of its radius-2 ball are
/// enumerated, largest first.
pub fn oracle_max_2club(g: &Graph) -> Result<SolveResult> {
    let n = g.n();
    if n > ORACLE_MAX_VERTICES {
        return Err(ClubError::Budget(format!(
            "the brute-force oracle handles at most {ORACLE_MAX_VERTICES} vertices, got {n}"
        )));
    }
    let start = Instant::now();
    let rows: Vec<u64> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0u64, |acc, &w| acc | 1 << w))
        .collect();
    let mut best_mask = 0u64;
    let mut best_size = 0usize;
    let mut checked = 0u64;
    for v in g.vertices() {
        let cand: Vec<usize> = ball(g, v, 2)?.iter().filter(|&u| u > v).collect();
        let c = cand.len();
        // Subsets of `cand` of size k give 2-clubs of size k + 1.
        for k in (best_size..=c).rev() {
            let mut found = None;
            if k == 0 {
                found = Some(1u64 << v);
            } else {
                let mut pick: u64 = (1u64 << k) - 1;
                // `v` is never in `cand`, so `c < 64`.
                let limit: u64 = (1u64 << c) - 1;
                loop {
                    checked += 1;
                    let mut set = 1u64 << v;
                    let mut bits = pick;
                    while bits != 0 {
                        set |= 1 << cand[bits.trailing_zeros() as usize];
                        bits &= bits - 1;
                    }
                    if is_two_club(&rows, set) {
                        found = Some(set);
                        break;
                    }
                    // Gosper's hack: next mask with the same popcount.
                    let low = pick & pick.wrapping_neg();
                    let ripple = pick.wrapping_add(low);
                    if ripple == 0 || ripple > limit {
                        break;
                    }
                    pick = (((ripple ^ pick) >> 2) / low) | ripple;
                    if pick > limit {
                        break;
                    }
                }
            }
            if let Some(set) = found {
                best_mask = set;
                best_size = k + 1;
                break;
            }
        }
    }
    let best: VertexSet = (0..n).filter(|&v| best_mask >> v & 1 == 1).collect();
    let stats = SolveStats { branch_nodes: checked, table_entries: 0, elapsed: start.elapsed() };
    SolveResult::new(best, stats).verified(g, 2, "oracle_max_2club")
}
