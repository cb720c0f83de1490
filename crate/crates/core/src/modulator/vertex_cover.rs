use std::time::Instant;

use super::{best_over_guesses, check_modulator_size, guess_view, pairs_needing_outside_neighbor};
use crate::error::{ClubError, Result};
use crate::exact::{SolveResult, SolveStats};
use crate::graph::{Graph, VertexSet};

/// Maximum 2-club when `x` is a vertex cover, i.e. `G - x` is edgeless.
pub fn vertex_cover_routine(g: &Graph, x: &VertexSet) -> Result<SolveResult> {
    vertex_cover_routine_with(g, x, 1)
}

/// Every outside vertex only has neighbors in `x`, so within a guess `X'`
/// outside vertices with equal signatures are false twins and a solution
/// with two or more vertices takes whole classes. A set of classes is
/// feasible when (a) any two chosen classes, and a chosen class of two or
/// more vertices with itself, share a signature vertex, (b) each chosen class
/// reaches every `X'` member outside its signature through a signature
/// vertex, and (c) every non-adjacent pair of `X'` has a common neighbor in
/// `X'` or in a chosen class.
pub fn vertex_cover_routine_with(g: &Graph, x: &VertexSet, jobs: usize) -> Result<SolveResult> {
    x.validate(g.n())?;
    let in_x = x.to_mask(g.n());
    if let Some((u, v)) = g.edges().find(|&(u, v)| !in_x[u] && !in_x[v]) {
        return Err(ClubError::Precondition(format!(
            "the edge ({u}, {v}) avoids the vertex cover {x:?}"
        )));
    }
    check_modulator_size(x)?;
    let start = Instant::now();
    let (mut best, mut stats) = best_over_guesses(x, jobs, |xp| solve_guess(g, x, xp))?;
    if best.is_empty() && g.n() > 0 {
        best = VertexSet::singleton(0);
    }
    stats.elapsed = start.elapsed();
    SolveResult::new(best, stats).verified(g, 2, "vertex_cover_routine")
}

fn solve_guess(g: &Graph, x: &VertexSet, xp: &VertexSet) -> Result<(Option<VertexSet>, SolveStats)> {
    let view = guess_view(g, x, xp, false)?;
    let h = &view.sub.graph;
    let k = view.xs.len();
    let classes = view.part.len();
    let sig: Vec<u32> = (0..classes).map(|c| view.part.signature_bits(c) as u32).collect();
    let size: Vec<usize> = view.part.classes.iter().map(|c| c.members.len()).collect();
    let x_nbrs: Vec<u32> = view
        .xs
        .iter()
        .map(|&a| (0..k).filter(|&j| h.has_edge(a, view.xs[j])).fold(0, |m, j| m | 1 << j))
        .collect();
    let needs = pairs_needing_outside_neighbor(h, &view.xs);
    let need_mask: u32 = (1u32 << needs.len()) - 1;
    let covers: Vec<u32> = sig
        .iter()
        .map(|&s| {
            needs
                .iter()
                .enumerate()
                .filter(|(_, &(i, j))| s >> i & 1 == 1 && s >> j & 1 == 1)
                .fold(0, |m, (p, _)| m | 1 << p)
        })
        .collect();
    // Conditions (a) on a class by itself and (b).
    let alone: Vec<bool> = (0..classes)
        .map(|c| {
            (size[c] < 2 || sig[c] != 0)
                && (0..k).filter(|&j| sig[c] >> j & 1 == 0).all(|j| sig[c] & x_nbrs[j] != 0)
        })
        .collect();
    let compatible: Vec<u32> = (0..classes)
        .map(|a| (0..classes).filter(|&b| a == b || sig[a] & sig[b] != 0).fold(0, |m, b| m | 1 << b))
        .collect();

    // Masks are extended one class at a time, so feasibility and totals follow
    // from the mask without its lowest class.
    let count = 1usize << classes;
    let mut feasible = vec![false; count];
    let mut total = vec![0usize; count];
    let mut covered = vec![0u32; count];
    feasible[0] = true;
    let mut best: Option<(usize, usize)> = None;
    for mask in 0..count {
        if mask > 0 {
            let low = mask.trailing_zeros() as usize;
            let rest = mask & (mask - 1);
            feasible[mask] = feasible[rest] && alone[low] && (mask as u32) & !compatible[low] == 0;
            if !feasible[mask] {
                continue;
            }
            total[mask] = total[rest] + size[low];
            covered[mask] = covered[rest] | covers[low];
        }
        if feasible[mask] && covered[mask] & need_mask == need_mask {
            let value = k + total[mask];
            if value > 0 && best.is_none_or(|(v, _)| value > v) {
                best = Some((value, mask));
            }
        }
    }
    let stats = SolveStats { table_entries: count as u64, ..SolveStats::default() };
    let Some((_, mask)) = best else {
        return Ok((None, stats));
    };
    let mut inner = view.xs.clone();
    for c in (0..classes).filter(|&c| mask >> c & 1 == 1) {
        inner.extend(view.part.classes[c].members.iter());
    }
    Ok((Some(view.sub.to_original(&VertexSet::from(inner))), stats))
}
