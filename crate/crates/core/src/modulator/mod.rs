//! Exact 2-club solvers parameterized by a vertex set `x` whose deletion
//! leaves a cluster graph, a co-cluster graph or an edgeless graph.
//!
//! All of them guess the part `X'` of `x` inside the solution and reason
//! about twin classes with respect to `X'`, so the running time grows
//! doubly exponentially in `|x|`; [`MAX_MODULATOR`] caps it.

mod cluster;
mod cocluster;
mod vertex_cover;

use rayon::prelude::*;

use crate::error::{ClubError, Result};
use crate::exact::SolveStats;
use crate::graph::{bfs_limited, induce, twin_classes, Graph, InducedGraph, TwinPartition, VertexSet};
use crate::parallel::with_jobs;

pub use cluster::{solve_cluster_modulator, solve_cluster_modulator_with};
pub use cocluster::{solve_cocluster_modulator, CoclusterDecision, CoclusterRoute};
pub use vertex_cover::{vertex_cover_routine, vertex_cover_routine_with};

/// Largest modulator the table-based solvers accept.
pub const MAX_MODULATOR: usize = 4;

pub(crate) fn check_modulator_size(x: &VertexSet) -> Result<()> {
    if x.len() > MAX_MODULATOR {
        return Err(ClubError::Budget(format!(
            "modulator of size {} exceeds the supported maximum of {MAX_MODULATOR}",
            x.len()
        )));
    }
    Ok(())
}

/// Members of `x` selected by the bits of `mask`.
pub(crate) fn subset_by_mask(x: &VertexSet, mask: usize) -> VertexSet {
    x.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, v)| v).collect()
}

/// Non-adjacent pairs of `xp`, as index pairs, without a common neighbor inside `xp`.
pub(crate) fn pairs_needing_outside_neighbor(g: &Graph, xp: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..xp.len() {
        for j in i + 1..xp.len() {
            let (a, b) = (xp[i], xp[j]);
            if !g.has_edge(a, b) && !xp.iter().any(|&c| g.has_edge(a, c) && g.has_edge(b, c)) {
                out.push((i, j));
            }
        }
    }
    out
}

/// The graph seen by one guess `X' ⊆ x`: `G - (x \ X')`, optionally without
/// the outside vertices at distance more than two from some member of `X'`,
/// relabeled, with twin classes of the outside vertices with respect to `X'`.
pub(crate) struct GuessView {
    pub sub: InducedGraph,
    /// Inner ids of `X'`; signature bit `i` refers to `xs[i]`.
    pub xs: Vec<usize>,
    pub part: TwinPartition,
    pub in_xs: Vec<bool>,
}

pub(crate) fn guess_view(g: &Graph, x: &VertexSet, xp: &VertexSet, prune: bool) -> Result<GuessView> {
    let n = g.n();
    let in_x = x.to_mask(n);
    let mut alive = vec![true; n];
    for v in x.difference(xp).iter() {
        alive[v] = false;
    }
    let mut keep = alive.clone();
    if prune {
        for a in xp.iter() {
            let dist = bfs_limited(g, a, Some(&alive), 2);
            for v in (0..n).filter(|&v| !in_x[v] && dist[v] > 2) {
                keep[v] = false;
            }
        }
    }
    let sub = induce(g, &(0..n).filter(|&v| keep[v]).collect())?;
    let xs: Vec<usize> = (0..sub.original.len()).filter(|&i| in_x[sub.original[i]]).collect();
    let part = twin_classes(&sub.graph, &VertexSet::from(xs.clone()))?;
    let in_xs = VertexSet::from(xs.clone()).to_mask(sub.graph.n());
    Ok(GuessView { sub, xs, part, in_xs })
}

/// Runs `guess` for every subset of `x` (by bitmask order) and keeps the
/// largest witness; ties go to the earliest subset.
pub(crate) fn best_over_guesses<F>(x: &VertexSet, jobs: usize, guess: F) -> Result<(VertexSet, SolveStats)>
where
    F: Fn(&VertexSet) -> Result<(Option<VertexSet>, SolveStats)> + Sync,
{
    let count = 1usize << x.len();
    let results: Vec<Result<(Option<VertexSet>, SolveStats)>> = if jobs <= 1 {
        (0..count).map(|mask| guess(&subset_by_mask(x, mask))).collect()
    } else {
        with_jobs(jobs, || (0..count).into_par_iter().map(|mask| guess(&subset_by_mask(x, mask))).collect())
    };
    let mut best = VertexSet::new();
    let mut stats = SolveStats::default();
    for r in results {
        let (witness, s) = r?;
        stats.absorb(&s);
        if let Some(w) = witness {
            if w.len() > best.len() {
                best = w;
            }
        }
    }
    Ok((best, stats))
}
