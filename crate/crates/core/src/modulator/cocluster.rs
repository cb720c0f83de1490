use std::time::Instant;

use super::vertex_cover_routine;
use crate::error::{ClubError, Result};
use crate::exact::{dual_branching_with, DualOptions, SolveStats};
use crate::graph::{complement, delete_vertices, verify_s_club, Graph, VertexSet};
use crate::params::find_induced_p3;

/// Which argument settled a co-cluster decision.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoclusterRoute {
    /// `ell <= 0`: the empty set suffices.
    Trivial,
    /// `G - x` is edgeless, so `x` is a vertex cover.
    VertexCover,
    /// `G - x` is complete multipartite with at least one edge, hence a
    /// 2-club of size `n - |x| >= ell`.
    Outside,
    /// `ell > n - |x|`, so fewer than `|x|` vertices may be deleted; decided
    /// by vertex-pair branching.
    Branching,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoclusterDecision {
    /// Whether a 2-club with at least `ell` vertices exists.
    pub yes: bool,
    pub witness: Option<VertexSet>,
    pub route: CoclusterRoute,
    pub stats: SolveStats,
}

/// Decides whether `G` has a 2-club of at least `ell` vertices when the
/// complement of `G - x` is a cluster graph.
pub fn solve_cocluster_modulator(g: &Graph, x: &VertexSet, ell: i64) -> Result<CoclusterDecision> {
    x.validate(g.n()).map_err(|e| ClubError::InvalidModulator(e.to_string()))?;
    let rest = delete_vertices(g, x)?;
    let co = complement(&rest.graph);
    if let Some(p) = find_induced_p3(&co, &vec![true; co.n()]) {
        let p = p.map(|v| rest.original[v]);
        return Err(ClubError::InvalidModulator(format!(
            "the complement of G - x contains the induced path {p:?}"
        )));
    }
    let start = Instant::now();
    let decide = |witness: VertexSet, route: CoclusterRoute, mut stats: SolveStats| {
        stats.elapsed = start.elapsed();
        let yes = ell <= witness.len() as i64;
        if !verify_s_club(g, 2, &witness) {
            return Err(ClubError::Verification(format!("co-cluster witness {witness:?} is not a 2-club")));
        }
        Ok(CoclusterDecision { yes, witness: yes.then_some(witness), route, stats })
    };
    if ell <= 0 {
        return decide(VertexSet::new(), CoclusterRoute::Trivial, SolveStats::default());
    }
    let ell = ell as usize;
    if rest.graph.m() == 0 {
        let r = vertex_cover_routine(g, x)?;
        return decide(r.best, CoclusterRoute::VertexCover, r.stats);
    }
    if ell <= rest.graph.n() {
        return decide(VertexSet::from(rest.original.clone()), CoclusterRoute::Outside, SolveStats::default());
    }
    let opts = DualOptions { lower_bound: ell - 1, stop_at: Some(ell), ..DualOptions::new(2) };
    let r = dual_branching_with(g, &opts)?;
    decide(r.best, CoclusterRoute::Branching, r.stats)
}
