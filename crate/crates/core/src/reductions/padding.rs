use num_rational::Ratio;

use super::{Construction, ReducedInstance, ReductionKind, ReductionOptions, Source, StructuralCheck};
use crate::error::{ClubError, Result};
use crate::graph::Graph;

/// `max(0, ⌈2m / (alpha - 2) - n⌉)`, the number of path vertices appended.
pub fn padding_length(n: usize, m: usize, alpha: Ratio<i64>) -> usize {
    let two = Ratio::from_integer(2);
    let len = (Ratio::from_integer(2 * m as i64) / (alpha - two) - Ratio::from_integer(n as i64)).ceil();
    (*len.numer()).max(0) as usize
}

/// Appends a path attached to vertex 0 so that the average degree drops to
/// at most `alpha`, without changing whether a 2-club of `ell` vertices
/// exists. Requires `alpha > 2` and `ell > max degree + 2`.
///
/// Families: `orig(v)` keeps the ids of `g`, `pad(i)` is the path in order.
pub fn pad_average_degree(g: &Graph, ell: usize, alpha: Ratio<i64>, opts: &ReductionOptions) -> Result<ReducedInstance> {
    if alpha <= Ratio::from_integer(2) {
        return Err(ClubError::Precondition(format!("alpha = {alpha} must exceed 2")));
    }
    let max_degree = g.vertices().map(|v| g.degree(v)).max().unwrap_or(0);
    if ell <= max_degree + 2 {
        return Err(ClubError::Precondition(format!(
            "ell = {ell} must exceed max degree + 2 = {}",
            max_degree + 2
        )));
    }
    let len = if g.n() == 0 { 0 } else { padding_length(g.n(), g.m(), alpha) };
    let vertices = g.n() + len;
    opts.check_budget(vertices as u128, (g.m() + len) as u128)?;

    let mut c = Construction::new();
    for v in g.vertices() {
        c.add("orig", &[v]);
    }
    for (u, v) in g.edges() {
        c.b.add_edge(u, v);
    }
    let path = c.add_copies("pad", &[], len);
    if let Some(&p) = path.first() {
        c.b.add_edge(p, 0);
    }
    for w in path.windows(2) {
        c.b.add_edge(w[0], w[1]);
    }
    let source = Source::Padded { graph: g.clone(), ell, alpha };
    c.finish(ReductionKind::AvgDegreePad, ell, source, None, Vec::new(), vertices)
}

pub(super) fn checks(inst: &ReducedInstance, out: &mut Vec<StructuralCheck>) {
    let Source::Padded { alpha, .. } = &inst.source else { return };
    let g = &inst.graph;
    // 2m / n <= alpha, compared without division.
    let holds = Ratio::from_integer(2 * g.m() as i64) <= *alpha * Ratio::from_integer(g.n() as i64);
    out.push(StructuralCheck::new(format!("average degree is at most {alpha}"), Some(holds)));
}
