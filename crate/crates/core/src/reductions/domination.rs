use super::{
    binom2, diameter_check, Construction, ReducedInstance, ReductionKind, ReductionOptions, Source, StructuralCheck,
};
use crate::error::{ClubError, Result};
use crate::graph::{Graph, VertexSet};
use crate::params::small_dominating_set;

/// Clique instance `(g, k)` to a 2-Club instance with a dominating set of
/// two vertices.
///
/// Families: `v(u)` (an independent copy of the vertices), `e(u,v)` per edge
/// adjacent to both endpoints, `C(i)` for `n + 2` vertices forming a clique
/// with the edge vertices, and `v*` adjacent to every `v(u)`.
pub fn gen_domination2(g: &Graph, k: usize, opts: &ReductionOptions) -> Result<ReducedInstance> {
    let n = g.n();
    if let Some(v) = g.vertices().find(|&v| g.degree(v) == 0) {
        return Err(ClubError::Precondition(format!("vertex {v} is isolated")));
    }
    if k > n {
        return Err(ClubError::Precondition(format!("k = {k} exceeds n = {n}")));
    }
    let (nn, m) = (n as u128, g.m() as u128);
    let vertices = nn + m + nn + 2 + 1;
    opts.check_budget(vertices, binom2(m + nn + 2) + 2 * m + nn)?;

    let mut c = Construction::new();
    let copies: Vec<usize> = g.vertices().map(|u| c.add("v", &[u])).collect();
    let mut clique = Vec::new();
    for (u, v) in g.edges() {
        let e = c.add("e", &[u, v]);
        c.b.add_edge(e, copies[u]).add_edge(e, copies[v]);
        clique.push(e);
    }
    clique.extend(c.add_copies("C", &[], n + 2));
    c.b.add_clique(&clique);
    let star = c.add("v*", &[]);
    for &u in &copies {
        c.b.add_edge(star, u);
    }
    let ell = (n + 2) + g.m() + k;
    let source = Source::Clique { graph: g.clone(), k };
    c.finish(ReductionKind::Domination2, ell, source, None, Vec::new(), vertices as usize)
}

pub(super) fn forward(inst: &ReducedInstance, clique: &[usize]) -> VertexSet {
    inst.select(|r| match r.family {
        "v" => clique.contains(&r.args[0]),
        "e" | "C" => true,
        _ => false,
    })
}

pub(super) fn checks(inst: &ReducedInstance, small: bool, out: &mut Vec<StructuralCheck>) {
    let g = &inst.graph;
    let star = inst.family("v*").as_slice()[0];
    let partner = inst.family("C").as_slice()[0];
    let pair_dominates = g.vertices().all(|v| v == star || v == partner || g.has_edge(v, star) || g.has_edge(v, partner));
    out.push(StructuralCheck::new("v* and a vertex of C dominate the graph", Some(pair_dominates)));
    out.push(StructuralCheck::new(
        "no single vertex dominates",
        small_dominating_set(g, 1).ok().map(|d| d.is_none()),
    ));
    out.push(diameter_check(g, 3, small));
}
