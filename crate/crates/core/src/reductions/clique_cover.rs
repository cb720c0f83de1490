use super::{
    binom2, diameter_check, Construction, ReducedInstance, ReductionKind, ReductionOptions, Role, Source,
    StructuralCheck,
};
use crate::error::{ClubError, Result};
use crate::graph::{Graph, VertexSet};

/// Clique instance `(g, k)` to a 2-Club instance whose vertices are covered
/// by three cliques.
///
/// Families: `v1(u)`, `Big1(i)` form the clique `V1`; `v2(u)`, `Big2(i)` the
/// clique `V2`; `e(u,v)` for both orientations of every edge and `E(v,i)`
/// form the clique `V_E`. `Big1 ∪ Big2` is a clique as well.
pub fn gen_clique_cover3(g: &Graph, k: usize, opts: &ReductionOptions) -> Result<ReducedInstance> {
    let n = g.n();
    if n < 2 || k > n {
        return Err(ClubError::Precondition(format!("need n >= 2 and k <= n, got n = {n}, k = {k}")));
    }
    let mut warnings = Vec::new();
    let pads = opts.pads_for(n, &mut warnings);
    let (nn, m, big, small) = (n as u128, g.m() as u128, pads.big as u128, pads.small as u128);
    let vertices = 2 * big + 2 * nn + 2 * m + nn * small;
    let edges = 2 * binom2(nn + big) + binom2(2 * m + nn * small) + binom2(2 * big) + 4 * m + 2 * nn * small;
    opts.check_budget(vertices, edges)?;

    let mut c = Construction::new();
    let v1: Vec<usize> = g.vertices().map(|u| c.add("v1", &[u])).collect();
    let big1 = c.add_copies("Big1", &[], pads.big);
    let v2: Vec<usize> = g.vertices().map(|u| c.add("v2", &[u])).collect();
    let big2 = c.add_copies("Big2", &[], pads.big);
    let mut ve = Vec::new();
    for (u, v) in g.edges() {
        for (a, b) in [(u, v), (v, u)] {
            // e(a,b) joins a's copy in V1 to b's copy in V2.
            let e = c.add("e", &[a, b]);
            c.b.add_edge(v1[a], e).add_edge(e, v2[b]);
            ve.push(e);
        }
    }
    for u in g.vertices() {
        let fan = c.add_copies("E", &[u], pads.small);
        for &e in &fan {
            c.b.add_edge(v1[u], e).add_edge(v2[u], e);
        }
        ve.extend(fan);
    }
    let side1: Vec<usize> = v1.iter().chain(&big1).copied().collect();
    let side2: Vec<usize> = v2.iter().chain(&big2).copied().collect();
    let bigs: Vec<usize> = big1.iter().chain(&big2).copied().collect();
    c.b.add_clique(&side1).add_clique(&side2).add_clique(&ve).add_clique(&bigs);

    let ell = 2 * pads.big + k * pads.small + 2 * k + k * k.saturating_sub(1);
    let source = Source::Clique { graph: g.clone(), k };
    c.finish(ReductionKind::CliqueCover3, ell, source, Some(pads), warnings, vertices as usize)
}

pub(super) fn forward(inst: &ReducedInstance, clique: &[usize]) -> VertexSet {
    let ins = |u: usize| clique.contains(&u);
    inst.select(|r: &Role| match r.family {
        "v1" | "v2" | "E" => ins(r.args[0]),
        "e" => ins(r.args[0]) && ins(r.args[1]),
        "Big1" | "Big2" => true,
        _ => false,
    })
}

pub(super) fn checks(inst: &ReducedInstance, small: bool, out: &mut Vec<StructuralCheck>) {
    let g = &inst.graph;
    let parts = [
        inst.select(|r| r.family == "v1" || r.family == "Big1"),
        inst.select(|r| r.family == "v2" || r.family == "Big2"),
        inst.select(|r| r.family == "e" || r.family == "E"),
    ];
    let is_clique = |s: &VertexSet| {
        let v = s.as_slice();
        v.iter().enumerate().all(|(i, &a)| v[i + 1..].iter().all(|&b| g.has_edge(a, b)))
    };
    let covered: usize = parts.iter().map(|p| p.len()).sum();
    out.push(StructuralCheck::new(
        "V1, V2 and V_E are cliques partitioning the vertices",
        Some(covered == g.n() && parts.iter().all(is_clique)),
    ));
    if let Source::Clique { graph, .. } = &inst.source {
        // Copies of two non-adjacent source vertices are at distance three;
        // a complete source leaves diameter two.
        let complete = graph.m() == graph.n() * (graph.n() - 1) / 2;
        out.push(diameter_check(g, if complete { 2 } else { 3 }, small));
    }
}
