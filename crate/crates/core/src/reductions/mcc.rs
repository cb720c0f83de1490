use super::{
    Construction, ColoredGraph, ReducedInstance, ReductionKind, ReductionOptions, Source, StructuralCheck,
};
use crate::error::Result;
use crate::graph::{diameter, VertexSet};
use crate::params::{degeneracy, elimination_width, h_index};

/// Which coloring gadget to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MccVariant {
    /// One vertex per color; the h-index stays at most `k + 7`.
    HIndex,
    /// One vertex per ordered pair of differently colored vertices; the
    /// degeneracy stays at most five.
    Degeneracy,
}

/// The anchor gadget as drawn has `V_alpha` at distance three from `u_beta`
/// and `u_gamma` (likewise for `V_beta`, `V_gamma`), so it is not a 2-club
/// and the forward witness fails. `Repaired` adds the triangles
/// `{V_alpha(i), V_beta(i), V_gamma(i)}`, which gives every vertex of these
/// sets a neighbor of each anchor in `U` while keeping `u_alpha` the only
/// common neighbor of `V_alpha` and `V_abg` (and so on).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum AnchorGadget {
    #[default]
    Repaired,
    Literal,
}

/// Multicolored Clique instance to a 2-Club instance of diameter at most
/// three with bounded h-index or degeneracy.
///
/// Families (source vertices `v`, positions `j` from 0): `alpha(v,j)`,
/// `beta(v,j)` (`n + 1` of them), `gamma(v,j)`, `omega_alpha(v)`,
/// `omega_gamma(v)`; `u_alpha`, `u_beta`, `u_gamma`; `e(i,j)` per edge with
/// `i < j`; anchor sets `V_alpha(i)`, `V_beta(i)`, `V_gamma(i)`, `V_abg(i)` of
/// `n^3` vertices each, `l_U`, `l`, `r1`, `r2`; coloring vertices `c(color)`
/// or `c(v,w)`.
pub fn gen_mcc(cg: &ColoredGraph, k: usize, variant: MccVariant, opts: &ReductionOptions) -> Result<ReducedInstance> {
    cg.validate(k)?;
    let g = &cg.graph;
    let n = g.n();
    let mut warnings = Vec::new();
    let pads = opts.pads_for(n, &mut warnings);
    if opts.anchor == AnchorGadget::Literal {
        warnings.push("literal anchor gadget: it is not a 2-club, so forward witnesses fail verification".into());
    }
    let bichromatic: Vec<(usize, usize)> = g
        .vertices()
        .flat_map(|v| g.vertices().map(move |w| (v, w)))
        .filter(|&(v, w)| v != w && cg.colors[v] != cg.colors[w])
        .collect();
    let coloring = match variant {
        MccVariant::HIndex => k,
        MccVariant::Degeneracy => bichromatic.len(),
    };
    let (nn, m, small, vc) = (n as u128, g.m() as u128, pads.small as u128, coloring as u128);
    let vertices = nn * (3 * nn + 3) + 4 * small + 7 + m + vc;
    let edges = nn * (3 * nn + 3) * 4 + 6 * m + 20 * small + 9 + vc * (3 + nn);
    opts.check_budget(vertices, edges)?;

    let mut c = Construction::new();
    let u_alpha = c.add("u_alpha", &[]);
    let u_beta = c.add("u_beta", &[]);
    let u_gamma = c.add("u_gamma", &[]);
    let l_u = c.add("l_U", &[]);
    let l = c.add("l", &[]);
    let r1 = c.add("r1", &[]);
    let r2 = c.add("r2", &[]);
    let anchors = [u_alpha, u_beta, u_gamma];
    c.b.add_clique(&[l_u, l, r1, r2]);
    for u in anchors {
        c.b.add_edge(l_u, u);
    }
    let mut sides = Vec::new();
    for (family, u) in [("V_alpha", u_alpha), ("V_beta", u_beta), ("V_gamma", u_gamma)] {
        let set = c.add_copies(family, &[], pads.small);
        for &v in &set {
            c.b.add_edge(v, u).add_edge(v, r1).add_edge(v, r2);
        }
        sides.push(set);
    }
    if opts.anchor == AnchorGadget::Repaired {
        for i in 0..pads.small {
            c.b.add_clique(&[sides[0][i], sides[1][i], sides[2][i]]);
        }
    }
    for v in c.add_copies("V_abg", &[], pads.small) {
        for w in [u_alpha, u_beta, u_gamma, l, l_u] {
            c.b.add_edge(v, w);
        }
    }

    // Vertex gadgets: a cycle on 3n + 3 vertices per source vertex.
    let mut alpha = Vec::with_capacity(n);
    let mut beta = Vec::with_capacity(n);
    let mut gamma = Vec::with_capacity(n);
    let mut omega = Vec::with_capacity(n);
    for v in g.vertices() {
        let mut cycle = Vec::with_capacity(3 * n + 3);
        let (mut a, mut b, mut gm) = (Vec::new(), Vec::new(), Vec::new());
        for j in 0..n {
            a.push(c.add("alpha", &[v, j]));
            b.push(c.add("beta", &[v, j]));
            gm.push(c.add("gamma", &[v, j]));
            cycle.extend([a[j], b[j], gm[j]]);
        }
        let oa = c.add("omega_alpha", &[v]);
        b.push(c.add("beta", &[v, n]));
        let og = c.add("omega_gamma", &[v]);
        cycle.extend([oa, b[n], og]);
        for i in 0..cycle.len() {
            c.b.add_edge(cycle[i], cycle[(i + 1) % cycle.len()]);
        }
        for (set, u) in [(&a, u_alpha), (&b, u_beta), (&gm, u_gamma)] {
            for &x in set {
                c.b.add_edge(x, u).add_edge(x, r1).add_edge(x, r2);
            }
        }
        c.b.add_edge(oa, u_alpha).add_edge(oa, r1);
        c.b.add_edge(og, u_gamma).add_edge(og, r2);
        alpha.push(a);
        beta.push(b);
        gamma.push(gm);
        omega.push((oa, og));
    }
    for (i, j) in g.edges() {
        let e = c.add("e", &[i, j]);
        for w in [alpha[i][j], beta[i][j], gamma[j][i], r1, r2, l] {
            c.b.add_edge(e, w);
        }
    }
    let color_vertices: Vec<usize> = match variant {
        MccVariant::HIndex => (1..=k)
            .map(|col| {
                let x = c.add("c", &[col]);
                for v in g.vertices() {
                    if cg.colors[v] == col {
                        c.b.add_edge(omega[v].0, x);
                    } else {
                        c.b.add_edge(omega[v].1, x);
                    }
                }
                x
            })
            .collect(),
        MccVariant::Degeneracy => bichromatic
            .iter()
            .map(|&(v, w)| {
                let x = c.add("c", &[v, w]);
                c.b.add_edge(omega[v].0, x).add_edge(omega[w].1, x);
                x
            })
            .collect(),
    };
    for &x in &color_vertices {
        c.b.add_edge(x, l_u).add_edge(x, r1).add_edge(x, r2);
    }

    let ell = k * (3 * n + 3) + 4 * pads.small + 7 + k * k.saturating_sub(1) / 2 + coloring;
    let kind = match variant {
        MccVariant::HIndex => ReductionKind::MccHindex,
        MccVariant::Degeneracy => ReductionKind::MccDegeneracy,
    };
    let source = Source::MulticoloredClique { instance: cg.clone(), k };
    c.finish(kind, ell, source, Some(pads), warnings, vertices as usize)
}

pub(super) fn forward(inst: &ReducedInstance, clique: &[usize]) -> VertexSet {
    let ins = |v: usize| clique.contains(&v);
    inst.select(|r| match r.family {
        "alpha" | "beta" | "gamma" | "omega_alpha" | "omega_gamma" => ins(r.args[0]),
        "e" => ins(r.args[0]) && ins(r.args[1]),
        _ => true,
    })
}

pub(super) fn checks(inst: &ReducedInstance, small: bool, out: &mut Vec<StructuralCheck>) {
    let g = &inst.graph;
    let Source::MulticoloredClique { instance, k } = &inst.source else { return };
    if small {
        let d = diameter(g);
        out.push(StructuralCheck::new("diameter is at most 3", Some(d.is_some_and(|d| d <= 3))));
        // Two same-colored source vertices leave their omega vertices without a common neighbor.
        let repeated = (1..=*k).any(|c| instance.colors.iter().filter(|&&x| x == c).count() > 1);
        if repeated {
            out.push(StructuralCheck::new("diameter is 3", Some(d == Some(3))));
        }
    } else {
        out.push(StructuralCheck::new("diameter is at most 3", None));
    }
    match inst.kind {
        ReductionKind::MccHindex => {
            out.push(StructuralCheck::new(format!("h-index is at most {}", k + 7), Some(h_index(g) <= k + 7)));
        }
        _ => {
            let d = degeneracy(g);
            out.push(StructuralCheck::new(
                "elimination order of width at most 5",
                Some(elimination_width(g, &d.elimination_order) <= 5),
            ));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::ClubError;
    use crate::graph::{verify_s_club, Graph};
    use crate::reductions::{forward_witness, SourceWitness};

    fn path3() -> ColoredGraph {
        ColoredGraph::new(Graph::path(3), vec![1, 2, 1]).unwrap()
    }

    #[test]
    fn counts_follow_the_closed_form() {
        let inst = gen_mcc(&path3(), 2, MccVariant::HIndex, &ReductionOptions::default()).unwrap();
        assert_eq!(inst.graph.n(), 3 * 12 + 4 * 27 + 7 + 2 + 2);
        assert_eq!(inst.ell, 2 * 12 + 115 + 1 + 2);
        let ii = gen_mcc(&path3(), 2, MccVariant::Degeneracy, &ReductionOptions::default()).unwrap();
        // Ordered bichromatic pairs: (0,1), (1,0), (1,2), (2,1).
        assert_eq!(ii.family("c").len(), 4);
        assert_eq!(ii.graph.n(), 3 * 12 + 115 + 2 + 4);
    }

    #[test]
    fn vertex_gadget_is_an_induced_cycle() {
        let inst = gen_mcc(&path3(), 2, MccVariant::HIndex, &ReductionOptions::default()).unwrap();
        let gadget = inst.select(|r| r.args.first() == Some(&1) && r.family.starts_with(['a', 'b', 'g', 'o']));
        assert_eq!(gadget.len(), 12);
        for v in gadget.iter() {
            let inside = inst.graph.neighbors(v).iter().filter(|&&w| gadget.contains(w)).count();
            assert_eq!(inside, 2, "{}", inst.labels[v]);
        }
    }

    #[test]
    fn forward_witness_and_structure() {
        for variant in [MccVariant::HIndex, MccVariant::Degeneracy] {
            let inst = gen_mcc(&path3(), 2, variant, &ReductionOptions::default()).unwrap();
            let w = forward_witness(&inst, &SourceWitness::ColoredClique(VertexSet::from(vec![1, 2]))).unwrap();
            assert!(verify_s_club(&inst.graph, 2, &w));
            assert!(inst.check_structure(10_000).iter().all(|c| c.holds == Some(true)), "{variant:?}");
            assert!(matches!(
                forward_witness(&inst, &SourceWitness::ColoredClique(VertexSet::from(vec![0, 2]))),
                Err(ClubError::InvalidWitness(_))
            ));
        }
    }

    #[test]
    fn literal_anchor_gadget_is_not_a_club() {
        let opts = ReductionOptions { anchor: AnchorGadget::Literal, ..Default::default() };
        let inst = gen_mcc(&path3(), 2, MccVariant::HIndex, &opts).unwrap();
        let anchor = inst.select(|r| anchor_family(r.family));
        assert_eq!(anchor.len(), 4 * 27 + 7);
        assert!(!verify_s_club(&inst.graph, 2, &anchor));
        assert!(matches!(
            forward_witness(&inst, &SourceWitness::ColoredClique(VertexSet::from(vec![0, 1]))),
            Err(ClubError::Verification(_))
        ));
        let repaired = gen_mcc(&path3(), 2, MccVariant::HIndex, &ReductionOptions::default()).unwrap();
        assert!(verify_s_club(&repaired.graph, 2, &repaired.select(|r| anchor_family(r.family))));
    }

    fn anchor_family(f: &str) -> bool {
        matches!(f, "u_alpha" | "u_beta" | "u_gamma" | "l_U" | "l" | "r1" | "r2") || f.starts_with("V_")
    }
}
