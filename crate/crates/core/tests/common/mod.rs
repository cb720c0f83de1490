//! Brute-force oracles and enumerators shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use twoclub_core::exact::dual_branching_twins;
use twoclub_core::graph::{verify_s_club, Graph, VertexSet};
use twoclub_core::reductions::{
    forward_witness, gen_bipartite_plus_one, gen_domination2, gen_mcc, ColoredGraph, Max2SatFormula, MccVariant,
    ReductionOptions, SourceWitness,
};

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

pub fn graph_from_mask(n: usize, mask: u32) -> Graph {
    let edges = pairs(n).into_iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| e);
    Graph::from_edges(n, edges).unwrap()
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// One labeled representative per isomorphism class of graphs on `n` vertices.
pub fn graphs_up_to_isomorphism(n: usize) -> Vec<Graph> {
    let ps = pairs(n);
    let mut index = vec![vec![0; n]; n];
    for (i, &(a, b)) in ps.iter().enumerate() {
        index[a][b] = i;
        index[b][a] = i;
    }
    let perms = permutations(n);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u32..1 << ps.len() {
        let canon = perms
            .iter()
            .map(|p| {
                ps.iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .fold(0u32, |m, (_, &(a, b))| m | 1 << index[p[a]][p[b]])
            })
            .min()
            .unwrap();
        if seen.insert(canon) {
            out.push(graph_from_mask(n, mask));
        }
    }
    out
}

/// Largest clique by subset enumeration.
pub fn clique_number(g: &Graph) -> usize {
    let n = g.n();
    (0u32..1 << n)
        .filter(|&s| {
            let v: Vec<usize> = (0..n).filter(|&i| s >> i & 1 == 1).collect();
            v.iter().enumerate().all(|(i, &a)| v[i + 1..].iter().all(|&b| g.has_edge(a, b)))
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Maximum number of satisfied clauses over all assignments.
pub fn max_sat(n_vars: usize, clauses: &[(i64, i64)]) -> usize {
    (0u32..1 << n_vars)
        .map(|bits| {
            let holds = |l: i64| (bits >> (l.unsigned_abs() - 1) & 1 == 1) == (l > 0);
            clauses.iter().filter(|&&(a, b)| holds(a) || holds(b)).count()
        })
        .max()
        .unwrap()
}

/// All maps from `n` vertices onto colors `1..=k` using every color.
pub fn surjective_colorings(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let total = k.pow(n as u32);
    for code in 0..total {
        let colors: Vec<usize> = (0..n).map(|i| code / k.pow(i as u32) % k + 1).collect();
        if (1..=k).all(|c| colors.contains(&c)) {
            out.push(colors);
        }
    }
    out
}

/// Some multicolored clique of size `k`, by subset enumeration.
pub fn multicolored_clique(cg: &ColoredGraph, k: usize) -> Option<VertexSet> {
    let n = cg.graph.n();
    (0u32..1 << n).filter(|s| s.count_ones() as usize == k).find_map(|s| {
        let v: Vec<usize> = (0..n).filter(|&i| s >> i & 1 == 1).collect();
        let ok = v.iter().enumerate().all(|(i, &a)| {
            v[i + 1..].iter().all(|&b| cg.graph.has_edge(a, b) && cg.colors[a] != cg.colors[b])
        });
        ok.then(|| VertexSet::from(v))
    })
}

/// Fails with a message unless `holds`.
fn ensure(holds: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if holds {
        Ok(())
    } else {
        Err(msg())
    }
}

/// domination2 decision versus the clique number, for every isomorphism
/// class on `2..=max_n` vertices without isolated vertices and every k.
/// Returns the number of (graph, k) pairs checked.
pub fn check_domination2_equivalence(max_n: usize) -> Result<usize, String> {
    let opts = ReductionOptions::default();
    let mut checked = 0;
    for n in 2..=max_n {
        for g in graphs_up_to_isomorphism(n) {
            if g.vertices().any(|v| g.degree(v) == 0) {
                continue;
            }
            let omega = clique_number(&g);
            // The graph does not depend on k, and C ∪ V_E is always a 2-club.
            let base = gen_domination2(&g, 0, &opts).map_err(|e| e.to_string())?;
            let best = dual_branching_twins(&base.graph, 2, base.ell.saturating_sub(1)).map_err(|e| e.to_string())?.size;
            for k in 0..=n {
                let inst = gen_domination2(&g, k, &opts).map_err(|e| e.to_string())?;
                ensure((best >= inst.ell) == (omega >= k), || format!("domination2: graph {g:?}, k {k}"))?;
                checked += 1;
            }
        }
    }
    Ok(checked)
}

/// bipartite_plus_one decision versus brute-force Max 2-SAT for every
/// formula over two variables with at most four clauses of two distinct
/// literals, and every k up to one more than the clause count.
pub fn check_bipartite_equivalence() -> Result<usize, String> {
    let literals = [1i64, -1, 2, -2];
    let all: Vec<(i64, i64)> = (0..4).flat_map(|i| (i + 1..4).map(move |j| (literals[i], literals[j]))).collect();
    let opts = ReductionOptions::default();
    let mut checked = 0;
    for mask in 0u32..1 << all.len() {
        if mask.count_ones() > 4 {
            continue;
        }
        let clauses: Vec<(i64, i64)> = (0..all.len()).filter(|i| mask >> i & 1 == 1).map(|i| all[i]).collect();
        let best_sat = max_sat(2, &clauses);
        let formula = |k| Max2SatFormula { n_vars: 2, clauses: clauses.clone(), k };
        let base = gen_bipartite_plus_one(&formula(0), &opts).map_err(|e| e.to_string())?;
        let best = dual_branching_twins(&base.graph, 2, base.ell - 1).map_err(|e| e.to_string())?.size;
        for k in 0..=clauses.len() + 1 {
            let inst = gen_bipartite_plus_one(&formula(k), &opts).map_err(|e| e.to_string())?;
            ensure((best >= inst.ell) == (best_sat >= k), || format!("bipartite_plus_one: clauses {clauses:?}, k {k}"))?;
            checked += 1;
        }
    }
    Ok(checked)
}

/// Forward witnesses of both MCC variants verify for every graph on at most
/// `max_n` vertices, every k and every coloring with a multicolored k-clique.
pub fn check_mcc_forward(max_n: usize) -> Result<usize, String> {
    let opts = ReductionOptions::default();
    let mut checked = 0;
    for n in 1..=max_n {
        for mask in 0u32..1 << pairs(n).len() {
            let g = graph_from_mask(n, mask);
            for k in 1..=n {
                for colors in surjective_colorings(n, k) {
                    let cg = ColoredGraph::new(g.clone(), colors).map_err(|e| e.to_string())?;
                    let Some(clique) = multicolored_clique(&cg, k) else { continue };
                    for variant in [MccVariant::HIndex, MccVariant::Degeneracy] {
                        let inst = gen_mcc(&cg, k, variant, &opts).map_err(|e| e.to_string())?;
                        let w = forward_witness(&inst, &SourceWitness::ColoredClique(clique.clone()))
                            .map_err(|e| format!("mcc forward: graph {g:?}, colors {:?}: {e}", cg.colors))?;
                        ensure(w.len() == inst.ell && verify_s_club(&inst.graph, 2, &w), || {
                            format!("mcc forward: graph {g:?}, colors {:?}", cg.colors)
                        })?;
                        checked += 1;
                    }
                }
            }
        }
    }
    Ok(checked)
}

/// Full MCC equivalence on three vertices with two colors, both variants.
pub fn check_mcc_equivalence() -> Result<usize, String> {
    let opts = ReductionOptions::default();
    let mut checked = 0;
    for mask in 0u32..1 << 3 {
        let g = graph_from_mask(3, mask);
        for colors in surjective_colorings(3, 2) {
            let cg = ColoredGraph::new(g.clone(), colors).map_err(|e| e.to_string())?;
            let expected = multicolored_clique(&cg, 2).is_some();
            for variant in [MccVariant::HIndex, MccVariant::Degeneracy] {
                let inst = gen_mcc(&cg, 2, variant, &opts).map_err(|e| e.to_string())?;
                let r = dual_branching_twins(&inst.graph, 2, inst.ell - 1).map_err(|e| e.to_string())?;
                ensure(verify_s_club(&inst.graph, 2, &r.best) && (r.size >= inst.ell) == expected, || {
                    format!("mcc equivalence: graph {g:?}, colors {:?}, {variant:?}", cg.colors)
                })?;
                checked += 1;
            }
        }
    }
    Ok(checked)
}
