use super::{Construction, Max2SatFormula, ReducedInstance, ReductionKind, ReductionOptions, Source, StructuralCheck};
use crate::error::{ClubError, Result};
use crate::graph::{delete_vertices, is_bipartite, VertexSet};

/// Maximum 2-SAT instance to a 2-Club instance that becomes bipartite after
/// deleting the single vertex `v*`.
///
/// Families, with variables numbered from 0: `c(i)` per clause, `F(x,i)` for
/// the `n^5` copies per variable, `x_t(x)` and `x_f(x)` for the two
/// polarities, `x_t2(x,i)` and `x_f2(x,i)` for the `n^3` copies of each
/// polarity, and `v*`.
pub fn gen_bipartite_plus_one(f: &Max2SatFormula, opts: &ReductionOptions) -> Result<ReducedInstance> {
    f.validate()?;
    let n = f.n_vars;
    if n < 2 {
        return Err(ClubError::Precondition(format!("need at least 2 variables, got {n}")));
    }
    let mut warnings = Vec::new();
    let pads = opts.pads_for(n, &mut warnings);
    let (nn, cl, big, small) = (n as u128, f.clauses.len() as u128, pads.big as u128, pads.small as u128);
    let vertices = cl + nn * big + 2 * nn + 2 * nn * small + 1;
    let edges = (cl + nn * big + 2 * nn) + 2 * cl + 2 * nn * big + 2 * nn * small * (2 * nn - 1);
    opts.check_budget(vertices, edges)?;

    let mut c = Construction::new();
    let clauses: Vec<usize> = (0..f.clauses.len()).map(|i| c.add("c", &[i])).collect();
    let fill: Vec<Vec<usize>> = (0..n).map(|x| c.add_copies("F", &[x], pads.big)).collect();
    let mut lit1 = Vec::with_capacity(2 * n);
    for x in 0..n {
        lit1.push(c.add("x_t", &[x]));
        lit1.push(c.add("x_f", &[x]));
    }
    // Index of the `V_X^1` vertex of a signed literal.
    let lit = |l: i64| 2 * (l.unsigned_abs() as usize - 1) + usize::from(l < 0);
    for x in 0..n {
        for (family, skip) in [("x_t2", lit1[2 * x + 1]), ("x_f2", lit1[2 * x])] {
            for copy in c.add_copies(family, &[x], pads.small) {
                for &w in lit1.iter().filter(|&&w| w != skip) {
                    c.b.add_edge(copy, w);
                }
            }
        }
    }
    let star = c.add("v*", &[]);
    for &v in clauses.iter().chain(fill.iter().flatten()).chain(&lit1) {
        c.b.add_edge(star, v);
    }
    for (i, &(a, b)) in f.clauses.iter().enumerate() {
        c.b.add_edge(clauses[i], lit1[lit(a)]).add_edge(clauses[i], lit1[lit(b)]);
    }
    for x in 0..n {
        for &v in &fill[x] {
            c.b.add_edge(v, lit1[2 * x]).add_edge(v, lit1[2 * x + 1]);
        }
    }
    let ell = n * pads.big + n * pads.small + n + f.k + 1;
    c.finish(ReductionKind::BipartitePlusOne, ell, Source::Max2Sat(f.clone()), Some(pads), warnings, vertices as usize)
}

pub(super) fn forward(inst: &ReducedInstance, f: &Max2SatFormula, assignment: &[bool]) -> Result<VertexSet> {
    if assignment.len() != f.n_vars {
        return Err(ClubError::InvalidWitness(format!(
            "assignment has {} values for {} variables",
            assignment.len(),
            f.n_vars
        )));
    }
    let sat = f.satisfied(assignment);
    if sat.len() < f.k {
        return Err(ClubError::InvalidWitness(format!(
            "assignment satisfies {} clauses, fewer than k = {}",
            sat.len(),
            f.k
        )));
    }
    let chosen = &sat[..f.k];
    Ok(inst.select(|r| match r.family {
        "F" | "v*" => true,
        "c" => chosen.contains(&r.args[0]),
        "x_t" | "x_t2" => assignment[r.args[0]],
        "x_f" | "x_f2" => !assignment[r.args[0]],
        _ => false,
    }))
}

pub(super) fn checks(inst: &ReducedInstance, out: &mut Vec<StructuralCheck>) {
    let holds = delete_vertices(&inst.graph, &inst.family("v*")).map(|r| is_bipartite(&r.graph)).ok();
    out.push(StructuralCheck::new("bipartite after deleting v*", holds));
}
