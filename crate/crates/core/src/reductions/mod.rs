//! Instance generators for the hardness reductions to 2-Club, with role
//! labels on every generated vertex, forward witness mapping and structural
//! self-checks.
//!
//! Pad families (the `n^5` and `n^3` blocks) have their literal sizes unless
//! [`ReductionOptions::pads`] overrides them. Overridden instances carry a
//! warning because the counting arguments behind the equivalences need the
//! literal sizes.

mod bipartite;
mod clique_cover;
mod domination;
mod mcc;
mod padding;

use std::fmt;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::error::{ClubError, Result};
use crate::graph::{diameter, verify_s_club, Graph, GraphBuilder, VertexSet};

pub use bipartite::gen_bipartite_plus_one;
pub use clique_cover::gen_clique_cover3;
pub use domination::gen_domination2;
pub use mcc::{gen_mcc, AnchorGadget, MccVariant};
pub use padding::{pad_average_degree, padding_length};

/// Default cap on generated vertices.
pub const DEFAULT_VERTEX_BUDGET: usize = 200_000;
/// Default cap on generated edges; the pad cliques grow much faster than the vertex count.
pub const DEFAULT_EDGE_BUDGET: usize = 5_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReductionKind {
    CliqueCover3,
    Domination2,
    BipartitePlusOne,
    MccHindex,
    MccDegeneracy,
    AvgDegreePad,
}

/// Sizes of the pad families: `big` replaces `n^5`, `small` replaces `n^3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PadSizes {
    pub big: usize,
    pub small: usize,
}

impl PadSizes {
    /// `n^5` and `n^3`, saturating on overflow (the budget check rejects those anyway).
    pub fn literal(n: usize) -> PadSizes {
        let pow = |e: u32| n.checked_pow(e).unwrap_or(usize::MAX);
        PadSizes { big: pow(5), small: pow(3) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionOptions {
    pub vertex_budget: usize,
    pub edge_budget: usize,
    /// Replaces the literal pad sizes. The result then carries a warning.
    pub pads: Option<PadSizes>,
    pub anchor: AnchorGadget,
}

impl Default for ReductionOptions {
    fn default() -> Self {
        ReductionOptions {
            vertex_budget: DEFAULT_VERTEX_BUDGET,
            edge_budget: DEFAULT_EDGE_BUDGET,
            pads: None,
            anchor: AnchorGadget::default(),
        }
    }
}

impl ReductionOptions {
    fn pads_for(&self, n: usize, warnings: &mut Vec<String>) -> PadSizes {
        let literal = PadSizes::literal(n);
        match self.pads {
            Some(p) if p != literal => {
                warnings.push(format!(
                    "pad sizes overridden to big={}, small={} (literal: n^5={}, n^3={}); equivalence not guaranteed",
                    p.big, p.small, literal.big, literal.small
                ));
                p
            }
            _ => literal,
        }
    }

    /// Rejects constructions whose closed-form counts exceed the budgets.
    fn check_budget(&self, vertices: u128, edges: u128) -> Result<()> {
        if vertices > self.vertex_budget as u128 {
            return Err(ClubError::Budget(format!(
                "construction needs {vertices} vertices, budget is {}",
                self.vertex_budget
            )));
        }
        if edges > self.edge_budget as u128 {
            return Err(ClubError::Budget(format!(
                "construction needs up to {edges} edges, budget is {}",
                self.edge_budget
            )));
        }
        Ok(())
    }
}

/// Gadget family of a generated vertex plus indices: source vertex ids,
/// clause or variable numbers, pad copy numbers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Role {
    pub family: &'static str,
    pub args: Vec<usize>,
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.family)?;
        if !self.args.is_empty() {
            let args: Vec<String> = self.args.iter().map(|a| a.to_string()).collect();
            write!(f, "({})", args.join(","))?;
        }
        Ok(())
    }
}

impl Serialize for Role {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Maximum 2-SAT instance. Literals are signed 1-based variable numbers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Max2SatFormula {
    pub n_vars: usize,
    pub clauses: Vec<(i64, i64)>,
    /// Target number of satisfied clauses.
    pub k: usize,
}

impl Max2SatFormula {
    pub fn validate(&self) -> Result<()> {
        let mut seen = std::collections::HashSet::new();
        for &(a, b) in &self.clauses {
            for lit in [a, b] {
                if lit == 0 || lit.unsigned_abs() as usize > self.n_vars {
                    return Err(ClubError::Precondition(format!(
                        "literal {lit} is not a signed variable in 1..={}",
                        self.n_vars
                    )));
                }
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(ClubError::Precondition(format!("clause ({a} {b}) occurs twice")));
            }
        }
        Ok(())
    }

    pub fn literal_holds(lit: i64, assignment: &[bool]) -> bool {
        assignment[lit.unsigned_abs() as usize - 1] == (lit > 0)
    }

    pub fn satisfied(&self, assignment: &[bool]) -> Vec<usize> {
        (0..self.clauses.len())
            .filter(|&i| {
                let (a, b) = self.clauses[i];
                Self::literal_holds(a, assignment) || Self::literal_holds(b, assignment)
            })
            .collect()
    }

    /// Largest number of simultaneously satisfiable clauses, by enumeration.
    pub fn max_satisfiable(&self) -> Result<usize> {
        if self.n_vars > 24 {
            return Err(ClubError::Budget(format!("{} variables are too many to enumerate", self.n_vars)));
        }
        Ok((0u64..1 << self.n_vars)
            .map(|bits| {
                let a: Vec<bool> = (0..self.n_vars).map(|i| bits >> i & 1 == 1).collect();
                self.satisfied(&a).len()
            })
            .max()
            .unwrap_or(0))
    }
}

/// Vertex-colored graph; colors are `1..=k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredGraph {
    pub graph: Graph,
    pub colors: Vec<usize>,
}

impl ColoredGraph {
    pub fn new(graph: Graph, colors: Vec<usize>) -> Result<ColoredGraph> {
        if colors.len() != graph.n() {
            return Err(ClubError::Precondition(format!(
                "{} colors for {} vertices",
                colors.len(),
                graph.n()
            )));
        }
        Ok(ColoredGraph { graph, colors })
    }

    /// Every color lies in `1..=k` and every color class is nonempty.
    pub fn validate(&self, k: usize) -> Result<()> {
        if let Some(v) = self.graph.vertices().find(|&v| !(1..=k).contains(&self.colors[v])) {
            return Err(ClubError::Precondition(format!(
                "vertex {v} has color {}, expected 1..={k}",
                self.colors[v]
            )));
        }
        if let Some(c) = (1..=k).find(|c| !self.colors.contains(c)) {
            return Err(ClubError::Precondition(format!("color class {c} is empty")));
        }
        Ok(())
    }
}

/// The instance a reduction started from.
#[derive(Clone, Debug, PartialEq)]
pub enum Source {
    Clique { graph: Graph, k: usize },
    Max2Sat(Max2SatFormula),
    MulticoloredClique { instance: ColoredGraph, k: usize },
    Padded { graph: Graph, ell: usize, alpha: Ratio<i64> },
}

impl Source {
    pub fn describe(&self) -> String {
        match self {
            Source::Clique { graph, k } => format!("Clique: n={}, m={}, k={k}", graph.n(), graph.m()),
            Source::Max2Sat(f) => {
                format!("Maximum 2-SAT: {} variables, {} clauses, k={}", f.n_vars, f.clauses.len(), f.k)
            }
            Source::MulticoloredClique { instance, k } => {
                format!("Multicolored Clique: n={}, m={}, k={k}", instance.graph.n(), instance.graph.m())
            }
            Source::Padded { graph, ell, alpha } => {
                format!("2-Club: n={}, m={}, ell={ell}, alpha={alpha}", graph.n(), graph.m())
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReducedInstance {
    pub graph: Graph,
    /// Target 2-club size of the produced instance.
    pub ell: usize,
    pub kind: ReductionKind,
    /// Role of every vertex, indexed by vertex id.
    pub labels: Vec<Role>,
    pub source: Source,
    pub pads: Option<PadSizes>,
    pub warnings: Vec<String>,
    /// Vertex count predicted by the closed-form bookkeeping.
    pub expected_vertices: usize,
}

impl ReducedInstance {
    /// Vertices whose role belongs to `family`.
    pub fn family(&self, family: &str) -> VertexSet {
        self.select(|r| r.family == family)
    }

    pub fn select(&self, mut keep: impl FnMut(&Role) -> bool) -> VertexSet {
        (0..self.labels.len()).filter(|&v| keep(&self.labels[v])).collect()
    }

    /// Runs the structural self-checks of this kind. Checks that need
    /// all-pairs distances are skipped (reported as `None`) above
    /// `distance_limit` vertices.
    pub fn check_structure(&self, distance_limit: usize) -> Vec<StructuralCheck> {
        let mut out = vec![StructuralCheck::new(
            "vertex count matches the closed form",
            Some(self.graph.n() == self.expected_vertices),
        )];
        let small = self.graph.n() <= distance_limit;
        match self.kind {
            ReductionKind::CliqueCover3 => clique_cover::checks(self, small, &mut out),
            ReductionKind::Domination2 => domination::checks(self, small, &mut out),
            ReductionKind::BipartitePlusOne => bipartite::checks(self, &mut out),
            ReductionKind::MccHindex | ReductionKind::MccDegeneracy => mcc::checks(self, small, &mut out),
            ReductionKind::AvgDegreePad => padding::checks(self, &mut out),
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructuralCheck {
    pub name: String,
    /// `None` when the check was skipped for size.
    pub holds: Option<bool>,
}

impl StructuralCheck {
    fn new(name: impl Into<String>, holds: Option<bool>) -> StructuralCheck {
        StructuralCheck { name: name.into(), holds }
    }
}

/// Diameter check shared by the kinds that promise diameter three.
fn diameter_check(g: &Graph, expected: usize, small: bool) -> StructuralCheck {
    StructuralCheck::new(
        format!("diameter is {expected}"),
        small.then(|| diameter(g) == Some(expected)),
    )
}

/// Witness for the source instance of a reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SourceWitness {
    /// A clique of at least `k` vertices.
    Clique(VertexSet),
    /// Truth value per variable, satisfying at least `k` clauses.
    Assignment(Vec<bool>),
    /// A clique with one vertex of each of the `k` colors.
    ColoredClique(VertexSet),
    /// A 2-club of at least `ell` vertices of the unpadded graph.
    Club(VertexSet),
}

/// Maps a source witness to the 2-club built in the forward direction of
/// the reduction. The result is re-verified and has exactly `ell` vertices
/// (for padding: the given club itself).
pub fn forward_witness(inst: &ReducedInstance, witness: &SourceWitness) -> Result<VertexSet> {
    let set = match (&inst.source, witness) {
        (Source::Clique { graph, k }, SourceWitness::Clique(c)) => {
            let clique = first_k_of_clique(graph, c, *k)?;
            match inst.kind {
                ReductionKind::CliqueCover3 => clique_cover::forward(inst, &clique),
                _ => domination::forward(inst, &clique),
            }
        }
        (Source::Max2Sat(f), SourceWitness::Assignment(a)) => bipartite::forward(inst, f, a)?,
        (Source::MulticoloredClique { instance, k }, SourceWitness::ColoredClique(c)) => {
            let clique = first_k_of_clique(&instance.graph, c, *k)?;
            if clique.len() != *k || (0..*k).any(|i| (i + 1..*k).any(|j| instance.colors[clique[i]] == instance.colors[clique[j]])) {
                return Err(ClubError::InvalidWitness(format!("{c:?} is not a multicolored clique of size {k}")));
            }
            mcc::forward(inst, &clique)
        }
        (Source::Padded { graph, ell, .. }, SourceWitness::Club(c)) => {
            c.validate(graph.n()).map_err(|e| ClubError::InvalidWitness(e.to_string()))?;
            if c.len() < *ell || !verify_s_club(graph, 2, c) {
                return Err(ClubError::InvalidWitness(format!("{c:?} is not a 2-club of at least {ell} vertices")));
            }
            return Ok(c.clone());
        }
        _ => {
            return Err(ClubError::InvalidWitness(format!(
                "witness {witness:?} does not match a {:?} instance",
                inst.kind
            )))
        }
    };
    if set.len() != inst.ell || !verify_s_club(&inst.graph, 2, &set) {
        return Err(ClubError::Verification(format!(
            "forward witness of {} vertices (ell = {}) is not a 2-club of size ell",
            set.len(),
            inst.ell
        )));
    }
    Ok(set)
}

/// The `k` smallest vertices of a clique with at least `k` vertices.
fn first_k_of_clique(g: &Graph, c: &VertexSet, k: usize) -> Result<Vec<usize>> {
    c.validate(g.n()).map_err(|e| ClubError::InvalidWitness(e.to_string()))?;
    let v = c.as_slice();
    if v.len() < k || v.iter().enumerate().any(|(i, &a)| v[i + 1..].iter().any(|&b| !g.has_edge(a, b))) {
        return Err(ClubError::InvalidWitness(format!("{c:?} is not a clique of at least {k} vertices")));
    }
    Ok(v[..k].to_vec())
}

fn binom2(x: u128) -> u128 {
    x * x.saturating_sub(1) / 2
}

/// Graph builder that records a role for every vertex.
struct Construction {
    b: GraphBuilder,
    roles: Vec<Role>,
}

impl Construction {
    fn new() -> Construction {
        Construction { b: GraphBuilder::new(0), roles: Vec::new() }
    }

    fn add(&mut self, family: &'static str, args: &[usize]) -> usize {
        self.roles.push(Role { family, args: args.to_vec() });
        self.b.add_vertex()
    }

    /// `count` vertices of `family`, each with `args` followed by its copy number.
    fn add_copies(&mut self, family: &'static str, args: &[usize], count: usize) -> Vec<usize> {
        (0..count)
            .map(|i| {
                let mut a = args.to_vec();
                a.push(i);
                self.add(family, &a)
            })
            .collect()
    }

    fn finish(
        self,
        kind: ReductionKind,
        ell: usize,
        source: Source,
        pads: Option<PadSizes>,
        warnings: Vec<String>,
        expected_vertices: usize,
    ) -> Result<ReducedInstance> {
        Ok(ReducedInstance {
            graph: self.b.build()?,
            ell,
            kind,
            labels: self.roles,
            source,
            pads,
            warnings,
            expected_vertices,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn role_display() {
        assert_eq!(Role { family: "v*", args: vec![] }.to_string(), "v*");
        assert_eq!(Role { family: "e", args: vec![0, 2] }.to_string(), "e(0,2)");
    }

    #[test]
    fn formula_validation() {
        let ok = Max2SatFormula { n_vars: 2, clauses: vec![(1, 2), (-1, 2)], k: 2 };
        assert!(ok.validate().is_ok());
        assert_eq!(ok.max_satisfiable().unwrap(), 2);
        let dup = Max2SatFormula { n_vars: 2, clauses: vec![(1, 2), (2, 1)], k: 1 };
        assert!(dup.validate().is_err());
        let bad = Max2SatFormula { n_vars: 2, clauses: vec![(1, 3)], k: 1 };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn colored_graph_validation() {
        let cg = ColoredGraph::new(Graph::path(3), vec![1, 2, 1]).unwrap();
        assert!(cg.validate(2).is_ok());
        assert!(cg.validate(3).is_err());
        assert!(ColoredGraph::new(Graph::path(3), vec![1]).is_err());
    }

    #[test]
    fn overridden_pads_warn() {
        let opts = ReductionOptions { pads: Some(PadSizes { big: 2, small: 1 }), ..Default::default() };
        let mut w = Vec::new();
        assert_eq!(opts.pads_for(3, &mut w), PadSizes { big: 2, small: 1 });
        assert!(w[0].contains("equivalence not guaranteed"));
        let mut w = Vec::new();
        assert_eq!(ReductionOptions::default().pads_for(3, &mut w), PadSizes { big: 243, small: 27 });
        assert!(w.is_empty());
    }
}
