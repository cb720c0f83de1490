//! Exact and heuristic maximum s-club solvers that need no structural
//! parameter: brute force, vertex-pair branching, per-ball decomposition,
//! the ball heuristic and the independence-number-two algorithm.

mod branching;
mod independence;
mod oracle;
mod turing;

use std::time::Duration;

use crate::error::{ClubError, Result};
use crate::graph::{ball, verify_s_club, Graph, VertexSet};

pub use branching::{dual_branching, dual_branching_twins, dual_branching_with, DualOptions};
pub use independence::{complement_triangle, independence2_solve};
pub use oracle::{oracle_max_2club, ORACLE_MAX_VERTICES};
pub use turing::{turing_kernel_solve, turing_kernel_solve_with};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SolveStats {
    /// Search-tree nodes visited by branching solvers.
    pub branch_nodes: u64,
    /// Dynamic-programming entries filled by table-based solvers.
    pub table_entries: u64,
    pub elapsed: Duration,
}

impl SolveStats {
    pub fn absorb(&mut self, other: &SolveStats) {
        self.branch_nodes += other.branch_nodes;
        self.table_entries += other.table_entries;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub best: VertexSet,
    pub size: usize,
    pub stats: SolveStats,
}

impl SolveResult {
    pub fn new(best: VertexSet, stats: SolveStats) -> SolveResult {
        SolveResult { size: best.len(), best, stats }
    }

    /// Re-checks the witness, turning a failure into [`ClubError::Verification`].
    pub(crate) fn verified(self, g: &Graph, s: usize, solver: &str) -> Result<SolveResult> {
        if verify_s_club(g, s, &self.best) {
            Ok(self)
        } else {
            Err(ClubError::Verification(format!(
                "{solver} returned {:?}, which is not a {s}-club",
                self.best
            )))
        }
    }
}

pub(crate) fn check_s(s: usize, min: usize) -> Result<()> {
    if s < min {
        return Err(ClubError::Precondition(format!("s must be at least {min}, got {s}")));
    }
    Ok(())
}

/// Largest ball of radius `floor(s / 2)`; ties go to the smallest center.
pub fn heuristic_ball(g: &Graph, s: usize) -> Result<SolveResult> {
    check_s(s, 1)?;
    let start = std::time::Instant::now();
    let mut best = VertexSet::new();
    for v in g.vertices() {
        let b = ball(g, v, s / 2)?;
        if b.len() > best.len() {
            best = b;
        }
    }
    let stats = SolveStats { elapsed: start.elapsed(), ..SolveStats::default() };
    SolveResult::new(best, stats).verified(g, s, "heuristic_ball")
}
