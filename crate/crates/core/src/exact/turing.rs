use std::time::Instant;

use rayon::prelude::*;

use super::{check_s, SolveResult, SolveStats};
use crate::error::Result;
use crate::graph::{ball, induce, Graph, VertexSet};
use crate::parallel::with_jobs;

/// Maximum 2-club as the best inner solution over all radius-2 balls.
pub fn turing_kernel_solve<F>(g: &Graph, inner: F) -> Result<SolveResult>
where
    F: Fn(&Graph) -> Result<SolveResult> + Sync,
{
    turing_kernel_solve_with(g, 2, 1, inner)
}

/// Every s-club containing `v` lies in the radius-`s` ball of `v`, so solving
/// each ball exactly and keeping the largest answer is exact. Balls no
/// larger than the best answer so far are skipped when running sequentially;
/// with `jobs > 1` all balls are solved concurrently. Ties go to the smallest
/// center either way.
pub fn turing_kernel_solve_with<F>(g: &Graph, s: usize, jobs: usize, inner: F) -> Result<SolveResult>
where
    F: Fn(&Graph) -> Result<SolveResult> + Sync,
{
    check_s(s, 1)?;
    let start = Instant::now();
    let solve_ball = |v: usize| -> Result<SolveResult> {
        let sub = induce(g, &ball(g, v, s)?)?;
        let r = inner(&sub.graph)?;
        Ok(SolveResult { best: sub.to_original(&r.best), ..r })
    };
    let mut best = VertexSet::new();
    let mut stats = SolveStats::default();
    if jobs <= 1 {
        for v in g.vertices() {
            if ball(g, v, s)?.len() <= best.len() {
                continue;
            }
            let r = solve_ball(v)?;
            stats.absorb(&r.stats);
            if r.size > best.len() {
                best = r.best;
            }
        }
    } else {
        let results: Vec<Result<SolveResult>> =
            with_jobs(jobs, || g.vertices().into_par_iter().map(solve_ball).collect());
        for r in results {
            let r = r?;
            stats.absorb(&r.stats);
            if r.size > best.len() {
                best = r.best;
            }
        }
    }
    stats.elapsed = start.elapsed();
    SolveResult::new(best, stats).verified(g, s, "turing_kernel_solve")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{dual_branching, oracle_max_2club};

    #[test]
    fn examples() {
        let g = Graph::from_edges(7, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (4, 5), (5, 6), (4, 6)]).unwrap();
        assert_eq!(turing_kernel_solve(&g, oracle_max_2club).unwrap().size, 4);
        assert_eq!(turing_kernel_solve(&Graph::star(6), |h| dual_branching(h, 2, 0)).unwrap().size, 7);
        let c = Graph::cycle(8);
        let seq = turing_kernel_solve_with(&c, 2, 1, |h| dual_branching(h, 2, 0)).unwrap();
        let par = turing_kernel_solve_with(&c, 2, 3, |h| dual_branching(h, 2, 0)).unwrap();
        assert_eq!(seq.best, par.best);
        assert_eq!(seq.size, 3);
    }
}
