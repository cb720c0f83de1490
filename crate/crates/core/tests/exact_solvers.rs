use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use twoclub_core::exact::{
    complement_triangle, dual_branching, dual_branching_twins, dual_branching_with, heuristic_ball,
    independence2_solve, oracle_max_2club, turing_kernel_solve, turing_kernel_solve_with, DualOptions,
};
use twoclub_core::generators::{gnp, random_triangle_free};
use twoclub_core::graph::{complement, verify_s_club, Graph};
use twoclub_core::ClubError;

/// All-pairs distances by Floyd-Warshall on the subgraph induced by `mask`.
fn induced_diameter_at_most(g: &Graph, mask: u32, s: usize) -> bool {
    let n = g.n();
    let inf = usize::MAX / 2;
    let mut d = vec![vec![inf; n]; n];
    let inside = |v: usize| mask >> v & 1 == 1;
    for u in (0..n).filter(|&u| inside(u)) {
        d[u][u] = 0;
        for &w in g.neighbors(u) {
            if inside(w) {
                d[u][w] = 1;
            }
        }
    }
    for k in (0..n).filter(|&k| inside(k)) {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    (0..n).filter(|&u| inside(u)).all(|u| (0..n).filter(|&v| inside(v)).all(|v| d[u][v] <= s))
}

fn brute_force_max_s_club(g: &Graph, s: usize) -> usize {
    (0u32..1 << g.n())
        .filter(|&m| induced_diameter_at_most(g, m, s))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

#[test]
fn dual_and_turing_match_brute_force_for_several_s() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..60 {
        let n = rng.gen_range(1..=9);
        let g = gnp(n, rng.gen_range(0.15..0.7), &mut rng);
        for s in 2..=4 {
            let expected = brute_force_max_s_club(&g, s);
            let dual = dual_branching(&g, s, 0).unwrap();
            assert_eq!(dual.size, expected, "graph {g:?}, s {s}");
            assert!(verify_s_club(&g, s, &dual.best));
            let turing = turing_kernel_solve_with(&g, s, 1, |b| dual_branching(b, s, 0)).unwrap();
            assert_eq!(turing.size, expected);
            assert_eq!(dual_branching_twins(&g, s, 0).unwrap().size, expected);
        }
        assert_eq!(oracle_max_2club(&g).unwrap().size, brute_force_max_s_club(&g, 2));
    }
}

#[test]
fn lower_bound_and_stop_at() {
    let g = Graph::petersen();
    // The optimum (10) exceeds 9, so the answer stays exact.
    assert_eq!(dual_branching(&g, 2, 9).unwrap().size, 10);
    let c7 = Graph::cycle(7);
    // The optimum (3) does not exceed 5: some 2-club no larger than 5 comes back.
    let r = dual_branching(&c7, 2, 5).unwrap();
    assert!(r.size <= 5 && verify_s_club(&c7, 2, &r.best));
    let opts = DualOptions { stop_at: Some(2), ..DualOptions::new(2) };
    assert!(dual_branching_with(&c7, &opts).unwrap().size >= 2);
}

#[test]
fn node_limit_is_a_budget_error() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let g = gnp(30, 0.15, &mut rng);
    let opts = DualOptions { node_limit: Some(3), ..DualOptions::new(2) };
    assert!(matches!(dual_branching_with(&g, &opts), Err(ClubError::Budget(_))));
}

#[test]
fn turing_kernel_is_independent_of_worker_count() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..20 {
        let g = gnp(rng.gen_range(5..=14), 0.3, &mut rng);
        let a = turing_kernel_solve(&g, |b| dual_branching(b, 2, 0)).unwrap();
        let b = turing_kernel_solve_with(&g, 2, 4, |b| dual_branching(b, 2, 0)).unwrap();
        assert_eq!(a.size, b.size);
        assert_eq!(a.best, b.best);
    }
}

#[test]
fn independence_two_matches_branching() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..60 {
        let n = rng.gen_range(1..=18);
        let g = complement(&random_triangle_free(n, &mut rng));
        assert!(complement_triangle(&g).is_none());
        let r = independence2_solve(&g, 2).unwrap();
        assert!(verify_s_club(&g, 2, &r.best));
        assert_eq!(r.size, dual_branching(&g, 2, 0).unwrap().size, "graph {g:?}");
        // Also for s = 3, where the ball term differs.
        assert_eq!(independence2_solve(&g, 3).unwrap().size, dual_branching(&g, 3, 0).unwrap().size);
    }
}

#[test]
fn independence_two_rejects_three_independent_vertices() {
    let err = independence2_solve(&Graph::empty(3), 2).unwrap_err();
    assert!(matches!(err, ClubError::Precondition(_)));
}

#[test]
fn heuristic_ball_is_a_club() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..40 {
        let g = gnp(rng.gen_range(1..=15), 0.3, &mut rng);
        for s in 1..=3 {
            let h = heuristic_ball(&g, s).unwrap();
            assert!(verify_s_club(&g, s, &h.best));
        }
    }
}

#[test]
fn oracle_refuses_large_graphs() {
    assert!(matches!(oracle_max_2club(&Graph::empty(65)), Err(ClubError::Budget(_))));
}
