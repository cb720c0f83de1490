use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use twoclub_core::cograph::{build_cotree, solve_cograph_modulator, solve_cograph_modulator_with, NodeKind};
use twoclub_core::exact::oracle_max_2club;
use twoclub_core::generators::{gnp, random_cograph, with_apices};
use twoclub_core::graph::{verify_s_club, VertexSet};
use twoclub_core::hindex::{solve_hindex_xp, solve_hindex_xp_with};
use twoclub_core::params::{h_index, is_cograph};
use twoclub_core::ClubError;

#[test]
fn cograph_dp_matches_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..80 {
        let base = random_cograph(rng.gen_range(1..=10), &mut rng);
        let (g, x) = with_apices(&base, rng.gen_range(0..=3), rng.gen_range(0.2..0.8), &mut rng);
        let r = solve_cograph_modulator(&g, &x).unwrap();
        assert_eq!(r.size, oracle_max_2club(&g).unwrap().size, "graph {g:?}, x {x:?}");
        assert!(verify_s_club(&g, 2, &r.best));
    }
}

#[test]
fn cograph_dp_is_independent_of_worker_count() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..10 {
        let (g, x) = with_apices(&random_cograph(9, &mut rng), 3, 0.5, &mut rng);
        assert_eq!(
            solve_cograph_modulator_with(&g, &x, 1).unwrap().best,
            solve_cograph_modulator_with(&g, &x, 3).unwrap().best
        );
    }
}

#[test]
fn cotree_round_trip_and_certificates() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..60 {
        let g = random_cograph(rng.gen_range(1..=14), &mut rng);
        let t = build_cotree(&g).unwrap();
        assert_eq!(t.evaluate(g.n()).unwrap(), g);
        for node in &t.nodes {
            match node.kind {
                NodeKind::Leaf(v) => assert_eq!(node.vertices.as_slice(), &[v]),
                _ => assert_eq!(node.children.len(), 2),
            }
        }
    }
    for _ in 0..60 {
        let g = gnp(rng.gen_range(4..=10), 0.5, &mut rng);
        match build_cotree(&g) {
            Ok(t) => assert!(is_cograph(&g) && t.evaluate(g.n()).unwrap() == g),
            Err(ClubError::NotACograph(p)) => {
                assert!(!is_cograph(&g));
                for i in 0..4 {
                    for j in i + 1..4 {
                        assert_eq!(g.has_edge(p[i], p[j]), j == i + 1, "certificate {p:?}");
                    }
                }
            }
            Err(e) => panic!("unexpected error {e}"),
        }
    }
}

#[test]
fn hindex_xp_matches_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    let mut checked = 0;
    while checked < 60 {
        let n = rng.gen_range(1..=12);
        let g = gnp(n, rng.gen_range(0.05..0.35), &mut rng);
        if h_index(&g) > 2 {
            continue;
        }
        let r = solve_hindex_xp(&g, 2).unwrap();
        assert_eq!(r.size, oracle_max_2club(&g).unwrap().size, "graph {g:?}");
        assert_eq!(solve_hindex_xp_with(&g, 2, 3).unwrap().best, r.best);
        checked += 1;
    }
}

#[test]
fn modulator_solvers_reject_bad_modulators() {
    let g = twoclub_core::Graph::path(6);
    assert!(matches!(solve_cograph_modulator(&g, &VertexSet::new()), Err(ClubError::InvalidModulator(_))));
    assert!(matches!(
        solve_cograph_modulator(&g, &VertexSet::from(vec![9])),
        Err(ClubError::InvalidModulator(_))
    ));
}
