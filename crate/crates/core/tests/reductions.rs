mod common;

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use twoclub_core::exact::{dual_branching, turing_kernel_solve};
use twoclub_core::generators::gnp;
use twoclub_core::reductions::{pad_average_degree, ReductionOptions};

#[test]
fn isomorphism_class_counts() {
    let counts: Vec<usize> = (1..=5).map(|n| common::graphs_up_to_isomorphism(n).len()).collect();
    assert_eq!(counts, vec![1, 2, 4, 11, 34]);
}

#[test]
fn domination2_equivalence_on_all_small_graphs() {
    common::check_domination2_equivalence(6).unwrap();
}

#[test]
fn bipartite_plus_one_equivalence_for_two_variables() {
    common::check_bipartite_equivalence().unwrap();
}

#[test]
fn mcc_forward_witnesses_verify() {
    common::check_mcc_forward(4).unwrap();
}

#[test]
fn mcc_equivalence_three_vertices_two_colors() {
    common::check_mcc_equivalence().unwrap();
}

#[test]
fn padding_preserves_decisions() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let opts = ReductionOptions::default();
    let mut checked = 0;
    while checked < 40 {
        let n = rng.gen_range(4..=10);
        let g = gnp(n, rng.gen_range(0.2..0.6), &mut rng);
        let max_degree = g.vertices().map(|v| g.degree(v)).max().unwrap();
        let ell = max_degree + 3;
        if ell > n {
            continue;
        }
        let alpha = Ratio::new(rng.gen_range(9..=16), 4);
        let inst = pad_average_degree(&g, ell, alpha, &opts).unwrap();
        let before = dual_branching(&g, 2, ell - 1).unwrap().size >= ell;
        // The appended path is long and sparse; per-ball solving keeps the search small.
        let after = turing_kernel_solve(&inst.graph, |b| dual_branching(b, 2, 0)).unwrap().size >= ell;
        assert_eq!(before, after, "graph {g:?}, ell {ell}");
        assert!(inst.check_structure(0).iter().all(|c| c.holds == Some(true)));
        checked += 1;
    }
}
