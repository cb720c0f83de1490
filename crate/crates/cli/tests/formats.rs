use proptest::prelude::*;

use twoclub_cli::formats::{
    parse_colors, parse_dimacs, parse_edge_list, parse_max2sat, parse_solution, write_colors, write_graph,
    write_max2sat, write_solution, GraphFormat,
};
use twoclub_core::reductions::{ColoredGraph, Max2SatFormula};
use twoclub_core::{Graph, VertexSet};

fn graph() -> impl Strategy<Value = Graph> {
    (0usize..=12)
        .prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            (Just(n), prop::collection::vec(any::<bool>(), pairs))
        })
        .prop_map(|(n, bits)| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
}

fn formula() -> impl Strategy<Value = Max2SatFormula> {
    (1usize..=5).prop_flat_map(|n| {
        let n = n as i64;
        let lit = (1..=n, any::<bool>()).prop_map(|(v, neg)| if neg { -v } else { v });
        (prop::collection::vec((lit.clone(), lit), 0..8), 0usize..6).prop_map(move |(clauses, k)| {
            let mut seen = Vec::new();
            let clauses = clauses
                .into_iter()
                .filter(|&(a, b)| {
                    let key = (a.min(b), a.max(b));
                    let fresh = !seen.contains(&key);
                    seen.push(key);
                    fresh
                })
                .collect();
            Max2SatFormula { n_vars: n as usize, clauses, k }
        })
    })
}

proptest! {
    #[test]
    fn edge_list_round_trip(g in graph()) {
        let text = write_graph(&g, GraphFormat::EdgeList);
        let back = parse_edge_list(&text, usize::MAX).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(write_graph(&back, GraphFormat::EdgeList), text);
    }

    #[test]
    fn dimacs_round_trip(g in graph()) {
        let text = write_graph(&g, GraphFormat::Dimacs);
        let back = parse_dimacs(&text, usize::MAX).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(write_graph(&back, GraphFormat::Dimacs), text);
    }

    #[test]
    fn solution_round_trip(ids in prop::collection::btree_set(0usize..1000, 0..20)) {
        let set = VertexSet::from(ids.into_iter().collect::<Vec<_>>());
        let text = write_solution(&set);
        prop_assert_eq!(parse_solution(&text).unwrap(), set);
    }

    #[test]
    fn max2sat_round_trip(f in formula()) {
        let text = write_max2sat(&f);
        let back = parse_max2sat(&text).unwrap();
        prop_assert_eq!(write_max2sat(&back), text);
        prop_assert_eq!(back, f);
    }

    #[test]
    fn colors_round_trip(g in graph(), seed in prop::collection::vec(1usize..4, 12)) {
        let colors: Vec<usize> = seed[..g.n()].to_vec();
        let cg = ColoredGraph::new(g.clone(), colors.clone()).unwrap();
        let text = write_colors(&cg);
        prop_assert_eq!(parse_colors(&text, g.n()).unwrap(), colors);
    }
}
