//! Algorithm selection for `solve --algo auto`.

use clap::ValueEnum;
use twoclub_core::exact::complement_triangle;
use twoclub_core::graph::ball;
use twoclub_core::params::{h_index, modulator_greedy, ModulatorTarget};
use twoclub_core::{Graph, VertexSet};

/// Largest greedy modulator the auto policy hands to a modulator solver.
pub const MODULATOR_LIMIT: usize = 4;
/// Largest h-index the auto policy hands to the h-index solver.
pub const HINDEX_LIMIT: usize = 2;
/// Balls smaller than this fraction of the graph make per-ball solving worthwhile.
pub const TURING_BALL_FRACTION: f64 = 0.8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Auto,
    Oracle,
    Heuristic,
    Dual,
    Turing,
    Alpha2,
    ClusterMod,
    CoclusterMod,
    CographMod,
    HindexXp,
}

impl Algo {
    pub fn name(self) -> String {
        self.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
    }

    /// Solvers restricted to 2-clubs.
    pub fn two_club_only(self) -> bool {
        matches!(self, Algo::Oracle | Algo::ClusterMod | Algo::CoclusterMod | Algo::CographMod | Algo::HindexXp)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Choice {
    pub algo: Algo,
    pub rule: &'static str,
    /// Greedy modulator found while choosing, reused by the solver.
    pub modulator: Option<VertexSet>,
}

/// Tries the structural special cases from most to least restrictive and
/// falls back to branching. Rules other than the independence test only
/// apply to 2-clubs.
pub fn choose(g: &Graph, s: usize) -> Choice {
    let pick = |algo, rule, modulator| Choice { algo, rule, modulator };
    if complement_triangle(g).is_none() {
        return pick(Algo::Alpha2, "no three pairwise non-adjacent vertices", None);
    }
    if s == 2 {
        let cluster = modulator_greedy(g, ModulatorTarget::Cluster).vertices;
        if cluster.len() <= MODULATOR_LIMIT {
            return pick(Algo::ClusterMod, "greedy cluster modulator of at most 4 vertices", Some(cluster));
        }
        let cograph = modulator_greedy(g, ModulatorTarget::Cograph).vertices;
        if cograph.len() <= MODULATOR_LIMIT {
            return pick(Algo::CographMod, "greedy cograph modulator of at most 4 vertices", Some(cograph));
        }
        if h_index(g) <= HINDEX_LIMIT {
            return pick(Algo::HindexXp, "h-index at most 2", None);
        }
    }
    let largest_ball = g.vertices().map(|v| ball(g, v, s).map_or(0, |b| b.len())).max().unwrap_or(0);
    if (largest_ball as f64) < TURING_BALL_FRACTION * g.n() as f64 {
        pick(Algo::Turing, "branching per ball: largest ball below 0.8 n", None)
    } else {
        pick(Algo::Dual, "branching on the whole graph", None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use twoclub_core::exact::independence2_solve;
    use twoclub_core::params::validate_modulator;

    fn preconditions_hold(g: &Graph, c: &Choice) -> bool {
        match c.algo {
            Algo::Alpha2 => independence2_solve(g, 2).is_ok(),
            Algo::ClusterMod => validate_modulator(g, ModulatorTarget::Cluster, c.modulator.as_ref().unwrap()).is_ok(),
            Algo::CographMod => validate_modulator(g, ModulatorTarget::Cograph, c.modulator.as_ref().unwrap()).is_ok(),
            Algo::HindexXp => h_index(g) <= HINDEX_LIMIT,
            Algo::Dual | Algo::Turing => true,
            _ => false,
        }
    }

    #[test]
    fn labeled_corpus() {
        let long_path = Graph::path(30);
        let mut edges: Vec<(usize, usize)> = Graph::cycle(24).edges().collect();
        edges.extend((0..24).step_by(3).map(|v| (v, 24)));
        let wheelish = Graph::from_edges(25, edges).unwrap();
        let k33 = Graph::from_edges(6, (0..3).flat_map(|u| (3..6).map(move |v| (u, v)))).unwrap();
        let prism = Graph::from_edges(
            24,
            (0..12).flat_map(|i| [(i, (i + 1) % 12), (i + 12, (i + 1) % 12 + 12), (i, i + 12)]),
        )
        .unwrap();
        let cases = [
            (Graph::cycle(5), Algo::Alpha2),
            (Graph::complete(6), Algo::Alpha2),
            (Graph::star(7), Algo::ClusterMod),
            (k33, Algo::CographMod),
            (long_path, Algo::HindexXp),
            (Graph::petersen(), Algo::Dual),
            (wheelish, Algo::Dual),
            (prism, Algo::Turing),
        ];
        for (g, expected) in cases {
            let c = choose(&g, 2);
            assert_eq!(c.algo, expected, "graph {g:?}");
            assert!(preconditions_hold(&g, &c));
        }
    }
}
