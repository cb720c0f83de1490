//! Cograph recognition by cotree construction, and the exact 2-club solver
//! parameterized by a modulator to cographs.

mod cotree;
mod solver;

pub use cotree::{build_cotree, build_cotree_on, Cotree, CotreeNode, NodeKind};
pub use solver::{solve_cograph_modulator, solve_cograph_modulator_with};
