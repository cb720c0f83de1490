//! JSON report written by `--json-out`.

use std::path::Path;

use serde::Serialize;
use twoclub_core::graph::components;
use twoclub_core::params::{degeneracy, degree_stats, modulator_greedy, ModulatorTarget};
use twoclub_core::{Graph, SolveStats};

use crate::error::CliError;

pub const REPORT_VERSION: u32 = 1;

#[derive(Debug, Serialize)]
pub struct Instance {
    pub path: String,
    pub n: usize,
    pub m: usize,
}

#[derive(Debug, Serialize)]
pub struct Stats {
    pub branch_nodes: u64,
    pub table_entries: u64,
    pub wall_ms: u64,
}

impl Stats {
    pub fn new(stats: &SolveStats, wall: std::time::Duration) -> Stats {
        Stats { branch_nodes: stats.branch_nodes, table_entries: stats.table_entries, wall_ms: wall.as_millis() as u64 }
    }
}

#[derive(Debug, Serialize)]
pub struct Parameters {
    pub max_degree: usize,
    pub average_degree: f64,
    pub h_index: usize,
    pub degeneracy: usize,
    pub components: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cluster_modulator_greedy: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cograph_modulator_greedy: Option<usize>,
}

impl Parameters {
    /// Degree statistics, degeneracy and components; near-linear time.
    pub fn basic(g: &Graph) -> Parameters {
        let d = degree_stats(g);
        Parameters {
            max_degree: d.max_degree,
            average_degree: d.average_degree,
            h_index: d.h_index,
            degeneracy: degeneracy(g).value,
            components: components(g).len(),
            cluster_modulator_greedy: None,
            cograph_modulator_greedy: None,
        }
    }

    /// Adds the greedy modulator sizes, which rescan for obstructions after every deletion.
    pub fn of(g: &Graph) -> Parameters {
        Parameters {
            cluster_modulator_greedy: Some(modulator_greedy(g, ModulatorTarget::Cluster).vertices.len()),
            cograph_modulator_greedy: Some(modulator_greedy(g, ModulatorTarget::Cograph).vertices.len()),
            ..Parameters::basic(g)
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ModulatorInfo {
    pub target: &'static str,
    /// `file` or `greedy`.
    pub origin: &'static str,
    pub vertices: Vec<usize>,
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub report_version: u32,
    pub command: &'static str,
    pub instance: Instance,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub algorithm: Option<String>,
    /// Which auto-selection rule fired.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rule: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub modulator: Option<ModulatorInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ell: Option<usize>,
    /// Whether a club of at least `ell` vertices was found.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decision: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    /// Recomputed from the input file, independent of the solver.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stats: Option<Stats>,
    pub parameters: Parameters,
}

impl RunReport {
    pub fn new(command: &'static str, path: &Path, g: &Graph, parameters: Parameters) -> RunReport {
        RunReport {
            report_version: REPORT_VERSION,
            command,
            instance: Instance { path: path.display().to_string(), n: g.n(), m: g.m() },
            s: None,
            algorithm: None,
            rule: None,
            modulator: None,
            ell: None,
            decision: None,
            size: None,
            witness: None,
            verified: None,
            violation: None,
            stats: None,
            parameters,
        }
    }
}

/// Writes `value` as pretty JSON to `path`, or to stdout for `-`.
pub fn write_json<T: Serialize>(value: &T, path: &Path) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).map_err(|e| CliError::Usage(e.to_string()))? + "\n";
    if path == Path::new("-") {
        print!("{text}");
        return Ok(());
    }
    std::fs::write(path, text).map_err(|e| CliError::Io { path: path.to_path_buf(), source: e })
}
