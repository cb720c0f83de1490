use std::path::{Path, PathBuf};
use std::time::Instant;

use num_rational::Ratio;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use twoclub_core::cograph::solve_cograph_modulator_with;
use twoclub_core::exact::{
    dual_branching_with, heuristic_ball, independence2_solve, oracle_max_2club, turing_kernel_solve_with,
    DualOptions,
};
use twoclub_core::generators::{gnp, random_cograph};
use twoclub_core::graph::{complement, find_violation};
use twoclub_core::hindex::solve_hindex_xp_with;
use twoclub_core::modulator::{solve_cluster_modulator_with, solve_cocluster_modulator};
use twoclub_core::params::{modulator_greedy, ModulatorTarget};
use twoclub_core::reductions::{
    gen_bipartite_plus_one, gen_clique_cover3, gen_domination2, gen_mcc, pad_average_degree, AnchorGadget,
    ColoredGraph, MccVariant, PadSizes, ReducedInstance, ReductionOptions, StructuralCheck,
};
use twoclub_core::{Graph, SolveStats, VertexSet};

use crate::error::CliError;
use crate::formats::{self, GraphFormat};
use crate::policy::{self, Algo};
use crate::report::{self, ModulatorInfo, Parameters, RunReport, Stats, REPORT_VERSION};
use crate::{GenerateArgs, GenerateKind, ParamsArgs, SolveArgs, VerifyArgs};

fn ids(set: &VertexSet) -> String {
    set.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Modulator from `--modulator`, else the one found by the auto policy,
/// else a greedy one.
fn modulator(
    a: &SolveArgs,
    from_policy: Option<VertexSet>,
    g: &Graph,
    target: &'static str,
    greedy: impl FnOnce() -> VertexSet,
) -> Result<(VertexSet, ModulatorInfo), CliError> {
    let (x, origin) = match (&a.modulator, from_policy) {
        (Some(path), _) => (formats::read_solution(path)?, "file"),
        (None, Some(x)) => (x, "greedy"),
        (None, None) => (greedy(), "greedy"),
    };
    x.validate(g.n()).map_err(CliError::Club)?;
    let info = ModulatorInfo { target, origin, vertices: x.as_slice().to_vec() };
    Ok((x, info))
}

pub fn solve(a: &SolveArgs) -> Result<i32, CliError> {
    let path = &a.common.input;
    let g = formats::read_graph(path, a.common.budget_vertices)?;
    if a.algo.two_club_only() && a.s != 2 {
        return Err(CliError::Usage(format!("--algo {} only supports --s 2", a.algo.name())));
    }
    let start = Instant::now();
    let seed = heuristic_ball(&g, a.s)?;
    let (algo, rule, from_policy) = match a.algo {
        Algo::Auto => {
            let c = policy::choose(&g, a.s);
            (c.algo, Some(c.rule), c.modulator)
        }
        other => (other, None, None),
    };
    let dual = DualOptions { s: a.s, lower_bound: 0, stop_at: a.ell, node_limit: a.node_limit };
    let mut modulator_info = None;
    let mut decided = None;
    let (best, stats): (Option<VertexSet>, SolveStats) = match algo {
        Algo::Auto => unreachable!("the policy picks a concrete algorithm"),
        Algo::Heuristic => (Some(seed.best.clone()), seed.stats),
        Algo::Oracle => split(oracle_max_2club(&g)?),
        // The seed is a valid club, so a lower bound of its size keeps the answer exact.
        Algo::Dual => split(dual_branching_with(&g, &DualOptions { lower_bound: seed.size, ..dual.clone() })?),
        Algo::Turing => split(turing_kernel_solve_with(&g, a.s, a.jobs, |b| dual_branching_with(b, &dual))?),
        Algo::Alpha2 => split(independence2_solve(&g, a.s)?),
        Algo::HindexXp => split(solve_hindex_xp_with(&g, a.hindex_cap, a.jobs)?),
        Algo::ClusterMod => {
            let (x, info) = modulator(a, from_policy, &g, "cluster", || {
                modulator_greedy(&g, ModulatorTarget::Cluster).vertices
            })?;
            modulator_info = Some(info);
            split(solve_cluster_modulator_with(&g, &x, a.jobs)?)
        }
        Algo::CographMod => {
            let (x, info) = modulator(a, from_policy, &g, "cograph", || {
                modulator_greedy(&g, ModulatorTarget::Cograph).vertices
            })?;
            modulator_info = Some(info);
            split(solve_cograph_modulator_with(&g, &x, a.jobs)?)
        }
        Algo::CoclusterMod => {
            let (x, info) = modulator(a, from_policy, &g, "co-cluster", || {
                modulator_greedy(&complement(&g), ModulatorTarget::Cluster).vertices
            })?;
            modulator_info = Some(info);
            match a.ell {
                Some(ell) => {
                    let d = solve_cocluster_modulator(&g, &x, ell as i64)?;
                    decided = Some(d.yes);
                    (d.witness, d.stats)
                }
                // Raise the target until the answer is "no".
                None => {
                    let mut best = seed.best.clone();
                    let mut stats = SolveStats::default();
                    loop {
                        let d = solve_cocluster_modulator(&g, &x, best.len() as i64 + 1)?;
                        stats.absorb(&d.stats);
                        match d.witness {
                            Some(w) if d.yes => best = w,
                            _ => break,
                        }
                    }
                    (Some(best), stats)
                }
            }
        }
    };
    let wall = start.elapsed();

    let mut rep = RunReport::new("solve", path, &g, Parameters::of(&g));
    rep.s = Some(a.s);
    rep.algorithm = Some(algo.name());
    rep.rule = rule.map(str::to_string);
    rep.modulator = modulator_info;
    rep.ell = a.ell;
    rep.stats = Some(Stats::new(&stats, wall));
    println!("instance: n = {}, m = {}", g.n(), g.m());
    match rule {
        Some(rule) => println!("algorithm: {} (auto: {rule})", algo.name()),
        None => println!("algorithm: {}", algo.name()),
    }
    let mut code = 0;
    if let Some(best) = &best {
        // Re-read the input so the check does not depend on anything the solver saw.
        let fresh = formats::read_graph(path, a.common.budget_vertices)?;
        let violation = find_violation(&fresh, a.s, best);
        println!("size: {}", best.len());
        println!("witness: {}", ids(best));
        println!("verified: {}", yes_no(violation.is_none()));
        if let Some((u, v)) = violation {
            println!("violation: {u} {v}");
            code = 1;
        }
        rep.size = Some(best.len());
        rep.witness = Some(best.as_slice().to_vec());
        rep.verified = Some(violation.is_none());
        rep.violation = violation;
        if let Some(out) = &a.solution_out {
            std::fs::write(out, formats::write_solution(best))
                .map_err(|e| CliError::Io { path: out.clone(), source: e })?;
        }
    }
    if let Some(ell) = a.ell {
        let yes = decided.unwrap_or_else(|| best.as_ref().is_some_and(|b| b.len() >= ell));
        println!("decision: {} (ell = {ell})", yes_no(yes));
        rep.decision = Some(yes);
        if !yes {
            code = 1;
        }
    }
    println!("time: {} ms", wall.as_millis());
    if let Some(out) = &a.common.json_out {
        report::write_json(&rep, out)?;
    }
    Ok(code)
}

fn split(r: twoclub_core::SolveResult) -> (Option<VertexSet>, SolveStats) {
    (Some(r.best), r.stats)
}

pub fn params(a: &ParamsArgs) -> Result<i32, CliError> {
    let g = formats::read_graph(&a.common.input, a.common.budget_vertices)?;
    let rep = RunReport::new("params", &a.common.input, &g, Parameters::of(&g));
    let p = &rep.parameters;
    println!("n: {}", g.n());
    println!("m: {}", g.m());
    println!("max degree: {}", p.max_degree);
    println!("average degree: {:.4}", p.average_degree);
    println!("h-index: {}", p.h_index);
    println!("degeneracy: {}", p.degeneracy);
    println!("components: {}", p.components);
    for (name, size) in [("cluster", p.cluster_modulator_greedy), ("cograph", p.cograph_modulator_greedy)] {
        if let Some(size) = size {
            println!("greedy {name} modulator: {size}");
        }
    }
    if let Some(out) = &a.common.json_out {
        report::write_json(&rep, out)?;
    }
    Ok(0)
}

pub fn verify(a: &VerifyArgs) -> Result<i32, CliError> {
    let g = formats::read_graph(&a.common.input, a.common.budget_vertices)?;
    let set = formats::read_solution(&a.solution)?;
    set.validate(g.n()).map_err(CliError::Club)?;
    let violation = find_violation(&g, a.s, &set);
    match violation {
        None => println!("ok: {} vertices induce a subgraph of diameter at most {}", set.len(), a.s),
        Some((u, v)) => println!("violation: vertices {u} and {v} are at distance more than {}", a.s),
    }
    if let Some(out) = &a.common.json_out {
        let mut rep = RunReport::new("verify", &a.common.input, &g, Parameters::basic(&g));
        rep.s = Some(a.s);
        rep.size = Some(set.len());
        rep.witness = Some(set.as_slice().to_vec());
        rep.verified = Some(violation.is_none());
        rep.violation = violation;
        report::write_json(&rep, out)?;
    }
    Ok(if violation.is_none() { 0 } else { 1 })
}

#[derive(Debug, Serialize)]
struct GenerateReport {
    report_version: u32,
    command: &'static str,
    kind: String,
    source: String,
    n: usize,
    m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    ell: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    expected_vertices: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pads: Option<PadSizes>,
    warnings: Vec<String>,
    checks: Vec<StructuralCheck>,
    parameters: Parameters,
    /// Gadget role of every vertex, by id.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    roles: Vec<String>,
}

fn with_suffix(path: &Path, suffix: &str) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

fn required<T: Clone>(value: &Option<T>, flag: &str, kind: GenerateKind) -> Result<T, CliError> {
    value.clone().ok_or_else(|| {
        CliError::Usage(format!("--kind {} needs {flag}", kind.name()))
    })
}

fn reduction(a: &GenerateArgs) -> Result<ReducedInstance, CliError> {
    let input = required(&a.input, "--input", a.kind)?;
    let options = |source_n: usize| {
        let literal = PadSizes::literal(source_n);
        let pads = (a.pad_big.is_some() || a.pad_small.is_some()).then(|| PadSizes {
            big: a.pad_big.unwrap_or(literal.big),
            small: a.pad_small.unwrap_or(literal.small),
        });
        let anchor = if a.literal_anchor { AnchorGadget::Literal } else { AnchorGadget::Repaired };
        ReductionOptions { vertex_budget: a.budget_vertices, pads, anchor, ..ReductionOptions::default() }
    };
    let inst = match a.kind {
        GenerateKind::BipartitePlusOne => {
            let f = formats::parse_max2sat(&formats::read(&input)?).map_err(|e| e.in_file(&input))?;
            gen_bipartite_plus_one(&f, &options(f.n_vars))?
        }
        kind => {
            let g = formats::read_graph(&input, a.budget_vertices)?;
            let opts = options(g.n());
            match kind {
                GenerateKind::CliqueCover3 => gen_clique_cover3(&g, required(&a.k, "--k", kind)?, &opts)?,
                GenerateKind::Domination2 => gen_domination2(&g, required(&a.k, "--k", kind)?, &opts)?,
                GenerateKind::MccHindex | GenerateKind::MccDegeneracy => {
                    let colors_path = required(&a.colors, "--colors", kind)?;
                    let colors = formats::parse_colors(&formats::read(&colors_path)?, g.n())
                        .map_err(|e| e.in_file(&colors_path))?;
                    let k = a.k.unwrap_or_else(|| colors.iter().copied().max().unwrap_or(0));
                    let variant =
                        if kind == GenerateKind::MccHindex { MccVariant::HIndex } else { MccVariant::Degeneracy };
                    gen_mcc(&ColoredGraph::new(g, colors)?, k, variant, &opts)?
                }
                GenerateKind::AvgDegreePad => {
                    let text = required(&a.alpha, "--alpha", kind)?;
                    let alpha: Ratio<i64> =
                        text.parse().map_err(|_| CliError::Usage(format!("cannot parse --alpha {text:?}")))?;
                    pad_average_degree(&g, required(&a.ell, "--ell", kind)?, alpha, &opts)?
                }
                _ => unreachable!("random kinds are handled by the caller"),
            }
        }
    };
    Ok(inst)
}

pub fn generate(a: &GenerateArgs) -> Result<i32, CliError> {
    let kind_name = a.kind.name();
    let rep = match a.kind {
        GenerateKind::Gnp | GenerateKind::Cograph => {
            let n = required(&a.n, "--n", a.kind)?;
            if n > a.budget_vertices {
                return Err(twoclub_core::ClubError::Budget(format!(
                    "{n} vertices requested, budget is {}",
                    a.budget_vertices
                ))
                .into());
            }
            let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
            let (g, source) = if a.kind == GenerateKind::Gnp {
                (gnp(n, a.p, &mut rng), format!("G(n, p) with n = {n}, p = {}, seed {}", a.p, a.seed))
            } else {
                (random_cograph(n, &mut rng), format!("random cograph with n = {n}, seed {}", a.seed))
            };
            write_graph_file(&a.out, &g)?;
            GenerateReport {
                report_version: REPORT_VERSION,
                command: "generate",
                kind: kind_name,
                source,
                n: g.n(),
                m: g.m(),
                ell: None,
                expected_vertices: None,
                pads: None,
                warnings: Vec::new(),
                checks: Vec::new(),
                parameters: Parameters::of(&g),
                roles: Vec::new(),
            }
        }
        _ => {
            let inst = reduction(a)?;
            write_graph_file(&a.out, &inst.graph)?;
            let ell_path = with_suffix(&a.out, ".ell");
            std::fs::write(&ell_path, format!("{}\n", inst.ell))
                .map_err(|e| CliError::Io { path: ell_path, source: e })?;
            GenerateReport {
                report_version: REPORT_VERSION,
                command: "generate",
                kind: kind_name,
                source: inst.source.describe(),
                n: inst.graph.n(),
                m: inst.graph.m(),
                ell: Some(inst.ell),
                expected_vertices: Some(inst.expected_vertices),
                pads: inst.pads,
                warnings: inst.warnings.clone(),
                checks: inst.check_structure(a.check_limit),
                parameters: Parameters::basic(&inst.graph),
                roles: inst.labels.iter().map(|r| r.to_string()).collect(),
            }
        }
    };
    println!("wrote {}: n = {}, m = {}", a.out.display(), rep.n, rep.m);
    if let Some(ell) = rep.ell {
        println!("ell: {ell}");
    }
    for w in &rep.warnings {
        println!("warning: {w}");
    }
    let mut code = 0;
    for c in &rep.checks {
        let status = match c.holds {
            Some(true) => "ok",
            Some(false) => {
                code = 1;
                "FAILED"
            }
            None => "skipped",
        };
        println!("check {status}: {}", c.name);
    }
    let meta = a.json_out.clone().unwrap_or_else(|| with_suffix(&a.out, ".json"));
    report::write_json(&rep, &meta)?;
    Ok(code)
}

fn write_graph_file(path: &Path, g: &Graph) -> Result<(), CliError> {
    std::fs::write(path, formats::write_graph(g, GraphFormat::from_path(path)))
        .map_err(|e| CliError::Io { path: path.to_path_buf(), source: e })
}
