//! Text formats read and written by the command line tool: plain edge
//! lists, DIMACS `.col` files, solution files, Max 2-SAT formulas and
//! vertex colorings.

use std::fmt::Write as _;
use std::path::Path;

use twoclub_core::reductions::{ColoredGraph, Max2SatFormula};
use twoclub_core::{Graph, VertexSet};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Dimacs,
}

impl GraphFormat {
    /// DIMACS for `.col` files, the edge list otherwise.
    pub fn from_path(path: &Path) -> GraphFormat {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("col") => GraphFormat::Dimacs,
            _ => GraphFormat::EdgeList,
        }
    }
}

/// Non-empty lines with `#` comments stripped, paired with 1-based line numbers.
fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_fields<T: std::str::FromStr>(line: &str, lineno: usize, count: usize) -> Result<Vec<T>, CliError> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != count {
        return Err(CliError::parse(lineno, format!("expected {count} fields, found {}", fields.len())));
    }
    fields
        .iter()
        .map(|f| f.parse::<T>().map_err(|_| CliError::parse(lineno, format!("cannot parse {f:?}"))))
        .collect()
}

fn check_order(n: usize, budget: usize) -> Result<(), CliError> {
    if n > budget {
        return Err(CliError::Club(twoclub_core::ClubError::Budget(format!(
            "graph declares {n} vertices, budget is {budget}"
        ))));
    }
    Ok(())
}

fn build(n: usize, edges: Vec<(usize, usize)>) -> Result<Graph, CliError> {
    Graph::from_edges(n, edges).map_err(|e| CliError::Parse { line: None, message: e.to_string() })
}

/// Edge list with 0-based ids. The first line is taken as an `n m` header
/// when exactly `m` edge lines follow and every id is below `n`; otherwise
/// the vertex count is one more than the largest id.
pub fn parse_edge_list(text: &str, budget: usize) -> Result<Graph, CliError> {
    let mut rows = Vec::new();
    for (lineno, line) in data_lines(text) {
        let f = parse_fields::<usize>(line, lineno, 2)?;
        rows.push((lineno, f[0], f[1]));
    }
    if let Some(&(_, n, m)) = rows.first() {
        let rest = &rows[1..];
        if rest.len() == m && rest.iter().all(|&(_, u, v)| u < n && v < n) {
            check_order(n, budget)?;
            return build(n, rest.iter().map(|&(_, u, v)| (u, v)).collect());
        }
    }
    for &(lineno, u, v) in &rows {
        if u == v {
            return Err(CliError::parse(lineno, format!("self-loop on vertex {u}")));
        }
    }
    let n = rows.iter().map(|&(_, u, v)| u.max(v) + 1).max().unwrap_or(0);
    check_order(n, budget)?;
    build(n, rows.into_iter().map(|(_, u, v)| (u, v)).collect())
}

/// DIMACS graph: `c` comments, a `p edge n m` line, then `e u v` lines with
/// 1-based ids.
pub fn parse_dimacs(text: &str, budget: usize) -> Result<Graph, CliError> {
    let mut n = None;
    let mut edges = Vec::new();
    for (lineno, line) in data_lines(text) {
        let mut fields = line.split_whitespace();
        match fields.next() {
            Some("c") => {}
            Some("p") => {
                let rest: Vec<&str> = fields.collect();
                if rest.len() != 3 {
                    return Err(CliError::parse(lineno, "expected \"p edge <n> <m>\""));
                }
                let count: usize = rest[1]
                    .parse()
                    .map_err(|_| CliError::parse(lineno, format!("cannot parse {:?}", rest[1])))?;
                check_order(count, budget)?;
                n = Some(count);
            }
            Some("e") => {
                let Some(n) = n else {
                    return Err(CliError::parse(lineno, "edge before the \"p\" line"));
                };
                let f = parse_fields::<usize>(&line[1..], lineno, 2)?;
                if f.iter().any(|&x| x == 0 || x > n) {
                    return Err(CliError::parse(lineno, format!("vertex out of range 1..={n}")));
                }
                if f[0] == f[1] {
                    return Err(CliError::parse(lineno, format!("self-loop on vertex {}", f[0])));
                }
                edges.push((f[0] - 1, f[1] - 1));
            }
            _ => return Err(CliError::parse(lineno, format!("unknown line {line:?}"))),
        }
    }
    let n = n.ok_or_else(|| CliError::Parse { line: None, message: "missing \"p edge\" line".into() })?;
    build(n, edges)
}

pub fn parse_graph(text: &str, format: GraphFormat, budget: usize) -> Result<Graph, CliError> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text, budget),
        GraphFormat::Dimacs => parse_dimacs(text, budget),
    }
}

pub fn read_graph(path: &Path, budget: usize) -> Result<Graph, CliError> {
    let text = read(path)?;
    parse_graph(&text, GraphFormat::from_path(path), budget).map_err(|e| e.in_file(path))
}

pub fn write_graph(g: &Graph, format: GraphFormat) -> String {
    let mut out = String::new();
    match format {
        GraphFormat::EdgeList => {
            let _ = writeln!(out, "{} {}", g.n(), g.m());
            for (u, v) in g.edges() {
                let _ = writeln!(out, "{u} {v}");
            }
        }
        GraphFormat::Dimacs => {
            let _ = writeln!(out, "p edge {} {}", g.n(), g.m());
            for (u, v) in g.edges() {
                let _ = writeln!(out, "e {} {}", u + 1, v + 1);
            }
        }
    }
    out
}

/// One vertex id per line; blank lines and `#` comments are ignored.
pub fn parse_solution(text: &str) -> Result<VertexSet, CliError> {
    let mut ids = Vec::new();
    for (lineno, line) in data_lines(text) {
        ids.push(parse_fields::<usize>(line, lineno, 1)?[0]);
    }
    Ok(VertexSet::from(ids))
}

pub fn read_solution(path: &Path) -> Result<VertexSet, CliError> {
    parse_solution(&read(path)?).map_err(|e| e.in_file(path))
}

pub fn write_solution(set: &VertexSet) -> String {
    set.iter().map(|v| format!("{v}\n")).collect()
}

/// Header `p <vars> <clauses> <k>`, then one clause of two signed literals per line.
pub fn parse_max2sat(text: &str) -> Result<Max2SatFormula, CliError> {
    let mut lines = data_lines(text);
    let (lineno, header) = lines
        .next()
        .ok_or_else(|| CliError::Parse { line: None, message: "empty formula file".into() })?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.first() != Some(&"p") {
        return Err(CliError::parse(lineno, "expected \"p <vars> <clauses> <k>\""));
    }
    let h = parse_fields::<usize>(&header[1..], lineno, 3)?;
    let mut clauses = Vec::with_capacity(h[1]);
    for (lineno, line) in lines {
        let f = parse_fields::<i64>(line, lineno, 2)?;
        clauses.push((f[0], f[1]));
    }
    if clauses.len() != h[1] {
        return Err(CliError::Parse {
            line: None,
            message: format!("header announces {} clauses, found {}", h[1], clauses.len()),
        });
    }
    let f = Max2SatFormula { n_vars: h[0], clauses, k: h[2] };
    f.validate().map_err(|e| CliError::Parse { line: None, message: e.to_string() })?;
    Ok(f)
}

pub fn write_max2sat(f: &Max2SatFormula) -> String {
    let mut out = format!("p {} {} {}\n", f.n_vars, f.clauses.len(), f.k);
    for (a, b) in &f.clauses {
        let _ = writeln!(out, "{a} {b}");
    }
    out
}

/// Lines `vertex color`, with colors from 1. Every vertex gets exactly one color.
pub fn parse_colors(text: &str, n: usize) -> Result<Vec<usize>, CliError> {
    let mut colors = vec![0; n];
    for (lineno, line) in data_lines(text) {
        let f = parse_fields::<usize>(line, lineno, 2)?;
        let (v, c) = (f[0], f[1]);
        if v >= n {
            return Err(CliError::parse(lineno, format!("vertex {v} out of range for {n} vertices")));
        }
        if c == 0 {
            return Err(CliError::parse(lineno, "colors start at 1"));
        }
        if colors[v] != 0 {
            return Err(CliError::parse(lineno, format!("vertex {v} colored twice")));
        }
        colors[v] = c;
    }
    if let Some(v) = colors.iter().position(|&c| c == 0) {
        return Err(CliError::Parse { line: None, message: format!("vertex {v} has no color") });
    }
    Ok(colors)
}

pub fn write_colors(cg: &ColoredGraph) -> String {
    cg.colors.iter().enumerate().map(|(v, c)| format!("{v} {c}\n")).collect()
}

pub fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io { path: path.to_path_buf(), source: e })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_detection() {
        // Header with an isolated vertex.
        let g = parse_edge_list("4 2\n0 1\n1 2\n", 100).unwrap();
        assert_eq!((g.n(), g.m()), (4, 2));
        // "1 2" cannot be a header: vertex 2 is not below 1.
        let g = parse_edge_list("# path\n1 2\n0 1\n", 100).unwrap();
        assert_eq!((g.n(), g.m()), (3, 2));
        assert_eq!(parse_edge_list("", 100).unwrap().n(), 0);
        assert!(parse_edge_list("0 0\n3 3\n", 100).is_err());
    }

    #[test]
    fn dimacs_is_one_based() {
        let g = parse_dimacs("c tiny\np edge 3 2\ne 1 2\ne 2 3\n", 100).unwrap();
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2) && !g.has_edge(0, 2));
        assert!(parse_dimacs("p edge 3 1\ne 0 1\n", 100).is_err());
        assert!(parse_dimacs("e 1 2\n", 100).is_err());
    }

    #[test]
    fn budget_applies_to_declared_order() {
        let err = parse_edge_list("1000 0\n", 10).unwrap_err();
        assert_eq!(err.exit_code(), 3);
    }

    #[test]
    fn formulas_and_colors() {
        let f = parse_max2sat("p 2 3 2\n1 2\n-1 2\n1 -2\n").unwrap();
        assert_eq!(f.clauses, vec![(1, 2), (-1, 2), (1, -2)]);
        assert!(parse_max2sat("p 2 2 1\n1 2\n").is_err());
        assert!(parse_max2sat("p 1 1 1\n1 3\n").is_err());
        assert_eq!(parse_colors("0 1\n1 2\n", 2).unwrap(), vec![1, 2]);
        assert!(parse_colors("0 1\n", 2).is_err());
        assert!(parse_colors("0 1\n0 2\n", 1).is_err());
    }
}
