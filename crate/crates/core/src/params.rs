//! Structural parameters: degree statistics, degeneracy, domination, and
//! vertex-deletion modulators to cluster graphs and cographs.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{ClubError, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DegreeStats {
    pub max_degree: usize,
    pub average_degree: f64,
    pub h_index: usize,
}

pub fn degree_stats(g: &Graph) -> DegreeStats {
    let mut degrees: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    let h_index = degrees.iter().enumerate().take_while(|(i, &d)| d > *i).count();
    DegreeStats {
        max_degree: degrees.first().copied().unwrap_or(0),
        average_degree: if g.n() == 0 { 0.0 } else { 2.0 * g.m() as f64 / g.n() as f64 },
        h_index,
    }
}

pub fn h_index(g: &Graph) -> usize {
    degree_stats(g).h_index
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegeneracyResult {
    pub value: usize,
    pub elimination_order: Vec<usize>,
}

/// Minimum-degree peeling; ties go to the smallest id.
pub fn degeneracy(g: &Graph) -> DegeneracyResult {
    let mut degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut queue: BTreeSet<(usize, usize)> = g.vertices().map(|v| (degree[v], v)).collect();
    let mut removed = vec![false; g.n()];
    let mut order = Vec::with_capacity(g.n());
    let mut value = 0;
    while let Some((d, v)) = queue.pop_first() {
        value = value.max(d);
        removed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                queue.remove(&(degree[w], w));
                degree[w] -= 1;
                queue.insert((degree[w], w));
            }
        }
    }
    DegeneracyResult { value, elimination_order: order }
}

/// Largest number of later neighbors any vertex has when eliminated in `order`.
pub fn elimination_width(g: &Graph, order: &[usize]) -> usize {
    let mut position = vec![usize::MAX; g.n()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    order
        .iter()
        .map(|&v| g.neighbors(v).iter().filter(|&&w| position[w] > position[v]).count())
        .max()
        .unwrap_or(0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModulatorTarget {
    /// Disjoint unions of cliques; obstruction is an induced P3.
    Cluster,
    /// P4-free graphs; obstruction is an induced P4.
    Cograph,
}

impl ModulatorTarget {
    /// Number of vertices of the forbidden induced path.
    pub fn obstruction_size(self) -> usize {
        match self {
            ModulatorTarget::Cluster => 3,
            ModulatorTarget::Cograph => 4,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Modulator {
    pub target: ModulatorTarget,
    pub vertices: VertexSet,
    /// Whether `vertices` is known to be a minimum modulator.
    pub exact: bool,
}

/// Some induced P3 `a-b-c` among `alive` vertices.
pub fn find_induced_p3(g: &Graph, alive: &[bool]) -> Option<[usize; 3]> {
    for b in g.vertices().filter(|&v| alive[v]) {
        let nbrs: Vec<usize> = g.neighbors(b).iter().copied().filter(|&w| alive[w]).collect();
        for (i, &a) in nbrs.iter().enumerate() {
            for &c in &nbrs[i + 1..] {
                if !g.has_edge(a, c) {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

/// Some induced P4 `a-b-c-d` among `alive` vertices, found by scanning middle edges.
pub fn find_induced_p4(g: &Graph, alive: &[bool]) -> Option<[usize; 4]> {
    for (b, c) in g.edges() {
        if !alive[b] || !alive[c] {
            continue;
        }
        for (b, c) in [(b, c), (c, b)] {
            let left: Vec<usize> = g
                .neighbors(b)
                .iter()
                .copied()
                .filter(|&a| alive[a] && a != c && !g.has_edge(a, c))
                .collect();
            if left.is_empty() {
                continue;
            }
            for &d in g.neighbors(c) {
                if !alive[d] || d == b || g.has_edge(d, b) {
                    continue;
                }
                if let Some(&a) = left.iter().find(|&&a| !g.has_edge(a, d)) {
                    return Some([a, b, c, d]);
                }
            }
        }
    }
    None
}

fn find_obstruction(g: &Graph, target: ModulatorTarget, alive: &[bool]) -> Option<Vec<usize>> {
    match target {
        ModulatorTarget::Cluster => find_induced_p3(g, alive).map(|p| p.to_vec()),
        ModulatorTarget::Cograph => find_induced_p4(g, alive).map(|p| p.to_vec()),
    }
}

/// Checks that `G - x` belongs to the target class.
pub fn validate_modulator(g: &Graph, target: ModulatorTarget, x: &VertexSet) -> Result<()> {
    x.validate(g.n())
        .map_err(|e| ClubError::InvalidModulator(e.to_string()))?;
    let alive: Vec<bool> = x.to_mask(g.n()).into_iter().map(|b| !b).collect();
    match find_obstruction(g, target, &alive) {
        None => Ok(()),
        Some(path) => Err(ClubError::InvalidModulator(format!(
            "deleting {x:?} leaves the induced path {path:?}"
        ))),
    }
}

pub fn is_cluster_graph(g: &Graph) -> bool {
    find_induced_p3(g, &vec![true; g.n()]).is_none()
}

pub fn is_cograph(g: &Graph) -> bool {
    find_induced_p4(g, &vec![true; g.n()]).is_none()
}

/// Deletes every vertex of an obstruction until none is left; a factor-3
/// (cluster) or factor-4 (cograph) approximation.
pub fn modulator_greedy(g: &Graph, target: ModulatorTarget) -> Modulator {
    let mut alive = vec![true; g.n()];
    let mut taken = Vec::new();
    while let Some(path) = find_obstruction(g, target, &alive) {
        for v in path {
            alive[v] = false;
            taken.push(v);
        }
    }
    Modulator { target, vertices: taken.into(), exact: false }
}

/// Smallest modulator of size at most `budget`, by branching on the vertices
/// of one obstruction at a time.
pub fn modulator_exact(g: &Graph, target: ModulatorTarget, budget: usize) -> Option<Modulator> {
    fn search(
        g: &Graph,
        target: ModulatorTarget,
        alive: &mut Vec<bool>,
        taken: &mut Vec<usize>,
        depth: usize,
    ) -> bool {
        let Some(path) = find_obstruction(g, target, alive) else {
            return true;
        };
        if depth == 0 {
            return false;
        }
        for v in path {
            alive[v] = false;
            taken.push(v);
            if search(g, target, alive, taken, depth - 1) {
                return true;
            }
            taken.pop();
            alive[v] = true;
        }
        false
    }

    let mut alive = vec![true; g.n()];
    let mut taken = Vec::new();
    (0..=budget.min(g.n())).find_map(|depth| {
        search(g, target, &mut alive, &mut taken, depth)
            .then(|| Modulator { target, vertices: taken.clone().into(), exact: true })
    })
}

/// Minimum dominating set of size at most `limit` (brute force, `limit <= 3`).
pub fn small_dominating_set(g: &Graph, limit: usize) -> Result<Option<VertexSet>> {
    if limit > 3 {
        return Err(ClubError::Precondition(format!(
            "dominating-set brute force supports limit <= 3, got {limit}"
        )));
    }
    let n = g.n();
    if n == 0 {
        return Ok(Some(VertexSet::new()));
    }
    let dominates = |set: &[usize]| {
        let mut covered = vec![false; n];
        for &v in set {
            covered[v] = true;
            for &w in g.neighbors(v) {
                covered[w] = true;
            }
        }
        covered.into_iter().all(|c| c)
    };
    for size in 1..=limit.min(n) {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            if dominates(&idx) {
                return Ok(Some(idx.into()));
            }
            // Next combination in lexicographic order.
            let Some(i) = (0..size).rev().find(|&i| idx[i] < n - size + i) else {
                break;
            };
            idx[i] += 1;
            for j in i + 1..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    Ok(None)
}
