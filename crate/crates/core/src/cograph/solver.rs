use std::collections::BTreeMap;
use std::time::Instant;

use super::cotree::{build_cotree_on, Cotree, NodeKind};
use crate::error::{ClubError, Result};
use crate::exact::{SolveResult, SolveStats};
use crate::graph::{bfs_limited, twin_classes, Graph, TwinPartition, VertexSet};
use crate::modulator::{best_over_guesses, check_modulator_size, pairs_needing_outside_neighbor};

/// Maximum 2-club when `G - x` is a cograph.
pub fn solve_cograph_modulator(g: &Graph, x: &VertexSet) -> Result<SolveResult> {
    solve_cograph_modulator_with(g, x, 1)
}

/// For each guess `X ⊆ x` of the modulator part of the solution, a table
/// over the cotree of `G - x` stores, per node `P` and set `T` of twin
/// classes (with respect to `X`), the largest `L ⊆ V(P)` realizing exactly
/// the classes `T` such that every vertex of `L` is within distance two of
/// every vertex of `L ∪ X` inside `G[L ∪ X]`.
pub fn solve_cograph_modulator_with(g: &Graph, x: &VertexSet, jobs: usize) -> Result<SolveResult> {
    x.validate(g.n()).map_err(|e| ClubError::InvalidModulator(e.to_string()))?;
    let outside = VertexSet::full(g.n()).difference(x);
    let tree = build_cotree_on(g, &outside).map_err(|e| match e {
        ClubError::NotACograph(p) => {
            ClubError::InvalidModulator(format!("deleting {x:?} leaves the induced path {p:?}"))
        }
        other => other,
    })?;
    check_modulator_size(x)?;
    let start = Instant::now();
    let (best, mut stats) = best_over_guesses(x, jobs, |xp| {
        let dp = GammaDp::new(g, x, xp, &tree)?;
        let entries = dp.tables.iter().map(|t| t.len() as u64).sum();
        let witness = dp.best_witness();
        Ok((witness, SolveStats { table_entries: entries, ..SolveStats::default() }))
    })?;
    stats.elapsed = start.elapsed();
    SolveResult::new(best, stats).verified(g, 2, "solve_cograph_modulator")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Derivation {
    /// The cleaned graph `G^P` already has the distance property; `L` is all of it.
    Whole,
    /// Series node: the entry of one child.
    Child(usize),
    /// Parallel node: entries of both children with these class sets.
    Split(u32, u32),
}

pub(crate) struct GammaDp<'a> {
    g: &'a Graph,
    tree: &'a Cotree,
    xp: Vec<usize>,
    part: TwinPartition,
    sig: Vec<u32>,
    /// Per cotree node: class set -> (size, derivation). Missing keys are -inf.
    pub tables: Vec<BTreeMap<u32, (usize, Derivation)>>,
}

impl<'a> GammaDp<'a> {
    pub(crate) fn new(g: &'a Graph, x: &VertexSet, xp: &VertexSet, tree: &'a Cotree) -> Result<GammaDp<'a>> {
        x.validate(g.n())?;
        // Members of `x \ X` get classes too, but never occur in the cotree.
        let part = twin_classes(g, xp)?;
        let sig: Vec<u32> = (0..part.len()).map(|c| part.signature_bits(c) as u32).collect();
        let mut dp = GammaDp { g, tree, xp: xp.as_slice().to_vec(), part, sig, tables: Vec::new() };
        for node in 0..tree.nodes.len() {
            let table = dp.fill(node);
            dp.tables.push(table);
        }
        Ok(dp)
    }

    fn class_mask(&self, vertices: &VertexSet) -> u32 {
        vertices.iter().fold(0, |m, v| m | 1 << self.part.class_of(v).expect("outside vertex"))
    }

    /// Cleans `(V(P) ∩ V(T)) ∪ X` and returns the surviving outside vertices
    /// together with whether they have the distance property.
    fn cleaned(&self, node: usize, classes: u32) -> (Vec<usize>, bool) {
        let g = self.g;
        let mut inside = vec![false; g.n()];
        for &a in &self.xp {
            inside[a] = true;
        }
        let mut rest: Vec<usize> = self.tree.nodes[node]
            .vertices
            .iter()
            .filter(|&v| classes >> self.part.class_of(v).expect("outside vertex") & 1 == 1)
            .collect();
        for &v in &rest {
            inside[v] = true;
        }
        loop {
            let mut far = vec![false; g.n()];
            for &a in &self.xp {
                let dist = bfs_limited(g, a, Some(&inside), 2);
                for &v in &rest {
                    if dist[v] > 2 {
                        far[v] = true;
                    }
                }
            }
            if !rest.iter().any(|&v| far[v]) {
                break;
            }
            for &v in &rest {
                if far[v] {
                    inside[v] = false;
                }
            }
            rest.retain(|&v| !far[v]);
        }
        let good = rest.iter().all(|&u| {
            let dist = bfs_limited(g, u, Some(&inside), 2);
            rest.iter().chain(self.xp.iter()).all(|&w| dist[w] <= 2)
        });
        (rest, good)
    }

    fn fill(&self, node: usize) -> BTreeMap<u32, (usize, Derivation)> {
        let n = &self.tree.nodes[node];
        let mut table = BTreeMap::from([(0u32, (0usize, Derivation::Whole))]);
        if let NodeKind::Leaf(v) = n.kind {
            let (rest, _) = self.cleaned(node, self.class_mask(&n.vertices));
            if rest == [v] {
                table.insert(self.class_mask(&n.vertices), (1, Derivation::Whole));
            }
            return table;
        }
        let (left, right) = (n.children[0], n.children[1]);
        let mut combined: BTreeMap<u32, (usize, Derivation)> = BTreeMap::new();
        let mut offer = |key: u32, value: usize, how: Derivation| {
            if combined.get(&key).is_none_or(|&(v, _)| value > v) {
                combined.insert(key, (value, how));
            }
        };
        if n.kind == NodeKind::Series {
            for (child, t) in [(left, &self.tables[left]), (right, &self.tables[right])] {
                for (&key, &(value, _)) in t {
                    offer(key, value, Derivation::Child(child));
                }
            }
        } else {
            for (&k1, &(v1, _)) in &self.tables[left] {
                for (&k2, &(v2, _)) in &self.tables[right] {
                    // Vertices on different sides are non-adjacent and must meet in `X`.
                    let consistent = (0..self.sig.len())
                        .filter(|&a| k1 >> a & 1 == 1)
                        .all(|a| (0..self.sig.len()).filter(|&b| k2 >> b & 1 == 1).all(|b| self.sig[a] & self.sig[b] != 0));
                    if consistent {
                        offer(k1 | k2, v1 + v2, Derivation::Split(k1, k2));
                    }
                }
            }
        }
        let present = self.class_mask(&n.vertices);
        let mut sub = present;
        loop {
            if sub != 0 {
                let (rest, good) = self.cleaned(node, sub);
                let realized = self.class_mask(&rest.iter().copied().collect());
                if realized == sub {
                    if good {
                        table.insert(sub, (rest.len(), Derivation::Whole));
                    } else if let Some(&entry) = combined.get(&sub) {
                        table.insert(sub, entry);
                    }
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & present;
        }
        table
    }

    /// Vertices `L` behind entry `(node, classes)`.
    pub(crate) fn reconstruct(&self, node: usize, classes: u32) -> Vec<usize> {
        let Some(&(_, how)) = self.tables[node].get(&classes) else {
            return Vec::new();
        };
        if classes == 0 {
            return Vec::new();
        }
        match how {
            Derivation::Whole => self.cleaned(node, classes).0,
            Derivation::Child(c) => self.reconstruct(c, classes),
            Derivation::Split(k1, k2) => {
                let n = &self.tree.nodes[node];
                let mut out = self.reconstruct(n.children[0], k1);
                out.extend(self.reconstruct(n.children[1], k2));
                out
            }
        }
    }

    pub(crate) fn best_witness(&self) -> Option<VertexSet> {
        let needs = pairs_needing_outside_neighbor(self.g, &self.xp);
        let empty = BTreeMap::from([(0u32, (0usize, Derivation::Whole))]);
        let root_table = self.tree.root.map_or(&empty, |r| &self.tables[r]);
        let (&key, _) = root_table
            .iter()
            .filter(|(&key, _)| {
                needs.iter().all(|&(i, j)| {
                    (0..self.sig.len()).any(|c| key >> c & 1 == 1 && self.sig[c] >> i & 1 == 1 && self.sig[c] >> j & 1 == 1)
                })
            })
            .max_by(|a, b| a.1 .0.cmp(&b.1 .0).then(b.0.cmp(a.0)))?;
        let mut members = self.xp.clone();
        if let Some(r) = self.tree.root {
            members.extend(self.reconstruct(r, key));
        }
        let w = VertexSet::from(members);
        (!w.is_empty()).then_some(w)
    }

    #[cfg(test)]
    pub(crate) fn tree(&self) -> &Cotree {
        self.tree
    }
}
