use std::time::Instant;

use super::{check_s, heuristic_ball, SolveResult, SolveStats};
use crate::error::{ClubError, Result};
use crate::graph::{bfs_limited, induce, twin_groups, Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualOptions {
    pub s: usize,
    /// Only s-clubs larger than this are searched for.
    pub lower_bound: usize,
    /// Stop as soon as an s-club of at least this size is known.
    pub stop_at: Option<usize>,
    /// Fail with a budget error after this many search-tree nodes.
    pub node_limit: Option<u64>,
}

impl DualOptions {
    pub fn new(s: usize) -> DualOptions {
        DualOptions { s, lower_bound: 0, stop_at: None, node_limit: None }
    }
}

/// Maximum s-club by branching on far-apart vertex pairs: while the alive
/// graph has two vertices at distance more than `s`, one of them is deleted
/// in each branch. Branches with no more alive vertices than the best known
/// solution are cut. The second branch keeps the vertex deleted by the
/// first, and every vertex farther than `s` from a kept vertex is deleted
/// without branching, since deletions never shorten distances.
///
/// The search starts from the ball heuristic. The result is a maximum s-club
/// whenever the optimum exceeds `lower_bound`; otherwise the heuristic
/// witness is returned.
pub fn dual_branching(g: &Graph, s: usize, lower_bound: usize) -> Result<SolveResult> {
    dual_branching_with(g, &DualOptions { lower_bound, ..DualOptions::new(s) })
}

pub fn dual_branching_with(g: &Graph, opts: &DualOptions) -> Result<SolveResult> {
    check_s(opts.s, 2)?;
    let groups: Vec<Vec<usize>> = g.vertices().map(|v| vec![v]).collect();
    Search::run(g, g, groups.clone(), groups, opts, "dual_branching")
}

/// Same search over twin groups. Twins are interchangeable inside an s-club
/// with at least two vertices, so each group is kept or deleted as a whole
/// and the search runs on at most two representatives per group, weighted by
/// group size. This shrinks the search tree on gadget-heavy instances.
pub fn dual_branching_twins(g: &Graph, s: usize, lower_bound: usize) -> Result<SolveResult> {
    check_s(s, 2)?;
    let opts = DualOptions { lower_bound, ..DualOptions::new(s) };
    let twin = twin_groups(g);
    let reps: VertexSet = twin.iter().flat_map(|grp| grp.iter().take(2)).collect();
    let reduced = induce(g, &reps)?;
    let mut inner_of = vec![usize::MAX; g.n()];
    for (i, &v) in reduced.original.iter().enumerate() {
        inner_of[v] = i;
    }
    let groups: Vec<Vec<usize>> = twin
        .iter()
        .map(|grp| grp.iter().take(2).map(|v| inner_of[v]).collect())
        .collect();
    let members = twin.into_iter().map(VertexSet::into_vec).collect();
    Search::run(&reduced.graph, g, groups, members, &opts, "dual_branching_twins")
}

struct Search<'a> {
    /// Graph the branching runs on (possibly reduced to representatives).
    g: &'a Graph,
    /// Graph the witness lives in.
    outer: &'a Graph,
    s: usize,
    group_of: Vec<usize>,
    /// Representatives per group, in `g` ids.
    groups: Vec<Vec<usize>>,
    weight: Vec<usize>,
    alive: Vec<bool>,
    /// Groups fixed into the solution by an earlier branch.
    kept: Vec<bool>,
    degree: Vec<usize>,
    alive_weight: usize,
    best_size: usize,
    best_groups: Option<Vec<bool>>,
    nodes: u64,
    stop_at: Option<usize>,
    node_limit: Option<u64>,
    /// Outer-graph members of each group.
    members: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn run(
        g: &'a Graph,
        outer: &'a Graph,
        groups: Vec<Vec<usize>>,
        members: Vec<Vec<usize>>,
        opts: &DualOptions,
        name: &str,
    ) -> Result<SolveResult> {
        let start = Instant::now();
        let seed = heuristic_ball(outer, opts.s)?;
        let mut group_of = vec![usize::MAX; g.n()];
        for (i, grp) in groups.iter().enumerate() {
            for &v in grp {
                group_of[v] = i;
            }
        }
        let weight: Vec<usize> = members.iter().map(Vec::len).collect();
        let mut search = Search {
            g,
            outer,
            s: opts.s,
            group_of,
            weight,
            alive: vec![true; g.n()],
            kept: vec![false; groups.len()],
            degree: g.vertices().map(|v| g.degree(v)).collect(),
            alive_weight: outer.n(),
            best_size: seed.size.max(opts.lower_bound),
            best_groups: None,
            nodes: 0,
            stop_at: opts.stop_at,
            node_limit: opts.node_limit,
            groups,
            members,
        };
        search.branch()?;
        let best = match &search.best_groups {
            Some(kept) => kept
                .iter()
                .enumerate()
                .filter(|(_, &k)| k)
                .flat_map(|(i, _)| search.members[i].iter().copied())
                .collect(),
            None => seed.best,
        };
        let stats = SolveStats { branch_nodes: search.nodes, table_entries: 0, elapsed: start.elapsed() };
        SolveResult::new(best, stats).verified(search.outer, opts.s, name)
    }

    fn done(&self) -> bool {
        self.stop_at.is_some_and(|t| self.best_size >= t)
    }

    /// A pair at distance more than `s` with the largest combined alive
    /// degree, ties broken by the smallest ids.
    fn far_pair(&self) -> Option<(usize, usize)> {
        let mut chosen: Option<(usize, usize, usize)> = None;
        for u in self.g.vertices().filter(|&u| self.alive[u]) {
            let dist = bfs_limited(self.g, u, Some(&self.alive), self.s);
            for v in (u + 1..self.g.n()).filter(|&v| self.alive[v] && dist[v] > self.s) {
                let score = self.degree[u] + self.degree[v];
                if chosen.is_none_or(|(best, _, _)| score > best) {
                    chosen = Some((score, u, v));
                }
            }
        }
        chosen.map(|(_, u, v)| (u, v))
    }

    fn set_group(&mut self, group: usize, alive: bool) {
        for i in 0..self.groups[group].len() {
            let v = self.groups[group][i];
            self.alive[v] = alive;
            for &w in self.g.neighbors(v) {
                if alive {
                    self.degree[w] += 1;
                } else {
                    self.degree[w] -= 1;
                }
            }
        }
        if alive {
            self.alive_weight += self.weight[group];
        } else {
            self.alive_weight -= self.weight[group];
        }
    }

    /// Groups that cannot share an s-club with the kept groups, or `None`
    /// when two kept groups are already too far apart.
    fn forced_deletions(&mut self) -> Option<Vec<usize>> {
        let mut deleted = Vec::new();
        loop {
            let mut found = Vec::new();
            for grp in (0..self.groups.len()).filter(|&i| self.kept[i]) {
                for &r in &self.groups[grp] {
                    let dist = bfs_limited(self.g, r, Some(&self.alive), self.s);
                    for w in (0..self.g.n()).filter(|&w| self.alive[w] && dist[w] > self.s) {
                        let gw = self.group_of[w];
                        if self.kept[gw] {
                            for &grp in deleted.iter().rev() {
                                self.set_group(grp, true);
                            }
                            return None;
                        }
                        if !found.contains(&gw) {
                            found.push(gw);
                        }
                    }
                }
            }
            if found.is_empty() {
                return Some(deleted);
            }
            for grp in found {
                if self.alive[self.groups[grp][0]] {
                    self.set_group(grp, false);
                    deleted.push(grp);
                }
            }
        }
    }

    fn branch(&mut self) -> Result<()> {
        self.nodes += 1;
        if let Some(limit) = self.node_limit {
            if self.nodes > limit {
                return Err(ClubError::Budget(format!("branching exceeded {limit} search-tree nodes")));
            }
        }
        let Some(deleted) = self.forced_deletions() else {
            return Ok(());
        };
        let r = self.explore();
        for &grp in deleted.iter().rev() {
            self.set_group(grp, true);
        }
        r
    }

    fn explore(&mut self) -> Result<()> {
        if self.alive_weight <= self.best_size || self.done() {
            return Ok(());
        }
        let Some((u, v)) = self.far_pair() else {
            self.best_size = self.alive_weight;
            let mut kept = vec![false; self.groups.len()];
            for (i, grp) in self.groups.iter().enumerate() {
                kept[i] = self.alive[grp[0]];
            }
            self.best_groups = Some(kept);
            return Ok(());
        };
        let (gu, gv) = (self.group_of[u], self.group_of[v]);
        if gu == gv {
            // Two twins without a common neighbor: the group only fits in a
            // single-vertex solution, which the seed already covers.
            if self.alive_weight - self.weight[gu] <= self.best_size {
                return Ok(());
            }
            self.set_group(gu, false);
            let r = self.branch();
            self.set_group(gu, true);
            return r;
        }
        // Solutions without u are covered by the first branch.
        let was_kept = self.kept[gu];
        for (i, grp) in [gu, gv].into_iter().enumerate() {
            if self.alive_weight - self.weight[grp] <= self.best_size {
                continue;
            }
            self.set_group(grp, false);
            if i == 1 {
                self.kept[gu] = true;
            }
            let r = self.branch();
            self.kept[gu] = was_kept;
            self.set_group(grp, true);
            r?;
            if self.done() {
                break;
            }
        }
        Ok(())
    }
}
