//! Exact 2-club solver whose running time is polynomial for every fixed
//! h-index (the exponent grows with the h-index).

use std::time::Instant;

use rayon::prelude::*;

use crate::error::{ClubError, Result};
use crate::exact::{SolveResult, SolveStats};
use crate::graph::{bfs_limited, verify_s_club, Graph, VertexSet};
use crate::parallel::with_jobs;
use crate::params::h_index;

/// Default largest h-index attempted.
pub const DEFAULT_HINDEX_CAP: usize = 2;

pub fn solve_hindex_xp(g: &Graph, cap: usize) -> Result<SolveResult> {
    solve_hindex_xp_with(g, cap, 1)
}

/// Let `k` be the h-index and `X'` the (at most `k`) vertices of degree more
/// than `k`. The solver guesses `X = X' ∩ S`, then one center or "empty" per
/// twin class with respect to `X`, then for classes in conflict (signatures
/// without a common vertex) the surviving members near the center. After
/// every commitment the graph is cleaned: vertices not within distance two
/// of all committed vertices are removed until none is left, and a branch
/// dies when a committed vertex would be removed.
pub fn solve_hindex_xp_with(g: &Graph, cap: usize, jobs: usize) -> Result<SolveResult> {
    let k = h_index(g);
    if k > cap {
        return Err(ClubError::Budget(format!("h-index {k} exceeds the cap {cap}")));
    }
    let start = Instant::now();
    let high: Vec<usize> = g.vertices().filter(|&v| g.degree(v) > k).collect();
    // Guesses by increasing size, then by mask.
    let mut masks: Vec<usize> = (0..1usize << high.len()).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    let run = |mask: usize| -> Result<(Option<Vec<bool>>, u64)> {
        let x: Vec<usize> = (0..high.len()).filter(|i| mask >> i & 1 == 1).map(|i| high[i]).collect();
        let mut search = XpSearch { g, x: x.clone(), best: None, best_size: 0, nodes: 0 };
        let mut state = State { alive: vec![true; g.n()], committed: x.clone() };
        for (i, &v) in high.iter().enumerate() {
            if mask >> i & 1 == 0 {
                state.alive[v] = false;
            }
        }
        if state.clean(g) {
            let classes = search.classes(&state);
            search.assign(&classes, 0, state, &mut Vec::new())?;
        }
        Ok((search.best, search.nodes))
    };
    let results: Vec<Result<(Option<Vec<bool>>, u64)>> = if jobs <= 1 {
        masks.iter().map(|&m| run(m)).collect()
    } else {
        with_jobs(jobs, || masks.par_iter().map(|&m| run(m)).collect())
    };
    let mut best = VertexSet::new();
    let mut nodes = 0;
    for r in results {
        let (alive, count) = r?;
        nodes += count;
        if let Some(alive) = alive {
            let set: VertexSet = (0..g.n()).filter(|&v| alive[v]).collect();
            if set.len() > best.len() {
                best = set;
            }
        }
    }
    let stats = SolveStats { branch_nodes: nodes, table_entries: 0, elapsed: start.elapsed() };
    SolveResult::new(best, stats).verified(g, 2, "solve_hindex_xp")
}

#[derive(Clone, Debug)]
struct State {
    alive: Vec<bool>,
    /// Vertices committed to the solution.
    committed: Vec<usize>,
}

impl State {
    /// Removes vertices not within distance two of every committed vertex
    /// until none is left. Returns `false` if a committed vertex goes.
    fn clean(&mut self, g: &Graph) -> bool {
        loop {
            let mut far = vec![false; g.n()];
            for &p in &self.committed {
                if !self.alive[p] {
                    return false;
                }
                let dist = bfs_limited(g, p, Some(&self.alive), 2);
                for v in g.vertices().filter(|&v| self.alive[v] && dist[v] > 2) {
                    far[v] = true;
                }
            }
            if !far.iter().any(|&f| f) {
                return true;
            }
            if self.committed.iter().any(|&p| far[p]) {
                return false;
            }
            for v in g.vertices().filter(|&v| far[v]) {
                self.alive[v] = false;
            }
        }
    }
}

/// Twin class with respect to `X`: signature bits over `X` and members.
struct Class {
    sig: u64,
    members: Vec<usize>,
}

struct XpSearch<'a> {
    g: &'a Graph,
    x: Vec<usize>,
    best: Option<Vec<bool>>,
    best_size: usize,
    nodes: u64,
}

impl XpSearch<'_> {
    fn classes(&self, state: &State) -> Vec<Class> {
        let mut out: Vec<Class> = Vec::new();
        for v in self.g.vertices().filter(|&v| state.alive[v] && !self.x.contains(&v)) {
            let sig = self
                .x
                .iter()
                .enumerate()
                .filter(|(_, &a)| self.g.has_edge(v, a))
                .fold(0u64, |m, (i, _)| m | 1 << i);
            match out.iter_mut().find(|c| c.sig == sig) {
                Some(c) => c.members.push(v),
                None => out.push(Class { sig, members: vec![v] }),
            }
        }
        out
    }

    /// Chooses a center, or none, for class `i` and the following classes.
    fn assign(&mut self, classes: &[Class], i: usize, state: State, centers: &mut Vec<Option<usize>>) -> Result<()> {
        self.nodes += 1;
        if i == classes.len() {
            let conflicted: Vec<usize> = (0..classes.len())
                .filter(|&a| {
                    centers[a].is_some()
                        && (0..classes.len()).any(|b| centers[b].is_some() && classes[a].sig & classes[b].sig == 0)
                })
                .collect();
            return self.restrict(classes, centers, &conflicted, 0, state);
        }
        // "Empty": drop the whole class.
        let mut empty = state.clone();
        for &v in &classes[i].members {
            empty.alive[v] = false;
        }
        if empty.clean(self.g) {
            centers.push(None);
            self.assign(classes, i + 1, empty, centers)?;
            centers.pop();
        }
        for &c in classes[i].members.iter().filter(|&&c| state.alive[c]) {
            let mut next = state.clone();
            next.committed.push(c);
            if next.clean(self.g) {
                centers.push(Some(c));
                self.assign(classes, i + 1, next, centers)?;
                centers.pop();
            }
        }
        Ok(())
    }

    /// For each conflicted class, keeps a subset of its members within
    /// distance four of the center in `G - X`, always containing the center.
    fn restrict(
        &mut self,
        classes: &[Class],
        centers: &[Option<usize>],
        conflicted: &[usize],
        j: usize,
        state: State,
    ) -> Result<()> {
        self.nodes += 1;
        if j == conflicted.len() {
            return self.record(state);
        }
        let class = &classes[conflicted[j]];
        let center = centers[conflicted[j]].expect("conflicted classes have centers");
        let mut without_x = state.alive.clone();
        for &a in &self.x {
            without_x[a] = false;
        }
        let dist = bfs_limited(self.g, center, Some(&without_x), 4);
        let near: Vec<usize> = class
            .members
            .iter()
            .copied()
            .filter(|&v| v != center && state.alive[v] && dist[v] <= 4)
            .collect();
        if near.len() >= 63 {
            return Err(ClubError::Budget(format!(
                "{} class members near center {center}; the subset enumeration is capped",
                near.len()
            )));
        }
        for pick in 0u64..1 << near.len() {
            let mut next = state.clone();
            for &v in class.members.iter().filter(|&&v| v != center) {
                match near.iter().position(|&w| w == v) {
                    Some(i) if pick >> i & 1 == 1 => next.committed.push(v),
                    _ => next.alive[v] = false,
                }
            }
            if next.clean(self.g) {
                self.restrict(classes, centers, conflicted, j + 1, next)?;
            }
        }
        Ok(())
    }

    fn record(&mut self, state: State) -> Result<()> {
        let set: VertexSet = self.g.vertices().filter(|&v| state.alive[v]).collect();
        if !verify_s_club(self.g, 2, &set) {
            return Err(ClubError::Verification(format!(
                "h-index branch with committed vertices {:?} left {set:?}, which is not a 2-club",
                state.committed
            )));
        }
        if set.len() > self.best_size || self.best.is_none() {
            self.best_size = set.len();
            self.best = Some(state.alive);
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::oracle_max_2club;

    #[test]
    fn stars_and_cycles() {
        assert_eq!(solve_hindex_xp(&Graph::star(5), 2).unwrap().size, 6);
        assert_eq!(solve_hindex_xp(&Graph::cycle(5), 2).unwrap().size, 5);
        assert_eq!(solve_hindex_xp(&Graph::cycle(7), 2).unwrap().size, 3);
        assert_eq!(solve_hindex_xp(&Graph::empty(3), 2).unwrap().size, 1);
        assert_eq!(solve_hindex_xp(&Graph::empty(0), 2).unwrap().size, 0);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(solve_hindex_xp(&Graph::complete(5), 2), Err(ClubError::Budget(_))));
        assert!(solve_hindex_xp(&Graph::complete(4), 3).is_ok());
    }

    #[test]
    fn cleaning_is_idempotent() {
        let g = Graph::path(6);
        let mut s = State { alive: vec![true; 6], committed: vec![0] };
        assert!(s.clean(&g));
        let once = s.alive.clone();
        assert_eq!(once, vec![true, true, true, false, false, false]);
        assert!(s.clean(&g));
        assert_eq!(s.alive, once);
        let mut s = State { alive: vec![true; 6], committed: vec![0, 5] };
        assert!(!s.clean(&g));
    }

    #[test]
    fn two_hubs_with_pendant_paths() {
        let g = Graph::from_edges(
            9,
            [(0, 1), (0, 2), (0, 3), (1, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 1)],
        )
        .unwrap();
        assert_eq!(solve_hindex_xp(&g, 2).unwrap().size, oracle_max_2club(&g).unwrap().size);
    }
}
