use std::collections::BTreeMap;
use std::time::Instant;

use super::{best_over_guesses, check_modulator_size, guess_view, pairs_needing_outside_neighbor};
use crate::error::Result;
use crate::exact::{SolveResult, SolveStats};
use crate::graph::{Graph, VertexSet};
use crate::params::{validate_modulator, ModulatorTarget};

/// Maximum 2-club when `G - x` is a cluster graph, by dynamic programming
/// over the clusters and the sets of twin classes used so far.
pub fn solve_cluster_modulator(g: &Graph, x: &VertexSet) -> Result<SolveResult> {
    solve_cluster_modulator_with(g, x, 1)
}

pub fn solve_cluster_modulator_with(g: &Graph, x: &VertexSet, jobs: usize) -> Result<SolveResult> {
    validate_modulator(g, ModulatorTarget::Cluster, x)?;
    check_modulator_size(x)?;
    let start = Instant::now();
    let (best, mut stats) = best_over_guesses(x, jobs, |xp| solve_guess(g, x, xp))?;
    stats.elapsed = start.elapsed();
    SolveResult::new(best, stats).verified(g, 2, "solve_cluster_modulator")
}

#[derive(Clone, Copy)]
struct Entry {
    value: usize,
    prev: u32,
    /// Classes taken from the current cluster.
    taken: u32,
}

fn submasks(mask: u32) -> impl Iterator<Item = u32> {
    // All submasks of `mask`, from `mask` down to 0.
    let mut next = Some(mask);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & mask) };
        Some(cur)
    })
}

fn solve_guess(g: &Graph, x: &VertexSet, xp: &VertexSet) -> Result<(Option<VertexSet>, SolveStats)> {
    let view = guess_view(g, x, xp, true)?;
    let h = &view.sub.graph;
    let k = view.xs.len();
    let classes = view.part.len();
    let sig: Vec<u32> = (0..classes).map(|c| view.part.signature_bits(c) as u32).collect();
    // Neighbors of each `X'` member inside `X'`, as signature bits.
    let x_nbrs: Vec<u32> = view
        .xs
        .iter()
        .map(|&a| (0..k).filter(|&j| h.has_edge(a, view.xs[j])).fold(0, |m, j| m | 1 << j))
        .collect();
    // Classes `a` and `b` conflict when their signatures are disjoint; vertices
    // of different clusters are then at distance more than two.
    let conflict: Vec<u32> = (0..classes)
        .map(|a| (0..classes).filter(|&b| sig[a] & sig[b] == 0).fold(0, |m, b| m | 1 << b))
        .collect();

    let clusters = outside_clusters(h, &view.in_xs);
    let mut tables: Vec<BTreeMap<u32, Entry>> = Vec::with_capacity(clusters.len() + 1);
    tables.push(BTreeMap::from([(0, Entry { value: 0, prev: 0, taken: 0 })]));
    let mut stats = SolveStats::default();
    for cluster in &clusters {
        let class_size = |c: usize| cluster.iter().filter(|&&v| view.part.class_of(v) == Some(c)).count();
        let present = cluster.iter().fold(0u32, |m, &v| m | 1 << view.part.class_of(v).expect("outside vertex"));
        // s(i, T'') for every T'' realized in this cluster.
        let options: Vec<(u32, usize)> = submasks(present)
            .filter_map(|taken| {
                let union = (0..classes).filter(|&c| taken >> c & 1 == 1).fold(0, |m, c| m | sig[c]);
                let feasible = (0..classes).filter(|&c| taken >> c & 1 == 1).all(|c| {
                    (0..k).filter(|&j| sig[c] >> j & 1 == 0).all(|j| {
                        // The missing `X'` neighbor must be reached through the
                        // clique or through another `X'` member.
                        union >> j & 1 == 1 || sig[c] & x_nbrs[j] != 0
                    })
                });
                let size = (0..classes).filter(|&c| taken >> c & 1 == 1).map(class_size).sum();
                feasible.then_some((taken, size))
            })
            .collect();
        let prev_table = tables.last().expect("table for the empty prefix");
        let mut next: BTreeMap<u32, Entry> = BTreeMap::new();
        for (&prev, entry) in prev_table {
            for &(taken, size) in &options {
                let clash = (0..classes).any(|c| taken >> c & 1 == 1 && conflict[c] & prev != 0);
                if clash {
                    continue;
                }
                let key = prev | taken;
                let value = entry.value + size;
                if next.get(&key).is_none_or(|e| value > e.value) {
                    next.insert(key, Entry { value, prev, taken });
                }
            }
        }
        debug_assert!(next.len() <= 1usize << classes);
        stats.table_entries += next.len() as u64;
        tables.push(next);
    }

    let needs = pairs_needing_outside_neighbor(h, &view.xs);
    let accepted = tables.last().expect("final table").iter().filter(|(&key, _)| {
        needs.iter().all(|&(i, j)| {
            (0..classes).any(|c| key >> c & 1 == 1 && sig[c] >> i & 1 == 1 && sig[c] >> j & 1 == 1)
        })
    });
    let Some((&key, _)) = accepted.max_by(|a, b| a.1.value.cmp(&b.1.value).then(b.0.cmp(a.0))) else {
        return Ok((None, stats));
    };
    // Walk the back-pointers to collect the chosen classes per cluster.
    let mut inner: Vec<usize> = view.xs.clone();
    let mut key = key;
    for (i, cluster) in clusters.iter().enumerate().rev() {
        let entry = tables[i + 1][&key];
        inner.extend(
            cluster
                .iter()
                .copied()
                .filter(|&v| entry.taken >> view.part.class_of(v).expect("outside vertex") & 1 == 1),
        );
        key = entry.prev;
    }
    let witness = view.sub.to_original(&VertexSet::from(inner));
    Ok((Some(witness), stats))
}

/// Connected components of the graph restricted to vertices outside `X'`.
fn outside_clusters(h: &Graph, in_xs: &[bool]) -> Vec<Vec<usize>> {
    let mut seen = in_xs.to_vec();
    let mut out = Vec::new();
    for start in h.vertices() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut members = vec![start];
        let mut i = 0;
        while i < members.len() {
            for &w in h.neighbors(members[i]) {
                if !seen[w] {
                    seen[w] = true;
                    members.push(w);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}
