//! Immutable simple undirected graphs and the distance machinery every solver
//! relies on.
//!
//! Vertices are dense ids `0..n`. Distances use [`UNREACHABLE`] as an explicit
//! infinity, so "distance greater than `s`" always includes disconnected pairs.

mod twins;
mod vertex_set;

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;

use crate::error::{ClubError, Result};

pub use twins::{twin_classes, twin_groups, TwinClass, TwinPartition};
pub use vertex_set::VertexSet;

/// Distance sentinel for vertices in another component.
pub const UNREACHABLE: usize = usize::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

/// Accumulates edges; duplicate edges collapse, self-loops are rejected at build time.
#[derive(Clone, Debug, Default)]
pub struct GraphBuilder {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder { n, edges: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Appends a fresh vertex and returns its id.
    pub fn add_vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    pub fn add_vertices(&mut self, count: usize) -> std::ops::Range<usize> {
        let start = self.n;
        self.n += count;
        start..self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> &mut Self {
        self.edges.push((u, v));
        self
    }

    pub fn add_clique(&mut self, vertices: &[usize]) -> &mut Self {
        for (i, &u) in vertices.iter().enumerate() {
            for &v in &vertices[i + 1..] {
                self.edges.push((u, v));
            }
        }
        self
    }

    /// Joins every vertex of `left` to every vertex of `right`.
    pub fn add_biclique(&mut self, left: &[usize], right: &[usize]) -> &mut Self {
        for &u in left {
            for &v in right {
                self.edges.push((u, v));
            }
        }
        self
    }

    pub fn build(self) -> Result<Graph> {
        Graph::from_edges(self.n, self.edges)
    }
}

impl Graph {
    /// Graph on `n` isolated vertices.
    pub fn empty(n: usize) -> Graph {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    pub fn complete(n: usize) -> Graph {
        let mut b = GraphBuilder::new(n);
        b.add_clique(&(0..n).collect::<Vec<_>>());
        b.build().expect("clique edges are valid")
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are valid")
    }

    /// `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("star edges are valid")
    }

    pub fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::from_edges(10, outer.chain(spokes).chain(inner)).expect("petersen edges are valid")
    }

    /// Builds a graph from an edge list. Parallel edges collapse into one.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(ClubError::InvalidVertex { vertex: w, n });
                }
            }
            if u == v {
                return Err(ClubError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut twice_m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            twice_m += list.len();
        }
        Ok(Graph { adj, m: twice_m / 2 })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() { (u, v) } else { (v, u) };
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(ClubError::InvalidVertex { vertex: v, n: self.n() })
        }
    }

    /// Adjacency rows as bitsets. Quadratic memory; only for desk-scale graphs.
    pub fn adjacency_bitsets(&self) -> Vec<FixedBitSet> {
        self.adj
            .iter()
            .map(|list| {
                let mut row = FixedBitSet::with_capacity(self.n());
                for &v in list {
                    row.insert(v);
                }
                row
            })
            .collect()
    }
}

/// Single-source shortest path lengths; unreachable entries are [`UNREACHABLE`].
pub fn bfs_distances(g: &Graph, source: usize) -> Result<Vec<usize>> {
    g.check_vertex(source)?;
    Ok(bfs_limited(g, source, None, UNREACHABLE))
}

/// BFS restricted to `alive` vertices (all if `None`), stopping at depth `limit`.
pub(crate) fn bfs_limited(g: &Graph, source: usize, alive: Option<&[bool]>, limit: usize) -> Vec<usize> {
    let mut dist = vec![UNREACHABLE; g.n()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        if dist[u] >= limit {
            continue;
        }
        for &w in g.neighbors(u) {
            if dist[w] == UNREACHABLE && alive.is_none_or(|a| a[w]) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Closed ball `{u : dist(u, v) <= radius}`, always containing `v`.
pub fn ball(g: &Graph, v: usize, radius: usize) -> Result<VertexSet> {
    g.check_vertex(v)?;
    let dist = bfs_limited(g, v, None, radius);
    Ok(dist.iter().enumerate().filter(|(_, &d)| d <= radius).map(|(u, _)| u).collect())
}

/// Vertex pairs of `g` at distance more than `s` inside `G[cand]`, first found in
/// lexicographic order. `None` means `cand` is an `s`-club.
pub fn find_violation(g: &Graph, s: usize, cand: &VertexSet) -> Option<(usize, usize)> {
    if cand.validate(g.n()).is_err() {
        let bad = cand.iter().find(|&v| v >= g.n()).unwrap_or_default();
        return Some((bad, bad));
    }
    let inside = cand.to_mask(g.n());
    for u in cand.iter() {
        let dist = bfs_limited(g, u, Some(&inside), s);
        if let Some(v) = cand.iter().find(|&v| dist[v] > s) {
            return Some((u.min(v), u.max(v)));
        }
    }
    None
}

/// Whether `G[cand]` has diameter at most `s`. Empty sets and singletons qualify.
pub fn verify_s_club(g: &Graph, s: usize, cand: &VertexSet) -> bool {
    find_violation(g, s, cand).is_none()
}

/// Subgraph induced by a vertex set, with the map back to the outer ids.
#[derive(Clone, Debug)]
pub struct InducedGraph {
    pub graph: Graph,
    /// `original[i]` is the outer id of inner vertex `i`.
    pub original: Vec<usize>,
}

impl InducedGraph {
    pub fn to_original(&self, inner: &VertexSet) -> VertexSet {
        inner.iter().map(|v| self.original[v]).collect()
    }
}

/// `G[keep]`, relabeled to `0..|keep|` in increasing id order.
pub fn induce(g: &Graph, keep: &VertexSet) -> Result<InducedGraph> {
    keep.validate(g.n())?;
    let mut inner = vec![UNREACHABLE; g.n()];
    for (i, v) in keep.iter().enumerate() {
        inner[v] = i;
    }
    let adj = keep
        .iter()
        .map(|v| {
            g.neighbors(v)
                .iter()
                .filter(|&&w| inner[w] != UNREACHABLE)
                .map(|&w| inner[w])
                .collect::<Vec<_>>()
        })
        .collect::<Vec<_>>();
    let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
    Ok(InducedGraph { graph: Graph { adj, m }, original: keep.as_slice().to_vec() })
}

/// `G - remove`.
pub fn delete_vertices(g: &Graph, remove: &VertexSet) -> Result<InducedGraph> {
    induce(g, &VertexSet::full(g.n()).difference(remove))
}

pub fn complement(g: &Graph) -> Graph {
    let n = g.n();
    let adj = (0..n)
        .map(|u| {
            let mut row = Vec::with_capacity(n - 1 - g.degree(u));
            let mut it = g.neighbors(u).iter().peekable();
            for v in 0..n {
                if it.peek() == Some(&&v) {
                    it.next();
                } else if v != u {
                    row.push(v);
                }
            }
            row
        })
        .collect::<Vec<_>>();
    let m = n * n.saturating_sub(1) / 2 - g.m();
    Graph { adj, m }
}

/// Connected components, each sorted, ordered by smallest member.
pub fn components(g: &Graph) -> Vec<VertexSet> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for start in g.vertices() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut members = vec![start];
        let mut i = 0;
        while i < members.len() {
            let u = members[i];
            i += 1;
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    members.push(w);
                }
            }
        }
        out.push(VertexSet::from(members));
    }
    out
}

pub fn is_connected(g: &Graph) -> bool {
    components(g).len() <= 1
}

/// Largest finite eccentricity, or `None` when the graph is disconnected.
/// The empty graph has diameter 0.
pub fn diameter(g: &Graph) -> Option<usize> {
    let mut best = 0;
    for v in g.vertices() {
        let dist = bfs_limited(g, v, None, UNREACHABLE);
        let ecc = *dist.iter().max().unwrap_or(&0);
        if ecc == UNREACHABLE {
            return None;
        }
        best = best.max(ecc);
    }
    Some(best)
}

/// Whether `G` is bipartite, by BFS two-coloring.
pub fn is_bipartite(g: &Graph) -> bool {
    let mut color = vec![u8::MAX; g.n()];
    for start in g.vertices() {
        if color[start] != u8::MAX {
            continue;
        }
        color[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[u];
                    queue.push_back(w);
                } else if color[w] == color[u] {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_pairs(g: &Graph) -> Vec<Vec<usize>> {
        // Floyd-Warshall oracle.
        let n = g.n();
        let mut d = vec![vec![UNREACHABLE; n]; n];
        for u in 0..n {
            d[u][u] = 0;
            for &v in g.neighbors(u) {
                d[u][v] = 1;
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if d[i][k] != UNREACHABLE && d[k][j] != UNREACHABLE && d[i][k] + d[k][j] < d[i][j] {
                        d[i][j] = d[i][k] + d[k][j];
                    }
                }
            }
        }
        d
    }

    #[test]
    fn rejects_self_loops_and_bad_ids() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(ClubError::SelfLoop(1)));
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(ClubError::InvalidVertex { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn parallel_edges_collapse() {
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.m(), 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
        assert_eq!(g.vertices().map(|v| g.degree(v)).sum::<usize>(), 2 * g.m());
    }

    #[test]
    fn bfs_on_path_and_disconnected() {
        assert_eq!(bfs_distances(&Graph::path(3), 0).unwrap(), vec![0, 1, 2]);
        let g = Graph::from_edges(3, [(1, 2)]).unwrap();
        assert_eq!(bfs_distances(&g, 0).unwrap(), vec![0, UNREACHABLE, UNREACHABLE]);
        assert!(bfs_distances(&g, 3).is_err());
    }

    #[test]
    fn bfs_on_five_cycle_matches_floyd_warshall() {
        let g = Graph::cycle(5);
        let oracle = all_pairs(&g);
        for v in g.vertices() {
            let d = bfs_distances(&g, v).unwrap();
            assert_eq!(d, oracle[v]);
            let mut sorted = d.clone();
            sorted.sort();
            assert_eq!(sorted, vec![0, 1, 1, 2, 2]);
        }
    }

    #[test]
    fn balls() {
        let g = Graph::petersen();
        assert_eq!(ball(&g, 3, 0).unwrap(), VertexSet::singleton(3));
        assert_eq!(ball(&Graph::star(4), 0, 1).unwrap().len(), 5);
        assert_eq!(ball(&Graph::path(6), 0, 2).unwrap().as_slice(), &[0, 1, 2]);
        assert!(ball(&g, 10, 1).is_err());
    }

    #[test]
    fn club_verification() {
        assert!(verify_s_club(&Graph::complete(6), 2, &VertexSet::full(6)));
        assert!(!verify_s_club(&Graph::path(4), 2, &VertexSet::full(4)));
        assert_eq!(find_violation(&Graph::path(4), 2, &VertexSet::full(4)), Some((0, 3)));
        assert!(verify_s_club(&Graph::petersen(), 2, &VertexSet::full(10)));
        assert!(verify_s_club(&Graph::path(4), 3, &VertexSet::full(4)));
        assert!(verify_s_club(&Graph::empty(3), 2, &VertexSet::new()));
        assert!(verify_s_club(&Graph::empty(3), 2, &VertexSet::singleton(1)));
        // Distances are measured inside the induced subgraph.
        let c5 = Graph::cycle(5);
        assert!(!verify_s_club(&c5, 2, &vec![0, 1, 2, 3].into()));
    }

    #[test]
    fn induce_complement_components() {
        let k3 = Graph::complete(3);
        let sub = induce(&k3, &vec![0, 2].into()).unwrap();
        assert_eq!(sub.graph.m(), 1);
        assert_eq!(sub.original, vec![0, 2]);
        assert_eq!(complement(&Graph::empty(3)), Graph::complete(3));
        assert_eq!(complement(&complement(&Graph::petersen())), Graph::petersen());
        let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let comps = components(&two_edges);
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 2));
    }

    #[test]
    fn diameters_and_bipartiteness() {
        assert_eq!(diameter(&Graph::petersen()), Some(2));
        assert_eq!(diameter(&Graph::path(5)), Some(4));
        assert_eq!(diameter(&Graph::empty(2)), None);
        assert!(is_bipartite(&Graph::cycle(6)));
        assert!(!is_bipartite(&Graph::cycle(5)));
    }
}
