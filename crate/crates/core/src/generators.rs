//! Seeded random graph families used by tests, benchmarks and the CLI.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{complement, Graph, GraphBuilder, VertexSet};

/// Erdős–Rényi `G(n, p)`.
pub fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                b.add_edge(u, v);
            }
        }
    }
    b.build().expect("generated edges are valid")
}

/// Disjoint union of `1..=max_clusters` cliques of `1..=max_size` vertices.
pub fn random_cluster_graph<R: Rng>(max_clusters: usize, max_size: usize, rng: &mut R) -> Graph {
    let mut b = GraphBuilder::new(0);
    for _ in 0..rng.gen_range(1..=max_clusters) {
        let size = rng.gen_range(1..=max_size);
        let members: Vec<usize> = b.add_vertices(size).collect();
        b.add_clique(&members);
    }
    b.build().expect("generated edges are valid")
}

/// Complement of [`random_cluster_graph`]: a complete multipartite graph.
pub fn random_cocluster_graph<R: Rng>(max_parts: usize, max_size: usize, rng: &mut R) -> Graph {
    complement(&random_cluster_graph(max_parts, max_size, rng))
}

/// Cograph built bottom-up: repeatedly merges two random parts by a disjoint
/// union or a join until one part is left.
pub fn random_cograph<R: Rng>(n: usize, rng: &mut R) -> Graph {
    let mut b = GraphBuilder::new(n);
    let mut parts: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    while parts.len() > 1 {
        let i = rng.gen_range(0..parts.len());
        let left = parts.swap_remove(i);
        let j = rng.gen_range(0..parts.len());
        let mut right = parts.swap_remove(j);
        if rng.gen_bool(0.5) {
            b.add_biclique(&left, &right);
        }
        right.extend(left);
        parts.push(right);
    }
    b.build().expect("generated edges are valid")
}

/// Maximal triangle-free graph from the random greedy process: edges are
/// offered in random order and kept unless they close a triangle.
pub fn random_triangle_free<R: Rng>(n: usize, rng: &mut R) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    let mut adj = vec![vec![false; n]; n];
    let mut edges = Vec::new();
    for (u, v) in pairs {
        if (0..n).any(|w| adj[u][w] && adj[v][w]) {
            continue;
        }
        adj[u][v] = true;
        adj[v][u] = true;
        edges.push((u, v));
    }
    Graph::from_edges(n, edges).expect("generated edges are valid")
}

/// Random bipartite graph with sides of sizes `left` and `n - left`.
pub fn random_bipartite<R: Rng>(n: usize, left: usize, p: f64, rng: &mut R) -> Graph {
    let mut b = GraphBuilder::new(n);
    for u in 0..left.min(n) {
        for v in left..n {
            if rng.gen_bool(p) {
                b.add_edge(u, v);
            }
        }
    }
    b.build().expect("generated edges are valid")
}

/// Appends `count` apex vertices, each joined to every earlier vertex with
/// probability `p`. Returns the new graph and the set of apex vertices.
pub fn with_apices<R: Rng>(g: &Graph, count: usize, p: f64, rng: &mut R) -> (Graph, VertexSet) {
    let mut b = GraphBuilder::new(g.n());
    for (u, v) in g.edges() {
        b.add_edge(u, v);
    }
    let apices = b.add_vertices(count);
    for a in apices.clone() {
        for v in 0..a {
            if rng.gen_bool(p) {
                b.add_edge(a, v);
            }
        }
    }
    (b.build().expect("generated edges are valid"), apices.collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::{is_cluster_graph, is_cograph, validate_modulator, ModulatorTarget};
    use crate::exact::complement_triangle;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn families_have_their_structure() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            assert!(is_cluster_graph(&random_cluster_graph(5, 3, &mut rng)));
            assert!(is_cluster_graph(&complement(&random_cocluster_graph(4, 3, &mut rng))));
            assert!(is_cograph(&random_cograph(10, &mut rng)));
            let tf = random_triangle_free(12, &mut rng);
            assert_eq!(complement_triangle(&complement(&tf)), None);
            let (g, x) = with_apices(&random_cluster_graph(4, 3, &mut rng), 2, 0.5, &mut rng);
            assert!(validate_modulator(&g, ModulatorTarget::Cluster, &x).is_ok());
        }
    }

    #[test]
    fn seeds_are_reproducible() {
        let a = gnp(10, 0.5, &mut ChaCha8Rng::seed_from_u64(3));
        let b = gnp(10, 0.5, &mut ChaCha8Rng::seed_from_u64(3));
        assert_eq!(a, b);
    }
}
