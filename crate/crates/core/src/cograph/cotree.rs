use crate::error::{ClubError, Result};
use crate::graph::{Graph, GraphBuilder, VertexSet};
use crate::params::find_induced_p4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeKind {
    Leaf(usize),
    /// Join of the children: every pair across them is adjacent.
    Series,
    /// Disjoint union of the children.
    Parallel,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CotreeNode {
    pub kind: NodeKind,
    /// Two child indices for inner nodes, none for leaves.
    pub children: Vec<usize>,
    /// Vertices of the leaves below this node.
    pub vertices: VertexSet,
}

/// Binary cotree. Nodes are stored children-first, so a forward pass over
/// `nodes` visits every child before its parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cotree {
    pub nodes: Vec<CotreeNode>,
    /// `None` for the graph without vertices.
    pub root: Option<usize>,
}

impl Cotree {
    /// Rebuilds the graph on `n` vertices described by the tree.
    pub fn evaluate(&self, n: usize) -> Result<Graph> {
        let mut b = GraphBuilder::new(n);
        for node in &self.nodes {
            if node.kind == NodeKind::Series {
                let left = &self.nodes[node.children[0]].vertices;
                let right = &self.nodes[node.children[1]].vertices;
                b.add_biclique(left.as_slice(), right.as_slice());
            }
        }
        b.build()
    }
}

/// Cotree of `g`, or [`ClubError::NotACograph`] with an induced P4.
pub fn build_cotree(g: &Graph) -> Result<Cotree> {
    build_cotree_on(g, &VertexSet::full(g.n()))
}

/// Cotree of `G[keep]`, with leaves carrying the ids of `g`.
pub fn build_cotree_on(g: &Graph, keep: &VertexSet) -> Result<Cotree> {
    keep.validate(g.n())?;
    let mut tree = Cotree { nodes: Vec::new(), root: None };
    if !keep.is_empty() {
        let mut inside = keep.to_mask(g.n());
        tree.root = Some(decompose(g, keep.as_slice(), &mut inside, &mut tree.nodes)?);
    }
    Ok(tree)
}

/// Splits `part` into components of `G[part]` (`complemented = false`) or
/// of its complement. `inside` marks exactly the vertices of `part`.
fn split(g: &Graph, part: &[usize], inside: &[bool], complemented: bool) -> Vec<Vec<usize>> {
    let mut label = std::collections::HashMap::with_capacity(part.len());
    let mut out: Vec<Vec<usize>> = Vec::new();
    for &start in part {
        if label.contains_key(&start) {
            continue;
        }
        let id = out.len();
        label.insert(start, id);
        let mut members = vec![start];
        let mut i = 0;
        while i < members.len() {
            let u = members[i];
            i += 1;
            let next: Vec<usize> = if complemented {
                part.iter().copied().filter(|&w| w != u && !g.has_edge(u, w)).collect()
            } else {
                g.neighbors(u).iter().copied().filter(|&w| inside[w]).collect()
            };
            for w in next {
                if let std::collections::hash_map::Entry::Vacant(e) = label.entry(w) {
                    e.insert(id);
                    members.push(w);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out.sort_by_key(|m| m[0]);
    out
}

fn decompose(g: &Graph, part: &[usize], inside: &mut [bool], nodes: &mut Vec<CotreeNode>) -> Result<usize> {
    if part.len() == 1 {
        nodes.push(CotreeNode { kind: NodeKind::Leaf(part[0]), children: Vec::new(), vertices: VertexSet::singleton(part[0]) });
        return Ok(nodes.len() - 1);
    }
    let mut kind = NodeKind::Parallel;
    let mut groups = split(g, part, inside, false);
    if groups.len() == 1 {
        kind = NodeKind::Series;
        groups = split(g, part, inside, true);
    }
    if groups.len() == 1 {
        let p4 = find_induced_p4(g, inside).expect("a graph connected with a connected complement has an induced P4");
        return Err(ClubError::NotACograph(p4));
    }
    // Restrict `inside` to one group at a time while recursing.
    for &v in part {
        inside[v] = false;
    }
    let mut built = Vec::with_capacity(groups.len());
    for group in &groups {
        for &v in group {
            inside[v] = true;
        }
        let r = decompose(g, group, inside, nodes);
        for &v in group {
            inside[v] = false;
        }
        built.push(r?);
    }
    for &v in part {
        inside[v] = true;
    }
    // Left-deep binarization in order of smallest vertex.
    let mut acc = built[0];
    for &child in &built[1..] {
        let vertices = nodes[acc].vertices.union(&nodes[child].vertices);
        nodes.push(CotreeNode { kind, children: vec![acc, child], vertices });
        acc = nodes.len() - 1;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let t = build_cotree(&Graph::path(2)).unwrap();
        let root = &t.nodes[t.root.unwrap()];
        assert_eq!(root.kind, NodeKind::Series);
        assert_eq!(t.nodes[root.children[0]].kind, NodeKind::Leaf(0));
        assert_eq!(t.nodes[root.children[1]].kind, NodeKind::Leaf(1));
    }

    #[test]
    fn p4_is_rejected_with_certificate() {
        let err = build_cotree(&Graph::path(4)).unwrap_err();
        let ClubError::NotACograph(p) = err else { panic!("expected a P4 certificate") };
        let g = Graph::path(4);
        // Consecutive certificate vertices are adjacent, the others are not.
        for i in 0..4 {
            for j in i + 1..4 {
                assert_eq!(g.has_edge(p[i], p[j]), j == i + 1);
            }
        }
    }

    #[test]
    fn complete_bipartite_round_trip() {
        let g = Graph::from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let t = build_cotree(&g).unwrap();
        let root = &t.nodes[t.root.unwrap()];
        assert_eq!(root.kind, NodeKind::Series);
        for &c in &root.children {
            assert_eq!(t.nodes[c].kind, NodeKind::Parallel);
        }
        assert_eq!(t.evaluate(4).unwrap(), g);
    }

    #[test]
    fn wide_nodes_are_binarized() {
        let t = build_cotree(&Graph::empty(4)).unwrap();
        assert_eq!(t.nodes.len(), 7);
        assert!(t.nodes.iter().all(|n| n.children.len() == 2 || matches!(n.kind, NodeKind::Leaf(_))));
        assert_eq!(t.evaluate(4).unwrap(), Graph::empty(4));
        assert_eq!(build_cotree(&Graph::empty(0)).unwrap().root, None);
    }
}
