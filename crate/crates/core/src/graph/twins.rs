use std::collections::HashMap;

use super::{Graph, VertexSet};
use crate::error::Result;

/// Vertices outside the modulator sharing the same modulator neighborhood.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinClass {
    /// `N(v) ∩ X` for every member `v`.
    pub signature: VertexSet,
    pub members: VertexSet,
}

/// Partition of `V \ X` into twin classes with respect to `X`.
#[derive(Clone, Debug)]
pub struct TwinPartition {
    pub modulator: VertexSet,
    /// Ordered by smallest member.
    pub classes: Vec<TwinClass>,
    class_of: Vec<Option<usize>>,
    bits: Vec<u64>,
}

impl TwinPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Index of the class containing `v`, `None` for modulator vertices.
    pub fn class_of(&self, v: usize) -> Option<usize> {
        self.class_of.get(v).copied().flatten()
    }

    /// Signature of class `i` as a bitmask over positions in `modulator`.
    /// Only available when the modulator has at most 64 vertices.
    pub fn signature_bits(&self, i: usize) -> u64 {
        self.bits[i]
    }
}

/// Groups `V \ x` by `N(v) ∩ x`.
pub fn twin_classes(g: &Graph, x: &VertexSet) -> Result<TwinPartition> {
    x.validate(g.n())?;
    let in_x = x.to_mask(g.n());
    let mut by_signature: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut classes: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    let mut class_of = vec![None; g.n()];
    for v in g.vertices().filter(|&v| !in_x[v]) {
        let sig: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| in_x[w]).collect();
        let idx = *by_signature.entry(sig.clone()).or_insert_with(|| {
            classes.push((sig, Vec::new()));
            classes.len() - 1
        });
        classes[idx].1.push(v);
        class_of[v] = Some(idx);
    }
    let classes: Vec<TwinClass> = classes
        .into_iter()
        .map(|(sig, members)| TwinClass { signature: sig.into(), members: members.into() })
        .collect();
    let bits = if x.len() <= 64 {
        classes
            .iter()
            .map(|c| {
                c.signature
                    .iter()
                    .map(|w| 1u64 << x.as_slice().binary_search(&w).expect("signature inside modulator"))
                    .fold(0, |acc, b| acc | b)
            })
            .collect()
    } else {
        Vec::new()
    };
    Ok(TwinPartition { modulator: x.clone(), classes, class_of, bits })
}

/// Classes of the plain twin relation `N(u) \ {v} = N(v) \ {u}`, ordered by
/// smallest member. Every vertex appears in exactly one group.
pub fn twin_groups(g: &Graph) -> Vec<VertexSet> {
    // A vertex never has both a false twin and a true twin, so the two
    // groupings can be merged by taking whichever is nontrivial.
    let mut open: HashMap<&[usize], Vec<usize>> = HashMap::new();
    let mut closed: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    for v in g.vertices() {
        open.entry(g.neighbors(v)).or_default().push(v);
        let mut key = g.neighbors(v).to_vec();
        let pos = key.binary_search(&v).unwrap_err();
        key.insert(pos, v);
        closed.entry(key).or_default().push(v);
    }
    let mut group_of = vec![usize::MAX; g.n()];
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for members in open.into_values().chain(closed.into_values()) {
        if members.len() > 1 {
            let id = groups.len();
            for &v in &members {
                debug_assert_eq!(group_of[v], usize::MAX);
                group_of[v] = id;
            }
            groups.push(members);
        }
    }
    for v in g.vertices() {
        if group_of[v] == usize::MAX {
            group_of[v] = groups.len();
            groups.push(vec![v]);
        }
    }
    let mut out: Vec<VertexSet> = groups.into_iter().map(VertexSet::from).collect();
    out.sort_by_key(|s| s.first());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_modulator_gives_one_class() {
        let g = Graph::petersen();
        let p = twin_classes(&g, &VertexSet::new()).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.classes[0].members, VertexSet::full(10));
        assert!(p.classes[0].signature.is_empty());
    }

    #[test]
    fn star_leaves_are_twins() {
        let p = twin_classes(&Graph::star(3), &VertexSet::singleton(0)).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.classes[0].members.as_slice(), &[1, 2, 3]);
        assert_eq!(p.class_of(0), None);
        assert_eq!(p.signature_bits(0), 1);
    }

    #[test]
    fn path_signatures() {
        // a-b-c-d with X = {b}: {a, c} see b, {d} sees nothing.
        let p = twin_classes(&Graph::path(4), &VertexSet::singleton(1)).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.classes[0].members.as_slice(), &[0, 2]);
        assert_eq!(p.classes[0].signature.as_slice(), &[1]);
        assert_eq!(p.classes[1].members.as_slice(), &[3]);
        assert!(p.classes[1].signature.is_empty());
    }

    #[test]
    fn plain_twin_groups() {
        // K_{2,3}: both sides are false-twin groups.
        let g = Graph::from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        let groups = twin_groups(&g);
        assert_eq!(groups, vec![vec![0, 1].into(), vec![2, 3, 4].into()]);
        // K4 minus an edge: the two degree-3 vertices are true twins.
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let groups = twin_groups(&g);
        assert_eq!(groups, vec![vec![0, 1].into(), vec![2, 3].into()]);
        assert_eq!(twin_groups(&Graph::path(4)).len(), 4);
    }
}
