//! Abstract simple graphs (no embedding), used by the oracles.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::embedding::{Edge, VertexId};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SimpleGraph {
    adjacency: BTreeMap<VertexId, BTreeSet<VertexId>>,
}

impl SimpleGraph {
    /// Builds a graph; self-loops are dropped and duplicate edges merged.
    pub fn new(
        vertices: impl IntoIterator<Item = VertexId>,
        edges: impl IntoIterator<Item = Edge>,
    ) -> Self {
        let mut adjacency: BTreeMap<VertexId, BTreeSet<VertexId>> =
            vertices.into_iter().map(|v| (v, BTreeSet::new())).collect();
        for e in edges {
            if e.u() == e.v() {
                continue;
            }
            adjacency.entry(e.u()).or_default().insert(e.v());
            adjacency.entry(e.v()).or_default().insert(e.u());
        }
        SimpleGraph { adjacency }
    }

    pub fn from_pairs(pairs: &[(VertexId, VertexId)]) -> Self {
        SimpleGraph::new([], pairs.iter().map(|&(a, b)| Edge::new(a, b)))
    }

    /// Complete graph on `0..n`.
    pub fn complete(n: u32) -> Self {
        let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| Edge::new(a, b)));
        SimpleGraph::new(0..n, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.adjacency.keys().copied()
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adjacency.get(&v).into_iter().flatten().copied()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency.get(&v).map_or(0, BTreeSet::len)
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        self.adjacency.get(&a).is_some_and(|n| n.contains(&b))
    }

    /// Edges in ascending order.
    pub fn edges(&self) -> Vec<Edge> {
        self.adjacency
            .iter()
            .flat_map(|(&a, n)| n.range(a + 1..).map(move |&b| Edge::new(a, b)))
            .collect()
    }

    /// Connected components (sorted vertex lists) of the graph minus `removed`.
    pub fn components_without(&self, removed: &BTreeSet<VertexId>) -> Vec<Vec<VertexId>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for s in self.vertices() {
            if removed.contains(&s) || !seen.insert(s) {
                continue;
            }
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if !removed.contains(&w) && seen.insert(w) {
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<Vec<VertexId>> {
        self.components_without(&BTreeSet::new())
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn induced(&self, keep: &[VertexId]) -> SimpleGraph {
        let set: BTreeSet<VertexId> = keep.iter().copied().collect();
        let edges = self
            .edges()
            .into_iter()
            .filter(|e| set.contains(&e.u()) && set.contains(&e.v()));
        SimpleGraph::new(keep.iter().copied(), edges)
    }

    /// 3-connectivity by exhaustion: more than three vertices and no pair of
    /// vertices whose removal disconnects the rest.
    pub fn is_three_connected(&self) -> bool {
        let vs: Vec<VertexId> = self.vertices().collect();
        if vs.len() < 4 || !self.is_connected() {
            return false;
        }
        for (i, &a) in vs.iter().enumerate() {
            for &b in &vs[i + 1..] {
                if self.components_without(&BTreeSet::from([a, b])).len() > 1 {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_is_three_connected() {
        assert!(SimpleGraph::complete(4).is_three_connected());
        let c4 = SimpleGraph::from_pairs(&[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert!(!c4.is_three_connected());
    }

    #[test]
    fn counts() {
        let g = SimpleGraph::complete(5);
        assert_eq!(g.edge_count(), 10);
        assert_eq!(g.edges().len(), 10);
        assert_eq!(g.degree(3), 4);
    }
}
