//! Onion peels of a fixed embedding, inward saturation and outer-face-rooted
//! spanning forests.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;
use thiserror::Error;

use crate::embedding::{Edge, Embedding, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PeelError {
    #[error("UnreachableVertex: vertex {0} has no path to the outer face")]
    UnreachableVertex(VertexId),
    #[error("InvalidForest: vertex {vertex}: {reason}")]
    InvalidForest { vertex: VertexId, reason: String },
    #[error("BoundViolated: {0}")]
    BoundViolated(String),
}

/// The layers `L_1..L_k` of an embedding; `L_1` is the outer face.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeelDecomposition {
    layers: Vec<Vec<VertexId>>,
    #[serde(skip)]
    layer_of: HashMap<VertexId, usize>,
}

impl PeelDecomposition {
    fn from_layers(layers: Vec<Vec<VertexId>>) -> Self {
        let layer_of = layers
            .iter()
            .enumerate()
            .flat_map(|(i, l)| l.iter().map(move |&v| (v, i + 1)))
            .collect();
        PeelDecomposition { layers, layer_of }
    }

    /// Number of non-empty peels.
    pub fn k(&self) -> usize {
        self.layers.len()
    }

    /// Layers in order, each sorted ascending.
    pub fn layers(&self) -> &[Vec<VertexId>] {
        &self.layers
    }

    /// 1-based layer index of `v`.
    pub fn layer_of(&self, v: VertexId) -> Option<usize> {
        self.layer_of.get(&v).copied()
    }
}

/// Onion peels of `emb`, computed once per embedding value.
///
/// A vertex joins `L_{i+1}` exactly when it shares a face with a vertex of
/// `L_i` and is not in an earlier layer, so the peels are a breadth-first
/// search over vertex-face incidences starting from the outer face.
pub fn onion_peels(emb: &Embedding) -> &PeelDecomposition {
    emb.peel_cache().get_or_init(|| {
        let mut layer_of: HashMap<VertexId, usize> = HashMap::new();
        let mut face_done = vec![false; emb.face_count()];
        for (f, _) in emb.outer_faces() {
            face_done[f] = true;
        }
        let mut frontier: Vec<VertexId> = emb.outer_vertices().into_iter().collect();
        let mut layers = Vec::new();
        while !frontier.is_empty() {
            let depth = layers.len() + 1;
            for &v in &frontier {
                layer_of.insert(v, depth);
            }
            let mut next = BTreeSet::new();
            for &v in &frontier {
                for f in emb.faces_around(v) {
                    if std::mem::replace(&mut face_done[f], true) {
                        continue;
                    }
                    next.extend(emb.face(f).vertices().filter(|x| !layer_of.contains_key(x)));
                }
            }
            layers.push(std::mem::take(&mut frontier));
            frontier = next.into_iter().collect();
        }
        PeelDecomposition::from_layers(layers)
    })
}

/// Onion peels straight from the definition: repeatedly delete every outer
/// vertex and re-mark the outer region.
pub fn onion_peels_by_removal(emb: &Embedding) -> PeelDecomposition {
    let mut layers = Vec::new();
    let mut current = emb.clone();
    while current.vertex_count() > 0 {
        let outer = current.outer_vertices();
        current = current
            .remove_vertices(&outer)
            .expect("outer vertices are removable");
        layers.push(outer.into_iter().collect());
    }
    PeelDecomposition::from_layers(layers)
}

/// A face incident to `vertex` that also touches the previous peel.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InwardWitness {
    pub vertex: VertexId,
    pub layer: usize,
    pub face: usize,
    /// Smallest vertex of `face` lying in layer `layer - 1`.
    pub witness: VertexId,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct InwardReport {
    pub witnesses: Vec<InwardWitness>,
    /// Vertices in some `L_i`, `i > 1`, with no such face. Always empty
    /// unless something upstream is broken.
    pub missing: Vec<VertexId>,
}

/// For every vertex beyond the first peel, finds an incident face holding a
/// vertex of the preceding peel.
pub fn check_inward_face(emb: &Embedding, peels: &PeelDecomposition) -> InwardReport {
    let mut report = InwardReport::default();
    for (idx, layer) in peels.layers().iter().enumerate().skip(1) {
        let depth = idx + 1;
        for &v in layer {
            let found = emb.faces_around(v).find_map(|f| {
                emb.face(f)
                    .vertices()
                    .filter(|&x| peels.layer_of(x) == Some(depth - 1))
                    .min()
                    .map(|witness| (f, witness))
            });
            match found {
                Some((face, witness)) => report.witnesses.push(InwardWitness {
                    vertex: v,
                    layer: depth,
                    face,
                    witness,
                }),
                None => report.missing.push(v),
            }
        }
    }
    report
}

/// In every inner face, joins the face vertex closest to the outer face
/// (smallest peel, then smallest id, then first occurrence) to every other
/// vertex of the face it is not yet adjacent to. Afterwards each vertex of
/// `L_i`, `i > 1`, has a neighbour in `L_{i-1}` (peels of the input).
pub fn saturate_inward_neighbors(emb: &Embedding) -> Embedding {
    let mut out = emb.clone();
    saturate_in_place(&mut out);
    out.normalize();
    out
}

/// Saturation on a working copy; returns the added edges in insertion order.
/// Leaves `emb` un-normalized.
pub(crate) fn saturate_in_place(emb: &mut Embedding) -> Vec<Edge> {
    let peels = onion_peels(emb).clone();
    let inner: Vec<_> = emb.inner_faces().map(|(_, f)| f.darts().to_vec()).collect();
    let mut added = Vec::new();
    for walk in inner {
        let rank = |i: usize| {
            let v = walk[i].origin;
            (peels.layer_of(v).unwrap_or(usize::MAX), v, i)
        };
        let anchor = (0..walk.len())
            .min_by_key(|&i| rank(i))
            .expect("nonempty face");
        let hub = walk[anchor].origin;
        let m = walk.len();
        let mut seen = BTreeSet::from([hub]);
        let targets: Vec<_> = (1..m)
            .map(|t| walk[(anchor + t) % m])
            .filter(|d| seen.insert(d.origin))
            .collect();
        let mut cur: Vec<_> = (0..m).map(|t| walk[(anchor + t) % m]).collect();
        for target in targets {
            if emb.are_adjacent(hub, target.origin) {
                continue;
            }
            let j = cur
                .iter()
                .position(|&d| d == target)
                .expect("target still on face");
            let (rest, _) = emb.split_face(&cur, 0, j).expect("saturation edge is new");
            added.push(Edge::new(hub, target.origin));
            cur = rest;
        }
    }
    added
}

/// Spanning forest in which every tree holds exactly one outer vertex, its
/// root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootedForest {
    parent: BTreeMap<VertexId, VertexId>,
    depth: BTreeMap<VertexId, usize>,
    roots: BTreeSet<VertexId>,
}

impl RootedForest {
    /// Builds a forest from a parent map; every vertex of `vertices` without
    /// a parent is a root.
    pub fn from_parents(
        vertices: impl IntoIterator<Item = VertexId>,
        parent: BTreeMap<VertexId, VertexId>,
    ) -> Result<Self, PeelError> {
        let vertices: BTreeSet<VertexId> = vertices.into_iter().collect();
        let roots: BTreeSet<VertexId> = vertices
            .iter()
            .copied()
            .filter(|v| !parent.contains_key(v))
            .collect();
        let mut depth = BTreeMap::new();
        for &v in &vertices {
            let mut chain = Vec::new();
            let mut x = v;
            let base = loop {
                if let Some(&d) = depth.get(&x) {
                    break d;
                }
                if roots.contains(&x) {
                    break 0;
                }
                chain.push(x);
                if chain.len() > vertices.len() {
                    return Err(PeelError::InvalidForest {
                        vertex: v,
                        reason: "parent pointers form a cycle".into(),
                    });
                }
                x = match parent.get(&x) {
                    Some(&p) if vertices.contains(&p) => p,
                    _ => {
                        return Err(PeelError::InvalidForest {
                            vertex: x,
                            reason: "parent is not a vertex".into(),
                        })
                    }
                };
            };
            if !chain.contains(&x) {
                depth.insert(x, base);
            }
            for (i, &y) in chain.iter().rev().enumerate() {
                depth.insert(y, base + i + 1);
            }
        }
        Ok(RootedForest {
            parent,
            depth,
            roots,
        })
    }

    pub fn parent(&self, v: VertexId) -> Option<VertexId> {
        self.parent.get(&v).copied()
    }

    pub fn depth(&self, v: VertexId) -> Option<usize> {
        self.depth.get(&v).copied()
    }

    pub fn roots(&self) -> &BTreeSet<VertexId> {
        &self.roots
    }

    pub fn parents(&self) -> &BTreeMap<VertexId, VertexId> {
        &self.parent
    }

    pub fn depths(&self) -> &BTreeMap<VertexId, usize> {
        &self.depth
    }

    /// Maximum depth; 0 for a forest of isolated roots.
    pub fn height(&self) -> usize {
        self.depth.values().copied().max().unwrap_or(0)
    }

    pub fn edges(&self) -> BTreeSet<Edge> {
        self.parent.iter().map(|(&c, &p)| Edge::new(c, p)).collect()
    }

    /// Vertices from `v` up to its root, both included.
    pub fn path_to_root(&self, v: VertexId) -> Vec<VertexId> {
        let mut path = vec![v];
        let mut x = v;
        while let Some(p) = self.parent(x) {
            path.push(p);
            x = p;
        }
        path
    }

    pub fn root_of(&self, v: VertexId) -> VertexId {
        *self.path_to_root(v).last().expect("path is nonempty")
    }

    /// Vertices of the forest path between `a` and `b`, if they share a tree.
    pub fn tree_path(&self, a: VertexId, b: VertexId) -> Option<Vec<VertexId>> {
        let pa = self.path_to_root(a);
        let pb = self.path_to_root(b);
        if pa.last() != pb.last() {
            return None;
        }
        let on_b: BTreeSet<VertexId> = pb.iter().copied().collect();
        let meet = *pa.iter().find(|x| on_b.contains(x)).expect("common root");
        let mut path: Vec<VertexId> = pa.iter().copied().take_while(|&x| x != meet).collect();
        path.push(meet);
        let tail: Vec<VertexId> = pb.iter().copied().take_while(|&x| x != meet).collect();
        path.extend(tail.into_iter().rev());
        Some(path)
    }
}

/// Multi-source breadth-first search from all outer vertices; each vertex
/// takes the smallest-id neighbour of the previous level as its parent.
///
/// Run it on a saturated embedding to get height at most `k - 1`.
pub fn build_rooted_forest(emb: &Embedding) -> Result<RootedForest, PeelError> {
    let roots = emb.outer_vertices();
    let mut depth: BTreeMap<VertexId, usize> = roots.iter().map(|&r| (r, 0)).collect();
    let mut parent = BTreeMap::new();
    let mut level: Vec<VertexId> = roots.iter().copied().collect();
    let mut d = 0;
    while !level.is_empty() {
        let mut next: BTreeMap<VertexId, VertexId> = BTreeMap::new();
        for &v in &level {
            for &w in emb.rotation(v) {
                if !depth.contains_key(&w) {
                    next.entry(w).or_insert(v);
                }
            }
        }
        d += 1;
        for (&w, &p) in &next {
            depth.insert(w, d);
            parent.insert(w, p);
        }
        level = next.into_keys().collect();
    }
    if let Some(v) = emb.vertices().find(|v| !depth.contains_key(v)) {
        return Err(PeelError::UnreachableVertex(v));
    }
    Ok(RootedForest {
        parent,
        depth,
        roots,
    })
}

/// Checks that `forest` is an outer-face-rooted spanning forest of `emb`
/// (parent links are edges, roots are exactly the outer vertices).
pub fn check_rooted_forest(emb: &Embedding, forest: &RootedForest) -> Result<(), PeelError> {
    let outer = emb.outer_vertices();
    let bad = |vertex: VertexId, reason: &str| PeelError::InvalidForest {
        vertex,
        reason: reason.into(),
    };
    for v in emb.vertices() {
        let Some(dv) = forest.depth(v) else {
            return Err(bad(v, "not spanned by the forest"));
        };
        match forest.parent(v) {
            None => {
                if !outer.contains(&v) {
                    return Err(bad(v, "root is not on the outer face"));
                }
            }
            Some(p) => {
                if outer.contains(&v) {
                    return Err(bad(v, "tree holds a second outer vertex"));
                }
                if !emb.are_adjacent(v, p) {
                    return Err(bad(v, "parent link is not an edge"));
                }
                if forest.depth(p).map(|x| x + 1) != Some(dv) {
                    return Err(bad(v, "depth is not parent depth + 1"));
                }
            }
        }
    }
    if forest.depth.len() != emb.vertex_count() {
        let stray = forest
            .depth
            .keys()
            .find(|v| !emb.contains_vertex(**v))
            .copied()
            .unwrap_or_default();
        return Err(bad(stray, "forest vertex not in the embedding"));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ForestBound {
    /// Peels of the embedding.
    pub k: usize,
    /// Height of the forest.
    pub height: usize,
}

/// A rooted forest of height `h` forces at most `h + 1` peels: every vertex
/// at depth `i` sits in one of the first `i + 1` peels.
pub fn verify_forest_bound(
    emb: &Embedding,
    forest: &RootedForest,
) -> Result<ForestBound, PeelError> {
    check_rooted_forest(emb, forest)?;
    let peels = onion_peels(emb);
    for (&v, &d) in forest.depths() {
        let layer = peels.layer_of(v).expect("every vertex is peeled");
        if layer > d + 1 {
            return Err(PeelError::BoundViolated(format!(
                "vertex {v} at depth {d} lies in peel {layer}"
            )));
        }
    }
    let bound = ForestBound {
        k: peels.k(),
        height: forest.height(),
    };
    if bound.k > bound.height + 1 {
        return Err(PeelError::BoundViolated(format!(
            "{} peels exceed height {} + 1",
            bound.k, bound.height
        )));
    }
    Ok(bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_cycle, gen_k4_minus_edge, gen_nested_triangles, gen_wheel};

    #[test]
    fn triangle_and_k4_peels() {
        let t = gen_cycle(3).unwrap();
        assert_eq!(onion_peels(&t).layers(), &[vec![0, 1, 2]]);
        let k4 = gen_wheel(3).unwrap();
        assert_eq!(onion_peels(&k4).layers(), &[vec![0, 1, 2], vec![3]]);
    }

    #[test]
    fn nested_triangles_peel_by_level() {
        let t3 = gen_nested_triangles(3).unwrap();
        let p = onion_peels(&t3);
        assert_eq!(p.k(), 3);
        assert!(p.layers().iter().all(|l| l.len() == 3));
        assert_eq!(p, &onion_peels_by_removal(&t3));
    }

    #[test]
    fn inward_witnesses() {
        let k4 = gen_wheel(3).unwrap();
        let r = check_inward_face(&k4, onion_peels(&k4));
        assert_eq!(r.witnesses.len(), 1);
        assert_eq!(r.witnesses[0].vertex, 3);
        assert!(r.missing.is_empty());

        let c = gen_cycle(5).unwrap();
        let r = check_inward_face(&c, onion_peels(&c));
        assert!(r.witnesses.is_empty() && r.missing.is_empty());
    }

    #[test]
    fn saturation_examples() {
        let t = gen_cycle(3).unwrap();
        assert_eq!(saturate_inward_neighbors(&t), t);

        let sq = gen_cycle(4).unwrap();
        let sat = saturate_inward_neighbors(&sq);
        assert_eq!(sat.edge_count(), 5);
        assert!(sat.are_adjacent(0, 2));

        let t2 = gen_nested_triangles(2).unwrap();
        assert_eq!(saturate_inward_neighbors(&t2), t2);
    }

    #[test]
    fn k4_forest() {
        let k4 = gen_wheel(3).unwrap();
        let f = build_rooted_forest(&k4).unwrap();
        assert_eq!(f.roots(), &BTreeSet::from([0, 1, 2]));
        assert_eq!(f.parent(3), Some(0));
        assert_eq!(f.height(), 1);
        assert_eq!(
            verify_forest_bound(&k4, &f).unwrap(),
            ForestBound { k: 2, height: 1 }
        );
    }

    #[test]
    fn forest_checks_reject_bad_forests() {
        let k4 = gen_wheel(3).unwrap();
        // Height-0 "forest": vertex 3 is a root but not on the outer face.
        let flat = RootedForest::from_parents(k4.vertices(), BTreeMap::new()).unwrap();
        assert!(matches!(
            verify_forest_bound(&k4, &flat),
            Err(PeelError::InvalidForest { vertex: 3, .. })
        ));
        let cyc = RootedForest::from_parents([0, 1], BTreeMap::from([(0, 1), (1, 0)]));
        assert!(cyc.is_err());
    }

    #[test]
    fn forest_paths() {
        let t3 = gen_nested_triangles(3).unwrap();
        let sat = saturate_inward_neighbors(&t3);
        let f = build_rooted_forest(&sat).unwrap();
        assert_eq!(f.height(), 2);
        for v in sat.vertices() {
            let p = f.path_to_root(v);
            assert_eq!(p.len(), f.depth(v).unwrap() + 1);
            assert!(f.roots().contains(p.last().unwrap()));
        }
        let a = 0;
        let path = f.tree_path(a, a).unwrap();
        assert_eq!(path, vec![a]);
        assert_eq!(verify_forest_bound(&sat, &f).unwrap().k, 3);
    }

    #[test]
    fn k4_minus_edge_is_one_peel() {
        let g = gen_k4_minus_edge();
        assert_eq!(onion_peels(&g).k(), 1);
    }
}
