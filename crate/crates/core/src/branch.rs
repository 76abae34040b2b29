//! Branch decompositions of triangulated disks built from an outer-face-rooted
//! spanning forest, with exact width computation and the treewidth bound.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::embedding::{Edge, Embedding, FaceId, VertexId};
use crate::peel::{check_rooted_forest, onion_peels, PeelError, RootedForest};
use crate::triangulate::{to_triangulated_disk, DiskConversion, TriangulateError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BranchError {
    #[error("NotADisk: input is not a triangulated disk")]
    NotADisk,
    #[error("NotATree: {0}")]
    NotATree(String),
    #[error("DegreeOverflow: node {node} has degree {degree}")]
    DegreeOverflow { node: usize, degree: usize },
    #[error("BadAssignment: {0}")]
    BadAssignment(String),
    #[error("BoundViolated: {0}")]
    BoundViolated(String),
    #[error(transparent)]
    Peel(#[from] PeelError),
    #[error(transparent)]
    Triangulate(#[from] TriangulateError),
}

/// Tree on the inner faces of a triangulated disk whose arcs are the duals of
/// inner non-forest edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualTree {
    /// Inner face ids, ascending; node `i` is `faces[i]`.
    pub faces: Vec<FaceId>,
    /// `(a, b, e)`: nodes `a < b` joined by the dual of `e`.
    pub arcs: Vec<(usize, usize, Edge)>,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    /// False if already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra] = rb;
        true
    }
}

fn is_spanning_tree(
    n: usize,
    arcs: impl IntoIterator<Item = (usize, usize)>,
) -> Result<(), String> {
    let mut uf = UnionFind::new(n);
    let mut count = 0;
    for (a, b) in arcs {
        if !uf.union(a, b) {
            return Err(format!("arc {a}-{b} closes a cycle"));
        }
        count += 1;
    }
    if n > 0 && count != n - 1 {
        return Err(format!("{count} arcs on {n} nodes, graph is disconnected"));
    }
    Ok(())
}

fn faces_of(disk: &Embedding, e: Edge) -> (FaceId, FaceId) {
    let d = e.canonical_dart();
    (
        disk.face_of(d).expect("dart exists"),
        disk.face_of(d.twin()).expect("dart exists"),
    )
}

/// Checks that the forest edges plus all outer edges but the smallest form
/// a spanning tree whose complement is dual to a spanning tree with the
/// outer face as a leaf.
fn check_tree_cotree(disk: &Embedding, forest: &RootedForest) -> Result<(), BranchError> {
    let outer = disk
        .outer_faces()
        .next()
        .map(|(id, _)| id)
        .ok_or(BranchError::NotADisk)?;
    let mut outer_edges: Vec<Edge> = disk.face(outer).darts().iter().map(|d| d.edge()).collect();
    outer_edges.sort_unstable();
    let mut plus: BTreeSet<Edge> = forest.edges();
    plus.extend(outer_edges.iter().skip(1).copied());

    let index: BTreeMap<VertexId, usize> =
        disk.vertices().enumerate().map(|(i, v)| (v, i)).collect();
    is_spanning_tree(
        disk.vertex_count(),
        plus.iter().map(|e| (index[&e.u()], index[&e.v()])),
    )
    .map_err(|m| BranchError::NotATree(format!("forest plus outer edges: {m}")))?;

    let cotree: Vec<(usize, usize)> = disk
        .edges()
        .into_iter()
        .filter(|e| !plus.contains(e))
        .map(|e| faces_of(disk, e))
        .collect();
    let outer_degree = cotree
        .iter()
        .filter(|(a, b)| *a == outer || *b == outer)
        .count();
    is_spanning_tree(disk.face_count(), cotree)
        .map_err(|m| BranchError::NotATree(format!("co-tree: {m}")))?;
    if outer_degree != 1 {
        return Err(BranchError::NotATree(format!(
            "outer face has co-tree degree {outer_degree}"
        )));
    }
    Ok(())
}

/// Builds the dual tree and verifies it is a tree, both directly and by the
/// tree/co-tree argument.
pub fn build_dual_tree(disk: &Embedding, forest: &RootedForest) -> Result<DualTree, BranchError> {
    if !disk.is_triangulated_disk() {
        return Err(BranchError::NotADisk);
    }
    check_rooted_forest(disk, forest)?;
    let faces: Vec<FaceId> = disk.inner_faces().map(|(id, _)| id).collect();
    let node: BTreeMap<FaceId, usize> = faces.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let tree_edges = forest.edges();
    let mut arcs = Vec::new();
    for e in disk.edges() {
        if tree_edges.contains(&e) {
            continue;
        }
        let (l, r) = faces_of(disk, e);
        if let (Some(&a), Some(&b)) = (node.get(&l), node.get(&r)) {
            arcs.push((a.min(b), a.max(b), e));
        }
    }
    is_spanning_tree(faces.len(), arcs.iter().map(|&(a, b, _)| (a, b)))
        .map_err(BranchError::NotATree)?;
    check_tree_cotree(disk, forest)?;
    Ok(DualTree { faces, arcs })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum NodeKind {
    Face {
        face: FaceId,
    },
    /// Subdivides the dual arc of `edge`.
    Arc {
        edge: Edge,
    },
    Edge {
        edge: Edge,
    },
    /// Node of a decomposition not built from a dual tree.
    Internal,
}

/// A tree of maximum degree 3 with graph edges injectively assigned to
/// leaves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchDecomposition {
    nodes: Vec<NodeKind>,
    arcs: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    assignment: BTreeMap<Edge, usize>,
}

/// Vertices crossing one arc of the decomposition tree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArcCut {
    pub arc: usize,
    pub crossing_vertices: BTreeSet<VertexId>,
}

impl BranchDecomposition {
    /// Validates tree shape, degrees and the assignment.
    pub fn new(
        nodes: Vec<NodeKind>,
        arcs: Vec<(usize, usize)>,
        assignment: BTreeMap<Edge, usize>,
    ) -> Result<Self, BranchError> {
        let n = nodes.len();
        if n == 0 {
            return Err(BranchError::NotATree("no nodes".into()));
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(a, b) in &arcs {
            if a >= n || b >= n || a == b {
                return Err(BranchError::NotATree(format!("bad arc {a}-{b}")));
            }
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        is_spanning_tree(n, arcs.iter().copied()).map_err(BranchError::NotATree)?;
        if let Some((node, adj)) = adjacency.iter().enumerate().find(|(_, a)| a.len() > 3) {
            return Err(BranchError::DegreeOverflow {
                node,
                degree: adj.len(),
            });
        }
        let mut used = BTreeSet::new();
        for (e, &leaf) in &assignment {
            if leaf >= n || adjacency[leaf].len() > 1 {
                return Err(BranchError::BadAssignment(format!(
                    "edge {e} sits on non-leaf {leaf}"
                )));
            }
            if !used.insert(leaf) {
                return Err(BranchError::BadAssignment(format!(
                    "leaf {leaf} holds two edges"
                )));
            }
        }
        Ok(BranchDecomposition {
            nodes,
            arcs,
            adjacency,
            assignment,
        })
    }

    pub fn nodes(&self) -> &[NodeKind] {
        &self.nodes
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn neighbors(&self, node: usize) -> &[usize] {
        &self.adjacency[node]
    }

    pub fn degree(&self, node: usize) -> usize {
        self.adjacency[node].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn leaves(&self) -> Vec<usize> {
        (0..self.nodes.len())
            .filter(|&i| self.degree(i) <= 1)
            .collect()
    }

    pub fn assignment(&self) -> &BTreeMap<Edge, usize> {
        &self.assignment
    }

    /// Edges assigned to leaves on `node`'s side of the arc `(node, away)`.
    pub fn side(&self, node: usize, away: usize) -> BTreeSet<Edge> {
        let mut seen = BTreeSet::from([away, node]);
        let mut stack = vec![node];
        let mut nodes = BTreeSet::from([node]);
        while let Some(x) = stack.pop() {
            for &y in &self.adjacency[x] {
                if seen.insert(y) {
                    nodes.insert(y);
                    stack.push(y);
                }
            }
        }
        self.assignment
            .iter()
            .filter(|(_, l)| nodes.contains(l))
            .map(|(&e, _)| e)
            .collect()
    }
}

/// Exact width and per-arc crossing sets, by one bottom-up pass that counts,
/// for each subtree, the assigned edges at every vertex. A vertex crosses the
/// arc above a subtree iff it has some but not all of its edges inside.
pub fn compute_width(bd: &BranchDecomposition) -> (usize, Vec<ArcCut>) {
    let n = bd.nodes.len();
    let mut total: BTreeMap<VertexId, usize> = BTreeMap::new();
    let mut at: Vec<Vec<Edge>> = vec![Vec::new(); n];
    for (&e, &leaf) in &bd.assignment {
        *total.entry(e.u()).or_default() += 1;
        *total.entry(e.v()).or_default() += 1;
        at[leaf].push(e);
    }

    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![0];
    parent[0] = 0;
    while let Some(x) = stack.pop() {
        order.push(x);
        for &y in &bd.adjacency[x] {
            if parent[y] == usize::MAX {
                parent[y] = x;
                stack.push(y);
            }
        }
    }
    let arc_index: BTreeMap<(usize, usize), usize> = bd
        .arcs
        .iter()
        .enumerate()
        .map(|(i, &(a, b))| ((a.min(b), a.max(b)), i))
        .collect();

    let mut counts: Vec<BTreeMap<VertexId, usize>> = vec![BTreeMap::new(); n];
    let mut cuts = Vec::with_capacity(bd.arcs.len());
    for &x in order.iter().rev() {
        let mut here = std::mem::take(&mut counts[x]);
        for e in &at[x] {
            *here.entry(e.u()).or_default() += 1;
            *here.entry(e.v()).or_default() += 1;
        }
        if x == 0 {
            break;
        }
        let p = parent[x];
        let crossing_vertices = here
            .iter()
            .filter(|(v, &c)| c < total[v])
            .map(|(&v, _)| v)
            .collect();
        cuts.push(ArcCut {
            arc: arc_index[&(x.min(p), x.max(p))],
            crossing_vertices,
        });
        let up = &mut counts[p];
        if up.len() < here.len() {
            std::mem::swap(up, &mut here);
        }
        for (v, c) in here {
            *up.entry(v).or_default() += c;
        }
    }
    cuts.sort_by_key(|c| c.arc);
    let width = cuts
        .iter()
        .map(|c| c.crossing_vertices.len())
        .max()
        .unwrap_or(0);
    (width, cuts)
}

/// Subdivides every dual arc with an arc node and hangs one leaf per graph
/// edge: on the arc node of its dual if that is an arc, otherwise on the
/// inner face beside its canonical dart (or beside the twin when the
/// canonical side is the outer face).
///
/// Node order: face nodes, then arc nodes, then edge nodes.
pub fn build_branch_tree(
    tree: &DualTree,
    disk: &Embedding,
    _forest: &RootedForest,
) -> Result<BranchDecomposition, BranchError> {
    let mut nodes: Vec<NodeKind> = tree
        .faces
        .iter()
        .map(|&face| NodeKind::Face { face })
        .collect();
    let face_node: BTreeMap<FaceId, usize> = tree
        .faces
        .iter()
        .enumerate()
        .map(|(i, &f)| (f, i))
        .collect();
    let mut arcs = Vec::new();
    let mut arc_node: BTreeMap<Edge, usize> = BTreeMap::new();
    for &(a, b, e) in &tree.arcs {
        let id = nodes.len();
        nodes.push(NodeKind::Arc { edge: e });
        arcs.push((a, id));
        arcs.push((id, b));
        arc_node.insert(e, id);
    }
    let mut assignment = BTreeMap::new();
    for e in disk.edges() {
        let id = nodes.len();
        nodes.push(NodeKind::Edge { edge: e });
        let host = match arc_node.get(&e) {
            Some(&a) => a,
            None => {
                let (l, r) = faces_of(disk, e);
                *face_node
                    .get(&l)
                    .or_else(|| face_node.get(&r))
                    .ok_or_else(|| {
                        BranchError::NotATree(format!("edge {e} touches no inner face"))
                    })?
            }
        };
        arcs.push((host, id));
        assignment.insert(e, id);
    }
    BranchDecomposition::new(nodes, arcs, assignment)
}

/// `max(1, floor(3 bw / 2) - 1)`.
pub fn treewidth_bound(bw: usize) -> usize {
    (3 * bw / 2).saturating_sub(1).max(1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WidthCertificate {
    /// Peels of the disk.
    pub k: usize,
    pub forest_height: usize,
    pub width: usize,
    /// `2 (forest_height + 1)`.
    pub width_bound: usize,
    pub tw_bound: usize,
}

/// Checks `width <= 2 (height + 1)` and, arc by arc, that the crossing
/// vertices lie on the separator the forest predicts: the endpoints of `e`
/// for arcs at an edge leaf, and the forest path(s) through `e` for arcs
/// between a face node and an arc node.
pub fn certify_width_bound(
    disk: &Embedding,
    forest: &RootedForest,
    bd: &BranchDecomposition,
) -> Result<WidthCertificate, BranchError> {
    let (width, cuts) = compute_width(bd);
    let h = forest.height() + 1;
    if width > 2 * h {
        return Err(BranchError::BoundViolated(format!(
            "width {width} exceeds 2h = {}",
            2 * h
        )));
    }
    for cut in &cuts {
        let (a, b) = bd.arcs[cut.arc];
        let separator: BTreeSet<VertexId> = match (bd.nodes[a], bd.nodes[b]) {
            (NodeKind::Edge { edge }, _) | (_, NodeKind::Edge { edge }) => {
                [edge.u(), edge.v()].into()
            }
            (NodeKind::Arc { edge }, NodeKind::Face { .. })
            | (NodeKind::Face { .. }, NodeKind::Arc { edge }) => {
                let (v1, v2) = (edge.u(), edge.v());
                match forest.tree_path(v1, v2) {
                    Some(p) => p.into_iter().collect(),
                    None => forest
                        .path_to_root(v1)
                        .into_iter()
                        .chain(forest.path_to_root(v2))
                        .collect(),
                }
            }
            _ => continue,
        };
        if !cut.crossing_vertices.is_subset(&separator) {
            return Err(BranchError::BoundViolated(format!(
                "arc {a}-{b} crossed by {:?} outside separator {:?}",
                cut.crossing_vertices, separator
            )));
        }
    }
    Ok(WidthCertificate {
        k: onion_peels(disk).k(),
        forest_height: forest.height(),
        width,
        width_bound: 2 * h,
        tw_bound: treewidth_bound(width),
    })
}

/// Everything produced by [`decompose_pipeline`].
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub conversion: DiskConversion,
    pub dual_tree: DualTree,
    pub tree: BranchDecomposition,
    pub certificate: WidthCertificate,
}

/// Disk conversion, forest, dual tree, branch tree and certified width in
/// one pass. The certificate's `k` is the input's peel count.
pub fn decompose_pipeline(emb: &Embedding) -> Result<Decomposition, BranchError> {
    let conversion = to_triangulated_disk(emb)?;
    let dual_tree = build_dual_tree(&conversion.disk, &conversion.forest)?;
    let tree = build_branch_tree(&dual_tree, &conversion.disk, &conversion.forest)?;
    let mut certificate = certify_width_bound(&conversion.disk, &conversion.forest, &tree)?;
    certificate.k = conversion.trace.k_in;
    if certificate.width > 2 * certificate.k {
        return Err(BranchError::BoundViolated(format!(
            "width {} exceeds 2k = {}",
            certificate.width,
            2 * certificate.k
        )));
    }
    Ok(Decomposition {
        conversion,
        dual_tree,
        tree,
        certificate,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeJson {
    pub id: usize,
    #[serde(flatten)]
    pub kind: NodeKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsJson {
    #[serde(rename = "2h")]
    pub two_h: usize,
    pub tw: usize,
}

/// Interchange form; assignment keys are `"u-v"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchJson {
    pub nodes: Vec<NodeJson>,
    pub arcs: Vec<[usize; 2]>,
    pub assignment: BTreeMap<String, usize>,
    pub width: usize,
    pub bounds: BoundsJson,
}

impl BranchJson {
    pub fn new(bd: &BranchDecomposition, cert: &WidthCertificate) -> Self {
        BranchJson {
            nodes: bd
                .nodes
                .iter()
                .enumerate()
                .map(|(id, &kind)| NodeJson { id, kind })
                .collect(),
            arcs: bd.arcs.iter().map(|&(a, b)| [a, b]).collect(),
            assignment: bd
                .assignment
                .iter()
                .map(|(e, &l)| (format!("{}-{}", e.u(), e.v()), l))
                .collect(),
            width: cert.width,
            bounds: BoundsJson {
                two_h: cert.width_bound,
                tw: cert.tw_bound,
            },
        }
    }

    pub fn decomposition(&self) -> Result<BranchDecomposition, BranchError> {
        let mut nodes = vec![NodeKind::Internal; self.nodes.len()];
        for n in &self.nodes {
            let slot = nodes
                .get_mut(n.id)
                .ok_or_else(|| BranchError::NotATree(format!("node id {} out of range", n.id)))?;
            *slot = n.kind;
        }
        let mut assignment = BTreeMap::new();
        for (key, &leaf) in &self.assignment {
            let parse = || -> Option<Edge> {
                let (a, b) = key.split_once('-')?;
                Some(Edge::new(a.trim().parse().ok()?, b.trim().parse().ok()?))
            };
            let e = parse()
                .ok_or_else(|| BranchError::BadAssignment(format!("bad edge key {key:?}")))?;
            assignment.insert(e, leaf);
        }
        BranchDecomposition::new(
            nodes,
            self.arcs.iter().map(|&[a, b]| (a, b)).collect(),
            assignment,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;
    use crate::peel::build_rooted_forest;

    fn k4() -> Embedding {
        gen_wheel(3).unwrap()
    }

    #[test]
    fn triangle_decomposition() {
        let t = gen_cycle(3).unwrap();
        let f = build_rooted_forest(&t).unwrap();
        let dual = build_dual_tree(&t, &f).unwrap();
        assert_eq!(dual.faces.len(), 1);
        assert!(dual.arcs.is_empty());
        let bd = build_branch_tree(&dual, &t, &f).unwrap();
        assert_eq!(bd.nodes().len(), 4);
        assert_eq!(bd.degree(0), 3);
        assert_eq!(compute_width(&bd).0, 2);
        let cert = certify_width_bound(&t, &f, &bd).unwrap();
        assert_eq!(
            (cert.forest_height, cert.width, cert.width_bound),
            (0, 2, 2)
        );
    }

    #[test]
    fn k4_decomposition() {
        let g = k4();
        let f = build_rooted_forest(&g).unwrap();
        assert_eq!(f.height(), 1);
        let dual = build_dual_tree(&g, &f).unwrap();
        assert_eq!(dual.faces.len(), 3);
        assert_eq!(dual.arcs.len(), 2);
        let bd = build_branch_tree(&dual, &g, &f).unwrap();
        assert_eq!(bd.nodes().len(), 3 + 2 + 6);
        assert!(bd.max_degree() <= 3);
        let cert = certify_width_bound(&g, &f, &bd).unwrap();
        assert!(cert.width <= 4);
    }

    #[test]
    fn edge_nodes_are_the_assigned_leaves() {
        let g = gen_nested_triangles(3).unwrap();
        let f = build_rooted_forest(&g).unwrap();
        let dual = build_dual_tree(&g, &f).unwrap();
        let bd = build_branch_tree(&dual, &g, &f).unwrap();
        assert_eq!(
            bd.nodes().len(),
            dual.faces.len() + dual.arcs.len() + g.edge_count()
        );
        assert_eq!(bd.assignment().len(), g.edge_count());
        for (e, &leaf) in bd.assignment() {
            assert_eq!(bd.nodes()[leaf], NodeKind::Edge { edge: *e });
            assert_eq!(bd.degree(leaf), 1);
        }
    }

    #[test]
    fn rejects_non_disk() {
        let sq = gen_cycle(4).unwrap();
        let f = build_rooted_forest(&sq).unwrap();
        assert_eq!(build_dual_tree(&sq, &f).unwrap_err(), BranchError::NotADisk);
    }

    #[test]
    fn tw_bound_values() {
        assert_eq!(treewidth_bound(0), 1);
        assert_eq!(treewidth_bound(1), 1);
        assert_eq!(treewidth_bound(2), 2);
        assert_eq!(treewidth_bound(6), 8);
        for k in 1..=10 {
            assert_eq!(treewidth_bound(2 * k), 3 * k - 1);
        }
    }

    #[test]
    fn pipeline_examples() {
        let c4 = decompose_pipeline(&gen_cycle(4).unwrap())
            .unwrap()
            .certificate;
        assert_eq!(c4.k, 1);
        assert!(c4.width <= 2 && c4.tw_bound <= 2);

        let t3 = decompose_pipeline(&gen_nested_triangles(3).unwrap())
            .unwrap()
            .certificate;
        assert_eq!(t3.k, 3);
        assert!(t3.width <= 6 && t3.tw_bound <= 8);

        let k4 = decompose_pipeline(&k4()).unwrap().certificate;
        assert_eq!(k4.k, 2);
        assert!(k4.width <= 4 && k4.tw_bound <= 5);

        let g2 = decompose_pipeline(&gen_counterexample(2).unwrap())
            .unwrap()
            .certificate;
        assert!(g2.width <= 4);
    }

    #[test]
    fn json_round_trip() {
        let d = decompose_pipeline(&gen_nested_triangles(2).unwrap()).unwrap();
        let json = BranchJson::new(&d.tree, &d.certificate);
        let text = serde_json::to_string(&json).unwrap();
        assert!(text.contains(r#""kind":"face""#));
        assert!(text.contains(r#""2h":"#));
        let back: BranchJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.decomposition().unwrap(), d.tree);
    }

    #[test]
    fn generic_tree_validation() {
        let e = |a, b| Edge::new(a, b);
        let star = BranchDecomposition::new(
            vec![NodeKind::Internal; 4],
            vec![(0, 1), (0, 2), (0, 3)],
            BTreeMap::from([(e(0, 1), 1), (e(1, 2), 2), (e(0, 2), 3)]),
        )
        .unwrap();
        assert_eq!(compute_width(&star).0, 2);
        let bad = BranchDecomposition::new(
            vec![NodeKind::Internal; 5],
            vec![(0, 1), (0, 2), (0, 3), (0, 4)],
            BTreeMap::new(),
        );
        assert!(matches!(
            bad,
            Err(BranchError::DegreeOverflow { node: 0, degree: 4 })
        ));
        let cyc = BranchDecomposition::new(
            vec![NodeKind::Internal; 3],
            vec![(0, 1), (1, 2), (2, 0)],
            BTreeMap::new(),
        );
        assert!(matches!(cyc, Err(BranchError::NotATree(_))));
    }
}
