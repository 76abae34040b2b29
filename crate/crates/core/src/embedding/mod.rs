//! Combinatorial planar embeddings stored as rotation systems.
//!
//! An [`Embedding`] records, for every vertex, the clockwise cyclic order of
//! its neighbours, plus one designated dart per connected component that lies
//! on the outer face. Faces are recovered by walking darts with a single fixed
//! successor rule:
//!
//! ```text
//! next(u -> v) = (v -> w),  w = cyclic successor of u in rotation(v)
//! ```
//!
//! Every component lives in the outer region; components nested inside an
//! inner face are rejected. Isolated vertices carry an empty rotation and are
//! considered to lie on the outer face.

mod dot;
mod dual;
mod epg;

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use dot::to_dot;
pub use dual::{DualEdge, DualGraph};
pub use epg::{parse_epg, write_epg};

use crate::graph::SimpleGraph;
use crate::peel::PeelDecomposition;

pub type VertexId = u32;

/// Index of a face walk in [`Embedding::faces`].
pub type FaceId = usize;

/// One direction of an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Dart {
    pub origin: VertexId,
    pub target: VertexId,
}

impl Dart {
    pub fn new(origin: VertexId, target: VertexId) -> Self {
        Dart { origin, target }
    }

    pub fn twin(self) -> Self {
        Dart::new(self.target, self.origin)
    }

    pub fn edge(self) -> Edge {
        Edge::new(self.origin, self.target)
    }
}

impl fmt::Display for Dart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.origin, self.target)
    }
}

/// Undirected edge, stored with the smaller endpoint first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "[VertexId; 2]", from = "[VertexId; 2]")]
pub struct Edge {
    u: VertexId,
    v: VertexId,
}

impl Edge {
    pub fn new(a: VertexId, b: VertexId) -> Self {
        if a <= b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn u(self) -> VertexId {
        self.u
    }

    pub fn v(self) -> VertexId {
        self.v
    }

    /// The dart from the smaller to the larger endpoint.
    pub fn canonical_dart(self) -> Dart {
        Dart::new(self.u, self.v)
    }

    pub fn contains(self, x: VertexId) -> bool {
        self.u == x || self.v == x
    }
}

impl From<Edge> for [VertexId; 2] {
    fn from(e: Edge) -> Self {
        [e.u, e.v]
    }
}

impl From<[VertexId; 2]> for Edge {
    fn from(p: [VertexId; 2]) -> Self {
        Edge::new(p[0], p[1])
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// A closed walk of darts bounding one face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceWalk {
    darts: Vec<Dart>,
    is_outer: bool,
}

impl FaceWalk {
    pub fn darts(&self) -> &[Dart] {
        &self.darts
    }

    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    pub fn is_outer(&self) -> bool {
        self.is_outer
    }

    /// Vertices in walk order, with repetitions.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.darts.iter().map(|d| d.origin)
    }

    pub fn vertex_set(&self) -> BTreeSet<VertexId> {
        self.vertices().collect()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.darts.iter().any(|d| d.origin == v)
    }

    /// True when no vertex repeats along the walk.
    pub fn is_simple(&self) -> bool {
        let mut seen = HashSet::with_capacity(self.darts.len());
        self.darts.iter().all(|d| seen.insert(d.origin))
    }

    /// Positions along the walk at which `v` occurs.
    pub fn occurrences(&self, v: VertexId) -> Vec<usize> {
        self.darts
            .iter()
            .enumerate()
            .filter(|(_, d)| d.origin == v)
            .map(|(i, _)| i)
            .collect()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EmbedError {
    #[error("UnknownVertex: vertex {0} is not listed")]
    UnknownVertex(VertexId),
    #[error("DuplicateVertex: vertex {0} is listed twice")]
    DuplicateVertex(VertexId),
    #[error("SelfLoop: vertex {0} lists itself as a neighbour")]
    SelfLoop(VertexId),
    #[error("ParallelEdge: vertex {0} lists neighbour {1} more than once")]
    ParallelEdge(VertexId, VertexId),
    #[error("AsymmetricAdjacency: {0} lists {1} but {1} does not list {0}")]
    AsymmetricAdjacency(VertexId, VertexId),
    #[error(
        "EulerViolation: component of vertex {vertex} has V={vertices} E={edges} F={faces}, V-E+F != 2"
    )]
    EulerViolation {
        vertex: VertexId,
        vertices: usize,
        edges: usize,
        faces: usize,
    },
    #[error("NestedComponent: component of vertex {0} has no outer dart")]
    NestedComponent(VertexId),
    #[error("ConflictingOuterFaces: component of vertex {0} names two different outer faces")]
    ConflictingOuterFaces(VertexId),
    #[error("NotADart: {0} is not a dart of the embedding")]
    NotADart(Dart),
    #[error("UnknownFace: the walk starting at {0} is not a face of the embedding")]
    UnknownFace(Dart),
    #[error("NotOnFace: vertex {0} does not occur on the face")]
    NotOnFace(VertexId),
    #[error("AmbiguousOccurrence: vertex {0} occurs several times on the face")]
    AmbiguousOccurrence(VertexId),
    #[error("EdgeExists: {0} and {1} are already adjacent")]
    EdgeExists(VertexId, VertexId),
    #[error("SameVertex: cannot join vertex {0} to itself")]
    SameVertex(VertexId),
    #[error("NotOnOuterFace: vertex {0} is not on the outer face")]
    NotOnOuterFace(VertexId),
    #[error("Disconnected: the embedding has more than one component")]
    Disconnected,
    #[error("Parse: line {line}: {message}")]
    Parse { line: usize, message: String },
}

#[derive(Clone, Debug)]
struct FaceTable {
    walks: Vec<FaceWalk>,
    face_of: HashMap<Dart, FaceId>,
}

/// A rotation system with a designated outer region.
///
/// Values are immutable once built; every surgery returns a fresh embedding.
/// Rotations are stored starting at the smallest neighbour and outer darts
/// are the smallest dart of their face, so structurally equal embeddings
/// compare equal and serialize identically.
#[derive(Clone)]
pub struct Embedding {
    rotation: BTreeMap<VertexId, Vec<VertexId>>,
    position: HashMap<Dart, usize>,
    outer: Vec<Dart>,
    faces: OnceLock<FaceTable>,
    peels: OnceLock<PeelDecomposition>,
}

impl PartialEq for Embedding {
    fn eq(&self, other: &Self) -> bool {
        self.rotation == other.rotation && self.outer == other.outer
    }
}

impl Eq for Embedding {}

impl fmt::Debug for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Embedding")
            .field("rotation", &self.rotation)
            .field("outer", &self.outer)
            .finish()
    }
}

/// Validates a rotation system and builds an [`Embedding`].
///
/// `vertices` may list vertices absent from `rotation`; those are isolated.
/// `outer` names one dart per component that lies on the outer face.
pub fn build_embedding(
    vertices: &[VertexId],
    rotation: &BTreeMap<VertexId, Vec<VertexId>>,
    outer: &[(VertexId, VertexId)],
) -> Result<Embedding, EmbedError> {
    let mut full = BTreeMap::new();
    for &v in vertices {
        if full.insert(v, Vec::new()).is_some() {
            return Err(EmbedError::DuplicateVertex(v));
        }
    }
    for (&v, nbrs) in rotation {
        match full.get_mut(&v) {
            Some(slot) => *slot = nbrs.clone(),
            None => return Err(EmbedError::UnknownVertex(v)),
        }
    }
    Embedding::new(full, outer.iter().map(|&(u, v)| Dart::new(u, v)))
}

impl Embedding {
    /// Builds an embedding from a full rotation map (every vertex is a key).
    pub fn new(
        rotation: BTreeMap<VertexId, Vec<VertexId>>,
        outer: impl IntoIterator<Item = Dart>,
    ) -> Result<Self, EmbedError> {
        let mut emb = Embedding {
            rotation,
            position: HashMap::new(),
            outer: outer.into_iter().collect(),
            faces: OnceLock::new(),
            peels: OnceLock::new(),
        };
        emb.check_adjacency()?;
        emb.rebuild_positions();
        emb.check_topology()?;
        emb.normalize();
        Ok(emb)
    }

    pub fn empty() -> Self {
        Embedding {
            rotation: BTreeMap::new(),
            position: HashMap::new(),
            outer: Vec::new(),
            faces: OnceLock::new(),
            peels: OnceLock::new(),
        }
    }

    fn check_adjacency(&self) -> Result<(), EmbedError> {
        for (&v, nbrs) in &self.rotation {
            let mut seen = HashSet::with_capacity(nbrs.len());
            for &w in nbrs {
                if w == v {
                    return Err(EmbedError::SelfLoop(v));
                }
                if !seen.insert(w) {
                    return Err(EmbedError::ParallelEdge(v, w));
                }
                match self.rotation.get(&w) {
                    None => return Err(EmbedError::UnknownVertex(w)),
                    Some(back) if !back.contains(&v) => {
                        return Err(EmbedError::AsymmetricAdjacency(v, w))
                    }
                    Some(_) => {}
                }
            }
        }
        Ok(())
    }

    /// Euler characteristic per component and outer-face bookkeeping.
    fn check_topology(&mut self) -> Result<(), EmbedError> {
        for &d in &self.outer {
            if !self.position.contains_key(&d) {
                return Err(EmbedError::NotADart(d));
            }
        }
        let walks = trace_walks(&self.rotation, &self.position);
        let mut face_of = HashMap::new();
        for (i, w) in walks.iter().enumerate() {
            for &d in w {
                face_of.insert(d, i);
            }
        }
        let comp = self.component_labels();
        let mut stats: BTreeMap<usize, (VertexId, usize, usize, usize)> = BTreeMap::new();
        for (&v, nbrs) in &self.rotation {
            if nbrs.is_empty() {
                continue;
            }
            let e = stats.entry(comp[&v]).or_insert((v, 0, 0, 0));
            e.1 += 1;
            e.2 += nbrs.len();
        }
        for w in &walks {
            stats
                .get_mut(&comp[&w[0].origin])
                .expect("walk component")
                .3 += 1;
        }
        for &(vertex, vertices, darts, faces) in stats.values() {
            let edges = darts / 2;
            if vertices + faces != edges + 2 {
                return Err(EmbedError::EulerViolation {
                    vertex,
                    vertices,
                    edges,
                    faces,
                });
            }
        }
        let mut outer_face: HashMap<usize, FaceId> = HashMap::new();
        for &d in &self.outer {
            let c = comp[&d.origin];
            let f = face_of[&d];
            match outer_face.insert(c, f) {
                Some(prev) if prev != f => {
                    return Err(EmbedError::ConflictingOuterFaces(d.origin));
                }
                _ => {}
            }
        }
        for (&c, &(vertex, ..)) in &stats {
            if !outer_face.contains_key(&c) {
                return Err(EmbedError::NestedComponent(vertex));
            }
        }
        Ok(())
    }

    fn component_labels(&self) -> HashMap<VertexId, usize> {
        let mut label = HashMap::with_capacity(self.rotation.len());
        let mut next = 0;
        for &s in self.rotation.keys() {
            if label.contains_key(&s) {
                continue;
            }
            label.insert(s, next);
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.rotation[&v] {
                    if let Entry::Vacant(slot) = label.entry(w) {
                        slot.insert(next);
                        queue.push_back(w);
                    }
                }
            }
            next += 1;
        }
        label
    }

    fn rebuild_positions(&mut self) {
        self.position.clear();
        for (&v, nbrs) in &self.rotation {
            for (i, &w) in nbrs.iter().enumerate() {
                self.position.insert(Dart::new(v, w), i);
            }
        }
    }

    /// Puts rotations and outer darts into canonical form and drops caches.
    pub(crate) fn normalize(&mut self) {
        for nbrs in self.rotation.values_mut() {
            if let Some(min_at) = nbrs
                .iter()
                .enumerate()
                .min_by_key(|(_, &w)| w)
                .map(|(i, _)| i)
            {
                nbrs.rotate_left(min_at);
            }
        }
        self.rebuild_positions();
        let outer: BTreeSet<Dart> = self
            .outer
            .iter()
            .map(|&d| *self.walk_from(d).iter().min().expect("nonempty walk"))
            .collect();
        self.outer = outer.into_iter().collect();
        self.invalidate();
    }

    fn invalidate(&mut self) {
        self.faces = OnceLock::new();
        self.peels = OnceLock::new();
    }

    pub(crate) fn peel_cache(&self) -> &OnceLock<PeelDecomposition> {
        &self.peels
    }

    // ---- queries ----

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.position.len() / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.rotation.keys().copied()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.rotation.contains_key(&v)
    }

    /// Clockwise neighbour order of `v`, starting at its smallest neighbour.
    pub fn rotation(&self, v: VertexId) -> &[VertexId] {
        self.rotation.get(&v).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rotation(v).len()
    }

    pub fn are_adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.position.contains_key(&Dart::new(u, v))
    }

    pub fn has_dart(&self, d: Dart) -> bool {
        self.position.contains_key(&d)
    }

    /// All darts in ascending order.
    pub fn darts(&self) -> Vec<Dart> {
        let mut darts: Vec<Dart> = self.position.keys().copied().collect();
        darts.sort_unstable();
        darts
    }

    pub fn edges(&self) -> Vec<Edge> {
        let mut edges: Vec<Edge> = self
            .position
            .keys()
            .filter(|d| d.origin < d.target)
            .map(|d| d.edge())
            .collect();
        edges.sort_unstable();
        edges
    }

    /// The designated outer darts, one per component with edges.
    pub fn outer_darts(&self) -> &[Dart] {
        &self.outer
    }

    pub fn graph(&self) -> SimpleGraph {
        SimpleGraph::new(self.vertices(), self.edges())
    }

    /// Face successor: `next(u -> v) = (v -> w)`, `w` following `u` around `v`.
    pub fn next_dart(&self, d: Dart) -> Dart {
        next_in(&self.rotation, &self.position, d)
    }

    /// The face walk that starts at `d`.
    pub fn walk_from(&self, d: Dart) -> Vec<Dart> {
        walk_in(&self.rotation, &self.position, d)
    }

    fn face_table(&self) -> &FaceTable {
        self.faces.get_or_init(|| {
            let raw = trace_walks(&self.rotation, &self.position);
            let outer: HashSet<Dart> = self.outer.iter().copied().collect();
            let mut face_of = HashMap::with_capacity(self.position.len());
            let walks = raw
                .into_iter()
                .enumerate()
                .map(|(i, darts)| {
                    for &d in &darts {
                        face_of.insert(d, i);
                    }
                    let is_outer = darts.iter().any(|d| outer.contains(d));
                    FaceWalk { darts, is_outer }
                })
                .collect();
            FaceTable { walks, face_of }
        })
    }

    /// Every face walk, ordered by smallest dart; each walk starts at its
    /// smallest dart.
    pub fn faces(&self) -> &[FaceWalk] {
        &self.face_table().walks
    }

    pub fn face(&self, id: FaceId) -> &FaceWalk {
        &self.face_table().walks[id]
    }

    pub fn face_of(&self, d: Dart) -> Option<FaceId> {
        self.face_table().face_of.get(&d).copied()
    }

    pub fn face_count(&self) -> usize {
        self.faces().len()
    }

    pub fn outer_faces(&self) -> impl Iterator<Item = (FaceId, &FaceWalk)> + '_ {
        self.faces().iter().enumerate().filter(|(_, f)| f.is_outer)
    }

    pub fn inner_faces(&self) -> impl Iterator<Item = (FaceId, &FaceWalk)> + '_ {
        self.faces().iter().enumerate().filter(|(_, f)| !f.is_outer)
    }

    /// Faces incident to `v` (one entry per corner, so repeats are possible).
    pub fn faces_around(&self, v: VertexId) -> impl Iterator<Item = FaceId> + '_ {
        let table = self.face_table();
        self.rotation(v)
            .iter()
            .map(move |&w| table.face_of[&Dart::new(v, w)])
    }

    /// Vertices on an outer face walk, plus isolated vertices.
    pub fn outer_vertices(&self) -> BTreeSet<VertexId> {
        let mut set: BTreeSet<VertexId> =
            self.outer_faces().flat_map(|(_, f)| f.vertices()).collect();
        set.extend(
            self.rotation
                .iter()
                .filter(|(_, n)| n.is_empty())
                .map(|(&v, _)| v),
        );
        set
    }

    pub fn component_count(&self) -> usize {
        self.component_labels()
            .values()
            .collect::<HashSet<_>>()
            .len()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let labels = self.component_labels();
        let mut groups: BTreeMap<usize, Vec<VertexId>> = BTreeMap::new();
        for v in self.vertices() {
            groups.entry(labels[&v]).or_default().push(v);
        }
        groups.into_values().collect()
    }

    /// Outer face is a simple cycle of length at least 3 and every inner face
    /// is a triangle.
    pub fn is_triangulated_disk(&self) -> bool {
        if self.vertex_count() < 3 || !self.is_connected() {
            return false;
        }
        let mut outer_seen = false;
        for f in self.faces() {
            if f.is_outer {
                if outer_seen || f.len() < 3 || !f.is_simple() {
                    return false;
                }
                outer_seen = true;
            } else if f.len() != 3 {
                return false;
            }
        }
        outer_seen
    }

    /// Every face, the outer one included, is a triangle.
    pub fn is_triangulation(&self) -> bool {
        self.vertex_count() >= 3 && self.is_connected() && self.faces().iter().all(|f| f.len() == 3)
    }

    // ---- surgery returning new values ----

    /// Adds the edge `u`-`v` inside `face`, splitting it in two.
    ///
    /// Each endpoint must occur exactly once on the face; use
    /// [`Embedding::add_edge_at`] to pick among repeated occurrences.
    pub fn add_edge_in_face(
        &self,
        face: &FaceWalk,
        u: VertexId,
        v: VertexId,
    ) -> Result<Embedding, EmbedError> {
        let pick = |x: VertexId| match face.occurrences(x).as_slice() {
            [] => Err(EmbedError::NotOnFace(x)),
            [i] => Ok(*i),
            _ => Err(EmbedError::AmbiguousOccurrence(x)),
        };
        if u == v {
            return Err(EmbedError::SameVertex(u));
        }
        let i = pick(u)?;
        let j = pick(v)?;
        self.add_edge_at(face, i, j)
    }

    /// Adds an edge between the origins of `face.darts()[i]` and
    /// `face.darts()[j]`, inserted into the corners those darts leave from.
    /// If the face was outer, the piece holding the outer dart stays outer.
    pub fn add_edge_at(
        &self,
        face: &FaceWalk,
        i: usize,
        j: usize,
    ) -> Result<Embedding, EmbedError> {
        let start = *face
            .darts
            .first()
            .ok_or(EmbedError::UnknownFace(Dart::new(0, 0)))?;
        if !self.has_dart(start) || self.walk_from(start) != face.darts {
            return Err(EmbedError::UnknownFace(start));
        }
        let mut out = self.clone();
        out.split_face(&face.darts, i, j)?;
        out.normalize();
        Ok(out)
    }

    /// Deletes every vertex of `remove` (all must be outer vertices).
    ///
    /// A surviving face becomes outer when one of its darts bounded an old
    /// outer face or an old face that touched a removed vertex.
    pub fn remove_vertices(&self, remove: &BTreeSet<VertexId>) -> Result<Embedding, EmbedError> {
        let outer_vertices = self.outer_vertices();
        if let Some(&v) = remove.iter().find(|v| !outer_vertices.contains(v)) {
            return Err(EmbedError::NotOnOuterFace(v));
        }
        let table = self.face_table();
        let flagged_faces: Vec<bool> = table
            .walks
            .iter()
            .map(|f| f.is_outer || f.darts.iter().any(|d| remove.contains(&d.origin)))
            .collect();

        let rotation: BTreeMap<VertexId, Vec<VertexId>> = self
            .rotation
            .iter()
            .filter(|(v, _)| !remove.contains(v))
            .map(|(&v, nbrs)| {
                let kept = nbrs
                    .iter()
                    .copied()
                    .filter(|w| !remove.contains(w))
                    .collect();
                (v, kept)
            })
            .collect();
        let mut position = HashMap::new();
        for (&v, nbrs) in &rotation {
            for (i, &w) in nbrs.iter().enumerate() {
                position.insert(Dart::new(v, w), i);
            }
        }
        // One outer face per surviving component: the one holding the
        // smallest flagged dart.
        let mut survivor = Embedding {
            rotation,
            position,
            outer: Vec::new(),
            faces: OnceLock::new(),
            peels: OnceLock::new(),
        };
        let labels = survivor.component_labels();
        let mut chosen: BTreeMap<usize, Dart> = BTreeMap::new();
        for d in survivor.darts() {
            if flagged_faces[table.face_of[&d]] {
                chosen.entry(labels[&d.origin]).or_insert(d);
            }
        }
        survivor.outer = chosen.into_values().collect();
        survivor.check_topology()?;
        survivor.normalize();
        Ok(survivor)
    }

    // ---- crate-internal mutation ----

    /// Inserts `v` into the rotation of `u` directly after `after`
    /// (or as the only neighbour when `after` is `None`).
    fn insert_neighbor(&mut self, u: VertexId, after: Option<VertexId>, v: VertexId) {
        let nbrs = self.rotation.get_mut(&u).expect("vertex exists");
        let at = match after {
            Some(x) => self.position[&Dart::new(u, x)] + 1,
            None => {
                debug_assert!(nbrs.is_empty());
                0
            }
        };
        nbrs.insert(at, v);
        for (i, &w) in nbrs.iter().enumerate().skip(at) {
            self.position.insert(Dart::new(u, w), i);
        }
    }

    /// Splits the face whose walk is `walk` by a new edge between the origins
    /// of `walk[i]` and `walk[j]`. Returns the two resulting walks; the first
    /// starts with the new dart `u -> v` and continues along `walk[j..]`, the
    /// second starts with `v -> u` and continues along `walk[i..j]`.
    ///
    /// Caches are dropped but rotations are not re-normalized; callers finish
    /// with [`Embedding::normalize`].
    pub(crate) fn split_face(
        &mut self,
        walk: &[Dart],
        i: usize,
        j: usize,
    ) -> Result<(Vec<Dart>, Vec<Dart>), EmbedError> {
        let m = walk.len();
        let u = walk[i].origin;
        let v = walk[j].origin;
        if u == v {
            return Err(EmbedError::SameVertex(u));
        }
        if self.are_adjacent(u, v) {
            return Err(EmbedError::EdgeExists(u, v));
        }
        let into_u = walk[(i + m - 1) % m];
        let into_v = walk[(j + m - 1) % m];
        self.insert_neighbor(u, Some(into_u.origin), v);
        self.insert_neighbor(v, Some(into_v.origin), u);
        self.invalidate();

        let uv = Dart::new(u, v);
        let mut first = vec![uv];
        let mut k = j;
        while k != i {
            first.push(walk[k]);
            k = (k + 1) % m;
        }
        let mut second = vec![uv.twin()];
        let mut k = i;
        while k != j {
            second.push(walk[k]);
            k = (k + 1) % m;
        }
        debug_assert_eq!(self.walk_from(uv), first);
        debug_assert_eq!(self.walk_from(uv.twin()), second);
        Ok((first, second))
    }

    /// Joins two different components with an edge `u`-`v` placed in the
    /// corners entered by `into_u` and `into_v` (outer-face darts of the
    /// respective components; `None` for an isolated endpoint). The merged
    /// component's outer dart becomes `u -> v`.
    pub(crate) fn bridge_components(
        &mut self,
        u: VertexId,
        into_u: Option<Dart>,
        v: VertexId,
        into_v: Option<Dart>,
    ) {
        let old: HashSet<Dart> = [into_u, into_v]
            .into_iter()
            .flatten()
            .flat_map(|d| self.walk_from(d))
            .collect();
        self.outer.retain(|d| !old.contains(d));
        self.insert_neighbor(u, into_u.map(|d| d.origin), v);
        self.insert_neighbor(v, into_v.map(|d| d.origin), u);
        self.outer.push(Dart::new(u, v));
        self.invalidate();
    }

    /// Re-designates the outer dart of the component whose outer dart lies
    /// in `old_face`.
    pub(crate) fn move_outer(&mut self, old_face: &[Dart], new_outer: Dart) {
        let old: HashSet<&Dart> = old_face.iter().collect();
        for d in self.outer.iter_mut() {
            if old.contains(d) {
                *d = new_outer;
                return;
            }
        }
        debug_assert!(false, "face does not hold an outer dart");
    }

    /// Re-runs the full validation; used by tests and debug assertions.
    pub fn validate(&self) -> Result<(), EmbedError> {
        Embedding::new(self.rotation.clone(), self.outer.iter().copied()).map(|_| ())
    }

    pub(crate) fn rotation_map(&self) -> &BTreeMap<VertexId, Vec<VertexId>> {
        &self.rotation
    }
}

fn next_in(
    rotation: &BTreeMap<VertexId, Vec<VertexId>>,
    position: &HashMap<Dart, usize>,
    d: Dart,
) -> Dart {
    let around = &rotation[&d.target];
    let at = position[&d.twin()];
    Dart::new(d.target, around[(at + 1) % around.len()])
}

fn walk_in(
    rotation: &BTreeMap<VertexId, Vec<VertexId>>,
    position: &HashMap<Dart, usize>,
    start: Dart,
) -> Vec<Dart> {
    let mut walk = vec![start];
    let mut d = next_in(rotation, position, start);
    while d != start {
        walk.push(d);
        d = next_in(rotation, position, d);
    }
    walk
}

/// All face walks, each rotated to begin at its smallest dart, ordered by
/// that dart.
fn trace_walks(
    rotation: &BTreeMap<VertexId, Vec<VertexId>>,
    position: &HashMap<Dart, usize>,
) -> Vec<Vec<Dart>> {
    let mut darts: Vec<Dart> = position.keys().copied().collect();
    darts.sort_unstable();
    let mut seen: HashSet<Dart> = HashSet::with_capacity(darts.len());
    let mut walks = Vec::new();
    for d in darts {
        if seen.contains(&d) {
            continue;
        }
        let walk = walk_in(rotation, position, d);
        seen.extend(walk.iter().copied());
        walks.push(walk);
    }
    walks
}
