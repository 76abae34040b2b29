//! Edge-adding pipelines: k-outerplanar graph -> k-outerplanar triangulated
//! disk, and triangulated disk -> full triangulation with one extra peel.
//!
//! Every stage only adds edges and never takes a vertex off the outer face.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::embedding::{Dart, Edge, Embedding, VertexId};
use crate::peel::{build_rooted_forest, onion_peels, saturate_in_place, PeelError, RootedForest};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TriangulateError {
    #[error("TooSmall: need at least 3 vertices, got {0}")]
    TooSmall(usize),
    #[error("RepairStuck: every occurrence of repeated vertex {0} has adjacent neighbours")]
    RepairStuck(VertexId),
    #[error("NoEar: face starting at {0} has no ear with non-adjacent neighbours")]
    NoEar(Dart),
    #[error("NoApex: no outer vertex has exactly two outer neighbours")]
    NoApex,
    #[error("NotConnected: stage requires a connected embedding")]
    NotConnected,
    #[error(transparent)]
    Peel(#[from] PeelError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Stage {
    Saturate,
    Connect,
    OuterCut,
    InnerCut,
    Ear,
    Apex,
}

/// An edge added by one of the stages; serialized as `[u, v, "stage"]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(
    from = "(VertexId, VertexId, Stage)",
    into = "(VertexId, VertexId, Stage)"
)]
pub struct AddedEdge {
    pub u: VertexId,
    pub v: VertexId,
    pub stage: Stage,
}

impl From<(VertexId, VertexId, Stage)> for AddedEdge {
    fn from((u, v, stage): (VertexId, VertexId, Stage)) -> Self {
        AddedEdge { u, v, stage }
    }
}

impl From<AddedEdge> for (VertexId, VertexId, Stage) {
    fn from(a: AddedEdge) -> Self {
        (a.u, a.v, a.stage)
    }
}

/// Audit trail of a conversion.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiskConversionTrace {
    pub added: Vec<AddedEdge>,
    pub k_in: usize,
    pub k_out: usize,
}

impl DiskConversionTrace {
    fn log(&mut self, stage: Stage, edges: impl IntoIterator<Item = Edge>) {
        self.added.extend(edges.into_iter().map(|e| AddedEdge {
            u: e.u(),
            v: e.v(),
            stage,
        }));
    }

    pub fn count(&self, stage: Stage) -> usize {
        self.added.iter().filter(|a| a.stage == stage).count()
    }

    /// Edge set of `input` plus the added edges, or `None` if an added edge
    /// was already present or added twice.
    pub fn replay(&self, input: &Embedding) -> Option<BTreeSet<Edge>> {
        let mut edges: BTreeSet<Edge> = input.edges().into_iter().collect();
        for a in &self.added {
            if !edges.insert(Edge::new(a.u, a.v)) {
                return None;
            }
        }
        Some(edges)
    }
}

/// Outer walk containing `v`, rotated to start at its smallest dart.
fn outer_walk_containing(emb: &Embedding, v: VertexId) -> Option<Vec<Dart>> {
    emb.outer_darts().iter().find_map(|&d| {
        let walk = emb.walk_from(d);
        walk.iter().any(|x| x.origin == v).then(|| canonical(walk))
    })
}

fn canonical(mut walk: Vec<Dart>) -> Vec<Dart> {
    let at = walk
        .iter()
        .enumerate()
        .min_by_key(|(_, d)| **d)
        .map(|(i, _)| i)
        .unwrap_or(0);
    walk.rotate_left(at);
    walk
}

/// The dart entering the first occurrence of `v` on its outer walk, or
/// `None` for an isolated vertex.
fn outer_corner(emb: &Embedding, v: VertexId) -> Option<Dart> {
    let walk = outer_walk_containing(emb, v)?;
    let i = walk.iter().position(|d| d.origin == v)?;
    Some(walk[(i + walk.len() - 1) % walk.len()])
}

fn connect_in_place(emb: &mut Embedding) -> Vec<Edge> {
    let outer = emb.outer_vertices();
    let mut reps: Vec<VertexId> = emb
        .components()
        .iter()
        .map(|c| {
            *c.iter()
                .find(|v| outer.contains(v))
                .expect("component touches the outer face")
        })
        .collect();
    reps.sort_unstable();
    let Some((&hub, rest)) = reps.split_first() else {
        return Vec::new();
    };
    let mut added = Vec::new();
    for &w in rest {
        let into_hub = outer_corner(emb, hub);
        let into_w = outer_corner(emb, w);
        emb.bridge_components(hub, into_hub, w, into_w);
        added.push(Edge::new(hub, w));
    }
    added
}

/// Looks for a repeated vertex with an occurrence `a, v, b` on `walk` whose
/// flanking neighbours are distinct and non-adjacent. Returns the positions
/// of `a` and `b`, or the smallest repeated vertex if every occurrence is
/// blocked. `Ok(None)` means the walk is simple.
fn find_cut_repair(emb: &Embedding, walk: &[Dart]) -> Result<Option<(usize, usize)>, VertexId> {
    let m = walk.len();
    let mut count: BTreeMap<VertexId, usize> = BTreeMap::new();
    for d in walk {
        *count.entry(d.origin).or_default() += 1;
    }
    let repeated: Vec<VertexId> = count
        .iter()
        .filter(|(_, &c)| c > 1)
        .map(|(&v, _)| v)
        .collect();
    let Some(&first) = repeated.first() else {
        return Ok(None);
    };
    for &v in &repeated {
        for i in (0..m).filter(|&i| walk[i].origin == v) {
            let a = walk[(i + m - 1) % m].origin;
            let b = walk[i].target;
            if a != b && !emb.are_adjacent(a, b) {
                return Ok(Some(((i + m - 1) % m, (i + 1) % m)));
            }
        }
    }
    Err(first)
}

fn repair_outer_in_place(emb: &mut Embedding) -> Result<Vec<Edge>, TriangulateError> {
    if !emb.is_connected() {
        return Err(TriangulateError::NotConnected);
    }
    let mut added = Vec::new();
    loop {
        let Some(&start) = emb.outer_darts().first() else {
            return Ok(added);
        };
        let walk = canonical(emb.walk_from(start));
        match find_cut_repair(emb, &walk) {
            Ok(None) => return Ok(added),
            Ok(Some((i, j))) => {
                let (rest, _) = emb.split_face(&walk, i, j).expect("repair edge is new");
                emb.move_outer(&walk, rest[0]);
                added.push(rest[0].edge());
            }
            Err(v) => return Err(TriangulateError::RepairStuck(v)),
        }
    }
}

fn repair_inner_in_place(emb: &mut Embedding) -> Result<Vec<Edge>, TriangulateError> {
    let mut queue: Vec<Vec<Dart>> = emb.inner_faces().map(|(_, f)| f.darts().to_vec()).collect();
    queue.reverse();
    let mut added = Vec::new();
    while let Some(walk) = queue.pop() {
        match find_cut_repair(emb, &walk) {
            Ok(None) => {}
            Ok(Some((i, j))) => {
                let (a, b) = emb.split_face(&walk, i, j).expect("repair edge is new");
                added.push(a[0].edge());
                queue.push(canonical(b));
                queue.push(canonical(a));
            }
            Err(v) => return Err(TriangulateError::RepairStuck(v)),
        }
    }
    Ok(added)
}

fn ears_in_place(emb: &mut Embedding) -> Result<Vec<Edge>, TriangulateError> {
    let faces: Vec<Vec<Dart>> = emb
        .inner_faces()
        .filter(|(_, f)| f.len() > 3)
        .map(|(_, f)| f.darts().to_vec())
        .collect();
    let mut added = Vec::new();
    for mut walk in faces {
        while walk.len() > 3 {
            let m = walk.len();
            let ear = (0..m).find(|&j| {
                let a = walk[(j + m - 1) % m].origin;
                let b = walk[j].target;
                !emb.are_adjacent(a, b)
            });
            let Some(j) = ear else {
                return Err(TriangulateError::NoEar(walk[0]));
            };
            let (rest, _) = emb
                .split_face(&walk, (j + m - 1) % m, (j + 1) % m)
                .expect("ear chord is new");
            added.push(rest[0].edge());
            walk = canonical(rest);
        }
    }
    Ok(added)
}

fn run_stage<T>(
    emb: &Embedding,
    stage: impl FnOnce(&mut Embedding) -> Result<T, TriangulateError>,
) -> Result<Embedding, TriangulateError> {
    let mut out = emb.clone();
    stage(&mut out)?;
    out.normalize();
    Ok(out)
}

/// Joins all components into one by edges between their smallest outer
/// vertices, drawn in the outer region (a star centred at the globally
/// smallest outer vertex). Adds exactly `components - 1` edges.
pub fn connect_components(emb: &Embedding) -> Embedding {
    run_stage(emb, |e| Ok(connect_in_place(e))).expect("connecting cannot fail")
}

/// Makes the outer walk of a connected embedding simple by joining the
/// outer neighbours `a`, `b` around repeated occurrences `a, v, b`.
pub fn repair_outer_cut_vertices(emb: &Embedding) -> Result<Embedding, TriangulateError> {
    run_stage(emb, repair_outer_in_place)
}

/// The same repair applied inside every inner face.
pub fn repair_inner_cut_vertices(emb: &Embedding) -> Result<Embedding, TriangulateError> {
    run_stage(emb, repair_inner_in_place)
}

/// Cuts ears off every inner face of length four or more until all inner
/// faces are triangles. Faces must be simple.
pub fn triangulate_inner_faces(emb: &Embedding) -> Result<Embedding, TriangulateError> {
    run_stage(emb, ears_in_place)
}

/// Result of [`to_triangulated_disk`].
#[derive(Clone, Debug)]
pub struct DiskConversion {
    pub disk: Embedding,
    /// Breadth-first forest computed right after saturation; it stays an
    /// outer-face-rooted spanning forest of the final disk.
    pub forest: RootedForest,
    pub trace: DiskConversionTrace,
}

/// Saturate, connect, repair cut vertices on the outer face and inside
/// inner faces, then triangulate inner faces. The output is a triangulated
/// disk with the same outer vertices and no more peels than the input.
pub fn to_triangulated_disk(emb: &Embedding) -> Result<DiskConversion, TriangulateError> {
    if emb.vertex_count() < 3 {
        return Err(TriangulateError::TooSmall(emb.vertex_count()));
    }
    let mut trace = DiskConversionTrace {
        k_in: onion_peels(emb).k(),
        ..Default::default()
    };
    let mut work = emb.clone();
    let sat = saturate_in_place(&mut work);
    work.normalize();
    trace.log(Stage::Saturate, sat);
    let forest = build_rooted_forest(&work)?;

    let joined = connect_in_place(&mut work);
    work.normalize();
    trace.log(Stage::Connect, joined);

    let outer = repair_outer_in_place(&mut work)?;
    work.normalize();
    trace.log(Stage::OuterCut, outer);

    let inner = repair_inner_in_place(&mut work)?;
    work.normalize();
    trace.log(Stage::InnerCut, inner);

    let ears = ears_in_place(&mut work)?;
    work.normalize();
    trace.log(Stage::Ear, ears);

    trace.k_out = onion_peels(&work).k();
    Ok(DiskConversion {
        disk: work,
        forest,
        trace,
    })
}

/// Result of [`to_full_triangulation`].
#[derive(Clone, Debug)]
pub struct FullTriangulation {
    pub triangulation: Embedding,
    /// Outer vertex fanned to the whole outer cycle.
    pub apex: VertexId,
    pub trace: DiskConversionTrace,
}

/// Converts to a triangulated disk, then picks the smallest outer vertex
/// `r` with exactly two outer neighbours and joins it to every other outer
/// vertex through the outer region, in outer-walk order. The last fan
/// triangle `(r, c_{m-2}, c_{m-1})` becomes the outer face. Peels grow by at
/// most one.
pub fn to_full_triangulation(emb: &Embedding) -> Result<FullTriangulation, TriangulateError> {
    let DiskConversion {
        disk: mut work,
        mut trace,
        ..
    } = to_triangulated_disk(emb)?;
    let outer_set = work.outer_vertices();
    let apex = outer_set
        .iter()
        .copied()
        .find(|&v| {
            work.rotation(v)
                .iter()
                .filter(|w| outer_set.contains(w))
                .count()
                == 2
        })
        .ok_or(TriangulateError::NoApex)?;
    let mut walk = outer_walk_containing(&work, apex).expect("apex is on the outer face");
    let at = walk
        .iter()
        .position(|d| d.origin == apex)
        .expect("apex on walk");
    walk.rotate_left(at);
    let targets: Vec<VertexId> = walk
        .iter()
        .skip(2)
        .take(walk.len().saturating_sub(3))
        .map(|d| d.origin)
        .collect();
    let mut fan = Vec::new();
    for t in targets {
        if work.are_adjacent(apex, t) {
            continue;
        }
        let j = walk
            .iter()
            .position(|d| d.origin == t)
            .expect("target on walk");
        let (rest, _) = work.split_face(&walk, 0, j).expect("fan edge is new");
        work.move_outer(&walk, rest[0]);
        fan.push(rest[0].edge());
        walk = rest;
    }
    work.normalize();
    trace.log(Stage::Apex, fan);
    trace.k_out = onion_peels(&work).k();
    Ok(FullTriangulation {
        triangulation: work,
        apex,
        trace,
    })
}
