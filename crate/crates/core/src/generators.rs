//! Deterministic builders for test and demonstration graphs.
//!
//! Every family is laid out as a straight-line drawing and converted to a
//! rotation system by sorting neighbours clockwise by angle; the outer face
//! is the walk with negative signed area. The drawing is never exposed.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::embedding::{parse_epg, Dart, Embedding, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("BadParameter: {0}")]
    BadParameter(String),
}

fn bad(msg: impl Into<String>) -> GenError {
    GenError::BadParameter(msg.into())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    NestedTriangles,
    Counterexample,
    K4MinusEdge,
    Cycle,
    Wheel,
    Path,
    RandomKOuter,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::NestedTriangles,
        Family::Counterexample,
        Family::K4MinusEdge,
        Family::Cycle,
        Family::Wheel,
        Family::Path,
        Family::RandomKOuter,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::NestedTriangles => "nested-triangles",
            Family::Counterexample => "counterexample",
            Family::K4MinusEdge => "k4-minus-edge",
            Family::Cycle => "cycle",
            Family::Wheel => "wheel",
            Family::Path => "path",
            Family::RandomKOuter => "random-kouter",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| bad(format!("unknown family `{s}`")))
    }
}

/// A family plus its parameters; `width` and `seed` only matter for
/// [`Family::RandomKOuter`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GadgetSpec {
    pub family: Family,
    pub parameter: u32,
    pub width: u32,
    pub seed: u64,
}

impl GadgetSpec {
    pub fn new(family: Family, parameter: u32) -> Self {
        GadgetSpec {
            family,
            parameter,
            width: 5,
            seed: 0,
        }
    }

    pub fn build(&self) -> Result<Embedding, GenError> {
        let p = self.parameter;
        match self.family {
            Family::NestedTriangles => gen_nested_triangles(p),
            Family::Counterexample => gen_counterexample(p),
            Family::K4MinusEdge => Ok(gen_k4_minus_edge()),
            Family::Cycle => gen_cycle(p),
            Family::Wheel => gen_wheel(p),
            Family::Path => gen_path(p),
            Family::RandomKOuter => gen_random_kouter(p, self.width, self.seed),
        }
    }
}

type Point = (f64, f64);

fn polar(center: Point, radius: f64, angle: f64) -> Point {
    (
        center.0 + radius * angle.cos(),
        center.1 + radius * angle.sin(),
    )
}

/// Converts a planar straight-line drawing of a connected graph into an
/// embedding. Panics if the drawing is not planar (a generator bug).
fn from_drawing(points: &BTreeMap<VertexId, Point>, edges: &[(VertexId, VertexId)]) -> Embedding {
    let mut rotation: BTreeMap<VertexId, Vec<VertexId>> =
        points.keys().map(|&v| (v, Vec::new())).collect();
    for &(a, b) in edges {
        rotation.get_mut(&a).expect("known vertex").push(b);
        rotation.get_mut(&b).expect("known vertex").push(a);
    }
    for (v, nbrs) in rotation.iter_mut() {
        let p = points[v];
        let angle = |w: &VertexId| {
            let q = points[w];
            (q.1 - p.1).atan2(q.0 - p.0)
        };
        // Clockwise: decreasing angle.
        nbrs.sort_by(|a, b| angle(b).total_cmp(&angle(a)));
    }
    let probe: Vec<Dart> = match edges.first() {
        Some(&(a, b)) => vec![Dart::new(a, b)],
        None => Vec::new(),
    };
    let draft = Embedding::new(rotation.clone(), probe).expect("generator drawing is planar");
    let area = |walk: &[Dart]| -> f64 {
        walk.iter()
            .map(|d| {
                let (x0, y0) = points[&d.origin];
                let (x1, y1) = points[&d.target];
                x0 * y1 - x1 * y0
            })
            .sum::<f64>()
    };
    let outer = draft
        .faces()
        .iter()
        .min_by(|a, b| area(a.darts()).total_cmp(&area(b.darts())))
        .map(|f| f.darts()[0]);
    Embedding::new(rotation, outer).expect("generator drawing is planar")
}

pub fn gen_cycle(n: u32) -> Result<Embedding, GenError> {
    if n < 3 {
        return Err(bad("cycle needs n >= 3"));
    }
    let points = (0..n)
        .map(|i| {
            (
                i,
                polar((0.0, 0.0), 1.0, -2.0 * PI * f64::from(i) / f64::from(n)),
            )
        })
        .collect();
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(from_drawing(&points, &edges))
}

/// Rim `0..n` and hub `n`; `gen_wheel(3)` is K4 with outer triangle 0,1,2.
pub fn gen_wheel(n: u32) -> Result<Embedding, GenError> {
    if n < 3 {
        return Err(bad("wheel needs n >= 3"));
    }
    let mut points: BTreeMap<_, _> = (0..n)
        .map(|i| {
            (
                i,
                polar((0.0, 0.0), 1.0, -2.0 * PI * f64::from(i) / f64::from(n)),
            )
        })
        .collect();
    points.insert(n, (0.0, 0.0));
    let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.extend((0..n).map(|i| (i, n)));
    Ok(from_drawing(&points, &edges))
}

pub fn gen_path(n: u32) -> Result<Embedding, GenError> {
    if n < 2 {
        return Err(bad("path needs n >= 2"));
    }
    let points = (0..n).map(|i| (i, (f64::from(i), 0.0))).collect();
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(from_drawing(&points, &edges))
}

/// The 4-cycle 0,1,2,3 with chord 0-2, outer face the 4-cycle.
pub fn gen_k4_minus_edge() -> Embedding {
    let points = BTreeMap::from([
        (0, (0.0, 0.0)),
        (1, (1.0, 0.0)),
        (2, (1.0, 1.0)),
        (3, (0.0, 1.0)),
    ]);
    from_drawing(&points, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
}

/// `levels` nested triangles, outermost first: triangle `l` (0-based from
/// the outside) has vertices `offset + 3l + c`. Consecutive triangles are
/// joined by a 6-cycle alternating between them, so every face between two
/// triangles is a triangle.
fn nested_triangle_drawing(
    levels: u32,
    offset: VertexId,
    center: Point,
    base_angle: f64,
    points: &mut BTreeMap<VertexId, Point>,
    edges: &mut Vec<(VertexId, VertexId)>,
) {
    let id = |l: u32, c: u32| offset + 3 * l + c % 3;
    for l in 0..levels {
        let radius = 3f64.powi((levels - 1 - l) as i32);
        for c in 0..3 {
            let angle = base_angle + PI / 3.0 * f64::from(l) + 2.0 * PI / 3.0 * f64::from(c);
            points.insert(id(l, c), polar(center, radius, angle));
            edges.push((id(l, c), id(l, c + 1)));
        }
        if l > 0 {
            for c in 0..3 {
                // Inner vertex (l, c) sits between outer vertices (l-1, c) and (l-1, c+1).
                edges.push((id(l - 1, c), id(l, c)));
                edges.push((id(l, c), id(l - 1, c + 1)));
            }
        }
    }
}

/// `T_i`: `i` nested triangles with the outermost one as outer face.
pub fn gen_nested_triangles(i: u32) -> Result<Embedding, GenError> {
    if i == 0 {
        return Err(bad("nested triangles need i >= 1"));
    }
    let mut points = BTreeMap::new();
    let mut edges = Vec::new();
    nested_triangle_drawing(i, 0, (0.0, 0.0), PI / 2.0, &mut points, &mut edges);
    Ok(from_drawing(&points, &edges))
}

/// Ids of the outer triangle of copy `j` in [`gen_counterexample`]:
/// `(r, p, q)` with `r` pointing inwards and `p`, `q` on the outer 8-cycle.
pub fn counterexample_corners(k: u32, j: u32) -> (VertexId, VertexId, VertexId) {
    let o = 3 * k * j;
    (o, o + 1, o + 2)
}

/// Four copies of `T_k` around a common centre. Each copy shows two outer
/// triangle vertices `p_j`, `q_j` on the outer 8-cycle and points `r_j`
/// inwards. Copies are joined by `q_j - p_{j+1}`; the gaps are filled with
/// `q_j - r_{j+1}`, `r_j - r_{j+1}` and the diagonal `r_0 - r_2`.
///
/// The result is a k-outerplanar triangulated disk on `12k` vertices.
pub fn gen_counterexample(k: u32) -> Result<Embedding, GenError> {
    if k < 2 {
        return Err(bad(
            "counterexample needs k >= 2 (use k4-minus-edge for k = 1)",
        ));
    }
    let outer_radius = 3f64.powi(k as i32 - 1);
    let mut points = BTreeMap::new();
    let mut edges = Vec::new();
    for j in 0..4 {
        let phi = PI / 2.0 * f64::from(j);
        let center = polar((0.0, 0.0), 2.0 * outer_radius, phi);
        nested_triangle_drawing(k, 3 * k * j, center, phi + PI, &mut points, &mut edges);
    }
    for j in 0..4 {
        let (r, _, q) = counterexample_corners(k, j);
        let (r_next, p_next, _) = counterexample_corners(k, (j + 1) % 4);
        edges.push((q, p_next));
        edges.push((q, r_next));
        edges.push((r, r_next));
    }
    edges.push((
        counterexample_corners(k, 0).0,
        counterexample_corners(k, 2).0,
    ));
    Ok(from_drawing(&points, &edges))
}

/// `k` concentric cycles of `width` vertices (outermost ring first, ids
/// `ring * width + i`), with a seeded random subset of the zig-zag edges
/// between consecutive rings (at least one per pair of rings). Rings are
/// cycles, so the outer ring is the first peel and there are exactly `k`
/// peels.
pub fn gen_random_kouter(k: u32, width: u32, seed: u64) -> Result<Embedding, GenError> {
    if k == 0 {
        return Err(bad("random k-outerplanar needs k >= 1"));
    }
    if width < 3 {
        return Err(bad("random k-outerplanar needs width >= 3"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let step = 2.0 * PI / f64::from(width);
    let id = |ring: u32, i: u32| ring * width + i % width;
    let mut points = BTreeMap::new();
    let mut edges = Vec::new();
    let mut offset = 0.0;
    for ring in 0..k {
        let radius = 8f64.powi((k - 1 - ring) as i32);
        if ring > 0 {
            offset -= step * rng.random_range(0.15..0.85);
        }
        for i in 0..width {
            points.insert(
                id(ring, i),
                polar((0.0, 0.0), radius, offset - step * f64::from(i)),
            );
            edges.push((id(ring, i), id(ring, i + 1)));
        }
        if ring > 0 {
            // Inner vertex i lies angularly between outer vertices i and i+1.
            let zigzag: Vec<_> = (0..width)
                .flat_map(|i| {
                    [
                        (id(ring - 1, i), id(ring, i)),
                        (id(ring, i), id(ring - 1, i + 1)),
                    ]
                })
                .collect();
            let mut kept: Vec<_> = zigzag
                .iter()
                .copied()
                .filter(|_| rng.random_bool(0.5))
                .collect();
            if kept.is_empty() {
                kept.push(zigzag[rng.random_range(0..zigzag.len())]);
            }
            edges.extend(kept);
        }
    }
    Ok(from_drawing(&points, &edges))
}

/// Small hand-built embeddings that exercise component joining and
/// cut-vertex repair.
const IRREGULAR: [(&str, &str); 5] = [
    (
        "two-triangles",
        "epg 1\nv 0: 1 2\nv 1: 2 0\nv 2: 0 1\nv 3: 4 5\nv 4: 5 3\nv 5: 3 4\nouter 0 2\nouter 3 5\n",
    ),
    (
        "bowtie",
        "epg 1\nv 0: 1 2\nv 1: 2 0\nv 2: 0 4 3 1\nv 3: 4 2\nv 4: 2 3\nouter 0 2\n",
    ),
    (
        "square-pendant",
        "epg 1\nv 0: 1 4 3\nv 1: 2 0\nv 2: 3 1\nv 3: 0 2\nv 4: 0\nouter 0 1\n",
    ),
    (
        "triangle-isolated",
        "epg 1\nv 0: 1 2\nv 1: 2 0\nv 2: 0 1\nv 9:\nouter 0 2\n",
    ),
    (
        "star-forest",
        "epg 1\nv 0: 1 2 3\nv 1: 0\nv 2: 0\nv 3: 0\nv 4: 5\nv 5: 4\nv 6:\nouter 0 1\nouter 4 5\n",
    ),
];

/// A named collection of generated instances: every family over a range of
/// parameters (peels up to `max_k`), the hand-built irregular embeddings,
/// and `random_count` seeded random instances.
pub fn corpus(max_k: u32, random_count: u64) -> Vec<(String, Embedding)> {
    let mut out = Vec::new();
    let mut push = |name: String, e: Result<Embedding, GenError>| {
        out.push((name, e.expect("corpus parameters are valid")));
    };
    for i in 1..=max_k {
        push(format!("nested-triangles-{i}"), gen_nested_triangles(i));
    }
    for k in 2..=max_k {
        push(format!("counterexample-{k}"), gen_counterexample(k));
    }
    push("k4-minus-edge".into(), Ok(gen_k4_minus_edge()));
    for n in 3..=8 {
        push(format!("cycle-{n}"), gen_cycle(n));
        push(format!("wheel-{n}"), gen_wheel(n));
    }
    for n in 2..=8 {
        push(format!("path-{n}"), gen_path(n));
    }
    for (name, text) in IRREGULAR {
        push(
            name.to_string(),
            Ok(parse_epg(text).expect("irregular instance is valid")),
        );
    }
    for seed in 0..random_count {
        let k = 1 + (seed % u64::from(max_k)) as u32;
        let width = 3 + ((seed / u64::from(max_k)) % 5) as u32;
        push(
            format!("random-kouter-{k}-{width}-{seed}"),
            gen_random_kouter(k, width, seed),
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::write_epg;
    use crate::peel::onion_peels;

    #[test]
    fn nested_triangle_counts() {
        let t1 = gen_nested_triangles(1).unwrap();
        assert_eq!(
            (t1.vertex_count(), t1.edge_count(), t1.face_count()),
            (3, 3, 2)
        );
        let t3 = gen_nested_triangles(3).unwrap();
        // 3i triangle edges + 6(i-1) hexagon edges; Euler gives the faces.
        assert_eq!(
            (t3.vertex_count(), t3.edge_count(), t3.face_count()),
            (9, 21, 14)
        );
        assert_eq!(onion_peels(&t3).k(), 3);
        assert!(gen_nested_triangles(2).unwrap().is_triangulation());
        assert!(gen_nested_triangles(0).is_err());
    }

    #[test]
    fn nested_triangles_are_three_connected() {
        for i in 2..=4 {
            assert!(
                gen_nested_triangles(i)
                    .unwrap()
                    .graph()
                    .is_three_connected(),
                "T_{i}"
            );
        }
    }

    #[test]
    fn counterexample_shape() {
        for k in 2..=4 {
            let g = gen_counterexample(k).unwrap();
            assert_eq!(g.vertex_count() as u32, 12 * k);
            assert!(g.is_triangulated_disk());
            assert_eq!(onion_peels(&g).k() as u32, k);
            let outer = g.outer_faces().next().unwrap().1;
            assert_eq!(outer.len(), 8);
            for j in 0..4 {
                let (r, p, q) = counterexample_corners(k, j);
                assert!(outer.contains_vertex(p) && outer.contains_vertex(q));
                assert!(!outer.contains_vertex(r));
            }
        }
        assert!(gen_counterexample(1).is_err());
    }

    #[test]
    fn small_families() {
        let g = gen_k4_minus_edge();
        assert!(g.is_triangulated_disk());
        assert_eq!(onion_peels(&g).k(), 1);
        assert_eq!(onion_peels(&gen_cycle(4).unwrap()).k(), 1);
        assert_eq!(onion_peels(&gen_wheel(5).unwrap()).k(), 2);
        assert_eq!(onion_peels(&gen_path(4).unwrap()).k(), 1);
        assert!(gen_cycle(2).is_err() && gen_wheel(2).is_err() && gen_path(1).is_err());
    }

    #[test]
    fn random_family() {
        assert_eq!(onion_peels(&gen_random_kouter(1, 5, 3).unwrap()).k(), 1);
        let a = write_epg(&gen_random_kouter(3, 4, 7).unwrap());
        let b = write_epg(&gen_random_kouter(3, 4, 7).unwrap());
        assert_eq!(a, b);
        assert!(onion_peels(&gen_random_kouter(2, 6, 1).unwrap()).k() <= 2);
        for seed in 0..200 {
            for k in 1..=4 {
                for width in 3..=7 {
                    let g = gen_random_kouter(k, width, seed).unwrap();
                    assert_eq!(onion_peels(&g).k() as u32, k);
                }
            }
        }
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("hexagon".parse::<Family>().is_err());
    }
}
