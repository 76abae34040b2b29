use serde::Serialize;

use crate::embedding::Embedding;
use crate::generators::{gen_counterexample, gen_k4_minus_edge};
use crate::graph::SimpleGraph;

use super::triangulations::for_each_face_triangulation;
use super::{brute_outerplanarity, min_peels_over_faces, OracleBudget, OracleError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem1Report {
    pub k: usize,
    pub vertices: usize,
    /// Whether the base graph is 3-connected, which makes its embedding
    /// unique and the enumeration exhaustive. Always false for `k = 1`,
    /// where every triangulation is K4 regardless.
    pub three_connected: bool,
    pub triangulations: usize,
    /// Fewest peels of any triangulation under any embedding.
    pub min_outerplanarity: usize,
    pub lower_bound: usize,
    pub holds: bool,
    pub basis: String,
}

/// Checks that every triangulation of the `k`-outerplanar gadget needs at
/// least `k + 1` peels.
pub fn certify_theorem1(k: usize, budget: &OracleBudget) -> Result<Theorem1Report, OracleError> {
    match k {
        0 => Err(OracleError::BadParameter("k must be at least 1".into())),
        1 => {
            let base = gen_k4_minus_edge();
            let (_, outer) = base.outer_faces().next().expect("outer face");
            let mut tris: Vec<Embedding> = Vec::new();
            for_each_face_triangulation(&base, outer, budget, |t| tris.push(t))?;
            let mut min = usize::MAX;
            for t in &tris {
                min = min.min(brute_outerplanarity(&t.graph(), budget)?);
            }
            let only_k4 = tris.iter().all(|t| t.graph() == SimpleGraph::complete(4));
            Ok(Theorem1Report {
                k,
                vertices: base.vertex_count(),
                three_connected: base.graph().is_three_connected(),
                triangulations: tris.len(),
                min_outerplanarity: min,
                lower_bound: 2,
                holds: only_k4 && min >= 2,
                basis: "a maximal planar graph on 4 vertices is K4; \
                        outerplanarity minimised over all rotation systems"
                    .into(),
            })
        }
        _ => {
            let param = u32::try_from(k)
                .map_err(|_| OracleError::BadParameter(format!("k = {k} is too large")))?;
            let base = gen_counterexample(param)?;
            let three_connected = base.graph().is_three_connected();
            let non_triangles: Vec<_> = base.faces().iter().filter(|f| f.len() != 3).collect();
            let [face] = non_triangles.as_slice() else {
                return Err(OracleError::BadParameter(format!(
                    "expected one non-triangular face, found {}",
                    non_triangles.len()
                )));
            };
            let mut min = usize::MAX;
            let mut all_triangulated = true;
            let count = for_each_face_triangulation(&base, face, budget, |t| {
                all_triangulated &= t.is_triangulation();
                min = min.min(min_peels_over_faces(&t));
            })?;
            Ok(Theorem1Report {
                k,
                vertices: base.vertex_count(),
                three_connected,
                triangulations: count,
                min_outerplanarity: min,
                lower_bound: k + 1,
                holds: three_connected && all_triangulated && min > k,
                basis: "base graph is 3-connected, so its embedding is unique and every \
                        triangulation fills its single non-triangular face; each \
                        triangulation is minimised over all outer faces"
                    .into(),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k1_and_k2_hold() {
        let r1 = certify_theorem1(1, &OracleBudget::default()).unwrap();
        assert!(r1.holds);
        assert_eq!((r1.triangulations, r1.min_outerplanarity), (1, 2));

        let r2 = certify_theorem1(2, &OracleBudget::default()).unwrap();
        assert!(r2.holds && r2.three_connected);
        assert_eq!(r2.vertices, 24);
        assert_eq!(r2.triangulations, 132);
        assert!(r2.min_outerplanarity >= 3);
    }

    #[test]
    fn rejects_k0() {
        assert!(certify_theorem1(0, &OracleBudget::default()).is_err());
    }
}
