use super::{Edge, EmbedError, Embedding, FaceId};

/// One dual edge per primal edge, joining the faces on either side.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DualEdge {
    /// Face on the side of the primal edge's canonical dart.
    pub left: FaceId,
    /// Face on the side of its twin.
    pub right: FaceId,
    pub primal: Edge,
}

impl DualEdge {
    pub fn is_loop(&self) -> bool {
        self.left == self.right
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualGraph {
    pub node_count: usize,
    pub edges: Vec<DualEdge>,
}

impl DualGraph {
    pub fn degree(&self, f: FaceId) -> usize {
        self.edges
            .iter()
            .map(|e| usize::from(e.left == f) + usize::from(e.right == f))
            .sum()
    }
}

impl Embedding {
    /// Dual multigraph of a connected embedding; node ids are face ids.
    pub fn dual_graph(&self) -> Result<DualGraph, EmbedError> {
        if !self.is_connected() {
            return Err(EmbedError::Disconnected);
        }
        let edges = self
            .edges()
            .into_iter()
            .map(|e| {
                let d = e.canonical_dart();
                DualEdge {
                    left: self.face_of(d).expect("dart has a face"),
                    right: self.face_of(d.twin()).expect("dart has a face"),
                    primal: e,
                }
            })
            .collect();
        Ok(DualGraph {
            node_count: self.face_count(),
            edges,
        })
    }
}
