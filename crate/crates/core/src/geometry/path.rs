use super::GeometryError;
use crate::surface::{EdgeId, SimplicialSurface, VertexId};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// An edge path given by its vertex sequence. A closed path repeats its first
/// vertex at the end; `[v]` is the constant loop at `v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgePath(pub Vec<VertexId>);

impl EdgePath {
    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn start(&self) -> VertexId {
        self.0[0]
    }

    pub fn is_closed(&self) -> bool {
        !self.0.is_empty() && self.0.first() == self.0.last()
    }

    pub fn reversed(&self) -> EdgePath {
        EdgePath(self.0.iter().rev().copied().collect())
    }

    /// Concatenation; `self` must end where `other` starts.
    pub fn then(&self, other: &EdgePath) -> EdgePath {
        assert_eq!(self.0.last(), other.0.first());
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0[1..]);
        EdgePath(v)
    }

    /// Edge ids along the path; fails if two consecutive vertices are not adjacent.
    pub fn edge_ids(&self, s: &SimplicialSurface) -> Result<Vec<EdgeId>, GeometryError> {
        self.0
            .windows(2)
            .map(|w| {
                s.edge_between(w[0], w[1])
                    .ok_or_else(|| GeometryError::NotAClosedPath(self.0.clone()))
            })
            .collect()
    }

    pub fn check_closed(&self, s: &SimplicialSurface) -> Result<(), GeometryError> {
        if !self.is_closed() || self.0.iter().any(|&v| v >= s.vertex_count()) {
            return Err(GeometryError::NotAClosedPath(self.0.clone()));
        }
        self.edge_ids(s).map(|_| ())
    }

    /// A closed path of length at least 3 visiting no vertex twice.
    pub fn check_embedded_circle(&self, s: &SimplicialSurface) -> Result<Vec<EdgeId>, GeometryError> {
        let err = || GeometryError::NotEmbeddedCircle(self.0.clone());
        if !self.is_closed() || self.len() < 3 {
            return Err(err());
        }
        let distinct: BTreeSet<_> = self.0[..self.len()].iter().collect();
        if distinct.len() != self.len() {
            return Err(err());
        }
        self.edge_ids(s).map_err(|_| err())
    }
}
