//! Embedded subcomplexes and the curve and neighborhood machinery built on them.

mod curves;
mod neighborhood;
mod path;
mod spine;
mod subcomplex;

pub use curves::{cut_along, is_orientation_preserving, is_separating, is_separating_by_homology};
pub use neighborhood::{
    absorb_disk_components, regular_neighborhood, ComplementClass, ComplementComponent,
    DiskNeighborhood, NeighborhoodDecomposition,
};
pub use path::EdgePath;
pub use spine::{spine_with_loops, ChordLoop, LoopProperties, Spine};
pub use subcomplex::{embed_subcomplex, Subcomplex, SubcomplexFlags};

use crate::surface::{ValidationReport, VertexId};
use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum GeometryError {
    #[error("simplex {0:?} does not exist in the surface")]
    UnknownSimplex(Vec<VertexId>),
    #[error("subcomplex is not closed under faces: face of {0:?} missing")]
    NotClosedUnderFaces(Vec<VertexId>),
    #[error("subcomplex is not connected")]
    NotConnected,
    #[error("subcomplex is empty")]
    Empty,
    #[error("subcomplex is the whole closed surface")]
    XIsWholeSurface,
    #[error("collapse got stuck with {0} triangles left")]
    CollapseFailed(usize),
    #[error("vertex sequence {0:?} is not a closed edge path")]
    NotAClosedPath(Vec<VertexId>),
    #[error("vertex sequence {0:?} is not an embedded edge circle")]
    NotEmbeddedCircle(Vec<VertexId>),
    #[error("cut produced an invalid piece: {0}")]
    InvalidPiece(ValidationReport),
}
