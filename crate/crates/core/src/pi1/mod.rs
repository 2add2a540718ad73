//! Fundamental groups of triangulated surfaces: edge-path presentations,
//! reduction to canonical surface groups, word problems and subgroup tests.

mod abelian;
mod group;
mod klein;
mod presentation;
mod schema;
mod subgroup;
mod word;

pub use abelian::{abelian_invariants, AbelianGroup};
pub use group::{Strategy, SurfaceGroup};
pub use klein::{klein_normal_form, KleinElement};
pub use presentation::{presentation, Presentation};
pub use schema::{canonicalize, polygonal_schema, Move, PolygonalSchema};
pub use subgroup::{classify_klein, classify_subgroup, induced_subgroup, verify_class, SubgroupClass, Witness};
pub use word::Word;

use crate::surface::VertexId;
use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum Pi1Error {
    #[error("letter {0} names no generator of the group")]
    UnknownGenerator(i32),
    #[error("vertex {0} is not in the surface")]
    UnknownVertex(VertexId),
    #[error("path {0:?} is not a closed edge path")]
    NotAClosedPath(Vec<VertexId>),
    #[error("surface has boundary")]
    NotClosed,
    #[error("reduction failed: {0}")]
    Internal(String),
}
