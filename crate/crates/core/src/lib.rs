//! Homotopy types of embedding spaces of compact polyhedra into triangulated
//! surfaces.

pub mod batch;
pub mod classifier;
pub mod geometry;
pub mod io;
pub mod pi1;
pub mod selftest;
pub mod surface;
