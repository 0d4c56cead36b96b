//! Exact enumeration of lattice 3-polytopes of width larger than one, up to
//! affine unimodular equivalence, by number of lattice points.
//!
//! The enumeration starts from the complete lists at sizes 5 and 6 and, for
//! every larger size, takes the union of the quasi-minimal polytopes (spiked
//! families plus the finite boxed census) with all mergings of two polytopes
//! one size smaller.

pub mod boxed;
pub mod classify;
pub mod equivalence;
pub mod error;
pub mod geometry;
pub mod merging;
pub mod pipeline;
pub mod seeds;
pub mod spiked;
pub mod store;
pub mod width;

pub use error::{Error, Result};
pub use geometry::{
    convex_hull, hnf, interior_lattice_points, lattice_points, Functional, HullData, IntMatrix3, LatticePoint,
};
