//! Exact polyhedral tools for Gelfand-Zetlin, string and DDO polytopes.
//!
//! The polyhedral layer is generic over the scalar field; everything above it
//! works with arbitrary precision rationals, exposed here as [`Q`].

pub mod cli;
pub mod error;
pub mod families;
pub mod integer;
pub mod linalg;
pub mod mitosis;
pub mod poly;
pub mod polyhedron;
pub mod scalar;
pub mod schubert;
pub mod weyl;

pub use error::{Error, Result};

/// Arbitrary precision rational.
pub type Q = num_rational::BigRational;
pub type Polytope = polyhedron::HPolytope<Q>;
pub type Lattice = polyhedron::AffineLattice<Q>;
