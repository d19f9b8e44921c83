//! Exact rational polyhedra: H-representation, faces, lattices and volumes.

mod dd;
pub mod face;
pub mod facet_set;
pub mod hpolytope;
pub mod io;
pub mod lattice;
pub mod volume;

pub use face::{face_from_active_set, intersect_faces, whole, FaceHandle};
pub use facet_set::FacetSet;
pub use hpolytope::{brute_force_vertices, Facet, Generators, HPolytope};
pub use lattice::AffineLattice;
pub use volume::{lattice_volume, lattice_volume_by_triangulation, VolumeCalculator};
