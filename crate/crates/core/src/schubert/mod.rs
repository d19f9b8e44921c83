//! Schubert calculus checks on the polytope families.

pub mod degree;
pub mod faces;
pub mod ring;
pub mod structure;
pub mod volpoly;

pub use degree::{
    conjecture_report, default_grid, degree_check, degree_check_with, factorial, ConjectureReport, DegreeReport,
};
pub use faces::{mitosis_faces, schubert_face_set, schubert_face_set_with, FaceRecord, SchubertFaces};
pub use ring::{facet_derivative, family_volume_polynomial, graded_ring_ranks, offset_volume_polynomial, ring_ranks_report};
pub use structure::{structure_constants, StructureConstants};
pub use volpoly::{batch_face_polynomials, face_volume_polynomials, volume_polynomial, weight_grid};
