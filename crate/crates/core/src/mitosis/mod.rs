//! Mitosis on block cones, pipe dreams and skew pipe dreams.

pub mod cone;
pub mod pipe_dream;
pub mod skew;
pub mod step;

pub use cone::{BlockCone, ConeFace, ConeFacet, Coord};
pub use pipe_dream::{km_mitosis, Cell, PipeDream};
pub use skew::{sgz_face_of, sgz_facets_of, SkewCodec, SkewPipeDream};
pub use step::{mitosis_apply, mitosis_apply_with, mitosis_step, mitosis_step_with, JRule};
