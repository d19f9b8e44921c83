use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polytope is unbounded")]
    UnboundedPolytope,
    #[error("polytope is empty")]
    EmptyPolytope,
    #[error("no point of the polytope satisfies the requested equalities")]
    EmptyFace,
    #[error("facet index {0} out of range")]
    InvalidFacetIndex(usize),
    #[error("at most 63 facets are supported, got {0}")]
    TooManyFacets(usize),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("lattice basis is singular")]
    SingularLattice,
    #[error("lattice mismatch: {0}")]
    LatticeMismatch(String),

    #[error("rank {0} is too large for explicit Weyl group enumeration")]
    RankTooLarge(usize),
    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("simple reflection index {0} out of range")]
    InvalidReflection(usize),

    #[error("unsupported family: {0}")]
    UnsupportedKind(String),
    #[error("family has no vertex cone structure")]
    NoConeStructure,

    #[error("facet subset is not minimal: {0}")]
    NonMinimalFaceSet(String),
    #[error("cannot break tie between upper facets: {0}")]
    AmbiguousTieBreak(String),
    #[error("block index {0} out of range")]
    InvalidBlock(usize),
    #[error("malformed cone: {0}")]
    InvalidCone(String),
    #[error("cell ({row}, {col}) is not allowed")]
    InvalidCell { row: usize, col: usize },

    #[error("interpolation system stayed rank deficient: {0}")]
    InterpolationRankDeficient(String),
    #[error("interpolated polynomial disagrees with held-out sample at {0:?}")]
    InterpolationMismatch(Vec<i64>),
    #[error("no reduced word of the element embeds in the family pattern")]
    NoAdmissibleWord,
    #[error("non-transverse face intersections: {0:?}")]
    TransversalityFailure(Vec<(usize, usize)>),
    #[error("Schubert degree polynomials are linearly dependent")]
    DependentBasis,
    #[error("negative or non-integral structure constant {0}")]
    InvalidStructureConstant(String),
    #[error("polytope is not simple: {0}")]
    NotSimple(String),

    #[error("parse error: {0}")]
    Parse(String),
}
