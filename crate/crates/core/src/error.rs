use thiserror::Error;

/// Errors raised by the moduli computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),

    #[error("no cyclic rotation of the node degrees admits stable representations")]
    NoStableIndexing,

    #[error("form does not factor into linear factors over the rationals")]
    IrrationalRoots,

    #[error("invalid section: {0}")]
    InvalidSection(String),

    #[error("top coefficient of the reducing form vanishes in the working chart")]
    ChartDegenerate,

    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),

    #[error("torus scalars must be nonzero")]
    ZeroScalar,

    #[error("expected {expected} torus scalars, got {got}")]
    ScalarCount { expected: usize, got: usize },

    #[error("map phi_{0} vanishes but only the last map may vanish in canonical form")]
    ZeroInteriorMap(usize),

    #[error("representations belong to different quivers")]
    QuiverMismatch,

    #[error("Hitchin base point is zero; use the nilpotent cone description")]
    ZeroGamma,

    #[error("multiplicity profile mismatch: {0}")]
    ProfileMismatch(String),

    #[error("invalid splitting type: {0}")]
    InvalidSplitting(String),

    #[error("phi_{0} has no reduced form: multiples of the lower odd maps cannot clear its top coefficients in any tried chart")]
    NoReducedForm(usize),

    #[error("odd map phi_{0} vanishes; stable (k,1) representations need every odd map nonzero")]
    ZeroOddMap(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
