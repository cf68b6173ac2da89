use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid position {position} (group has {n} positions)")]
    InvalidPosition { position: usize, n: usize },

    #[error("invalid factor: {0}")]
    InvalidFactor(String),

    #[error("payload does not match the factor at position {0}")]
    PayloadMismatch(usize),

    #[error("invalid subgroup: {0}")]
    InvalidSubgroup(String),

    #[error("exponent {r} not coprime to n-1 = {k}")]
    NotCoprime { r: u64, k: u64 },

    #[error("invalid generator: {0}")]
    InvalidGenerator(String),

    #[error("invalid generator images: {0}")]
    InvalidImages(String),

    #[error("cover has non-trivial vertex groups")]
    NonFreeCover,

    #[error("element not in subgroup")]
    NotInSubgroup,

    #[error("image of a subgroup element left the subgroup (characteristic property broken)")]
    NotCharacteristic,

    #[error("n-1 even: hypothesis of the corollary fails (n = {0})")]
    EvenCoxeterDegree(usize),

    #[error("group requires at least {required} positions, found {found}")]
    TooFewPositions { required: usize, found: usize },

    #[error("free words have different basis sizes ({0} vs {1})")]
    BasisMismatch(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
