use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input must be nonempty")]
    EmptyInput,
    #[error("letters must be positive integers, found {0}")]
    ZeroLetter(u32),
    #[error("not a permutation of 1..{0}")]
    NotPermutation(usize),
    #[error("size mismatch: permutation has length {permutation}, multiset has size {multiset}")]
    SizeMismatch { permutation: usize, multiset: usize },
    #[error("permutation {0} is not compatible with the rearrangement class")]
    NotCompatible(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("tableau shapes differ")]
    ShapeMismatch,
    #[error("tableau is not standard: {0}")]
    NotStandard(String),
    #[error("invalid shuffle triple: {0}")]
    InvalidTriple(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("bound too large: {instances} instances exceeds cap {cap}")]
    BoundTooLarge { instances: u128, cap: u64 },
    #[error("internal invariant broken: {0}")]
    InternalInvariantBroken(String),
}
