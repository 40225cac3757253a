use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("odd exponent {0} in a polynomial that must be even in t")]
    OddExponent(u32),

    #[error("block {block:?} is not mapped onto a block by multiplier {multiplier} mod {modulus}")]
    NotInvariant {
        modulus: u64,
        multiplier: u64,
        block: Vec<u64>,
    },

    #[error("orbit-weight sum is not divisible by the group order {group_order}")]
    NonIntegralCount { group_order: usize },

    #[error("structural recursion is not integral for ring {ring}")]
    NonIntegral { ring: usize },

    #[error("layer index {index} out of range for n = {modulus}")]
    BadIndex { modulus: u64, index: u32 },

    #[error("residue {0} is its own negative")]
    SelfInverse(u64),

    #[error("p must be an odd prime (got {0})")]
    InvalidPrime(u64),

    #[error("{0} is not a power of an odd prime")]
    NotPrimePower(u64),

    #[error("invalid block system: {0}")]
    InvalidBlocks(String),

    #[error("unsupported parameters: {0}")]
    Unsupported(String),

    #[error("computation too large: {0}")]
    TooLarge(String),

    #[error("invariant violated: {0}")]
    InvariantViolated(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
