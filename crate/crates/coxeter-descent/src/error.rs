use thiserror::Error;

/// Errors produced by group construction and algebra operations.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("invalid rank {rank} for type {family}: {constraint}")]
    InvalidRank {
        family: &'static str,
        rank: usize,
        constraint: &'static str,
    },

    #[error("generator index {index} out of range 1..={rank}")]
    GeneratorIndex { index: usize, rank: usize },

    #[error("elements belong to different Coxeter systems or models")]
    MixedSystems,

    #[error("group order {order} exceeds enumeration cap {cap}")]
    EnumerationCap { order: String, cap: u64 },

    #[error("subset {j} is not contained in {k}")]
    NotContained { j: String, k: String },

    #[error("chain index {index} out of range for {family}{rank}")]
    ChainIndex {
        family: &'static str,
        rank: usize,
        index: isize,
    },

    #[error("transversal factorization fails at element '{witness}': {reason}")]
    Factorization { witness: String, reason: String },

    #[error("classification mismatch for {system}, s{generator}: {details}")]
    Classification {
        system: String,
        generator: usize,
        details: String,
    },

    #[error("cannot parse {what}: '{input}'")]
    Parse { what: &'static str, input: String },
}
