use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("part at position {position} is zero; parts must be positive")]
    NonPositivePart { position: usize },

    #[error("part at position {position} ({part}) is larger than the part before it ({previous})")]
    IncreasingStep {
        position: usize,
        previous: usize,
        part: usize,
    },

    #[error("cannot parse partition text {text:?}: {reason}")]
    Parse { text: String, reason: String },

    #[error("box ({row}, {column}) is not in the Young diagram")]
    OutOfDiagram { row: usize, column: usize },

    #[error("partition {0} is not self-conjugate")]
    NotSelfConjugate(String),

    #[error("the empty partition is not allowed here")]
    EmptyPartition,

    #[error("invalid diagonal hook set: {0}")]
    InvalidDiagonal(String),

    #[error("invalid diagonal sequence pair: {0}")]
    InvalidSequencePair(String),

    #[error("modulus must be at least 1")]
    ZeroModulus,

    #[error("list of moduli must not be empty")]
    EmptyModuli,

    #[error("modulus {0} is odd; only even moduli are accepted here")]
    OddModulus(usize),

    #[error("{0} and {1} are not coprime")]
    NotCoprime(u64, u64),

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("count table covers n <= {available}, but n <= {required} is needed")]
    TableTooShort { available: usize, required: usize },

    #[error("stride must be at least 1")]
    ZeroStride,

    #[error("series orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
}
