use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("relation matrix has {found} columns, expected {expected}")]
    ColumnMismatch { expected: usize, found: usize },

    #[error("matrix data has {found} entries, expected {expected}")]
    ShapeMismatch { expected: usize, found: usize },

    #[error("generator index {index} out of range 1..={n}")]
    GeneratorOutOfRange { index: usize, n: usize },

    #[error("invariant factor does not fit in 64 bits")]
    InvariantOverflow,

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),

    #[error("presentation is inconsistent ({0} overlap violations)")]
    Inconsistent(usize),

    #[error("subgroup is not central")]
    NotCentral,

    #[error("{what} exceeds cap ({size} > {cap})")]
    CapExceeded {
        what: &'static str,
        size: u128,
        cap: u128,
    },

    #[error("prime mismatch: {0} vs {1}")]
    PrimeMismatch(u32, u32),

    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),

    #[error("group of order {0} is not a p-group")]
    NotPGroup(usize),

    #[error("multiplication table is not associative")]
    NotAssociative,

    #[error("free rank {found} of the tail module differs from d(G) = {expected}")]
    FreeRankMismatch { expected: usize, found: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("bound formula undefined: {0}")]
    BoundDomain(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("i/o error: {0}")]
    Io(String),

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
