//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("polynomial {0} is reducible over the rationals")]
    Reducible(String),

    #[error("field degree {degree} exceeds the exact-test cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },

    #[error("no shift k with |k| <= {0} gives a squarefree norm")]
    ShiftExhausted(i64),

    #[error("syntax error at line {line}: {msg}")]
    Syntax { line: usize, msg: String },

    #[error("invariant violated at row {row}, column {col}: {msg}")]
    InvariantViolation { row: usize, col: usize, msg: String },

    #[error("not a doubly regular tournament: {identity} fails at entry ({row},{col})")]
    NotDrt {
        identity: String,
        row: usize,
        col: usize,
    },

    #[error("order {n} is not congruent to 3 mod 4")]
    BadOrder { n: usize },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{n} is not congruent to {want} mod 4")]
    WrongResidueClass { n: u64, want: u64 },

    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("relation index {index} out of range for rank {rank}")]
    RelationOutOfRange { index: usize, rank: usize },

    #[error("not a conference-graph scheme: {0}")]
    NotConference(String),

    #[error("Perron eigenvalue {perron} does not divide the first-subconstituent characteristic polynomial exactly once at vertex {vertex}")]
    PerronMissing { vertex: usize, perron: i64 },

    #[error("unsupported: {0}")]
    Unsupported(String),
}
