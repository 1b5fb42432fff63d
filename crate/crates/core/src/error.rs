use thiserror::Error;

use crate::signed_graph::SignedEdge;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} is outside [1, {n}]")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop at vertex {0} must be positive")]
    NegativeLoop(usize),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("reduction {rule} does not match edges {first} and {second}")]
    PatternMismatch {
        rule: String,
        first: SignedEdge,
        second: SignedEdge,
    },

    #[error("cannot commute the letter at position {0} with its right neighbour")]
    NotCommuting(usize),

    #[error("position {position} out of range for a word of length {len}")]
    PositionOutOfRange { position: usize, len: usize },

    #[error("graph is not linearly independent (not in L_n)")]
    NotIndependent,

    #[error("graph is not alternating")]
    NotAlternating,

    #[error("graph is not well-structured")]
    NotWellStructured,

    #[error("Coxeter element needs n >= 2, got {0}")]
    CoxeterTooSmall(usize),

    #[error("scale guard exceeded: {what} = {value} > {limit}")]
    GuardExceeded {
        what: &'static str,
        value: u128,
        limit: u128,
    },

    #[error("zero polynomial has no tip")]
    ZeroPolynomial,

    #[error("tip coefficient is not an invertible scalar")]
    NonScalarTip,

    #[error("lattice counts are not a polynomial of degree {degree}: predicted {predicted} at t = {t}, counted {counted}")]
    InconsistentCounts {
        degree: usize,
        t: u64,
        predicted: String,
        counted: u64,
    },

    #[error("internal check failed: {0}")]
    Internal(String),
}
