//! Error type shared across the crate.

use thiserror::Error;

/// Everything that can go wrong in kernel evaluation, matrix analysis,
/// coefficient-space arithmetic, the dichotomy search, and file I/O.
#[derive(Debug, Error)]
pub enum Error {
    #[error("point outside admissible domain of `{family}`: {detail}")]
    Domain { family: String, detail: String },

    #[error("kernel series did not converge within {max_terms} terms (last |term| = {last_term:.3e})")]
    Convergence { max_terms: usize, last_term: f64 },

    #[error("eigensolver failed to converge")]
    Numerical,

    #[error("kernel value vanishes (|K| <= {tol:.1e}) at point pair ({i}, {j})")]
    ZeroKernel { i: usize, j: usize, tol: f64 },

    #[error("matrix is not positive semi-definite (min eigenvalue {min_eig:.6e})")]
    NotPsd { min_eig: f64 },

    #[error("defect diagonal entry {index} is {value} >= 1; no strictly contractive feature map exists")]
    DiagonalTooLarge { index: usize, value: f64 },

    #[error("geometric series diverges: |F[{i}][{j}]| = {modulus} >= 1")]
    Divergence { i: usize, j: usize, modulus: f64 },

    #[error("length mismatch: {nodes} nodes vs {values} values")]
    Arity { nodes: usize, values: usize },

    #[error("Gram matrix numerically singular (min eigenvalue {min_eig:.6e} <= {threshold:.1e})")]
    SingularGram { min_eig: f64, threshold: f64 },

    #[error("the zero polynomial has no root set")]
    ZeroPolynomial,

    #[error("functional declared up to degree {declared}, computation needs degree {required}")]
    FunctionalSupport { declared: usize, required: usize },

    #[error("evaluation grid is empty")]
    GridEmpty,

    #[error("test set must contain the constant 1, every coordinate monomial, and a degree-2 monomial: {missing}")]
    IncompleteTestSet { missing: String },

    #[error("points {i} and {j} coincide within tolerance {tol:.1e} (distance {dist:.3e})")]
    DuplicatePoint { i: usize, j: usize, dist: f64, tol: f64 },

    #[error("point set is empty")]
    EmptyPointSet,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("operands have different variable counts: {left} vs {right}")]
    VariableCount { left: usize, right: usize },

    #[error("weight sequence has no value at index {index}")]
    UndefinedWeight { index: usize },

    #[error("arithmetic overflow: {0}")]
    Overflow(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: parse error at line {line}, column {column} (byte offset {offset}): {message}")]
    Parse {
        path: String,
        line: usize,
        column: usize,
        offset: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
