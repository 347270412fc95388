use num_bigint::BigInt;
use thiserror::Error;

/// Errors raised by lattice constructions and verifications.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("gram matrix is not symmetric")]
    NotSymmetric,

    #[error("lattice has rank zero")]
    EmptyLattice,

    #[error("lattice is degenerate (zero determinant)")]
    Degenerate,

    #[error("not a lattice: {0}")]
    NotALattice(String),

    #[error("matrix does not preserve the gram form")]
    NotIsometry,

    #[error("matrix is not unimodular (determinant {0})")]
    NotUnimodular(BigInt),

    #[error("isometry is not an involution")]
    NotInvolution,

    #[error("cannot reflect in a vector of square zero")]
    IsotropicVector,

    #[error("not a lattice reflection: 2(e,x)/(e,e) is not integral for basis vector {basis_index}")]
    NotLatticeReflection { basis_index: usize },

    #[error("unknown curve label `{0}`")]
    UnknownLabel(String),

    #[error("invalid label `{0}`")]
    InvalidLabel(String),

    #[error("degree bound must be at least 1, got {0}")]
    InvalidBound(i64),

    #[error("not a Kodaira fiber: {0}")]
    NotKodaira(String),

    #[error("inconsistent Shioda-Tate data: {0}")]
    InconsistentFibration(String),

    #[error("fiber class is not nef: pairing with {label} is {pairing}")]
    NotNef { label: String, pairing: BigInt },

    #[error("curve has no taxonomy tag")]
    Untagged,

    #[error("quadratic map undefined at base point {0}")]
    BasePoint(String),

    #[error("invalid projective point: all coordinates zero")]
    ZeroPoint,

    #[error("certification failed: {0}")]
    Certification(String),

    #[error("linear system has no solution: {0}")]
    Inconsistent(String),

    #[error("automorphism maps a degree-3 vertex {from} to degree-2 vertex {to}")]
    ImpossibleRestriction { from: String, to: String },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
