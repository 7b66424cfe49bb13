//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field exponent must be at least 1")]
    BadExponent,
    #[error("field size exceeds the desk-scale cap")]
    FieldTooLarge,
    #[error("zero element has no inverse or order")]
    ZeroElement,
    #[error("polynomial must be monic")]
    NonMonic,
    #[error("computation exceeds the desk-scale cap")]
    CapExceeded,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is singular")]
    Singular,
    #[error("polynomial must be monic")]
    NonMonic,
    #[error("polynomial must be irreducible")]
    Reducible,
    #[error("{0} must be prime")]
    NotPrime(u64),
    #[error("enumeration exceeds the desk-scale cap")]
    CapExceeded,
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("image vector is not a bijection")]
    NotBijection,
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("element is not in the group")]
    NotInGroup,
    #[error("point {0} out of range for degree {1}")]
    PointRange(usize, usize),
    #[error("group order {0} exceeds the cap {1}")]
    OrderCap(u128, u128),
    #[error("degree {0} exceeds the cap {1}")]
    DegreeCap(usize, usize),
    #[error("unsupported family: {0}")]
    UnsupportedFamily(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Mat(#[from] MatError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count {0} exceeds the cap {1}")]
    VertexCap(usize, usize),
    #[error("element is central or the identity")]
    CentralVertex,
    #[error("element is not a vertex of the graph")]
    NotAVertex,
    #[error(transparent)]
    Perm(#[from] PermError),
}
