//! Exact computations on non-commuting non-generating graphs of finite
//! groups: finite-field and matrix-group constructions, permutation groups
//! with base-and-strong-generating-set machinery, and graph diameters via
//! the cyclic-subgroup/conjugacy quotient reduction.

pub use field::euler_phi;

pub mod bsgs;
pub mod diameter;
pub mod error;
pub mod group;
pub mod families;
pub mod field;
pub mod fileio;
pub mod matrix;
pub mod perm;
pub mod poly;
pub mod quotient;
pub mod reference;
pub mod subspace;
pub mod sweeps;
pub mod unitary;
