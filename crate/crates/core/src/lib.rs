//! Exact construction and verification of finite-dimensional
//! (quasi)triangular Hopf algebras over cyclotomic fields.
//!
//! Everything here is exact: scalars are elements of Q(zeta_N) represented
//! in the power basis of Q[x]/(Phi_N), groups are Cayley tables, algebras
//! are structure-constant tensors, and every verification is an identity
//! check with tolerance zero.

pub mod error;
pub mod scalar;
pub mod linalg;
pub mod group;
pub mod algebra;
pub mod hopf;
pub mod rmatrix;
pub mod twist;
pub mod onecocycle;
pub mod bicross;
pub mod pointed_super;
pub mod analysis;
pub mod gallery;

pub use error::Error;
pub use scalar::Cyc;

pub type Result<T> = std::result::Result<T, Error>;
