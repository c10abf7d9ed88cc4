//! Quaternion widely linear statistics.
//!
//! Second-order statistics of a quaternion random vector live in four
//! matrices: the Hermitian covariance `C = E{x x^H}` and the three
//! alpha-Hermitian complementary covariances `C_alpha = E{x x^{alpha H}}`.
//! This crate provides:
//!
//! - the underlying quaternion scalar/matrix algebra ([`quat`], [`matrix`])
//!   and the complex adjoint embedding used by the factorisations
//!   ([`adjoint`]);
//! - quaternion matrix decompositions: Hermitian eigendecomposition, SVD,
//!   alpha-Hermitian factorisation and the 2x2 symmetric Takagi
//!   factorisation ([`decomp`]);
//! - sample estimators and properness classification ([`stats`]);
//! - the exact two-matrix uncorrelating transform and the approximate
//!   all-four transform, plus rank reduction ([`transforms`]);
//! - synthetic signal generators, three-phase voltage models and imbalance
//!   detection ([`signals`]);
//! - Monte-Carlo sweep drivers over correlation/dimension grids ([`sweep`]);
//! - text formats: the QMAT matrix file and numeric CSV ingestion
//!   ([`qmat`], [`signals`]).

pub mod adjoint;
pub mod decomp;
pub mod error;
pub mod jacobi;
pub mod matrix;
pub mod qmat;
pub mod quat;
pub mod signals;
pub mod stats;
pub mod sweep;
pub mod synth;
pub mod transforms;

pub use error::{Error, Result};
pub use matrix::{QuatMatrix, QuatVector};
pub use quat::{Axis, Quaternion, Tolerance};
