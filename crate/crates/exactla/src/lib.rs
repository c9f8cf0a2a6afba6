//! Exact scalar arithmetic and dense linear algebra over the rationals and
//! prime fields.
//!
//! Everything here is a plain value. Scalars carry their field so that mixing
//! `Q` with `GF(p)` is caught instead of silently producing garbage.

mod affine;
mod echelon;
mod error;
mod matrix;
mod quadratic;
mod scalar;
pub mod vector;

pub use affine::{enumerate_affine, solve_affine, AffineIter, AffineSpace};
pub use echelon::{sparse, sparse_axpy, SparseEchelon, SparseVec};
pub use error::LaError;
pub use matrix::Matrix;
pub use quadratic::{bilinear_from_fn, filter_affine, QuadraticSystem, SearchOutcome};
pub use scalar::{Field, Scalar};
