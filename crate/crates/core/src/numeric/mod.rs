//! Exact number tower: arbitrary-precision rationals, real quadratic
//! extensions, and tolerance-carrying floats, plus continued-fraction
//! rational approximation and rational d-th-root detection.

mod approx;
mod quad;
mod rational;
mod scalar;
mod serde_impl;

pub use approx::{approximate_above, approximate_below, rational_dth_root};
pub use quad::{squarefree_decompose, QuadExt};
pub use rational::Rational;
pub use scalar::{Scalar, DEFAULT_FLOAT_TOL};
