//! Exact rational convex geometry: hulls, volumes, Minkowski sums, volume
//! polynomials and mixed volumes, Brunn-Minkowski checks, homothety
//! detection.

mod linalg;
mod lp;
mod mixed;
mod polytope;

pub use linalg::solve_square_system;
pub use lp::feasible;
pub use mixed::{brunn_minkowski_check, homothety_detect, volume_polynomial, BmReport, VolumePolynomial};
pub(crate) use polytope::facet_hyperplanes;
pub use polytope::{point_in_hull, point_in_upset_hull, Point, Polytope};
