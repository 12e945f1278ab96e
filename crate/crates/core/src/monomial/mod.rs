//! Monomial ideals and filtrations in a polynomial ring: lattice-point
//! lengths, Newton polyhedra, integral closure, filtration constructors,
//! and the asymptotic vanishing invariants.

mod filtration;
mod ideal;
mod serde_impl;

pub use filtration::{asymptotic_w, gamma, tau, w_invariant, AsymptoticW, ExactCore, Filtration, GammaEstimate, WInvariant, WeightValuation};
pub use ideal::{ExponentVector, MonomialIdeal, NewtonPolyhedron};
