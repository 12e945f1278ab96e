//! Intersection-theoretic evaluation of divisorial filtrations:
//! anti-positive intersection products, mixed multiplicities from
//! intersection data, piecewise-linear gamma envelopes, equality
//! classification, and a built-in threefold dataset.

mod builtin;
mod envelope;
mod ops;
mod tensor;

pub use builtin::builtin_example;
pub use envelope::{Cone, DivisorCoeffs, NefEnvelope};
pub use ops::{
    anti_positive_mixed, equality_classifier, find_rescaling, mixed_polynomial,
    piecewise_multiplicity, EqualityClass, RescalingOutcome,
};
pub use tensor::IntersectionTensor;
