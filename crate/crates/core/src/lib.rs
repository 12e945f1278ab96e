//! Exact and approximate computation of multiplicities, mixed
//! multiplicities, and Minkowski-equality diagnostics for filtrations of
//! m-primary ideals, in two models: monomial filtrations in a polynomial
//! ring, and divisorial filtrations given by intersection data.

pub mod convex;
pub mod divisorial;
pub mod error;
pub mod monomial;
pub mod multiplicity;
pub mod numeric;
pub mod okounkov;

#[cfg(test)]
mod thread_safety {
    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn shared_types_are_send_and_sync() {
        assert_send_sync::<crate::numeric::Scalar>();
        assert_send_sync::<crate::monomial::MonomialIdeal>();
        assert_send_sync::<crate::monomial::Filtration>();
        assert_send_sync::<crate::convex::Polytope>();
        assert_send_sync::<crate::divisorial::NefEnvelope>();
    }
}
