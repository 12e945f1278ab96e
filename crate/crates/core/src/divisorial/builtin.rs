use crate::numeric::{Rational, Scalar};

use super::envelope::{Cone, NefEnvelope};
use super::tensor::IntersectionTensor;

/// Built-in threefold dataset: a blowup with two exceptional prime
/// divisors, its intersection numbers, and the three-region gamma
/// envelope over Q(sqrt 3). The regions of the coefficient plane are
/// split by the rays `n2 = n1` and `n2 = n1 (3 - sqrt(3)/3)`.
pub fn builtin_example() -> (IntersectionTensor, NefEnvelope) {
    let tensor = IntersectionTensor::new(
        3,
        vec!["E1".into(), "E2".into()],
        vec![
            (vec![0, 0, 0], 468),
            (vec![0, 0, 1], -162),
            (vec![0, 1, 1], 54),
            (vec![1, 1, 1], 54),
        ],
    )
    .expect("well-formed builtin tensor");

    // Slope of the outer boundary: beta = 3 - sqrt(3)/3.
    let beta = Scalar::quad(Rational::from_int(3), Rational::new(-1, 3), 3);
    // gamma_{E1} coefficient in the outer region: 3/(9 - sqrt 3).
    let c = Scalar::quad(Rational::new(9, 26), Rational::new(1, 26), 3);

    let one = Scalar::one;
    let zero = Scalar::zero;
    let envelope = NefEnvelope {
        cones: vec![
            // Region 1: n2 <= n1, gamma = (n1, n1).
            Cone {
                ineqs: vec![vec![one(), -one()], vec![zero(), one()]],
                gamma: vec![vec![one(), zero()], vec![one(), zero()]],
            },
            // Region 2: n1 <= n2 <= beta n1, gamma = (n1, n2).
            Cone {
                ineqs: vec![vec![-one(), one()], vec![beta.clone(), -one()]],
                gamma: vec![vec![one(), zero()], vec![zero(), one()]],
            },
            // Region 3: n2 >= beta n1, gamma = (c n2, n2).
            Cone {
                ineqs: vec![vec![-beta, one()], vec![one(), zero()]],
                gamma: vec![vec![zero(), c], vec![zero(), one()]],
            },
        ],
    };
    (tensor, envelope)
}
