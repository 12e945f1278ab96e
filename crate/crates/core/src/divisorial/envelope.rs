use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::Scalar;

/// Coefficient vector of a divisor supported on the tracked prime
/// divisors; nonnegative and not identically zero.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DivisorCoeffs(pub Vec<Scalar>);

impl DivisorCoeffs {
    pub fn from_ints(coeffs: &[i64]) -> Self {
        DivisorCoeffs(coeffs.iter().map(|&c| Scalar::from_int(c)).collect())
    }

    pub fn validate(&self) -> Result<()> {
        if self.0.iter().any(Scalar::is_negative) {
            return Err(Error::NonPositiveInput("negative divisor coefficient".into()));
        }
        if self.0.iter().all(Scalar::is_zero) {
            return Err(Error::InvalidInput("zero divisor".into()));
        }
        Ok(())
    }

    pub fn is_integral(&self) -> bool {
        self.0
            .iter()
            .all(|c| c.as_rational().is_some_and(|r| r.is_integer()))
    }
}

/// One linearity region of the gamma map: membership inequalities
/// `row . coeffs >= 0` and the matrix sending divisor coefficients to
/// their gamma vector.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Cone {
    pub ineqs: Vec<Vec<Scalar>>,
    pub gamma: Vec<Vec<Scalar>>,
}

impl Cone {
    pub fn contains(&self, d: &DivisorCoeffs) -> bool {
        self.ineqs.iter().all(|row| {
            let v = row
                .iter()
                .zip(&d.0)
                .fold(Scalar::zero(), |acc, (a, x)| acc + a * x);
            !v.is_negative()
        })
    }

    pub fn apply(&self, d: &DivisorCoeffs) -> Vec<Scalar> {
        self.gamma
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&d.0)
                    .fold(Scalar::zero(), |acc, (a, x)| acc + a * x)
            })
            .collect()
    }
}

/// Piecewise-linear map from divisor coefficients to the asymptotic
/// vanishing orders making the negated combination nef.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NefEnvelope {
    pub cones: Vec<Cone>,
}

impl NefEnvelope {
    pub fn rank(&self) -> usize {
        self.cones
            .first()
            .map(|c| c.gamma.len())
            .unwrap_or(0)
    }

    /// Indices of the cones containing the coefficient vector.
    pub fn containing_cones(&self, d: &DivisorCoeffs) -> Vec<usize> {
        self.cones
            .iter()
            .enumerate()
            .filter(|(_, c)| c.contains(d))
            .map(|(i, _)| i)
            .collect()
    }

    /// The gamma vector of a divisor. Boundary points may lie in several
    /// cones; the maps must agree there.
    pub fn gamma(&self, d: &DivisorCoeffs) -> Result<Vec<Scalar>> {
        d.validate()?;
        let cones = self.containing_cones(d);
        let Some(&first) = cones.first() else {
            return Err(Error::OutsideEnvelope);
        };
        let value = self.cones[first].apply(d);
        for &other in &cones[1..] {
            let v2 = self.cones[other].apply(d);
            if value
                .iter()
                .zip(&v2)
                .any(|(a, b)| !a.approx_eq(b))
            {
                return Err(Error::InvalidInput(format!(
                    "gamma maps of cones {first} and {other} disagree on a shared point"
                )));
            }
        }
        Ok(value)
    }

    /// Structural checks: gamma dominates the coefficients inside each
    /// cone (sampled on vertices plus interior combinations) and adjacent
    /// cones agree on shared rays.
    pub fn validate(&self) -> Result<()> {
        let r = self.rank();
        for (i, cone) in self.cones.iter().enumerate() {
            if cone.gamma.len() != r || cone.gamma.iter().any(|row| row.len() != r) {
                return Err(Error::InvalidInput(format!(
                    "cone {i}: gamma matrix is not {r} x {r}"
                )));
            }
            for row in &cone.ineqs {
                if row.len() != r {
                    return Err(Error::InvalidInput(format!(
                        "cone {i}: inequality arity mismatch"
                    )));
                }
            }
        }
        for d in self.sample_points() {
            let cones = self.containing_cones(&d);
            for &ci in &cones {
                let g = self.cones[ci].apply(&d);
                for (gi, di) in g.iter().zip(&d.0) {
                    if (gi - di).is_negative() {
                        return Err(Error::InvalidInput(format!(
                            "gamma below the coefficient vector in cone {ci}"
                        )));
                    }
                }
            }
            // Agreement across all containing cones.
            if cones.len() > 1 {
                self.gamma(&d)?;
            }
        }
        Ok(())
    }

    /// Deterministic sample of rays: coordinate rays and small integer
    /// combinations, plus boundary rays of every inequality (in rank 2).
    fn sample_points(&self) -> Vec<DivisorCoeffs> {
        let r = self.rank();
        let mut pts = vec![];
        for i in 0..r {
            let mut v = vec![Scalar::zero(); r];
            v[i] = Scalar::one();
            pts.push(DivisorCoeffs(v));
        }
        if r == 2 {
            for a in 1..=10i64 {
                for b in 1..=10i64 {
                    pts.push(DivisorCoeffs(vec![
                        Scalar::from_int(a),
                        Scalar::from_int(b),
                    ]));
                }
            }
            for cone in &self.cones {
                for row in &cone.ineqs {
                    // Boundary ray of a . x = 0 in the positive quadrant.
                    let (a, b) = (&row[0], &row[1]);
                    let candidate = DivisorCoeffs(vec![b.abs(), a.abs()]);
                    if !candidate.0.iter().all(Scalar::is_zero) {
                        pts.push(candidate);
                    }
                }
            }
        }
        pts.retain(|p| p.validate().is_ok());
        pts
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divisorial::builtin_example;

    #[test]
    fn builtin_envelope_validates() {
        let (_, env) = builtin_example();
        env.validate().unwrap();
    }

    #[test]
    fn gamma_agrees_on_the_diagonal() {
        let (_, env) = builtin_example();
        let d = DivisorCoeffs::from_ints(&[3, 3]);
        assert_eq!(env.containing_cones(&d).len(), 2);
        let g = env.gamma(&d).unwrap();
        assert_eq!(g, vec![Scalar::from_int(3), Scalar::from_int(3)]);
    }

    #[test]
    fn outside_envelope_detected() {
        let env = NefEnvelope {
            cones: vec![Cone {
                ineqs: vec![vec![Scalar::one(), -Scalar::one()]],
                gamma: vec![
                    vec![Scalar::one(), Scalar::zero()],
                    vec![Scalar::one(), Scalar::zero()],
                ],
            }],
        };
        let d = DivisorCoeffs::from_ints(&[1, 2]);
        assert!(matches!(env.gamma(&d), Err(Error::OutsideEnvelope)));
    }
}
