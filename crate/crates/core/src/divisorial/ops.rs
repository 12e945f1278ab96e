use num::traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::multiplicity::HomogeneousForm;
use crate::numeric::Scalar;

use super::envelope::{DivisorCoeffs, NefEnvelope};
use super::tensor::IntersectionTensor;

/// Mixed multiplicity through anti-positive intersection products:
/// `e = -((-D1)^(d1) . (-D2)^(d2))`, evaluated on the nef parts
/// `-sum gamma_i(D) E_i`.
pub fn anti_positive_mixed(
    tensor: &IntersectionTensor,
    env: &NefEnvelope,
    d1: &DivisorCoeffs,
    d2: &DivisorCoeffs,
    deg1: usize,
    deg2: usize,
) -> Result<Scalar> {
    let d = tensor.dim();
    if deg1 + deg2 != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: deg1 + deg2,
        });
    }
    let g1 = DivisorCoeffs(env.gamma(d1)?);
    let g2 = DivisorCoeffs(env.gamma(d2)?);
    signed_power_product(tensor, &g1, &g2, deg1)
}

/// `(-1)^(d+1) (A^(k) . B^(d-k))` for gamma vectors A, B.
fn signed_power_product(
    tensor: &IntersectionTensor,
    a: &DivisorCoeffs,
    b: &DivisorCoeffs,
    k: usize,
) -> Result<Scalar> {
    let d = tensor.dim();
    let mut args: Vec<&DivisorCoeffs> = Vec::with_capacity(d);
    for _ in 0..k {
        args.push(a);
    }
    for _ in k..d {
        args.push(b);
    }
    let raw = tensor.product(&args)?;
    Ok(if d % 2 == 0 { -raw } else { raw })
}

/// Degree-d form with coefficients `e_{d-i,i} / ((d-i)! i!)` built from a
/// pair of gamma vectors.
fn form_from_gammas(
    tensor: &IntersectionTensor,
    a: &DivisorCoeffs,
    b: &DivisorCoeffs,
) -> Result<HomogeneousForm> {
    let d = tensor.dim();
    let mut coeffs = Vec::with_capacity(d + 1);
    for i in 0..=d {
        let e = signed_power_product(tensor, a, b, d - i)?;
        let c1: i64 = (1..=(d - i) as i64).product();
        let c2: i64 = (1..=i as i64).product();
        coeffs.push(e / Scalar::from_int(c1 * c2));
    }
    Ok(HomogeneousForm::new(d as u32, coeffs))
}

/// The mixed-multiplicity polynomial
/// `P(n1, n2) = sum e_{d1,d2}/(d1! d2!) n1^(d1) n2^(d2)` of the pair of
/// divisorial filtrations, with each gamma vector evaluated on its own
/// divisor.
pub fn mixed_polynomial(
    tensor: &IntersectionTensor,
    env: &NefEnvelope,
    d1: &DivisorCoeffs,
    d2: &DivisorCoeffs,
) -> Result<HomogeneousForm> {
    let g1 = DivisorCoeffs(env.gamma(d1)?);
    let g2 = DivisorCoeffs(env.gamma(d2)?);
    form_from_gammas(tensor, &g1, &g2)
}

/// One linearity piece of the divisor-sum multiplicity function.
#[derive(Clone, Debug)]
pub struct MultiplicityPiece {
    /// Index of the envelope cone the piece lives in.
    pub cone: usize,
    /// `f(n1, n2) = e(n1 D1 + n2 D2)/d!` on that piece.
    pub form: HomogeneousForm,
}

/// Piecewise polynomial `f(n1, n2) = e(I(n1 D1 + n2 D2))/d!` as the sum
/// divisor moves through the envelope's cones. A single piece comes back
/// when the whole positive span stays in one cone.
pub fn piecewise_multiplicity(
    tensor: &IntersectionTensor,
    env: &NefEnvelope,
    d1: &DivisorCoeffs,
    d2: &DivisorCoeffs,
) -> Result<Vec<MultiplicityPiece>> {
    d1.validate()?;
    d2.validate()?;
    let mut pieces = vec![];
    for (ci, cone) in env.cones.iter().enumerate() {
        // The piece in the (n1, n2) plane: rows l(n) = n1 (row . D1) +
        // n2 (row . D2) >= 0, intersected with the positive quadrant.
        let mut rows: Vec<(Scalar, Scalar)> = cone
            .ineqs
            .iter()
            .map(|row| {
                let p = row
                    .iter()
                    .zip(&d1.0)
                    .fold(Scalar::zero(), |acc, (a, x)| acc + a * x);
                let q = row
                    .iter()
                    .zip(&d2.0)
                    .fold(Scalar::zero(), |acc, (a, x)| acc + a * x);
                (p, q)
            })
            .collect();
        rows.push((Scalar::one(), Scalar::zero()));
        rows.push((Scalar::zero(), Scalar::one()));
        if !has_full_dimensional_region(&rows) {
            continue;
        }
        let a = DivisorCoeffs(cone.apply(d1));
        let b = DivisorCoeffs(cone.apply(d2));
        pieces.push(MultiplicityPiece {
            cone: ci,
            form: form_from_gammas(tensor, &a, &b)?,
        });
    }
    if pieces.is_empty() {
        return Err(Error::OutsideEnvelope);
    }
    Ok(pieces)
}

/// Does `{n : p n1 + q n2 >= 0 for all rows}` have nonempty interior?
/// Candidate extreme rays sit on constraint boundaries; a midpoint of two
/// independent feasible rays certifies the interior.
fn has_full_dimensional_region(rows: &[(Scalar, Scalar)]) -> bool {
    // Identically-zero rows hold everywhere and cannot be strict.
    let rows: Vec<(Scalar, Scalar)> = rows
        .iter()
        .filter(|(p, q)| !(p.is_zero() && q.is_zero()))
        .cloned()
        .collect();
    let mut candidates: Vec<(Scalar, Scalar)> = vec![
        (Scalar::one(), Scalar::zero()),
        (Scalar::zero(), Scalar::one()),
    ];
    for (p, q) in &rows {
        candidates.push((q.clone(), -p));
        candidates.push((-q, p.clone()));
    }
    let feasible: Vec<(Scalar, Scalar)> = candidates
        .into_iter()
        .filter(|(x, y)| {
            (!x.is_negative() && !y.is_negative())
                && !(x.is_zero() && y.is_zero())
                && rows
                    .iter()
                    .all(|(p, q)| !(&(p * x) + &(q * y)).is_negative())
        })
        .collect();
    for (i, r1) in feasible.iter().enumerate() {
        for r2 in feasible.iter().skip(i + 1) {
            // Skip proportional rays.
            if (&r1.0 * &r2.1).approx_eq(&(&r1.1 * &r2.0)) {
                continue;
            }
            let mid = (&r1.0 + &r2.0, &r1.1 + &r2.1);
            if rows
                .iter()
                .all(|(p, q)| (&(p * &mid.0) + &(q * &mid.1)).is_positive())
            {
                return true;
            }
        }
    }
    false
}

/// Classification of a divisor pair by the gamma-ratio criterion: the
/// Minkowski equality holds exactly when all componentwise gamma ratios
/// agree.
#[derive(Clone, Debug)]
pub struct EqualityClass {
    pub equality: bool,
    /// The common ratio `gamma(D2)/gamma(D1)` on equality.
    pub ratio: Option<Scalar>,
    pub gamma1: Vec<Scalar>,
    pub gamma2: Vec<Scalar>,
    /// Envelope cones containing each divisor (several on boundaries).
    pub regions1: Vec<usize>,
    pub regions2: Vec<usize>,
    /// Mixed multiplicities e_0..e_d of the pair.
    pub mixed: Vec<Scalar>,
}

pub fn equality_classifier(
    env: &NefEnvelope,
    tensor: &IntersectionTensor,
    d1: &DivisorCoeffs,
    d2: &DivisorCoeffs,
) -> Result<EqualityClass> {
    let gamma1 = env.gamma(d1)?;
    let gamma2 = env.gamma(d2)?;
    let d = tensor.dim();
    let g1 = DivisorCoeffs(gamma1.clone());
    let g2 = DivisorCoeffs(gamma2.clone());
    let mixed: Vec<Scalar> = (0..=d)
        .map(|i| signed_power_product(tensor, &g1, &g2, d - i))
        .collect::<Result<_>>()?;
    let mut ratio: Option<Scalar> = None;
    let mut equality = true;
    for (a, b) in gamma1.iter().zip(&gamma2) {
        match (a.is_zero(), b.is_zero()) {
            (true, true) => continue,
            (true, false) | (false, true) => {
                equality = false;
                break;
            }
            (false, false) => {
                let r = b / a;
                match &ratio {
                    None => ratio = Some(r),
                    Some(existing) => {
                        if !existing.approx_eq(&r) {
                            equality = false;
                            break;
                        }
                    }
                }
            }
        }
    }
    Ok(EqualityClass {
        equality,
        ratio: if equality { ratio } else { None },
        regions1: env.containing_cones(d1),
        regions2: env.containing_cones(d2),
        gamma1,
        gamma2,
        mixed,
    })
}

/// Result of the rescaling search on an equality pair.
#[derive(Clone, Debug)]
pub struct RescalingOutcome {
    /// `(a, b)` with `a gamma(D1) = b gamma(D2)`, verified exactly.
    pub pair: Option<(u64, u64)>,
    pub ratio: Scalar,
    /// Set when the ratio is exactly irrational although both divisors are
    /// integral, which the rationality theorem rules out.
    pub falsification: bool,
}

pub fn find_rescaling(
    env: &NefEnvelope,
    tensor: &IntersectionTensor,
    d1: &DivisorCoeffs,
    d2: &DivisorCoeffs,
    q_cap: u64,
) -> Result<RescalingOutcome> {
    let class = equality_classifier(env, tensor, d1, d2)?;
    if !class.equality {
        return Err(Error::NotEquality);
    }
    let ratio = class.ratio.expect("equality implies a ratio");
    match ratio.as_rational() {
        Some(r) => {
            let a = r.numer().to_u64();
            let b = r.denom().to_u64();
            let (Some(a), Some(b)) = (a, b) else {
                return Err(Error::RationalityUndecided(q_cap));
            };
            if b > q_cap {
                return Err(Error::RationalityUndecided(q_cap));
            }
            // Verify a gamma(D1) = b gamma(D2) componentwise.
            let ok = class.gamma1.iter().zip(&class.gamma2).all(|(g1, g2)| {
                (&Scalar::from_int(a as i64) * g1).approx_eq(&(&Scalar::from_int(b as i64) * g2))
            });
            if !ok {
                return Err(Error::RationalityUndecided(q_cap));
            }
            Ok(RescalingOutcome {
                pair: Some((a, b)),
                ratio,
                falsification: false,
            })
        }
        None if ratio.is_exact() => Ok(RescalingOutcome {
            falsification: d1.is_integral() && d2.is_integral(),
            pair: None,
            ratio,
        }),
        None => Err(Error::RationalityUndecided(q_cap)),
    }
}
