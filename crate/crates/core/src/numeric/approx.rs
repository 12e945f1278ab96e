use num::bigint::BigInt;
use num::traits::{One, Signed, Zero};

use super::rational::Rational;
use super::scalar::Scalar;
use crate::error::{Error, Result};

const MAX_CF_DIGITS: usize = 5_000;

/// Which side of the target a convergent must land on.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Below,
    Above,
}

/// First continued-fraction convergent `p0/q0` with positive entries and
/// `0 <= xi - p0/q0 < alpha/q0` (rational `xi` returns its exact fraction).
pub fn approximate_below(xi: &Scalar, alpha: &Rational) -> Result<(BigInt, BigInt)> {
    approximate(xi, alpha, Side::Below)
}

/// Mirror of [`approximate_below`]: `-alpha/q0 < xi - p0/q0 <= 0`.
pub fn approximate_above(xi: &Scalar, alpha: &Rational) -> Result<(BigInt, BigInt)> {
    approximate(xi, alpha, Side::Above)
}

fn approximate(xi: &Scalar, alpha: &Rational, side: Side) -> Result<(BigInt, BigInt)> {
    if !xi.is_positive() {
        return Err(Error::NonPositiveInput(format!("xi = {xi}")));
    }
    if !alpha.is_positive() {
        return Err(Error::NonPositiveInput(format!("alpha = {alpha}")));
    }
    if let Some(r) = xi.as_rational() {
        // Exact fraction: difference zero satisfies both one-sided bounds.
        return Ok((r.numer().clone(), r.denom().clone()));
    }
    match xi {
        Scalar::Quad(q) => {
            let mut state = q.clone();
            let mut conv = Convergents::new();
            for _ in 0..MAX_CF_DIGITS {
                let digit = state.floor_int();
                let (p, q0) = conv.push(&digit);
                if q0.is_positive() && p.is_positive() {
                    let cand = Rational::from_big(p.clone(), q0.clone());
                    if certify_exact(xi, &cand, alpha, side) {
                        return Ok((p, q0));
                    }
                }
                let frac = state.checked_sub(&super::quad::QuadExt::from_rational(
                    Rational::from_bigint(digit),
                ))
                .expect("same field");
                state = super::quad::QuadExt::from_rational(Rational::one())
                    .checked_div(&frac)
                    .expect("same field");
            }
            Err(Error::PrecisionExhausted(
                "continued-fraction digit cap reached".into(),
            ))
        }
        Scalar::Float { value, tol } => {
            if !value.is_finite() || *tol < 0.0 {
                return Err(Error::InvalidInput("non-finite float input".into()));
            }
            let xi_lo = rational_from_f64(value - tol);
            let xi_hi = rational_from_f64(value + tol);
            if !xi_lo.is_positive() {
                return Err(Error::NonPositiveInput(format!("xi = {xi}")));
            }
            let tol_exact = &(&xi_hi - &xi_lo) / &Rational::from_int(2);
            let accept = |p: BigInt, q0: BigInt| -> Result<(BigInt, BigInt)> {
                // Tolerance must be finer than alpha/(2 q0).
                let need = alpha / &Rational::from_big(BigInt::from(2), q0.clone());
                if tol_exact >= need {
                    return Err(Error::PrecisionExhausted(format!(
                        "tolerance {tol} is not below alpha/(2 q0)"
                    )));
                }
                Ok((p, q0))
            };
            let (mut lo, mut hi) = (xi_lo.clone(), xi_hi.clone());
            let mut conv = Convergents::new();
            for _ in 0..MAX_CF_DIGITS {
                let digit = lo.floor_int();
                if digit != hi.floor_int() {
                    // The next digit is pinned only from below; its
                    // semiconvergents up to that bound are still certified
                    // candidates.
                    let bound = digit.min(hi.floor_int());
                    if let Some((p, q0)) =
                        best_semiconvergent(&conv, &bound, &xi_lo, &xi_hi, alpha, side)
                    {
                        return accept(p, q0);
                    }
                    return Err(Error::PrecisionExhausted(
                        "interval too wide for the next digit".into(),
                    ));
                }
                // Semiconvergents between the two previous convergents can
                // certify where the full convergents never do within the
                // interval's digit budget.
                if let Some((p, q0)) =
                    best_semiconvergent(&conv, &digit, &xi_lo, &xi_hi, alpha, side)
                {
                    return accept(p, q0);
                }
                let (p, q0) = conv.push(&digit);
                if q0.is_positive() && p.is_positive() {
                    let cand = Rational::from_big(p.clone(), q0.clone());
                    if certify_interval(&xi_lo, &xi_hi, &cand, alpha, side) {
                        return accept(p, q0);
                    }
                }
                let fl = &lo - &Rational::from_bigint(digit.clone());
                let fh = &hi - &Rational::from_bigint(digit);
                if fl.is_zero() || fh.is_zero() {
                    return Err(Error::PrecisionExhausted(
                        "interval endpoint hit an integer".into(),
                    ));
                }
                // Reciprocal flips the interval.
                (lo, hi) = (fh.recip(), fl.recip());
            }
            Err(Error::PrecisionExhausted(
                "continued-fraction digit cap reached".into(),
            ))
        }
        Scalar::Rat(_) => unreachable!("handled above"),
    }
}

/// Exact one-sided certification for exact `xi`.
fn certify_exact(xi: &Scalar, cand: &Rational, alpha: &Rational, side: Side) -> bool {
    let diff = xi - &Scalar::Rat(cand.clone());
    let bound = Scalar::Rat(alpha / &Rational::from_bigint(cand.denom().clone()));
    match side {
        Side::Below => !diff.is_negative() && (&diff - &bound).is_negative(),
        Side::Above => !diff.is_positive() && (&diff + &bound).is_positive(),
    }
}

/// Certification that holds for every value in `[lo, hi]`.
fn certify_interval(
    lo: &Rational,
    hi: &Rational,
    cand: &Rational,
    alpha: &Rational,
    side: Side,
) -> bool {
    let bound = alpha / &Rational::from_bigint(cand.denom().clone());
    match side {
        Side::Below => cand <= lo && &(hi - cand) < &bound,
        Side::Above => cand >= hi && &(cand - lo) < &bound,
    }
}

/// Largest same-side semiconvergent `(t p_{k-1} + p_{k-2})/(t q_{k-1} +
/// q_{k-2})` for `1 <= t < a_k`, if it certifies the requested bound for
/// the whole interval. The side predicate is monotone in t, so the largest
/// admissible t is found by bisection, and it minimizes `q |xi - p/q|`.
fn best_semiconvergent(
    conv: &Convergents,
    digit: &BigInt,
    lo: &Rational,
    hi: &Rational,
    alpha: &Rational,
    side: Side,
) -> Option<(BigInt, BigInt)> {
    if digit <= &BigInt::one() {
        return None;
    }
    let cand_at = |t: &BigInt| -> Option<Rational> {
        let p = t * &conv.p.0 + &conv.p.1;
        let q = t * &conv.q.0 + &conv.q.1;
        (p.is_positive() && q.is_positive()).then(|| Rational::from_big(p, q))
    };
    let on_side = |t: &BigInt| -> bool {
        match cand_at(t) {
            None => false,
            Some(c) => match side {
                Side::Below => &c <= lo,
                Side::Above => &c >= hi,
            },
        }
    };
    let mut best: Option<BigInt> = None;
    let (mut a, mut b) = (BigInt::one(), digit - 1);
    if !on_side(&a) {
        return None;
    }
    while a <= b {
        let mid = (&a + &b) / 2;
        if on_side(&mid) {
            best = Some(mid.clone());
            a = mid + 1;
        } else {
            b = mid - 1;
        }
    }
    let t = best?;
    for t in [t.clone(), &t - 1].into_iter().filter(|t| t.is_positive()) {
        if let Some(c) = cand_at(&t) {
            if certify_interval(lo, hi, &c, alpha, side) {
                let p = &t * &conv.p.0 + &conv.p.1;
                let q = &t * &conv.q.0 + &conv.q.1;
                return Some((p, q));
            }
        }
    }
    None
}

/// Standard convergent recurrence p_k = a_k p_{k-1} + p_{k-2}.
struct Convergents {
    p: (BigInt, BigInt),
    q: (BigInt, BigInt),
}

impl Convergents {
    fn new() -> Self {
        Convergents {
            p: (BigInt::one(), BigInt::zero()),
            q: (BigInt::zero(), BigInt::one()),
        }
    }

    fn push(&mut self, a: &BigInt) -> (BigInt, BigInt) {
        let p = a * &self.p.0 + &self.p.1;
        let q = a * &self.q.0 + &self.q.1;
        self.p = (p.clone(), self.p.0.clone());
        self.q = (q.clone(), self.q.0.clone());
        (p, q)
    }
}

fn rational_from_f64(v: f64) -> Rational {
    // Exact binary expansion of the float.
    let r = num::rational::BigRational::from_float(v).expect("finite float");
    Rational::from_big(r.numer().clone(), r.denom().clone())
}

/// Decides whether `(num/den)^(1/d)` is rational and returns it in lowest
/// terms. Both inputs must be exact and positive.
pub fn rational_dth_root(num: &Scalar, den: &Scalar, d: u32) -> Result<Option<Rational>> {
    if !num.is_exact() || !den.is_exact() {
        return Err(Error::InexactInput);
    }
    if !num.is_positive() || !den.is_positive() {
        return Err(Error::NonPositiveInput(format!("{num}/{den}")));
    }
    if d == 0 {
        return Err(Error::InvalidInput("degree must be positive".into()));
    }
    let ratio = num / den;
    match ratio.as_rational() {
        // An irrational quadratic ratio has no rational d-th root.
        None if ratio.is_exact() => Ok(None),
        None => Err(Error::InexactInput),
        Some(r) => Ok(r.exact_nth_root(d)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::quad::QuadExt;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn exact_rational_returns_its_fraction() {
        let (p, q) = approximate_below(&Scalar::rat(3, 2), &Rational::new(1, 10)).unwrap();
        assert_eq!((p, q), (big(3), big(2)));
        let (p, q) = approximate_above(&Scalar::rat(3, 2), &Rational::new(1, 10)).unwrap();
        assert_eq!((p, q), (big(3), big(2)));
    }

    #[test]
    fn sqrt3_below_and_above() {
        let xi = Scalar::sqrt_of(3);
        let alpha = Rational::new(1, 20);
        assert_eq!(approximate_below(&xi, &alpha).unwrap(), (big(71), big(41)));
        assert_eq!(approximate_above(&xi, &alpha).unwrap(), (big(26), big(15)));
    }

    #[test]
    fn region_boundary_value() {
        // 3 - sqrt(3)/3, the slope separating the middle and outer regions.
        let xi = Scalar::Quad(QuadExt::new(
            Rational::from_int(3),
            Rational::new(-1, 3),
            3,
        ));
        let alpha = Rational::new(1, 100);
        let (p, q) = approximate_below(&xi, &alpha).unwrap();
        let cand = Scalar::Rat(Rational::from_big(p, q.clone()));
        let diff = &xi - &cand;
        assert!(!diff.is_negative());
        assert!(diff < Scalar::Rat(&alpha / &Rational::from_bigint(q)));
    }

    #[test]
    fn float_input_certifies_or_errors() {
        let xi = Scalar::float_with_tol(std::f64::consts::SQRT_2, 1e-12);
        let (p, q) = approximate_below(&xi, &Rational::new(1, 50)).unwrap();
        let cand = Rational::from_big(p, q);
        assert!(cand.to_f64() <= std::f64::consts::SQRT_2);
        // A hopelessly coarse tolerance cannot certify anything.
        let coarse = Scalar::float_with_tol(std::f64::consts::SQRT_2, 0.2);
        assert!(matches!(
            approximate_below(&coarse, &Rational::new(1, 1000)),
            Err(Error::PrecisionExhausted(_))
        ));
    }

    #[test]
    fn inverse_sqrt2_above() {
        let xi = Scalar::one() / Scalar::sqrt_of(2);
        let alpha = Rational::new(1, 50);
        let (p, q) = approximate_above(&xi, &alpha).unwrap();
        assert!(p.is_positive() && q.is_positive());
        let cand = Scalar::Rat(Rational::from_big(p, q.clone()));
        let diff = &cand - &xi;
        assert!(!diff.is_negative());
        assert!(diff < Scalar::Rat(&alpha / &Rational::from_bigint(q)));
    }

    #[test]
    fn dth_root_detection() {
        assert_eq!(
            rational_dth_root(&Scalar::from_int(4), &Scalar::one(), 2).unwrap(),
            Some(Rational::from_int(2))
        );
        let k = Scalar::rat(7, 5);
        assert_eq!(
            rational_dth_root(
                &(&Scalar::from_int(216) * &k),
                &(&Scalar::from_int(27) * &k),
                3
            )
            .unwrap(),
            Some(Rational::from_int(2))
        );
        assert_eq!(
            rational_dth_root(&Scalar::from_int(6), &Scalar::one(), 2).unwrap(),
            None
        );
        assert!(matches!(
            rational_dth_root(&Scalar::float(2.0), &Scalar::one(), 2),
            Err(Error::InexactInput)
        ));
    }
}
