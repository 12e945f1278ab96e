use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::bigint::BigInt;

use super::quad::{squarefree_decompose, QuadExt};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Default absolute tolerance attached to floating values.
pub const DEFAULT_FLOAT_TOL: f64 = 1e-12;

/// One number tower: exact rationals, exact real quadratic extensions, and
/// floats carrying an absolute tolerance. Mixing two quadratic values with
/// different radicands demotes the result to a float.
#[derive(Clone, Debug)]
pub enum Scalar {
    Rat(Rational),
    Quad(QuadExt),
    Float { value: f64, tol: f64 },
}

impl Scalar {
    pub fn from_int(n: i64) -> Self {
        Scalar::Rat(Rational::from_int(n))
    }

    pub fn rat(num: i64, den: i64) -> Self {
        Scalar::Rat(Rational::new(num, den))
    }

    pub fn zero() -> Self {
        Scalar::from_int(0)
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    /// `a + b*sqrt(n)`, collapsing to a rational when possible.
    pub fn quad(a: Rational, b: Rational, n: u64) -> Self {
        if b.is_zero() {
            return Scalar::Rat(a);
        }
        let (s, f) = squarefree_decompose(n);
        if s == 1 {
            return Scalar::Rat(a + b * Rational::from_int(f as i64));
        }
        Scalar::Quad(QuadExt::new(a, b, n))
    }

    pub fn sqrt_of(n: u64) -> Self {
        Scalar::quad(Rational::zero(), Rational::one(), n)
    }

    pub fn float(value: f64) -> Self {
        Scalar::Float {
            value,
            tol: DEFAULT_FLOAT_TOL,
        }
    }

    pub fn float_with_tol(value: f64, tol: f64) -> Self {
        Scalar::Float { value, tol }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, Scalar::Float { .. })
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Quad(q) => q.is_zero(),
            Scalar::Float { value, tol } => value.abs() <= *tol,
        }
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self {
            Scalar::Rat(r) => Some(r.clone()),
            Scalar::Quad(q) => q.as_rational(),
            Scalar::Float { .. } => None,
        }
    }

    pub fn as_quad(&self) -> Option<QuadExt> {
        match self {
            Scalar::Rat(r) => Some(QuadExt::from_rational(r.clone())),
            Scalar::Quad(q) => Some(q.clone()),
            Scalar::Float { .. } => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Rat(r) => r.to_f64(),
            Scalar::Quad(q) => q.to_f64(),
            Scalar::Float { value, .. } => *value,
        }
    }

    pub fn tol(&self) -> f64 {
        match self {
            Scalar::Float { tol, .. } => *tol,
            _ => 0.0,
        }
    }

    /// Exact sign for exact kinds; tolerance-aware sign for floats
    /// (0 when within tolerance of zero).
    pub fn signum(&self) -> i32 {
        match self {
            Scalar::Rat(r) => r.signum(),
            Scalar::Quad(q) => q.signum(),
            Scalar::Float { value, tol } => {
                if value.abs() <= *tol {
                    0
                } else if *value > 0.0 {
                    1
                } else {
                    -1
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn abs(&self) -> Scalar {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    fn binop(
        &self,
        rhs: &Scalar,
        rr: impl Fn(&Rational, &Rational) -> Rational,
        qq: impl Fn(&QuadExt, &QuadExt) -> Option<QuadExt>,
        ff: impl Fn(f64, f64) -> f64,
        ftol: impl Fn(f64, f64, f64, f64) -> f64,
    ) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(rr(a, b)),
            (Scalar::Float { value: a, tol: ta }, b) => {
                let bv = b.to_f64();
                Scalar::Float {
                    value: ff(*a, bv),
                    tol: ftol(*a, bv, *ta, b.tol()),
                }
            }
            (a, Scalar::Float { value: b, tol: tb }) => {
                let av = a.to_f64();
                Scalar::Float {
                    value: ff(av, *b),
                    tol: ftol(av, *b, a.tol(), *tb),
                }
            }
            (a, b) => {
                let (qa, qb) = (a.as_quad().unwrap(), b.as_quad().unwrap());
                match qq(&qa, &qb) {
                    Some(q) => Scalar::quad_normalized(q),
                    // Incompatible radicands demote to float.
                    None => {
                        let (av, bv) = (a.to_f64(), b.to_f64());
                        Scalar::Float {
                            value: ff(av, bv),
                            tol: ftol(av, bv, DEFAULT_FLOAT_TOL, DEFAULT_FLOAT_TOL),
                        }
                    }
                }
            }
        }
    }

    fn quad_normalized(q: QuadExt) -> Scalar {
        match q.as_rational() {
            Some(r) => Scalar::Rat(r),
            None => Scalar::Quad(q),
        }
    }

    pub fn pow(&self, exp: u32) -> Scalar {
        let mut acc = Scalar::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Exact square root of a nonnegative exact scalar. Rationals always
    /// succeed (landing in Q or a quadratic extension); quadratic inputs
    /// succeed when the root stays in the same field.
    pub fn exact_sqrt(&self) -> Option<Scalar> {
        if self.is_negative() {
            return None;
        }
        if let Some(r) = self.as_rational() {
            if let Some(s) = r.exact_sqrt() {
                return Some(Scalar::Rat(s));
            }
            // sqrt(p/q) = sqrt(p*q)/q with p*q = s*f^2.
            let pq = r.numer() * r.denom();
            let (s, f) = decompose_big(&pq)?;
            return Some(Scalar::quad(
                Rational::zero(),
                Rational::from_big(BigInt::from(f), r.denom().clone()),
                s,
            ));
        }
        match self {
            Scalar::Quad(q) => quad_sqrt(q).map(Scalar::Quad),
            _ => None,
        }
    }

    /// d-th root: exact when attainable, float fallback otherwise.
    pub fn nth_root(&self, d: u32) -> Scalar {
        assert!(d >= 1);
        if d == 1 {
            return self.clone();
        }
        if let Some(r) = self.as_rational() {
            if let Some(root) = r.exact_nth_root(d) {
                return Scalar::Rat(root);
            }
            if d == 2 {
                if let Some(s) = self.exact_sqrt() {
                    return s;
                }
            }
        }
        let v = self.to_f64();
        let root = v.powf(1.0 / d as f64);
        let tol = (self.tol() / (d as f64 * root.powi(d as i32 - 1).max(f64::MIN_POSITIVE)))
            .abs()
            .max(DEFAULT_FLOAT_TOL * root.abs().max(1.0));
        Scalar::Float { value: root, tol }
    }

    pub fn floor_int(&self) -> Result<BigInt> {
        match self {
            Scalar::Rat(r) => Ok(r.floor_int()),
            Scalar::Quad(q) => Ok(q.floor_int()),
            Scalar::Float { value, tol } => {
                let lo = (value - tol).floor();
                let hi = (value + tol).floor();
                if lo == hi {
                    Ok(BigInt::from(lo as i64))
                } else {
                    Err(Error::PrecisionExhausted(format!(
                        "floor of {value} +/- {tol} is ambiguous"
                    )))
                }
            }
        }
    }

    pub fn ceil_int(&self) -> Result<BigInt> {
        match self {
            Scalar::Rat(r) => Ok(r.ceil_int()),
            Scalar::Quad(q) => Ok(q.ceil_int()),
            Scalar::Float { value, tol } => {
                let lo = (value - tol).ceil();
                let hi = (value + tol).ceil();
                if lo == hi {
                    Ok(BigInt::from(lo as i64))
                } else {
                    Err(Error::PrecisionExhausted(format!(
                        "ceil of {value} +/- {tol} is ambiguous"
                    )))
                }
            }
        }
    }

    /// Comparison: exact kinds compare exactly; anything involving a float
    /// compares within the combined tolerance (`Equal` inside the band).
    pub fn compare(&self, rhs: &Scalar) -> Ordering {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => a.cmp(b),
            (a, b) if a.is_exact() && b.is_exact() => {
                let (qa, qb) = (a.as_quad().unwrap(), b.as_quad().unwrap());
                match qa.compare(&qb) {
                    Some(ord) => ord,
                    None => {
                        // Different radicands: both irrational, difference
                        // nonzero, so the float comparison is decisive.
                        a.to_f64().partial_cmp(&b.to_f64()).unwrap()
                    }
                }
            }
            (a, b) => {
                let band = a.tol() + b.tol();
                let (av, bv) = (a.to_f64(), b.to_f64());
                if (av - bv).abs() <= band {
                    Ordering::Equal
                } else {
                    av.partial_cmp(&bv).unwrap()
                }
            }
        }
    }

    pub fn approx_eq(&self, rhs: &Scalar) -> bool {
        self.compare(rhs) == Ordering::Equal
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.compare(other) == Ordering::Equal
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.compare(other))
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $rr:expr, $qq:expr, $ff:expr, $ftol:expr) => {
        impl $trait for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.binop(rhs, $rr, $qq, $ff, $ftol)
            }
        }
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

scalar_binop!(
    Add,
    add,
    |a, b| a + b,
    |a, b| a.checked_add(b),
    |a, b| a + b,
    |_, _, ta, tb| ta + tb
);
scalar_binop!(
    Sub,
    sub,
    |a, b| a - b,
    |a, b| a.checked_sub(b),
    |a, b| a - b,
    |_, _, ta, tb| ta + tb
);
impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        // An exact zero annihilates even approximate factors.
        if (self.is_exact() && self.is_zero()) || (rhs.is_exact() && rhs.is_zero()) {
            return Scalar::zero();
        }
        self.binop(
            rhs,
            |a, b| a * b,
            |a, b| a.checked_mul(b),
            |a, b| a * b,
            |a: f64, b: f64, ta, tb| a.abs() * tb + b.abs() * ta + ta * tb,
        )
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    // Tolerance propagation mixes operators by nature.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &Scalar) -> Scalar {
        if self.is_exact() && self.is_zero() {
            return Scalar::zero();
        }
        self.binop(
            rhs,
            |a, b| a / b,
            |a, b| a.checked_div(b),
            |a, b| a / b,
            |a: f64, b: f64, ta, tb| {
                let q = (a / b).abs();
                (ta + q * tb) / b.abs().max(f64::MIN_POSITIVE)
            },
        )
    }
}

macro_rules! scalar_binop_forward {
    ($trait:ident, $method:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

scalar_binop_forward!(Mul, mul);
scalar_binop_forward!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Quad(q) => Scalar::Quad(-q),
            Scalar::Float { value, tol } => Scalar::Float { value: -value, tol },
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -self.clone()
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::Rat(r)
    }
}

impl From<QuadExt> for Scalar {
    fn from(q: QuadExt) -> Self {
        Scalar::quad_normalized(q)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{r}"),
            Scalar::Quad(q) => write!(f, "{q}"),
            Scalar::Float { value, .. } => write!(f, "~{value}"),
        }
    }
}

fn decompose_big(n: &BigInt) -> Option<(u64, u64)> {
    let v: u64 = n.try_into().ok()?;
    if v == 0 {
        return None;
    }
    let (s, f) = squarefree_decompose(v);
    Some((s, f))
}

/// sqrt(a + b sqrt n) = x + y sqrt n when 4x^4 - 4ax^2 + nb^2 = 0 has a
/// rational solution.
fn quad_sqrt(q: &QuadExt) -> Option<QuadExt> {
    let (a, b) = (q.a().clone(), q.b().clone());
    let n = Rational::from_int(q.radicand() as i64);
    let norm = &(&a * &a) - &(&(&b * &b) * &n);
    let s = norm.exact_sqrt()?;
    let two = Rational::from_int(2);
    for candidate in [&(&a + &s) / &two, &(&a - &s) / &two] {
        if let Some(x) = candidate.exact_sqrt() {
            if x.is_zero() {
                continue;
            }
            let y = &b / &(&two * &x);
            let root = QuadExt::new(x, y, q.radicand());
            if root.checked_mul(&root).as_ref() == Some(q) && root.signum() >= 0 {
                return Some(root);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn promotion_and_demotion() {
        let r = Scalar::rat(1, 2);
        let q = Scalar::sqrt_of(3);
        assert!(matches!(&r + &q, Scalar::Quad(_)));
        let q2 = Scalar::sqrt_of(2);
        // Different radicands: demoted to float.
        assert!(matches!(&q + &q2, Scalar::Float { .. }));
        // Same radicand stays exact and can collapse to a rational.
        let prod = &q * &q;
        assert_eq!(prod.as_rational(), Some(Rational::from_int(3)));
    }

    #[test]
    fn sqrt_lands_in_quadratic_field() {
        let s = Scalar::rat(9, 2).exact_sqrt().unwrap(); // 3/sqrt(2) = (3/2) sqrt 2
        assert_eq!(&s * &s, Scalar::rat(9, 2));
        let s4 = Scalar::from_int(4).exact_sqrt().unwrap();
        assert_eq!(s4, Scalar::from_int(2));
    }

    #[test]
    fn float_comparison_uses_tolerance() {
        let a = Scalar::float_with_tol(1.0, 1e-6);
        let b = Scalar::rat(1, 1);
        assert_eq!(a.compare(&b), Ordering::Equal);
        let c = Scalar::float_with_tol(1.001, 1e-6);
        assert_eq!(c.compare(&b), Ordering::Greater);
    }

    #[test]
    fn ceil_of_scaled_sqrt2() {
        let two_sqrt2 = Scalar::from_int(2) * Scalar::sqrt_of(2);
        assert_eq!(two_sqrt2.ceil_int().unwrap(), BigInt::from(3));
    }
}
