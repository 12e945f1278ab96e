use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::bigint::BigInt;


use super::rational::Rational;

/// Element `a + b*sqrt(n)` of the real quadratic extension Q(sqrt n),
/// with `n` squarefree and at least 2.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadExt {
    a: Rational,
    b: Rational,
    n: u64,
}

/// Splits `m = s * f^2` with `s` squarefree; returns `(s, f)`.
pub fn squarefree_decompose(m: u64) -> (u64, u64) {
    assert!(m >= 1);
    let mut s = m;
    let mut f = 1u64;
    let mut p = 2u64;
    while p * p <= s {
        while s % (p * p) == 0 {
            s /= p * p;
            f *= p;
        }
        p += 1;
    }
    (s, f)
}

impl QuadExt {
    /// Builds `a + b*sqrt(n)`, folding square factors of `n` into `b`.
    /// Requires the squarefree part of `n` to be at least 2 when `b != 0`.
    pub fn new(a: Rational, b: Rational, n: u64) -> Self {
        if b.is_zero() {
            return QuadExt { a, b, n: 2 };
        }
        let (s, f) = squarefree_decompose(n);
        assert!(s >= 2, "radicand must not be a perfect square");
        QuadExt {
            a,
            b: b * Rational::from_int(f as i64),
            n: s,
        }
    }

    pub fn sqrt_of(n: u64) -> Self {
        QuadExt::new(Rational::zero(), Rational::one(), n)
    }

    pub fn from_rational(a: Rational) -> Self {
        QuadExt {
            a,
            b: Rational::zero(),
            n: 2,
        }
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn radicand(&self) -> u64 {
        self.n
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// `Some(a)` when the value lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.a.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Radicands are compatible when either value is rational.
    fn same_field(&self, other: &QuadExt) -> bool {
        self.b.is_zero() || other.b.is_zero() || self.n == other.n
    }

    fn common_radicand(&self, other: &QuadExt) -> u64 {
        if self.b.is_zero() {
            other.n
        } else {
            self.n
        }
    }

    /// Checked addition; `None` when the radicands differ.
    pub fn checked_add(&self, other: &QuadExt) -> Option<QuadExt> {
        self.same_field(other).then(|| QuadExt {
            a: &self.a + &other.a,
            b: &self.b + &other.b,
            n: self.common_radicand(other),
        })
    }

    pub fn checked_sub(&self, other: &QuadExt) -> Option<QuadExt> {
        self.checked_add(&(-other))
    }

    pub fn checked_mul(&self, other: &QuadExt) -> Option<QuadExt> {
        self.same_field(other).then(|| {
            let n = Rational::from_int(self.common_radicand(other) as i64);
            QuadExt {
                a: &(&self.a * &other.a) + &(&(&self.b * &other.b) * &n),
                b: &(&self.a * &other.b) + &(&self.b * &other.a),
                n: self.common_radicand(other),
            }
        })
    }

    pub fn checked_div(&self, other: &QuadExt) -> Option<QuadExt> {
        assert!(!other.is_zero(), "division by zero");
        if !self.same_field(other) {
            return None;
        }
        // 1/(a + b sqrt n) = (a - b sqrt n) / (a^2 - n b^2)
        let n = Rational::from_int(self.common_radicand(other) as i64);
        let norm = &(&other.a * &other.a) - &(&(&other.b * &other.b) * &n);
        let inv = QuadExt {
            a: &other.a / &norm,
            b: -(&other.b / &norm),
            n: self.common_radicand(other),
        };
        self.checked_mul(&inv)
    }

    pub fn conjugate(&self) -> QuadExt {
        QuadExt {
            a: self.a.clone(),
            b: -&self.b,
            n: self.n,
        }
    }

    /// Exact sign of `a + b*sqrt(n)`.
    pub fn signum(&self) -> i32 {
        let sa = self.a.signum();
        let sb = self.b.signum();
        if sb == 0 {
            return sa;
        }
        if sa == 0 {
            return sb;
        }
        if sa == sb {
            return sa;
        }
        // Opposite signs: compare a^2 with n b^2; sign follows the larger part.
        let a2 = &self.a * &self.a;
        let nb2 = &(&self.b * &self.b) * &Rational::from_int(self.n as i64);
        match a2.cmp(&nb2) {
            std::cmp::Ordering::Greater => sa,
            std::cmp::Ordering::Less => sb,
            std::cmp::Ordering::Equal => 0,
        }
    }

    /// Exact comparison within the same field.
    pub fn compare(&self, other: &QuadExt) -> Option<std::cmp::Ordering> {
        let diff = self.checked_sub(other)?;
        Some(match diff.signum() {
            s if s < 0 => std::cmp::Ordering::Less,
            0 => std::cmp::Ordering::Equal,
            _ => std::cmp::Ordering::Greater,
        })
    }

    /// Exact floor. Brackets sqrt(n) by decimal rationals until the integer
    /// part is pinned; terminates because the value is irrational when b != 0.
    pub fn floor_int(&self) -> BigInt {
        if self.b.is_zero() {
            return self.a.floor_int();
        }
        let n = BigInt::from(self.n);
        let mut scale = BigInt::from(1u32);
        loop {
            scale *= 10u32;
            let s2 = &scale * &scale;
            let lo_num = (&n * &s2).sqrt();
            let lo = Rational::from_big(lo_num.clone(), scale.clone());
            let hi = Rational::from_big(lo_num + 1, scale.clone());
            // x in [a + b*lo, a + b*hi] for b > 0, flipped for b < 0.
            let (xlo, xhi) = if self.b.is_positive() {
                (&self.a + &(&self.b * &lo), &self.a + &(&self.b * &hi))
            } else {
                (&self.a + &(&self.b * &hi), &self.a + &(&self.b * &lo))
            };
            let flo = xlo.floor_int();
            if flo == xhi.floor_int() {
                return flo;
            }
        }
    }

    pub fn ceil_int(&self) -> BigInt {
        if self.b.is_zero() {
            return self.a.ceil_int();
        }
        // Irrational, so ceil = floor + 1.
        self.floor_int() + 1
    }

    pub fn to_f64(&self) -> f64 {
        self.a.to_f64() + self.b.to_f64() * (self.n as f64).sqrt()
    }
}

impl Add for QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: QuadExt) -> QuadExt {
        self.checked_add(&rhs).expect("mismatched radicands")
    }
}

impl Sub for QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: QuadExt) -> QuadExt {
        self.checked_sub(&rhs).expect("mismatched radicands")
    }
}

impl Mul for QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: QuadExt) -> QuadExt {
        self.checked_mul(&rhs).expect("mismatched radicands")
    }
}

impl Div for QuadExt {
    type Output = QuadExt;
    fn div(self, rhs: QuadExt) -> QuadExt {
        self.checked_div(&rhs).expect("mismatched radicands")
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt {
            a: -self.a,
            b: -self.b,
            n: self.n,
        }
    }
}

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt {
            a: -&self.a,
            b: -&self.b,
            n: self.n,
        }
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            if self.b == Rational::one() {
                return write!(f, "sqrt({})", self.n);
            }
            return write!(f, "{}*sqrt({})", self.b, self.n);
        }
        if self.b.is_negative() {
            write!(f, "{} - {}*sqrt({})", self.a, self.b.abs(), self.n)
        } else {
            write!(f, "{} + {}*sqrt({})", self.a, self.b, self.n)
        }
    }
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn squarefree_normalization() {
        let x = QuadExt::new(q(0, 1), q(1, 1), 12); // sqrt(12) = 2 sqrt(3)
        assert_eq!(x.radicand(), 3);
        assert_eq!(x.b(), &q(2, 1));
    }

    #[test]
    fn conjugate_norm_identity() {
        let x = QuadExt::new(q(3, 2), q(-5, 7), 3);
        let prod = x.checked_mul(&x.conjugate()).unwrap();
        assert!(prod.is_rational());
        // a^2 - n b^2
        let expect = &(&q(3, 2) * &q(3, 2)) - &(&(&q(-5, 7) * &q(-5, 7)) * &q(3, 1));
        assert_eq!(prod.as_rational().unwrap(), expect);
    }

    #[test]
    fn exact_sign_and_floor() {
        // 3 - sqrt(3)/3 ~ 2.42265
        let x = QuadExt::new(q(3, 1), q(-1, 3), 3);
        assert_eq!(x.signum(), 1);
        assert_eq!(x.floor_int(), BigInt::from(2));
        assert_eq!(x.ceil_int(), BigInt::from(3));
        // 2*sqrt(2) ~ 2.828
        let y = QuadExt::new(q(0, 1), q(2, 1), 2);
        assert_eq!(y.ceil_int(), BigInt::from(3));
        let neg = QuadExt::new(q(0, 1), q(-1, 1), 2);
        assert_eq!(neg.floor_int(), BigInt::from(-2));
        assert_eq!(neg.ceil_int(), BigInt::from(-1));
    }

    #[test]
    fn division_round_trip() {
        let x = QuadExt::new(q(9, 26), q(1, 26), 3); // 3/(9-sqrt 3)
        let y = QuadExt::new(q(9, 1), q(-1, 1), 3);
        let three = x.checked_mul(&y).unwrap();
        assert_eq!(three.as_rational(), Some(q(3, 1)));
        let back = three.checked_div(&y).unwrap();
        assert_eq!(back, x);
    }
}
