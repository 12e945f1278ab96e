use std::fmt;

use crate::numeric::Scalar;

/// Homogeneous degree-d form in two variables; the coefficient at index i
/// multiplies `n1^(d-i) n2^i`.
#[derive(Clone, Debug)]
pub struct HomogeneousForm {
    degree: u32,
    coeffs: Vec<Scalar>,
}

impl HomogeneousForm {
    pub fn new(degree: u32, coeffs: Vec<Scalar>) -> Self {
        assert_eq!(coeffs.len(), degree as usize + 1);
        HomogeneousForm { degree, coeffs }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coefficients(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coefficient(&self, i: usize) -> &Scalar {
        &self.coeffs[i]
    }

    pub fn eval(&self, n1: &Scalar, n2: &Scalar) -> Scalar {
        let d = self.degree;
        self.coeffs
            .iter()
            .enumerate()
            .fold(Scalar::zero(), |acc, (i, c)| {
                acc + c * n1.pow(d - i as u32) * n2.pow(i as u32)
            })
    }
}

impl fmt::Display for HomogeneousForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree;
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            let (p1, p2) = (d - i as u32, i as u32);
            if p1 > 0 {
                write!(f, "*n1{}", if p1 > 1 { format!("^{p1}") } else { String::new() })?;
            }
            if p2 > 0 {
                write!(f, "*n2{}", if p2 > 1 { format!("^{p2}") } else { String::new() })?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
