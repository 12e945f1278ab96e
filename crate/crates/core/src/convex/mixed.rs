use std::fmt;

use super::polytope::{Point, Polytope};
use crate::error::{Error, Result};
use crate::numeric::{Rational, Scalar};

/// Homogeneous degree-d volume polynomial of a tuple of convex bodies; the
/// coefficients are the (scaled) mixed volumes.
#[derive(Clone, Debug)]
pub struct VolumePolynomial {
    degree: u32,
    nvars: usize,
    /// Pairs (exponent multi-index, coefficient), exponents summing to the
    /// degree, in lexicographic order.
    terms: Vec<(Vec<u32>, Scalar)>,
}

impl VolumePolynomial {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Vec<u32>, Scalar)] {
        &self.terms
    }

    pub fn coefficient(&self, expo: &[u32]) -> Scalar {
        self.terms
            .iter()
            .find(|(e, _)| e == expo)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Scalar::zero)
    }

    pub fn eval(&self, at: &[Scalar]) -> Scalar {
        assert_eq!(at.len(), self.nvars);
        let mut acc = Scalar::zero();
        for (expo, coeff) in &self.terms {
            let mut term = coeff.clone();
            for (x, &e) in at.iter().zip(expo.iter()) {
                term = term * x.pow(e);
            }
            acc = acc + term;
        }
        acc
    }
}

impl fmt::Display for VolumePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (expo, coeff) in &self.terms {
            if coeff.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({coeff})")?;
            for (i, &e) in expo.iter().enumerate() {
                if e > 0 {
                    write!(f, "*l{}^{}", i + 1, e)?;
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = vec![];
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            let mut v = vec![first];
            v.append(&mut rest);
            out.push(v);
        }
    }
    out
}

/// Recovers the exact volume polynomial Vol(l_1 K_1 + ... + l_r K_r) by
/// evaluating at the lattice points of the degree-d simplex and solving the
/// (poised) linear system.
pub fn volume_polynomial(bodies: &[Polytope]) -> Result<VolumePolynomial> {
    let r = bodies.len();
    if r == 0 {
        return Err(Error::InvalidInput("no bodies".into()));
    }
    let d = bodies[0].dim();
    for b in bodies {
        if b.dim() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: b.dim(),
            });
        }
        if b.is_empty() {
            return Err(Error::InvalidInput("empty body".into()));
        }
    }
    let monos = compositions(d as u32, r);
    let nodes = monos.clone();
    let mut matrix: Vec<Vec<Scalar>> = Vec::with_capacity(nodes.len());
    let mut rhs: Vec<Scalar> = Vec::with_capacity(nodes.len());
    for node in &nodes {
        let row: Vec<Scalar> = monos
            .iter()
            .map(|mono| {
                mono.iter()
                    .zip(node.iter())
                    .fold(Scalar::one(), |acc, (&e, &x)| {
                        acc * Scalar::from_int(x as i64).pow(e)
                    })
            })
            .collect();
        matrix.push(row);
        rhs.push(scaled_sum_volume(bodies, node)?);
    }
    let coeffs = solve_exact(matrix, rhs)?;
    Ok(VolumePolynomial {
        degree: d as u32,
        nvars: r,
        terms: monos.into_iter().zip(coeffs).collect(),
    })
}

fn scaled_sum_volume(bodies: &[Polytope], weights: &[u32]) -> Result<Scalar> {
    let d = bodies[0].dim();
    let mut acc: Option<Polytope> = None;
    for (body, &w) in bodies.iter().zip(weights.iter()) {
        if w == 0 {
            continue;
        }
        let scaled = body.scale(&Scalar::from_int(w as i64))?;
        acc = Some(match acc {
            None => scaled,
            Some(cur) => cur.minkowski_sum(&scaled)?,
        });
    }
    match acc {
        None => Ok(Scalar::zero()),
        Some(p) => {
            let _ = d;
            p.volume_exact()
        }
    }
}

/// Exact Gaussian elimination; the node set is poised, so a vanishing pivot
/// is a programming error surfaced as `DegenerateSystem`.
fn solve_exact(mut m: Vec<Vec<Scalar>>, mut b: Vec<Scalar>) -> Result<Vec<Scalar>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .ok_or_else(|| Error::DegenerateSystem(format!("no pivot in column {col}")))?;
        m.swap(col, pivot);
        b.swap(col, pivot);
        let p = m[col][col].clone();
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = &m[r][col] / &p;
                for c in col..n {
                    m[r][c] = &m[r][c] - &(&f * &m[col][c]);
                }
                b[r] = &b[r] - &(&f * &b[col]);
            }
        }
    }
    Ok((0..n).map(|i| &b[i] / &m[i][i]).collect())
}

/// Outcome of a Brunn-Minkowski comparison
/// Vol((1-t)K + tL)^(1/d) >= (1-t) Vol(K)^(1/d) + t Vol(L)^(1/d).
#[derive(Clone, Debug)]
pub struct BmReport {
    pub lhs: Scalar,
    pub rhs: Scalar,
    pub holds: bool,
    pub strict: bool,
    /// Whether the verdict was decided by exact arithmetic.
    pub exact: bool,
}

pub fn brunn_minkowski_check(k: &Polytope, l: &Polytope, t: &Rational) -> Result<BmReport> {
    if k.dim() != l.dim() {
        return Err(Error::DimensionMismatch {
            expected: k.dim(),
            got: l.dim(),
        });
    }
    if k.is_empty() || l.is_empty() {
        return Err(Error::InvalidInput("empty body".into()));
    }
    if !t.is_positive() || t >= &Rational::one() {
        return Err(Error::InvalidInput(format!("t = {t} outside (0,1)")));
    }
    let d = k.dim();
    let ts = Scalar::Rat(t.clone());
    let one_minus = Scalar::one() - &ts;
    let mix = k
        .scale(&one_minus)?
        .minkowski_sum(&l.scale(&ts)?)?
        .volume_exact()?;
    let vk = k.volume_exact()?;
    let vl = l.volume_exact()?;
    let lhs = mix.nth_root(d as u32);
    let rhs = &one_minus * &vk.nth_root(d as u32) + &ts * &vl.nth_root(d as u32);

    // Exact route for d = 2: compare squares, then squares again, so the
    // verdict never leaves the field of the volumes.
    if d == 2 {
        let a = &mix - &(&one_minus.pow(2) * &vk) - &(&ts.pow(2) * &vl);
        let b2 = Scalar::from_int(4) * one_minus.pow(2) * ts.pow(2) * &vk * &vl;
        if a.is_exact() && b2.is_exact() {
            let (holds, strict) = if a.is_negative() {
                (false, false)
            } else {
                let diff = &a.pow(2) - &b2;
                (!diff.is_negative(), diff.is_positive())
            };
            return Ok(BmReport {
                lhs,
                rhs,
                holds,
                strict,
                exact: true,
            });
        }
    }
    let (lhs_cmp, exact) = if lhs.is_exact() && rhs.is_exact() {
        (lhs.compare(&rhs), true)
    } else {
        (lhs.compare(&rhs), false)
    };
    Ok(BmReport {
        holds: lhs_cmp != std::cmp::Ordering::Less,
        strict: lhs_cmp == std::cmp::Ordering::Greater,
        lhs,
        rhs,
        exact,
    })
}

/// Detects whether `L = c K + shift`. Returns the homothety data when the
/// candidate derived from volumes and vertex centroids checks out.
pub fn homothety_detect(k: &Polytope, l: &Polytope) -> Result<Option<(Scalar, Point)>> {
    if k.dim() != l.dim() {
        return Err(Error::DimensionMismatch {
            expected: k.dim(),
            got: l.dim(),
        });
    }
    let d = k.dim();
    let vk = k.volume_exact()?;
    let vl = l.volume_exact()?;
    if !vk.is_positive() || !vl.is_positive() {
        return Err(Error::ZeroVolume);
    }
    let ratio = &vl / &vk;
    let c = match (d, ratio.exact_sqrt()) {
        (2, Some(root)) => root,
        _ => ratio.nth_root(d as u32),
    };
    let ck = k.vertex_centroid().expect("nonempty");
    let cl = l.vertex_centroid().expect("nonempty");
    let shift: Point = cl
        .iter()
        .zip(ck.iter())
        .map(|(b, a)| b - &(&c * a))
        .collect();
    let image = k.scale(&c)?.translate(&shift)?;
    Ok(image.equals(l).then_some((c, shift)))
}
