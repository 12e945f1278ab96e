//! Value semigroups of filtrations, truncated convex bodies, and the
//! volume route to multiplicities, including the two-filtration pair
//! bodies.

use itertools::Itertools;

use crate::convex::{Point, Polytope};
use crate::error::{Error, Result};
use crate::monomial::{ExponentVector, Filtration};
use crate::numeric::Scalar;

/// Level slice of the value semigroup: the exponent vectors of the level
/// ideal, truncated to a working degree cap.
#[derive(Clone, Debug)]
pub struct SemigroupLevel {
    pub m: u64,
    pub points: Vec<ExponentVector>,
}

pub fn semigroup_level(f: &Filtration, m: u64, cap: u64) -> Result<SemigroupLevel> {
    if m == 0 {
        return Err(Error::NonPositiveInput("m = 0".into()));
    }
    let level = f.level(m)?;
    let dim = f.dim();
    let mut points = vec![];
    let mut cur = vec![0u64; dim];
    // Enumerate the simplex sum(v) <= cap.
    loop {
        let total: u64 = cur.iter().sum();
        if total <= cap {
            let v = ExponentVector(cur.clone());
            if level.contains(&v)? {
                points.push(v);
            }
        }
        // Odometer with early reset when the prefix already exceeds cap.
        let mut i = dim;
        let mut advanced = false;
        while i > 0 {
            i -= 1;
            if cur[i] < cap && cur[..=i].iter().sum::<u64>() < cap {
                cur[i] += 1;
                for c in cur.iter_mut().skip(i + 1) {
                    *c = 0;
                }
                advanced = true;
                break;
            }
            cur[i] = 0;
        }
        if !advanced {
            break;
        }
    }
    points.sort();
    Ok(SemigroupLevel { m, points })
}

/// Truncated body Delta_c: the filtration's convex body cut by the
/// half-space `sum(x) <= c`.
#[derive(Clone, Debug)]
pub struct TruncatedBody {
    pub body: Polytope,
    pub c: Scalar,
    pub m_max: u64,
    /// Exact polyhedral cut (divisorial toric data) versus a monotone
    /// under-approximation from level hulls.
    pub exact: bool,
}

/// Stabilization level: above it, every lattice shell lies in the level
/// ideal.
#[derive(Clone, Debug)]
pub struct TruncationLambda {
    pub lambda: u64,
    /// True when derived from the defining inequalities; false when only
    /// verified for the probed levels.
    pub certified: bool,
}

const LAMBDA_SCAN_CAP: u64 = 64;

pub fn truncation_lambda(f: &Filtration, m_probe: u64) -> Result<TruncationLambda> {
    if m_probe == 0 {
        return Err(Error::NonPositiveInput("m_probe = 0".into()));
    }
    if !f.level(1)?.is_m_primary() {
        return Err(Error::NotPrimary("level 1".into()));
    }
    if let Some(terms) = f.divisorial_terms() {
        // lambda >= a_j / min_i w_{j,i} for every row makes the whole shell
        // satisfy every constraint.
        let mut lambda = Scalar::zero();
        for (w, a) in terms {
            if a.is_zero() {
                continue;
            }
            let min_w = *w.weights().iter().min().expect("nonempty");
            if min_w == 0 {
                return Err(Error::NotPrimary(format!(
                    "weight row {:?} vanishes on an axis",
                    w.weights()
                )));
            }
            let bound = a / &Scalar::from_int(min_w as i64);
            if bound > lambda {
                lambda = bound;
            }
        }
        let lambda = num::traits::ToPrimitive::to_u64(&lambda.ceil_int()?)
            .ok_or_else(|| Error::InvalidInput("lambda out of range".into()))?
            .max(1);
        return Ok(TruncationLambda {
            lambda,
            certified: true,
        });
    }
    'scan: for lambda in 1..=LAMBDA_SCAN_CAP {
        for m in 1..=m_probe {
            let level = f.level(m)?;
            for v in shell_points(f.dim(), lambda * m) {
                if !level.contains(&v)? {
                    continue 'scan;
                }
            }
        }
        return Ok(TruncationLambda {
            lambda,
            certified: false,
        });
    }
    Err(Error::NoStabilization(LAMBDA_SCAN_CAP))
}

/// Lattice points with coordinate sum exactly `total`.
fn shell_points(dim: usize, total: u64) -> Vec<ExponentVector> {
    fn rec(dim: usize, total: u64, prefix: &mut Vec<u64>, out: &mut Vec<ExponentVector>) {
        if dim == 1 {
            prefix.push(total);
            out.push(ExponentVector(prefix.clone()));
            prefix.pop();
            return;
        }
        for first in 0..=total {
            prefix.push(first);
            rec(dim - 1, total - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = vec![];
    rec(dim, total, &mut Vec::new(), &mut out);
    out
}

pub fn delta_body(f: &Filtration, c: &Scalar, m_max: u64) -> Result<TruncatedBody> {
    if m_max == 0 {
        return Err(Error::NonPositiveInput("m_max = 0".into()));
    }
    let lambda = truncation_lambda(f, m_max.min(4))?;
    if c < &Scalar::from_int(lambda.lambda as i64) {
        return Err(Error::TruncationTooLow {
            c: format!("{c}"),
            lambda: format!("{}", lambda.lambda),
        });
    }
    let dim = f.dim();
    match f.exact_core() {
        Some(crate::monomial::ExactCore::DivisorialToric(terms)) => {
            let body = divisorial_cut_body(dim, &terms, c)?;
            return Ok(TruncatedBody {
                body,
                c: c.clone(),
                m_max,
                exact: true,
            });
        }
        Some(crate::monomial::ExactCore::Adic(ideal)) => {
            // The body of an adic filtration is its Newton polyhedron.
            let body = ideal.newton_polyhedron()?.cut(c)?;
            return Ok(TruncatedBody {
                body,
                c: c.clone(),
                m_max,
                exact: true,
            });
        }
        None => {}
    }
    // Hull path: scaled level staircases plus the stabilized band
    // `lambda <= sum(x) <= c`.
    let mut pts: Vec<Point> = Vec::new();
    for m in 1..=m_max {
        let level = f.level(m)?;
        let ms = Scalar::from_int(m as i64);
        let cm = c * &ms;
        for g in level.generators() {
            let total = Scalar::from_int(g.total() as i64);
            if total > cm {
                continue;
            }
            let base: Point = g
                .coords()
                .iter()
                .map(|&x| Scalar::rat(x as i64, m as i64))
                .collect();
            pts.push(base.clone());
            let slack = &(&cm - &total) / &ms;
            for i in 0..dim {
                let mut capped = base.clone();
                capped[i] = &capped[i] + &slack;
                pts.push(capped);
            }
        }
    }
    let lam = Scalar::from_int(lambda.lambda as i64);
    for i in 0..dim {
        let mut v = vec![Scalar::zero(); dim];
        v[i] = lam.clone();
        pts.push(v.clone());
        v[i] = c.clone();
        pts.push(v);
    }
    Ok(TruncatedBody {
        body: Polytope::hull(dim, pts)?,
        c: c.clone(),
        m_max,
        exact: false,
    })
}

/// Exact vertex enumeration of `{x >= 0, w_j . x >= a_j, sum(x) <= c}`.
fn divisorial_cut_body(
    dim: usize,
    terms: &[(crate::monomial::WeightValuation, Scalar)],
    c: &Scalar,
) -> Result<Polytope> {
    // Constraint rows (coeffs, rhs) meaning coeffs . x >= rhs.
    let mut rows: Vec<(Vec<Scalar>, Scalar)> = Vec::new();
    for (w, a) in terms {
        if !a.is_exact() {
            return Err(Error::InexactInput);
        }
        rows.push((
            w.weights()
                .iter()
                .map(|&x| Scalar::from_int(x as i64))
                .collect(),
            a.clone(),
        ));
    }
    for i in 0..dim {
        let mut row = vec![Scalar::zero(); dim];
        row[i] = Scalar::one();
        rows.push((row, Scalar::zero()));
    }
    rows.push((vec![-Scalar::one(); dim], -c));
    let mut verts: Vec<Point> = Vec::new();
    for subset in (0..rows.len()).combinations(dim) {
        let m: Vec<Vec<Scalar>> = subset.iter().map(|&i| rows[i].0.clone()).collect();
        let b: Vec<Scalar> = subset.iter().map(|&i| rows[i].1.clone()).collect();
        let Some(x) = crate::convex::solve_square_system(&m, &b) else {
            continue;
        };
        let ok = rows.iter().all(|(row, rhs)| {
            let lhs = row
                .iter()
                .zip(&x)
                .fold(Scalar::zero(), |acc, (a, xi)| acc + a * xi);
            !(&lhs - rhs).is_negative()
        });
        if ok {
            verts.push(x);
        }
    }
    Polytope::hull(dim, verts)
}

/// Volume route to the multiplicity: `d! (Vol(Delta_c(R)) - Vol(Delta_c))`.
#[derive(Clone, Debug)]
pub struct VolumeMultiplicity {
    pub value: Scalar,
    pub exact: bool,
    pub body: TruncatedBody,
}

pub fn multiplicity_via_volume(
    f: &Filtration,
    c: &Scalar,
    m_max: u64,
) -> Result<VolumeMultiplicity> {
    let body = delta_body(f, c, m_max)?;
    let d = f.dim();
    let d_fact: i64 = (1..=d as i64).product();
    let simplex = c.pow(d as u32) / Scalar::from_int(d_fact);
    let vol = body.body.volume_exact()?;
    let value = Scalar::from_int(d_fact) * (&simplex - &vol);
    Ok(VolumeMultiplicity {
        value,
        exact: body.exact,
        body,
    })
}

/// Scaling data for pair bodies: the half-space cut is
/// `sum(x) <= (alpha1 n1 + alpha2 n2) phi`.
#[derive(Clone, Debug)]
pub struct PairScale {
    pub alpha1: Scalar,
    pub alpha2: Scalar,
    pub phi: Scalar,
}

impl PairScale {
    pub fn cut_level(&self, n1: u64, n2: u64) -> Scalar {
        (&self.alpha1 * &Scalar::from_int(n1 as i64)
            + &self.alpha2 * &Scalar::from_int(n2 as i64))
            * &self.phi
    }
}

/// The filtration whose level m is `I(1)_{m n1} I(2)_{m n2}`.
pub fn pair_filtration(f1: &Filtration, f2: &Filtration, n1: u64, n2: u64) -> Result<Filtration> {
    match (n1, n2) {
        (0, 0) => Err(Error::InvalidInput("(n1, n2) = (0, 0)".into())),
        (_, 0) => Filtration::rescale(f1.clone(), n1),
        (0, _) => Filtration::rescale(f2.clone(), n2),
        _ => Filtration::product(
            Filtration::rescale(f1.clone(), n1)?,
            Filtration::rescale(f2.clone(), n2)?,
        ),
    }
}

pub fn pair_body(
    f1: &Filtration,
    f2: &Filtration,
    n1: u64,
    n2: u64,
    scale: &PairScale,
    m_max: u64,
) -> Result<TruncatedBody> {
    let pair = pair_filtration(f1, f2, n1, n2)?;
    let lambda = truncation_lambda(&pair, m_max.min(3))?;
    let min_alpha = if scale.alpha1 < scale.alpha2 {
        scale.alpha1.clone()
    } else {
        scale.alpha2.clone()
    };
    if &scale.phi * &min_alpha < Scalar::from_int(lambda.lambda as i64) {
        return Err(Error::TruncationTooLow {
            c: format!("phi {} * min alpha {min_alpha}", scale.phi),
            lambda: format!("{}", lambda.lambda),
        });
    }
    delta_body(&pair, &scale.cut_level(n1, n2), m_max)
}

/// Verifies `n1 Delta(1,0) + n2 Delta(0,1) inside Delta(n1,n2)` on the
/// vertices of the Minkowski sum. The right side is evaluated with a
/// quadratically larger level horizon, matching where the sum's points
/// land in the pair semigroup.
pub fn pair_superadditivity_check(
    f1: &Filtration,
    f2: &Filtration,
    n1: u64,
    n2: u64,
    scale: &PairScale,
    m_max: u64,
) -> Result<bool> {
    let b10 = pair_body(f1, f2, 1, 0, scale, m_max)?;
    let b01 = pair_body(f1, f2, 0, 1, scale, m_max)?;
    let lhs = b10
        .body
        .scale(&Scalar::from_int(n1 as i64))?
        .minkowski_sum(&b01.body.scale(&Scalar::from_int(n2 as i64))?)?;
    let rhs = pair_body(f1, f2, n1, n2, scale, (m_max * m_max).max(m_max))?;
    for v in lhs.vertices() {
        if !rhs.body.contains(v)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Outcome of the body-homothety test under a Minkowski equality:
/// `ed^(1/d) Delta(1,0)` against `e0^(1/d) Delta(0,1)`.
#[derive(Clone, Debug)]
pub struct PairHomothety {
    pub equal: bool,
    pub max_deviation: f64,
    pub exact: bool,
}

pub fn pair_homothety_check(
    f1: &Filtration,
    f2: &Filtration,
    e0: &Scalar,
    ed: &Scalar,
    phi: &Scalar,
    m_max: u64,
) -> Result<PairHomothety> {
    if !e0.is_positive() || !ed.is_positive() {
        return Err(Error::ZeroVolume);
    }
    let d = f1.dim() as u32;
    let alpha1 = e0.nth_root(d);
    let alpha2 = ed.nth_root(d);
    let scale = PairScale {
        alpha1: alpha1.clone(),
        alpha2: alpha2.clone(),
        phi: phi.clone(),
    };
    let b10 = pair_body(f1, f2, 1, 0, &scale, m_max)?;
    let b01 = pair_body(f1, f2, 0, 1, &scale, m_max)?;
    let left = b10.body.scale(&alpha2)?;
    let right = b01.body.scale(&alpha1)?;
    Ok(PairHomothety {
        equal: left.equals(&right),
        max_deviation: left.max_vertex_deviation(&right),
        exact: alpha1.is_exact() && alpha2.is_exact() && b10.exact && b01.exact,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::{MonomialIdeal, WeightValuation};
    use crate::numeric::Rational;

    fn m_ideal(gens: &[&[u64]]) -> MonomialIdeal {
        MonomialIdeal::from_coords(gens[0].len(), gens).unwrap()
    }

    fn wv(weights: &[u64]) -> WeightValuation {
        WeightValuation::new(weights.to_vec()).unwrap()
    }

    fn adic_m2() -> Filtration {
        Filtration::adic(m_ideal(&[&[2, 0], &[1, 1], &[0, 2]]))
    }

    #[test]
    fn semigroup_level_examples() {
        let m = Filtration::adic(m_ideal(&[&[1, 0], &[0, 1]]));
        let s = semigroup_level(&m, 2, 3).unwrap();
        // {(a,b): 2 <= a+b <= 3}
        assert_eq!(s.points.len(), 3 + 4);
        let d = Filtration::divisorial_toric(2, vec![(wv(&[1, 2]), Scalar::one())]).unwrap();
        let s = semigroup_level(&d, 2, 4).unwrap();
        for v in &s.points {
            assert!(v.coords()[0] + 2 * v.coords()[1] >= 2);
            assert!(v.total() <= 4);
        }
        let c = Filtration::closure(Filtration::adic(m_ideal(&[&[2, 0], &[0, 2]])), 2).unwrap();
        let s = semigroup_level(&c, 1, 2).unwrap();
        assert!(s.points.contains(&ExponentVector(vec![1, 1])));
    }

    #[test]
    fn truncation_lambda_examples() {
        assert_eq!(truncation_lambda(&adic_m2(), 3).unwrap().lambda, 2);
        let f = Filtration::adic(m_ideal(&[&[2, 0], &[0, 3]]));
        assert_eq!(truncation_lambda(&f, 1).unwrap().lambda, 4);
        let d = Filtration::divisorial_toric(2, vec![(wv(&[1, 1]), Scalar::one())]).unwrap();
        let l = truncation_lambda(&d, 3).unwrap();
        assert_eq!(l.lambda, 1);
        assert!(l.certified);
    }

    #[test]
    fn delta_body_examples() {
        // Adic (x,y)^2 at c = 4: quadrilateral of volume 6.
        let b = delta_body(&adic_m2(), &Scalar::from_int(4), 4).unwrap();
        assert_eq!(b.body.volume().unwrap(), Rational::from_int(6));
        // Divisorial sqrt(2): volume 8 - 1 = 7 exactly in Q(sqrt 2).
        let s = Filtration::divisorial_toric(2, vec![(wv(&[1, 1]), Scalar::sqrt_of(2))]).unwrap();
        let b = delta_body(&s, &Scalar::from_int(4), 4).unwrap();
        assert!(b.exact);
        assert_eq!(b.body.volume_exact().unwrap(), Scalar::from_int(7));
    }

    #[test]
    fn multiplicity_via_volume_examples() {
        let e = multiplicity_via_volume(&adic_m2(), &Scalar::from_int(4), 4).unwrap();
        assert_eq!(e.value, Scalar::from_int(4));
        let m = Filtration::adic(m_ideal(&[&[1, 0], &[0, 1]]));
        let e = multiplicity_via_volume(&m, &Scalar::from_int(2), 4).unwrap();
        assert_eq!(e.value, Scalar::one());
        let s = Filtration::divisorial_toric(2, vec![(wv(&[1, 1]), Scalar::sqrt_of(2))]).unwrap();
        let e = multiplicity_via_volume(&s, &Scalar::from_int(4), 4).unwrap();
        assert!(e.exact);
        assert_eq!(e.value, Scalar::from_int(2));
    }

    #[test]
    fn pair_body_and_superadditivity() {
        let m = Filtration::adic(m_ideal(&[&[1, 0], &[0, 1]]));
        let scale = PairScale {
            alpha1: Scalar::one(),
            alpha2: Scalar::one(),
            phi: Scalar::from_int(4),
        };
        // (1,1) on (m, m): the pair filtration is the m^2-adic one.
        let b = pair_body(&m, &m, 1, 1, &scale, 4).unwrap();
        let direct = delta_body(&adic_m2(), &Scalar::from_int(8), 4).unwrap();
        assert_eq!(
            b.body.volume().unwrap() + Rational::from_int(0),
            direct.body.volume().unwrap()
        );
        assert!(pair_superadditivity_check(&m, &m, 1, 0, &scale, 3).unwrap());
        let i = Filtration::adic(m_ideal(&[&[2, 0], &[0, 3]]));
        assert!(pair_superadditivity_check(&m, &i, 1, 1, &scale, 3).unwrap());
        // The (m, m^2) pair at (2,3) needs the larger cut phi >= lambda = 8;
        // both sides then agree with the {sum >= 8} cut.
        let wide = PairScale {
            alpha1: Scalar::one(),
            alpha2: Scalar::one(),
            phi: Scalar::from_int(8),
        };
        assert!(pair_superadditivity_check(&m, &adic_m2(), 2, 3, &wide, 3).unwrap());
        let lhs = pair_body(&m, &adic_m2(), 1, 0, &wide, 3)
            .unwrap()
            .body
            .scale(&Scalar::from_int(2))
            .unwrap()
            .minkowski_sum(
                &pair_body(&m, &adic_m2(), 0, 1, &wide, 3)
                    .unwrap()
                    .body
                    .scale(&Scalar::from_int(3))
                    .unwrap(),
            )
            .unwrap();
        let rhs = pair_body(&m, &adic_m2(), 2, 3, &wide, 9).unwrap();
        assert!(lhs.equals(&rhs.body));
    }

    #[test]
    fn pair_homothety_examples() {
        let m = Filtration::adic(m_ideal(&[&[1, 0], &[0, 1]]));
        let m2 = adic_m2();
        // e0 = 1, ed = 4: homothetic bodies.
        let r = pair_homothety_check(
            &m,
            &m2,
            &Scalar::one(),
            &Scalar::from_int(4),
            &Scalar::from_int(6),
            4,
        )
        .unwrap();
        assert!(r.equal, "deviation {}", r.max_deviation);
        // Same filtration twice: always homothetic.
        let r = pair_homothety_check(
            &m,
            &m,
            &Scalar::one(),
            &Scalar::one(),
            &Scalar::from_int(6),
            3,
        )
        .unwrap();
        assert!(r.equal);
        // m against (x^2, y^3): not homothetic.
        let i = Filtration::adic(m_ideal(&[&[2, 0], &[0, 3]]));
        let r = pair_homothety_check(
            &m,
            &i,
            &Scalar::one(),
            &Scalar::from_int(6),
            &Scalar::from_int(8),
            4,
        )
        .unwrap();
        assert!(!r.equal);
    }
}
