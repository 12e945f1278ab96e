use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num::traits::ToPrimitive;

use super::ideal::{ExponentVector, MonomialIdeal};
use crate::error::{Error, Result};
use crate::numeric::{Rational, Scalar};

/// Monomial valuation given by a weight row; the value of a monomial is the
/// dot product and the value of an ideal is the minimum over generators.
/// Probes standing in for valuations centered at the maximal ideal have
/// every weight positive.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(transparent)]
pub struct WeightValuation(pub Vec<u64>);

impl WeightValuation {
    pub fn new(weights: Vec<u64>) -> Result<WeightValuation> {
        if weights.iter().all(|&w| w == 0) {
            return Err(Error::InvalidInput("all-zero weight row".into()));
        }
        Ok(WeightValuation(weights))
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn weights(&self) -> &[u64] {
        &self.0
    }

    pub fn value_on(&self, v: &ExponentVector) -> u64 {
        self.0
            .iter()
            .zip(v.coords())
            .map(|(w, c)| w * c)
            .sum()
    }

    pub fn value_on_ideal(&self, i: &MonomialIdeal) -> Option<u64> {
        i.generators().iter().map(|g| self.value_on(g)).min()
    }
}

/// Descending multiplicative family of monomial ideals, level-indexed.
#[derive(Clone)]
pub struct Filtration {
    inner: Arc<FiltrationData>,
}

struct FiltrationData {
    dim: usize,
    kind: Kind,
    cache: Mutex<HashMap<u64, Arc<MonomialIdeal>>>,
}

enum Kind {
    Adic(MonomialIdeal),
    DivisorialToric(Vec<(WeightValuation, Scalar)>),
    Product(Filtration, Filtration),
    Rescale(Filtration, u64),
    Truncate(Filtration, u64),
    Closure(Filtration, u64),
    Table {
        levels: Vec<MonomialIdeal>,
        tail: MonomialIdeal,
    },
}

/// Exactly-solvable normal form of a filtration.
pub enum ExactCore {
    Adic(MonomialIdeal),
    DivisorialToric(Vec<(WeightValuation, Scalar)>),
}

impl Filtration {
    fn from_kind(dim: usize, kind: Kind) -> Filtration {
        Filtration {
            inner: Arc::new(FiltrationData {
                dim,
                kind,
                cache: Mutex::new(HashMap::new()),
            }),
        }
    }

    /// Powers of a fixed ideal: level n is I^n.
    pub fn adic(ideal: MonomialIdeal) -> Filtration {
        let dim = ideal.dim();
        Filtration::from_kind(dim, Kind::Adic(ideal))
    }

    /// Divisorial filtration cut out by weight rows and coefficients:
    /// level n is `{v : w_j . v >= ceil(n a_j) for all j}`.
    pub fn divisorial_toric(
        dim: usize,
        terms: Vec<(WeightValuation, Scalar)>,
    ) -> Result<Filtration> {
        if terms.is_empty() {
            return Err(Error::InvalidInput("no terms".into()));
        }
        for (w, a) in &terms {
            if w.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: w.dim(),
                });
            }
            if a.is_negative() {
                return Err(Error::NonPositiveInput(format!("coefficient {a}")));
            }
        }
        if terms.iter().all(|(_, a)| a.is_zero()) {
            return Err(Error::InvalidInput("all coefficients are zero".into()));
        }
        Ok(Filtration::from_kind(dim, Kind::DivisorialToric(terms)))
    }

    /// Levelwise product of two filtrations.
    pub fn product(f: Filtration, g: Filtration) -> Result<Filtration> {
        if f.dim() != g.dim() {
            return Err(Error::DimensionMismatch {
                expected: f.dim(),
                got: g.dim(),
            });
        }
        let dim = f.dim();
        Ok(Filtration::from_kind(dim, Kind::Product(f, g)))
    }

    /// Rescaled filtration: level n is the original level l*n.
    pub fn rescale(f: Filtration, l: u64) -> Result<Filtration> {
        if l == 0 {
            return Err(Error::NonPositiveInput("rescale factor 0".into()));
        }
        let dim = f.dim();
        Ok(Filtration::from_kind(dim, Kind::Rescale(f, l)))
    }

    /// a-th truncation: levels above a are regenerated from the lower ones.
    pub fn truncate(f: Filtration, a: u64) -> Result<Filtration> {
        if a == 0 {
            return Err(Error::NonPositiveInput("truncation level 0".into()));
        }
        let dim = f.dim();
        Ok(Filtration::from_kind(dim, Kind::Truncate(f, a)))
    }

    /// Graded integral closure approximation: level m collects monomials
    /// with some r-th power (r <= r_max) inside the closure of level r*m.
    /// Monotone nondecreasing in r_max.
    pub fn closure(f: Filtration, r_max: u64) -> Result<Filtration> {
        if r_max == 0 {
            return Err(Error::NonPositiveInput("r_max 0".into()));
        }
        let dim = f.dim();
        Ok(Filtration::from_kind(dim, Kind::Closure(f, r_max)))
    }

    /// Explicit leading levels, continued by multiplying with a tail ideal.
    pub fn table(levels: Vec<MonomialIdeal>, tail: MonomialIdeal) -> Result<Filtration> {
        let dim = tail.dim();
        if levels.is_empty() {
            return Err(Error::InvalidInput("table needs at least one level".into()));
        }
        for l in &levels {
            if l.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: l.dim(),
                });
            }
        }
        if !levels[0].is_unit() {
            return Err(Error::InvalidInput("table level 0 must be the unit ideal".into()));
        }
        Ok(Filtration::from_kind(dim, Kind::Table { levels, tail }))
    }

    pub fn dim(&self) -> usize {
        self.inner.dim
    }

    pub fn divisorial_terms(&self) -> Option<&[(WeightValuation, Scalar)]> {
        match &self.inner.kind {
            Kind::DivisorialToric(terms) => Some(terms),
            _ => None,
        }
    }

    pub fn adic_ideal(&self) -> Option<&MonomialIdeal> {
        match &self.inner.kind {
            Kind::Adic(i) => Some(i),
            _ => None,
        }
    }

    pub fn as_product(&self) -> Option<(&Filtration, &Filtration)> {
        match &self.inner.kind {
            Kind::Product(f, g) => Some((f, g)),
            _ => None,
        }
    }

    pub fn as_rescale(&self) -> Option<(&Filtration, u64)> {
        match &self.inner.kind {
            Kind::Rescale(f, l) => Some((f, *l)),
            _ => None,
        }
    }

    pub fn as_closure(&self) -> Option<(&Filtration, u64)> {
        match &self.inner.kind {
            Kind::Closure(f, r) => Some((f, *r)),
            _ => None,
        }
    }

    pub fn as_truncate(&self) -> Option<(&Filtration, u64)> {
        match &self.inner.kind {
            Kind::Truncate(f, a) => Some((f, *a)),
            _ => None,
        }
    }

    pub fn as_table(&self) -> Option<(&[MonomialIdeal], &MonomialIdeal)> {
        match &self.inner.kind {
            Kind::Table { levels, tail } => Some((levels, tail)),
            _ => None,
        }
    }

    /// Normalizes to a core whose convex body and multiplicity are exactly
    /// computable: closures share them, rescaling scales levels, and
    /// products of adic filtrations stay adic.
    pub fn exact_core(&self) -> Option<ExactCore> {
        match &self.inner.kind {
            Kind::Adic(i) => Some(ExactCore::Adic(i.clone())),
            Kind::DivisorialToric(terms) => Some(ExactCore::DivisorialToric(terms.clone())),
            Kind::Closure(inner, _) => inner.exact_core(),
            Kind::Rescale(inner, l) => match inner.exact_core()? {
                ExactCore::Adic(i) => Some(ExactCore::Adic(i.power(*l).ok()?)),
                ExactCore::DivisorialToric(terms) => Some(ExactCore::DivisorialToric(
                    terms
                        .into_iter()
                        .map(|(w, a)| (w, a * Scalar::from_int(*l as i64)))
                        .collect(),
                )),
            },
            Kind::Product(f, g) => match (f.exact_core()?, g.exact_core()?) {
                (ExactCore::Adic(i), ExactCore::Adic(j)) => {
                    Some(ExactCore::Adic(i.product(&j).ok()?))
                }
                _ => None,
            },
            _ => None,
        }
    }

    /// Whether level sets produced by the closure kind are approximate
    /// (monotone increasing in r_max) rather than known-final.
    pub fn is_closure_approximate(&self) -> bool {
        match &self.inner.kind {
            Kind::Closure(inner, _) => !matches!(inner.inner.kind, Kind::Adic(_)),
            Kind::Product(f, g) => f.is_closure_approximate() || g.is_closure_approximate(),
            Kind::Rescale(f, _) | Kind::Truncate(f, _) => f.is_closure_approximate(),
            _ => false,
        }
    }

    /// The ideal at a level.
    pub fn level(&self, n: u64) -> Result<Arc<MonomialIdeal>> {
        if let Some(hit) = self.inner.cache.lock().expect("cache lock").get(&n) {
            return Ok(hit.clone());
        }
        let computed = Arc::new(self.compute_level(n)?);
        self.inner
            .cache
            .lock()
            .expect("cache lock")
            .insert(n, computed.clone());
        Ok(computed)
    }

    fn compute_level(&self, n: u64) -> Result<MonomialIdeal> {
        let dim = self.dim();
        if n == 0 {
            return Ok(MonomialIdeal::unit(dim));
        }
        match &self.inner.kind {
            Kind::Adic(i) => {
                // Extend from the largest cached power below n.
                let cached_below = {
                    let cache = self.inner.cache.lock().expect("cache lock");
                    (1..n)
                        .rev()
                        .find_map(|m| cache.get(&m).map(|v| (m, v.clone())))
                };
                match cached_below {
                    Some((m, base)) => {
                        let mut acc = (*base).clone();
                        for _ in m..n {
                            acc = acc.product(i)?;
                        }
                        Ok(acc)
                    }
                    None => i.power(n),
                }
            }
            Kind::DivisorialToric(terms) => divisorial_level(dim, terms, n),
            Kind::Product(f, g) => f.level(n)?.product(g.level(n)?.as_ref()),
            Kind::Rescale(f, l) => Ok((*f.level(l * n)?).clone()),
            Kind::Truncate(f, a) => {
                if n <= *a {
                    Ok((*f.level(n)?).clone())
                } else {
                    let mut acc: Option<MonomialIdeal> = None;
                    for i in 1..n {
                        let part = self.level(i)?.product(self.level(n - i)?.as_ref())?;
                        acc = Some(match acc {
                            None => part,
                            Some(cur) => cur.sum(&part)?,
                        });
                    }
                    Ok(acc.expect("n >= 2 here"))
                }
            }
            Kind::Closure(f, r_max) => {
                let mut acc: Option<MonomialIdeal> = None;
                for r in 1..=*r_max {
                    let part = closure_level_contribution(f.level(r * n)?.as_ref(), r)?;
                    acc = Some(match acc {
                        None => part,
                        Some(cur) => cur.sum(&part)?,
                    });
                }
                Ok(acc.expect("r_max >= 1"))
            }
            Kind::Table { levels, tail } => {
                let idx = n as usize;
                if idx < levels.len() {
                    Ok(levels[idx].clone())
                } else {
                    let last = levels.len() as u64 - 1;
                    levels[levels.len() - 1].product(&tail.power(n - last)?)
                }
            }
        }
    }
}

/// `{v : r v inside the Newton polyhedron of I}` for one closure exponent.
fn closure_level_contribution(ideal: &MonomialIdeal, r: u64) -> Result<MonomialIdeal> {
    ideal.closure_dilation(r)
}

/// Minimal generators of `{v : w_j . v >= c_j}` where `c_j = ceil(n a_j)`.
fn divisorial_level(
    dim: usize,
    terms: &[(WeightValuation, Scalar)],
    n: u64,
) -> Result<MonomialIdeal> {
    let mut constraints: Vec<(&[u64], u64)> = Vec::new();
    for (w, a) in terms {
        let c = (a * &Scalar::from_int(n as i64)).ceil_int()?;
        let c = c.to_u64().ok_or_else(|| {
            Error::InvalidInput(format!("negative or huge constraint bound {c}"))
        })?;
        if c > 0 {
            constraints.push((w.weights(), c));
        }
    }
    if constraints.is_empty() {
        return Ok(MonomialIdeal::unit(dim));
    }
    if dim == 2 {
        // Row scan: for each y, the least x meeting every constraint.
        let y_cap: u64 = constraints
            .iter()
            .filter(|(w, _)| w[1] > 0)
            .map(|(w, c)| c.div_ceil(w[1]))
            .max()
            .unwrap_or(0);
        let mut gens: Vec<ExponentVector> = Vec::new();
        'rows: for y in 0..=y_cap {
            let mut x_min = 0u64;
            for (w, c) in &constraints {
                let have = w[1] * y;
                if have >= *c {
                    continue;
                }
                if w[0] == 0 {
                    continue 'rows; // unsatisfiable in this row
                }
                x_min = x_min.max((c - have).div_ceil(w[0]));
            }
            gens.push(ExponentVector(vec![x_min, y]));
        }
        return MonomialIdeal::new(dim, gens);
    }
    // Box scan bounded by the per-axis requirement of each constraint.
    let caps: Vec<u64> = (0..dim)
        .map(|i| {
            constraints
                .iter()
                .filter(|(w, _)| w[i] > 0)
                .map(|(w, c)| c.div_ceil(w[i]))
                .max()
                .unwrap_or(0)
        })
        .collect();
    let satisfies = |v: &ExponentVector| {
        constraints.iter().all(|(w, c)| {
            w.iter()
                .zip(v.coords())
                .map(|(a, b)| a * b)
                .sum::<u64>()
                >= *c
        })
    };
    let mut minimal: Vec<ExponentVector> = Vec::new();
    for v in super::ideal::box_points_graded_pub(&caps) {
        if minimal.iter().any(|g| g.leq(&v)) {
            continue;
        }
        if satisfies(&v) {
            minimal.push(v);
        }
    }
    MonomialIdeal::new(dim, minimal)
}

/// Minimum valuation value on a level: `tau_{mu,m} = mu(I_m)`.
pub fn tau(f: &Filtration, mu: &WeightValuation, m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::NonPositiveInput("m = 0".into()));
    }
    if mu.dim() != f.dim() {
        return Err(Error::DimensionMismatch {
            expected: f.dim(),
            got: mu.dim(),
        });
    }
    let level = f.level(m)?;
    mu.value_on_ideal(&level)
        .ok_or_else(|| Error::InvalidInput("zero ideal has no valuation".into()))
}

/// Estimate (or exact value) of `gamma_mu = inf_m tau/m`.
#[derive(Clone, Debug)]
pub struct GammaEstimate {
    /// Certified upper bound: the smallest sampled tau(m)/m.
    pub upper: Rational,
    /// Level attaining the bound.
    pub at_m: u64,
    /// tau(m_max)/m_max, indicating how settled the sequence is.
    pub last: Rational,
    /// Exact limit when the filtration kind admits one.
    pub exact: Option<Scalar>,
}

impl GammaEstimate {
    /// The reported value: exact when available, otherwise a float carrying
    /// the observed spread as its tolerance.
    pub fn value(&self) -> Scalar {
        match &self.exact {
            Some(v) => v.clone(),
            None => {
                let spread = (self.last.to_f64() - self.upper.to_f64()).abs();
                Scalar::float_with_tol(
                    self.upper.to_f64(),
                    spread.max(crate::numeric::DEFAULT_FLOAT_TOL),
                )
            }
        }
    }
}

/// `gamma_mu(F) = inf_m tau(m)/m`, scanned to m_max. For divisorial toric
/// filtrations the limit is the exact minimum of `mu . x` over the defining
/// polyhedron, computed by vertex enumeration.
pub fn gamma(f: &Filtration, mu: &WeightValuation, m_max: u64) -> Result<GammaEstimate> {
    if m_max == 0 {
        return Err(Error::NonPositiveInput("m_max = 0".into()));
    }
    let mut best: Option<(Rational, u64)> = None;
    let mut last = Rational::zero();
    for m in 1..=m_max {
        let t = Rational::from_int(tau(f, mu, m)? as i64) / Rational::from_int(m as i64);
        if best.as_ref().map_or(true, |(b, _)| t < *b) {
            best = Some((t.clone(), m));
        }
        last = t;
    }
    let (upper, at_m) = best.expect("m_max >= 1");
    let exact = match f.divisorial_terms() {
        Some(terms) => divisorial_gamma_exact(f.dim(), terms, mu),
        None => None,
    };
    Ok(GammaEstimate {
        upper,
        at_m,
        last,
        exact,
    })
}

/// Exact `min { mu . x : x >= 0, w_j . x >= a_j }` over the vertices of the
/// defining polyhedron.
fn divisorial_gamma_exact(
    dim: usize,
    terms: &[(WeightValuation, Scalar)],
    mu: &WeightValuation,
) -> Option<Scalar> {
    // Rows: w_j . x >= a_j and x_i >= 0.
    let mut rows: Vec<(Vec<Scalar>, Scalar)> = terms
        .iter()
        .map(|(w, a)| {
            (
                w.weights()
                    .iter()
                    .map(|&c| Scalar::from_int(c as i64))
                    .collect(),
                a.clone(),
            )
        })
        .collect();
    for i in 0..dim {
        let mut row = vec![Scalar::zero(); dim];
        row[i] = Scalar::one();
        rows.push((row, Scalar::zero()));
    }
    if rows.iter().any(|(_, b)| !b.is_exact()) {
        return None;
    }
    use itertools::Itertools;
    let mut best: Option<Scalar> = None;
    for subset in (0..rows.len()).combinations(dim) {
        let m: Vec<Vec<Scalar>> = subset.iter().map(|&i| rows[i].0.clone()).collect();
        let b: Vec<Scalar> = subset.iter().map(|&i| rows[i].1.clone()).collect();
        let Some(x) = crate::convex::solve_square_system(&m, &b) else {
            continue;
        };
        let feasible = rows.iter().all(|(row, bound)| {
            let lhs = row
                .iter()
                .zip(&x)
                .fold(Scalar::zero(), |acc, (c, xi)| acc + c * xi);
            !(&lhs - bound).is_negative()
        });
        if !feasible {
            continue;
        }
        let value = mu
            .weights()
            .iter()
            .zip(&x)
            .fold(Scalar::zero(), |acc, (&c, xi)| {
                acc + Scalar::from_int(c as i64) * xi
            });
        best = Some(match best {
            None => value,
            Some(cur) => {
                if value < cur {
                    value
                } else {
                    cur
                }
            }
        });
    }
    best
}

/// Value of `w_F(f) = max { m : f in I_m }` for a monomial exponent.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WInvariant {
    Finite(u64),
    Infinite,
}

pub fn w_invariant(f: &Filtration, v: &ExponentVector, n_cap: u64) -> Result<WInvariant> {
    if v.dim() != f.dim() {
        return Err(Error::DimensionMismatch {
            expected: f.dim(),
            got: v.dim(),
        });
    }
    if v.is_zero() {
        return Ok(WInvariant::Infinite);
    }
    // Divisorial levels admit a closed form.
    if let Some(terms) = f.divisorial_terms() {
        if let Some(w) = divisorial_w_exact(terms, v) {
            return if w > n_cap {
                Err(Error::CapReached(n_cap))
            } else {
                Ok(WInvariant::Finite(w))
            };
        }
    }
    if f.level(n_cap)?.contains(v)? {
        return Err(Error::CapReached(n_cap));
    }
    // Membership is monotone along the descending chain.
    let (mut lo, mut hi) = (0u64, n_cap); // lo in, hi out
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if f.level(mid)?.contains(v)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(WInvariant::Finite(lo))
}

/// `w(v) = floor(min_j (w_j . v) / a_j)` when every coefficient is exact.
fn divisorial_w_exact(terms: &[(WeightValuation, Scalar)], v: &ExponentVector) -> Option<u64> {
    let mut best: Option<Scalar> = None;
    for (w, a) in terms {
        if a.is_zero() {
            continue;
        }
        if !a.is_exact() {
            return None;
        }
        let ratio = Scalar::from_int(w.value_on(v) as i64) / a.clone();
        best = Some(match best {
            None => ratio,
            Some(cur) => {
                if ratio < cur {
                    ratio
                } else {
                    cur
                }
            }
        });
    }
    best.and_then(|b| b.floor_int().ok())
        .and_then(|b| b.to_u64())
}

/// Estimate of the asymptotic value `lim w(k v)/k`.
#[derive(Clone, Debug)]
pub struct AsymptoticW {
    pub value: Scalar,
    pub exact: bool,
    /// For rational divisorial filtrations: whether the eventual-linearity
    /// identity `w(n d v) = n w(d v)` held at the sampled multiples.
    pub linearity_verified: Option<bool>,
}

pub fn asymptotic_w(f: &Filtration, v: &ExponentVector, k_max: u64) -> Result<AsymptoticW> {
    if v.is_zero() {
        return Err(Error::NonPositiveInput("v = 0".into()));
    }
    if k_max == 0 {
        return Err(Error::NonPositiveInput("k_max = 0".into()));
    }
    if let Some(terms) = f.divisorial_terms() {
        // Exact limit: min_j (w_j . v)/a_j, staying in the coefficient field.
        let mut best: Option<Scalar> = None;
        let mut all_exact = true;
        for (w, a) in terms {
            if a.is_zero() {
                continue;
            }
            all_exact &= a.is_exact();
            let ratio = Scalar::from_int(w.value_on(v) as i64) / a.clone();
            best = Some(match best {
                None => ratio,
                Some(cur) => {
                    if ratio < cur {
                        ratio
                    } else {
                        cur
                    }
                }
            });
        }
        let value = best.expect("validated nonzero coefficients");
        let linearity = value.as_rational().map(|t| {
            let dd: u64 = t.denom().to_u64().unwrap_or(1);
            (1..=3u64).all(|n| {
                let lhs = divisorial_w_exact(terms, &v.scale(n * dd));
                let rhs = divisorial_w_exact(terms, &v.scale(dd)).map(|w| n * w);
                lhs == rhs
            })
        });
        return Ok(AsymptoticW {
            value,
            exact: all_exact,
            linearity_verified: linearity,
        });
    }
    // Superadditivity makes max_k w(kv)/k a certified increasing estimate.
    let mut best = Rational::zero();
    let mut last = Rational::zero();
    let cap = 64 * k_max * (v.total() + 1);
    for k in 1..=k_max {
        let w = match w_invariant(f, &v.scale(k), cap)? {
            WInvariant::Finite(w) => w,
            WInvariant::Infinite => {
                return Err(Error::InvalidInput("w infinite for nonzero v".into()))
            }
        };
        let est = Rational::from_int(w as i64) / Rational::from_int(k as i64);
        if est > best {
            best = est.clone();
        }
        last = est;
    }
    let spread = (best.to_f64() - last.to_f64()).abs();
    Ok(AsymptoticW {
        value: Scalar::float_with_tol(
            best.to_f64(),
            spread.max(crate::numeric::DEFAULT_FLOAT_TOL),
        ),
        exact: false,
        linearity_verified: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m_ideal(gens: &[&[u64]]) -> MonomialIdeal {
        MonomialIdeal::from_coords(gens[0].len(), gens).unwrap()
    }

    fn ev(coords: &[u64]) -> ExponentVector {
        ExponentVector(coords.to_vec())
    }

    fn wv(weights: &[u64]) -> WeightValuation {
        WeightValuation::new(weights.to_vec()).unwrap()
    }

    #[test]
    fn adic_levels() {
        let f = Filtration::adic(m_ideal(&[&[2, 0], &[1, 1], &[0, 2]]));
        assert!(f.level(0).unwrap().is_unit());
        let l3 = f.level(3).unwrap();
        // (x,y)^6
        assert_eq!(l3.generators().len(), 7);
        assert!(l3.contains(&ev(&[6, 0])).unwrap());
        assert!(!l3.contains(&ev(&[5, 0])).unwrap());
    }

    #[test]
    fn divisorial_toric_levels() {
        // Single weight (1,2) with coefficient 1: level 3 = (x^3, xy, y^2).
        let f = Filtration::divisorial_toric(2, vec![(wv(&[1, 2]), Scalar::one())]).unwrap();
        let l3 = f.level(3).unwrap();
        assert_eq!(*l3, m_ideal(&[&[3, 0], &[1, 1], &[0, 2]]));
        // Irrational coefficient sqrt(2): level 2 cuts at ceil(2 sqrt 2) = 3.
        let g =
            Filtration::divisorial_toric(2, vec![(wv(&[1, 1]), Scalar::sqrt_of(2))]).unwrap();
        let l2 = g.level(2).unwrap();
        assert_eq!(*l2, m_ideal(&[&[3, 0], &[2, 1], &[1, 2], &[0, 3]]));
    }

    #[test]
    fn rescale_truncate_product_levels() {
        let m = Filtration::adic(m_ideal(&[&[1, 0], &[0, 1]]));
        let r = Filtration::rescale(m.clone(), 2).unwrap();
        assert_eq!(*r.level(3).unwrap(), *m.level(6).unwrap());
        let p = Filtration::product(m.clone(), r.clone()).unwrap();
        assert_eq!(*p.level(2).unwrap(), *m.level(6).unwrap());
        // Truncation at 1 of the rescaled filtration regenerates level n as
        // (level 1)^n.
        let t = Filtration::truncate(r.clone(), 1).unwrap();
        assert_eq!(*t.level(3).unwrap(), *m.level(6).unwrap());
    }

    #[test]
    fn truncate_is_coarser_beyond_cut() {
        // F with levels m^(n^2)-ish would be hard; use divisorial toric with
        // coefficient 2: level n = {v1+v2 >= 2n}. Truncated at 1, level n
        // becomes (level 1)^n = {v1+v2 >= 2n} as well here, so use a table
        // filtration where truncation genuinely loses elements.
        let unit = MonomialIdeal::unit(2);
        let m2 = m_ideal(&[&[2, 0], &[1, 1], &[0, 2]]);
        let m5 = m_ideal(&[&[5, 0], &[4, 1], &[3, 2], &[2, 3], &[1, 4], &[0, 5]]);
        let m = m_ideal(&[&[1, 0], &[0, 1]]);
        // levels: R, m^2, m^5 then tail m: level 2 is m^5.
        let f = Filtration::table(vec![unit, m2, m5], m).unwrap();
        let t = Filtration::truncate(f.clone(), 1).unwrap();
        // Truncated level 2 = (m^2)^2 = m^4, strictly larger than m^5.
        assert!(t.level(2).unwrap().contains(&ev(&[4, 0])).unwrap());
        assert!(!f.level(2).unwrap().contains(&ev(&[4, 0])).unwrap());
    }

    #[test]
    fn closure_of_adic_is_levelwise_integral_closure() {
        let i = m_ideal(&[&[2, 0], &[0, 2]]);
        let f = Filtration::closure(Filtration::adic(i.clone()), 2).unwrap();
        for m in 1..=3u64 {
            let expect = i.power(m).unwrap().integral_closure().unwrap();
            assert_eq!(*f.level(m).unwrap(), expect, "level {m}");
        }
        assert!(f.level(1).unwrap().contains(&ev(&[1, 1])).unwrap());
    }

    #[test]
    fn tau_examples() {
        let f = Filtration::adic(m_ideal(&[&[2, 0], &[1, 1], &[0, 2]]));
        assert_eq!(tau(&f, &wv(&[1, 1]), 5).unwrap(), 10);
        let g = Filtration::adic(m_ideal(&[&[1, 0], &[0, 1]]));
        assert_eq!(tau(&g, &wv(&[2, 3]), 4).unwrap(), 8);
        let d = Filtration::divisorial_toric(2, vec![(wv(&[1, 2]), Scalar::one())]).unwrap();
        assert_eq!(tau(&d, &wv(&[1, 2]), 7).unwrap(), 7);
    }

    #[test]
    fn gamma_examples() {
        let f = Filtration::adic(m_ideal(&[&[2, 0], &[1, 1], &[0, 2]]));
        let g = gamma(&f, &wv(&[1, 1]), 8).unwrap();
        assert_eq!(g.upper, Rational::from_int(2));
        assert_eq!(g.last, Rational::from_int(2));

        let d = Filtration::divisorial_toric(2, vec![(wv(&[1, 2]), Scalar::one())]).unwrap();
        let g = gamma(&d, &wv(&[1, 2]), 8).unwrap();
        assert_eq!(g.exact, Some(Scalar::one()));

        // Irrational coefficient: tau/m = ceil(m sqrt2)/m approaches sqrt2
        // from above; the exact value is sqrt2.
        let s = Filtration::divisorial_toric(2, vec![(wv(&[1, 1]), Scalar::sqrt_of(2))]).unwrap();
        let g = gamma(&s, &wv(&[1, 1]), 12).unwrap();
        assert_eq!(g.exact, Some(Scalar::sqrt_of(2)));
        assert!(Scalar::Rat(g.upper.clone()) > Scalar::sqrt_of(2));
    }

    #[test]
    fn w_invariant_examples() {
        let m = Filtration::adic(m_ideal(&[&[1, 0], &[0, 1]]));
        assert_eq!(
            w_invariant(&m, &ev(&[2, 1]), 100).unwrap(),
            WInvariant::Finite(3)
        );
        let d = Filtration::divisorial_toric(2, vec![(wv(&[1, 2]), Scalar::one())]).unwrap();
        assert_eq!(
            w_invariant(&d, &ev(&[1, 3]), 100).unwrap(),
            WInvariant::Finite(7)
        );
        // (x^2,y^3): (3,3) is in level 2 but not level 3.
        let f = Filtration::adic(m_ideal(&[&[2, 0], &[0, 3]]));
        assert_eq!(
            w_invariant(&f, &ev(&[3, 3]), 100).unwrap(),
            WInvariant::Finite(2)
        );
        assert_eq!(
            w_invariant(&f, &ev(&[0, 0]), 100).unwrap(),
            WInvariant::Infinite
        );
        assert!(matches!(
            w_invariant(&m, &ev(&[200, 0]), 100),
            Err(Error::CapReached(100))
        ));
    }

    #[test]
    fn asymptotic_w_examples() {
        let m = Filtration::adic(m_ideal(&[&[1, 0], &[0, 1]]));
        let a = asymptotic_w(&m, &ev(&[1, 0]), 6).unwrap();
        assert!(a.value.approx_eq(&Scalar::one()));

        let d = Filtration::divisorial_toric(
            2,
            vec![
                (WeightValuation(vec![1, 0]), Scalar::one()),
                (WeightValuation(vec![0, 1]), Scalar::from_int(2)),
            ],
        )
        .unwrap();
        let a = asymptotic_w(&d, &ev(&[1, 1]), 6).unwrap();
        assert_eq!(a.value, Scalar::rat(1, 2));
        assert_eq!(a.linearity_verified, Some(true));

        let s = Filtration::divisorial_toric(2, vec![(wv(&[1, 1]), Scalar::sqrt_of(2))]).unwrap();
        let a = asymptotic_w(&s, &ev(&[1, 1]), 6).unwrap();
        assert_eq!(a.value, Scalar::sqrt_of(2));
    }

    #[test]
    fn multiplicativity_sampled() {
        let cases = vec![
            Filtration::adic(m_ideal(&[&[2, 0], &[0, 3]])),
            Filtration::divisorial_toric(2, vec![(wv(&[1, 2]), Scalar::rat(3, 2))]).unwrap(),
            Filtration::closure(Filtration::adic(m_ideal(&[&[2, 0], &[0, 2]])), 2).unwrap(),
        ];
        for f in cases {
            for i in 1..=3u64 {
                for j in 1..=3u64 {
                    let prod = f.level(i).unwrap().product(&f.level(j).unwrap()).unwrap();
                    let target = f.level(i + j).unwrap();
                    for g in prod.generators() {
                        assert!(target.contains(g).unwrap(), "I_{i} I_{j} not inside I_{}", i + j);
                    }
                }
            }
        }
    }
}
