use num::traits::ToPrimitive;

use super::form::HomogeneousForm;
use super::limits::{mixed_multiplicities, multiplicity_limit, MixedMultiplicities};
use crate::error::{Error, Result};
use crate::monomial::{gamma, Filtration, WeightValuation};
use crate::numeric::{approximate_above, approximate_below, rational_dth_root, Rational, Scalar};
use crate::okounkov::{pair_filtration, pair_homothety_check, truncation_lambda, PairHomothety};

/// Status of one inequality instance, decided exactly when the inputs are
/// exact and within brackets otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IneqStatus {
    HoldsStrict,
    Equality,
    Violated,
}

fn status(diff: &Scalar) -> IneqStatus {
    match diff.signum() {
        s if s > 0 => IneqStatus::HoldsStrict,
        0 => IneqStatus::Equality,
        _ => IneqStatus::Violated,
    }
}

/// Verdicts for the four Minkowski inequalities of a mixed-multiplicity
/// vector, plus the reconstructed polynomial in the equality case.
#[derive(Clone, Debug)]
pub struct MinkowskiReport {
    /// e_i^2 <= e_{i-1} e_{i+1} for 1 <= i <= d-1.
    pub log_convexity: Vec<IneqStatus>,
    /// e_i e_{d-i} <= e_0 e_d.
    pub symmetric_products: Vec<IneqStatus>,
    /// e_i^d <= e_0^{d-i} e_d^i.
    pub power_bounds: Vec<IneqStatus>,
    /// e(product)^(1/d) <= e_0^(1/d) + e_d^(1/d).
    pub minkowski: IneqStatus,
    pub equality: bool,
    /// (1/d!)(e_0^(1/d) n_1 + e_d^(1/d) n_2)^d, the forced shape of the
    /// mixed polynomial under equality.
    pub equality_form: Option<HomogeneousForm>,
}

pub fn minkowski_report(e: &MixedMultiplicities) -> MinkowskiReport {
    let d = e.degree;
    let log_convexity: Vec<IneqStatus> = (1..d)
        .map(|i| status(&(&(e.e(i - 1) * e.e(i + 1)) - &e.e(i).pow(2))))
        .collect();
    let symmetric_products: Vec<IneqStatus> = (0..=d)
        .map(|i| status(&(&(e.e(0) * e.e(d)) - &(e.e(i) * e.e(d - i)))))
        .collect();
    let power_bounds: Vec<IneqStatus> = (0..=d)
        .map(|i| {
            status(
                &(&(e.e(0).pow((d - i) as u32) * e.e(d).pow(i as u32)) - &e.e(i).pow(d as u32)),
            )
        })
        .collect();
    // Equality in the Minkowski inequality is equivalent to equality in all
    // the power bounds, which keeps the verdict inside exact arithmetic.
    let minkowski = if power_bounds.contains(&IneqStatus::Violated) {
        IneqStatus::Violated
    } else if power_bounds.iter().all(|s| *s == IneqStatus::Equality) {
        IneqStatus::Equality
    } else {
        IneqStatus::HoldsStrict
    };
    let equality = minkowski == IneqStatus::Equality;
    let equality_form = equality.then(|| {
        let root0 = e.e(0).nth_root(d as u32);
        let rootd = e.e(d).nth_root(d as u32);
        let coeffs: Vec<Scalar> = (0..=d)
            .map(|i| {
                let c1: i64 = (1..=(d - i) as i64).product();
                let c2: i64 = (1..=i as i64).product();
                root0.pow((d - i) as u32) * rootd.pow(i as u32)
                    / Scalar::from_int(c1 * c2)
            })
            .collect();
        HomogeneousForm::new(d as u32, coeffs)
    });
    MinkowskiReport {
        log_convexity,
        symmetric_products,
        power_bounds,
        minkowski,
        equality,
        equality_form,
    }
}

/// Per-valuation comparison of `gamma` ratios against `(e_d/e_0)^(1/d)`.
#[derive(Clone, Debug)]
pub struct GammaRatioReport {
    pub ratio: Scalar,
    /// (valuation, gamma(F1), gamma(F2), ratio matches).
    pub rows: Vec<(WeightValuation, Scalar, Scalar, bool)>,
    pub all_match: bool,
}

pub fn gamma_ratio_check(
    f1: &Filtration,
    f2: &Filtration,
    valuations: &[WeightValuation],
    e0: &Scalar,
    ed: &Scalar,
    m_max: u64,
) -> Result<GammaRatioReport> {
    if !e0.is_positive() || !ed.is_positive() {
        return Err(Error::NonPositiveInput(format!("e0 = {e0}, ed = {ed}")));
    }
    let d = f1.dim() as u32;
    let ratio = (ed / e0).nth_root(d);
    let mut rows = vec![];
    let mut all_match = true;
    for mu in valuations {
        let g1 = gamma(f1, mu, m_max)?.value();
        let g2 = gamma(f2, mu, m_max)?.value();
        let ok = (&ratio * &g1).approx_eq(&g2);
        all_match &= ok;
        rows.push((mu.clone(), g1, g2, ok));
    }
    Ok(GammaRatioReport {
        ratio,
        rows,
        all_match,
    })
}

/// Combined verdict of the Minkowski equality test.
#[derive(Clone, Debug)]
pub struct EqualityVerdict {
    pub e: MixedMultiplicities,
    pub report: MinkowskiReport,
    pub equality: bool,
    /// `(e_d/e_0)^(1/d)`, only on equality.
    pub ratio: Option<Scalar>,
    pub homothety: Option<PairHomothety>,
    pub gamma_ratios: Option<GammaRatioReport>,
}

/// Default probe valuations for gamma comparisons in two and three
/// variables.
fn default_probes(dim: usize) -> Vec<WeightValuation> {
    match dim {
        2 => vec![
            WeightValuation(vec![1, 1]),
            WeightValuation(vec![1, 2]),
            WeightValuation(vec![2, 1]),
        ],
        3 => vec![
            WeightValuation(vec![1, 1, 1]),
            WeightValuation(vec![1, 2, 3]),
        ],
        d => vec![WeightValuation(vec![1; d])],
    }
}

pub fn minkowski_equality_test(
    f1: &Filtration,
    f2: &Filtration,
    schedule: &[u64],
) -> Result<EqualityVerdict> {
    let e = mixed_multiplicities(f1, f2, schedule)?;
    let d = e.degree;
    if !e.e(0).is_positive() || !e.e(d).is_positive() {
        return Err(Error::NonPositiveInput("pure multiplicities".into()));
    }
    let report = minkowski_report(&e);
    if !report.equality {
        return Ok(EqualityVerdict {
            equality: false,
            ratio: None,
            homothety: None,
            gamma_ratios: None,
            e,
            report,
        });
    }
    let ratio = (e.e(d) / e.e(0)).nth_root(d as u32);
    // Evidence: the scaled unit bodies coincide and the gamma ratios agree.
    let alpha_min = e
        .e(0)
        .nth_root(d as u32)
        .min_with(&e.e(d).nth_root(d as u32));
    let lambda = [
        truncation_lambda(f1, 2)?.lambda,
        truncation_lambda(f2, 2)?.lambda,
        truncation_lambda(&pair_filtration(f1, f2, 1, 1)?, 2)?.lambda,
    ]
    .into_iter()
    .max()
    .expect("nonempty");
    let phi = Scalar::Rat(
        (Scalar::from_int(lambda as i64) / alpha_min)
            .ceil_int()
            .map(Rational::from_bigint)?
            + Rational::one(),
    );
    let homothety = pair_homothety_check(f1, f2, e.e(0), e.e(d), &phi, 4)?;
    let gamma_ratios = gamma_ratio_check(f1, f2, &default_probes(d), e.e(0), e.e(d), 12)?;
    Ok(EqualityVerdict {
        equality: true,
        ratio: Some(ratio),
        homothety: Some(homothety),
        gamma_ratios: Some(gamma_ratios),
        e,
        report,
    })
}

/// Outcome of the bounded-filtration Rees test on a nested pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RigidityVerdict {
    Equal,
    MultiplicitiesDiffer,
    /// Equal multiplicities but a level mismatch: finite caps were too
    /// small, or the inputs fall outside the theorem's hypotheses.
    Falsification { level: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReesVerdict {
    EqualBoth,
    /// Equal multiplicities with closure levels differing at the reported
    /// level; raise r_max or m_max.
    EqualMultOnlyUnexpected { level: u64 },
    Distinct,
}

fn check_nested(small: &Filtration, big: &Filtration, m_max: u64) -> Result<()> {
    for n in 1..=m_max {
        let s = small.level(n)?;
        let b = big.level(n)?;
        for g in s.generators() {
            if !b.contains(g)? {
                return Err(Error::NotNested(n));
            }
        }
    }
    Ok(())
}

fn multiplicities_agree(
    a: &super::limits::LimitEstimate,
    b: &super::limits::LimitEstimate,
) -> bool {
    if a.exact && b.exact {
        return a.value == b.value;
    }
    (a.value.to_f64() - b.value.to_f64()).abs() <= (a.bracket + b.bracket).max(1e-9)
}

pub fn rees_equality_check(
    f_small: &Filtration,
    f_big: &Filtration,
    schedule: &[u64],
    m_max: u64,
    r_max: u64,
) -> Result<ReesVerdict> {
    check_nested(f_small, f_big, m_max)?;
    let e_small = multiplicity_limit(f_small, schedule)?;
    let e_big = multiplicity_limit(f_big, schedule)?;
    if !multiplicities_agree(&e_small, &e_big) {
        return Ok(ReesVerdict::Distinct);
    }
    let c_small = Filtration::closure(f_small.clone(), r_max)?;
    let c_big = Filtration::closure(f_big.clone(), r_max)?;
    for n in 1..=m_max {
        if *c_small.level(n)? != *c_big.level(n)? {
            return Ok(ReesVerdict::EqualMultOnlyUnexpected { level: n });
        }
    }
    Ok(ReesVerdict::EqualBoth)
}

/// Verdict of the rescaling search under a Minkowski equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TrskVerdict {
    /// Certified pair: closures of the a- and b-rescalings agree levelwise.
    Pair { a: u64, b: u64 },
    Strict,
    /// Equality holds but no rational rescaling was certified within the
    /// caps.
    Undecided { q_cap: u64 },
}

pub fn trsk_check(
    f1: &Filtration,
    f2: &Filtration,
    schedule: &[u64],
    n_max: u64,
    q_cap: u64,
    r_max: u64,
) -> Result<TrskVerdict> {
    let verdict = minkowski_equality_test(f1, f2, schedule)?;
    if !verdict.equality {
        return Ok(TrskVerdict::Strict);
    }
    let e = &verdict.e;
    let d = e.degree as u32;
    let mut candidates: Vec<(u64, u64)> = vec![];
    if e.e(0).is_exact() && e.e(d as usize).is_exact() {
        match rational_dth_root(e.e(d as usize), e.e(0), d) {
            Ok(Some(xi)) => {
                let (a, b) = (xi.numer().to_u64(), xi.denom().to_u64());
                if let (Some(a), Some(b)) = (a, b) {
                    candidates.push((a, b));
                }
            }
            Ok(None) => {
                // Exact irrational ratio: no rational rescaling can exist.
                return Ok(TrskVerdict::Undecided { q_cap });
            }
            Err(_) => {}
        }
    }
    if candidates.is_empty() {
        // Approximate the ratio by one-sided convergents within the cap.
        let xi = verdict.ratio.clone().expect("equality verdict");
        for alpha_pow in 1..=6u32 {
            let alpha = Rational::new(1, 10i64.pow(alpha_pow));
            for side in [approximate_below, approximate_above] {
                if let Ok((p, q)) = side(&xi, &alpha) {
                    if let (Some(p), Some(q)) = (p.to_u64(), q.to_u64()) {
                        if q <= q_cap && !candidates.contains(&(p, q)) {
                            candidates.push((p, q));
                        }
                    }
                }
            }
        }
    }
    for (a, b) in candidates {
        if a == 0 || b == 0 || a > q_cap.max(1) * 1000 {
            continue;
        }
        let ca = Filtration::closure(Filtration::rescale(f1.clone(), a)?, r_max)?;
        let cb = Filtration::closure(Filtration::rescale(f2.clone(), b)?, r_max)?;
        let mut all_equal = true;
        for n in 1..=n_max {
            if *ca.level(n)? != *cb.level(n)? {
                all_equal = false;
                break;
            }
        }
        if all_equal {
            return Ok(TrskVerdict::Pair { a, b });
        }
    }
    Ok(TrskVerdict::Undecided { q_cap })
}

/// Rigidity of divisorial filtrations: a nested pair with equal
/// multiplicity must agree levelwise.
pub fn equal_mult_rigidity_check(
    f: &Filtration,
    divisorial: &Filtration,
    schedule: &[u64],
    m_max: u64,
) -> Result<RigidityVerdict> {
    if divisorial.divisorial_terms().is_none() {
        return Err(Error::InvalidInput(
            "second filtration must be divisorial toric".into(),
        ));
    }
    check_nested(divisorial, f, m_max)?;
    let e_f = multiplicity_limit(f, schedule)?;
    let e_d = multiplicity_limit(divisorial, schedule)?;
    if !multiplicities_agree(&e_f, &e_d) {
        return Ok(RigidityVerdict::MultiplicitiesDiffer);
    }
    for n in 1..=m_max {
        if *f.level(n)? != *divisorial.level(n)? {
            return Ok(RigidityVerdict::Falsification { level: n });
        }
    }
    Ok(RigidityVerdict::Equal)
}

trait MinWith {
    fn min_with(&self, other: &Self) -> Self;
}

impl MinWith for Scalar {
    fn min_with(&self, other: &Scalar) -> Scalar {
        if self <= other {
            self.clone()
        } else {
            other.clone()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::MonomialIdeal;

    fn adic(gens: &[&[u64]]) -> Filtration {
        Filtration::adic(MonomialIdeal::from_coords(gens[0].len(), gens).unwrap())
    }

    fn mm(values: &[i64]) -> MixedMultiplicities {
        MixedMultiplicities {
            degree: values.len() - 1,
            values: values.iter().map(|&v| Scalar::from_int(v)).collect(),
            brackets: vec![0.0; values.len()],
            exact: true,
        }
    }

    #[test]
    fn report_examples() {
        let r = minkowski_report(&mm(&[1, 2, 4]));
        assert!(r.equality);
        let form = r.equality_form.unwrap();
        // (n1 + 2 n2)^2 / 2 = 1/2 n1^2 + 2 n1 n2 + 2 n2^2
        assert_eq!(form.coefficient(0), &Scalar::rat(1, 2));
        assert_eq!(form.coefficient(1), &Scalar::from_int(2));
        assert_eq!(form.coefficient(2), &Scalar::from_int(2));

        let r = minkowski_report(&mm(&[1, 2, 6]));
        assert!(!r.equality);
        assert_eq!(r.log_convexity[0], IneqStatus::HoldsStrict); // 4 < 6
        assert_eq!(r.minkowski, IneqStatus::HoldsStrict);

        let r = minkowski_report(&mm(&[1, 1, 1]));
        assert!(r.equality);
    }

    #[test]
    fn equality_test_on_adic_pairs() {
        let m = adic(&[&[1, 0], &[0, 1]]);
        let m2 = adic(&[&[2, 0], &[1, 1], &[0, 2]]);
        let v = minkowski_equality_test(&m, &m2, &[]).unwrap();
        assert!(v.equality);
        assert_eq!(v.ratio, Some(Scalar::from_int(2)));
        assert!(v.homothety.unwrap().equal);
        assert!(v.gamma_ratios.unwrap().all_match);

        let i = adic(&[&[2, 0], &[0, 3]]);
        let v = minkowski_equality_test(&m, &i, &[]).unwrap();
        assert!(!v.equality);

        let v = minkowski_equality_test(&m, &m, &[]).unwrap();
        assert!(v.equality);
        assert_eq!(v.ratio, Some(Scalar::one()));
    }

    #[test]
    fn gamma_ratio_example() {
        let m = adic(&[&[1, 0], &[0, 1]]);
        let m2 = adic(&[&[2, 0], &[1, 1], &[0, 2]]);
        let r = gamma_ratio_check(
            &m,
            &m2,
            &[WeightValuation(vec![1, 1]), WeightValuation(vec![2, 3])],
            &Scalar::one(),
            &Scalar::from_int(4),
            10,
        )
        .unwrap();
        assert!(r.all_match);
        assert_eq!(r.ratio, Scalar::from_int(2));

        let i = adic(&[&[2, 0], &[0, 3]]);
        let r = gamma_ratio_check(
            &m,
            &i,
            &[WeightValuation(vec![1, 1])],
            &Scalar::one(),
            &Scalar::from_int(6),
            10,
        )
        .unwrap();
        assert!(!r.all_match);
    }

    #[test]
    fn rees_check_examples() {
        let x2y2 = adic(&[&[2, 0], &[0, 2]]);
        let full = adic(&[&[2, 0], &[1, 1], &[0, 2]]);
        assert_eq!(
            rees_equality_check(&x2y2, &full, &[], 4, 2).unwrap(),
            ReesVerdict::EqualBoth
        );
        let m = adic(&[&[1, 0], &[0, 1]]);
        assert_eq!(
            rees_equality_check(&x2y2, &m, &[], 4, 2).unwrap(),
            ReesVerdict::Distinct
        );
        assert_eq!(
            rees_equality_check(&m, &m, &[], 4, 2).unwrap(),
            ReesVerdict::EqualBoth
        );
        assert!(matches!(
            rees_equality_check(&m, &x2y2, &[], 4, 2),
            Err(Error::NotNested(1))
        ));
    }

    #[test]
    fn trsk_examples() {
        let m = adic(&[&[1, 0], &[0, 1]]);
        let m2 = adic(&[&[2, 0], &[1, 1], &[0, 2]]);
        assert_eq!(
            trsk_check(&m, &m2, &[], 10, 50, 2).unwrap(),
            TrskVerdict::Pair { a: 2, b: 1 }
        );
        let closed = adic(&[&[2, 0], &[1, 1], &[0, 2]]);
        let open = adic(&[&[2, 0], &[0, 2]]);
        assert_eq!(
            trsk_check(&closed, &open, &[], 10, 50, 2).unwrap(),
            TrskVerdict::Pair { a: 1, b: 1 }
        );
        let i = adic(&[&[2, 0], &[0, 3]]);
        assert_eq!(
            trsk_check(&m, &i, &[], 10, 50, 2).unwrap(),
            TrskVerdict::Strict
        );
    }

    #[test]
    fn rigidity_examples() {
        let d = Filtration::divisorial_toric(
            2,
            vec![(WeightValuation(vec![1, 1]), Scalar::from_int(2))],
        )
        .unwrap();
        assert_eq!(
            equal_mult_rigidity_check(&d, &d, &[], 6).unwrap(),
            RigidityVerdict::Equal
        );
        let m2 = adic(&[&[2, 0], &[1, 1], &[0, 2]]);
        assert_eq!(
            equal_mult_rigidity_check(&m2, &d, &[], 6).unwrap(),
            RigidityVerdict::Equal
        );
        let open = adic(&[&[2, 0], &[0, 2]]);
        assert!(matches!(
            equal_mult_rigidity_check(&open, &d, &[], 6),
            Err(Error::NotNested(1))
        ));
    }
}
