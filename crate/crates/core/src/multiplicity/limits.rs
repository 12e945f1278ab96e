
use crate::error::{Error, Result};
use crate::monomial::{Filtration, MonomialIdeal};
use crate::numeric::{Rational, Scalar};
use crate::okounkov;

/// Level schedule used by the limit estimators, by ambient dimension.
pub fn default_schedule(dim: usize) -> Vec<u64> {
    match dim {
        0 | 1 | 2 => vec![25, 50, 100, 200, 400],
        3 => vec![10, 20, 40, 80],
        _ => vec![4, 8, 16],
    }
}

/// A limit value together with the spread of its last two Richardson
/// extrapolants; exact values carry a zero bracket.
#[derive(Clone, Debug)]
pub struct LimitEstimate {
    pub value: Scalar,
    pub bracket: f64,
    pub exact: bool,
    /// Raw samples (m, l(R/I_m)/m^d) backing a non-exact estimate.
    pub samples: Vec<(u64, Rational)>,
}

impl LimitEstimate {
    fn exact(value: Scalar) -> Self {
        LimitEstimate {
            value,
            bracket: 0.0,
            exact: true,
            samples: vec![],
        }
    }

    pub fn agrees_with(&self, other: &Scalar) -> bool {
        (self.value.to_f64() - other.to_f64()).abs() <= self.bracket.max(1e-9)
    }
}

/// Exact multiplicity of an adic filtration: d! times the covolume of the
/// Newton polyhedron.
fn adic_multiplicity(i: &MonomialIdeal) -> Result<Scalar> {
    let d = i.dim();
    let np = i.newton_polyhedron()?;
    let c_pure = (0..d)
        .map(|axis| i.pure_power(axis).expect("m-primary"))
        .max()
        .unwrap_or(1);
    let c_vert = np
        .vertices()
        .iter()
        .map(|v| v.total())
        .max()
        .unwrap_or(1);
    let c = Scalar::from_int(c_pure.max(c_vert) as i64);
    let cut = np.cut(&c)?;
    let d_fact: i64 = (1..=d as i64).product();
    Ok(Scalar::from_int(d_fact)
        * (&(c.pow(d as u32) / Scalar::from_int(d_fact)) - &cut.volume_exact()?))
}

fn exact_multiplicity(f: &Filtration) -> Result<Option<Scalar>> {
    match f.exact_core() {
        Some(crate::monomial::ExactCore::Adic(i)) => adic_multiplicity(&i).map(Some),
        Some(crate::monomial::ExactCore::DivisorialToric(terms)) => {
            let g = Filtration::divisorial_toric(f.dim(), terms)?;
            let lambda = okounkov::truncation_lambda(&g, 2)?;
            let c = Scalar::from_int(lambda.lambda as i64);
            Ok(Some(okounkov::multiplicity_via_volume(&g, &c, 2)?.value))
        }
        None => Ok(None),
    }
}

/// Richardson extrapolation of `f(m) = a + b/m + o(1/m)` samples.
fn richardson(samples: &[(u64, Rational)]) -> (Rational, f64) {
    assert!(!samples.is_empty());
    if samples.len() == 1 {
        return (samples[0].1.clone(), samples[0].1.to_f64().abs());
    }
    let mut extrapolants = vec![];
    for w in samples.windows(2) {
        let (m1, f1) = (&w[0].0, &w[0].1);
        let (m2, f2) = (&w[1].0, &w[1].1);
        let num = Rational::from_int(*m2 as i64) * f2.clone()
            - Rational::from_int(*m1 as i64) * f1.clone();
        let den = Rational::from_int((*m2 - *m1) as i64);
        extrapolants.push(num / den);
    }
    let last = extrapolants.last().expect("nonempty").clone();
    let bracket = if extrapolants.len() >= 2 {
        (last.to_f64() - extrapolants[extrapolants.len() - 2].to_f64()).abs()
    } else {
        (last.to_f64() - samples.last().expect("nonempty").1.to_f64()).abs()
    };
    (last, bracket)
}

/// Multiplicity `e(F) = d! lim l(R/I_m)/m^d`, exact when the filtration
/// reduces to a closed form and a bracketed estimate otherwise.
pub fn multiplicity_limit(f: &Filtration, schedule: &[u64]) -> Result<LimitEstimate> {
    if let Some(v) = exact_multiplicity(f)? {
        return Ok(LimitEstimate::exact(v));
    }
    estimate_scaled_colength(f, schedule, true)
}

/// The Richardson estimator alone, bypassing closed forms; the
/// independent cross-check of the volume route.
pub fn multiplicity_limit_estimated(f: &Filtration, schedule: &[u64]) -> Result<LimitEstimate> {
    estimate_scaled_colength(f, schedule, true)
}

fn estimate_scaled_colength(
    f: &Filtration,
    schedule: &[u64],
    times_d_factorial: bool,
) -> Result<LimitEstimate> {
    if schedule.is_empty() || schedule.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidInput(
            "schedule must be strictly increasing and nonempty".into(),
        ));
    }
    let d = f.dim();
    let mut samples = vec![];
    for &m in schedule {
        let len = f.level(m)?.colength()?;
        let denom = Rational::from_int(m as i64).pow(d as u32);
        samples.push((m, Rational::from_int(len as i64) / denom));
    }
    let (value, bracket) = richardson(&samples);
    let factor: i64 = if times_d_factorial {
        (1..=d as i64).product()
    } else {
        1
    };
    let value = Rational::from_int(factor) * value;
    let bracket = bracket * factor as f64;
    Ok(LimitEstimate {
        value: Scalar::float_with_tol(value.to_f64(), bracket.max(f64::EPSILON)),
        bracket,
        exact: false,
        samples,
    })
}

/// The mixed-multiplicity generating value
/// `P(n) = lim l(R/I(1)_{m n_1} ... I(r)_{m n_r})/m^d`.
pub fn mixed_function(fs: &[Filtration], n: &[u64], schedule: &[u64]) -> Result<LimitEstimate> {
    if fs.is_empty() || fs.len() != n.len() {
        return Err(Error::InvalidInput(
            "need matching filtration and weight lists".into(),
        ));
    }
    let d = fs[0].dim();
    let d_fact: i64 = (1..=d as i64).product();
    if n.iter().all(|&k| k == 0) {
        return Err(Error::InvalidInput("all weights zero".into()));
    }
    // Assemble the product-of-rescales filtration.
    let mut combined: Option<Filtration> = None;
    for (f, &k) in fs.iter().zip(n.iter()) {
        if k == 0 {
            continue;
        }
        let scaled = Filtration::rescale(f.clone(), k)?;
        combined = Some(match combined {
            None => scaled,
            Some(cur) => Filtration::product(cur, scaled)?,
        });
    }
    let combined = combined.expect("some weight positive");
    if let Some(v) = exact_multiplicity(&combined)? {
        return Ok(LimitEstimate::exact(v / Scalar::from_int(d_fact)));
    }
    estimate_scaled_colength(&combined, schedule, false)
}

/// Mixed multiplicities e_0..e_d of a pair of filtrations, with error
/// brackets propagated through the exact node system.
#[derive(Clone, Debug)]
pub struct MixedMultiplicities {
    pub degree: usize,
    pub values: Vec<Scalar>,
    pub brackets: Vec<f64>,
    pub exact: bool,
}

impl MixedMultiplicities {
    pub fn e(&self, i: usize) -> &Scalar {
        &self.values[i]
    }

    /// Mirror image: the vector for the swapped pair.
    pub fn swapped(&self) -> MixedMultiplicities {
        let mut values = self.values.clone();
        values.reverse();
        let mut brackets = self.brackets.clone();
        brackets.reverse();
        MixedMultiplicities {
            degree: self.degree,
            values,
            brackets,
            exact: self.exact,
        }
    }
}

const MIXED_NODES: [(u64, u64); 7] = [(1, 0), (0, 1), (1, 1), (1, 2), (2, 1), (1, 3), (3, 1)];

pub fn mixed_multiplicities(
    f1: &Filtration,
    f2: &Filtration,
    schedule: &[u64],
) -> Result<MixedMultiplicities> {
    mixed_multiplicities_par(f1, f2, schedule, 1)
}

/// Node evaluations are independent; `threads` caps the worker count. The
/// result is assembled by node index, so it does not depend on scheduling.
pub fn mixed_multiplicities_par(
    f1: &Filtration,
    f2: &Filtration,
    schedule: &[u64],
    threads: usize,
) -> Result<MixedMultiplicities> {
    let d = f1.dim();
    if f2.dim() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: f2.dim(),
        });
    }
    let nodes = &MIXED_NODES[..=d];
    let pair = [f1.clone(), f2.clone()];
    let estimates: Vec<Result<LimitEstimate>> = if threads <= 1 {
        nodes
            .iter()
            .map(|&(n1, n2)| mixed_function(&pair, &[n1, n2], schedule))
            .collect()
    } else {
        let mut slots: Vec<Option<Result<LimitEstimate>>> = (0..nodes.len()).map(|_| None).collect();
        let next = std::sync::atomic::AtomicUsize::new(0);
        let slot_refs: Vec<std::sync::Mutex<&mut Option<Result<LimitEstimate>>>> =
            slots.iter_mut().map(std::sync::Mutex::new).collect();
        std::thread::scope(|scope| {
            for _ in 0..threads.min(nodes.len()) {
                scope.spawn(|| loop {
                    let k = next.fetch_add(1, std::sync::atomic::Ordering::SeqCst);
                    if k >= nodes.len() {
                        break;
                    }
                    let (n1, n2) = nodes[k];
                    let result = mixed_function(&pair, &[n1, n2], schedule);
                    **slot_refs[k].lock().expect("slot lock") = Some(result);
                });
            }
        });
        slots.into_iter().map(|s| s.expect("all nodes run")).collect()
    };
    let mut rhs = vec![];
    let mut brackets = vec![];
    let mut exact = true;
    for (est, &(n1, n2)) in estimates.into_iter().zip(nodes.iter()) {
        let est = est?;
        exact &= est.exact;
        if !est.exact && est.bracket > 0.5 * est.value.to_f64().abs().max(1.0) {
            return Err(Error::IllConditioned(format!("({n1}, {n2})")));
        }
        rhs.push(est.value.clone());
        brackets.push(est.bracket);
    }
    // P(n1, n2) = sum_i e_i / ((d-i)! i!) n1^(d-i) n2^i.
    let mut matrix = vec![];
    for &(n1, n2) in nodes {
        let row: Vec<Rational> = (0..=d)
            .map(|i| {
                let c1: i64 = (1..=(d - i) as i64).product();
                let c2: i64 = (1..=i as i64).product();
                Rational::from_int((n1 as i64).pow((d - i) as u32))
                    * Rational::from_int((n2 as i64).pow(i as u32))
                    / Rational::from_int(c1 * c2)
            })
            .collect();
        matrix.push(row);
    }
    let inverse = invert_rational(&matrix)
        .ok_or_else(|| Error::DegenerateSystem("mixed node system".into()))?;
    let values: Vec<Scalar> = (0..=d)
        .map(|i| {
            inverse[i]
                .iter()
                .zip(rhs.iter())
                .fold(Scalar::zero(), |acc, (c, v)| {
                    acc + Scalar::Rat(c.clone()) * v
                })
        })
        .collect();
    let out_brackets: Vec<f64> = (0..=d)
        .map(|i| {
            inverse[i]
                .iter()
                .zip(brackets.iter())
                .map(|(c, b)| c.to_f64().abs() * b)
                .sum()
        })
        .collect();
    Ok(MixedMultiplicities {
        degree: d,
        values,
        brackets: out_brackets,
        exact,
    })
}

fn invert_rational(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for c in 0..n {
            a[col][c] = &a[col][c] / &p;
            inv[col][c] = &inv[col][c] / &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..n {
                    a[r][c] = &a[r][c] - &(&f * &a[col][c]);
                    inv[r][c] = &inv[r][c] - &(&f * &inv[col][c]);
                }
            }
        }
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m_ideal(gens: &[&[u64]]) -> MonomialIdeal {
        MonomialIdeal::from_coords(gens[0].len(), gens).unwrap()
    }

    fn adic(gens: &[&[u64]]) -> Filtration {
        Filtration::adic(m_ideal(gens))
    }

    #[test]
    fn exact_adic_multiplicities() {
        // l(R/(x,y)^(2m)) = m(2m+1): limit of l/m^2 is 4/2, e = 4.
        let e = multiplicity_limit(&adic(&[&[2, 0], &[1, 1], &[0, 2]]), &[]).unwrap();
        assert!(e.exact);
        assert_eq!(e.value, Scalar::from_int(4));
        let e = multiplicity_limit(&adic(&[&[2, 0], &[0, 3]]), &[]).unwrap();
        assert_eq!(e.value, Scalar::from_int(6));
        let e = multiplicity_limit(&adic(&[&[1, 0], &[0, 1]]), &[]).unwrap();
        assert_eq!(e.value, Scalar::one());
    }

    #[test]
    fn estimator_brackets_adic() {
        // Force the estimator by wrapping in a table filtration.
        let i = m_ideal(&[&[2, 0], &[1, 1], &[0, 2]]);
        let f = Filtration::table(vec![MonomialIdeal::unit(2)], i).unwrap();
        let e = multiplicity_limit(&f, &default_schedule(2)).unwrap();
        assert!(!e.exact);
        assert!((e.value.to_f64() - 4.0).abs() < 0.02 * 4.0, "{e:?}");
    }

    #[test]
    fn irrational_divisorial_multiplicity() {
        // I_n = m^(ceil(n sqrt 2)): e = 2 exactly.
        let f = Filtration::divisorial_toric(
            2,
            vec![(
                crate::monomial::WeightValuation::new(vec![1, 1]).unwrap(),
                Scalar::sqrt_of(2),
            )],
        )
        .unwrap();
        let e = multiplicity_limit(&f, &[]).unwrap();
        assert!(e.exact);
        assert_eq!(e.value, Scalar::from_int(2));
    }

    #[test]
    fn mixed_function_examples() {
        let m = adic(&[&[1, 0], &[0, 1]]);
        let m2 = adic(&[&[2, 0], &[1, 1], &[0, 2]]);
        let p = mixed_function(&[m.clone(), m.clone()], &[1, 1], &[]).unwrap();
        assert_eq!(p.value, Scalar::from_int(2));
        let i = adic(&[&[2, 0], &[0, 3]]);
        let p = mixed_function(&[m.clone(), i], &[1, 1], &[]).unwrap();
        assert_eq!(p.value, Scalar::rat(11, 2));
        let p = mixed_function(&[m2, m.clone()], &[1, 0], &[]).unwrap();
        assert_eq!(p.value, Scalar::from_int(2)); // e/d! = 4/2
    }

    #[test]
    fn mixed_multiplicities_examples() {
        let m = adic(&[&[1, 0], &[0, 1]]);
        let e = mixed_multiplicities(&m, &m, &[]).unwrap();
        assert_eq!(e.values, vec![Scalar::one(), Scalar::one(), Scalar::one()]);

        let i = adic(&[&[2, 0], &[0, 3]]);
        let e = mixed_multiplicities(&m, &i, &[]).unwrap();
        assert_eq!(
            e.values,
            vec![Scalar::one(), Scalar::from_int(2), Scalar::from_int(6)]
        );

        let r = Filtration::rescale(m.clone(), 2).unwrap();
        let er = mixed_multiplicities(&m, &r, &[]).unwrap();
        assert_eq!(
            er.values,
            vec![Scalar::one(), Scalar::from_int(2), Scalar::from_int(4)]
        );

        // Swapping the pair reverses the vector.
        let e_swapped = mixed_multiplicities(&i, &m, &[]).unwrap();
        assert_eq!(e_swapped.values, e.swapped().values);
    }
}
