//! Acceptance suite: one test per release criterion, each printing a
//! pass line with the checked tolerances. Run with `--nocapture` to see
//! the lines.

use std::time::Instant;

use filtmult::divisorial::{
    builtin_example, equality_classifier, mixed_polynomial,
    piecewise_multiplicity, DivisorCoeffs,
};
use filtmult::monomial::{Filtration, MonomialIdeal, WeightValuation};
use filtmult::multiplicity::{
    default_schedule, minkowski_equality_test, mixed_function, multiplicity_limit_estimated,
    trsk_check, TrskVerdict,
};
use filtmult::numeric::{Rational, Scalar};
use filtmult::okounkov::multiplicity_via_volume;

fn adic(gens: &[&[u64]]) -> Filtration {
    Filtration::adic(MonomialIdeal::from_coords(gens[0].len(), gens).unwrap())
}

fn q3(a: Rational, b: Rational) -> Scalar {
    Scalar::quad(a, b, 3)
}

/// Exact reproduction of the built-in threefold data over Q(sqrt 3).
#[test]
fn criterion_1_builtin_threefold_exact() {
    let start = Instant::now();
    let (tensor, envelope) = builtin_example();
    envelope.validate().unwrap();
    let e1 = DivisorCoeffs::from_ints(&[1, 0]);
    let e2 = DivisorCoeffs::from_ints(&[0, 1]);

    // Piecewise multiplicity function: region coefficients.
    let pieces = piecewise_multiplicity(&tensor, &envelope, &e1, &e2).unwrap();
    assert_eq!(pieces.len(), 3);
    assert_eq!(pieces[0].form.coefficient(0), &Scalar::from_int(33));
    for i in 1..=3 {
        assert!(pieces[0].form.coefficient(i).is_zero());
    }
    let expected_mid = [78i64, -81, 27, 9];
    for (i, &c) in expected_mid.iter().enumerate() {
        assert_eq!(pieces[1].form.coefficient(i), &Scalar::from_int(c));
    }
    assert_eq!(
        pieces[2].form.coefficient(3),
        &q3(Rational::new(2007, 169), Rational::new(-9, 338))
    );
    for i in 0..3 {
        assert!(pieces[2].form.coefficient(i).is_zero());
    }

    // Mixed polynomial of the coordinate pair.
    let mixed = mixed_polynomial(&tensor, &envelope, &e1, &e2).unwrap();
    assert_eq!(mixed.coefficient(0), &Scalar::from_int(33));
    assert_eq!(
        mixed.coefficient(1),
        &q3(Rational::new(891, 26), Rational::new(99, 26))
    );
    assert_eq!(
        mixed.coefficient(2),
        &q3(Rational::new(12042, 338), Rational::new(-27, 338))
    );
    assert_eq!(
        mixed.coefficient(3),
        &q3(Rational::new(2007, 169), Rational::new(-9, 338))
    );

    // Gamma table on 20 integer points per region, exact.
    let c_out = q3(Rational::new(9, 26), Rational::new(1, 26));
    let region1: Vec<(i64, i64)> = (1..=20).map(|k| (k + (k % 5), k.max(1) - 1 + 1)).collect();
    let mut checked = 0;
    for (n1, n2) in region1 {
        let (n1, n2) = (n1 + n2, n2); // force n2 < n1
        let g = envelope
            .gamma(&DivisorCoeffs::from_ints(&[n1, n2]))
            .unwrap();
        assert_eq!(g[0], Scalar::from_int(n1));
        assert_eq!(g[1], Scalar::from_int(n1));
        checked += 1;
    }
    for k in 1..=20i64 {
        // Region 2: n1 <= n2 <= 2.42 n1; take n2 = 2 n1.
        let (n1, n2) = (k, 2 * k);
        let g = envelope
            .gamma(&DivisorCoeffs::from_ints(&[n1, n2]))
            .unwrap();
        assert_eq!(g[0], Scalar::from_int(n1));
        assert_eq!(g[1], Scalar::from_int(n2));
        // Region 3: n2 > 2.43 n1; take n2 = 3 n1.
        let (n1, n2) = (k, 3 * k);
        let g = envelope
            .gamma(&DivisorCoeffs::from_ints(&[n1, n2]))
            .unwrap();
        assert_eq!(g[0], &Scalar::from_int(n2) * &c_out);
        assert_eq!(g[1], Scalar::from_int(n2));
        checked += 2;
    }
    assert!(checked >= 60);

    // Equality classification on nine representative pairs.
    let cases: [(i64, i64, i64, i64, bool); 9] = [
        (2, 1, 3, 1, true),   // inner x inner: always
        (5, 2, 7, 1, true),   // inner x inner: always
        (1, 1, 1, 2, false),  // middle x middle, not proportional
        (1, 2, 2, 4, true),   // middle x middle, proportional
        (2, 3, 4, 6, true),   // middle x middle, proportional
        (1, 3, 2, 6, true),   // outer x outer: always
        (3, 1, 1, 2, false),  // inner x middle: never
        (3, 1, 1, 3, false),  // inner x outer: never
        (1, 2, 1, 3, false),  // middle x outer: never
    ];
    for (a1, a2, b1, b2, expect) in cases {
        let class = equality_classifier(
            &envelope,
            &tensor,
            &DivisorCoeffs::from_ints(&[a1, a2]),
            &DivisorCoeffs::from_ints(&[b1, b2]),
        )
        .unwrap();
        assert_eq!(class.equality, expect, "pair ({a1},{a2}) ({b1},{b2})");
    }

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    println!("PASS criterion 1: builtin threefold reproduced exactly in Q(sqrt 3) ({elapsed:?})");
}

/// Plain monomial multiplicities: estimator within 2 percent, volume route
/// exact.
#[test]
fn criterion_2_monomial_multiplicities() {
    let start = Instant::now();
    let cases: [(Filtration, i64); 4] = [
        (adic(&[&[1, 0], &[0, 1]]), 1),
        (adic(&[&[2, 0], &[1, 1], &[0, 2]]), 4),
        (adic(&[&[2, 0], &[0, 3]]), 6),
        (
            Filtration::adic(MonomialIdeal::power_of_max(3, 2)),
            8,
        ),
    ];
    for (f, expect) in cases {
        let schedule = default_schedule(f.dim());
        let est = multiplicity_limit_estimated(&f, &schedule).unwrap();
        let rel = (est.value.to_f64() - expect as f64).abs() / expect as f64;
        assert!(rel <= 0.02, "estimator off by {rel:.4} for e = {expect}");
        let lambda = filtmult::okounkov::truncation_lambda(&f, 3).unwrap();
        let vol =
            multiplicity_via_volume(&f, &Scalar::from_int(lambda.lambda as i64), 4).unwrap();
        assert!(vol.exact, "volume route not exact for e = {expect}");
        assert_eq!(vol.value, Scalar::from_int(expect));
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() <= 5.0, "took {elapsed:?}");
    println!("PASS criterion 2: adic multiplicities 1, 4, 6, 8 (estimator within 2%, volume exact) ({elapsed:?})");
}

/// Irrational-data filtrations: exact volume values and tight estimator
/// brackets at level 2000.
#[test]
fn criterion_3_irrational_multiplicities() {
    let start = Instant::now();
    let wv = |w: &[u64]| WeightValuation::new(w.to_vec()).unwrap();

    // I_n = m^(ceil(n sqrt 2)): multiplicity exactly 2.
    let f = Filtration::divisorial_toric(2, vec![(wv(&[1, 1]), Scalar::sqrt_of(2))]).unwrap();
    let vol = multiplicity_via_volume(&f, &Scalar::from_int(2), 4).unwrap();
    assert!(vol.exact);
    assert_eq!(vol.value, Scalar::from_int(2));
    let est = multiplicity_limit_estimated(&f, &[250, 500, 1000, 2000]).unwrap();
    let rel = (est.value.to_f64() - 2.0).abs() / 2.0;
    assert!(rel <= 0.01, "estimator off by {rel:.5}");

    // Two-weight variant with a genuinely irrational multiplicity
    // 2 * area({x1+x2 < 1} union {x1+2x2 < sqrt 2}) = 4 - 2 sqrt 2.
    let g = Filtration::divisorial_toric(
        2,
        vec![
            (wv(&[1, 1]), Scalar::one()),
            (wv(&[1, 2]), Scalar::sqrt_of(2)),
        ],
    )
    .unwrap();
    let expect = Scalar::quad(Rational::from_int(4), Rational::from_int(-2), 2);
    let lambda = filtmult::okounkov::truncation_lambda(&g, 3).unwrap();
    let vol = multiplicity_via_volume(&g, &Scalar::from_int(lambda.lambda as i64), 4).unwrap();
    assert!(vol.exact);
    assert_eq!(vol.value, expect);
    let est = multiplicity_limit_estimated(&g, &[250, 500, 1000, 2000]).unwrap();
    let value = expect.to_f64();
    assert!(
        est.bracket < 0.01 * value,
        "bracket {:.2e} not below 1% of {value:.6}",
        est.bracket
    );
    assert!(
        (est.value.to_f64() - value).abs() <= 0.01 * value,
        "estimate {} vs exact {value}",
        est.value
    );
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 5.0, "took {elapsed:?}");
    println!(
        "PASS criterion 3: irrational multiplicities exact (2 and 4 - 2 sqrt 2), estimator within 1% at m = 2000 ({elapsed:?})"
    );
}

/// The Minkowski equality and strictness pair, with the rescaling
/// certificate and closure-level comparison.
#[test]
fn criterion_4_minkowski_suite() {
    let start = Instant::now();
    let m = adic(&[&[1, 0], &[0, 1]]);
    let m2 = adic(&[&[2, 0], &[1, 1], &[0, 2]]);

    let v = minkowski_equality_test(&m, &m2, &[]).unwrap();
    assert!(v.equality);
    assert_eq!(
        v.e.values,
        vec![Scalar::one(), Scalar::from_int(2), Scalar::from_int(4)]
    );
    assert_eq!(
        trsk_check(&m, &m2, &[], 50, 1000, 2).unwrap(),
        TrskVerdict::Pair { a: 2, b: 1 }
    );
    // Closure levels of the 2-rescaling agree with the square-adic
    // filtration up to level 50.
    let c1 = Filtration::closure(Filtration::rescale(m.clone(), 2).unwrap(), 2).unwrap();
    let c2 = Filtration::closure(m2.clone(), 2).unwrap();
    for n in 1..=50 {
        assert_eq!(*c1.level(n).unwrap(), *c2.level(n).unwrap(), "level {n}");
    }

    let i = adic(&[&[2, 0], &[0, 3]]);
    let v = minkowski_equality_test(&m, &i, &[]).unwrap();
    assert!(!v.equality);
    assert_eq!(
        v.e.values,
        vec![Scalar::one(), Scalar::from_int(2), Scalar::from_int(6)]
    );
    // e of the product filtration is 11: exact route and brute-force
    // lattice count.
    let prod = mixed_function(&[m.clone(), i.clone()], &[1, 1], &[]).unwrap();
    assert_eq!(prod.value, Scalar::rat(11, 2)); // times d! = 11
    let j = MonomialIdeal::from_coords(2, &[&[3, 0], &[2, 1], &[1, 3], &[0, 4]]).unwrap();
    let m_probe = 40u64;
    let jm = j.power(m_probe).unwrap();
    let bound = 4 * m_probe + 1;
    let mut count = 0u64;
    for x in 0..bound {
        for y in 0..bound {
            if !jm
                .contains(&filtmult::monomial::ExponentVector(vec![x, y]))
                .unwrap()
            {
                count += 1;
            }
        }
    }
    let nearly = 2.0 * count as f64 / (m_probe as f64).powi(2);
    assert!((nearly - 11.0).abs() < 0.3, "brute-force oracle gave {nearly}");

    // sqrt(11) < 1 + sqrt(6), decided by exact squaring:
    // (1 + sqrt 6)^2 - 11 = 2 sqrt 6 - 4 > 0 since 24 > 16.
    let rhs2 = (Scalar::one() + Scalar::sqrt_of(6)).pow(2);
    let diff = &rhs2 - &Scalar::from_int(11);
    assert!(diff.is_positive());
    assert!(diff.is_exact());

    let elapsed = start.elapsed();
    println!("PASS criterion 4: Minkowski equality (1,2,4)/rescaling (2,1) and strict (1,2,6)/e = 11 ({elapsed:?})");
}
