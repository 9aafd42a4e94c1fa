//! Property-based invariants over the exact-algebra, parser, classifier,
//! and hypergeometric layers.

use proptest::prelude::*;

use chebint_core::{
    classify, gauss_2f1, gauss_2f1_direct, parse_integrand, DifferentialBinomial,
    HypergeomParams, Polynomial, Rational,
};

fn rational(num: std::ops::Range<i64>, den: std::ops::Range<i64>) -> impl Strategy<Value = Rational> {
    (num, den).prop_map(|(n, d)| Rational::new(n, d))
}

fn small_rational() -> impl Strategy<Value = Rational> {
    rational(-20..21, 1..12)
}

proptest! {
    #[test]
    fn rational_add_associative(
        p in small_rational(),
        q in small_rational(),
        r in small_rational(),
    ) {
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
    }

    #[test]
    fn rational_mul_distributes(
        p in small_rational(),
        q in small_rational(),
        r in small_rational(),
    ) {
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
    }

    #[test]
    fn reduction_is_idempotent(p in small_rational(), k in 1i64..50) {
        // building from an unreduced pair lands on the same representative
        let scaled = Rational::from_big(
            p.numer() * k,
            p.denom() * k,
        );
        prop_assert_eq!(&scaled, &p);
        prop_assert_eq!(scaled.to_string(), p.to_string());
    }

    #[test]
    fn integer_detection(n in -1_000_000i64..=1_000_000) {
        prop_assert_eq!(Rational::from_int(n).as_i64(), Some(n));
        prop_assert_eq!(Rational::new(2 * n + 1, 2).as_i64(), None);
    }

    #[test]
    fn poly_pow_matches_eval_pow(
        coeffs in prop::collection::vec(rational(-6..7, 1..5), 0..5),
        k in 0u32..5,
        points in prop::collection::vec(rational(-9..10, 1..7), 50),
    ) {
        let p = Polynomial::from_coeffs(coeffs);
        let expanded = p.pow(k);
        for t in &points {
            let via_expansion = expanded.eval_rational(t);
            let via_eval = p.eval_rational(t).pow_i(k as i64).unwrap();
            prop_assert_eq!(via_expansion, via_eval);
        }
    }
}

fn binomial_strategy() -> impl Strategy<Value = DifferentialBinomial> {
    (
        rational(-8..9, 1..5),
        rational(-8..9, 1..5).prop_filter("b != 0", |b| !b.is_zero()),
        rational(-8..9, 1..5),
        rational(-4..5, 1..3),
        rational(-4..5, 1..3).prop_filter("beta != 0", |b| !b.is_zero()),
    )
        .prop_filter_map("nondegenerate", |(a, b, c, alpha, beta)| {
            DifferentialBinomial::new(a, b, c, alpha, beta).ok()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn format_parse_roundtrip(db in binomial_strategy()) {
        let text = db.to_string();
        let reparsed = parse_integrand(&text).unwrap();
        prop_assert_eq!(db, reparsed);
    }

    #[test]
    fn canonicalization_preserves_values(
        a in rational(-4..5, 1..4),
        b in rational(1..7, 1..4),
        c in rational(-4..5, 1..4),
        alpha in rational(1..4, 1..3),
        beta in rational(1..4, 1..3),
        xs in prop::collection::vec(0.3f64..1.8, 20),
    ) {
        // positive alpha, beta keep both forms real on x > 0
        let neg_b = -&b;
        let db = DifferentialBinomial::new(a.clone(), neg_b.clone(), c.clone(), alpha.clone(), beta.clone()).unwrap();
        for &x in &xs {
            let raw = x.powf(a.to_f64())
                * (alpha.to_f64() + beta.to_f64() * x.powf(neg_b.to_f64()))
                    .powf(c.to_f64());
            let canon = db.eval(x).unwrap();
            prop_assert!(
                (raw - canon).abs() <= 1e-12 * raw.abs().max(1.0),
                "x = {}: {} vs {}", x, raw, canon
            );
        }
    }

    #[test]
    fn classify_is_scale_invariant(
        db in binomial_strategy(),
        lambda in rational(-6..7, 1..4).prop_filter("nonzero", |l| !l.is_zero()),
    ) {
        let scaled = DifferentialBinomial::new(
            db.a.clone(),
            db.b.clone(),
            db.c.clone(),
            &db.alpha * &lambda,
            &db.beta * &lambda,
        )
        .unwrap();
        prop_assert_eq!(classify(&db), classify(&scaled));
    }

    #[test]
    fn case_witnesses_are_consistent(db in binomial_strategy()) {
        let cls = classify(&db);
        if let (Some(w2), Some(w3)) = (cls.case2, cls.case3) {
            // case3 witness - case2 witness = c
            prop_assert_eq!(Rational::from_int(w3 - w2), db.c);
        }
        prop_assert_eq!(
            cls.elementary,
            cls.case1.is_some() || cls.case2.is_some() || cls.case3.is_some()
        );
    }
}

// parameter magnitudes kept moderate so f64 summation stays well inside the
// asserted tolerances
fn hyper_params() -> impl Strategy<Value = HypergeomParams> {
    (
        rational(-6..7, 1..4),
        rational(-6..7, 1..4),
        rational(2..13, 1..4),
        -0.9f64..0.9,
    )
        .prop_map(|(p, q, r, z)| HypergeomParams { p, q, r, z })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn hyper_symmetric_in_first_two(params in hyper_params()) {
        let swapped = HypergeomParams {
            p: params.q.clone(),
            q: params.p.clone(),
            r: params.r.clone(),
            z: params.z,
        };
        let a = gauss_2f1(&params, 1e-15).unwrap().value;
        let b = gauss_2f1(&swapped, 1e-15).unwrap().value;
        prop_assert!(
            (a - b).abs() <= 1e-13 * a.abs().max(b.abs()).max(1.0),
            "{} vs {}", a, b
        );
    }

    #[test]
    fn pfaff_agrees_with_direct_series(
        p in rational(-3..4, 1..4),
        q in rational(-3..4, 1..4),
        r in rational(2..13, 1..4),
        z in -0.9f64..-0.01,
    ) {
        let params = HypergeomParams { p, q, r, z };
        let transformed = gauss_2f1(&params, 1e-15).unwrap().value;
        let direct = gauss_2f1_direct(&params, 1e-15).unwrap().value;
        prop_assert!(
            (transformed - direct).abs()
                <= 1e-11 * transformed.abs().max(direct.abs()).max(1.0),
            "{} vs {}", transformed, direct
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn degeneration_to_binomial_series(
        p in rational(-8..9, 1..5),
        q in rational(1..13, 1..4),
        z in -0.9f64..0.9,
    ) {
        // q = r collapses the series to (1-z)^{-p}
        let params = HypergeomParams { p: p.clone(), q: q.clone(), r: q, z };
        let got = gauss_2f1(&params, 1e-15).unwrap().value;
        let expect = (1.0 - z).powf(-p.to_f64());
        prop_assert!(
            (got - expect).abs() <= 1e-12 * (1.0 + expect.abs()),
            "{} vs {}", got, expect
        );
    }

    #[test]
    fn truncation_bound_is_honest(params in hyper_params()) {
        let loose = gauss_2f1(&params, 1e-6).unwrap();
        let tight = gauss_2f1(&params, 1e-8).unwrap();
        prop_assert!(
            (loose.value - tight.value).abs() <= loose.truncation_bound,
            "delta {} > bound {}",
            (loose.value - tight.value).abs(),
            loose.truncation_bound
        );
    }
}
