use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use signature_triangle::exact::{decimal_render, ratio, ExactRational};
use signature_triangle::stats::row_cdf;
use signature_triangle::{
    binomial, cdf_t, check_identities, k_cdf_bounds, k_row_even, phi, s_closed, t_count, triangle, ExactInt, Method,
};

fn small_rational() -> impl Strategy<Value = ExactRational> {
    (-50i64..50, 1i64..30).prop_map(|(n, d)| ratio(n, d))
}

proptest! {
    #[test]
    fn rational_field_axioms(a in small_rational(), b in small_rational(), c in small_rational()) {
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert_eq!((&a + &b) - &b, a.clone());
        if !a.is_zero() {
            prop_assert!((&a * a.recip()).is_one());
        }
        prop_assert!(*a.denom() > ExactInt::zero());
    }

    #[test]
    fn integer_addition_is_exact(a in any::<i128>(), b in any::<i128>()) {
        let (a, b) = (ExactInt::from(a), ExactInt::from(b));
        prop_assert_eq!((&a + &b) - &b, a);
    }

    #[test]
    fn decimal_render_within_half_ulp(n in -1_000_000i64..1_000_000, d in 1i64..10_000, places in 0usize..12) {
        let q = ratio(n, d);
        let text = decimal_render(&q, places);
        let (int_part, frac) = text.split_once('.').unwrap_or((text.as_str(), ""));
        prop_assert_eq!(frac.len(), places);
        let digits: ExactInt = format!("{}{}", int_part.trim_start_matches('-'), frac).parse().unwrap();
        let sign = if text.starts_with('-') { -1 } else { 1 };
        let parsed = ExactRational::new(digits * sign, num_traits::pow(ExactInt::from(10), places));
        let err = (parsed - &q).abs();
        let scale = ExactRational::from_integer(num_traits::pow(ExactInt::from(10), places) * 2);
        prop_assert!(err * scale <= ExactRational::one());
    }

    #[test]
    fn phi_is_symmetric(t in -9.0f64..9.0) {
        let sum = phi(t).unwrap() + phi(-t).unwrap();
        prop_assert!((sum - 1.0).abs() <= 2e-12);
    }

    #[test]
    fn phi_is_monotone(a in -8.0f64..8.0, b in -8.0f64..8.0) {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        prop_assert!(phi(lo).unwrap() <= phi(hi).unwrap());
    }

    #[test]
    fn cdf_monotone_and_bounded(c in 3i64..40, x in -50.0f64..50.0, dx in 0.0f64..20.0) {
        let lo = cdf_t(c, x).unwrap();
        let hi = cdf_t(c, x + dx).unwrap();
        prop_assert!(lo <= hi);
        prop_assert!(lo >= ExactRational::zero() && hi <= ExactRational::one());
    }

    #[test]
    fn k_bounds_bracket_exact(m in 2i64..30, x in -60.0f64..60.0) {
        let b = k_cdf_bounds(2 * m, x).unwrap();
        let exact = b.exact.clone().unwrap();
        prop_assert!(b.lower <= exact && exact <= b.upper);
    }

    #[test]
    fn closed_form_rejects_odd_signatures(c in 3i64..50, n in -30i64..30) {
        prop_assert!(s_closed(c, 2 * n + 1).is_err());
    }
}

#[test]
fn cdf_limits_at_support_ends() {
    let tri = triangle(40, Method::Both).unwrap();
    for row in tri.rows() {
        let lo = row.min_signature().unwrap().value() as f64;
        let hi = row.max_signature().unwrap().value() as f64;
        assert!(row_cdf(row, lo - 1.0).is_zero());
        assert!(!row_cdf(row, lo).is_zero());
        assert!(row_cdf(row, hi).is_one());
        assert!(row_cdf(row, hi - 1.0) < ExactRational::one());
    }
}

#[test]
fn even_rows_have_equal_tails() {
    let tri = triangle(60, Method::Both).unwrap();
    for row in tri.rows().iter().filter(|r| r.c() % 2 == 0) {
        for x in (0..=row.c()).step_by(2) {
            let below = row.cumulative(-(x as f64));
            let above = row.total() - row.cumulative(x as f64 - 1.0);
            assert_eq!(below, above, "c={} x={x}", row.c());
        }
    }
}

#[test]
fn identities_hold_through_200() {
    let tri = triangle(200, Method::Both).unwrap();
    let report = check_identities(&tri);
    assert!(report.all_passed(), "{:?}", report.failures().take(10).collect::<Vec<_>>());
}

#[test]
fn support_matches_closed_form_ranges() {
    for c in 3i64..=80 {
        let m = c / 2;
        for n in -(m + 2)..=(m + 2) {
            let empty = if c % 2 == 0 { m - n.abs() - 2 < 0 } else { (m + n - 3).min(m - n) < 0 && n != 1 };
            let v = s_closed(c, 2 * n).unwrap();
            assert_eq!(v.is_zero(), empty, "c={c} n={n}");
        }
        if c % 2 == 1 {
            assert!(!s_closed(c, 2).unwrap().is_zero());
        }
    }
}

#[test]
fn central_column_matches_a006134() {
    let values: Vec<ExactInt> = (2..=7).map(|m| s_closed(2 * m, 0).unwrap()).collect();
    let expected: Vec<ExactInt> = [1, 3, 9, 29, 99, 351].into_iter().map(ExactInt::from).collect();
    assert_eq!(values, expected);
    // A006134(n) = sum_{k=0}^n C(2k, k)
    for m in 2..=30i64 {
        let a: ExactInt = (0..=m - 2).map(|k| binomial(2 * k, k)).sum();
        assert_eq!(s_closed(2 * m, 0).unwrap(), a, "m={m}");
    }
}

#[test]
fn k_rows_sum_to_k_count() {
    for c in (4..=60).step_by(2) {
        let k = k_row_even(c).unwrap();
        assert_eq!(k.total(), ExactRational::from(signature_triangle::k_count(c).unwrap()));
        assert!(k.weights.values().all(|w| *w >= ExactRational::zero()));
    }
}

#[test]
fn jacobsthal_counts() {
    let mut prev = (ExactInt::zero(), ExactInt::one());
    for c in 4..=200 {
        prev = (prev.1.clone(), &prev.1 + &prev.0 * 2);
        assert_eq!(t_count(c).unwrap(), prev.1);
    }
}

#[test]
fn phi_matches_frozen_reference_values() {
    // 30-digit reference evaluations
    let cases = [
        (1.0, 0.841_344_746_068_542_9),
        (2.0 / 3f64.sqrt(), 0.875_893_460_505_038_2),
        (-3.0, 0.001_349_898_031_630_094_5),
        (5.0, 0.999_999_713_348_428_1),
        (-7.5, 3.190_891_672_910_896e-14),
    ];
    for (t, want) in cases {
        let got = phi(t).unwrap();
        assert!((got - want).abs() <= 1e-12, "t={t}: {got} vs {want}");
    }
}
