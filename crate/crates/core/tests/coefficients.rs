use std::f64::consts::PI;

use hankel_exact::exp_type::{
    closed_form_coeff, estimate_exponential_type, exponential_type, factor_full_series,
    family_full_series, product_family_coeffs, reciprocal_gamma_series, GammaFactor,
    GammaProductFamily, Parity,
};
use hankel_exact::special::{factorial, polygamma, PolygammaOrder};
use proptest::prelude::*;

fn family(alphas: &[f64], betas: &[f64]) -> GammaProductFamily {
    GammaProductFamily::from_lists(0, Parity::OddPower, alphas, betas).unwrap()
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn grid() -> Vec<GammaProductFamily> {
    let mut out = Vec::new();
    for &a in &[0.6, 1.0, 2.5, 4.0] {
        for &b in &[0.3, 1.0, 1.7] {
            out.push(family(&[a], &[b]));
            out.push(family(&[a, 1.3], &[b, 0.8]));
            out.push(family(&[a, 1.3, 2.2], &[b, 0.8, 0.4]));
        }
    }
    out
}

#[test]
fn recurrence_matches_closed_formulas_on_grid() {
    for f in grid() {
        let c = product_family_coeffs(&f, 2).unwrap();
        for s in 0..=2 {
            let engine = c.c(s) * factorial(2 * s as u32);
            let closed = closed_form_coeff(&f, s).unwrap();
            assert!(
                rel(engine, closed) <= 1e-10,
                "{f:?} s={s}: {engine} vs {closed}"
            );
        }
    }
}

#[test]
fn sinc_coefficients() {
    let c = product_family_coeffs(&family(&[1.0], &[1.0]), 5).unwrap();
    for s in 0..=5usize {
        let sign = if s % 2 == 0 { 1.0 } else { -1.0 };
        let want = sign * PI.powi(2 * s as i32) / factorial(2 * s as u32 + 1);
        assert!(rel(c.c(s), want) <= 1e-11, "s={s}");
    }
}

#[test]
fn sinc_c1_c2_values() {
    let c = reciprocal_gamma_series(&GammaFactor::new(1.0, 1.0).unwrap(), 2).unwrap();
    assert!((c.c(1) + 1.644_934_066_8).abs() < 1e-10);
    assert!((c.c(2) - 0.811_742_425_3).abs() < 1e-10);
}

#[test]
fn two_unit_factors_c1() {
    let c = product_family_coeffs(&family(&[1.0, 1.0], &[1.0, 1.0]), 1).unwrap();
    let trigamma = polygamma(PolygammaOrder::TRIGAMMA, 1.0).unwrap();
    assert!(rel(c.c(1), -2.0 * trigamma) <= 1e-13);
    assert!((c.c(1) + 3.289_868_133_7).abs() < 1e-9);
}

#[test]
fn single_factor_family_equals_factor_series() {
    let f = GammaFactor::new(2.3, 0.9).unwrap();
    let fam = GammaProductFamily::new(0, Parity::EvenPower, vec![f]).unwrap();
    assert_eq!(
        product_family_coeffs(&fam, 8).unwrap(),
        reciprocal_gamma_series(&f, 8).unwrap()
    );
}

#[test]
fn odd_powers_cancel_before_reduction() {
    for f in grid() {
        let full = family_full_series(&f, 12).unwrap();
        for (k, v) in full.iter().enumerate().skip(1).step_by(2) {
            assert!(v.abs() <= 1e-12 * full[0].abs(), "{f:?} x^{k}: {v:e}");
        }
        for fac in f.factors() {
            let s = factor_full_series(fac, 12).unwrap();
            assert!(s[1].abs() <= 1e-12 * s[0].abs());
        }
    }
}

#[test]
fn leading_signs() {
    for f in grid() {
        assert!(closed_form_coeff(&f, 0).unwrap() > 0.0);
        assert!(closed_form_coeff(&f, 1).unwrap() < 0.0);
    }
}

#[test]
fn types() {
    assert_eq!(exponential_type(&family(&[1.0], &[1.0])), PI);
    assert_eq!(
        exponential_type(&family(&[1.0, 1.0], &[1.0, 2.0])),
        3.0 * PI
    );
    assert_eq!(exponential_type(&family(&[1.0], &[0.5])), 0.5 * PI);
}

#[test]
fn type_estimates() {
    for f in [family(&[1.0], &[1.0]), family(&[3.0], &[2.0])] {
        let tau = exponential_type(&f);
        let est = estimate_exponential_type(&f, 50.0).unwrap();
        assert!((est - tau).abs() <= 0.05 * tau, "{est} vs {tau}");
        let finer = estimate_exponential_type(&f, 100.0).unwrap();
        assert!((finer - tau).abs() < (est - tau).abs());
    }
    assert!(estimate_exponential_type(&family(&[1.0], &[1.0]), 10.0).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn closed_formulas_random(
        alphas in prop::collection::vec(0.3f64..6.0, 1..=4),
        betas in prop::collection::vec(0.1f64..2.5, 4),
    ) {
        let f = family(&alphas, &betas[..alphas.len()]);
        let c = product_family_coeffs(&f, 2).unwrap();
        for s in 0..=2 {
            let engine = c.c(s) * factorial(2 * s as u32);
            prop_assert!(rel(engine, closed_form_coeff(&f, s).unwrap()) <= 1e-10);
        }
    }

    #[test]
    fn series_matches_function_near_origin(a in 0.5f64..4.0, b in 0.2f64..1.5, x in -0.05f64..0.05) {
        let f = family(&[a], &[b]);
        let c = product_family_coeffs(&f, 8).unwrap();
        let series: f64 = (0..=8).map(|s| c.c(s) * x.powi(2 * s as i32)).sum();
        let direct = f.reciprocal_product_at(x);
        prop_assert!((series - direct).abs() <= 1e-12 * direct.abs());
    }
}
