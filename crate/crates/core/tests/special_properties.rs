use hankel_exact::special::{
    bessel_j, bessel_j_zero, factorial, ln_gamma, ln_gamma_complex, polygamma, BesselOrder,
    PolygammaOrder, MAX_POLYGAMMA_ORDER,
};
use num_complex::Complex64;
use proptest::prelude::*;

fn j(n: u32, x: f64) -> f64 {
    bessel_j(BesselOrder(n), x)
}

#[test]
fn bessel_recurrence_on_grid() {
    for n in 1..=30u32 {
        for i in 1..=500 {
            let x = 0.1 * i as f64;
            let r = j(n - 1, x) + j(n + 1, x) - 2.0 * n as f64 / x * j(n, x);
            assert!(r.abs() <= 1e-10, "n={n} x={x}: residual {r:e}");
        }
    }
}

#[test]
fn bessel_normalization_on_grid() {
    for i in 0..=200 {
        let x = 0.1 * i as f64;
        let top = x as u32 + 40;
        let s = j(0, x).powi(2) + 2.0 * (1..=top).map(|n| j(n, x).powi(2)).sum::<f64>();
        assert!((s - 1.0).abs() <= 1e-10, "x={x}: {s}");
    }
}

#[test]
fn bessel_first_zero_by_bisection() {
    // bisect the ascending-series region for the first root of J0
    let (mut a, mut b) = (2.0, 3.0);
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        if j(0, a) * j(0, mid) <= 0.0 {
            b = mid;
        } else {
            a = mid;
        }
    }
    let root = 0.5 * (a + b);
    assert!(j(0, root).abs() <= 1e-12);
    let z = bessel_j_zero(BesselOrder(0), 1).unwrap();
    assert!((z - root).abs() <= 1e-10);
    assert!(j(0, 2.404_825_557_695_773).abs() <= 1e-12);
}

#[test]
fn bessel_zero_against_bisection_for_several_orders() {
    for n in [1u32, 2, 5, 9] {
        for k in 1..=6u32 {
            let z = bessel_j_zero(BesselOrder(n), k).unwrap();
            let (mut a, mut b) = (z - 0.3, z + 0.3);
            assert!(j(n, a) * j(n, b) < 0.0);
            for _ in 0..200 {
                let mid = 0.5 * (a + b);
                if j(n, a) * j(n, mid) <= 0.0 {
                    b = mid;
                } else {
                    a = mid;
                }
            }
            assert!((z - 0.5 * (a + b)).abs() <= 1e-10, "n={n} k={k}");
        }
    }
}

#[test]
fn polygamma_recurrence_on_grid() {
    for n in 0..=MAX_POLYGAMMA_ORDER {
        let order = PolygammaOrder::new(n).unwrap();
        for i in 1..=300 {
            let x = 0.05 * i as f64;
            let lhs = polygamma(order, x + 1.0).unwrap() - polygamma(order, x).unwrap();
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            let rhs = sign * factorial(n) * x.powi(-(n as i32) - 1);
            assert!((lhs - rhs).abs() <= 1e-11 * rhs.abs(), "n={n} x={x}");
        }
    }
}

#[test]
fn complex_log_gamma_matches_real_axis() {
    for i in 1..=500 {
        let x = 0.1 * i as f64;
        let c = ln_gamma_complex(Complex64::new(x, 0.0)).unwrap();
        let r = ln_gamma(x).unwrap();
        assert!((c.re - r).abs() <= 1e-12 * r.abs().max(1.0), "x={x}");
        assert!(c.im.abs() <= 1e-12);
    }
}

#[test]
fn complex_log_gamma_modulus_identity() {
    // |Γ(1+iy)|² = πy / sinh(πy)
    for &y in &[0.25, 1.0, 3.0, 10.0] {
        let lg = ln_gamma_complex(Complex64::new(1.0, y)).unwrap();
        let want = (std::f64::consts::PI * y / (std::f64::consts::PI * y).sinh()).ln();
        assert!(
            (2.0 * lg.re - want).abs() <= 1e-10 * want.abs().max(1.0),
            "y={y}"
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn recurrence_random(n in 1u32..40, x in 0.01f64..50.0) {
        let r = j(n - 1, x) + j(n + 1, x) - 2.0 * n as f64 / x * j(n, x);
        prop_assert!(r.abs() <= 1e-10);
    }

    #[test]
    fn bounded_by_one(n in 0u32..60, x in 0.0f64..1e4) {
        prop_assert!(j(n, x).abs() <= 1.0);
    }

    #[test]
    fn polygamma_recurrence_random(n in 0u32..=8, x in 0.01f64..100.0) {
        let order = PolygammaOrder::new(n).unwrap();
        let lhs = polygamma(order, x + 1.0).unwrap() - polygamma(order, x).unwrap();
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let rhs = sign * factorial(n) * x.powi(-(n as i32) - 1);
        prop_assert!((lhs - rhs).abs() <= 1e-11 * rhs.abs());
    }

    #[test]
    fn conjugate_symmetry(re in -20.0f64..40.0, im in 0.1f64..60.0) {
        let z = Complex64::new(re, im);
        let a = ln_gamma_complex(z).unwrap();
        let b = ln_gamma_complex(z.conj()).unwrap();
        prop_assert!((a.re - b.re).abs() <= 1e-12 * a.re.abs().max(1.0));
        prop_assert!((a.im + b.im).abs() <= 1e-12 * a.im.abs().max(1.0));
    }
}
