#[allow(unused_imports)]
use num_traits::Float;

use super::{bessel_j, BesselOrder};
use crate::error::{Error, Result};

const MAX_NEWTON_STEPS: u32 = 50;

fn mcmahon(n: f64, k: f64) -> f64 {
    let mu = 4.0 * n * n;
    let b = (k + 0.5 * n - 0.25) * core::f64::consts::PI;
    let e = 8.0 * b;
    let m1 = mu - 1.0;
    b - m1 / e
        - 4.0 * m1 * (7.0 * mu - 31.0) / (3.0 * e.powi(3))
        - 32.0 * m1 * (83.0 * mu * mu - 982.0 * mu + 3779.0) / (15.0 * e.powi(5))
}

// Zeros early in the sequence of a high order sit in the transition region;
// there the Airy-zero form is far better than McMahon's.
fn transition_guess(n: f64, k: f64) -> f64 {
    let t = 3.0 * core::f64::consts::PI * (4.0 * k - 1.0) / 8.0;
    let airy = t.powf(2.0 / 3.0) * (1.0 + 5.0 / 48.0 / (t * t) - 5.0 / 36.0 / t.powi(4));
    let h = (0.5 * n).cbrt();
    n + airy * h + 0.15 * airy * airy / h
}

/// k-th positive zero of J_n (k ≥ 1).
///
/// McMahon's expansion (or an Airy-zero estimate when k is small relative
/// to n) seeds a Newton iteration with J_n′ = (J_{n−1} − J_{n+1})/2.
pub fn bessel_j_zero(order: BesselOrder, k: u32) -> Result<f64> {
    if k == 0 {
        return Err(Error::InvalidInput("Bessel zero index starts at 1"));
    }
    let n = order.0;
    let nf = n as f64;
    let kf = k as f64;
    // the two seeds cross over near k ≈ (n+1)/5
    let mut x = if 5 * k <= n + 1 {
        transition_guess(nf, kf)
    } else {
        mcmahon(nf, kf)
    };
    for _ in 0..MAX_NEWTON_STEPS {
        let f = bessel_j(order, x);
        let d = if n == 0 {
            -bessel_j(BesselOrder(1), x)
        } else {
            0.5 * (bessel_j(BesselOrder(n - 1), x) - bessel_j(BesselOrder(n + 1), x))
        };
        let step = f / d;
        x -= step;
        if step.abs() <= 4.0 * f64::EPSILON * x {
            return Ok(x);
        }
    }
    Err(Error::Convergence {
        what: "bessel_j_zero",
        iterations: MAX_NEWTON_STEPS,
    })
}
