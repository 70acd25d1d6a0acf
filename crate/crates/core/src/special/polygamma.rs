#[allow(unused_imports)]
use num_traits::Float;

use super::gamma::factorial;
use super::BERNOULLI_EVEN;
use crate::error::{Error, Result};

/// Highest polygamma order accepted by the public [`polygamma`].
pub const MAX_POLYGAMMA_ORDER: u32 = 8;
/// Highest order the coefficient engine may request internally.
pub(crate) const MAX_INTERNAL_POLYGAMMA_ORDER: u32 = 23;

/// Derivative order `n` of the digamma function, 0 ≤ n ≤ 8.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PolygammaOrder(u32);

impl PolygammaOrder {
    pub fn new(n: u32) -> Result<Self> {
        if n > MAX_POLYGAMMA_ORDER {
            Err(Error::PolygammaOrder {
                order: n,
                max: MAX_POLYGAMMA_ORDER,
            })
        } else {
            Ok(PolygammaOrder(n))
        }
    }

    pub const DIGAMMA: PolygammaOrder = PolygammaOrder(0);
    pub const TRIGAMMA: PolygammaOrder = PolygammaOrder(1);

    pub fn get(self) -> u32 {
        self.0
    }
}

/// ψ⁽ⁿ⁾(x) for real x > 0.
pub fn polygamma(n: PolygammaOrder, x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain {
            what: "polygamma",
            value: x,
        });
    }
    Ok(polygamma_unchecked(n.0, x))
}

/// ψ⁽ⁿ⁾(x) for x > 0 and n ≤ [`MAX_INTERNAL_POLYGAMMA_ORDER`]; the caller
/// guarantees both.
pub(crate) fn polygamma_unchecked(n: u32, x: f64) -> f64 {
    debug_assert!(n <= MAX_INTERNAL_POLYGAMMA_ORDER && x > 0.0);
    // shift right until the asymptotic series is good to round-off;
    // higher orders need a larger argument
    let threshold = 10.0 + 2.0 * n as f64;
    let mut y = x;
    let mut shift = 0.0;
    while y < threshold {
        shift += y.powi(-(n as i32) - 1);
        y += 1.0;
    }
    let nf = factorial(n);
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    // ψ⁽ⁿ⁾(x) = ψ⁽ⁿ⁾(x + N) − (−1)ⁿ n! Σ (x + j)^(−n−1)
    asymptotic(n, y) - sign * nf * shift
}

fn asymptotic(n: u32, x: f64) -> f64 {
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    if n == 0 {
        let mut s = 0.0;
        let mut p = inv2;
        for (k, b) in BERNOULLI_EVEN.iter().enumerate() {
            s += b / (2.0 * (k + 1) as f64) * p;
            p *= inv2;
        }
        return x.ln() - 0.5 * inv - s;
    }
    // (−1)^(n+1) [ (n−1)!/xⁿ + n!/(2xⁿ⁺¹) + Σ B₂ₖ (2k+n−1)!/((2k)! x^(2k+n)) ]
    let xn = inv.powi(n as i32);
    let mut s = factorial(n - 1) * xn + 0.5 * factorial(n) * xn * inv;
    let mut p = xn * inv2;
    for (k, b) in BERNOULLI_EVEN.iter().enumerate() {
        let two_k = 2 * (k as u32 + 1);
        s += b * factorial(two_k + n - 1) / factorial(two_k) * p;
        p *= inv2;
    }
    if n % 2 == 1 {
        s
    } else {
        -s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn psi(n: u32, x: f64) -> f64 {
        polygamma(PolygammaOrder::new(n).unwrap(), x).unwrap()
    }

    #[test]
    fn digamma_step() {
        assert!((psi(0, 2.0) - psi(0, 1.0) - 1.0).abs() < 1e-14);
    }

    #[test]
    fn digamma_at_one_from_harmonic_limit() {
        // γ = lim (H_n − ln n); Euler–Maclaurin corrected harmonic sum
        let n = 10_000.0f64;
        let h: f64 = (1..=10_000).map(|k| 1.0 / k as f64).sum();
        let gamma = h - n.ln() - 0.5 / n + 1.0 / (12.0 * n * n);
        assert!((psi(0, 1.0) + gamma).abs() < 1e-12);
        assert!((psi(0, 1.0) + 0.577_215_664_9).abs() < 1e-10);
    }

    #[test]
    fn trigamma_at_one_from_partial_sums() {
        // Σ 1/k² with the tail 1/N − 1/(2N²) + 1/(6N³)
        let n = 1000u32;
        let head: f64 = (1..=n).map(|k| 1.0 / (k as f64 * k as f64)).sum();
        let nf = n as f64;
        let tail = 1.0 / nf - 0.5 / (nf * nf) + 1.0 / (6.0 * nf * nf * nf);
        let oracle = head + tail;
        let got = psi(1, 1.0);
        assert!((got - oracle).abs() <= 1e-12 * oracle, "{got} vs {oracle}");
        assert!((got - 1.644_934_066_8).abs() < 1e-10);
    }

    #[test]
    fn recurrence_on_grid() {
        for n in 0..=MAX_POLYGAMMA_ORDER {
            for i in 1..80 {
                let x = 0.37 * i as f64;
                let lhs = psi(n, x + 1.0) - psi(n, x);
                let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
                let rhs = sign * factorial(n) * x.powi(-(n as i32) - 1);
                assert!(
                    (lhs - rhs).abs() <= 1e-11 * rhs.abs(),
                    "n={n} x={x}: {lhs} vs {rhs}"
                );
            }
        }
    }

    #[test]
    fn zeta_values_at_one() {
        // ψ⁽ⁿ⁾(1) = (−1)ⁿ⁺¹ n! ζ(n+1); ζ(4) = π⁴/90, ζ(2) = π²/6
        let pi = core::f64::consts::PI;
        assert!((psi(3, 1.0) - 6.0 * pi.powi(4) / 90.0).abs() < 1e-12 * 6.5);
        let z24 = polygamma_unchecked(23, 1.0) / factorial(23);
        // ζ(24) − 1 ≈ 5.96e-8
        assert!((z24 - 1.0 - 5.960_818_905_125_948e-8).abs() < 1e-13);
    }

    #[test]
    fn order_and_domain_errors() {
        assert!(PolygammaOrder::new(9).is_err());
        assert!(polygamma(PolygammaOrder::DIGAMMA, 0.0).is_err());
        assert!(polygamma(PolygammaOrder::TRIGAMMA, -1.0).is_err());
    }
}
