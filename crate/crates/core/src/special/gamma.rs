#[allow(unused_imports)]
use num_traits::Float;

use super::{BERNOULLI_EVEN, EULER_GAMMA, LN_SQRT_2PI};
use crate::error::{Error, Result};

/// ζ(k) − 1 for k = 2..=39.
const ZETA_MINUS_ONE: [f64; 38] = [
    0.644_934_066_848_226_4,
    0.202_056_903_159_594_3,
    0.082_323_233_711_138_19,
    0.036_927_755_143_369_93,
    0.017_343_061_984_449_14,
    0.008_349_277_381_922_827,
    0.004_077_356_197_944_34,
    0.002_008_392_826_082_214_3,
    0.000_994_575_127_818_085_3,
    0.000_494_188_604_119_464_5,
    0.000_246_086_553_308_048_3,
    0.000_122_713_347_578_489_15,
    6.124_813_505_870_483e-5,
    3.058_823_630_702_049e-5,
    1.528_225_940_865_187e-5,
    7.637_197_637_899_763e-6,
    3.817_293_264_999_84e-6,
    1.908_212_716_553_939e-6,
    9.539_620_338_727_962e-7,
    4.769_329_867_878_064e-7,
    2.384_505_027_277_33e-7,
    1.192_199_259_653_110_6e-7,
    5.960_818_905_125_948e-8,
    2.980_350_351_465_228e-8,
    1.490_155_482_836_504_3e-8,
    7.450_711_789_835_43e-9,
    3.725_334_024_788_457e-9,
    1.862_659_723_513_049e-9,
    9.313_274_324_196_682e-10,
    4.656_629_065_033_784e-10,
    2.328_311_833_676_505_3e-10,
    1.164_155_017_270_052e-10,
    5.820_772_087_902_701e-11,
    2.910_385_044_497_1e-11,
    1.455_192_189_104_198_5e-11,
    7.275_959_835_057_482e-12,
    3.637_979_547_378_651e-12,
    1.818_989_650_307_066e-12,
];

const FACTORIALS: [f64; 171] = {
    let mut t = [1.0f64; 171];
    let mut i = 1;
    while i < 171 {
        t[i] = t[i - 1] * i as f64;
        i += 1;
    }
    t
};

/// `n!` as a float; exact for n ≤ 22, infinite beyond 170.
pub fn factorial(n: u32) -> f64 {
    FACTORIALS.get(n as usize).copied().unwrap_or(f64::INFINITY)
}

/// ln Γ(2 + z) for |z| ≤ 1/2, from the Taylor series with ζ(k) − 1 weights.
/// Exactly zero at z = 0.
fn ln_gamma_two_plus(z: f64) -> f64 {
    let mut sum = 0.0;
    let mut zk = z;
    for (i, zm1) in ZETA_MINUS_ONE.iter().enumerate() {
        let k = (i + 2) as f64;
        zk *= -z;
        let term = zm1 * zk / k;
        sum += term;
        if term.abs() <= 1e-18 * sum.abs() {
            break;
        }
    }
    // the sum starts at z^2 with sign (+); zk carries (-1)^(k-1) z^k
    z * (1.0 - EULER_GAMMA) - sum
}

fn stirling(x: f64) -> f64 {
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut corr = 0.0;
    let mut p = inv;
    for (k, b) in BERNOULLI_EVEN.iter().take(8).enumerate() {
        let n = 2.0 * (k + 1) as f64;
        corr += b / (n * (n - 1.0)) * p;
        p *= inv2;
    }
    (x - 0.5) * x.ln() - x + LN_SQRT_2PI + corr
}

/// ln Γ(x) for x > 0, no argument checking.
pub(crate) fn ln_gamma_pos(x: f64) -> f64 {
    if x < 0.5 {
        ln_gamma_pos(x + 1.0) - x.ln()
    } else if x < 1.5 {
        let z = x - 1.0;
        ln_gamma_two_plus(z) - z.ln_1p()
    } else if x <= 2.5 {
        ln_gamma_two_plus(x - 2.0)
    } else if x < 10.0 {
        // ln Γ(x) = ln Γ(x - n) + Σ ln(x - k), landing x - n in (1.5, 2.5]
        let mut y = x;
        let mut acc = 0.0;
        while y > 2.5 {
            y -= 1.0;
            acc += y.ln();
        }
        acc + ln_gamma_two_plus(y - 2.0)
    } else {
        stirling(x)
    }
}

/// Natural logarithm of the gamma function for real x > 0.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if x > 0.0 && x.is_finite() {
        Ok(ln_gamma_pos(x))
    } else if x == f64::INFINITY {
        Ok(f64::INFINITY)
    } else {
        Err(Error::Domain {
            what: "ln_gamma",
            value: x,
        })
    }
}

/// sin(πx) with exact zeros at the integers and exact ±1 at half-integers.
pub fn sin_pi(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    // reduce to r in [-1, 1] with sin(πx) = sin(πr)
    let r = x - 2.0 * (x * 0.5).round();
    let (sign, r) = if r < 0.0 { (-1.0, -r) } else { (1.0, r) };
    // now r in [0, 1]; fold onto [0, 1/2]
    let r = if r > 0.5 { 1.0 - r } else { r };
    let v = if r == 0.5 {
        1.0
    } else if r == 0.0 {
        0.0
    } else {
        (core::f64::consts::PI * r).sin()
    };
    sign * v
}

/// 1/Γ(x) for every real x; zero at the nonpositive integers.
pub fn rgamma(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x > 0.0 {
        return (-ln_gamma_pos(x)).exp();
    }
    if x == x.floor() {
        return 0.0;
    }
    // 1/Γ(x) = sin(πx) Γ(1 - x) / π
    sin_pi(x) * ln_gamma_pos(1.0 - x).exp() / core::f64::consts::PI
}

/// Γ(a)/Γ(b) for a > 0 and any real b (zero when b is a nonpositive integer).
pub fn gamma_ratio(a: f64, b: f64) -> Result<f64> {
    if !(a > 0.0) {
        return Err(Error::Domain {
            what: "gamma_ratio numerator",
            value: a,
        });
    }
    if b > 0.0 {
        return Ok((ln_gamma_pos(a) - ln_gamma_pos(b)).exp());
    }
    if b == b.floor() {
        return Ok(0.0);
    }
    Ok(sin_pi(b) / core::f64::consts::PI * (ln_gamma_pos(a) + ln_gamma_pos(1.0 - b)).exp())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_at_one_and_two() {
        assert_eq!(ln_gamma(1.0).unwrap(), 0.0);
        assert_eq!(ln_gamma(2.0).unwrap(), 0.0);
    }

    #[test]
    fn half_is_ln_sqrt_pi() {
        let want = 0.5 * core::f64::consts::PI.ln();
        let got = ln_gamma(0.5).unwrap();
        assert!((got - want).abs() <= 1e-15 * want, "{got} vs {want}");
        assert!((want - 0.572_364_942_9).abs() < 1e-10);
    }

    #[test]
    fn rejects_nonpositive() {
        assert!(ln_gamma(0.0).is_err());
        assert!(ln_gamma(-1.5).is_err());
        assert!(ln_gamma(f64::NAN).is_err());
    }

    #[test]
    fn matches_log_factorials() {
        // ln((n-1)!) from exact integer products
        for n in 1..60u32 {
            let want = (1..n).map(|k| (k as f64).ln()).sum::<f64>();
            let got = ln_gamma(n as f64).unwrap();
            assert!(
                (got - want).abs() <= 1e-13 * want.abs().max(1.0),
                "n={n}: {got} vs {want}"
            );
        }
    }

    #[test]
    fn duplication_formula() {
        // Γ(x)Γ(x + 1/2) = 2^(1-2x) √π Γ(2x)
        let ln_sqrt_pi = 0.5 * core::f64::consts::PI.ln();
        for i in 1..200 {
            let x = 0.05 * i as f64 + 0.013;
            let lhs = ln_gamma_pos(x) + ln_gamma_pos(x + 0.5);
            let rhs = (1.0 - 2.0 * x) * 2f64.ln() + ln_sqrt_pi + ln_gamma_pos(2.0 * x);
            assert!((lhs - rhs).abs() <= 1e-13 * lhs.abs().max(1.0), "x={x}");
        }
    }

    #[test]
    fn rgamma_poles_and_reflection() {
        for n in 0..10 {
            assert_eq!(rgamma(-(n as f64)), 0.0);
        }
        // 1/Γ(-1/2) = -1/(2√π)
        let want = -0.5 / core::f64::consts::PI.sqrt();
        assert!((rgamma(-0.5) - want).abs() < 1e-15);
        assert_eq!(sin_pi(3.0), 0.0);
        assert_eq!(sin_pi(-2.5), -1.0);
        assert_eq!(sin_pi(0.5), 1.0);
    }

    #[test]
    fn gamma_ratio_basic() {
        // Γ(5)/Γ(3) = 12
        assert!((gamma_ratio(5.0, 3.0).unwrap() - 12.0).abs() < 1e-13);
        assert_eq!(gamma_ratio(1.5, -2.0).unwrap(), 0.0);
        assert!(gamma_ratio(-1.0, 2.0).is_err());
    }
}
