//! Reciprocal gamma-product integrands and their even Maclaurin coefficients.
//!
//! The family is
//!
//! ```text
//!         x^(2m+1)  or  x^(2m)
//! f(x) = ──────────────────────────────
//!         ∏ₖ Γ(αₖ + βₖx) Γ(αₖ − βₖx)
//! ```
//!
//! The denominator is even in x, so its reciprocal expands in even powers
//! only. Coefficients come from the logarithmic-derivative recurrence for
//! 1/Γ(α + t), which needs nothing beyond polygamma values at αₖ.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::special::{
    factorial, gamma_ratio, ln_gamma_complex, polygamma_unchecked, rgamma, sin_pi,
    MAX_INTERNAL_POLYGAMMA_ORDER,
};

/// Largest even-power truncation order S the coefficient engine supports.
///
/// The recurrence needs ψ⁽ʲ⁾(α) for j ≤ 2S − 1.
pub const MAX_SERIES_ORDER: usize = (MAX_INTERNAL_POLYGAMMA_ORDER as usize + 1) / 2;

const ODD_CANCELLATION_TOL: f64 = 1e-12;

/// One Γ(α + βx)Γ(α − βx) factor of the denominator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaFactor {
    alpha: f64,
    beta: f64,
}

impl GammaFactor {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(Error::Domain {
                what: "gamma factor alpha",
                value: alpha,
            });
        }
        if !(beta > 0.0 && beta.is_finite()) {
            return Err(Error::Domain {
                what: "gamma factor beta",
                value: beta,
            });
        }
        Ok(GammaFactor { alpha, beta })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// 1/(Γ(α + βx)Γ(α − βx)) on the real line.
    pub fn reciprocal_at(&self, x: f64) -> f64 {
        let a = self.alpha;
        let t = (self.beta * x).abs();
        if t < a {
            rgamma(a + t) * rgamma(a - t)
        } else {
            // Γ(a − t) = π / (sin(π(a − t)) Γ(1 − a + t)) keeps both log-gammas
            // at positive arguments and the ratio free of overflow
            let ratio = gamma_ratio(1.0 - a + t, a + t).unwrap_or(0.0);
            sin_pi(a - t) / core::f64::consts::PI * ratio
        }
    }
}

/// Power prefactor of the integrand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    /// x^(2m+1): an odd function, paired with even Bessel orders.
    OddPower,
    /// x^(2m): an even function, paired with odd Bessel orders.
    EvenPower,
}

/// x^(2m+1) or x^(2m) over ∏ Γ(αₖ + βₖx)Γ(αₖ − βₖx).
#[derive(Debug, Clone, PartialEq)]
pub struct GammaProductFamily {
    m: u32,
    parity: Parity,
    factors: Vec<GammaFactor>,
}

impl GammaProductFamily {
    pub fn new(m: u32, parity: Parity, factors: Vec<GammaFactor>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidInput(
                "gamma product needs at least one factor",
            ));
        }
        Ok(GammaProductFamily { m, parity, factors })
    }

    /// Builds a family from parallel α and β lists.
    pub fn from_lists(m: u32, parity: Parity, alphas: &[f64], betas: &[f64]) -> Result<Self> {
        if alphas.len() != betas.len() {
            return Err(Error::InvalidInput("alpha and beta lists differ in length"));
        }
        let factors = alphas
            .iter()
            .zip(betas)
            .map(|(&a, &b)| GammaFactor::new(a, b))
            .collect::<Result<Vec<_>>>()?;
        Self::new(m, parity, factors)
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn factors(&self) -> &[GammaFactor] {
        &self.factors
    }

    /// Number of gamma-pair factors, M.
    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    /// Exponent of the power prefactor: 2m+1 or 2m.
    pub fn power(&self) -> u32 {
        match self.parity {
            Parity::OddPower => 2 * self.m + 1,
            Parity::EvenPower => 2 * self.m,
        }
    }

    pub fn alpha_sum(&self) -> f64 {
        self.factors.iter().map(|f| f.alpha).sum()
    }

    pub fn beta_sum(&self) -> f64 {
        self.factors.iter().map(|f| f.beta).sum()
    }

    /// Reciprocal gamma product without the power prefactor.
    pub fn reciprocal_product_at(&self, x: f64) -> f64 {
        self.factors.iter().map(|f| f.reciprocal_at(x)).product()
    }

    /// The full integrand f(x) (or h(x)) on the real line.
    pub fn value_at(&self, x: f64) -> f64 {
        x.powi(self.power() as i32) * self.reciprocal_product_at(x)
    }

    /// Algebraic decay exponent r of |f(x)| ~ x^(−r) on the real axis
    /// (envelope of the oscillating sine factors).
    pub fn decay_rate(&self) -> f64 {
        2.0 * self.alpha_sum() - self.power() as f64 - self.factor_count() as f64
    }

    /// Derivatives f⁽ˢ⁾(0), s = 0..count, of the full integrand.
    pub fn taylor_derivatives(&self, count: usize) -> Result<Vec<f64>> {
        let power = self.power() as usize;
        let needed = if count > power {
            (count - 1 - power) / 2
        } else {
            0
        };
        let series = product_family_coeffs(self, needed)?;
        Ok((0..count)
            .map(|s| {
                if s < power || (s - power) % 2 == 1 {
                    0.0
                } else {
                    factorial(s as u32) * series.c((s - power) / 2)
                }
            })
            .collect())
    }
}

/// Even-power Maclaurin coefficients c[s] = a_s/(2s)! of a reciprocal gamma
/// product, for s = 0..=S.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesCoefficients {
    c: Vec<f64>,
}

impl SeriesCoefficients {
    /// Wraps a caller-supplied coefficient list (c[0] must be nonzero).
    pub fn from_even_coefficients(c: Vec<f64>) -> Result<Self> {
        match c.first() {
            None => Err(Error::InvalidInput("coefficient list is empty")),
            Some(&c0) if c0 == 0.0 => Err(Error::InvalidInput("leading coefficient is zero")),
            Some(_) if c.iter().any(|v| !v.is_finite()) => Err(Error::InvalidInput(
                "coefficient list has non-finite entries",
            )),
            Some(_) => Ok(SeriesCoefficients { c }),
        }
    }

    /// Coefficient of x^(2s).
    pub fn c(&self, s: usize) -> f64 {
        self.c[s]
    }

    /// a_s = (2s)!·c[s], the 2s-th derivative at the origin.
    pub fn derivative(&self, s: usize) -> f64 {
        factorial(2 * s as u32) * self.c[s]
    }

    /// Truncation order S (the list holds S + 1 entries).
    pub fn order(&self) -> usize {
        self.c.len() - 1
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.c
    }
}

fn check_order(order: usize) -> Result<()> {
    if order > MAX_SERIES_ORDER {
        Err(Error::SeriesOrder {
            order,
            max: MAX_SERIES_ORDER,
        })
    } else {
        Ok(())
    }
}

/// Taylor coefficients g_n of 1/Γ(α + t) for n = 0..=len-1.
///
/// G′ = −ψ(α + t) G gives (n+1) g_{n+1} = −Σ_{j≤n} [ψ⁽ʲ⁾(α)/j!] g_{n−j}.
fn reciprocal_gamma_taylor(alpha: f64, len: usize) -> Vec<f64> {
    let mut psi = Vec::with_capacity(len);
    for j in 0..len.saturating_sub(1) {
        psi.push(polygamma_unchecked(j as u32, alpha) / factorial(j as u32));
    }
    let mut g = vec![0.0; len];
    if len == 0 {
        return g;
    }
    g[0] = rgamma(alpha);
    for n in 0..len - 1 {
        let s: f64 = (0..=n).map(|j| psi[j] * g[n - j]).sum();
        g[n + 1] = -s / (n + 1) as f64;
    }
    g
}

/// All Maclaurin coefficients (odd powers included) of
/// 1/(Γ(α+βx)Γ(α−βx)) up to x^(2·order); odd entries should vanish.
pub fn factor_full_series(factor: &GammaFactor, order: usize) -> Result<Vec<f64>> {
    check_order(order)?;
    let len = 2 * order + 1;
    let g = reciprocal_gamma_taylor(factor.alpha, len);
    let mut beta_pow = vec![1.0; len];
    for n in 1..len {
        beta_pow[n] = beta_pow[n - 1] * factor.beta;
    }
    // G(βx) G(−βx): coefficient of x^k is β^k Σ_{i+j=k} (−1)^j g_i g_j
    Ok((0..len)
        .map(|k| {
            let s: f64 = (0..=k)
                .map(|j| {
                    let v = g[k - j] * g[j];
                    if j % 2 == 0 {
                        v
                    } else {
                        -v
                    }
                })
                .sum();
            s * beta_pow[k]
        })
        .collect())
}

fn reduce_to_even(full: &[f64]) -> Result<SeriesCoefficients> {
    let scale = full[0].abs();
    for (k, v) in full.iter().enumerate().skip(1).step_by(2) {
        if v.abs() > ODD_CANCELLATION_TOL * scale {
            return Err(Error::OddCoefficient {
                power: k,
                residual: *v,
            });
        }
    }
    SeriesCoefficients::from_even_coefficients(full.iter().step_by(2).copied().collect())
}

/// c[s], s = 0..=order, for a single factor 1/(Γ(α+βx)Γ(α−βx)).
pub fn reciprocal_gamma_series(factor: &GammaFactor, order: usize) -> Result<SeriesCoefficients> {
    reduce_to_even(&factor_full_series(factor, order)?)
}

/// Full-parity Cauchy product of every factor's series up to x^(2·order).
pub fn family_full_series(family: &GammaProductFamily, order: usize) -> Result<Vec<f64>> {
    check_order(order)?;
    let mut acc: Option<Vec<f64>> = None;
    for f in family.factors() {
        let s = factor_full_series(f, order)?;
        acc = Some(match acc {
            None => s,
            Some(prev) => cauchy(&prev, &s),
        });
    }
    Ok(acc.expect("family has at least one factor"))
}

fn cauchy(a: &[f64], b: &[f64]) -> Vec<f64> {
    (0..a.len())
        .map(|k| (0..=k).map(|i| a[i] * b[k - i]).sum())
        .collect()
}

/// c[s] = a_s^(M)/(2s)!, s = 0..=order, of the whole reciprocal product.
pub fn product_family_coeffs(
    family: &GammaProductFamily,
    order: usize,
) -> Result<SeriesCoefficients> {
    reduce_to_even(&family_full_series(family, order)?)
}

/// a_s^(M) for s ∈ {0, 1, 2} from the explicit polygamma formulas.
///
/// Used as an independent cross-check on [`product_family_coeffs`].
pub fn closed_form_coeff(family: &GammaProductFamily, s: usize) -> Result<f64> {
    let gamma_sq: f64 = family
        .factors()
        .iter()
        .map(|f| rgamma(f.alpha).powi(2))
        .product();
    match s {
        0 => Ok(gamma_sq),
        1 => {
            let sum: f64 = family
                .factors()
                .iter()
                .map(|f| f.beta * f.beta * polygamma_unchecked(1, f.alpha))
                .sum();
            Ok(-2.0 * gamma_sq * sum)
        }
        2 => {
            let mut diag = 0.0;
            let mut cross = 0.0;
            let f = family.factors();
            for (i, fi) in f.iter().enumerate() {
                let t1 = polygamma_unchecked(1, fi.alpha);
                let t3 = polygamma_unchecked(3, fi.alpha);
                diag += fi.beta.powi(4) * (12.0 * t1 * t1 - 2.0 * t3);
                for fj in &f[i + 1..] {
                    cross +=
                        fi.beta.powi(2) * t1 * fj.beta.powi(2) * polygamma_unchecked(1, fj.alpha);
                }
            }
            Ok(gamma_sq * (diag + 24.0 * cross))
        }
        _ => Err(Error::ClosedFormIndex { s }),
    }
}

/// Exponential type τ = π Σ βₖ.
pub fn exponential_type(family: &GammaProductFamily) -> f64 {
    core::f64::consts::PI * family.beta_sum()
}

const TYPE_ESTIMATE_SAMPLES: usize = 64;
/// Largest y_max accepted by [`estimate_exponential_type`].
pub const MAX_TYPE_ESTIMATE_Y: f64 = 1e6;

/// Least-squares slope of ln|F(iy)| over y ∈ [y_max/2, y_max], where F is
/// the reciprocal gamma product (the power prefactor only adds a log term).
pub fn estimate_exponential_type(family: &GammaProductFamily, y_max: f64) -> Result<f64> {
    if !(y_max >= 20.0) {
        return Err(Error::Domain {
            what: "estimate_exponential_type y_max (needs >= 20)",
            value: y_max,
        });
    }
    if y_max > MAX_TYPE_ESTIMATE_Y {
        return Err(Error::Domain {
            what: "estimate_exponential_type y_max (too large)",
            value: y_max,
        });
    }
    let lo = 0.5 * y_max;
    let n = TYPE_ESTIMATE_SAMPLES;
    let mut pts = Vec::with_capacity(n);
    for i in 0..n {
        let y = lo + (y_max - lo) * i as f64 / (n - 1) as f64;
        // |Γ(α + iβy)Γ(α − iβy)| = |Γ(α + iβy)|²
        let mut ln_mag = 0.0;
        for f in family.factors() {
            let lg = ln_gamma_complex(Complex64::new(f.alpha, f.beta * y))?;
            ln_mag -= 2.0 * lg.re;
        }
        pts.push((y, ln_mag));
    }
    let mean_y = pts.iter().map(|p| p.0).sum::<f64>() / n as f64;
    let mean_v = pts.iter().map(|p| p.1).sum::<f64>() / n as f64;
    let (mut sxy, mut sxx) = (0.0, 0.0);
    for &(y, v) in &pts {
        sxy += (y - mean_y) * (v - mean_v);
        sxx += (y - mean_y) * (y - mean_y);
    }
    Ok(sxy / sxx)
}
