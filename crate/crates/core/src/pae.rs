//! Closed-form Hankel transforms of reciprocal gamma-product integrands.
//!
//! For λ ≥ τ the asymptotic expansion of ∫₀^∞ f(x) J_ν(λx) dx in powers of
//! 2/λ terminates, because the ratio Γ((ν+s+1)/2)/Γ((ν−s+1)/2) vanishes once
//! (ν−s+1)/2 reaches a nonpositive integer. The odd-power integrand pairs
//! with ν = 2l, the even-power one with ν = 2l+1.

use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::exp_type::{
    exponential_type, product_family_coeffs, GammaProductFamily, Parity, SeriesCoefficients,
    MAX_SERIES_ORDER,
};
use crate::quadrature::{family_integrand, hankel_quadrature, QuadratureResult};
use crate::special::{factorial, gamma_ratio, ln_gamma};

/// Relative width of the band around τ treated as λ = τ.
pub const BOUNDARY_RTOL: f64 = 1e-12;

/// Bessel order and transform parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HankelQuery {
    nu: u32,
    lambda: f64,
}

impl HankelQuery {
    pub fn new(nu: u32, lambda: f64) -> Result<Self> {
        check_lambda(lambda)?;
        Ok(HankelQuery { nu, lambda })
    }

    pub fn nu(&self) -> u32 {
        self.nu
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn is_even_order(&self) -> bool {
        self.nu % 2 == 0
    }

    /// l with ν = 2l or ν = 2l+1.
    pub fn l(&self) -> u32 {
        self.nu / 2
    }
}

fn check_lambda(lambda: f64) -> Result<()> {
    if lambda > 0.0 && lambda.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain {
            what: "lambda",
            value: lambda,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RestrictionReport {
    /// λ ≥ τ (counting the boundary band as equality).
    pub lambda_ok: bool,
    /// λ within [`BOUNDARY_RTOL`] of τ.
    pub lambda_boundary: bool,
    pub alpha_ok: bool,
    /// Σα must exceed this; NaN when no α condition applies.
    pub alpha_bound: f64,
    pub alpha_sum: f64,
    pub tau: f64,
    pub lambda: f64,
}

impl RestrictionReport {
    pub fn passed(&self) -> bool {
        self.lambda_ok && self.alpha_ok
    }
}

/// Whether a failed restriction aborts evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RestrictionPolicy {
    #[default]
    Enforce,
    /// Evaluate the terminating sum anyway; the report still records the failure.
    Override,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    Zero,
    Terminating,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Term {
    pub j: u32,
    pub term: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EvaluationResult {
    pub value: f64,
    pub regime: Regime,
    pub terms: Vec<Term>,
    pub restriction: RestrictionReport,
}

fn parity_for(nu: u32) -> Parity {
    if nu % 2 == 0 {
        Parity::OddPower
    } else {
        Parity::EvenPower
    }
}

fn lambda_flags(lambda: f64, tau: f64) -> (bool, bool) {
    let boundary = (lambda - tau).abs() <= BOUNDARY_RTOL * tau;
    (boundary || lambda > tau, boundary)
}

/// Hypotheses of the closed form for `family` at `query`.
pub fn check_restrictions(
    family: &GammaProductFamily,
    query: &HankelQuery,
) -> Result<RestrictionReport> {
    if family.parity() != parity_for(query.nu) {
        return Err(Error::ParityMismatch {
            nu: query.nu,
            odd_power: family.parity() == Parity::OddPower,
        });
    }
    let m = family.m() as f64;
    let big_m = family.factor_count() as f64;
    let alpha_bound = match family.parity() {
        Parity::OddPower => m + 0.5 * (big_m + 1.5),
        Parity::EvenPower => m + 0.5 * (big_m + 0.5),
    };
    let alpha_sum = family.alpha_sum();
    let tau = exponential_type(family);
    let (lambda_ok, lambda_boundary) = lambda_flags(query.lambda, tau);
    Ok(RestrictionReport {
        lambda_ok,
        lambda_boundary,
        alpha_ok: alpha_sum > alpha_bound,
        alpha_bound,
        alpha_sum,
        tau,
        lambda: query.lambda,
    })
}

/// a!/b! for a ≥ b.
pub fn factorial_ratio(a: u32, b: u32) -> f64 {
    debug_assert!(a >= b);
    if a <= 20 {
        let mut p: u64 = 1;
        for k in b + 1..=a {
            p *= k as u64;
        }
        p as f64
    } else {
        let top = ln_gamma(a as f64 + 1.0).expect("positive argument");
        let bottom = ln_gamma(b as f64 + 1.0).expect("positive argument");
        (top - bottom).exp()
    }
}

/// Terminating sum ½ Σ c_j (l+m+j)!/(jmax−j)! (2/λ)^(base+2j), j = 0..=jmax,
/// with c_j the Maclaurin coefficient of x^(2j) in the reciprocal product.
fn terminating_sum(
    coeffs: &SeriesCoefficients,
    m: u32,
    l: u32,
    jmax: u32,
    base: i32,
    lambda: f64,
    restriction: RestrictionReport,
) -> Result<EvaluationResult> {
    if jmax as usize > coeffs.order() {
        return Err(Error::SeriesOrder {
            order: jmax as usize,
            max: coeffs.order(),
        });
    }
    let two_over = 2.0 / lambda;
    let terms: Vec<Term> = (0..=jmax)
        .map(|j| {
            let ratio = factorial_ratio(l + m + j, jmax - j);
            let t = 0.5 * coeffs.c(j as usize) * ratio * two_over.powi(base + 2 * j as i32);
            Term { j, term: t }
        })
        .collect();
    Ok(EvaluationResult {
        value: terms.iter().map(|t| t.term).sum(),
        regime: Regime::Terminating,
        terms,
        restriction,
    })
}

fn zero_result(restriction: RestrictionReport) -> EvaluationResult {
    EvaluationResult {
        value: 0.0,
        regime: Regime::Zero,
        terms: Vec::new(),
        restriction,
    }
}

fn enforce(report: RestrictionReport, policy: RestrictionPolicy) -> Result<RestrictionReport> {
    if policy == RestrictionPolicy::Enforce && !report.passed() {
        Err(Error::Restriction(report))
    } else {
        Ok(report)
    }
}

/// ∫₀^∞ x^(2m+1)/∏Γ(α±βx) · J_{2l}(λx) dx.
pub fn hankel_even_order(
    family: &GammaProductFamily,
    l: u32,
    lambda: f64,
    policy: RestrictionPolicy,
) -> Result<EvaluationResult> {
    let query = HankelQuery::new(2 * l, lambda)?;
    let report = enforce(check_restrictions(family, &query)?, policy)?;
    let m = family.m();
    if l < m + 1 {
        return Ok(zero_result(report));
    }
    let jmax = l - m - 1;
    let coeffs = family_coeffs(family, jmax)?;
    terminating_sum(&coeffs, m, l, jmax, 2 * m as i32 + 2, lambda, report)
}

/// ∫₀^∞ x^(2m)/∏Γ(α±βx) · J_{2l+1}(λx) dx.
pub fn hankel_odd_order(
    family: &GammaProductFamily,
    l: u32,
    lambda: f64,
    policy: RestrictionPolicy,
) -> Result<EvaluationResult> {
    let query = HankelQuery::new(2 * l + 1, lambda)?;
    let report = enforce(check_restrictions(family, &query)?, policy)?;
    let m = family.m();
    if l < m {
        return Ok(zero_result(report));
    }
    let jmax = l - m;
    let coeffs = family_coeffs(family, jmax)?;
    terminating_sum(&coeffs, m, l, jmax, 2 * m as i32 + 1, lambda, report)
}

fn family_coeffs(family: &GammaProductFamily, jmax: u32) -> Result<SeriesCoefficients> {
    let order = jmax as usize;
    if order > MAX_SERIES_ORDER {
        return Err(Error::SeriesOrder {
            order,
            max: MAX_SERIES_ORDER,
        });
    }
    product_family_coeffs(family, order)
}

/// Dispatches on the parity of ν.
pub fn evaluate(
    family: &GammaProductFamily,
    query: &HankelQuery,
    policy: RestrictionPolicy,
) -> Result<EvaluationResult> {
    if query.is_even_order() {
        hankel_even_order(family, query.l(), query.lambda, policy)
    } else {
        hankel_odd_order(family, query.l(), query.lambda, policy)
    }
}

fn raw_report(lambda: f64, tau: f64, policy: RestrictionPolicy) -> Result<RestrictionReport> {
    check_lambda(lambda)?;
    if !(tau >= 0.0 && tau.is_finite()) {
        return Err(Error::Domain {
            what: "tau",
            value: tau,
        });
    }
    let (_, boundary) = lambda_flags(lambda, tau);
    let report = RestrictionReport {
        lambda_ok: lambda > tau && !boundary,
        lambda_boundary: boundary,
        alpha_ok: true,
        alpha_bound: f64::NAN,
        alpha_sum: f64::NAN,
        tau,
        lambda,
    };
    enforce(report, policy)
}

/// Even-order closed form for an integrand x^(2m+1)·h(x) with h even, given
/// h's even Maclaurin coefficients and its exponential type τ.
pub fn hankel_even_order_coeffs(
    coeffs: &SeriesCoefficients,
    tau: f64,
    m: u32,
    l: u32,
    lambda: f64,
    policy: RestrictionPolicy,
) -> Result<EvaluationResult> {
    let report = raw_report(lambda, tau, policy)?;
    if l < m + 1 {
        return Ok(zero_result(report));
    }
    terminating_sum(coeffs, m, l, l - m - 1, 2 * m as i32 + 2, lambda, report)
}

/// Odd-order closed form for an integrand x^(2m)·h(x) with h even.
pub fn hankel_odd_order_coeffs(
    coeffs: &SeriesCoefficients,
    tau: f64,
    m: u32,
    l: u32,
    lambda: f64,
    policy: RestrictionPolicy,
) -> Result<EvaluationResult> {
    let report = raw_report(lambda, tau, policy)?;
    if l < m {
        return Ok(zero_result(report));
    }
    terminating_sum(coeffs, m, l, l - m, 2 * m as i32 + 1, lambda, report)
}

/// Partial sums of ½ Σ f⁽ˢ⁾(0)/s! · Γ((ν+s+1)/2)/Γ((ν−s+1)/2) · (2/λ)^(s+1)
/// over s = 0..n−1, with `derivs[s]` = f⁽ˢ⁾(0).
pub fn generic_pae(derivs: &[f64], nu: u32, lambda: f64, n: usize) -> Result<Vec<f64>> {
    check_lambda(lambda)?;
    if n == 0 {
        return Err(Error::InvalidInput("generic_pae needs at least one term"));
    }
    if derivs.len() < n {
        return Err(Error::InvalidInput(
            "fewer derivatives than requested terms",
        ));
    }
    let two_over = 2.0 / lambda;
    let nu = nu as f64;
    let mut acc = 0.0;
    let mut out = Vec::with_capacity(n);
    for (s, &d) in derivs.iter().take(n).enumerate() {
        if d != 0.0 {
            let sf = s as f64;
            let ratio = gamma_ratio(0.5 * (nu + sf + 1.0), 0.5 * (nu - sf + 1.0))?;
            if ratio != 0.0 {
                acc += 0.5 * d / factorial(s as u32) * ratio * two_over.powi(s as i32 + 1);
            }
        }
        out.push(acc);
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PiIdentityVariant {
    /// x^(2m) J_{2m+1}(λx) over Γ(α±x)², α = m+n+½.
    OddOrder,
    /// x^(2m+1) J_{2m+2}(λx) over Γ(α±x)², α = m+n+½.
    EvenOrder,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PiIdentity {
    /// Prefactor times the oracle integral; close to 1/π.
    pub value: f64,
    pub prefactor: f64,
    pub quadrature: QuadratureResult,
}

/// Oracle tolerance used by [`pi_identity_check`].
pub const PI_IDENTITY_TOL: f64 = 1e-10;

/// Multiplies the quadrature value of the identity integral by its
/// normalising prefactor; the product should be 1/π.
pub fn pi_identity_check(
    m: u32,
    n: u32,
    lambda: f64,
    variant: PiIdentityVariant,
) -> Result<PiIdentity> {
    check_lambda(lambda)?;
    if n == 0 {
        return Err(Error::InvalidInput("pi identity needs n >= 1"));
    }
    let pi = core::f64::consts::PI;
    let alpha = m as f64 + n as f64 + 0.5;
    let (parity, nu) = match variant {
        PiIdentityVariant::OddOrder => (Parity::EvenPower, 2 * m + 1),
        PiIdentityVariant::EvenOrder => (Parity::OddPower, 2 * m + 2),
    };
    let family = GammaProductFamily::from_lists(m, parity, &[alpha], &[1.0])?;
    let query = HankelQuery::new(nu, lambda)?;
    let mut report = check_restrictions(&family, &query)?;
    if !(lambda > pi) || report.lambda_boundary {
        report.lambda_ok = false;
        return Err(Error::Restriction(report));
    }
    let double_fact: f64 = (1..=m + n).map(|k| (2 * k - 1) as f64).product();
    let mf = m as i32;
    let prefactor = match variant {
        PiIdentityVariant::OddOrder => {
            double_fact * double_fact * lambda.powi(2 * mf + 1)
                / (factorial(2 * m) * 2f64.powi(4 * mf + 2 * n as i32))
        }
        PiIdentityVariant::EvenOrder => {
            double_fact * double_fact * lambda.powi(2 * mf + 2)
                / (factorial(2 * m + 1) * 2f64.powi(4 * mf + 2 * n as i32 + 1))
        }
    };
    let quadrature = hankel_quadrature(&family_integrand(&family), nu, lambda, PI_IDENTITY_TOL)?;
    Ok(PiIdentity {
        value: prefactor * quadrature.value,
        prefactor,
        quadrature,
    })
}
