//! Brute-force oracle for ∫₀^∞ g(x) J_ν(λx) dx.
//!
//! The half-line is cut at the scaled Bessel zeros j_{ν,k}/λ. Each panel is
//! integrated with composite 32-point Gauss–Legendre, and the sequence of
//! partial sums is accelerated. Two accelerators run side by side:
//!
//! * Wynn's epsilon algorithm, for the usual case where panel contributions
//!   oscillate in sign;
//! * Richardson extrapolation in the panel endpoint X with the exponents
//!   X^(−p), X^(−p−1), … implied by an algebraic decay class. This handles
//!   the non-alternating tail that appears when a sine factor of the
//!   integrand beats exactly against the Bessel kernel.
//!
//! Convergence is declared when the last three differences between
//! successive estimates of one accelerator are all within `tol`. The error
//! estimate is the largest of those three.

use alloc::vec;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::special::{bessel_j, bessel_j_zero, BesselOrder};

/// Largest number of panels before giving up.
pub const PANEL_CAP: usize = 400;
/// Depth of the epsilon table (columns beyond the sequence itself).
pub const EPSILON_DEPTH: usize = 30;
/// Gauss–Legendre points per sub-panel.
pub const PANEL_POINTS: usize = 32;
/// Smallest tolerance the oracle accepts.
pub const MIN_TOLERANCE: f64 = 1e-12;

const MAX_BISECTIONS: u32 = 6;
const RICHARDSON_TERMS: usize = 7;
const MIN_PANELS_BEFORE_TEST: usize = 8;
const CONSECUTIVE_AGREEMENTS: usize = 3;

/// Nodes and weights of a Gauss–Legendre rule on [−1, 1].
#[derive(Debug, Clone, PartialEq)]
pub struct GaussRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussRule {
    /// ∫ₐᵇ f using this rule mapped to [a, b].
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F, a: f64, b: f64) -> f64 {
        let mid = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        half * self
            .nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(mid + half * x))
            .sum::<f64>()
    }
}

/// Gauss–Legendre rule with `npts` ∈ [2, 64] points.
pub fn gauss_legendre(npts: usize) -> Result<GaussRule> {
    if !(2..=64).contains(&npts) {
        return Err(Error::InvalidInput(
            "Gauss-Legendre order must be in [2, 64]",
        ));
    }
    let n = npts;
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let pi = core::f64::consts::PI;
    for i in 0..(n + 1) / 2 {
        // Tricomi initial guess, then Newton on P_n
        let mut x = (pi * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() <= 1e-16 {
                break;
            }
        }
        let (_, d) = legendre(n, x);
        if d != 0.0 {
            dp = d;
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    Ok(GaussRule { nodes, weights })
}

/// (P_n(x), P_n′(x)) by the three-term recurrence.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// How the integrand decays on the real axis; drives tail extrapolation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DecayClass {
    /// |g(x)| ~ x^(−rate), possibly modulated by bounded oscillation.
    Algebraic(f64),
    /// |g(x)| ~ e^(−rate·x).
    Exponential(f64),
}

/// The integrand without the Bessel kernel, plus its decay class.
pub struct Integrand<F> {
    pub sampler: F,
    pub decay: DecayClass,
}

impl<F: Fn(f64) -> f64> Integrand<F> {
    pub fn new(sampler: F, decay: DecayClass) -> Self {
        Integrand { sampler, decay }
    }
}

/// Gamma-product family as an oracle integrand.
pub fn family_integrand(
    family: &crate::exp_type::GammaProductFamily,
) -> Integrand<impl Fn(f64) -> f64 + '_> {
    Integrand::new(
        move |x| family.value_at(x),
        DecayClass::Algebraic(family.decay_rate()),
    )
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub error_estimate: f64,
    pub panels: usize,
    pub evals: usize,
    pub converged: bool,
}

/// Wynn epsilon estimate from the last `EPSILON_DEPTH + 1` partial sums.
///
/// Returns the deepest even-column entry that could be formed.
pub fn wynn_epsilon(seq: &[f64]) -> f64 {
    let start = seq.len().saturating_sub(EPSILON_DEPTH + 1);
    let window = &seq[start..];
    if window.len() < 3 {
        return window.last().copied().unwrap_or(0.0);
    }
    let mut prev: Vec<f64> = vec![0.0; window.len() + 1];
    let mut cur: Vec<f64> = window.to_vec();
    let mut best = *window.last().unwrap();
    let mut col = 0;
    while cur.len() > 1 {
        let mut next = Vec::with_capacity(cur.len() - 1);
        for i in 0..cur.len() - 1 {
            let d = cur[i + 1] - cur[i];
            if d == 0.0 || !d.is_finite() {
                // the column has converged exactly; nothing further to gain
                return if col % 2 == 0 {
                    cur[cur.len() - 1]
                } else {
                    best
                };
            }
            next.push(prev[i + 1] + 1.0 / d);
        }
        col += 1;
        prev = cur;
        cur = next;
        if col % 2 == 0 {
            let v = cur[cur.len() - 1];
            if v.is_finite() {
                best = v;
            } else {
                break;
            }
        }
    }
    best
}

/// Limit S of S_k ≈ S + Σⱼ dⱼ X_k^(−(p+j)) by exact collocation.
fn richardson(points: &[(f64, f64)], exponent: f64) -> Option<f64> {
    let n = points.len();
    let mut a = vec![vec![0.0; n + 1]; n];
    for (row, &(x, s)) in a.iter_mut().zip(points) {
        row[0] = 1.0;
        let inv = 1.0 / x;
        let mut p = inv.powf(exponent);
        for c in row.iter_mut().take(n).skip(1) {
            *c = p;
            p *= inv;
        }
        row[n] = s;
    }
    // Gaussian elimination with partial pivoting
    for col in 0..n {
        let piv =
            (col..n).max_by(|&i, &j| a[i][col].abs().partial_cmp(&a[j][col].abs()).unwrap())?;
        if a[piv][col] == 0.0 {
            return None;
        }
        a.swap(col, piv);
        for r in col + 1..n {
            let f = a[r][col] / a[col][col];
            if f != 0.0 {
                for c in col..=n {
                    a[r][c] -= f * a[col][c];
                }
            }
        }
    }
    let mut sol = vec![0.0; n];
    for r in (0..n).rev() {
        let mut s = a[r][n];
        for c in r + 1..n {
            s -= a[r][c] * sol[c];
        }
        sol[r] = s / a[r][r];
    }
    sol[0].is_finite().then_some(sol[0])
}

/// Tracks successive estimates of one accelerator.
#[derive(Default)]
struct Track {
    last: Option<f64>,
    diffs: Vec<f64>,
}

impl Track {
    fn push(&mut self, v: f64) {
        if let Some(prev) = self.last {
            self.diffs.push((v - prev).abs());
        }
        self.last = Some(v);
    }

    fn recent(&self) -> &[f64] {
        &self.diffs[self.diffs.len().saturating_sub(CONSECUTIVE_AGREEMENTS)..]
    }

    fn converged(&self, tol: f64) -> bool {
        self.diffs.len() >= CONSECUTIVE_AGREEMENTS && self.recent().iter().all(|&d| d <= tol)
    }

    /// Largest of the recent successive differences.
    fn quality(&self) -> f64 {
        if self.diffs.is_empty() {
            f64::INFINITY
        } else {
            self.recent().iter().fold(0.0, |a: f64, &d| a.max(d))
        }
    }
}

struct PanelIntegrator<'a, F> {
    g: &'a F,
    nu: BesselOrder,
    lambda: f64,
    rule: GaussRule,
    evals: usize,
    tol: f64,
}

impl<F: Fn(f64) -> f64> PanelIntegrator<'_, F> {
    fn composite(&mut self, a: f64, b: f64, pieces: usize) -> f64 {
        let h = (b - a) / pieces as f64;
        let (g, nu, lambda) = (self.g, self.nu, self.lambda);
        let mut s = 0.0;
        for i in 0..pieces {
            let lo = a + h * i as f64;
            let hi = if i + 1 == pieces { b } else { lo + h };
            s += self
                .rule
                .integrate(|x| g(x) * bessel_j(nu, lambda * x), lo, hi);
        }
        self.evals += pieces * self.rule.nodes.len();
        s
    }

    /// Bisects the panel until two successive composite estimates agree to tol/10.
    fn panel(&mut self, a: f64, b: f64) -> f64 {
        let mut pieces = 1;
        let mut est = self.composite(a, b, pieces);
        for _ in 0..MAX_BISECTIONS {
            pieces *= 2;
            let refined = self.composite(a, b, pieces);
            let done =
                (refined - est).abs() <= (0.1 * self.tol).max(4.0 * f64::EPSILON * refined.abs());
            est = refined;
            if done {
                break;
            }
        }
        est
    }
}

/// ∫₀^∞ g(x) J_ν(λx) dx by partition–extrapolation.
pub fn hankel_quadrature<F: Fn(f64) -> f64>(
    g: &Integrand<F>,
    nu: u32,
    lambda: f64,
    tol: f64,
) -> Result<QuadratureResult> {
    if !(lambda > 0.0 && lambda.is_finite()) {
        return Err(Error::Domain {
            what: "hankel_quadrature lambda",
            value: lambda,
        });
    }
    if !(tol >= MIN_TOLERANCE) || !tol.is_finite() {
        return Err(Error::Domain {
            what: "hankel_quadrature tol",
            value: tol,
        });
    }
    let order = BesselOrder(nu);
    let mut integ = PanelIntegrator {
        g: &g.sampler,
        nu: order,
        lambda,
        rule: gauss_legendre(PANEL_POINTS)?,
        evals: 0,
        tol,
    };

    let richardson_exponent = match g.decay {
        // non-oscillatory remainder ~ X^(1/2 − r) once the J_ν envelope is included
        DecayClass::Algebraic(r) if r > 0.5 => Some(r - 0.5),
        _ => None,
    };
    let exponential = matches!(g.decay, DecayClass::Exponential(_));

    let first_zero = bessel_j_zero(order, 1)? / lambda;
    let split = (1.0 / lambda).min(0.5 * first_zero);
    let mut total = integ.panel(0.0, split) + integ.panel(split, first_zero);
    let mut sums = vec![total];
    let mut ends = vec![first_zero];
    let mut last_panel = total.abs();

    let mut eps_track = Track::default();
    let mut rich_track = Track::default();
    let mut raw_small = 0usize;
    let mut left = first_zero;

    for k in 2..=PANEL_CAP {
        let right = bessel_j_zero(order, k as u32)? / lambda;
        let contrib = integ.panel(left, right);
        total += contrib;
        sums.push(total);
        ends.push(right);
        left = right;

        if exponential {
            raw_small = if contrib.abs() <= 0.1 * tol && last_panel <= 0.1 * tol {
                raw_small + 1
            } else {
                0
            };
            if raw_small >= 2 {
                return Ok(QuadratureResult {
                    value: total,
                    error_estimate: contrib.abs() + last_panel,
                    panels: k,
                    evals: integ.evals,
                    converged: true,
                });
            }
        }
        last_panel = contrib.abs();

        if k < MIN_PANELS_BEFORE_TEST {
            continue;
        }
        eps_track.push(wynn_epsilon(&sums));
        if let Some(p) = richardson_exponent {
            if let Some(v) = richardson_estimate(&sums, &ends, p) {
                rich_track.push(v);
            }
        }

        let candidates = [&eps_track, &rich_track];
        let winner = candidates
            .iter()
            .filter(|t| t.converged(tol))
            .min_by(|a, b| a.quality().partial_cmp(&b.quality()).unwrap());
        if let Some(t) = winner {
            return Ok(QuadratureResult {
                value: t.last.unwrap(),
                error_estimate: t.quality(),
                panels: k,
                evals: integ.evals,
                converged: true,
            });
        }
    }

    let best = [&eps_track, &rich_track]
        .into_iter()
        .filter(|t| t.last.is_some())
        .min_by(|a, b| a.quality().partial_cmp(&b.quality()).unwrap());
    let (value, err) = match best {
        Some(t) => (t.last.unwrap(), t.quality()),
        None => (total, f64::INFINITY),
    };
    Ok(QuadratureResult {
        value,
        error_estimate: err,
        panels: PANEL_CAP,
        evals: integ.evals,
        converged: false,
    })
}

/// Richardson limit from partial sums at geometrically spaced panels
/// (ratio √2) ending at the latest one.
fn richardson_estimate(sums: &[f64], ends: &[f64], exponent: f64) -> Option<f64> {
    let last = sums.len() - 1;
    let mut idx: Vec<usize> = Vec::with_capacity(RICHARDSON_TERMS);
    let mut pos = (last + 1) as f64;
    for _ in 0..RICHARDSON_TERMS {
        let i = (pos.round() as usize).checked_sub(1)?;
        if idx.last() == Some(&i) {
            return None;
        }
        idx.push(i);
        pos /= core::f64::consts::SQRT_2;
    }
    if *idx.last()? < 1 {
        return None;
    }
    let pts: Vec<(f64, f64)> = idx.iter().map(|&i| (ends[i], sums[i])).collect();
    richardson(&pts, exponent)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_point_rule() {
        let r = gauss_legendre(2).unwrap();
        let s = 1.0 / 3f64.sqrt();
        assert!((r.nodes[0] + s).abs() < 1e-15 && (r.nodes[1] - s).abs() < 1e-15);
        assert!((r.weights[0] - 1.0).abs() < 1e-15 && (r.weights[1] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn weights_sum_to_two() {
        for n in 2..=64 {
            let r = gauss_legendre(n).unwrap();
            let s: f64 = r.weights.iter().sum();
            assert!((s - 2.0).abs() <= 1e-14, "n={n}: {s}");
        }
    }

    #[test]
    fn exactness_degree() {
        let r = gauss_legendre(3).unwrap();
        assert!((r.integrate(|x| x.powi(4), -1.0, 1.0) - 0.4).abs() <= 1e-14);
        for n in [2usize, 5, 16, 32, 64] {
            let r = gauss_legendre(n).unwrap();
            let top = 2 * n - 1;
            for d in [top - 1, top] {
                let want = if d % 2 == 0 {
                    2.0 / (d as f64 + 1.0)
                } else {
                    0.0
                };
                let got = r.integrate(|x| x.powi(d as i32), -1.0, 1.0);
                assert!((got - want).abs() <= 1e-13, "n={n} d={d}");
            }
        }
        // the defect at degree 2n shrinks like 4^(−n); visible in f64 for small n
        for n in [2usize, 3, 5, 8] {
            let r = gauss_legendre(n).unwrap();
            let d = 2 * n;
            let want = 2.0 / (d as f64 + 1.0);
            let got = r.integrate(|x| x.powi(d as i32), -1.0, 1.0);
            assert!(
                (got - want).abs() > 1e-12,
                "n={n} should be inexact at degree {d}"
            );
        }
    }

    #[test]
    fn rule_order_bounds() {
        assert!(gauss_legendre(1).is_err());
        assert!(gauss_legendre(65).is_err());
    }

    #[test]
    fn epsilon_on_alternating_harmonic() {
        // 1 − 1/2 + 1/3 − … = ln 2
        let mut s = 0.0;
        let seq: Vec<f64> = (1..=20)
            .map(|k| {
                let t = 1.0 / k as f64;
                s += if k % 2 == 1 { t } else { -t };
                s
            })
            .collect();
        assert!((wynn_epsilon(&seq) - 2f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn richardson_recovers_algebraic_limit() {
        let pts: Vec<(f64, f64)> = [4.0, 8.0, 16.0, 32.0, 64.0]
            .iter()
            .map(|&x: &f64| {
                (
                    x,
                    1.0 + 2.0 * x.powf(-0.5) - 0.3 * x.powf(-1.5) + 0.1 * x.powf(-2.5),
                )
            })
            .collect();
        let v = richardson(&pts, 0.5).unwrap();
        assert!((v - 1.0).abs() < 1e-13);
    }

    #[test]
    fn bad_arguments() {
        let g = Integrand::new(|x: f64| (-x).exp(), DecayClass::Exponential(1.0));
        assert!(hankel_quadrature(&g, 0, 0.0, 1e-10).is_err());
        assert!(hankel_quadrature(&g, 0, 1.0, 1e-13).is_err());
    }
}
