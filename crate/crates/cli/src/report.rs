//! Serializable report types and their text and CSV renderings.

use std::fmt::Write as _;

use hankel_exact::{QuadratureResult, Regime, RestrictionReport, Term};
use serde::Serialize;

use crate::json::float;

#[derive(Debug, Clone, Copy, Serialize)]
pub struct RestrictionOut {
    pub lambda_ok: bool,
    pub lambda_boundary: bool,
    pub alpha_ok: bool,
    pub alpha_bound: f64,
    pub alpha_sum: f64,
    pub tau: f64,
}

impl From<&RestrictionReport> for RestrictionOut {
    fn from(r: &RestrictionReport) -> Self {
        RestrictionOut {
            lambda_ok: r.lambda_ok,
            lambda_boundary: r.lambda_boundary,
            alpha_ok: r.alpha_ok,
            alpha_bound: r.alpha_bound,
            alpha_sum: r.alpha_sum,
            tau: r.tau,
        }
    }
}

impl RestrictionOut {
    pub fn passed(&self) -> bool {
        self.lambda_ok && self.alpha_ok
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct TermOut {
    pub j: u32,
    pub term: f64,
}

impl From<&Term> for TermOut {
    fn from(t: &Term) -> Self {
        TermOut {
            j: t.j,
            term: t.term,
        }
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct QuadOut {
    pub value: f64,
    pub error_estimate: f64,
    pub panels: usize,
    pub evals: usize,
    pub converged: bool,
}

impl From<&QuadratureResult> for QuadOut {
    fn from(q: &QuadratureResult) -> Self {
        QuadOut {
            value: q.value,
            error_estimate: q.error_estimate,
            panels: q.panels,
            evals: q.evals,
            converged: q.converged,
        }
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct Comparison {
    pub abs_diff: f64,
    pub rel_diff: f64,
    pub time_closed_ns: u64,
    pub time_quad_ns: u64,
}

pub fn regime_name(r: Regime) -> &'static str {
    match r {
        Regime::Zero => "zero",
        Regime::Terminating => "terminating",
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EvalReport {
    /// Closed-form value, or the quadrature value when only the oracle ran.
    pub value: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub regime: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub terms: Option<Vec<TermOut>>,
    pub nu: u32,
    pub tau: f64,
    pub lambda: f64,
    pub restriction: RestrictionOut,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quad: Option<QuadOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub comparison: Option<Comparison>,
}

fn restriction_text(out: &mut String, r: &RestrictionOut) {
    let _ = writeln!(out, "restriction");
    let _ = writeln!(
        out,
        "  lambda_ok        {}{}",
        r.lambda_ok,
        if r.lambda_boundary {
            " (on the boundary lambda = tau)"
        } else {
            ""
        }
    );
    let _ = writeln!(
        out,
        "  alpha_ok         {} (sum {} vs bound {})",
        r.alpha_ok, r.alpha_sum, r.alpha_bound
    );
}

fn quad_text(out: &mut String, q: &QuadOut) {
    let _ = writeln!(out, "quadrature");
    let _ = writeln!(out, "  value            {}", q.value);
    let _ = writeln!(out, "  error_estimate   {:e}", q.error_estimate);
    let _ = writeln!(out, "  panels           {}", q.panels);
    let _ = writeln!(out, "  evals            {}", q.evals);
    let _ = writeln!(out, "  converged        {}", q.converged);
}

impl EvalReport {
    pub fn text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "value    {}", self.value);
        if let Some(regime) = self.regime {
            let _ = writeln!(out, "regime   {regime}");
        }
        let _ = writeln!(out, "nu       {}", self.nu);
        let _ = writeln!(out, "tau      {}", self.tau);
        let _ = writeln!(out, "lambda   {}", self.lambda);
        if let Some(terms) = &self.terms {
            if !terms.is_empty() {
                let _ = writeln!(out, "terms");
                for t in terms {
                    let _ = writeln!(out, "  j={:<3} {}", t.j, t.term);
                }
            }
        }
        restriction_text(&mut out, &self.restriction);
        if let Some(q) = &self.quad {
            quad_text(&mut out, q);
        }
        if let Some(c) = &self.comparison {
            let _ = writeln!(out, "discrepancy");
            let _ = writeln!(out, "  abs              {:e}", c.abs_diff);
            let _ = writeln!(out, "  rel              {:e}", c.rel_diff);
            let _ = writeln!(out, "timing");
            let _ = writeln!(out, "  closed_ns        {}", c.time_closed_ns);
            let _ = writeln!(out, "  quad_ns          {}", c.time_quad_ns);
        }
        out
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct CoeffOut {
    pub s: usize,
    /// Coefficient of x^(2s).
    pub c: f64,
    /// (2s)!·c, the 2s-th derivative at the origin.
    pub a: f64,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct CoeffCheck {
    pub s: usize,
    pub engine: f64,
    pub closed: f64,
    pub rel_diff: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CoeffsReport {
    pub m: u32,
    pub parity: &'static str,
    pub tau: f64,
    pub alpha_sum: f64,
    pub coefficients: Vec<CoeffOut>,
    pub checks: Vec<CoeffCheck>,
}

impl CoeffsReport {
    pub fn text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "m {}  parity {}  tau {}  alpha_sum {}",
            self.m, self.parity, self.tau, self.alpha_sum
        );
        let _ = writeln!(out, "{:>3}  {:<26} {:<26}", "s", "c", "a");
        for c in &self.coefficients {
            let _ = writeln!(out, "{:>3}  {:<26} {:<26}", c.s, float(c.c), float(c.a));
        }
        let _ = writeln!(out, "check against polygamma formulas");
        for c in &self.checks {
            let _ = writeln!(
                out,
                "{:>3}  engine {}  closed {}  rel {:e}",
                c.s, c.engine, c.closed, c.rel_diff
            );
        }
        out
    }

    pub fn csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let _ = w.write_record(["s", "c", "a"]);
        for c in &self.coefficients {
            let _ = w.write_record([c.s.to_string(), float(c.c), float(c.a)]);
        }
        finish(w)
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct SweepRow {
    pub lambda: f64,
    pub closed: f64,
    pub quad: f64,
    pub abs_diff: f64,
    pub quad_err: f64,
    pub panels: usize,
    pub time_closed_ns: u64,
    pub time_quad_ns: u64,
    pub converged: bool,
    pub lambda_ok: bool,
}

pub const SWEEP_COLUMNS: [&str; 10] = [
    "lambda",
    "closed",
    "quad",
    "abs_diff",
    "quad_err",
    "panels",
    "time_closed_ns",
    "time_quad_ns",
    "converged",
    "lambda_ok",
];

impl SweepRow {
    fn record(&self) -> [String; 10] {
        [
            float(self.lambda),
            float(self.closed),
            float(self.quad),
            float(self.abs_diff),
            float(self.quad_err),
            self.panels.to_string(),
            self.time_closed_ns.to_string(),
            self.time_quad_ns.to_string(),
            self.converged.to_string(),
            self.lambda_ok.to_string(),
        ]
    }
}

pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let _ = w.write_record(SWEEP_COLUMNS);
    for r in rows {
        let _ = w.write_record(r.record());
    }
    finish(w)
}

pub fn sweep_text(rows: &[SweepRow]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<22} {:<24} {:<24} {:<10} {:<10} {:>6} {:>5}",
        "lambda", "closed", "quad", "abs_diff", "quad_err", "panels", "conv"
    );
    for r in rows {
        let _ = writeln!(
            out,
            "{:<22} {:<24} {:<24} {:<10.3e} {:<10.3e} {:>6} {:>5}",
            r.lambda, r.closed, r.quad, r.abs_diff, r.quad_err, r.panels, r.converged
        );
    }
    out
}

fn finish(w: csv::Writer<Vec<u8>>) -> String {
    let bytes = w.into_inner().expect("writing to memory cannot fail");
    String::from_utf8(bytes).expect("records are UTF-8")
}

#[derive(Debug, Clone, Serialize)]
pub struct PiIdentityOut {
    pub variant: &'static str,
    pub m: u32,
    pub n: u32,
    pub lambda: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub deviation: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prefactor: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quad: Option<QuadOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub restriction: Option<RestrictionOut>,
}

pub fn pi_text(rows: &[PiIdentityOut]) -> String {
    let mut out = String::new();
    for r in rows {
        let _ = writeln!(
            out,
            "{}  m {}  n {}  lambda {}",
            r.variant, r.m, r.n, r.lambda
        );
        if let (Some(v), Some(d)) = (r.value, r.deviation) {
            let _ = writeln!(out, "  value            {v}");
            let _ = writeln!(out, "  1/pi             {}", std::f64::consts::FRAC_1_PI);
            let _ = writeln!(out, "  deviation        {d:e}");
        }
        if let Some(q) = &r.quad {
            let _ = writeln!(out, "  error_estimate   {:e}", q.error_estimate);
            let _ = writeln!(out, "  panels           {}", q.panels);
            let _ = writeln!(out, "  converged        {}", q.converged);
        }
        if let Some(rest) = &r.restriction {
            let _ = writeln!(
                out,
                "  not evaluated: lambda must exceed pi (tau {}, boundary {})",
                rest.tau, rest.lambda_boundary
            );
        }
    }
    out
}

pub fn pi_csv(rows: &[PiIdentityOut]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let _ = w.write_record([
        "variant",
        "m",
        "n",
        "lambda",
        "value",
        "deviation",
        "quad_err",
        "panels",
        "converged",
    ]);
    let opt = |v: Option<f64>| v.map(float).unwrap_or_default();
    for r in rows {
        let _ = w.write_record([
            r.variant.to_string(),
            r.m.to_string(),
            r.n.to_string(),
            float(r.lambda),
            opt(r.value),
            opt(r.deviation),
            opt(r.quad.map(|q| q.error_estimate)),
            r.quad.map(|q| q.panels.to_string()).unwrap_or_default(),
            r.quad.map(|q| q.converged.to_string()).unwrap_or_default(),
        ]);
    }
    finish(w)
}
