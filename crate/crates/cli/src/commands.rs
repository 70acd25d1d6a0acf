use std::time::Instant;

use hankel_exact::exp_type::MAX_SERIES_ORDER;
use hankel_exact::quadrature::MIN_TOLERANCE;
use hankel_exact::{
    check_restrictions, closed_form_coeff, evaluate, exponential_type, family_integrand,
    hankel_quadrature, pi_identity_check, product_family_coeffs, Error, GammaProductFamily,
    HankelQuery, Parity, PiIdentityVariant, RestrictionPolicy,
};
use rayon::prelude::*;

use crate::args::{
    CoeffsArgs, Command, EvalArgs, FamilyArgs, Format, Method, OrderArgs, ParityArg,
    PiIdentityArgs, SweepArgs, VariantArg,
};
use crate::lambda::parse_lambda;
use crate::report::{
    pi_csv, pi_text, regime_name, sweep_csv, sweep_text, CoeffCheck, CoeffOut, CoeffsReport,
    Comparison, EvalReport, PiIdentityOut, QuadOut, RestrictionOut, SweepRow, TermOut,
};
use crate::{json, Outcome, EXIT_NO_CONVERGENCE, EXIT_OK, EXIT_RESTRICTION, THREADS_ENV};

type CmdResult = Result<Outcome, String>;

pub fn dispatch(cmd: Command) -> Outcome {
    let r = match cmd {
        Command::Eval(a) => eval(&a),
        Command::Coeffs(a) => coeffs(&a),
        Command::Sweep(a) => sweep(&a),
        Command::PiIdentity(a) => pi_identity(&a),
    };
    r.unwrap_or_else(|msg| Outcome::usage(format!("error: {msg}")))
}

fn parity(p: ParityArg) -> Parity {
    match p {
        ParityArg::Odd => Parity::OddPower,
        ParityArg::Even => Parity::EvenPower,
    }
}

fn family(a: &FamilyArgs) -> Result<GammaProductFamily, String> {
    if a.alpha.len() != a.beta.len() {
        return Err(format!(
            "--alpha has {} entries but --beta has {}",
            a.alpha.len(),
            a.beta.len()
        ));
    }
    GammaProductFamily::from_lists(a.m, parity(a.parity), &a.alpha, &a.beta)
        .map_err(|e| e.to_string())
}

/// ν from `--nu`, or from `--l` (default 0) through the parity of the power.
fn order(o: &OrderArgs, p: ParityArg) -> Result<u32, String> {
    match (o.nu, p) {
        (Some(nu), ParityArg::Odd) if nu % 2 == 1 => Err(format!(
            "--parity odd needs an even Bessel order, got nu = {nu}"
        )),
        (Some(nu), ParityArg::Even) if nu % 2 == 0 => Err(format!(
            "--parity even needs an odd Bessel order, got nu = {nu}"
        )),
        (Some(nu), _) => Ok(nu),
        (None, ParityArg::Odd) => Ok(2 * o.l.unwrap_or(0)),
        (None, ParityArg::Even) => Ok(2 * o.l.unwrap_or(0) + 1),
    }
}

fn check_tol(tol: f64) -> Result<(), String> {
    if tol.is_finite() && tol >= MIN_TOLERANCE {
        Ok(())
    } else {
        Err(format!(
            "--tol must be finite and at least {MIN_TOLERANCE:e}, got {tol}"
        ))
    }
}

fn elapsed_ns(t: Instant) -> u64 {
    u64::try_from(t.elapsed().as_nanos()).unwrap_or(u64::MAX)
}

fn err(e: Error) -> String {
    e.to_string()
}

fn exit_code(restriction_ok: bool, converged: bool) -> i32 {
    if !restriction_ok {
        EXIT_RESTRICTION
    } else if !converged {
        EXIT_NO_CONVERGENCE
    } else {
        EXIT_OK
    }
}

fn warnings(restriction: &RestrictionOut, converged: bool) -> String {
    let mut s = String::new();
    if !restriction.lambda_ok {
        s.push_str(&format!(
            "warning: lambda does not exceed the exponential type {}; the closed form does not apply\n",
            restriction.tau
        ));
    }
    if !restriction.alpha_ok {
        s.push_str(&format!(
            "warning: alpha sum {} does not exceed {}; the closed form does not apply\n",
            restriction.alpha_sum, restriction.alpha_bound
        ));
    }
    if !converged {
        s.push_str("warning: quadrature did not reach the requested tolerance\n");
    }
    s
}

fn eval(a: &EvalArgs) -> CmdResult {
    let fam = family(&a.family)?;
    let nu = order(&a.order, a.family.parity)?;
    let lambda = parse_lambda(&a.lambda)?;
    check_tol(a.tol)?;
    let query = HankelQuery::new(nu, lambda).map_err(err)?;

    let mut closed = None;
    let mut time_closed_ns = 0;
    if a.method != Method::Quad {
        let t = Instant::now();
        let r = evaluate(&fam, &query, RestrictionPolicy::Override).map_err(err)?;
        time_closed_ns = elapsed_ns(t);
        closed = Some(r);
    }
    let restriction = match &closed {
        Some(r) => r.restriction,
        None => check_restrictions(&fam, &query).map_err(err)?,
    };

    let mut quad = None;
    let mut time_quad_ns = 0;
    if a.method != Method::Closed {
        let t = Instant::now();
        let q = hankel_quadrature(&family_integrand(&fam), nu, lambda, a.tol).map_err(err)?;
        time_quad_ns = elapsed_ns(t);
        quad = Some(q);
    }

    let value = match (&closed, &quad) {
        (Some(c), _) => c.value,
        (None, Some(q)) => q.value,
        (None, None) => unreachable!("at least one method runs"),
    };
    let comparison = match (&closed, &quad) {
        (Some(c), Some(q)) => {
            let abs_diff = (c.value - q.value).abs();
            let rel_diff = if c.value != 0.0 {
                abs_diff / c.value.abs()
            } else {
                abs_diff
            };
            Some(Comparison {
                abs_diff,
                rel_diff,
                time_closed_ns,
                time_quad_ns,
            })
        }
        _ => None,
    };
    let report = EvalReport {
        value,
        regime: closed.as_ref().map(|c| regime_name(c.regime)),
        terms: closed
            .as_ref()
            .map(|c| c.terms.iter().map(TermOut::from).collect()),
        nu,
        tau: restriction.tau,
        lambda,
        restriction: RestrictionOut::from(&restriction),
        quad: quad.as_ref().map(QuadOut::from),
        comparison,
    };
    let converged = quad.map_or(true, |q| q.converged);
    let stdout = match a.format {
        Format::Text => report.text(),
        Format::Json => json::to_string(&report) + "\n",
        Format::Csv => {
            let row = SweepRow {
                lambda,
                closed: closed.as_ref().map_or(f64::NAN, |c| c.value),
                quad: quad.map_or(f64::NAN, |q| q.value),
                abs_diff: comparison.map_or(f64::NAN, |c| c.abs_diff),
                quad_err: quad.map_or(f64::NAN, |q| q.error_estimate),
                panels: quad.map_or(0, |q| q.panels),
                time_closed_ns,
                time_quad_ns,
                converged,
                lambda_ok: restriction.lambda_ok,
            };
            sweep_csv(&[row])
        }
    };
    Ok(Outcome {
        stdout,
        stderr: warnings(&report.restriction, converged),
        code: exit_code(report.restriction.passed(), converged),
    })
}

fn coeffs(a: &CoeffsArgs) -> CmdResult {
    let fam = family(&a.family)?;
    if a.order > MAX_SERIES_ORDER {
        return Err(format!(
            "--order is at most {MAX_SERIES_ORDER}, got {}",
            a.order
        ));
    }
    let series = product_family_coeffs(&fam, a.order).map_err(err)?;
    let coefficients = (0..=a.order)
        .map(|s| CoeffOut {
            s,
            c: series.c(s),
            a: series.derivative(s),
        })
        .collect();
    let checks = (0..=a.order.min(2))
        .map(|s| {
            let closed = closed_form_coeff(&fam, s).map_err(err)?;
            let engine = series.derivative(s);
            let scale = closed.abs().max(f64::MIN_POSITIVE);
            Ok(CoeffCheck {
                s,
                engine,
                closed,
                rel_diff: (engine - closed).abs() / scale,
            })
        })
        .collect::<Result<Vec<_>, String>>()?;
    let report = CoeffsReport {
        m: fam.m(),
        parity: match a.family.parity {
            ParityArg::Odd => "odd",
            ParityArg::Even => "even",
        },
        tau: exponential_type(&fam),
        alpha_sum: fam.alpha_sum(),
        coefficients,
        checks,
    };
    let stdout = match a.format {
        Format::Text => report.text(),
        Format::Json => json::to_string(&report) + "\n",
        Format::Csv => report.csv(),
    };
    Ok(Outcome {
        stdout,
        stderr: String::new(),
        code: EXIT_OK,
    })
}

/// Worker count for the sweep pool; 0 lets rayon pick.
fn thread_count() -> Result<usize, String> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(0),
        Ok(v) if v.trim().is_empty() => Ok(0),
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| format!("{THREADS_ENV} must be a positive integer, got {v:?}")),
    }
}

fn sweep_row(fam: &GammaProductFamily, nu: u32, lambda: f64, tol: f64) -> Result<SweepRow, String> {
    let query = HankelQuery::new(nu, lambda).map_err(err)?;
    let t = Instant::now();
    let c = evaluate(fam, &query, RestrictionPolicy::Override).map_err(err)?;
    let time_closed_ns = elapsed_ns(t);
    let t = Instant::now();
    let q = hankel_quadrature(&family_integrand(fam), nu, lambda, tol).map_err(err)?;
    let time_quad_ns = elapsed_ns(t);
    Ok(SweepRow {
        lambda,
        closed: c.value,
        quad: q.value,
        abs_diff: (c.value - q.value).abs(),
        quad_err: q.error_estimate,
        panels: q.panels,
        time_closed_ns,
        time_quad_ns,
        converged: q.converged,
        lambda_ok: c.restriction.lambda_ok,
    })
}

fn sweep(a: &SweepArgs) -> CmdResult {
    let fam = family(&a.family)?;
    let nu = order(&a.order, a.family.parity)?;
    let lo = parse_lambda(&a.lambda_min)?;
    let hi = parse_lambda(&a.lambda_max)?;
    check_tol(a.tol)?;
    if !(lo < hi) {
        return Err(format!(
            "--lambda-min ({lo}) must be below --lambda-max ({hi})"
        ));
    }
    if a.steps < 2 {
        return Err(format!("--steps must be at least 2, got {}", a.steps));
    }
    let last = (a.steps - 1) as f64;
    let points: Vec<f64> = (0..a.steps)
        .map(|i| {
            if i + 1 == a.steps {
                hi
            } else {
                lo + (hi - lo) * i as f64 / last
            }
        })
        .collect();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(thread_count()?)
        .build()
        .map_err(|e| e.to_string())?;
    let rows = pool.install(|| {
        points
            .par_iter()
            .map(|&lam| sweep_row(&fam, nu, lam, a.tol))
            .collect::<Result<Vec<_>, String>>()
    })?;

    let all_converged = rows.iter().all(|r| r.converged);
    let stdout = match a.format {
        Format::Csv => sweep_csv(&rows),
        Format::Json => json::to_string(&rows) + "\n",
        Format::Text => sweep_text(&rows),
    };
    let stderr = if all_converged {
        String::new()
    } else {
        let bad = rows.iter().filter(|r| !r.converged).count();
        format!(
            "warning: quadrature did not converge at {bad} of {} points\n",
            rows.len()
        )
    };
    Ok(Outcome {
        stdout,
        stderr,
        code: if all_converged {
            EXIT_OK
        } else {
            EXIT_NO_CONVERGENCE
        },
    })
}

fn pi_identity(a: &PiIdentityArgs) -> CmdResult {
    let lambda = parse_lambda(&a.lambda)?;
    if a.n == 0 {
        return Err("--n must be at least 1".into());
    }
    let variants: &[(PiIdentityVariant, &'static str)] = match a.variant {
        VariantArg::OddOrder => &[(PiIdentityVariant::OddOrder, "odd-order")],
        VariantArg::EvenOrder => &[(PiIdentityVariant::EvenOrder, "even-order")],
        VariantArg::Both => &[
            (PiIdentityVariant::OddOrder, "odd-order"),
            (PiIdentityVariant::EvenOrder, "even-order"),
        ],
    };
    let mut rows = Vec::new();
    let mut restricted = false;
    let mut converged = true;
    for &(variant, name) in variants {
        let mut row = PiIdentityOut {
            variant: name,
            m: a.m,
            n: a.n,
            lambda,
            value: None,
            deviation: None,
            prefactor: None,
            quad: None,
            restriction: None,
        };
        match pi_identity_check(a.m, a.n, lambda, variant) {
            Ok(p) => {
                converged &= p.quadrature.converged;
                row.value = Some(p.value);
                row.deviation = Some(p.value - std::f64::consts::FRAC_1_PI);
                row.prefactor = Some(p.prefactor);
                row.quad = Some(QuadOut::from(&p.quadrature));
            }
            Err(Error::Restriction(r)) => {
                restricted = true;
                row.restriction = Some(RestrictionOut::from(&r));
            }
            Err(e) => return Err(err(e)),
        }
        rows.push(row);
    }
    let stdout = match a.format {
        Format::Text => pi_text(&rows),
        Format::Json => json::to_string(&rows) + "\n",
        Format::Csv => pi_csv(&rows),
    };
    let stderr = if restricted {
        "warning: the identities need lambda > pi\n".to_string()
    } else if !converged {
        "warning: quadrature did not reach the requested tolerance\n".to_string()
    } else {
        String::new()
    };
    Ok(Outcome {
        stdout,
        stderr,
        code: exit_code(!restricted, converged),
    })
}
