//! λ arguments: a number, `pi`, `pi*<rational>`, `<rational>*pi` or `pi/<number>`.

use std::f64::consts::PI;

fn number(s: &str) -> Result<f64, String> {
    let s = s.trim();
    s.parse::<f64>()
        .map_err(|_| format!("not a number: {s:?}"))
        .and_then(|v| {
            if v.is_finite() {
                Ok(v)
            } else {
                Err(format!("not finite: {s:?}"))
            }
        })
}

/// `a` or `a/b`.
fn rational(s: &str) -> Result<f64, String> {
    match s.split_once('/') {
        None => number(s),
        Some((a, b)) => {
            let d = number(b)?;
            if d == 0.0 {
                return Err(format!("zero denominator in {s:?}"));
            }
            Ok(number(a)? / d)
        }
    }
}

pub fn parse_lambda(input: &str) -> Result<f64, String> {
    let s = input.trim().to_ascii_lowercase();
    let v = if let Some(rest) = s.strip_prefix("pi") {
        let rest = rest.trim_start();
        if rest.is_empty() {
            PI
        } else if let Some(r) = rest.strip_prefix('*') {
            PI * rational(r)?
        } else if let Some(r) = rest.strip_prefix('/') {
            let d = number(r)?;
            if d == 0.0 {
                return Err(format!("zero denominator in {input:?}"));
            }
            PI / d
        } else {
            return Err(format!("cannot parse lambda {input:?}"));
        }
    } else if let Some(r) = s.strip_suffix("pi") {
        let r = r.trim_end();
        let r = r
            .strip_suffix('*')
            .ok_or_else(|| format!("cannot parse lambda {input:?}"))?;
        PI * rational(r)?
    } else {
        rational(&s)?
    };
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(format!("lambda must be positive and finite, got {input:?}"))
    }
}
