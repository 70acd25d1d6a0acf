use core::fmt;

use crate::pae::RestrictionReport;

/// Errors raised by the special-function kernel, the coefficient engine,
/// the closed-form evaluators and the quadrature oracle.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the domain of the function.
    Domain { what: &'static str, value: f64 },
    /// `ln Γ(z)` was requested at a pole (a nonpositive real integer).
    Pole { re: f64 },
    /// Polygamma order above the supported maximum.
    PolygammaOrder { order: u32, max: u32 },
    /// Requested series truncation order above what the coefficient engine supports.
    SeriesOrder { order: usize, max: usize },
    /// An odd-power coefficient failed to cancel before parity reduction.
    OddCoefficient { power: usize, residual: f64 },
    /// Coefficient index not covered by the closed-form table.
    ClosedFormIndex { s: usize },
    /// Iterative refinement did not reach its tolerance.
    Convergence { what: &'static str, iterations: u32 },
    /// The integrand parity does not make `f(x) J_ν(λx)` odd.
    ParityMismatch { nu: u32, odd_power: bool },
    /// A hypothesis of the closed form is violated; the report says which one.
    Restriction(RestrictionReport),
    /// Malformed construction input (empty factor list, mismatched lengths, ...).
    InvalidInput(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain { what, value } => write!(f, "{what}: argument {value} out of domain"),
            Error::Pole { re } => write!(f, "ln_gamma: pole at z = {re}"),
            Error::PolygammaOrder { order, max } => {
                write!(f, "polygamma order {order} exceeds supported maximum {max}")
            }
            Error::SeriesOrder { order, max } => {
                write!(f, "series order {order} exceeds supported maximum {max}")
            }
            Error::OddCoefficient { power, residual } => write!(
                f,
                "odd-power coefficient of x^{power} did not cancel (residual {residual:e})"
            ),
            Error::ClosedFormIndex { s } => {
                write!(f, "closed-form coefficient a_{s} is not tabulated (s <= 2)")
            }
            Error::Convergence { what, iterations } => {
                write!(f, "{what}: no convergence after {iterations} iterations")
            }
            Error::ParityMismatch { nu, odd_power } => {
                let power = if *odd_power { "odd" } else { "even" };
                write!(
                    f,
                    "integrand with {power} power prefactor and Bessel order {nu} is not odd"
                )
            }
            Error::Restriction(r) => write!(
                f,
                "restriction violated: lambda_ok={} (lambda={}, tau={}), alpha_ok={} (sum={}, bound={})",
                r.lambda_ok, r.lambda, r.tau, r.alpha_ok, r.alpha_sum, r.alpha_bound
            ),
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
