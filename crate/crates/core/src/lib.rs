//! Exact Hankel transforms of reciprocal gamma-product integrands.
//!
//! For f(x) = x^(2m+1) / ∏ Γ(αₖ + βₖx)Γ(αₖ − βₖx) (or with x^(2m)) and
//! λ at least the exponential type τ = π Σβₖ, the transform
//! ∫₀^∞ f(x) J_ν(λx) dx is a finite sum in powers of 2/λ, or exactly zero.
//! This crate evaluates those sums, the Maclaurin coefficients they need,
//! and an independent quadrature of the integral for comparison.
//!
//! `no_std` with `alloc`.

#![no_std]
// `Float` imports are marked allowed: whenever std is linked (tests, or a
// dependent enabling num-traits/std) the inherent f64 methods shadow them.

extern crate alloc;

pub mod error;
pub mod exp_type;
pub mod pae;
pub mod quadrature;
pub mod special;

pub use error::{Error, Result};
pub use exp_type::{
    closed_form_coeff, estimate_exponential_type, exponential_type, product_family_coeffs,
    GammaFactor, GammaProductFamily, Parity, SeriesCoefficients,
};
pub use pae::{
    check_restrictions, evaluate, generic_pae, hankel_even_order, hankel_odd_order,
    pi_identity_check, EvaluationResult, HankelQuery, PiIdentityVariant, Regime, RestrictionPolicy,
    RestrictionReport, Term,
};
pub use quadrature::{
    family_integrand, gauss_legendre, hankel_quadrature, DecayClass, Integrand, QuadratureResult,
};
pub use special::BesselOrder;
