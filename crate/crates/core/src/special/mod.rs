//! Real (and a little complex) special-function kernel.
//!
//! Everything here is a pure function of its arguments. Constant tables are
//! `static`/`const` and never mutated.

mod bessel;
mod complex_gamma;
mod gamma;
mod polygamma;
mod zeros;

pub use bessel::bessel_j;
pub use complex_gamma::ln_gamma_complex;
pub use gamma::{factorial, gamma_ratio, ln_gamma, rgamma, sin_pi};
pub use polygamma::{polygamma, PolygammaOrder, MAX_POLYGAMMA_ORDER};
pub(crate) use polygamma::{polygamma_unchecked, MAX_INTERNAL_POLYGAMMA_ORDER};
pub use zeros::bessel_j_zero;

/// Non-negative integer order of a Bessel function of the first kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BesselOrder(pub u32);

impl BesselOrder {
    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }
}

impl From<u32> for BesselOrder {
    fn from(n: u32) -> Self {
        BesselOrder(n)
    }
}

pub(crate) const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
pub(crate) const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// Bernoulli numbers B_2, B_4, ..., B_20.
pub(crate) const BERNOULLI_EVEN: [f64; 10] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
];
