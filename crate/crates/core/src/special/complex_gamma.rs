use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};

// Lanczos approximation, g = 7, nine terms.
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

fn lanczos_ln_gamma(z: Complex64) -> Complex64 {
    let z = z - 1.0;
    let mut a = Complex64::new(LANCZOS[0], 0.0);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        a += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (z + 0.5) * t.ln() - t + a.ln() + super::LN_SQRT_2PI
}

/// ln sin(πz), stable for large |Im z|; the imaginary part is only
/// meaningful modulo 2π.
fn ln_sin_pi(z: Complex64) -> Complex64 {
    let pi = core::f64::consts::PI;
    if z.im.abs() < 1.0 {
        return (z * pi).sin().ln();
    }
    // for Im z > 0: sin(πz) = (i/2) e^{-iπz} (1 - e^{2iπz})
    let (w, conj) = if z.im > 0.0 {
        (z, false)
    } else {
        (z.conj(), true)
    };
    let i = Complex64::new(0.0, 1.0);
    let e2 = (i * w * (2.0 * pi)).exp();
    let r =
        -i * w * pi + (Complex64::new(1.0, 0.0) - e2).ln() + Complex64::new(-(2f64.ln()), pi / 2.0);
    if conj {
        r.conj()
    } else {
        r
    }
}

/// ln Γ(z) for complex z away from the poles.
///
/// For Re z ≥ 1/2 this is the analytic log-gamma (continuous from the
/// positive real axis). Left of that line it is obtained by reflection and
/// its imaginary part is fixed only up to a multiple of 2π; the real part,
/// ln|Γ(z)|, is unambiguous everywhere.
pub fn ln_gamma_complex(z: Complex64) -> Result<Complex64> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::Domain {
            what: "ln_gamma_complex",
            value: z.re,
        });
    }
    if z.im == 0.0 && z.re <= 0.0 && z.re == z.re.floor() {
        return Err(Error::Pole { re: z.re });
    }
    if z.re >= 0.5 {
        Ok(lanczos_ln_gamma(z))
    } else {
        // Γ(z) Γ(1 - z) = π / sin(πz)
        let pi = core::f64::consts::PI;
        let one_minus = Complex64::new(1.0, 0.0) - z;
        Ok(Complex64::new(pi.ln(), 0.0) - ln_sin_pi(z) - lanczos_ln_gamma(one_minus))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::ln_gamma;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn one_is_zero() {
        let v = ln_gamma_complex(c(1.0, 0.0)).unwrap();
        assert!(v.norm() < 1e-14, "{v}");
    }

    #[test]
    fn schwarz_reflection() {
        let z = c(2.0, 3.0);
        let a = ln_gamma_complex(z.conj()).unwrap();
        let b = ln_gamma_complex(z).unwrap().conj();
        assert!((a - b).norm() < 1e-14);
    }

    #[test]
    fn modulus_on_line_one_plus_iy() {
        // |Γ(1 + iy)|² = πy / sinh(πy)
        for &y in &[0.25, 1.0, 3.0, 10.0, 40.0] {
            let pi = core::f64::consts::PI;
            let want = (pi * y).ln() - (pi * y).sinh().ln();
            let got = 2.0 * ln_gamma_complex(c(1.0, y)).unwrap().re;
            assert!((got - want).abs() <= 1e-10 * want.abs().max(1.0), "y={y}");
        }
        let pi = core::f64::consts::PI;
        let at_one = (2.0 * ln_gamma_complex(c(1.0, 1.0)).unwrap().re).exp();
        assert!((at_one - pi / pi.sinh()).abs() < 1e-12);
        assert!((at_one - 0.272_029_055_0).abs() < 1e-10);
    }

    #[test]
    fn reflected_half_plane_modulus() {
        // |Γ(1/2 + iy)|² = π / cosh(πy), probe just left of the Lanczos line
        let pi = core::f64::consts::PI;
        for &y in &[0.5, 2.0, 30.0, 200.0] {
            let z = c(0.5 - 1e-9, y);
            let got = 2.0 * ln_gamma_complex(z).unwrap().re;
            let want = pi.ln() - (pi * y).cosh().ln();
            assert!(
                (got - want).abs() <= 1e-7 * want.abs().max(1.0),
                "y={y}: {got} {want}"
            );
        }
    }

    #[test]
    fn agrees_with_real_kernel() {
        for i in 1..=500 {
            let x = 0.1 * i as f64;
            let real = ln_gamma(x).unwrap();
            let cplx = ln_gamma_complex(c(x, 0.0)).unwrap();
            assert!(cplx.im.abs() < 1e-12);
            assert!(
                (cplx.re - real).abs() <= 1e-12 * real.abs().max(1.0),
                "x={x}"
            );
        }
    }

    #[test]
    fn poles_rejected() {
        assert!(matches!(
            ln_gamma_complex(c(0.0, 0.0)),
            Err(Error::Pole { .. })
        ));
        assert!(matches!(
            ln_gamma_complex(c(-3.0, 0.0)),
            Err(Error::Pole { .. })
        ));
        assert!(ln_gamma_complex(c(-3.0, 1e-3)).is_ok());
    }
}
