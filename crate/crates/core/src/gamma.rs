//! Log-gamma via the Lanczos approximation (g = 7, 9 terms), for real and
//! complex arguments. The complex form is what the large-argument Legendre
//! connection needs; the real form feeds the Bessel series.

use num_complex::Complex64;
use std::f64::consts::PI;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// ln Γ(z) for complex z (principal branch). Uses reflection for Re z < 0.5.
pub(crate) fn ln_gamma_complex(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        // Γ(z)Γ(1−z) = π / sin(πz)
        let pi_z = Complex64::new(PI, 0.0) * z;
        Complex64::new(PI.ln(), 0.0) - pi_z.sin().ln() - ln_gamma_complex(Complex64::new(1.0, 0.0) - z)
    } else {
        let zm1 = z - Complex64::new(1.0, 0.0);
        let mut acc = Complex64::new(LANCZOS[0], 0.0);
        for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
            acc += Complex64::new(c, 0.0) / (zm1 + Complex64::new(i as f64, 0.0));
        }
        let t = zm1 + Complex64::new(LANCZOS_G + 0.5, 0.0);
        0.5 * (2.0 * PI).ln() + (zm1 + Complex64::new(0.5, 0.0)) * t.ln() - t + acc.ln()
    }
}

/// ln Γ(x) for real x > 0.
pub(crate) fn ln_gamma(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    ln_gamma_complex(Complex64::new(x, 0.0)).re
}

/// Γ(x) for real x > 0.
pub(crate) fn gamma(x: f64) -> f64 {
    ln_gamma(x).exp()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn real_values() {
        assert!((gamma(1.0) - 1.0).abs() < 1e-14);
        assert!((gamma(0.5) - PI.sqrt()).abs() < 1e-14);
        assert!((gamma(5.0) - 24.0).abs() < 1e-12);
        assert!((gamma(3.5) - 3.323_350_970_447_842_6).abs() < 1e-13);
    }

    #[test]
    fn complex_reflection() {
        // |Γ(iy)|² = π/(y sinh πy)
        let y = 0.7;
        let lg = ln_gamma_complex(Complex64::new(0.0, y));
        let modulus_sq = (2.0 * lg.re).exp();
        let expect = PI / (y * (PI * y).sinh());
        assert!((modulus_sq - expect).abs() < 1e-13 * expect);
    }
}
