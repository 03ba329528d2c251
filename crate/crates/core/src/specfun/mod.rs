//! Special functions: the radial hypergeometric pair `𝒢_±`, Bessel `J_ν`
//! and `I_ν` with their first zeros and cross-product root `𝔥_ν`, and the
//! oscillation classifier for `w^K_−`.

pub(crate) mod hyper;

mod bessel;
mod oscillation;

pub use bessel::{bessel_first_zero, bessel_pair, cross_product_root};
pub use oscillation::{classify_w_minus, OscillationKind, OscillationVerdict};

use crate::error::{Error, Result};
use hyper::{eval_g, ParamPair, Radial};

/// Which of the two hypergeometric solutions `𝒢_±` is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// Parameters of the radial eigenvalue problem at trial eigenvalue `λ`.
///
/// `Λ_± = √((n−1)² ± 4λ²/κ²)`; the plus discriminant is always real and
/// `> n−1`, the minus one has `Λ₋² < 0` exactly when `λ > (n−1)κ/2`.
#[derive(Clone, Copy, Debug)]
pub struct HyperParams {
    pub n: u32,
    /// ν = n/2 − 1
    pub nu: f64,
    pub lambda: f64,
    pub kappa: f64,
    /// Λ₊ (real)
    pub lambda_plus: f64,
    /// Λ₋² (any sign; Λ₋ is imaginary when this is negative)
    pub lambda_minus_sq: f64,
}

impl HyperParams {
    pub fn new(n: u32, lambda: f64, kappa: f64) -> Result<Self> {
        if n < 2 {
            return Err(Error::domain(format!("dimension must be >= 2, got {n}")));
        }
        if !(lambda > 0.0) || !lambda.is_finite() {
            return Err(Error::domain(format!("lambda must be > 0, got {lambda}")));
        }
        if !(kappa > 0.0) || !kappa.is_finite() {
            return Err(Error::domain(format!("kappa must be > 0, got {kappa}")));
        }
        let nm1 = (n - 1) as f64;
        let ratio = 4.0 * lambda * lambda / (kappa * kappa);
        Ok(HyperParams {
            n,
            nu: n as f64 / 2.0 - 1.0,
            lambda,
            kappa,
            lambda_plus: (nm1 * nm1 + ratio).sqrt(),
            lambda_minus_sq: nm1 * nm1 - ratio,
        })
    }

    pub(crate) fn pair(&self, sign: Sign) -> ParamPair {
        let lambda_sq = match sign {
            Sign::Plus => self.lambda_plus * self.lambda_plus,
            Sign::Minus => self.lambda_minus_sq,
        };
        ParamPair { lambda_sq, c: self.n as f64 / 2.0 }
    }
}

/// `𝒢_±(ν, λ, t) = F((1−Λ_±)/2, (1+Λ_±)/2; n/2; −t)`.
///
/// Real for all admissible parameters, including the conjugate regime
/// `Λ₋ ∈ iℝ`. May overflow to `±inf` for enormous `t` (the scaled internal
/// form used by the spectral layer does not).
pub fn hyper_g(sign: Sign, p: &HyperParams, t: f64) -> Result<f64> {
    if !(t >= 0.0) || !t.is_finite() {
        return Err(Error::domain(format!("t must be finite and >= 0, got {t}")));
    }
    Ok(eval_g(p.pair(sign), Radial::from_t(t))?.value_unscaled())
}

/// `d/dt 𝒢_±(ν, λ, t)`, via the hypergeometric differentiation formula
/// applied to the shifted parameter pair.
pub fn hyper_g_prime(sign: Sign, p: &HyperParams, t: f64) -> Result<f64> {
    if !(t >= 0.0) || !t.is_finite() {
        return Err(Error::domain(format!("t must be finite and >= 0, got {t}")));
    }
    Ok(eval_g(p.pair(sign), Radial::from_t(t))?.d_t_unscaled())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(1e-300)
    }

    #[test]
    fn value_at_origin_is_one() {
        let p = HyperParams::new(3, 2.5, 1.0).unwrap();
        assert_eq!(hyper_g(Sign::Minus, &p, 0.0).unwrap(), 1.0);
        assert_eq!(hyper_g(Sign::Plus, &p, 0.0).unwrap(), 1.0);
    }

    #[test]
    fn derivative_at_origin_is_leading_coefficient() {
        // d/dt F(a,b;c;−t)|₀ = −ab/c with ab = (1−Λ²)/4
        for &(n, lam) in &[(2u32, 0.8f64), (3, 2.0), (4, 1.3)] {
            let p = HyperParams::new(n, lam, 1.0).unwrap();
            let c = n as f64 / 2.0;
            let ab = (1.0 - p.lambda_minus_sq) / 4.0;
            let d = hyper_g_prime(Sign::Minus, &p, 0.0).unwrap();
            assert!((d + ab / c).abs() < 1e-14);
        }
    }

    #[test]
    fn n3_reduction_formula() {
        // 𝒢₋(1/2, λ, t) = sin(Λ̃₋ ln(√t+√(1+t)))/(Λ̃₋ √t) for λ > κ
        let lam = 2.0;
        let p = HyperParams::new(3, lam, 1.0).unwrap();
        for &t in &[0.1, 0.9, 4.0, 111.0] {
            let s = f64::sqrt(t).asinh(); // = ln(√t + √(1+t))
            let lm = 2.0 * (lam * lam - 1.0).sqrt();
            let expect = (lm * s).sin() / (lm * t.sqrt());
            let got = hyper_g(Sign::Minus, &p, t).unwrap();
            assert!(rel(got, expect) < 1e-12, "t={t}");
        }
    }

    #[test]
    fn n3_prime_matches_symbolic_derivative() {
        // d/dt [sin(m s)/(m √t)] with s = asinh √t, m = Λ̃₋
        let lam = 2.0;
        let p = HyperParams::new(3, lam, 1.0).unwrap();
        let t: f64 = 1.0;
        let s = t.sqrt().asinh();
        let m = 2.0 * (lam * lam - 1.0f64).sqrt();
        let ds_dt = 1.0 / (2.0 * (t * (1.0 + t)).sqrt());
        let expect =
            (m * s).cos() * ds_dt / t.sqrt() - (m * s).sin() / (m * t.sqrt() * 2.0 * t);
        let got = hyper_g_prime(Sign::Minus, &p, t).unwrap();
        assert!(rel(got, expect) < 1e-12);
    }

    #[test]
    fn conjugate_pair_spot_value() {
        // independent complex-arithmetic series reference (50-digit mpmath)
        let p = HyperParams::new(2, 1.0, 1.0).unwrap();
        let got = hyper_g(Sign::Plus, &p, 0.5).unwrap();
        assert!(rel(got, 1.450_515_411_937_287_2) < 1e-12);
        let got = hyper_g(Sign::Minus, &p, 0.5).unwrap();
        assert!(rel(got, 0.635_492_882_363_294_2) < 1e-12);
    }

    #[test]
    fn prime_matches_finite_differences_on_sample() {
        // 100 quasi-random (n, λ, t) points; relative tolerance 1e−6
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for i in 0..100 {
            let n = 2 + (i % 3) as u32;
            let lam = 0.05 + 3.0 * next();
            let t = 0.01 + 20.0 * next();
            let p = HyperParams::new(n, lam, 1.0).unwrap();
            for sign in [Sign::Plus, Sign::Minus] {
                let h = 1e-6 * t.max(1.0);
                let fp = hyper_g(sign, &p, t + h).unwrap();
                let fm = hyper_g(sign, &p, t - h).unwrap();
                let fd = (fp - fm) / (2.0 * h);
                let an = hyper_g_prime(sign, &p, t).unwrap();
                // near a zero of 𝒢 the relative scale degenerates; compare
                // against the function scale instead
                let scale = an.abs().max(fd.abs()).max(1e-8);
                assert!(
                    (an - fd).abs() / scale < 1e-6,
                    "n={n} lam={lam} t={t} {sign:?}: {an} vs {fd}"
                );
            }
        }
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(HyperParams::new(1, 1.0, 1.0).is_err());
        assert!(HyperParams::new(2, 0.0, 1.0).is_err());
        assert!(HyperParams::new(2, 1.0, 0.0).is_err());
        let p = HyperParams::new(2, 1.0, 1.0).unwrap();
        assert!(hyper_g(Sign::Minus, &p, -1.0).is_err());
    }
}
