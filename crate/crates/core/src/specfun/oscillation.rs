//! Oscillation classification of
//! `w^K_−(t) = F((1−Λ)/2, (1+Λ)/2; n/2; −t)` with `Λ² = (n−1)² − 4√K`.
//!
//! The function is positive everywhere iff `K ≤ (n−1)⁴/16` and oscillatory
//! beyond that threshold. The classifier is a sampling procedure, not a
//! proof: it walks a geometric grid on `(0, t_max]` looking for a sign
//! change and refines the first one found by bisection. For `K` barely
//! above the threshold the first zero sits beyond any fixed `t_max`
//! (its location grows like `exp(c/√(K − K_thresh))`), so a
//! `PositiveEverywhere` verdict only means "not refuted up to `t_max`".

use super::hyper::{eval_g, ParamPair, Radial};
use crate::error::{Error, Result};
use crate::solve;

/// Number of geometric grid points sampled on `(0, t_max]`.
const GRID_POINTS: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OscillationKind {
    PositiveEverywhere,
    Oscillatory,
}

/// Verdict of [`classify_w_minus`]; `first_sign_change` is present exactly
/// in the oscillatory case.
#[derive(Clone, Copy, Debug)]
pub struct OscillationVerdict {
    pub kind: OscillationKind,
    pub first_sign_change: Option<f64>,
}

/// Classifies `w^K_−` on `(0, t_max]` by geometric-grid sampling.
pub fn classify_w_minus(k: f64, n: u32, t_max: f64) -> Result<OscillationVerdict> {
    if !(k > 0.0) {
        return Err(Error::domain(format!("K must be > 0, got {k}")));
    }
    if n < 2 {
        return Err(Error::domain(format!("dimension must be >= 2, got {n}")));
    }
    if !(t_max > 0.0) || !t_max.is_finite() {
        return Err(Error::domain(format!("t_max must be positive and finite, got {t_max}")));
    }
    let nm1 = (n - 1) as f64;
    let pair = ParamPair {
        lambda_sq: nm1 * nm1 - 4.0 * k.sqrt(),
        c: n as f64 / 2.0,
    };
    let w = |t: f64| -> Result<f64> { Ok(eval_g(pair, Radial::from_t(t))?.value) };

    // geometric grid from t_max/ratio^(GRID_POINTS−1) up to t_max
    let t_lo = (t_max * 1e-8).min(1e-4);
    let ratio = (t_max / t_lo).powf(1.0 / (GRID_POINTS - 1) as f64);
    let mut t_prev = 0.0f64;
    let mut w_prev = 1.0f64; // w(0) = 1
    let mut t = t_lo;
    for _ in 0..GRID_POINTS {
        let wt = w(t)?;
        if wt == 0.0 {
            return Ok(OscillationVerdict {
                kind: OscillationKind::Oscillatory,
                first_sign_change: Some(t),
            });
        }
        if wt.signum() != w_prev.signum() {
            let lo = if t_prev == 0.0 { t_lo * 1e-3 } else { t_prev };
            let r = solve::bisect_refine(&w, lo, t, w(lo)?, wt)?;
            return Ok(OscillationVerdict {
                kind: OscillationKind::Oscillatory,
                first_sign_change: Some(r.x),
            });
        }
        t_prev = t;
        w_prev = wt;
        t *= ratio;
    }
    Ok(OscillationVerdict {
        kind: OscillationKind::PositiveEverywhere,
        first_sign_change: None,
    })
}
