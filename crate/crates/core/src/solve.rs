//! Bracketed root finding.
//!
//! Every transcendental equation in this crate has its root sandwiched
//! between poles, so the solvers here are bisection-based: derivative-free,
//! immune to the divergence next to the bracket ends. A single secant polish
//! sharpens the final result and supplies a residual.

use crate::error::{Error, Result};

pub(crate) struct RootResult {
    pub x: f64,
    pub residual: f64,
    pub iterations: u32,
}

/// Width tolerance used for bisection in a coordinate of magnitude `scale`.
pub(crate) fn width_tol(scale: f64) -> f64 {
    let s = scale.abs().max(1.0);
    (1e-13 * s).max(4.0 * f64::EPSILON * s)
}

/// Moves the endpoints of `(lo, hi)` inward until `f` evaluates to a finite
/// value at both, starting at an offset of `1e-9` of the width and doubling
/// the offset on every failure. The function is expected to take values of
/// opposite sign at the two adjusted endpoints.
pub(crate) fn shrink_bracket<F>(f: &F, lo: f64, hi: f64) -> Result<(f64, f64, f64, f64)>
where
    F: Fn(f64) -> Result<f64>,
{
    let width = hi - lo;
    if !(width > 0.0) {
        return Err(Error::domain(format!("empty bracket ({lo}, {hi})")));
    }
    let mut eps = 1e-9 * width;
    for _ in 0..60 {
        let a = lo + eps;
        let b = hi - eps;
        if a >= b {
            break;
        }
        let fa = f(a);
        let fb = f(b);
        if let (Ok(fa), Ok(fb)) = (fa, fb) {
            if fa.is_finite() && fb.is_finite() {
                if fa == 0.0 {
                    return Ok((a, a, 0.0, 0.0));
                }
                if fb == 0.0 {
                    return Ok((b, b, 0.0, 0.0));
                }
                if fa.signum() != fb.signum() {
                    return Ok((a, b, fa, fb));
                }
            }
        }
        eps *= 2.0;
    }
    Err(Error::BracketFailure {
        guess: 0.5 * (lo + hi),
        attempts: 60,
    })
}

/// Bisection to `width_tol(hi)` followed by one secant polish. `(lo, hi)`
/// must already carry values of opposite sign (see [`shrink_bracket`]).
pub(crate) fn bisect_refine<F>(f: &F, lo: f64, hi: f64, flo: f64, fhi: f64) -> Result<RootResult>
where
    F: Fn(f64) -> Result<f64>,
{
    if flo == 0.0 {
        return Ok(RootResult { x: lo, residual: 0.0, iterations: 0 });
    }
    if fhi == 0.0 {
        return Ok(RootResult { x: hi, residual: 0.0, iterations: 0 });
    }
    let (mut lo, mut hi, mut flo, mut fhi) = (lo, hi, flo, fhi);
    let tol = width_tol(hi);
    let mut iterations = 0u32;
    while hi - lo > tol && iterations < 200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break; // interval at floating-point resolution
        }
        let fm = f(mid)?;
        iterations += 1;
        if fm == 0.0 {
            return Ok(RootResult { x: mid, residual: 0.0, iterations });
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
    }
    // Secant polish on the final bracket.
    let mut x = 0.5 * (lo + hi);
    if fhi != flo {
        let xs = hi - fhi * (hi - lo) / (fhi - flo);
        if xs > lo && xs < hi {
            x = xs;
        }
    }
    let residual = f(x)?.abs();
    Ok(RootResult { x, residual, iterations })
}

/// Bisection for an infallible monotone function; returns the abscissa where
/// `f` changes sign between `lo` and `hi`.
pub(crate) fn bisect_monotone<F>(f: F, lo: f64, hi: f64, tol: f64) -> f64
where
    F: Fn(f64) -> f64,
{
    let (mut lo, mut hi) = (lo, hi);
    let flo = f(lo);
    for _ in 0..200 {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid).signum() == flo.signum() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}
