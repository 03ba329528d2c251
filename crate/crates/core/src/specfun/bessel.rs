//! Bessel functions `J_ν`, `I_ν` of half-integer and integer order, their
//! first zeros `j_{ν,1}` and the cross-product roots `𝔥_ν`.
//!
//! Only nonnegative orders in steps of 1/2 up to 6 are supported — that is
//! every order the plate problem can ask for up to dimension 14. Both kinds
//! are summed by their ascending series; in the region of interest
//! (`x ≲ 12`, bracketing the first zeros) the alternating `J` series loses
//! at most four digits to cancellation, well inside the 1e−12 target.

use crate::error::{Error, Result};
use crate::gamma::ln_gamma;
use crate::solve;

const MAX_ORDER: f64 = 6.0;
const MAX_ARG: f64 = 14.0;

fn check_order(nu: f64) -> Result<()> {
    let doubled = 2.0 * nu;
    if !(nu >= 0.0) || (doubled - doubled.round()).abs() > 1e-12 || nu > MAX_ORDER {
        return Err(Error::domain(format!(
            "order must be a half-integer in [0, {MAX_ORDER}], got {nu}"
        )));
    }
    Ok(())
}

fn series(nu: f64, x: f64, alternating: bool) -> f64 {
    // first term (x/2)^ν / Γ(ν+1), then ratio ±(x²/4)/((k+1)(ν+k+1))
    let q = x * x / 4.0;
    let sign = if alternating { -1.0 } else { 1.0 };
    let mut term = (nu * (x / 2.0).ln() - ln_gamma(nu + 1.0)).exp();
    let mut sum = term;
    for k in 0..300 {
        let kf = k as f64;
        term *= sign * q / ((kf + 1.0) * (nu + kf + 1.0));
        sum += term;
        if term.abs() <= 1e-17 * sum.abs().max(1e-300) {
            break;
        }
    }
    sum
}

/// `(J_ν(x), I_ν(x))` to close to machine accuracy for `x ≤ 14`.
pub fn bessel_pair(nu: f64, x: f64) -> Result<(f64, f64)> {
    check_order(nu)?;
    if !(x > 0.0) {
        return Err(Error::domain(format!("x must be > 0, got {x}")));
    }
    if x > MAX_ARG {
        return Err(Error::domain(format!(
            "x = {x} outside the series accuracy envelope (0, {MAX_ARG}]"
        )));
    }
    Ok((series(nu, x, true), series(nu, x, false)))
}

/// First positive zero `j_{ν,1}` of `J_ν`, to better than 1e−10.
pub fn bessel_first_zero(nu: f64) -> Result<f64> {
    check_order(nu)?;
    // J_ν > 0 on (0, j_{ν,1}); scan outward from the order, then bisect.
    let f = |x: f64| Ok(series(nu, x, true));
    let mut lo = (nu + 0.05).max(0.05);
    let mut flo = f(lo)?;
    let step = 0.2;
    for _ in 0..80 {
        let hi = lo + step;
        let fhi = f(hi)?;
        if flo.signum() != fhi.signum() {
            let r = solve::bisect_refine(&f, lo, hi, flo, fhi)?;
            return Ok(r.x);
        }
        lo = hi;
        flo = fhi;
    }
    Err(Error::SolverNoConvergence(format!(
        "no sign change of J_{nu} found below x = {lo}"
    )))
}

/// First positive root `𝔥_ν` of the cross product
/// `J_ν I_{ν+1} + I_ν J_{ν+1}`, equivalently the first positive critical
/// point of `J_ν/I_ν`. Lies strictly between `j_{ν,1}` and `j_{ν+1,1}`.
pub fn cross_product_root(nu: f64) -> Result<f64> {
    check_order(nu)?;
    let cross = |x: f64| -> Result<f64> {
        Ok(series(nu, x, true) * series(nu + 1.0, x, false)
            + series(nu, x, false) * series(nu + 1.0, x, true))
    };
    let lo = bessel_first_zero(nu)?;
    let hi = bessel_first_zero(nu + 1.0)?;
    let (a, b, fa, fb) = solve::shrink_bracket(&cross, lo, hi)?;
    let r = solve::bisect_refine(&cross, a, b, fa, fb)?;
    Ok(r.x)
}
