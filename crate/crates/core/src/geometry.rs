//! Space-form geometry: geodesic-ball volumes, the coordinate
//! `t̃ = sinh²(κr/2)`, half-volume radii, and the two-ball volume split.

use crate::error::{Error, Result};
use crate::gamma;
use crate::solve;
use std::f64::consts::PI;

/// The simply connected space form of constant sectional curvature `−κ²`:
/// hyperbolic space for `κ > 0`, Euclidean space for `κ = 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpaceForm {
    n: u32,
    kappa: f64,
}

impl SpaceForm {
    pub fn new(n: u32, kappa: f64) -> Result<Self> {
        if n < 2 {
            return Err(Error::domain(format!("dimension must be >= 2, got {n}")));
        }
        if !(kappa >= 0.0) || !kappa.is_finite() {
            return Err(Error::domain(format!("kappa must be >= 0, got {kappa}")));
        }
        Ok(SpaceForm { n, kappa })
    }

    pub fn dim(&self) -> u32 {
        self.n
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    /// ν = n/2 − 1
    pub fn nu(&self) -> f64 {
        self.n as f64 / 2.0 - 1.0
    }

    pub fn is_euclidean(&self) -> bool {
        self.kappa == 0.0
    }
}

/// Volume of the unit Euclidean ball, `ω_n = π^{n/2}/Γ(n/2 + 1)`.
pub fn unit_ball_volume(n: u32) -> f64 {
    PI.powf(n as f64 / 2.0) / gamma::gamma(n as f64 / 2.0 + 1.0).max(f64::MIN_POSITIVE)
}

/// Antiderivative `∫₀^r s_κ(ρ)^{n−1} dρ` with `s_κ(ρ) = sinh(κρ)/κ`.
/// Closed forms for n ∈ {2, 3} and κ = 0; adaptive Simpson otherwise.
pub(crate) fn shell_integral(sf: &SpaceForm, r: f64) -> f64 {
    let n = sf.n;
    let k = sf.kappa;
    if r == 0.0 {
        return 0.0;
    }
    if k == 0.0 {
        return r.powi(n as i32) / n as f64;
    }
    match n {
        2 => ((k * r).cosh() - 1.0) / (k * k),
        3 => ((2.0 * k * r).sinh() - 2.0 * k * r) / (4.0 * k * k * k),
        _ => adaptive_simpson(
            &|rho: f64| ((k * rho).sinh() / k).powi(n as i32 - 1),
            0.0,
            r,
            1e-13,
        ),
    }
}

fn simpson(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> f64 {
    (b - a) / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b))
}

fn adaptive_simpson(f: &impl Fn(f64) -> f64, a: f64, b: f64, rel_tol: f64) -> f64 {
    fn recurse(
        f: &impl Fn(f64) -> f64,
        a: f64,
        b: f64,
        whole: f64,
        abs_tol: f64,
        depth: u32,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let left = simpson(f, a, m);
        let right = simpson(f, m, b);
        if depth == 0 || (left + right - whole).abs() <= 15.0 * abs_tol {
            left + right + (left + right - whole) / 15.0
        } else {
            recurse(f, a, m, left, abs_tol / 2.0, depth - 1)
                + recurse(f, m, b, right, abs_tol / 2.0, depth - 1)
        }
    }
    let whole = simpson(f, a, b);
    // absolute budget from the crude whole-interval estimate
    let abs_tol = rel_tol * whole.abs().max(1e-300);
    recurse(f, a, b, whole, abs_tol, 28)
}

/// Volume of the geodesic ball of radius `r`:
/// `V_κ(r) = n ω_n ∫₀^r s_κ(ρ)^{n−1} dρ`.
pub fn ball_volume(sf: &SpaceForm, r: f64) -> Result<f64> {
    if !(r >= 0.0) {
        return Err(Error::domain(format!("radius must be >= 0, got {r}")));
    }
    Ok(sf.n as f64 * unit_ball_volume(sf.n) * shell_integral(sf, r))
}

/// `t̃ = sinh²(κr/2)`; the natural argument of the radial hypergeometric
/// solutions. Undefined for `κ = 0`.
pub fn tilde_of_radius(kappa: f64, r: f64) -> Result<f64> {
    if !(kappa > 0.0) {
        return Err(Error::domain("tilde coordinate requires kappa > 0"));
    }
    if !(r >= 0.0) {
        return Err(Error::domain(format!("radius must be >= 0, got {r}")));
    }
    let sh = (kappa * r / 2.0).sinh();
    Ok(sh * sh)
}

/// Inverse of [`tilde_of_radius`]: `r = (2/κ) asinh √t̃`.
pub fn radius_of_tilde(kappa: f64, tilde: f64) -> Result<f64> {
    if !(kappa > 0.0) {
        return Err(Error::domain("tilde coordinate requires kappa > 0"));
    }
    if !(tilde >= 0.0) {
        return Err(Error::domain(format!("tilde must be >= 0, got {tilde}")));
    }
    Ok(2.0 * tilde.sqrt().asinh() / kappa)
}

/// Volume of the ball whose tilde coordinate is `t̃`.
fn volume_of_tilde(sf: &SpaceForm, tilde: f64) -> Result<f64> {
    ball_volume(sf, radius_of_tilde(sf.kappa, tilde)?)
}

/// Solves the volume-splitting constraint for `β`: the ball of tilde `α`
/// and the ball of tilde `β` together hold exactly the volume of the ball
/// of tilde `total_tilde`. For n = 2 the volume is proportional to the
/// tilde coordinate, so `β = L̃ − α` exactly; otherwise monotone bisection.
pub fn beta_from_alpha(sf: &SpaceForm, alpha: f64, total_tilde: f64) -> Result<f64> {
    if sf.is_euclidean() {
        return Err(Error::domain("two-ball split in tilde form requires kappa > 0"));
    }
    if !(total_tilde > 0.0) {
        return Err(Error::domain(format!("total tilde must be > 0, got {total_tilde}")));
    }
    if !(0.0..=total_tilde).contains(&alpha) {
        return Err(Error::domain(format!(
            "alpha = {alpha} exceeds the total volume (total tilde {total_tilde})"
        )));
    }
    if sf.n == 2 {
        return Ok(total_tilde - alpha);
    }
    if alpha == 0.0 {
        return Ok(total_tilde);
    }
    let target = volume_of_tilde(sf, total_tilde)? - volume_of_tilde(sf, alpha)?;
    if target <= 0.0 {
        return Ok(0.0);
    }
    let f = |beta: f64| volume_of_tilde(sf, beta).unwrap_or(f64::INFINITY) - target;
    let tol = solve::width_tol(total_tilde) * 0.1;
    Ok(solve::bisect_monotone(f, 0.0, total_tilde, tol))
}

/// Radius `L₀` of the ball holding half the volume of the ball of radius
/// `L`: `2 V_κ(L₀) = V_κ(L)`.
pub fn half_volume_radius(sf: &SpaceForm, l: f64) -> Result<f64> {
    if !(l > 0.0) || !l.is_finite() {
        return Err(Error::domain(format!("radius must be positive, got {l}")));
    }
    if sf.is_euclidean() {
        return Ok(l * 2.0f64.powf(-1.0 / sf.n as f64));
    }
    let kl = sf.kappa * l;
    if kl > 60.0 {
        // volume ~ c·e^{(n−1)κL}: the shift is ln2/((n−1)κ) up to corrections
        // of order L·e^{−2κL}, far below f64 resolution here
        return Ok(l - std::f64::consts::LN_2 / ((sf.n - 1) as f64 * sf.kappa));
    }
    let half = 0.5 * shell_integral(sf, l);
    let f = |r: f64| shell_integral(sf, r) - half;
    Ok(solve::bisect_monotone(f, 0.0, l, solve::width_tol(l) * 0.1))
}

/// An admissible two-ball configuration: tilde coordinates `(α, β)` whose
/// balls jointly hold the volume of the ball with tilde `total_tilde`.
#[derive(Clone, Copy, Debug)]
pub struct TwoBallConfig {
    alpha: f64,
    beta: f64,
    total_tilde: f64,
}

impl TwoBallConfig {
    /// Builds the configuration from `α` and the total, deriving `β` from
    /// the volume constraint.
    pub fn from_alpha(sf: &SpaceForm, alpha: f64, total_tilde: f64) -> Result<Self> {
        let beta = beta_from_alpha(sf, alpha, total_tilde)?;
        Ok(TwoBallConfig { alpha, beta, total_tilde })
    }

    /// Builds the configuration from both tilde coordinates, recovering the
    /// total from the volume sum.
    pub fn from_parts(sf: &SpaceForm, alpha: f64, beta: f64) -> Result<Self> {
        if sf.is_euclidean() {
            return Err(Error::domain("two-ball split in tilde form requires kappa > 0"));
        }
        if !(alpha >= 0.0) || !(beta >= 0.0) || alpha + beta == 0.0 {
            return Err(Error::domain(format!(
                "need alpha, beta >= 0 and not both zero, got ({alpha}, {beta})"
            )));
        }
        let total_tilde = if sf.n == 2 {
            alpha + beta
        } else {
            let vol = volume_of_tilde(sf, alpha)? + volume_of_tilde(sf, beta)?;
            let f = |t: f64| volume_of_tilde(sf, t).unwrap_or(f64::INFINITY) - vol;
            let hi = 4.0 * (alpha + beta) + 1.0;
            solve::bisect_monotone(f, 0.0, hi, solve::width_tol(hi) * 0.1)
        };
        Ok(TwoBallConfig { alpha, beta, total_tilde })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn total_tilde(&self) -> f64 {
        self.total_tilde
    }

    /// Residual of the volume-splitting constraint, for diagnostics.
    pub fn constraint_residual(&self, sf: &SpaceForm) -> Result<f64> {
        let va = volume_of_tilde(sf, self.alpha)?;
        let vb = volume_of_tilde(sf, self.beta)?;
        let vt = volume_of_tilde(sf, self.total_tilde)?;
        Ok(((va + vb) - vt) / vt.max(f64::MIN_POSITIVE))
    }
}
