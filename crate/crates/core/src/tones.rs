//! The spectral layer: the cross term `𝒦_ν`, its pole ladder `𝔤_{ν,k}`,
//! fundamental tones of geodesic balls, the two-ball minimization value,
//! asymptotics, sharpness thresholds, and the related bound constants.
//!
//! For `κ > 0` the fundamental tone of `B(L)` is `Γ = λ⁴`, `λ` the first
//! positive root of `𝒦_ν(·, L̃)` at `L̃ = sinh²(κL/2)`, where
//!
//! ```text
//! 𝒦_ν(λ, t) = 𝒢₋′/𝒢₋ − 𝒢₊′/𝒢₊
//! ```
//!
//! is strictly decreasing in `λ` between consecutive zeros `𝔤_{ν,k}(t)` of
//! `𝒢₋(ν, ·, t)`, runs from `+∞` down to `−∞` on each pole interval, and
//! vanishes as `λ → 0`. The first root therefore sits in
//! `(𝔤_{ν,1}, 𝔤_{ν,2})`. The two-ball value replaces `𝒦_ν(·, L̃)` with the
//! weighted sum `ℱ_ν(λ, α, β)` over two boundary coordinates.
//!
//! For `n = 3` everything collapses to elementary `cot`/`coth` expressions
//! in `s = κr/2`; for `n = 2` the hypergeometric engine supplies the
//! logarithmic derivatives. For `κ = 0` the cross term degenerates to the
//! Bessel cross product with first root `𝔥_ν`.

use crate::error::{Error, Result};
use crate::geometry::{self, SpaceForm, TwoBallConfig};
use crate::solve;
use crate::specfun::hyper::{coth_ratio, eval_g, log_deriv, ParamPair, Radial};
use crate::specfun::{bessel_first_zero, bessel_pair, cross_product_root};
use std::f64::consts::PI;

/// How a tone was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// n = 3, κ > 0: elementary cot/coth closed forms.
    ClosedForm3D,
    /// n = 2, κ > 0: hypergeometric series / Legendre connection.
    Series2D,
    /// κ = 0: Bessel cross product, `Γ = 𝔥_ν⁴/L⁴`.
    Euclidean,
    /// Small-ball approximation `((n−1)²κ²/4 + 𝔥_ν²/L²)²`.
    AsymptoticSmallL,
    /// Large-ball approximation `κ⁴(1 + π²/(κL)²)²` (n = 3).
    AsymptoticLargeL,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::ClosedForm3D => "closed-form-3d",
            Method::Series2D => "series-2d",
            Method::Euclidean => "euclidean",
            Method::AsymptoticSmallL => "asymptotic-small-l",
            Method::AsymptoticLargeL => "asymptotic-large-l",
        }
    }
}

/// A solved tone. `gamma = lambda⁴` by construction; the bracket endpoints
/// are the enclosing poles (they coincide with `lambda` in the degenerate
/// equal-balls case, where the value *is* the pole).
#[derive(Clone, Copy, Debug)]
pub struct ToneResult {
    pub lambda: f64,
    pub gamma: f64,
    pub bracket_lo: f64,
    pub bracket_hi: f64,
    /// Residual of the solved (scale-normalized) equation at `lambda`.
    pub residual: f64,
    pub iterations: u32,
    pub method: Method,
}

/// `λ²`-discriminant pairs for a trial eigenvalue.
fn pairs(sf: &SpaceForm, lambda: f64) -> (ParamPair, ParamPair) {
    let nm1 = (sf.dim() - 1) as f64;
    let ratio = 4.0 * lambda * lambda / (sf.kappa() * sf.kappa());
    let c = sf.dim() as f64 / 2.0;
    (
        ParamPair { lambda_sq: nm1 * nm1 - ratio, c }, // minus
        ParamPair { lambda_sq: nm1 * nm1 + ratio, c }, // plus
    )
}

fn check_hyperbolic(sf: &SpaceForm) -> Result<()> {
    if sf.is_euclidean() {
        return Err(Error::domain("operation requires kappa > 0"));
    }
    Ok(())
}

fn check_low_dim(sf: &SpaceForm) -> Result<()> {
    if sf.dim() != 2 && sf.dim() != 3 {
        return Err(Error::domain(format!(
            "curved-case tones are computed for n in {{2, 3}}, got n = {}",
            sf.dim()
        )));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// the cross term 𝒦
// ---------------------------------------------------------------------------

/// Scale-normalized cross term: `𝒦_ν(λ, t) · 2√(t(1+t))`. Shares the sign,
/// zeros and poles of `𝒦_ν(·, t)` (the factor is positive) and stays O(1)
/// for enormous balls, where `𝒦` itself underflows.
fn k_scaled_rc(sf: &SpaceForm, lambda: f64, rc: Radial) -> Result<f64> {
    let (minus, plus) = pairs(sf, lambda);
    if sf.dim() == 3 {
        Ok(coth_ratio(minus.lambda_sq, rc.s) - coth_ratio(plus.lambda_sq, rc.s))
    } else {
        let sinh2s = (2.0 * rc.s).sinh();
        Ok((log_deriv(minus, rc)? - log_deriv(plus, rc)?) * sinh2s)
    }
}

/// True cross term `𝒦_ν(λ, t)` for `κ > 0`.
fn k_true_rc(sf: &SpaceForm, lambda: f64, rc: Radial) -> Result<f64> {
    let (minus, plus) = pairs(sf, lambda);
    if sf.dim() == 3 {
        let sinh2s = (2.0 * rc.s).sinh();
        Ok((coth_ratio(minus.lambda_sq, rc.s) - coth_ratio(plus.lambda_sq, rc.s)) / sinh2s)
    } else {
        Ok(log_deriv(minus, rc)? - log_deriv(plus, rc)?)
    }
}

/// Euclidean analogue of the cross term as a logarithmic-derivative
/// difference in the radius: `−λ(J_{ν+1}/J_ν + I_{ν+1}/I_ν)` at `x = λr`.
/// Zero exactly at `λ = 𝔥_ν/r`.
fn k_euclid(nu: f64, lambda: f64, r: f64) -> Result<f64> {
    let x = lambda * r;
    let (jn, iv) = bessel_pair(nu, x)?;
    let (jn1, iv1) = bessel_pair(nu + 1.0, x)?;
    if jn.abs() < 1e-280 {
        return Err(Error::AtPole { k: 1, nearest_pole: lambda });
    }
    Ok(-lambda * (jn1 / jn + iv1 / iv))
}

/// `𝒦_ν(λ, t)`.
///
/// * `κ > 0`, n = 3: the elementary `cot`/`coth` branches keyed on the sign
///   of `λ − κ` (all three continued analytically through `λ = κ`).
/// * `κ > 0`, n = 2: the ratio form built from the Pfaff-mapped series (or
///   the Legendre connection for large `t`).
/// * `κ > 0`, n ≥ 4: generic hypergeometric ratios; no sharpness claims.
/// * `κ = 0`: the Bessel cross-product analogue; `t` is then the radius.
pub fn k_nu(sf: &SpaceForm, lambda: f64, t: f64) -> Result<f64> {
    if !(lambda > 0.0) {
        return Err(Error::domain(format!("lambda must be > 0, got {lambda}")));
    }
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::domain(format!("t must be positive and finite, got {t}")));
    }
    if sf.is_euclidean() {
        return k_euclid(sf.nu(), lambda, t);
    }
    let rc = Radial::from_t(t);
    k_true_rc(sf, lambda, rc).map_err(|e| enrich_pole(sf, lambda, rc, e))
}

/// Scale-normalized form `𝒦_ν(λ, t)·2√(t(1+t))`; see [`k_nu`]. The bounded
/// quantity whose large-`L` limits are finite.
pub fn k_nu_scaled(sf: &SpaceForm, lambda: f64, t: f64) -> Result<f64> {
    check_hyperbolic(sf)?;
    if !(lambda > 0.0) || !(t > 0.0) || !t.is_finite() {
        return Err(Error::domain("need lambda > 0 and finite t > 0".to_string()));
    }
    let rc = Radial::from_t(t);
    k_scaled_rc(sf, lambda, rc).map_err(|e| enrich_pole(sf, lambda, rc, e))
}

/// [`k_nu_scaled`] parametrized by the ball radius instead of
/// `t = sinh²(κL/2)`, which overflows for `κL ≳ 1400`. This is the form to
/// use for very large balls.
pub fn k_nu_scaled_at_radius(sf: &SpaceForm, lambda: f64, l: f64) -> Result<f64> {
    check_hyperbolic(sf)?;
    if !(lambda > 0.0) || !(l > 0.0) {
        return Err(Error::domain("need lambda > 0 and L > 0".to_string()));
    }
    let rc = Radial::from_s(sf.kappa() * l / 2.0);
    k_scaled_rc(sf, lambda, rc).map_err(|e| enrich_pole(sf, lambda, rc, e))
}

/// [`pole_g`] parametrized by the ball radius; see [`k_nu_scaled_at_radius`].
pub fn pole_g_at_radius(sf: &SpaceForm, k: usize, l: f64) -> Result<f64> {
    check_hyperbolic(sf)?;
    if k == 0 {
        return Err(Error::domain("pole index k starts at 1"));
    }
    if !(l > 0.0) {
        return Err(Error::domain(format!("radius must be > 0, got {l}")));
    }
    pole_g_rc(sf, k, Radial::from_s(sf.kappa() * l / 2.0))
}

/// Attaches a nearest-pole estimate to [`Error::AtPole`].
fn enrich_pole(sf: &SpaceForm, lambda: f64, rc: Radial, e: Error) -> Error {
    if let Error::AtPole { .. } = e {
        let kap = sf.kappa();
        let nm1 = (sf.dim() - 1) as f64;
        let mu_sq = lambda * lambda / (kap * kap) - nm1 * nm1 / 4.0;
        if mu_sq > 0.0 {
            let k = (mu_sq.sqrt() * 2.0 * rc.s / PI).round().max(1.0);
            let guess = kap * (nm1 * nm1 / 4.0 + (k * PI / (2.0 * rc.s)).powi(2)).sqrt();
            return Error::AtPole { k: k as usize, nearest_pole: guess };
        }
    }
    e
}

// ---------------------------------------------------------------------------
// pole ladder
// ---------------------------------------------------------------------------

/// `k`-th zero in `λ` of `𝒢₋(ν, ·, t)` — the `k`-th pole of `𝒦_ν(·, t)`.
///
/// n = 3 has the closed ladder `κ√(1 + (kπ/(2s))²)`, `s = asinh √t`. Other
/// dimensions scan the phase variable `μ = √(λ²/κ² − (n−1)²/4)` (pole
/// spacing is close to `π/(2s)` there) and bisect the `k`-th sign change;
/// the scan step of a sixteenth of the spacing cannot step over a zero.
pub fn pole_g(sf: &SpaceForm, k: usize, t: f64) -> Result<f64> {
    check_hyperbolic(sf)?;
    if k == 0 {
        return Err(Error::domain("pole index k starts at 1"));
    }
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::domain(format!("t must be positive and finite, got {t}")));
    }
    pole_g_rc(sf, k, Radial::from_t(t))
}

pub(crate) fn pole_g_rc(sf: &SpaceForm, k: usize, rc: Radial) -> Result<f64> {
    let kap = sf.kappa();
    let nm1 = (sf.dim() - 1) as f64;
    if sf.dim() == 3 {
        let q = k as f64 * PI / (2.0 * rc.s);
        return Ok(kap * (1.0 + q * q).sqrt());
    }
    let c = sf.dim() as f64 / 2.0;
    let g_minus = |mu: f64| -> Result<f64> {
        let pair = ParamPair { lambda_sq: -4.0 * mu * mu, c };
        Ok(eval_g(pair, rc)?.value)
    };
    let spacing = PI / (2.0 * rc.s);
    let step = spacing / 16.0;
    let cap = 16 * (k + 3) + 64;
    let mut mu = 0.0f64;
    let mut prev = 1.0f64; // 𝒢₋ = w at μ = 0 is positive
    let mut found = 0usize;
    for _ in 0..cap {
        let next = mu + step;
        let cur = g_minus(next)?;
        if cur == 0.0 || cur.signum() != prev.signum() {
            found += 1;
            if found == k {
                let r = solve::bisect_refine(&g_minus, mu, next, prev, cur)?;
                let lam = kap * (nm1 * nm1 / 4.0 + r.x * r.x).sqrt();
                return Ok(lam);
            }
        }
        mu = next;
        prev = cur;
    }
    Err(Error::BracketFailure {
        guess: kap * (nm1 * nm1 / 4.0 + (k as f64 * spacing).powi(2)).sqrt(),
        attempts: cap,
    })
}

// ---------------------------------------------------------------------------
// tones
// ---------------------------------------------------------------------------

/// McKean-type universal floor `(n−1)⁴κ⁴/16` for clamped-plate tones under
/// curvature `≤ −κ²`.
pub fn mckean_floor(sf: &SpaceForm) -> f64 {
    let v = (sf.dim() - 1) as f64 * sf.kappa();
    (v / 2.0).powi(4)
}

fn solve_first_k_root(sf: &SpaceForm, rc: Radial) -> Result<(ToneResult, f64, f64)> {
    let g1 = pole_g_rc(sf, 1, rc)?;
    let g2 = pole_g_rc(sf, 2, rc)?;
    let f = |lam: f64| k_scaled_rc(sf, lam, rc);
    let (lo, hi, flo, fhi) = solve::shrink_bracket(&f, g1, g2)?;
    let r = solve::bisect_refine(&f, lo, hi, flo, fhi)?;
    let method = if sf.dim() == 3 { Method::ClosedForm3D } else { Method::Series2D };
    Ok((
        ToneResult {
            lambda: r.x,
            gamma: r.x.powi(4),
            bracket_lo: g1,
            bracket_hi: g2,
            residual: r.residual,
            iterations: r.iterations,
            method,
        },
        g1,
        g2,
    ))
}

/// Fundamental tone `Γ_κ(B_κ(L))` of the geodesic ball of radius `L`.
///
/// `κ = 0` gives `Γ = 𝔥_ν⁴/L⁴` through the Bessel cross product (any
/// dimension the Bessel layer supports); `κ > 0` requires `n ∈ {2, 3}` and
/// solves `𝒦_ν(·, L̃) = 0` inside `(𝔤_{ν,1}(L̃), 𝔤_{ν,2}(L̃))`.
pub fn fundamental_tone(sf: &SpaceForm, l: f64) -> Result<ToneResult> {
    if !(l > 0.0) || !l.is_finite() {
        return Err(Error::domain(format!("radius must be positive, got {l}")));
    }
    if sf.is_euclidean() {
        let nu = sf.nu();
        let h = cross_product_root(nu)?;
        let lambda = h / l;
        let residual = k_euclid(nu, lambda, l)?.abs();
        return Ok(ToneResult {
            lambda,
            gamma: lambda.powi(4),
            bracket_lo: bessel_first_zero(nu)? / l,
            bracket_hi: bessel_first_zero(nu + 1.0)? / l,
            residual,
            iterations: 0,
            method: Method::Euclidean,
        });
    }
    check_low_dim(sf)?;
    let rc = Radial::from_s(sf.kappa() * l / 2.0);
    Ok(solve_first_k_root(sf, rc)?.0)
}

/// Two-ball minimization value `λ_ν(α, β)`: the first positive zero of
///
/// ```text
/// ℱ_ν(λ, α, β) = ((1+α)α)^{ν+1} 𝒦_ν(λ, α) + ((1+β)β)^{ν+1} 𝒦_ν(λ, β),
/// ```
///
/// bracketed in `[𝔤_{ν,1}(β), min(𝔤_{ν,1}(α), 𝔤_{ν,2}(β))]` for `α ≤ β`
/// (with `𝔤_{ν,1}(0) = +∞`). Degenerations: `α = 0` reduces to the one-ball
/// tone of `β`; `α = β` makes the value the pole `𝔤_{ν,1}` itself.
pub fn two_ball_tone(sf: &SpaceForm, cfg: &TwoBallConfig) -> Result<ToneResult> {
    check_hyperbolic(sf)?;
    check_low_dim(sf)?;
    let (alpha, beta) = if cfg.alpha() <= cfg.beta() {
        (cfg.alpha(), cfg.beta())
    } else {
        (cfg.beta(), cfg.alpha())
    };
    if beta == 0.0 {
        return Err(Error::domain("degenerate two-ball configuration (alpha = beta = 0)"));
    }
    let rc_b = Radial::from_t(beta);
    if alpha == 0.0 {
        return Ok(solve_first_k_root(sf, rc_b)?.0);
    }
    let rc_a = Radial::from_t(alpha);
    if (alpha - beta).abs() <= 1e-12 * beta.max(1.0) {
        // the bracket [𝔤₁(β), 𝔤₁(α)] collapses: the value is the pole
        let lam = pole_g_rc(sf, 1, rc_b)?;
        return Ok(ToneResult {
            lambda: lam,
            gamma: lam.powi(4),
            bracket_lo: lam,
            bracket_hi: lam,
            residual: 0.0,
            iterations: 0,
            method: if sf.dim() == 3 { Method::ClosedForm3D } else { Method::Series2D },
        });
    }
    let nu1 = sf.nu() + 1.0;
    // weight ratio ((1+α)α / ((1+β)β))^{ν+1} ≤ 1; normalizing by the β
    // weight keeps the function O(1)
    let wr = (((1.0 + alpha) * alpha) / ((1.0 + beta) * beta)).powf(nu1);
    let f = |lam: f64| -> Result<f64> {
        Ok(wr * k_true_rc(sf, lam, rc_a)? + k_true_rc(sf, lam, rc_b)?)
    };
    let g1b = pole_g_rc(sf, 1, rc_b)?;
    let g1a = pole_g_rc(sf, 1, rc_a)?;
    let g2b = pole_g_rc(sf, 2, rc_b)?;
    let hi = g1a.min(g2b);
    let (lo, hi2, flo, fhi) = solve::shrink_bracket(&f, g1b, hi)?;
    let r = solve::bisect_refine(&f, lo, hi2, flo, fhi)?;
    Ok(ToneResult {
        lambda: r.x,
        gamma: r.x.powi(4),
        bracket_lo: g1b,
        bracket_hi: hi,
        residual: r.residual,
        iterations: r.iterations,
        method: if sf.dim() == 3 { Method::ClosedForm3D } else { Method::Series2D },
    })
}

// ---------------------------------------------------------------------------
// asymptotics and thresholds
// ---------------------------------------------------------------------------

/// Small-ball approximation `Γ ≈ ((n−1)²κ²/4 + 𝔥_ν²/L²)²`; degenerates to
/// the exact Euclidean value `𝔥_ν⁴/L⁴` at `κ = 0`.
pub fn tone_asymptotic_small(sf: &SpaceForm, l: f64) -> Result<f64> {
    if !(l > 0.0) {
        return Err(Error::domain(format!("radius must be > 0, got {l}")));
    }
    let h = cross_product_root(sf.nu())?;
    let nm1 = (sf.dim() - 1) as f64;
    let base = nm1 * nm1 * sf.kappa() * sf.kappa() / 4.0 + h * h / (l * l);
    Ok(base * base)
}

/// Large-ball approximation for n = 3: `Γ ≈ κ⁴ (1 + π²/(κL)²)²`.
pub fn tone_asymptotic_large_3d(kappa: f64, l: f64) -> Result<f64> {
    if !(kappa > 0.0) || !(l > 0.0) {
        return Err(Error::domain("need kappa > 0 and L > 0".to_string()));
    }
    let q = PI / (kappa * l);
    let base = kappa * kappa * (1.0 + q * q);
    Ok(base * base)
}

/// The two sides of the sharpness test at radius `L`: the first pole at the
/// half-volume ball against the one-ball tone, and whether the necessary
/// inequality `𝔤_{ν,1}(L̃₀) ≥ λ_ν(0, L̃)` holds there.
#[derive(Clone, Copy, Debug)]
pub struct SharpnessGap {
    /// `𝔤_{ν,1}(L̃₀)`, `L₀` the half-volume radius.
    pub g1: f64,
    /// `λ_ν(0, L̃)`, the one-ball tone.
    pub lambda: f64,
    pub holds: bool,
}

pub fn sharpness_gap(sf: &SpaceForm, l: f64) -> Result<SharpnessGap> {
    check_hyperbolic(sf)?;
    check_low_dim(sf)?;
    if !(l > 0.0) {
        return Err(Error::domain(format!("radius must be > 0, got {l}")));
    }
    let l0 = geometry::half_volume_radius(sf, l)?;
    let g1 = pole_g_rc(sf, 1, Radial::from_s(sf.kappa() * l0 / 2.0))?;
    let lambda = fundamental_tone(sf, l)?.lambda;
    Ok(SharpnessGap { g1, lambda, holds: g1 >= lambda })
}

/// First radius where the sharpness inequality fails, found by a coarse
/// scan (step `0.01/κ` on `(0, 10/κ]`) followed by bisection; returns the
/// radius and the volume of the ball of that radius.
pub fn threshold_radius(sf: &SpaceForm) -> Result<(f64, f64)> {
    check_hyperbolic(sf)?;
    check_low_dim(sf)?;
    let kap = sf.kappa();
    let gap = |l: f64| -> Result<f64> {
        let s = sharpness_gap(sf, l)?;
        Ok(s.g1 - s.lambda)
    };
    let step = 0.01 / kap;
    let mut lo = 2.0 * step;
    let mut flo = gap(lo)?;
    if flo <= 0.0 {
        return Err(Error::SolverNoConvergence(format!(
            "sharpness gap not positive at the scan start L = {lo}"
        )));
    }
    let mut found = None;
    let mut l = lo;
    while l < 10.0 / kap {
        let next = l + step;
        let fnext = gap(next)?;
        if fnext <= 0.0 {
            found = Some((l, next, flo, fnext));
            break;
        }
        lo = next;
        flo = fnext;
        l = next;
    }
    let _ = lo;
    let (a, b, fa, fb) = found.ok_or_else(|| {
        Error::SolverNoConvergence("no sharpness sign change found in (0, 10/kappa]".to_string())
    })?;
    let r = solve::bisect_refine(&gap, a, b, fa, fb)?;
    let volume = geometry::ball_volume(sf, r.x)?;
    Ok((r.x, volume))
}

// ---------------------------------------------------------------------------
// bound constants
// ---------------------------------------------------------------------------

/// Universal upper bound for the `(l+1)`-th tone in terms of the first:
/// `Γ^{l+1} ≤ floor + 25 l¹² (Γ¹ − floor)`.
pub fn cheng_yang_upper(sf: &SpaceForm, l: u32, gamma1: f64) -> Result<f64> {
    if l < 1 {
        return Err(Error::domain("eigenvalue index l starts at 1"));
    }
    let floor = mckean_floor(sf);
    if gamma1 < floor * (1.0 - 1e-12) {
        return Err(Error::domain(format!(
            "gamma1 = {gamma1} below the universal floor {floor}"
        )));
    }
    Ok(floor + 25.0 * (l as f64).powi(12) * (gamma1 - floor).max(0.0))
}

/// The dimensional constant `D_n = 2^{4/n} (j_{ν,1}/𝔥_ν)⁴`, `ν = n/2 − 1`,
/// appearing in the Euclidean high-dimension comparison `Γ ≥ D_n Γ(ball)`.
pub fn ashbaugh_laugesen_dn(n: u32) -> Result<f64> {
    if n < 4 {
        return Err(Error::domain(format!("D_n is defined for n >= 4, got {n}")));
    }
    let nu = n as f64 / 2.0 - 1.0;
    let j = bessel_first_zero(nu)?;
    let h = cross_product_root(nu)?;
    Ok(2.0f64.powf(4.0 / n as f64) * (j / h).powi(4))
}

// ---------------------------------------------------------------------------
// eigenfunction profile
// ---------------------------------------------------------------------------

/// Radial profile of the fundamental eigenfunction on the Poincaré ball:
///
/// ```text
/// v(r) = (1−r²)^ν [A 𝒢₊(ν, λ, r²/(1−r²)) + B 𝒢₋(ν, λ, r²/(1−r²))],
/// ```
///
/// normalized by `v(0) = A + B = 1` and clamped by
/// `A𝒢₊(λ, L̃) + B𝒢₋(λ, L̃) = 0` at the boundary `r = tanh(κL/2)`.
#[derive(Clone, Copy, Debug)]
pub struct EigenProfile {
    sf: SpaceForm,
    pub lambda: f64,
    pub a_coef: f64,
    pub b_coef: f64,
    /// Boundary coordinate `L̃ = sinh²(κL/2)`.
    pub ball_tilde: f64,
    /// Boundary radius in the Poincaré model, `tanh(κL/2)`.
    pub boundary_r: f64,
}

pub fn eigenfunction_profile(sf: &SpaceForm, l: f64) -> Result<EigenProfile> {
    check_hyperbolic(sf)?;
    check_low_dim(sf)?;
    if !(l > 0.0) {
        return Err(Error::domain(format!("radius must be > 0, got {l}")));
    }
    let half = sf.kappa() * l / 2.0;
    if half > 200.0 {
        return Err(Error::domain(
            "profile coefficients overflow for kappa*L > 400; use the tone directly".to_string(),
        ));
    }
    let tone = fundamental_tone(sf, l)?;
    let rc = Radial::from_s(half);
    let (minus, plus) = pairs(sf, tone.lambda);
    let gm = eval_g(minus, rc)?.value_unscaled();
    let gp = eval_g(plus, rc)?.value_unscaled();
    let denom = gm - gp;
    Ok(EigenProfile {
        sf: *sf,
        lambda: tone.lambda,
        a_coef: gm / denom,
        b_coef: -gp / denom,
        ball_tilde: rc.t,
        boundary_r: half.tanh(),
    })
}

impl EigenProfile {
    /// Evaluates `v` at Poincaré radius `r ∈ [0, boundary_r]`.
    pub fn eval(&self, r: f64) -> Result<f64> {
        if !(0.0..=self.boundary_r + 1e-15).contains(&r) {
            return Err(Error::domain(format!(
                "r = {r} outside [0, {}]",
                self.boundary_r
            )));
        }
        if r == 0.0 {
            return Ok(1.0);
        }
        let t = r * r / (1.0 - r * r);
        let rc = Radial::from_t(t);
        let (minus, plus) = pairs(&self.sf, self.lambda);
        let gm = eval_g(minus, rc)?.value_unscaled();
        let gp = eval_g(plus, rc)?.value_unscaled();
        Ok((1.0 - r * r).powf(self.sf.nu()) * (self.a_coef * gp + self.b_coef * gm))
    }
}
