//! Evaluation engine for the radial hypergeometric solutions
//!
//! ```text
//! 𝒢(Λ²; c; t) = F((1−Λ)/2, (1+Λ)/2; c; −t),    c = n/2,
//! ```
//!
//! where `Λ² = (n−1)² ± 4λ²/κ²` may be negative (then `Λ` is purely
//! imaginary and the parameters form a conjugate pair; the value stays
//! real). Everything is parametrized by the real number `Λ²`, which makes
//! the series analytic across the branch point `Λ = 0` — the Pochhammer
//! products obey
//!
//! ```text
//! (a+k)(b+k) = (1−Λ²)/4 + k + k²
//! ```
//!
//! uniformly in both regimes.
//!
//! Four routes, chosen by `c` and the size of `t`:
//!
//! * direct series in `−t` for `t ≤ 1/2` (real arithmetic, any `c`);
//! * Pfaff-mapped series `(1+t)^{−b} F(c−a, b; c; t/(1+t))` for moderate
//!   `t` (complex arithmetic, any `c`);
//! * closed `sin`/`sinh` forms for `c = 3/2` (n = 3), valid at any `t`;
//! * for `c = 1` (n = 2) and large `t`, the Legendre-function connection
//!   `𝒢 = P_ν(1+2t)` with `ν = (Λ−1)/2` expanded in powers of `(1+2t)^{−2}`,
//!   which converges faster the larger `t` is. The mapped series cannot
//!   reach `t ≫ 1` within any reasonable term cap, so this route is what
//!   makes large hyperbolic balls computable.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gamma::ln_gamma_complex;

/// Relative stop tolerance for all series.
const SERIES_EPS: f64 = 1e-15;
/// Hard cap on series terms; exceeding it is an error, never a warning.
pub(crate) const TERM_CAP: usize = 100_000;
/// Above this `t`, the `c = 1` dispatch prefers the Legendre connection.
const LEGENDRE_SWITCH_T: f64 = 50.0;
/// Direct series is used up to this `t`.
const DIRECT_SWITCH_T: f64 = 0.5;
/// Real `Λ` at an even integer makes the Legendre connection formula
/// degenerate (logarithmic case). Away from the exact degeneracy the two
/// branches cancel gracefully, costing about `ε/dist` in relative accuracy,
/// so only an essentially-exact hit is rejected.
const LEGENDRE_GUARD: f64 = 1e-6;

/// Radial coordinate carried in both forms: `t = sinh²(s)`. For very large
/// balls `t` overflows while `s` stays small; routes that only need `s`
/// keep working there.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Radial {
    pub t: f64,
    pub s: f64,
}

impl Radial {
    pub fn from_t(t: f64) -> Self {
        Radial { t, s: t.sqrt().asinh() }
    }

    pub fn from_s(s: f64) -> Self {
        let sh = s.sinh();
        Radial { t: sh * sh, s }
    }
}

/// The parameter pair `((1−Λ)/2, (1+Λ)/2; c)` encoded by `Λ²` (real; negative
/// means `Λ` imaginary) and `c = n/2`.
#[derive(Clone, Copy, Debug)]
pub(crate) struct ParamPair {
    pub lambda_sq: f64,
    pub c: f64,
}

impl ParamPair {
    /// The product `a·b = (1 − Λ²)/4`; real in both regimes.
    pub fn ab(&self) -> f64 {
        (1.0 - self.lambda_sq) / 4.0
    }

    /// `Λ` as a complex number: `√(Λ²)` on the real axis or `i√(−Λ²)`.
    fn lambda(&self) -> Complex64 {
        if self.lambda_sq >= 0.0 {
            Complex64::new(self.lambda_sq.sqrt(), 0.0)
        } else {
            Complex64::new(0.0, (-self.lambda_sq).sqrt())
        }
    }
}

/// A scaled evaluation: the function value is `value·exp(ln_scale)` and its
/// t-derivative is `d_t·exp(ln_scale)`. The scale keeps log-derivatives
/// (all the spectral layer needs) overflow-free for huge balls.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Eval {
    pub ln_scale: f64,
    pub value: f64,
    pub d_t: f64,
}

impl Eval {
    /// The plain function value; may overflow to `±inf` honestly.
    pub fn value_unscaled(&self) -> f64 {
        if self.ln_scale == 0.0 {
            self.value
        } else {
            scaled_to_f64(self.ln_scale, self.value)
        }
    }

    /// The plain t-derivative.
    pub fn d_t_unscaled(&self) -> f64 {
        if self.ln_scale == 0.0 {
            self.d_t
        } else {
            scaled_to_f64(self.ln_scale, self.d_t)
        }
    }

    /// `d/dt ln 𝒢`, scale-free.
    pub fn log_deriv(&self) -> f64 {
        self.d_t / self.value
    }
}

fn scaled_to_f64(ln_scale: f64, v: f64) -> f64 {
    if v == 0.0 {
        return 0.0;
    }
    let ln = ln_scale + v.abs().ln();
    if ln > 709.0 {
        f64::INFINITY * v.signum()
    } else {
        v.signum() * ln.exp()
    }
}

/// Evaluates `𝒢` and `d𝒢/dt`, dispatching on `c` and `t`.
pub(crate) fn eval_g(p: ParamPair, rc: Radial) -> Result<Eval> {
    if rc.t == 0.0 {
        return Ok(Eval { ln_scale: 0.0, value: 1.0, d_t: -p.ab() / p.c });
    }
    if !(rc.s > 0.0) {
        return Err(Error::domain(format!("t must be >= 0, got {}", rc.t)));
    }
    if p.c == 1.5 {
        // below ~1e−4 the closed-form t-derivative loses digits to
        // cancellation; the direct series is exact there and cheap
        if rc.t < 1e-4 {
            return series_direct(p, rc);
        }
        return Ok(closed_3d(p, rc));
    }
    if rc.t <= DIRECT_SWITCH_T {
        return series_direct(p, rc);
    }
    if p.c == 1.0 {
        if rc.t <= LEGENDRE_SWITCH_T {
            return series_mapped(p, rc);
        }
        match legendre(p, rc) {
            Ok(e) => return Ok(e),
            Err(Error::Domain(_)) => return series_mapped(p, rc),
            Err(e) => return Err(e),
        }
    }
    series_mapped(p, rc)
}

/// `d/dt ln 𝒢`; same dispatch as [`eval_g`] but with an overflow-free closed
/// form for `c = 3/2`, so it works for arbitrarily large balls at n = 3.
pub(crate) fn log_deriv(p: ParamPair, rc: Radial) -> Result<f64> {
    if p.c == 1.5 && rc.t >= 1e-8 {
        // d/dt ln[sinhc(Λ², s)/√t] with ds/dt = 1/(2 sinh s cosh s)
        let ratio = coth_ratio(p.lambda_sq, rc.s);
        let (sh, ch) = (rc.s.sinh(), rc.s.cosh());
        return Ok(ratio / (2.0 * sh * ch) - 1.0 / (2.0 * sh * sh));
    }
    let e = eval_g(p, rc)?;
    if e.value == 0.0 || e.value.abs() < 1e-280 {
        return Err(Error::AtPole { k: 0, nearest_pole: f64::NAN });
    }
    Ok(e.log_deriv())
}

// ---------------------------------------------------------------------------
// direct series, real arithmetic, analytic in Λ²
// ---------------------------------------------------------------------------

fn series_direct(p: ParamPair, rc: Radial) -> Result<Eval> {
    let ab = p.ab();
    let x = -rc.t;
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    // shifted series for F(a+1, b+1; c+1; −t): products (a+1+k)(b+1+k)
    let mut dterm = 1.0f64;
    let mut dsum = 1.0f64;
    let mut quiet = 0u32;
    for k in 0..TERM_CAP {
        let kf = k as f64;
        term *= (ab + kf + kf * kf) / ((p.c + kf) * (kf + 1.0)) * x;
        sum += term;
        dterm *= (ab + (kf + 1.0) * (kf + 2.0)) / ((p.c + 1.0 + kf) * (kf + 1.0)) * x;
        dsum += dterm;
        if term.abs() <= SERIES_EPS * sum.abs() && dterm.abs() <= SERIES_EPS * dsum.abs() {
            quiet += 1;
            if quiet >= 2 {
                return Ok(Eval { ln_scale: 0.0, value: sum, d_t: -(ab / p.c) * dsum });
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::SeriesNoConvergence {
        terms: TERM_CAP,
        t: rc.t,
        last_term: term,
        partial_sum: sum,
    })
}

// ---------------------------------------------------------------------------
// Pfaff-mapped series, complex arithmetic
// ---------------------------------------------------------------------------

/// `F(a,b;c;−t) = (1+t)^{−b} F(c−a, b; c; z)` with `z = t/(1+t) ∈ [0,1)`.
/// The derivative uses the shifted parameters `(c−a, b+1; c+1)`.
fn series_mapped(p: ParamPair, rc: Radial) -> Result<Eval> {
    if !rc.t.is_finite() {
        return Err(Error::domain(format!(
            "mapped series needs finite t (s = {}); no route for c = {} there",
            rc.s, p.c
        )));
    }
    let lam = p.lambda();
    let one = Complex64::new(1.0, 0.0);
    let b = (one + lam) / 2.0;
    let ca = Complex64::new(p.c, 0.0) - (one - lam) / 2.0; // c − a
    let c = p.c;
    let z = rc.t / (1.0 + rc.t);

    let mut u = one;
    let mut sum = one;
    let mut ud = one;
    let mut sumd = one;
    let mut quiet = 0u32;
    let mut converged = false;
    // near z = 1 the tail behaves geometrically like Σ z^j ≈ 1/(1−z) = 1+t,
    // so the last-term test must be tightened by that factor
    let eps = SERIES_EPS / (1.0 + rc.t);
    for k in 0..TERM_CAP {
        let kf = k as f64;
        u *= (ca + kf) * (b + kf) * (z / ((c + kf) * (kf + 1.0)));
        sum += u;
        ud *= (ca + kf) * (b + one + kf) * (z / ((c + 1.0 + kf) * (kf + 1.0)));
        sumd += ud;
        if u.norm_sqr() <= eps * eps * sum.norm_sqr()
            && ud.norm_sqr() <= eps * eps * sumd.norm_sqr()
        {
            quiet += 1;
            if quiet >= 2 {
                converged = true;
                break;
            }
        } else {
            quiet = 0;
        }
    }
    if !converged {
        return Err(Error::SeriesNoConvergence {
            terms: TERM_CAP,
            t: rc.t,
            last_term: u.norm(),
            partial_sum: sum.re,
        });
    }
    let ln1pt = rc.t.ln_1p();
    let pref = (-b * ln1pt).exp();
    let prefd = (-(b + one) * ln1pt).exp();
    let value = (pref * sum).re;
    let d_t = -(p.ab() / c) * (prefd * sumd).re;
    Ok(Eval { ln_scale: 0.0, value, d_t })
}

// ---------------------------------------------------------------------------
// closed forms for c = 3/2 (n = 3)
// ---------------------------------------------------------------------------

/// `sinhc(P, s) = sinh(√P s)/√P`, continued through `P = 0` (value `s`) and
/// `P < 0` (`sin(√−P s)/√−P`), together with its s-derivative `coshc`.
fn sinhc_coshc(p: f64, s: f64) -> (f64, f64) {
    let w = p.abs().sqrt() * s;
    if w < 1e-4 {
        // Taylor in P s²: sinh/sin and cosh/cos agree through these orders
        let ps2 = p * s * s;
        let sinhc = s * (1.0 + ps2 / 6.0 * (1.0 + ps2 / 20.0));
        let coshc = 1.0 + ps2 / 2.0 * (1.0 + ps2 / 12.0);
        (sinhc, coshc)
    } else if p > 0.0 {
        let sq = p.sqrt();
        ((sq * s).sinh() / sq, (sq * s).cosh())
    } else {
        let sq = (-p).sqrt();
        ((sq * s).sin() / sq, (sq * s).cos())
    }
}

/// `√P coth(√P s)` continued through `P = 0` (`1/s`) and `P < 0`
/// (`√−P cot(√−P s)`). This is `coshc/sinhc`, the s-log-derivative of sinhc.
pub(crate) fn coth_ratio(p: f64, s: f64) -> f64 {
    let w = p.abs().sqrt() * s;
    if w < 1e-4 {
        let ps2 = p * s * s;
        // 1/s + P s/3 − P² s³/45 + …
        1.0 / s + p * s / 3.0 * (1.0 - ps2 / 15.0)
    } else if p > 0.0 {
        let sq = p.sqrt();
        sq / (sq * s).tanh()
    } else {
        let sq = (-p).sqrt();
        sq / (sq * s).tan()
    }
}

fn closed_3d(p: ParamPair, rc: Radial) -> Eval {
    let (sinhc, coshc) = sinhc_coshc(p.lambda_sq, rc.s);
    let sh = rc.s.sinh(); // = √t
    let ch = rc.s.cosh(); // = √(1+t)
    let value = sinhc / sh;
    let t = rc.t;
    let d_t = coshc / (2.0 * t * ch) - sinhc / (2.0 * t * sh);
    Eval { ln_scale: 0.0, value, d_t }
}

// ---------------------------------------------------------------------------
// Legendre connection for c = 1 (n = 2), large t
// ---------------------------------------------------------------------------

/// `𝒢(Λ²; 1; t) = P_ν(Z)` with `Z = 1 + 2t = cosh(2s)` and `ν = (Λ−1)/2`.
/// For `Z > 1`,
///
/// ```text
/// P_ν(Z) = T(ν) + T(−ν−1),
/// T(ν)  = Γ(ν+½)/(√π Γ(ν+1)) · (2Z)^ν · F(−ν/2, (1−ν)/2; ½−ν; Z⁻²),
/// ```
///
/// and for imaginary `Λ` the two branches are conjugate, so the sum is
/// `2 Re T(ν)`. The `(2Z)^ν` factor is carried as a log-scale so the route
/// works up to `s ≈ 350` without overflow or underflow.
fn legendre(p: ParamPair, rc: Radial) -> Result<Eval> {
    // ln(2Z) computed from s alone: 2Z = e^{2s} + e^{−2s}
    let ln2z = 2.0 * rc.s + (-4.0 * rc.s).exp().ln_1p();
    let x = 4.0 * (-2.0 * ln2z).exp(); // Z⁻², underflows harmlessly to 0

    // Exact hits of the logarithmic cases (Λ ∈ 2ℤ, including the branch
    // point Λ = 0) are nudged off by ~1e−6 in Λ; the value is analytic in
    // Λ², so the bias is far below the graceful-cancellation noise floor.
    let mut lambda_sq = p.lambda_sq;
    if lambda_sq.abs() < LEGENDRE_GUARD * LEGENDRE_GUARD * 4.0 {
        lambda_sq = -4.0 * LEGENDRE_GUARD * LEGENDRE_GUARD;
    } else if lambda_sq > 0.0 {
        let lam = lambda_sq.sqrt();
        let near = 2.0 * (lam / 2.0).round();
        if near > 0.0 && (lam - near).abs() < LEGENDRE_GUARD {
            let nudged = if lam >= near { near + LEGENDRE_GUARD } else { near - LEGENDRE_GUARD };
            lambda_sq = nudged * nudged;
        }
    }
    let p = ParamPair { lambda_sq, ..p };

    if p.lambda_sq >= 0.0 {
        let lam = p.lambda_sq.sqrt();
        let nu = (lam - 1.0) / 2.0;
        let (c1, s1, sd1) = legendre_branch(Complex64::new(nu, 0.0), x)?;
        let (c2, s2, sd2) = legendre_branch(Complex64::new(-nu - 1.0, 0.0), x)?;
        // second branch is smaller by (2Z)^{−2ν−1} = e^{−Λ ln 2Z}
        let rho = (-lam * ln2z).exp();
        let value = c1.re * s1.re + rho * c2.re * s2.re;
        let deriv_part = c1.re * sd1.re + rho * c2.re * sd2.re;
        // dP/dt = 2 dP/dZ = 4 e^{−ln2Z} · (branch sums with (ν−2k) factors)
        let d_t = 4.0 * (-ln2z).exp() * deriv_part;
        Ok(Eval { ln_scale: nu * ln2z, value, d_t })
    } else {
        let mu = 0.5 * (-p.lambda_sq).sqrt(); // ν = −1/2 + iμ
        let nu = Complex64::new(-0.5, mu);
        let (c1, s1, sd1) = legendre_branch(nu, x)?;
        let phase = Complex64::new(0.0, mu * ln2z).exp();
        let value = 2.0 * (c1 * phase * s1).re;
        let d_t = 8.0 * (-ln2z).exp() * (c1 * phase * sd1).re;
        Ok(Eval { ln_scale: -0.5 * ln2z, value, d_t })
    }
}

/// One branch of the connection: returns `(C(ν), S, S_d)` where
/// `S = Σ f_k x^k`, `S_d = Σ f_k (ν−2k) x^k` and
/// `C(ν) = Γ(ν+½)/(√π Γ(ν+1))`.
fn legendre_branch(nu: Complex64, x: f64) -> Result<(Complex64, Complex64, Complex64)> {
    let half = Complex64::new(0.5, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let ln_c = ln_gamma_complex(nu + half) - ln_gamma_complex(nu + one)
        - Complex64::new(0.5 * std::f64::consts::PI.ln(), 0.0);
    let c = ln_c.exp();

    let a = -nu / 2.0;
    let b = (one - nu) / 2.0;
    let cc = half - nu;
    let mut f = one;
    let mut s = one;
    let mut sd = nu;
    if x == 0.0 {
        return Ok((c, s, sd));
    }
    let mut quiet = 0u32;
    for k in 0..TERM_CAP {
        let kf = k as f64;
        f = f * (a + kf) * (b + kf) / ((cc + kf) * (kf + 1.0)) * x;
        s += f;
        let fd = f * (nu - Complex64::new(2.0 * (kf + 1.0), 0.0));
        sd += fd;
        let scale = s.norm_sqr().max(1e-300);
        let scale_d = sd.norm_sqr().max(scale);
        if f.norm_sqr() <= SERIES_EPS * SERIES_EPS * scale
            && fd.norm_sqr() <= SERIES_EPS * SERIES_EPS * scale_d
        {
            quiet += 1;
            if quiet >= 2 {
                return Ok((c, s, sd));
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::SeriesNoConvergence {
        terms: TERM_CAP,
        t: 1.0 / x,
        last_term: f.norm(),
        partial_sum: s.re,
    })
}
