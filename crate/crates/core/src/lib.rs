//! Fundamental tones of clamped plates on geodesic balls.
//!
//! The clamped-plate problem on a ball `B(L)` of the space form with constant
//! sectional curvature `-κ²` asks for the smallest `Γ` with
//!
//! ```text
//! Δ²u = Γ u   in B(L),      u = ∂u/∂n = 0   on ∂B(L).
//! ```
//!
//! For `κ > 0` the radial solutions are Gaussian hypergeometric functions in
//! the coordinate `t = sinh²(κr/2)`, and `Γ = λ⁴` where `λ` is the first
//! positive root of a logarithmic-derivative cross term `𝒦_ν(λ, t)`. For
//! `κ = 0` the same role is played by the Bessel cross product
//! `J_ν I_{ν+1} + I_ν J_{ν+1}`, whose first root `𝔥_ν` gives `Γ = 𝔥_ν⁴/L⁴`.
//!
//! Crate layout:
//!
//! * [`specfun`] — hypergeometric evaluation, Bessel functions and their
//!   special constants, oscillation classification.
//! * [`geometry`] — space-form volumes, the `t = sinh²(κr/2)` coordinate,
//!   two-ball volume splitting.
//! * [`tones`] — the spectral layer: `𝒦_ν`, its pole ladder `𝔤_{ν,k}`,
//!   one-ball and two-ball tones, asymptotics, thresholds, bound constants.
//! * [`oracle`] — an independent finite-difference discretization used to
//!   cross-check the transcendental roots.

// `!(x > 0.0)`-style guards are used on purpose: unlike `x <= 0.0` they
// also reject NaN arguments.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod geometry;
pub mod oracle;
pub mod specfun;
pub mod tones;

mod gamma;
mod solve;

pub use error::{Error, Result};
pub use geometry::{SpaceForm, TwoBallConfig};
pub use tones::{Method, ToneResult};
