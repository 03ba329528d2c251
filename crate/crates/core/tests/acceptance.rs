//! Acceptance suite. Each criterion prints one PASS/FAIL line per check at
//! the tolerance pinned here, then asserts.
//!
//! Three checks compare against published reference values that are
//! internally inconsistent with the defining equations (the same equations
//! those references came from); they are implemented faithfully as stated
//! and left red rather than weakened:
//!
//! * the n = 2 asymptotic column of the small-ball table was generated with
//!   `(n−1)⁴κ⁴/16` in place of `(n−1)²κ²/4` inside the square root;
//! * the large-ball table's "L = 50" row was computed at L = 40 (our L = 40
//!   value reproduces its printed digits to 5 significant figures);
//! * the large-ball failure constant `2(1/ln2 − √2) ≈ 0.0569` drops a
//!   factor 2 in the half-volume shift `L₀ = L − ln2/2`; the honestly
//!   computed limit is `2(2/ln2 − √2) ≈ 2.9424`, which we verify instead in
//!   a companion check.

use plate_tones::geometry::{ball_volume, half_volume_radius, tilde_of_radius};
use plate_tones::oracle::{fd_plate_tone, RadialGrid};
use plate_tones::specfun::{
    bessel_first_zero, classify_w_minus, cross_product_root, hyper_g, HyperParams,
    OscillationKind, Sign,
};
use plate_tones::tones::{
    fundamental_tone, k_nu_scaled_at_radius, pole_g, pole_g_at_radius, sharpness_gap,
    threshold_radius, tone_asymptotic_large_3d, tone_asymptotic_small, two_ball_tone,
};
use plate_tones::{SpaceForm, TwoBallConfig};
use std::time::Instant;

fn sf(n: u32, kappa: f64) -> SpaceForm {
    SpaceForm::new(n, kappa).unwrap()
}

struct Report {
    name: &'static str,
    failures: Vec<String>,
    checks: usize,
}

impl Report {
    fn new(name: &'static str) -> Self {
        Report { name, failures: Vec::new(), checks: 0 }
    }

    fn check(&mut self, ok: bool, detail: String) {
        self.checks += 1;
        if !ok {
            self.failures.push(detail);
        }
    }

    fn finish(self) {
        if self.failures.is_empty() {
            println!("{}: PASS ({} checks)", self.name, self.checks);
        } else {
            println!(
                "{}: FAIL ({} of {} checks failed)",
                self.name,
                self.failures.len(),
                self.checks
            );
            for f in &self.failures {
                println!("  - {f}");
            }
        }
        assert!(self.failures.is_empty(), "{} failed", self.name);
    }
}

// reference values of Γ^{1/4}, κ = 1, L ∈ {0.7, 0.1, 0.05, 0.003}
const TABLE1_L: [f64; 4] = [0.7, 0.1, 0.05, 0.003];
const TABLE1_ALG_N2: [f64; 4] = [4.5908, 31.9657, 63.9262, 1065.4069];
const TABLE1_ALG_N3: [f64; 4] = [5.6761, 39.2755, 78.5368, 1308.8677];
const TABLE1_ASY_N2: [f64; 4] = [4.5728, 31.9631, 63.9248, 1065.4066];
const TABLE1_ASY_N3: [f64; 4] = [5.6978, 39.2787, 78.5383, 1308.8670];

#[test]
fn criterion_1_table1_algebraic() {
    let start = Instant::now();
    let mut rep = Report::new("criterion 1a (small-ball table, algebraic column, tol 1e-3)");
    for (n, refs) in [(2u32, &TABLE1_ALG_N2), (3u32, &TABLE1_ALG_N3)] {
        let s = sf(n, 1.0);
        for (&l, &want) in TABLE1_L.iter().zip(refs.iter()) {
            let got = fundamental_tone(&s, l).unwrap().lambda;
            rep.check(
                (got - want).abs() <= 1e-3,
                format!("n={n} L={l}: got {got:.6}, reference {want}"),
            );
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    rep.check(elapsed < 5.0, format!("runtime {elapsed:.2}s exceeds 5s"));
    rep.finish();
}

#[test]
fn criterion_1_table1_asymptotic() {
    let mut rep = Report::new("criterion 1b (small-ball table, asymptotic column, tol 1e-3)");
    for (n, refs) in [(2u32, &TABLE1_ASY_N2), (3u32, &TABLE1_ASY_N3)] {
        let s = sf(n, 1.0);
        for (&l, &want) in TABLE1_L.iter().zip(refs.iter()) {
            let got = tone_asymptotic_small(&s, l).unwrap().powf(0.25);
            rep.check(
                (got - want).abs() <= 1e-3,
                format!(
                    "n={n} L={l}: formula gives {got:.6}, reference {want} \
                     (reference consistent with (n-1)^4/16 inside the root, \
                     not the stated (n-1)^2/4)"
                ),
            );
        }
    }
    rep.finish();
}

#[test]
fn criterion_2_table2_rows_100_5000_100000() {
    let mut rep = Report::new("criterion 2a (large-ball table, consistent rows)");
    let s3 = sf(3, 1.0);
    for (l, want, rel_tol) in [
        (100.0, 5.0041e-4, 1e-3),
        (5000.0, 1.9745e-7, 1e-3),
        (100_000.0, 4.71e-10, 0.10),
    ] {
        let delta = fundamental_tone(&s3, l).unwrap().lambda - 1.0;
        rep.check(
            ((delta - want) / want).abs() <= rel_tol,
            format!("L={l}: delta {delta:.6e}, reference {want:.4e}"),
        );
    }
    // approximate column equals the closed formula to emitted precision
    for l in [50.0, 100.0, 5000.0, 100_000.0] {
        let v = tone_asymptotic_large_3d(1.0, l).unwrap();
        let formula = (1.0 + (std::f64::consts::PI / l).powi(2)).powi(2);
        rep.check(
            (v - formula).abs() <= 1e-12 * formula,
            format!("approx column L={l} deviates from the closed formula"),
        );
    }
    rep.finish();
}

#[test]
fn criterion_2_table2_row_50() {
    let mut rep = Report::new("criterion 2b (large-ball table, L=50 row, rel tol 0.1%)");
    let s3 = sf(3, 1.0);
    let delta = fundamental_tone(&s3, 50.0).unwrap().lambda - 1.0;
    let want = 3.1908e-3;
    let at_40 = fundamental_tone(&s3, 40.0).unwrap().lambda - 1.0;
    rep.check(
        ((delta - want) / want).abs() <= 1e-3,
        format!(
            "L=50: delta {delta:.6e}, reference {want:.4e}; the reference row \
             reproduces L = 40 (our L=40 delta is {at_40:.6e})"
        ),
    );
    rep.finish();
}

#[test]
fn criterion_3_thresholds_n3() {
    let start = Instant::now();
    let mut rep = Report::new("criterion 3a (n=3 threshold and volume cap)");
    let (l3, cap) = threshold_radius(&sf(3, 1.0)).unwrap();
    rep.check((l3 - 0.719).abs() <= 1e-3, format!("l3 = {l3:.6}, want 0.719 +- 1e-3"));
    rep.check((cap - 1.721).abs() <= 5e-3, format!("cap = {cap:.6}, want 1.721 +- 5e-3"));
    let elapsed = start.elapsed().as_secs_f64();
    rep.check(elapsed < 30.0, format!("runtime {elapsed:.2}s exceeds 30s"));
    rep.finish();
}

#[test]
fn criterion_3_thresholds_n2() {
    let start = Instant::now();
    let mut rep = Report::new("criterion 3b (n=2 threshold and volume cap)");
    let (l2, cap) = threshold_radius(&sf(2, 1.0)).unwrap();
    let tilde = tilde_of_radius(1.0, l2).unwrap();
    rep.check(
        (l2 - 2.1492).abs() <= 5e-4,
        format!(
            "l2 = {l2:.6}, want 2.1492 +- 5e-4; the crossing expressed in the \
             tilde coordinate is {tilde:.6}, matching the reference digits - \
             the published value is the tilde coordinate, not the radius"
        ),
    );
    rep.check(
        (cap - 21.031).abs() <= 0.02,
        format!("cap = {cap:.6}, want 21.031 +- 0.02 (volume at the true radius)"),
    );
    let elapsed = start.elapsed().as_secs_f64();
    rep.check(elapsed < 30.0, format!("runtime {elapsed:.2}s exceeds 30s"));
    rep.finish();
}

#[test]
fn criterion_4_small_radius_ratio_limits() {
    let mut rep = Report::new("criterion 4 (g1/lambda ratios at L = 1e-3)");
    for (n, want) in [(2u32, 1.064), (3u32, 1.008)] {
        let s = sf(n, 1.0);
        let gap = sharpness_gap(&s, 1e-3).unwrap();
        let ratio = gap.g1 / gap.lambda;
        rep.check(
            (ratio - want).abs() <= 2e-3,
            format!("n={n}: ratio {ratio:.6}, want {want} +- 2e-3"),
        );
    }
    rep.finish();
}

/// The criterion-5 quantity: scaled `𝒦` at the first half-volume pole,
/// evaluated at the full ball. Radius-parametrized (`t̃` overflows here).
fn failure_constant_at(l: f64) -> f64 {
    let s3 = sf(3, 1.0);
    let l0 = half_volume_radius(&s3, l).unwrap();
    let g1 = pole_g_at_radius(&s3, 1, l0).unwrap();
    k_nu_scaled_at_radius(&s3, g1, l).unwrap()
}

#[test]
fn criterion_5_large_radius_failure_constant_as_stated() {
    let mut rep = Report::new("criterion 5 (scaled K at (g1(L0~), L~), L = 1e3, tol 1e-4)");
    let got = failure_constant_at(1000.0);
    let stated = 2.0 * (1.0 / std::f64::consts::LN_2 - std::f64::consts::SQRT_2);
    rep.check(
        (got - stated).abs() <= 1e-4,
        format!(
            "value {got:.6} vs stated {stated:.6}; the stated constant uses the \
             half-volume shift ln2 instead of ln2/2 - see the companion check"
        ),
    );
    rep.finish();
}

#[test]
fn criterion_5_companion_corrected_constant() {
    let mut rep = Report::new("criterion 5' (same quantity against 2(2/ln2 - sqrt2))");
    let got = failure_constant_at(1000.0);
    let corrected = 2.0 * (2.0 / std::f64::consts::LN_2 - std::f64::consts::SQRT_2);
    rep.check(
        (got - corrected).abs() <= 1e-4,
        format!("value {got:.8} vs corrected limit {corrected:.8}"),
    );
    rep.finish();
}

#[test]
fn criterion_6_special_constants() {
    let mut rep = Report::new("criterion 6 (special constants)");
    let h0 = cross_product_root(0.0).unwrap();
    rep.check((h0 - 3.19622).abs() <= 5e-5, format!("h_0 = {h0:.7}"));
    let h12 = cross_product_root(0.5).unwrap();
    rep.check((h12 - 3.9266).abs() <= 5e-4, format!("h_1/2 = {h12:.7}"));
    let j0 = bessel_first_zero(0.0).unwrap();
    rep.check((j0 - 2.4048).abs() <= 5e-5, format!("j_0,1 = {j0:.7}"));
    let j12 = bessel_first_zero(0.5).unwrap();
    rep.check(
        (j12 - std::f64::consts::PI).abs() <= 1e-10,
        format!("j_1/2,1 = {j12:.12}, want pi to 1e-10"),
    );
    rep.finish();
}

/// Small deterministic xorshift generator so the random configuration sets
/// are reproducible.
struct Rng(u64);

impl Rng {
    fn next(&mut self) -> f64 {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        (self.0 >> 11) as f64 / (1u64 << 53) as f64
    }
}

#[test]
fn criterion_7a_mckean_floor_over_random_configs() {
    let mut rep = Report::new("criterion 7a (McKean floor over 1000 random two-ball configs)");
    let mut rng = Rng(0x5eed_1234_5678_9abc);
    for i in 0..1000 {
        let n = if i % 5 < 3 { 3u32 } else { 2u32 };
        let s = sf(n, 1.0);
        let l = 0.05 + 1.95 * rng.next();
        let total = tilde_of_radius(1.0, l).unwrap();
        let t0 = tilde_of_radius(1.0, half_volume_radius(&s, l).unwrap()).unwrap();
        let alpha = (0.01 + 0.99 * rng.next()) * t0;
        let cfg = TwoBallConfig::from_alpha(&s, alpha, total).unwrap();
        let tone = two_ball_tone(&s, &cfg).unwrap();
        let floor = (n - 1) as f64 / 2.0;
        rep.check(
            tone.lambda > floor && tone.gamma >= floor.powi(4),
            format!(
                "config {i}: n={n} L={l:.4} alpha={alpha:.4}: lambda {} at floor {floor}",
                tone.lambda
            ),
        );
    }
    rep.finish();
}

#[test]
fn criterion_7b_two_ball_dominates_one_ball() {
    let mut rep = Report::new("criterion 7b (two-ball >= one-ball over 100 configs, L <= l_n)");
    let mut rng = Rng(0xabcdef0123456789);
    for i in 0..100 {
        let (n, l_max) = if i % 2 == 0 { (3u32, 0.71) } else { (2u32, 2.1) };
        let s = sf(n, 1.0);
        let l = 0.1 + (l_max - 0.1) * rng.next();
        let total = tilde_of_radius(1.0, l).unwrap();
        let t0 = tilde_of_radius(1.0, half_volume_radius(&s, l).unwrap()).unwrap();
        let alpha = (0.02 + 0.98 * rng.next()) * t0;
        let cfg = TwoBallConfig::from_alpha(&s, alpha, total).unwrap();
        let two = two_ball_tone(&s, &cfg).unwrap().lambda;
        let one = fundamental_tone(&s, l).unwrap().lambda;
        rep.check(
            two >= one - 1e-9,
            format!("config {i}: n={n} L={l:.4} alpha={alpha:.4}: {two:.8} < {one:.8}"),
        );
    }
    rep.finish();
}

#[test]
fn criterion_7c_equal_balls_hit_the_pole() {
    let mut rep = Report::new("criterion 7c (lambda(t0,t0) = g1(t0) to 1e-8)");
    for (n, l) in [(2u32, 0.6f64), (2, 1.8), (3, 0.4), (3, 0.7)] {
        let s = sf(n, 1.0);
        let t0 = tilde_of_radius(1.0, half_volume_radius(&s, l).unwrap()).unwrap();
        let cfg = TwoBallConfig::from_parts(&s, t0, t0).unwrap();
        let lam = two_ball_tone(&s, &cfg).unwrap().lambda;
        let pole = pole_g(&s, 1, t0).unwrap();
        rep.check(
            (lam - pole).abs() <= 1e-8,
            format!("n={n} L={l}: lambda {lam:.10} vs pole {pole:.10}"),
        );
    }
    rep.finish();
}

#[test]
fn criterion_7d_oscillation_verdicts_on_k_grid() {
    let mut rep = Report::new("criterion 7d (oscillation verdicts on 20-point K grid)");
    for n in [2u32, 3] {
        let thresh = ((n - 1) as f64).powi(4) / 16.0;
        let below: [f64; 10] = [0.05, 0.15, 0.25, 0.35, 0.45, 0.55, 0.65, 0.75, 0.85, 0.95];
        let above: [f64; 10] = [1.5, 2.0, 3.0, 4.0, 6.0, 8.0, 12.0, 16.0, 24.0, 32.0];
        for &frac in &below {
            let k = frac * thresh;
            let v = classify_w_minus(k, n, 1e6).unwrap();
            rep.check(
                v.kind == OscillationKind::PositiveEverywhere,
                format!("n={n} K={k:.4}: expected positive, got {:?}", v.kind),
            );
            // comparison w+ >= w- > 0 on sampled points
            let lam = k.powf(0.25);
            let p = HyperParams::new(n, lam, 1.0).unwrap();
            for &t in &[0.1, 1.0, 100.0, 1e4] {
                let wm = hyper_g(Sign::Minus, &p, t).unwrap();
                let wp = hyper_g(Sign::Plus, &p, t).unwrap();
                rep.check(
                    wp >= wm && wm > 0.0,
                    format!("n={n} K={k:.4} t={t}: w+ = {wp:.3e}, w- = {wm:.3e}"),
                );
            }
        }
        for &mult in &above {
            let k = mult * thresh;
            let v = classify_w_minus(k, n, 1e6).unwrap();
            rep.check(
                v.kind == OscillationKind::Oscillatory,
                format!("n={n} K={k:.4}: expected oscillatory, got {:?}", v.kind),
            );
        }
    }
    rep.finish();
}

#[test]
fn criterion_7e_concordance_bracket_n3() {
    let mut rep = Report::new("criterion 7e (n=3 tone inside the ladder bracket)");
    let s3 = sf(3, 1.0);
    for &l in &[0.003, 0.05, 0.1, 0.7, 1.0, 2.0, 5.0, 10.0, 50.0, 100.0, 500.0] {
        let lam = fundamental_tone(&s3, l).unwrap().lambda;
        let lo = (1.0 + (std::f64::consts::PI / l).powi(2)).sqrt();
        let hi = (1.0 + (2.0 * std::f64::consts::PI / l).powi(2)).sqrt();
        rep.check(
            lo <= lam && lam <= hi,
            format!("L={l}: lambda {lam:.8} outside [{lo:.8}, {hi:.8}]"),
        );
    }
    rep.finish();
}

#[test]
fn criterion_8_finite_difference_agreement() {
    let mut rep = Report::new("criterion 8 (finite-difference oracle, 1% at 512 points)");
    // every small-ball table row
    for (n, ls) in [(2u32, TABLE1_L), (3u32, TABLE1_L)] {
        let s = sf(n, 1.0);
        for &l in &ls {
            let grid = RadialGrid::new(&s, l, 512).unwrap();
            let fd = fd_plate_tone(&s, &grid).unwrap();
            let exact = fundamental_tone(&s, l).unwrap().gamma;
            rep.check(
                ((fd - exact) / exact).abs() <= 1e-2,
                format!("n={n} L={l}: fd {fd:.6e} vs {exact:.6e}"),
            );
        }
    }
    // Euclidean closed forms
    for (n, l) in [(2u32, 1.0f64), (3, 2.0)] {
        let s = sf(n, 0.0);
        let grid = RadialGrid::new(&s, l, 512).unwrap();
        let fd = fd_plate_tone(&s, &grid).unwrap();
        let exact = fundamental_tone(&s, l).unwrap().gamma;
        rep.check(
            ((fd - exact) / exact).abs() <= 1e-2,
            format!("euclid n={n} L={l}: fd {fd:.6e} vs {exact:.6e}"),
        );
    }
    // observed convergence order >= 1.8 over 128 -> 256 -> 512
    for (n, kappa, l) in [(3u32, 1.0f64, 0.7f64), (2, 0.0, 1.0)] {
        let s = sf(n, kappa);
        let exact = fundamental_tone(&s, l).unwrap().gamma;
        let err = |pts: usize| {
            let grid = RadialGrid::new(&s, l, pts).unwrap();
            (fd_plate_tone(&s, &grid).unwrap() - exact).abs()
        };
        let (e1, e2, e3) = (err(128), err(256), err(512));
        let order = (e1 / e3).log2() / 2.0;
        rep.check(
            order >= 1.8,
            format!("n={n} kappa={kappa} L={l}: errors {e1:.3e}/{e2:.3e}/{e3:.3e}, order {order:.2}"),
        );
    }
    rep.finish();
}

#[test]
fn criterion_9_large_ball_limits() {
    let mut rep = Report::new("criterion 9 (approach to the universal floor)");
    for n in [2u32, 3] {
        let s = sf(n, 1.0);
        let floor = ((n - 1) as f64 / 2.0).powi(4);
        let mut prev_gap = f64::INFINITY;
        let mut final_gap = f64::NAN;
        for &l in &[10.0, 50.0, 100.0, 500.0] {
            let gamma = fundamental_tone(&s, l).unwrap().gamma;
            let gap = (gamma - floor) / floor;
            rep.check(
                gap > 0.0 && gap < prev_gap,
                format!("n={n} L={l}: relative gap {gap:.3e} not monotone"),
            );
            prev_gap = gap;
            final_gap = gap;
        }
        rep.check(
            final_gap < 1e-2,
            format!("n={n}: final relative gap {final_gap:.3e} >= 1e-2"),
        );
    }
    rep.finish();
}

#[test]
fn volume_cap_values_for_reference() {
    // not a numbered criterion: records the volumes behind the thresholds
    let s2 = sf(2, 1.0);
    let s3 = sf(3, 1.0);
    let v2 = ball_volume(&s2, 2.1492).unwrap();
    let v3 = ball_volume(&s3, 0.719).unwrap();
    println!("volume at radius 2.1492 (n=2): {v2:.6}");
    println!("volume at radius 0.719 (n=3): {v3:.6}");
    assert!((v2 - 21.0316).abs() < 1e-3);
    assert!((v3 - 1.7261).abs() < 1e-3);
}
