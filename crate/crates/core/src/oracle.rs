//! Independent verification layer: a finite-volume discretization of the
//! radial clamped-plate and membrane eigenproblems on geodesic balls.
//!
//! The radial Laplace–Beltrami operator `v ↦ v'' + (n−1)(s_κ'/s_κ) v'` is
//! discretized in conservative (flux) form on a uniform grid, which makes it
//! self-adjoint in the inner product weighted by the cell volumes. The
//! clamped-plate quotient `∫(Δv)²/∫v²` is then minimized as the smallest
//! eigenvalue of the squared operator; clamping is carried by a ghost-node
//! reflection across `ρ = L` together with `v(L) = 0`, and regularity at the
//! origin by the vanishing flux of the volume weight. Everything here stays
//! deliberately independent of the hypergeometric machinery it cross-checks.

use crate::error::{Error, Result};
use crate::geometry::{shell_integral, SpaceForm};

/// Iteration cap for the inverse-power loop.
const POWER_CAP: usize = 10_000;
/// Relative Rayleigh-quotient tolerance.
const POWER_TOL: f64 = 1e-10;

/// Uniform radial grid on `[0, L]` with the space-form volume weight
/// sampled at the nodes.
#[derive(Clone, Debug)]
pub struct RadialGrid {
    pub n_points: usize,
    pub radius: f64,
    pub spacing: f64,
    /// `s_κ(ρ_i)^{n−1}` at the nodes `ρ_i = i·h`, `i = 0..=n_points`.
    pub weight: Vec<f64>,
}

impl RadialGrid {
    pub fn new(sf: &SpaceForm, radius: f64, n_points: usize) -> Result<Self> {
        if n_points < 16 {
            return Err(Error::domain(format!(
                "grid needs at least 16 intervals, got {n_points}"
            )));
        }
        if !(radius > 0.0) || !radius.is_finite() {
            return Err(Error::domain(format!("radius must be positive, got {radius}")));
        }
        let h = radius / n_points as f64;
        let weight = (0..=n_points)
            .map(|i| shell_weight(sf, i as f64 * h))
            .collect();
        Ok(RadialGrid { n_points, radius, spacing: h, weight })
    }
}

fn shell_weight(sf: &SpaceForm, rho: f64) -> f64 {
    let k = sf.kappa();
    let s = if k == 0.0 { rho } else { (k * rho).sinh() / k };
    s.powi(sf.dim() as i32 - 1)
}

/// Banded symmetric positive-definite system in lower-band storage:
/// `band[d][i] = A[i+d][i]` for diagonals `d = 0..=bw`.
struct BandedSpd {
    n: usize,
    bw: usize,
    band: Vec<Vec<f64>>,
}

impl BandedSpd {
    fn zeros(n: usize, bw: usize) -> Self {
        BandedSpd { n, bw, band: (0..=bw).map(|d| vec![0.0; n - d]).collect() }
    }

    fn add(&mut self, i: usize, j: usize, v: f64) {
        let (hi, lo) = if i >= j { (i, j) } else { (j, i) };
        let d = hi - lo;
        debug_assert!(d <= self.bw);
        self.band[d][lo] += v;
    }

    fn mat_vec(&self, x: &[f64], y: &mut [f64]) {
        y.iter_mut().for_each(|v| *v = 0.0);
        for d in 0..=self.bw {
            for i in 0..self.n - d {
                y[i + d] += self.band[d][i] * x[i];
                if d > 0 {
                    y[i] += self.band[d][i] * x[i + d];
                }
            }
        }
    }

    /// In-place banded Cholesky `A = L Lᵀ`.
    fn cholesky(mut self) -> Result<Self> {
        let bw = self.bw;
        for j in 0..self.n {
            let mut diag = self.band[0][j];
            for d in 1..=bw.min(j) {
                diag -= self.band[d][j - d] * self.band[d][j - d];
            }
            if diag <= 0.0 {
                return Err(Error::SolverNoConvergence(
                    "discrete operator lost positive definiteness".to_string(),
                ));
            }
            let ljj = diag.sqrt();
            self.band[0][j] = ljj;
            for d in 1..=bw {
                if j + d >= self.n {
                    break;
                }
                let mut v = self.band[d][j];
                for e in 1..=bw - d {
                    if e <= j {
                        v -= self.band[d + e][j - e] * self.band[e][j - e];
                    }
                }
                self.band[d][j] = v / ljj;
            }
        }
        Ok(self)
    }

    /// Solves `L Lᵀ x = b` given the factor from [`Self::cholesky`].
    fn solve(&self, b: &[f64], x: &mut [f64]) {
        x.copy_from_slice(b);
        for j in 0..self.n {
            x[j] /= self.band[0][j];
            for d in 1..=self.bw {
                if j + d < self.n {
                    x[j + d] -= self.band[d][j] * x[j];
                }
            }
        }
        for j in (0..self.n).rev() {
            for d in 1..=self.bw {
                if j + d < self.n {
                    x[j] -= self.band[d][j] * x[j + d];
                }
            }
            x[j] /= self.band[0][j];
        }
    }
}

/// Smallest eigenvalue of the banded SPD matrix by inverse power iteration.
fn smallest_eigenvalue(a: BandedSpd) -> Result<f64> {
    let n = a.n;
    // factor a copy; the unfactored matrix stays around for Rayleigh quotients
    let factor = BandedSpd { n, bw: a.bw, band: a.band.clone() }.cholesky()?;
    let mut x = vec![1.0f64; n];
    let mut y = vec![0.0f64; n];
    let mut ay = vec![0.0f64; n];
    let mut prev = f64::INFINITY;
    let mut prev_delta = f64::INFINITY;
    for it in 0..POWER_CAP {
        factor.solve(&x, &mut y);
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        y.iter_mut().for_each(|v| *v /= norm);
        a.mat_vec(&y, &mut ay);
        let rq = y.iter().zip(&ay).map(|(u, v)| u * v).sum::<f64>();
        let delta = (rq - prev).abs();
        // stop at the tolerance, or when the update stagnates at the
        // rounding floor of the quotient (reached long after the linear
        // convergence phase; the floor scales with cond(A)·eps)
        if delta <= POWER_TOL * rq.abs() || (it > 20 && delta >= prev_delta) {
            return Ok(rq);
        }
        prev = rq;
        prev_delta = delta;
        std::mem::swap(&mut x, &mut y);
    }
    Err(Error::SolverNoConvergence(format!(
        "inverse power iteration did not settle in {POWER_CAP} steps"
    )))
}

/// Geometry of one assembled problem: flux coefficients and cell masses.
struct Discretization {
    /// `w_{i+1/2}` face weights for `i = 0..n` (face between node i and i+1).
    face: Vec<f64>,
    /// dual-cell masses for the operator divisor, nodes `0..=n`
    cell_op: Vec<f64>,
    /// quadrature masses (cells clipped to `[0, L]`), nodes `0..=n`
    cell_q: Vec<f64>,
}

fn discretize(sf: &SpaceForm, grid: &RadialGrid) -> Discretization {
    let n = grid.n_points;
    let h = grid.spacing;
    let l = grid.radius;
    let face: Vec<f64> = (0..=n).map(|i| shell_weight(sf, (i as f64 + 0.5) * h)).collect();
    let cells = |clip: bool| {
        (0..=n)
            .map(|i| {
                let rho = i as f64 * h;
                let a = (rho - 0.5 * h).max(0.0);
                let b = if clip { (rho + 0.5 * h).min(l) } else { rho + 0.5 * h };
                shell_integral(sf, b) - shell_integral(sf, a)
            })
            .collect::<Vec<f64>>()
    };
    Discretization { face, cell_op: cells(false), cell_q: cells(true) }
}

/// Clamped-plate tone by inverse power iteration on the squared discrete
/// Laplacian: the smallest value of `∫(Δ_h v)² dμ / ∫ v² dμ` over grid
/// functions with `v(L) = 0`, the ghost reflection across `ρ = L` carrying
/// the `v'(L) = 0` clamping.
pub fn fd_plate_tone(sf: &SpaceForm, grid: &RadialGrid) -> Result<f64> {
    if sf.dim() != 2 && sf.dim() != 3 {
        return Err(Error::domain("finite-difference oracle covers n in {2, 3}".to_string()));
    }
    let n = grid.n_points;
    let h = grid.spacing;
    let d = discretize(sf, grid);

    // Operator rows k = 0..=n over unknowns v_0..v_{n−1} (v_n = 0):
    // row k holds (Δ_h v)_k = Σ_j R[k][j] v_j.
    // row 0:      w_{1/2}(v_1 − v_0)/(h m_0)
    // row k:      [w_{k+1/2}(v_{k+1} − v_k) − w_{k−1/2}(v_k − v_{k−1})]/(h m_k)
    // row n:      v_{n−1}(w_{n+1/2} + w_{n−1/2})/(h m̂_n)   (ghost v_{n+1} = v_{n−1})
    let row_entries = |k: usize| -> Vec<(usize, f64)> {
        if k == 0 {
            let c = d.face[0] / (h * d.cell_op[0]);
            vec![(0, -c), (1, c)]
        } else if k < n {
            let a = d.face[k - 1] / (h * d.cell_op[k]);
            let b = d.face[k] / (h * d.cell_op[k]);
            let mut row = vec![(k - 1, a), (k, -(a + b))];
            if k + 1 < n {
                row.push((k + 1, b));
            }
            row
        } else {
            let c = (d.face[n] + d.face[n - 1]) / (h * d.cell_op[n]);
            vec![(n - 1, c)]
        }
    };

    // A = Rᵀ Q R (pentadiagonal), M = diag of quadrature masses; the
    // generalized problem A v = Γ M v is symmetrized by M^{−1/2}.
    let mut a = BandedSpd::zeros(n, 2);
    for k in 0..=n {
        let row = row_entries(k);
        for &(i, vi) in &row {
            for &(j, vj) in &row {
                if i <= j {
                    a.add(j, i, vi * vj * d.cell_q[k]);
                }
            }
        }
    }
    let m_inv_sqrt: Vec<f64> = (0..n).map(|i| 1.0 / d.cell_q[i].sqrt()).collect();
    for dd in 0..=2usize {
        for i in 0..n - dd {
            a.band[dd][i] *= m_inv_sqrt[i] * m_inv_sqrt[i + dd];
        }
    }
    smallest_eigenvalue(a)
}

/// First Dirichlet eigenvalue of `−Δ` on radial functions (the membrane
/// problem); its square root is comparable to the first pole `𝔤_{ν,1}`.
pub fn fd_membrane_tone(sf: &SpaceForm, grid: &RadialGrid) -> Result<f64> {
    if sf.dim() != 2 && sf.dim() != 3 {
        return Err(Error::domain("finite-difference oracle covers n in {2, 3}".to_string()));
    }
    let n = grid.n_points;
    let h = grid.spacing;
    let d = discretize(sf, grid);
    // tridiagonal −Δ_h symmetrized by M^{−1/2}: diagonal
    // (w_{i−1/2}+w_{i+1/2})/(h m_i), off-diagonal −w_{i+1/2}/(h √(m_i m_{i+1}))
    let mut a = BandedSpd::zeros(n, 1);
    for i in 0..n {
        let left = if i == 0 { 0.0 } else { d.face[i - 1] };
        a.add(i, i, (left + d.face[i]) / (h * d.cell_q[i]));
        if i + 1 < n {
            a.add(i + 1, i, -d.face[i] / (h * (d.cell_q[i] * d.cell_q[i + 1]).sqrt()));
        }
    }
    smallest_eigenvalue(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tones;

    #[test]
    fn euclidean_disc_membrane() {
        // first Dirichlet eigenvalue of the unit disc: j_{0,1}²
        let sf = SpaceForm::new(2, 0.0).unwrap();
        let grid = RadialGrid::new(&sf, 1.0, 512).unwrap();
        let got = fd_membrane_tone(&sf, &grid).unwrap();
        let expect = 2.404_825_557_695_773_f64.powi(2);
        assert!((got - expect).abs() < 5e-3 * expect, "{got} vs {expect}");
    }

    #[test]
    fn euclidean_disc_plate() {
        // clamped unit disc: 𝔥₀⁴
        let sf = SpaceForm::new(2, 0.0).unwrap();
        let grid = RadialGrid::new(&sf, 1.0, 512).unwrap();
        let got = fd_plate_tone(&sf, &grid).unwrap();
        let expect = 3.196_220_616_582_541f64.powi(4);
        assert!((got - expect).abs() < 5e-3 * expect, "{got} vs {expect}");
    }

    #[test]
    fn hyperbolic_membrane_matches_pole_ladder() {
        // n = 3, L = 2: γ₁ = 𝔤_{1/2,1}(L̃)² = 1 + (π/L)²
        let sf = SpaceForm::new(3, 1.0).unwrap();
        let grid = RadialGrid::new(&sf, 2.0, 512).unwrap();
        let got = fd_membrane_tone(&sf, &grid).unwrap();
        let expect = 1.0 + (std::f64::consts::PI / 2.0).powi(2);
        assert!((got - expect).abs() < 5e-3 * expect, "{got} vs {expect}");
        // n = 2, small ball: γ₁ ~ 1/3 + (j_{0,1}/L)²
        let sf = SpaceForm::new(2, 1.0).unwrap();
        let grid = RadialGrid::new(&sf, 0.01, 256).unwrap();
        let got = fd_membrane_tone(&sf, &grid).unwrap();
        let expect = 1.0f64 / 3.0 + (2.404_825_557_695_773_f64 / 0.01).powi(2);
        assert!((got - expect).abs() < 1e-2 * expect, "{got} vs {expect}");
    }

    #[test]
    fn plate_tone_tracks_transcendental_root() {
        let sf = SpaceForm::new(3, 1.0).unwrap();
        let grid = RadialGrid::new(&sf, 0.7, 512).unwrap();
        let got = fd_plate_tone(&sf, &grid).unwrap();
        let expect = tones::fundamental_tone(&sf, 0.7).unwrap().gamma;
        assert!((got - expect).abs() < 1e-2 * expect, "{got} vs {expect}");
    }

    #[test]
    fn plate_dominates_membrane_squared_and_floor() {
        for (n, l) in [(2u32, 0.8f64), (3, 0.7), (2, 2.0), (3, 1.5)] {
            let sf = SpaceForm::new(n, 1.0).unwrap();
            let grid = RadialGrid::new(&sf, l, 256).unwrap();
            let plate = fd_plate_tone(&sf, &grid).unwrap();
            let membrane = fd_membrane_tone(&sf, &grid).unwrap();
            assert!(plate >= membrane * membrane * 0.98, "n={n} L={l}");
            assert!(plate >= tones::mckean_floor(&sf) * 0.98, "n={n} L={l}");
        }
    }

    #[test]
    fn grid_validation() {
        let sf = SpaceForm::new(2, 1.0).unwrap();
        assert!(RadialGrid::new(&sf, 1.0, 8).is_err());
        assert!(RadialGrid::new(&sf, 0.0, 64).is_err());
        let sf4 = SpaceForm::new(4, 1.0).unwrap();
        let grid = RadialGrid::new(&sf4, 1.0, 64).unwrap();
        assert!(fd_plate_tone(&sf4, &grid).is_err());
    }
}
