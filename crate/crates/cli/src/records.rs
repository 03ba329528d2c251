//! Output records. Every numeric field is a decimal string with ten
//! significant digits, so emitted bytes are identical across platforms and
//! golden files stay stable; JSON records parse back into the same structs.

use serde::{Deserialize, Serialize};

/// Ten significant digits, plain decimal inside a sane exponent window,
/// scientific outside it.
pub fn fmt_sig(x: f64) -> String {
    if x == 0.0 {
        return "0.000000000".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let exp = x.abs().log10().floor() as i32;
    if !(-4..=12).contains(&exp) {
        format!("{:.9e}", x)
    } else {
        format!("{:.*}", (9 - exp).max(0) as usize, x)
    }
}

pub fn fmt_bool(b: bool) -> String {
    if b { "true" } else { "false" }.to_string()
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct ToneRecord {
    pub command: String,
    pub dim: u32,
    pub kappa: String,
    pub radius: String,
    pub lambda: String,
    pub gamma: String,
    pub gamma_fourth_root: String,
    pub bracket_lo: String,
    pub bracket_hi: String,
    pub residual: String,
    pub iterations: u32,
    pub method: String,
    pub asymptotic_small_fourth_root: String,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct TwoBallRecord {
    pub command: String,
    pub dim: u32,
    pub kappa: String,
    pub alpha: String,
    pub beta: String,
    pub total_tilde: String,
    pub lambda: String,
    pub gamma: String,
    pub gamma_fourth_root: String,
    pub bracket_lo: String,
    pub bracket_hi: String,
    pub residual: String,
    pub method: String,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct ThresholdRecord {
    pub command: String,
    pub dim: u32,
    pub kappa: String,
    pub threshold_radius: String,
    pub volume_cap: String,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct Table1Row {
    pub dim: u32,
    pub radius: String,
    pub gamma_fourth_algebraic: String,
    pub gamma_fourth_asymptotic: String,
    pub abs_diff: String,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct Table2Row {
    pub radius: String,
    pub gamma_fourth_algebraic: String,
    pub gamma_fourth_asymptotic: String,
    pub algebraic_minus_one: String,
    pub asymptotic_minus_one: String,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct ScanRow {
    pub radius: String,
    pub lambda: String,
    pub gamma: String,
    pub g1_half_volume: String,
    pub holds: String,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct OracleRecord {
    pub command: String,
    pub dim: u32,
    pub kappa: String,
    pub radius: String,
    pub grid: u32,
    pub fd_plate_tone: String,
    pub transcendental_tone: String,
    pub plate_rel_diff: String,
    pub fd_membrane_tone: String,
    pub first_pole_squared: String,
    pub membrane_rel_diff: String,
}

/// Rows rendered as CSV: a header plus one line per record, `.` decimal
/// separator, no grouping.
pub trait Csv {
    fn csv_header() -> &'static str;
    fn csv_row(&self) -> String;
}

impl Csv for Table1Row {
    fn csv_header() -> &'static str {
        "dim,radius,gamma_fourth_algebraic,gamma_fourth_asymptotic,abs_diff"
    }
    fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{}",
            self.dim, self.radius, self.gamma_fourth_algebraic, self.gamma_fourth_asymptotic, self.abs_diff
        )
    }
}

impl Csv for Table2Row {
    fn csv_header() -> &'static str {
        "radius,gamma_fourth_algebraic,gamma_fourth_asymptotic,algebraic_minus_one,asymptotic_minus_one"
    }
    fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{}",
            self.radius,
            self.gamma_fourth_algebraic,
            self.gamma_fourth_asymptotic,
            self.algebraic_minus_one,
            self.asymptotic_minus_one
        )
    }
}

impl Csv for ScanRow {
    fn csv_header() -> &'static str {
        "radius,lambda,gamma,g1_half_volume,holds"
    }
    fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{}",
            self.radius, self.lambda, self.gamma, self.g1_half_volume, self.holds
        )
    }
}

impl Csv for ToneRecord {
    fn csv_header() -> &'static str {
        "dim,kappa,radius,lambda,gamma,gamma_fourth_root,bracket_lo,bracket_hi,residual,iterations,method,asymptotic_small_fourth_root"
    }
    fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            self.dim,
            self.kappa,
            self.radius,
            self.lambda,
            self.gamma,
            self.gamma_fourth_root,
            self.bracket_lo,
            self.bracket_hi,
            self.residual,
            self.iterations,
            self.method,
            self.asymptotic_small_fourth_root
        )
    }
}

impl Csv for TwoBallRecord {
    fn csv_header() -> &'static str {
        "dim,kappa,alpha,beta,total_tilde,lambda,gamma,gamma_fourth_root,bracket_lo,bracket_hi,residual,method"
    }
    fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            self.dim,
            self.kappa,
            self.alpha,
            self.beta,
            self.total_tilde,
            self.lambda,
            self.gamma,
            self.gamma_fourth_root,
            self.bracket_lo,
            self.bracket_hi,
            self.residual,
            self.method
        )
    }
}

impl Csv for ThresholdRecord {
    fn csv_header() -> &'static str {
        "dim,kappa,threshold_radius,volume_cap"
    }
    fn csv_row(&self) -> String {
        format!(
            "{},{},{},{}",
            self.dim, self.kappa, self.threshold_radius, self.volume_cap
        )
    }
}

impl Csv for OracleRecord {
    fn csv_header() -> &'static str {
        "dim,kappa,radius,grid,fd_plate_tone,transcendental_tone,plate_rel_diff,fd_membrane_tone,first_pole_squared,membrane_rel_diff"
    }
    fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.dim,
            self.kappa,
            self.radius,
            self.grid,
            self.fd_plate_tone,
            self.transcendental_tone,
            self.plate_rel_diff,
            self.fd_membrane_tone,
            self.first_pole_squared,
            self.membrane_rel_diff
        )
    }
}
