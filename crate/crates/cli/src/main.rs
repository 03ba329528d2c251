//! Command-line front end: fundamental tones, two-ball values, sharpness
//! thresholds, the two reference tables, radius scans, and the
//! finite-difference cross-check.
//!
//! Exit status: 0 on success, 1 on usage errors, 2 on domain errors,
//! 3 on solver/series failures.

// `!(x > 0.0)` guards intentionally reject NaN, unlike `x <= 0.0`.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod records;

use clap::{Args, Parser, Subcommand, ValueEnum};
use plate_tones::geometry::tilde_of_radius;
use plate_tones::oracle::{fd_membrane_tone, fd_plate_tone, RadialGrid};
use plate_tones::{tones, Error, SpaceForm, TwoBallConfig};
use records::{fmt_bool, fmt_sig, Csv};
use std::io::Write;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "plate-tones",
    about = "Clamped-plate fundamental tones on hyperbolic and Euclidean balls",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to a file instead of stdout
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct Geometry {
    /// Space-form dimension n >= 2
    #[arg(long, default_value_t = 2)]
    dim: u32,
    /// Curvature scale (sectional curvature is -kappa^2); 0 = Euclidean
    #[arg(long, default_value_t = 1.0)]
    kappa: f64,
}

#[derive(Subcommand)]
enum Command {
    /// Fundamental tone of the geodesic ball of the given radius
    Tone {
        #[command(flatten)]
        geo: Geometry,
        /// Ball radius L
        #[arg(long)]
        radius: f64,
    },
    /// Two-ball minimization value for a volume split of the given ball
    Twoball {
        #[command(flatten)]
        geo: Geometry,
        /// First ball in the coordinate alpha = sinh^2(kappa a / 2)
        #[arg(long)]
        alpha: f64,
        /// Radius L of the ball carrying the total volume
        #[arg(long)]
        radius: f64,
    },
    /// Largest radius with the sharp one-ball comparison, plus its volume
    Threshold {
        #[command(flatten)]
        geo: Geometry,
    },
    /// Small-ball reference table: algebraic vs asymptotic tone, 8 rows
    Table1,
    /// Large-ball reference table (n = 3, kappa = 1), 4 rows
    Table2,
    /// Sweep the radius, reporting tone and sharpness data per row
    Scan {
        #[command(flatten)]
        geo: Geometry,
        #[arg(long)]
        from: f64,
        #[arg(long)]
        to: f64,
        #[arg(long, default_value_t = 10)]
        steps: u32,
    },
    /// Finite-difference cross-check of the transcendental tone
    Oracle {
        #[command(flatten)]
        geo: Geometry,
        #[arg(long)]
        radius: f64,
        /// Grid intervals (>= 16)
        #[arg(long, default_value_t = 512)]
        grid: u32,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints help/version through this path too; keep those 0
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(rendered) => {
            let payload = rendered + "\n";
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, payload) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(3);
                }
            } else {
                let mut stdout = std::io::stdout().lock();
                let _ = stdout.write_all(payload.as_bytes());
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(cli: &Cli) -> Result<String, Error> {
    match &cli.command {
        Command::Tone { geo, radius } => tone_cmd(geo, *radius, cli.format),
        Command::Twoball { geo, alpha, radius } => twoball_cmd(geo, *alpha, *radius, cli.format),
        Command::Threshold { geo } => threshold_cmd(geo, cli.format),
        Command::Table1 => table1_cmd(cli.format),
        Command::Table2 => table2_cmd(cli.format),
        Command::Scan { geo, from, to, steps } => scan_cmd(geo, *from, *to, *steps, cli.format),
        Command::Oracle { geo, radius, grid } => oracle_cmd(geo, *radius, *grid, cli.format),
    }
}

fn space_form(geo: &Geometry) -> Result<SpaceForm, Error> {
    SpaceForm::new(geo.dim, geo.kappa)
}

fn render_one<T: serde::Serialize + Csv>(rec: &T, format: Format, text: String) -> String {
    match format {
        Format::Text => text,
        Format::Json => serde_json::to_string_pretty(rec).expect("serializable record"),
        Format::Csv => format!("{}\n{}", T::csv_header(), rec.csv_row()),
    }
}

fn render_rows<T: serde::Serialize + Csv>(rows: &[T], format: Format, text: String) -> String {
    match format {
        Format::Text => text,
        Format::Json => serde_json::to_string_pretty(rows).expect("serializable rows"),
        Format::Csv => {
            let mut out = String::from(T::csv_header());
            for r in rows {
                out.push('\n');
                out.push_str(&r.csv_row());
            }
            out
        }
    }
}

fn tone_cmd(geo: &Geometry, radius: f64, format: Format) -> Result<String, Error> {
    let sf = space_form(geo)?;
    let tone = tones::fundamental_tone(&sf, radius)?;
    let asym = tones::tone_asymptotic_small(&sf, radius)?;
    let rec = records::ToneRecord {
        command: "tone".into(),
        dim: geo.dim,
        kappa: fmt_sig(geo.kappa),
        radius: fmt_sig(radius),
        lambda: fmt_sig(tone.lambda),
        gamma: fmt_sig(tone.gamma),
        gamma_fourth_root: fmt_sig(tone.lambda),
        bracket_lo: fmt_sig(tone.bracket_lo),
        bracket_hi: fmt_sig(tone.bracket_hi),
        residual: fmt_sig(tone.residual),
        iterations: tone.iterations,
        method: tone.method.as_str().into(),
        asymptotic_small_fourth_root: fmt_sig(asym.powf(0.25)),
    };
    let text = format!(
        "fundamental tone, n = {}, kappa = {}, L = {}\n\
         gamma        = {}\n\
         gamma^(1/4)  = {}   (asymptotic {})\n\
         bracket      = ({}, {})\n\
         residual     = {}   iterations = {}   method = {}",
        geo.dim,
        fmt_sig(geo.kappa),
        fmt_sig(radius),
        rec.gamma,
        rec.gamma_fourth_root,
        rec.asymptotic_small_fourth_root,
        rec.bracket_lo,
        rec.bracket_hi,
        rec.residual,
        rec.iterations,
        rec.method
    );
    Ok(render_one(&rec, format, text))
}

fn twoball_cmd(geo: &Geometry, alpha: f64, radius: f64, format: Format) -> Result<String, Error> {
    let sf = space_form(geo)?;
    let total = tilde_of_radius(geo.kappa, radius)?;
    let cfg = TwoBallConfig::from_alpha(&sf, alpha, total)?;
    let tone = tones::two_ball_tone(&sf, &cfg)?;
    let rec = records::TwoBallRecord {
        command: "twoball".into(),
        dim: geo.dim,
        kappa: fmt_sig(geo.kappa),
        alpha: fmt_sig(cfg.alpha()),
        beta: fmt_sig(cfg.beta()),
        total_tilde: fmt_sig(cfg.total_tilde()),
        lambda: fmt_sig(tone.lambda),
        gamma: fmt_sig(tone.gamma),
        gamma_fourth_root: fmt_sig(tone.lambda),
        bracket_lo: fmt_sig(tone.bracket_lo),
        bracket_hi: fmt_sig(tone.bracket_hi),
        residual: fmt_sig(tone.residual),
        method: tone.method.as_str().into(),
    };
    let text = format!(
        "two-ball value, n = {}, kappa = {}, total ball L = {}\n\
         alpha = {}   beta = {}   (total tilde {})\n\
         lambda = {}   gamma = {}\n\
         bracket = ({}, {})   residual = {}",
        geo.dim,
        fmt_sig(geo.kappa),
        fmt_sig(radius),
        rec.alpha,
        rec.beta,
        rec.total_tilde,
        rec.lambda,
        rec.gamma,
        rec.bracket_lo,
        rec.bracket_hi,
        rec.residual
    );
    Ok(render_one(&rec, format, text))
}

fn threshold_cmd(geo: &Geometry, format: Format) -> Result<String, Error> {
    let sf = space_form(geo)?;
    let (radius, cap) = tones::threshold_radius(&sf)?;
    let rec = records::ThresholdRecord {
        command: "threshold".into(),
        dim: geo.dim,
        kappa: fmt_sig(geo.kappa),
        threshold_radius: fmt_sig(radius),
        volume_cap: fmt_sig(cap),
    };
    let text = format!(
        "sharpness threshold, n = {}, kappa = {}\n\
         radius l_n  = {}\n\
         volume cap  = {}",
        geo.dim,
        fmt_sig(geo.kappa),
        rec.threshold_radius,
        rec.volume_cap
    );
    Ok(render_one(&rec, format, text))
}

const TABLE1_RADII: [f64; 4] = [0.7, 0.1, 0.05, 0.003];
const TABLE2_RADII: [f64; 4] = [50.0, 100.0, 5000.0, 100_000.0];

fn table1_cmd(format: Format) -> Result<String, Error> {
    let mut rows = Vec::new();
    for &dim in &[2u32, 3] {
        let sf = SpaceForm::new(dim, 1.0)?;
        for &l in &TABLE1_RADII {
            let alg = tones::fundamental_tone(&sf, l)?.lambda;
            let asym = tones::tone_asymptotic_small(&sf, l)?.powf(0.25);
            rows.push(records::Table1Row {
                dim,
                radius: fmt_sig(l),
                gamma_fourth_algebraic: fmt_sig(alg),
                gamma_fourth_asymptotic: fmt_sig(asym),
                abs_diff: fmt_sig((alg - asym).abs()),
            });
        }
    }
    let mut text = String::from(
        "small-ball tones, kappa = 1: gamma^(1/4) algebraic vs asymptotic\n\
         n      L        algebraic      asymptotic     |diff|",
    );
    for r in &rows {
        text.push_str(&format!(
            "\n{}  {:>8}  {:>13}  {:>13}  {:>12}",
            r.dim, r.radius, r.gamma_fourth_algebraic, r.gamma_fourth_asymptotic, r.abs_diff
        ));
    }
    Ok(render_rows(&rows, format, text))
}

fn table2_cmd(format: Format) -> Result<String, Error> {
    let sf = SpaceForm::new(3, 1.0)?;
    let mut rows = Vec::new();
    for &l in &TABLE2_RADII {
        let alg = tones::fundamental_tone(&sf, l)?.lambda;
        let asym = tones::tone_asymptotic_large_3d(1.0, l)?.powf(0.25);
        rows.push(records::Table2Row {
            radius: fmt_sig(l),
            gamma_fourth_algebraic: fmt_sig(alg),
            gamma_fourth_asymptotic: fmt_sig(asym),
            algebraic_minus_one: fmt_sig(alg - 1.0),
            asymptotic_minus_one: fmt_sig(asym - 1.0),
        });
    }
    let mut text = String::from(
        "large-ball tones, n = 3, kappa = 1: gamma^(1/4) algebraic vs asymptotic\n\
         L             algebraic - 1      asymptotic - 1",
    );
    for r in &rows {
        text.push_str(&format!(
            "\n{:>9}  {:>16}  {:>16}",
            r.radius, r.algebraic_minus_one, r.asymptotic_minus_one
        ));
    }
    Ok(render_rows(&rows, format, text))
}

fn scan_cmd(geo: &Geometry, from: f64, to: f64, steps: u32, format: Format) -> Result<String, Error> {
    let sf = space_form(geo)?;
    if !(from > 0.0) || !(to > from) || steps < 1 {
        return Err(Error::Domain(format!(
            "scan needs 0 < from < to and steps >= 1, got from={from} to={to} steps={steps}"
        )));
    }
    let mut rows = Vec::new();
    for i in 0..=steps {
        let l = from + (to - from) * i as f64 / steps as f64;
        let gap = tones::sharpness_gap(&sf, l)?;
        let tone = tones::fundamental_tone(&sf, l)?;
        rows.push(records::ScanRow {
            radius: fmt_sig(l),
            lambda: fmt_sig(tone.lambda),
            gamma: fmt_sig(tone.gamma),
            g1_half_volume: fmt_sig(gap.g1),
            holds: fmt_bool(gap.holds),
        });
    }
    let mut text = format!(
        "sharpness scan, n = {}, kappa = {}\n\
         L            lambda         gamma          g1(half-vol)   holds",
        geo.dim,
        fmt_sig(geo.kappa)
    );
    for r in &rows {
        text.push_str(&format!(
            "\n{:>9}  {:>13}  {:>13}  {:>13}  {}",
            r.radius, r.lambda, r.gamma, r.g1_half_volume, r.holds
        ));
    }
    Ok(render_rows(&rows, format, text))
}

fn oracle_cmd(geo: &Geometry, radius: f64, grid: u32, format: Format) -> Result<String, Error> {
    let sf = space_form(geo)?;
    let g = RadialGrid::new(&sf, radius, grid as usize)?;
    let plate = fd_plate_tone(&sf, &g)?;
    let membrane = fd_membrane_tone(&sf, &g)?;
    let tone = tones::fundamental_tone(&sf, radius)?;
    let pole_sq = if sf.is_euclidean() {
        let j = plate_tones::specfun::bessel_first_zero(sf.nu())?;
        (j / radius).powi(2)
    } else {
        tones::pole_g(&sf, 1, tilde_of_radius(geo.kappa, radius)?)?.powi(2)
    };
    let rec = records::OracleRecord {
        command: "oracle".into(),
        dim: geo.dim,
        kappa: fmt_sig(geo.kappa),
        radius: fmt_sig(radius),
        grid,
        fd_plate_tone: fmt_sig(plate),
        transcendental_tone: fmt_sig(tone.gamma),
        plate_rel_diff: fmt_sig((plate - tone.gamma).abs() / tone.gamma),
        fd_membrane_tone: fmt_sig(membrane),
        first_pole_squared: fmt_sig(pole_sq),
        membrane_rel_diff: fmt_sig((membrane - pole_sq).abs() / pole_sq),
    };
    let text = format!(
        "finite-difference cross-check, n = {}, kappa = {}, L = {}, grid = {}\n\
         plate:    fd = {}   transcendental = {}   rel diff = {}\n\
         membrane: fd = {}   first pole^2   = {}   rel diff = {}",
        geo.dim,
        fmt_sig(geo.kappa),
        fmt_sig(radius),
        grid,
        rec.fd_plate_tone,
        rec.transcendental_tone,
        rec.plate_rel_diff,
        rec.fd_membrane_tone,
        rec.first_pole_squared,
        rec.membrane_rel_diff
    );
    Ok(render_one(&rec, format, text))
}
