//! The `revsurf` command line.
//!
//! Exit codes are the same for every subcommand: 0 for success (or an
//! embeddable verdict), 1 for a negative verdict, 2 for usage, parse and
//! I/O errors.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::curvature::sample_curvature;
use crate::embeddability::{check_derivative, full_report, DEFAULT_GRID, DEFAULT_TOL};
use crate::embedding::{write_obj, write_stl, EmbeddingMap};
use crate::error::{Error, Result};
use crate::profile::{preset, read_samples_csv, validate, Profile, ValidationReport, PRESETS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

/// Default tolerance for boundary-condition residuals in `validate` and
/// for the precondition check of the other subcommands.
pub const DEFAULT_VALIDATE_TOL: f64 = 1e-8;

#[derive(Debug, Parser)]
#[command(name = "revsurf", version, about = "Isometric embedding of rotationally symmetric metrics on the sphere")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the pole conditions and interior positivity of a profile.
    Validate {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, default_value_t = DEFAULT_VALIDATE_TOL)]
        tol: f64,
        #[arg(long)]
        json: bool,
    },
    /// Decide embeddability and cross-check all criteria.
    Check {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, default_value_t = DEFAULT_GRID)]
        grid: usize,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long)]
        json: bool,
    },
    /// Dump s, a, a', K on a uniform grid as CSV.
    Curvature {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, default_value_t = 101)]
        samples: usize,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the embedding and write a mesh (.obj or .stl).
    Embed {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, default_value_t = 128)]
        ns: usize,
        #[arg(long, default_value_t = 64)]
        ntheta: usize,
        /// Arclength at which the height is zero.
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        c: f64,
        #[arg(long, default_value_t = DEFAULT_GRID)]
        grid: usize,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// List the built-in profiles.
    Presets,
}

/// Exactly one profile source.
#[derive(Debug, Args)]
pub struct SourceArgs {
    /// Profile expression in `s`, e.g. "sin(s)*(1+0.5*sin(s)^2)".
    #[arg(long, requires = "length", conflicts_with_all = ["csv", "preset"], required_unless_present_any = ["csv", "preset"])]
    pub profile: Option<String>,
    /// CSV file with header "s,a" sampling the profile.
    #[arg(long, conflicts_with_all = ["preset", "length"])]
    pub csv: Option<PathBuf>,
    /// Built-in profile, e.g. sphere, bump:0.5, dumbbell:0.25.
    #[arg(long, conflicts_with = "length")]
    pub preset: Option<String>,
    /// Length of the profile interval: a decimal, "pi", or a multiple like "2pi".
    #[arg(long, value_parser = parse_length)]
    pub length: Option<f64>,
}

/// Parses "pi", "2pi", "0.5pi" or a plain decimal.
pub fn parse_length(text: &str) -> std::result::Result<f64, String> {
    let t = text.trim();
    let value = match t.strip_suffix("pi") {
        Some("") => Ok(std::f64::consts::PI),
        Some(k) => k.trim_end_matches('*').parse::<f64>().map(|k| k * std::f64::consts::PI),
        None => t.parse::<f64>(),
    }
    .map_err(|_| format!("cannot read length {text:?}; use a decimal, pi or a multiple like 2pi"))?;
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(format!("length must be positive and finite, got {text:?}"))
    }
}

impl SourceArgs {
    pub fn load(&self) -> Result<Profile> {
        match (&self.profile, &self.csv, &self.preset) {
            (Some(expr), None, None) => {
                let l = self
                    .length
                    .ok_or_else(|| Error::OutOfRange("--profile needs --length".into()))?;
                Ok(Profile::parse(expr, l)?.with_label(expr.clone()))
            }
            (None, Some(path), None) => {
                let (knots, values) = read_samples_csv(BufReader::new(File::open(path)?))?;
                Ok(Profile::from_samples(knots, values)?.with_label(path.display().to_string()))
            }
            (None, None, Some(name)) => preset(name),
            _ => Err(Error::OutOfRange("give exactly one of --profile, --csv, --preset".into())),
        }
    }
}

/// Parses `std::env::args` and runs the command with the real stdout and
/// stderr.
pub fn run() -> i32 {
    run_with(std::env::args_os(), &mut io::stdout().lock(), &mut io::stderr().lock())
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::NotEmbeddable { .. } => EXIT_NEGATIVE,
                _ => EXIT_ERROR,
            }
        }
    }
}

fn execute(cmd: &Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Validate { source, tol, json } => cmd_validate(&source.load()?, *tol, *json, out),
        Command::Check { source, grid, tol, json } => {
            let p = load_valid(source, err)?;
            cmd_check(&p, *grid, *tol, *json, out)
        }
        Command::Curvature { source, samples, out: path } => {
            if *samples < 2 {
                return Err(Error::OutOfRange(format!("--samples must be at least 2, got {samples}")));
            }
            let p = load_valid(source, err)?;
            match path {
                Some(path) => cmd_curvature(&p, *samples, &mut BufWriter::new(File::create(path)?)),
                None => cmd_curvature(&p, *samples, out),
            }
        }
        Command::Embed { source, ns, ntheta, c, grid, tol, out: path } => {
            let format = MeshFormat::from_path(path)?;
            let p = load_valid(source, err)?;
            cmd_embed(&p, *ns, *ntheta, *c, *grid, *tol, path, format, out, err)
        }
        Command::Presets => {
            for info in &PRESETS {
                writeln!(out, "{:<18}{}  ({})", info.syntax, info.formula, info.note)?;
            }
            Ok(EXIT_OK)
        }
    }
}

/// Loads the profile and refuses it (exit 2) if it does not validate.
fn load_valid(source: &SourceArgs, err: &mut dyn Write) -> Result<Profile> {
    let p = source.load()?;
    let report = validate(&p, DEFAULT_VALIDATE_TOL);
    if !report.is_valid() {
        write_validation_human(&report, err)?;
        return Err(Error::InvalidProfile("profile does not satisfy the pole conditions; see `revsurf validate`".into()));
    }
    Ok(p)
}

fn write_validation_human(r: &ValidationReport, w: &mut dyn Write) -> io::Result<()> {
    for c in &r.conditions {
        writeln!(w, "{:<14}{:<6}residual {}", c.name, if c.pass { "ok" } else { "FAIL" }, c.residual)?;
    }
    if let Some(m) = r.interior_min {
        writeln!(w, "min a on (0,L) = {} at s = {}", m.value, m.at_s)?;
    }
    if let Some(e) = &r.eval_error {
        writeln!(w, "evaluation error: {e}")?;
    }
    Ok(())
}

pub fn cmd_validate(p: &Profile, tol: f64, json: bool, out: &mut dyn Write) -> Result<i32> {
    let report = validate(p, tol);
    if json {
        let mut v = serde_json::to_value(&report).map_err(io::Error::other)?;
        v["valid"] = report.is_valid().into();
        writeln!(out, "{}", serde_json::to_string_pretty(&v).map_err(io::Error::other)?)?;
    } else {
        write_validation_human(&report, out)?;
        writeln!(out, "{}", if report.is_valid() { "valid" } else { "invalid" })?;
    }
    Ok(if report.is_valid() { EXIT_OK } else { EXIT_NEGATIVE })
}

pub fn cmd_check(p: &Profile, grid: usize, tol: f64, json: bool, out: &mut dyn Write) -> Result<i32> {
    let report = full_report(p, grid, tol)?;
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&report.to_json()).map_err(io::Error::other)?)?;
    } else {
        writeln!(out, "verdict: {}", report.verdict)?;
        writeln!(out, "sup|a'| = {} at s = {}", report.sup_abs_slope.value, report.sup_abs_slope.s)?;
        for c in &report.criteria {
            writeln!(
                out,
                "  {:<18}{:<16}witness s = {}, value = {}, margin = {}",
                c.criterion.name(),
                c.verdict.as_str(),
                c.witness.s,
                c.witness.value,
                c.margin
            )?;
        }
        writeln!(out, "K(np) = {}, K(sp) = {}", report.pole_curvature_np, report.pole_curvature_sp)?;
        for note in &report.notes {
            writeln!(out, "note: {note}")?;
        }
    }
    Ok(if report.is_embeddable() { EXIT_OK } else { EXIT_NEGATIVE })
}

pub fn cmd_curvature(p: &Profile, samples: usize, out: &mut dyn Write) -> Result<i32> {
    writeln!(out, "s,a,a_prime,K")?;
    for r in sample_curvature(p, samples)? {
        writeln!(out, "{},{},{},{}", r.s, r.measure, r.slope, r.curvature)?;
    }
    out.flush()?;
    Ok(EXIT_OK)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeshFormat {
    Obj,
    Stl,
}

impl MeshFormat {
    pub fn from_path(path: &Path) -> Result<Self> {
        match path.extension().and_then(|e| e.to_str()).map(str::to_ascii_lowercase).as_deref() {
            Some("obj") => Ok(Self::Obj),
            Some("stl") => Ok(Self::Stl),
            _ => Err(Error::OutOfRange(format!(
                "unsupported mesh format for {}; use .obj or .stl",
                path.display()
            ))),
        }
    }
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_embed(
    p: &Profile,
    ns: usize,
    ntheta: usize,
    c: f64,
    grid: usize,
    tol: f64,
    path: &Path,
    format: MeshFormat,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    let derivative = check_derivative(p, grid, tol)?;
    if derivative.verdict != crate::embeddability::Verdict::Embeddable {
        writeln!(
            err,
            "not embeddable: sup|a'| = {} at s = {} exceeds 1",
            derivative.witness.value, derivative.witness.s
        )?;
        return Ok(EXIT_NEGATIVE);
    }
    let map = EmbeddingMap::new(p.clone(), c)?;
    let mesh = map.mesh(ns, ntheta)?;
    let mut file = BufWriter::new(File::create(path)?);
    match format {
        MeshFormat::Obj => write_obj(&mesh, &mut file)?,
        MeshFormat::Stl => write_stl(&mesh, &mut file)?,
    }
    let metric = map.verify_induced_metric(ns.min(64), ntheta.min(16), 1e-5)?;
    writeln!(out, "wrote {} ({} vertices, {} triangles)", path.display(), mesh.vertices.len(), mesh.triangles.len())?;
    writeln!(out, "height: {}", map.total_height())?;
    writeln!(
        out,
        "induced metric: max|E-1| = {:e}, max|F| = {:e}, max|G-a^2| = {:e} ({} points)",
        metric.max_e_error, metric.max_f_error, metric.max_g_error, metric.evaluated
    )?;
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run_with(std::iter::once("revsurf").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn lengths() {
        assert_eq!(parse_length("pi").unwrap(), std::f64::consts::PI);
        assert_eq!(parse_length("2pi").unwrap(), std::f64::consts::TAU);
        assert_eq!(parse_length("1.5").unwrap(), 1.5);
        assert!(parse_length("-1").is_err());
        assert!(parse_length("tau").is_err());
    }

    #[test]
    fn sources_are_exclusive() {
        assert_eq!(run(&["validate", "--preset", "sphere", "--profile", "s", "--length", "1"]).0, EXIT_ERROR);
        assert_eq!(run(&["validate"]).0, EXIT_ERROR);
        assert_eq!(run(&["validate", "--profile", "s"]).0, EXIT_ERROR);
    }

    #[test]
    fn validate_codes() {
        assert_eq!(run(&["validate", "--preset", "sphere"]).0, EXIT_OK);
        let (code, out, _) = run(&["validate", "--profile", "s", "--length", "1"]);
        assert_eq!(code, EXIT_NEGATIVE);
        assert!(out.contains("a(L)=0") && out.contains("residual 1"), "{out}");
        let (code, _, err) = run(&["validate", "--profile", "sin(s", "--length", "pi"]);
        assert_eq!(code, EXIT_ERROR);
        assert!(err.contains("offset 5"), "{err}");
    }

    #[test]
    fn presets_listing() {
        let (code, out, _) = run(&["presets"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out.lines().count(), 3);
    }

    #[test]
    fn unsupported_extension() {
        let (code, _, err) = run(&["embed", "--preset", "sphere", "--out", "x.ply"]);
        assert_eq!(code, EXIT_ERROR);
        assert!(err.contains("unsupported"));
    }
}
