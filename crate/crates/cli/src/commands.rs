use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use hamsub_core::golden::{check_against_printed, example_system, Verdict, ENTRYWISE_TOL};
use hamsub_core::lqtraj::{solve_nonrecursive, Terminal, TrajectoryProblem};
use hamsub_core::{analyze, closed_loop_gramian, solve_dare, SystemQuadruple, ToleranceConfig};

use crate::error::CliError;
use crate::input::{parse_vector, read_system};
use crate::report::AnalysisReport;
use crate::table;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

pub fn config(rank_tol: Option<f64>) -> Result<ToleranceConfig, CliError> {
    let cfg = ToleranceConfig::default();
    match rank_tol {
        None => Ok(cfg),
        Some(t) if t.is_finite() && t > 0.0 => Ok(cfg.with_rank_tol(t)),
        Some(t) => Err(CliError::Input(format!(
            "tol: {t} is not a positive number"
        ))),
    }
}

pub fn analyze_system(
    sys: &SystemQuadruple,
    full: bool,
    cfg: &ToleranceConfig,
) -> Result<AnalysisReport, CliError> {
    let an = analyze(sys, cfg)?;
    AnalysisReport::build(sys, &an, cfg, full)
}

pub fn analyze_file<W: Write>(
    path: &Path,
    full: bool,
    rank_tol: Option<f64>,
    out: &mut W,
) -> Result<(), CliError> {
    let cfg = config(rank_tol)?;
    let sys = read_system(path)?;
    let report = analyze_system(&sys, full, &cfg)?;
    serde_json::to_writer_pretty(&mut *out, &report).map_err(std::io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

pub struct TrajectoryArgs<'a> {
    pub x0: &'a str,
    pub horizon: usize,
    pub xf: Option<&'a str>,
    pub format: Format,
}

pub fn trajectory<W: Write>(
    sys: SystemQuadruple,
    args: &TrajectoryArgs<'_>,
    out: &mut W,
) -> Result<(), CliError> {
    let cfg = ToleranceConfig::default();
    let n = sys.n();
    let x0 = parse_vector("x0", args.x0, n)?;
    let terminal = match args.xf {
        Some(text) => Terminal::Fixed(parse_vector("xf", text, n)?),
        None => Terminal::Free,
    };
    let prob = TrajectoryProblem::new(sys, x0, args.horizon, terminal)?;
    let ric = solve_dare(&prob.sys, &cfg)?;
    let gram = closed_loop_gramian(&prob.sys, &ric, &cfg)?;
    let traj = solve_nonrecursive(&prob, &ric, &gram, &cfg)?;
    match args.format {
        Format::Csv => table::write_csv(out, &traj, &prob.sys)?,
        Format::Json => table::write_json(out, &traj, &prob.sys)?,
    }
    Ok(())
}

pub fn trajectory_file(
    path: &Path,
    args: &TrajectoryArgs<'_>,
    out_path: Option<&Path>,
) -> Result<(), CliError> {
    let sys = read_system(path)?;
    // Buffer first so a failed solve leaves no partial file behind.
    let mut buf = Vec::new();
    trajectory(sys, args, &mut buf)?;
    match out_path {
        Some(p) => {
            let mut w = BufWriter::new(File::create(p)?);
            w.write_all(&buf)?;
            w.flush()?;
        }
        None => std::io::stdout().lock().write_all(&buf)?,
    }
    Ok(())
}

/// Compares the computed bases of `sys` with the printed example.
pub fn golden_for<W: Write>(
    sys: &SystemQuadruple,
    report: bool,
    out: &mut W,
) -> Result<(), CliError> {
    let cfg = ToleranceConfig::default();
    let g = check_against_printed(sys, &cfg)?;
    let verdict = match g.verdict {
        Verdict::Entrywise => "PASS (entrywise)",
        Verdict::Subspace => "PASS (subspace fallback)",
        Verdict::Fail => "FAIL",
    };
    writeln!(out, "{verdict}")?;
    writeln!(
        out,
        "max |V2 - printed|    = {:.3e} at row {}, column {} (tolerance {ENTRYWISE_TOL:e})",
        g.v2.max_abs,
        g.v2.row + 1,
        g.v2.col + 1
    )?;
    writeln!(
        out,
        "max |V2bar - printed| = {:.3e} at row {}, column {}",
        g.vbar2.max_abs,
        g.vbar2.row + 1,
        g.vbar2.col + 1
    )?;
    if let (Some(a), Some(b)) = (g.angle_v2, g.angle_vbar2) {
        writeln!(
            out,
            "largest principal angle: V2 {a:.3e}, V2bar {b:.3e}; max relative residual {:.3e}",
            g.max_relative_residual
        )?;
    }
    if report {
        let r = &g.analysis.report;
        let zero: Vec<usize> = r.zero_rows_au.iter().map(|i| i + 1).collect();
        writeln!(out, "rank_v2 = {} vs n = {}", r.rank_v2, r.n)?;
        writeln!(
            out,
            "rank_vbar2 = {}, rank_v1 = {}",
            r.rank_vbar2, r.rank_v1
        )?;
        writeln!(out, "n_c = {}, zero rows of A_u = {zero:?}", r.n_c)?;
    }
    match g.verdict {
        Verdict::Fail => Err(CliError::GoldenFail),
        _ => Ok(()),
    }
}

pub fn golden<W: Write>(report: bool, out: &mut W) -> Result<(), CliError> {
    golden_for(&example_system(), report, out)
}
