//! The `nilplab` command line: analyze algebra files, run named scenarios,
//! and print truncation-tower diagnostics.
//!
//! Exit codes: 0 all verdicts pass, 1 some verdict fails, 2 usage or parse
//! error, 3 internal invariant violation.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, StructureChecks};
use crate::error::{Error, Result};
use crate::freetrunc::DEFAULT_MAX_DIM;
use crate::multiplication::{nilpotence_report, stable_image, NilpotenceReport, OperatorAlgebra};
use crate::scenarios::{self, ScenarioParams, ScenarioReport};

pub const MAX_DIM_VAR: &str = "NILPLAB_MAX_DIM";

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Pretty,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "nilplab", about = "Nilpotence diagnostics for finite-dimensional algebras", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = OutputFormat::Pretty, global = true)]
    pub output: OutputFormat,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Nilpotence, solvability and operator-algebra indices of an algebra JSON file.
    Analyze { path: PathBuf },
    /// Run a named scenario (`all` runs every one with its defaults).
    Scenario {
        name: String,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        degree: Option<u64>,
        #[arg(long)]
        prime: Option<u64>,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: Option<u64>,
    },
    /// Build a truncation tower at the given degrees and check its coherence.
    Tower {
        name: String,
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        degrees: Vec<u64>,
        #[arg(long = "degrees", num_args = 1.., value_parser = clap::value_parser!(u64).range(1..))]
        degree_list: Vec<u64>,
        /// Also check functoriality of M along each truncation.
        #[arg(long)]
        functoriality: bool,
    },
    /// List registered scenarios and tower families.
    List,
}

/// Everything `analyze` reports about one algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub dim: usize,
    pub field: String,
    pub nilpotence: NilpotenceReport,
    pub solvable: bool,
    pub derived_length: Option<usize>,
    pub structure: StructureChecks,
    pub left_index: Option<usize>,
    pub right_index: Option<usize>,
    pub associator_index: Option<usize>,
    pub mult_algebra_dim: usize,
    pub stable_image_dim: usize,
    pub weak_dims: Vec<usize>,
    pub strong_dims: Vec<usize>,
    pub derived_dims: Vec<usize>,
}

pub fn analyze(a: &Algebra) -> Result<AnalysisReport> {
    let nilpotence = nilpotence_report(a)?;
    let derived = a.derived_series();
    let m = OperatorAlgebra::mult_algebra(a);
    if !m.is_closed_under_composition() {
        return Err(Error::Invariant("M(A) is not closed under composition".into()));
    }
    let (image, _) = stable_image(a);
    if image.is_zero() != nilpotence.is_nilpotent {
        return Err(Error::Invariant("stable image disagrees with the nilpotence criteria".into()));
    }
    Ok(AnalysisReport {
        dim: a.dim(),
        field: a.field().to_string(),
        solvable: derived.vanishing_index.is_some(),
        derived_length: derived.vanishing_index,
        structure: a.structure_checks(),
        left_index: OperatorAlgebra::mult_algebra_left(a).nilpotency_index(),
        right_index: OperatorAlgebra::mult_algebra_right(a).nilpotency_index(),
        associator_index: OperatorAlgebra::mult_algebra_assoc(a).nilpotency_index(),
        mult_algebra_dim: m.dim(),
        stable_image_dim: image.dim(),
        weak_dims: a.weak_series().dims(),
        strong_dims: a.strong_series().dims(),
        derived_dims: derived.dims(),
        nilpotence,
    })
}

fn index(i: Option<usize>) -> String {
    i.map_or("none".into(), |v| v.to_string())
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl std::fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let n = &self.nilpotence;
        writeln!(f, "algebra of dimension {} over {}", self.dim, self.field)?;
        if n.is_nilpotent {
            writeln!(f, "nilpotent: yes, N1={} N2={} N3={}", index(n.n1), index(n.n2), index(n.n3))?;
        } else {
            writeln!(f, "nilpotent: no")?;
        }
        match self.derived_length {
            Some(l) => writeln!(f, "solvable: yes (length {l})")?,
            None => writeln!(f, "solvable: no")?,
        }
        let s = &self.structure;
        writeln!(
            f,
            "associative: {}, anticommutative: {}, jacobi: {}, lie: {}",
            yes(s.associative),
            yes(s.anticommutative),
            yes(s.jacobi),
            yes(s.lie)
        )?;
        writeln!(
            f,
            "index of M_l: {}, M_r: {}, M_a: {}",
            index(self.left_index),
            index(self.right_index),
            index(self.associator_index)
        )?;
        writeln!(f, "dim M(A): {}, stable image dim: {}", self.mult_algebra_dim, self.stable_image_dim)?;
        writeln!(f, "weak series dims: {:?}", self.weak_dims)?;
        writeln!(f, "strong series dims: {:?}", self.strong_dims)?;
        write!(f, "derived series dims: {:?}", self.derived_dims)
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_)
        | Error::InvalidArgument(_)
        | Error::InvalidPresentation(_)
        | Error::UnknownScenario { .. }
        | Error::DimensionLimit { .. }
        | Error::NotPrime(_)
        | Error::ParseScalar(_) => 2,
        _ => 3,
    }
}

fn max_dim_from_env() -> Result<usize> {
    match std::env::var(MAX_DIM_VAR) {
        Ok(v) => {
            v.trim().parse().map_err(|_| Error::InvalidArgument(format!("{MAX_DIM_VAR}={v} is not a positive integer")))
        }
        Err(_) => Ok(DEFAULT_MAX_DIM),
    }
}

fn table(out: &mut dyn Write, header: (&str, &str), rows: &[(usize, usize)]) -> std::io::Result<()> {
    writeln!(out, "  {:>8} {:>8}", header.0, header.1)?;
    for (a, b) in rows {
        writeln!(out, "  {a:>8} {b:>8}")?;
    }
    Ok(())
}

fn growth_rows(report: &ScenarioReport) -> Option<Vec<(usize, usize)>> {
    if let Some(curve) = report.witness("curve") {
        return serde_json::from_value(curve.clone()).ok();
    }
    let degrees: Vec<usize> = serde_json::from_value(report.witness("rank_degrees")?.clone()).ok()?;
    let ranks: Vec<usize> = serde_json::from_value(report.witness("rank_growth")?.clone()).ok()?;
    Some(degrees.into_iter().zip(ranks).collect())
}

fn emit_reports(out: &mut dyn Write, format: OutputFormat, reports: &[ScenarioReport]) -> std::io::Result<()> {
    match format {
        OutputFormat::Json => {
            let text = if reports.len() == 1 {
                serde_json::to_string_pretty(&reports[0])
            } else {
                serde_json::to_string_pretty(reports)
            };
            writeln!(out, "{}", text.expect("reports serialize"))
        }
        OutputFormat::Pretty => {
            for r in reports {
                writeln!(out, "{r}")?;
                if let Some(rows) = growth_rows(r) {
                    table(out, ("degree", "witness"), &rows)?;
                }
            }
            Ok(())
        }
    }
}

fn verdict_code(reports: &[ScenarioReport]) -> i32 {
    if reports.iter().all(ScenarioReport::passed) {
        0
    } else {
        1
    }
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    let max_dim = max_dim_from_env()?;
    let io = |e: std::io::Error| Error::Invariant(format!("write failed: {e}"));
    match cli.command {
        Command::Analyze { path } => {
            let text = std::fs::read_to_string(&path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            let algebra = Algebra::from_json(&text).map_err(|e| match e {
                Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
                other => other,
            })?;
            if algebra.dim() > max_dim {
                return Err(Error::DimensionLimit { dim: algebra.dim(), limit: max_dim });
            }
            let report = analyze(&algebra)?;
            match cli.output {
                OutputFormat::Json => {
                    writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("report serializes"))
                }
                OutputFormat::Pretty => writeln!(out, "{report}"),
            }
            .map_err(io)?;
            Ok(0)
        }
        Command::Scenario { name, degree, prime, n } => {
            let params = ScenarioParams {
                degree: degree.map(|d| d as usize),
                prime,
                n: n.map(|v| v as usize),
                max_dim: Some(max_dim),
            };
            let reports = if name == "all" {
                scenarios::run_all(&params).into_iter().map(|(_, r)| r).collect::<Result<Vec<_>>>()?
            } else {
                vec![scenarios::run_scenario(&name, &params)?]
            };
            emit_reports(out, cli.output, &reports).map_err(io)?;
            Ok(verdict_code(&reports))
        }
        Command::Tower { name, degrees, degree_list, functoriality } => {
            let all: Vec<usize> = degrees.iter().chain(&degree_list).map(|&d| d as usize).collect();
            if all.is_empty() {
                return Err(Error::InvalidArgument("tower needs at least one degree".into()));
            }
            let report = scenarios::run_tower(&name, &all, max_dim, functoriality)?;
            emit_reports(out, cli.output, std::slice::from_ref(&report)).map_err(io)?;
            Ok(verdict_code(&[report]))
        }
        Command::List => {
            let mut listing = || -> std::io::Result<()> {
                writeln!(out, "scenarios:")?;
                for s in scenarios::registry() {
                    writeln!(out, "  {:<18} {}  [{}]", s.name, s.summary, s.defaults)?;
                }
                writeln!(out, "tower families:")?;
                for (name, witness, _) in scenarios::TOWER_FAMILIES {
                    writeln!(out, "  {name:<18} witness: {witness}")?;
                }
                Ok(())
            };
            listing().map_err(io)?;
            Ok(0)
        }
    }
}

/// Parses `args` (including the program name) and runs the command; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    let mut buffer = Vec::new();
    let result = execute(cli, &mut buffer);
    let _ = out.write_all(&buffer).and_then(|_| out.flush());
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
