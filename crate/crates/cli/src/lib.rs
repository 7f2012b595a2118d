//! Command-line front end: document parsing, task dispatch and report output.

pub mod documents;
pub mod report;
pub mod tasks;

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use superlie::envelope::{validate_module, SuperModule};
use superlie::liesuper::{fixtures, validate_restricted, validate_superalgebra, Report as CheckReport, Status};
use superlie::LieSuperAlgebra;

use documents::{AlgebraDocument, DocumentError, ModeSpec, ModuleDocument};
use report::Report;
use tasks::{Context, Params, Task};

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const INPUT: i32 = 1;
    pub const VIOLATION: i32 = 2;
    pub const LIMIT: i32 = 3;
    pub const USAGE: i32 = 64;
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error("limit exceeded: {what} (limit {limit})")]
    Limit { what: String, limit: u64 },
}

impl From<superlie::Error> for CliError {
    fn from(e: superlie::Error) -> Self {
        match e {
            superlie::Error::LimitExceeded { what, limit } => CliError::Limit { what, limit },
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<DocumentError> for CliError {
    fn from(e: DocumentError) -> Self {
        CliError::Input(e.to_string())
    }
}

#[derive(Parser, Debug)]
#[command(name = "superlie", version, about = "Computations with restricted Lie superalgebras in characteristic 2")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the axioms of an algebra document or fixture.
    Validate {
        algebra: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a computation and print its report.
    Compute(ComputeArgs),
    /// Print the document of a built-in fixture.
    Export {
        fixture: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(clap::Args, Debug)]
struct ComputeArgs {
    /// Algebra document path or fixture name (A1, A2, A3, A4, E2).
    algebra: String,
    #[arg(value_enum)]
    task: Task,
    /// Points are taken over GF(2^e).
    #[arg(long, default_value_t = 1)]
    e: u32,
    #[arg(long, default_value_t = 5)]
    nmax: usize,
    #[arg(long, default_value_t = superlie::projs::DEFAULT_DEGREE_CAP)]
    degree_cap: u32,
    #[arg(long)]
    m: Option<PathBuf>,
    #[arg(long)]
    n: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of random modules added by datum-suite.
    #[arg(long, default_value_t = 4)]
    samples: usize,
    #[arg(long, value_parser = parse_mode)]
    mode: Option<ModeSpec>,
    /// Linear forms for carlson, separated by `;`, e.g. `x; y + x`.
    #[arg(long)]
    forms: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_mode(s: &str) -> Result<ModeSpec, String> {
    match s {
        "U" | "u" => Ok(ModeSpec::U),
        "V" | "v" => Ok(ModeSpec::V),
        _ => Err(format!("mode must be U or V, got '{s}'")),
    }
}

/// What a run produced.
#[derive(Debug, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses the arguments (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome { code: exit::OK, stdout: text, stderr: String::new() }
                }
                _ => Outcome { code: exit::USAGE, stdout: String::new(), stderr: text },
            };
        }
    };
    let (result, out) = match cli.command {
        Command::Validate { algebra, out } => (validate(&algebra), out),
        Command::Export { fixture, out } => (export(&fixture), out),
        Command::Compute(args) => {
            let out = args.out.clone();
            (compute(args), out)
        }
    };
    match result {
        Ok((code, text)) => emit(code, text, out.as_deref()),
        Err(e) => {
            let code = match e {
                CliError::Usage(_) => exit::USAGE,
                CliError::Input(_) => exit::INPUT,
                CliError::Limit { .. } => exit::LIMIT,
            };
            Outcome { code, stdout: String::new(), stderr: format!("error: {e}\n") }
        }
    }
}

fn emit(code: i32, text: String, out: Option<&Path>) -> Outcome {
    match out {
        None => Outcome { code, stdout: text, stderr: String::new() },
        Some(path) => match std::fs::write(path, &text) {
            Ok(()) => Outcome { code, ..Outcome::default() },
            Err(e) => Outcome { code: exit::INPUT, stdout: String::new(), stderr: format!("error: {}: {e}\n", path.display()) },
        },
    }
}

/// Reads an algebra from a file, or a fixture when no such file exists.
fn load_algebra(arg: &str) -> Result<(LieSuperAlgebra, AlgebraDocument), CliError> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{arg}: {e}")))?;
        let doc = AlgebraDocument::parse(&text).map_err(|e| CliError::Input(format!("{arg}: {e}")))?;
        let l = doc.to_algebra().map_err(|e| CliError::Input(format!("{arg}: {e}")))?;
        return Ok((l, doc));
    }
    match fixtures::by_name(arg) {
        Some(l) => Ok((l.clone(), AlgebraDocument::from_algebra(&l))),
        None => Err(CliError::Input(format!("{arg}: no such file or fixture"))),
    }
}

fn load_module(path: &Path, l: &LieSuperAlgebra) -> Result<(SuperModule, ModuleDocument), CliError> {
    let where_ = path.display();
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{where_}: {e}")))?;
    let doc = ModuleDocument::parse(&text).map_err(|e| CliError::Input(format!("{where_}: {e}")))?;
    let m = doc.to_module(l).map_err(|e| CliError::Input(format!("{where_}: {e}")))?;
    Ok((m, doc))
}

fn status_label(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Vacuous => "VACUOUS",
    }
}

fn checks_json<A: Copy + PartialEq + std::fmt::Display>(rep: &CheckReport<A>, names: &[String]) -> Value {
    rep.checks
        .iter()
        .map(|c| {
            json!({
                "axiom": c.axiom.to_string(),
                "status": status_label(c.status),
                "witness": c.witness.as_ref().map(|w| json!({
                    "basis": w.basis.iter().map(|&i| names.get(i).cloned().unwrap_or_else(|| i.to_string())).collect::<Vec<_>>(),
                    "detail": w.detail,
                })),
            })
        })
        .collect()
}

/// Superalgebra axioms, plus the restricted ones when a 2-map is present.
fn algebra_checks(l: &LieSuperAlgebra) -> Result<(bool, Value), CliError> {
    let mut rep = validate_superalgebra(l);
    if l.is_restricted() {
        rep = rep.merge(validate_restricted(l)?);
    }
    Ok((rep.is_valid(), checks_json(&rep, l.names())))
}

fn validation_report(task: &str, inputs: Value, checks: Value, valid: bool) -> String {
    Report {
        task: task.into(),
        inputs,
        parameters: json!({}),
        results: json!({ "valid": valid, "checks": checks }),
        criterion: "structure-axioms".into(),
        verdict: Some(report::verdict(valid)),
        partial: false,
    }
    .render()
}

fn validate(arg: &str) -> Result<(i32, String), CliError> {
    let (l, doc) = load_algebra(arg)?;
    let (valid, checks) = algebra_checks(&l)?;
    let inputs = json!({ "algebra": doc });
    let code = if valid { exit::OK } else { exit::VIOLATION };
    Ok((code, validation_report("validate", inputs, checks, valid)))
}

fn export(name: &str) -> Result<(i32, String), CliError> {
    let l = fixtures::by_name(name).ok_or_else(|| CliError::Input(format!("unknown fixture '{name}'")))?;
    let doc = serde_json::to_value(AlgebraDocument::from_algebra(&l)).expect("documents serialize");
    Ok((exit::OK, report::canonical(&doc)))
}

fn compute(args: ComputeArgs) -> Result<(i32, String), CliError> {
    let (l, doc) = load_algebra(&args.algebra)?;
    let mut inputs = json!({ "algebra": doc });
    let (valid, checks) = algebra_checks(&l)?;
    if !valid {
        return Ok((exit::VIOLATION, validation_report(&args.task.name(), inputs, checks, false)));
    }
    let mut modules = [None, None];
    for (slot, (key, path)) in modules.iter_mut().zip([("m", &args.m), ("n", &args.n)]) {
        let Some(path) = path else { continue };
        let (m, mdoc) = load_module(path, &l)?;
        let rep = validate_module(&l, &m)?;
        inputs[key] = serde_json::to_value(&mdoc).expect("documents serialize");
        if !rep.is_valid() {
            let checks = checks_json(&rep, &mdoc.names());
            return Ok((exit::VIOLATION, validation_report(&args.task.name(), inputs, checks, false)));
        }
        *slot = Some(m);
    }
    let params = Params {
        e: args.e,
        nmax: args.nmax,
        degree_cap: args.degree_cap,
        seed: args.seed,
        samples: args.samples,
        mode: args.mode,
        forms: args.forms,
    };
    let parameters = params.relevant(args.task);
    let [m, n] = modules;
    let ctx = Context { algebra: l, m, n, params };
    let mut report = Report {
        task: args.task.name(),
        inputs,
        parameters,
        results: Value::Null,
        criterion: args.task.criterion().into(),
        verdict: None,
        partial: false,
    };
    match tasks::run(args.task, &ctx) {
        Ok(t) => {
            report.results = t.results;
            report.verdict = t.verdict;
            report.partial = t.partial;
            let code = match (t.partial, t.verdict) {
                (true, _) => exit::LIMIT,
                (false, Some("FAIL")) => exit::VIOLATION,
                _ => exit::OK,
            };
            Ok((code, report.render()))
        }
        Err(CliError::Limit { what, limit }) => {
            report.results = json!({ "limit": { "what": what, "limit": limit } });
            report.partial = true;
            Ok((exit::LIMIT, report.render()))
        }
        Err(e) => Err(e),
    }
}
