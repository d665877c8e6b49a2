//! `argstable`: preferred extensions, candidate checks, acceptance queries and
//! program export for argumentation frameworks in APX or TGF.

use std::fmt;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use argstable::logic::{export_asp, export_dimacs, Program};
use argstable::{
    translate, Argument, ArgumentationFramework, Engine, Error, Extension, PreferredCheck,
    QueryMode, SolveReport, Solver,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

const BOUND_VAR: &str = "ARGSTABLE_BOUND";

#[derive(Parser, Debug)]
#[command(name = "argstable", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    config: Config,
}

#[derive(Args, Debug)]
struct Config {
    /// Framework file, or `-` for standard input.
    #[arg(long, global = true, default_value = "-")]
    input: PathBuf,

    #[arg(long, global = true, value_enum, default_value_t = Format::Apx)]
    format: Format,

    #[arg(long, global = true, value_enum, default_value_t = EngineArg::Gamma)]
    engine: EngineArg,

    /// Output syntax for `translate`.
    #[arg(long, global = true, value_enum, default_value_t = Emit::Asp)]
    emit: Emit,

    /// Query for membership in some preferred extension (the default).
    #[arg(long, global = true, conflicts_with = "cautious")]
    brave: bool,

    /// Query for membership in every preferred extension.
    #[arg(long, global = true)]
    cautious: bool,

    /// Print one JSON object per line.
    #[arg(long, global = true)]
    json: bool,

    /// Run every engine (or both checkers) and fail if they disagree.
    #[arg(long, global = true)]
    cross_check: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print every preferred extension.
    Solve,
    /// Decide whether the listed arguments form a preferred extension.
    Check { arguments: Vec<String> },
    /// Brave or cautious acceptance of one argument.
    Query { argument: String },
    /// Print an encoding of the framework.
    Translate {
        #[arg(value_enum)]
        target: Target,
    },
    /// Print every admissible set.
    Admissible,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Apx,
    Tgf,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum EngineArg {
    Alpha,
    Gamma,
    Lambda,
    Oracle,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Engine {
        match e {
            EngineArg::Alpha => Engine::Alpha,
            EngineArg::Gamma => Engine::Gamma,
            EngineArg::Lambda => Engine::Lambda,
            EngineArg::Oracle => Engine::Oracle,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Emit {
    Asp,
    Dimacs,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Target {
    Alpha,
    Beta,
    Gamma,
    Lambda,
    StableFragment,
}

/// Why a run stopped short of success. Each maps to a fixed exit status.
#[derive(Debug)]
enum Failure {
    Input(String),
    Bound(String),
    Negative,
    Disagreement(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Bound(_) => 2,
            Failure::Negative => 3,
            Failure::Disagreement(_) => 4,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Input(m) | Failure::Bound(m) | Failure::Disagreement(m) => f.write_str(m),
            Failure::Negative => Ok(()),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_bound() {
            Failure::Bound(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(&cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            let _ = out.flush();
            let message = failure.to_string();
            if !message.is_empty() {
                eprintln!("argstable: {message}");
            }
            ExitCode::from(failure.code())
        }
    }
}

fn run(cli: &Cli, out: &mut impl Write) -> Outcome {
    let config = &cli.config;
    let solver = solver_from_env()?;
    let af = load(config)?;
    match &cli.command {
        Command::Solve => solve(config, &solver, &af, out),
        Command::Check { arguments } => check(config, &solver, &af, arguments, out),
        Command::Query { argument } => query(config, &solver, &af, argument, out),
        Command::Translate { target } => translate_cmd(config, &af, *target, out),
        Command::Admissible => admissible(config, &solver, &af, out),
    }
}

fn solver_from_env() -> Result<Solver, Failure> {
    match std::env::var(BOUND_VAR) {
        Ok(raw) => {
            let bound: usize = raw.trim().parse().map_err(|_| {
                Failure::Input(format!(
                    "{BOUND_VAR} must be a non-negative integer, got `{raw}`"
                ))
            })?;
            Ok(Solver::with_bounds(bound, bound))
        }
        Err(std::env::VarError::NotPresent) => Ok(Solver::default()),
        Err(e) => Err(Failure::Input(format!("{BOUND_VAR}: {e}"))),
    }
}

fn load(config: &Config) -> Result<ArgumentationFramework, Failure> {
    let mut text = String::new();
    if config.input.as_os_str() == "-" {
        io::stdin().read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(&config.input)
            .map_err(|e| Failure::Input(format!("{}: {e}", config.input.display())))?;
    }
    Ok(match config.format {
        Format::Apx => argstable::parse_apx(&text)?,
        Format::Tgf => argstable::parse_tgf(&text)?,
    })
}

fn names<T: fmt::Display>(items: impl IntoIterator<Item = T>) -> Vec<String> {
    items.into_iter().map(|x| x.to_string()).collect()
}

fn solve(
    config: &Config,
    solver: &Solver,
    af: &ArgumentationFramework,
    out: &mut impl Write,
) -> Outcome {
    let report = if config.cross_check {
        agreed_report(solver, af, config.engine.into())?
    } else {
        solver.preferred(af, config.engine.into())?
    };
    for extension in &report.extensions {
        if config.json {
            let line = json!({
                "engine": report.engine,
                "extension": extension,
                "witness": report.witness_models.get(extension),
            });
            writeln!(out, "{line}")?;
        } else {
            writeln!(out, "{extension}")?;
        }
    }
    Ok(())
}

/// Runs every engine and returns the requested engine's report when all agree.
fn agreed_report(
    solver: &Solver,
    af: &ArgumentationFramework,
    engine: Engine,
) -> Result<SolveReport, Failure> {
    let reports = solver.cross_check(af)?;
    let first = &reports[0].extensions;
    if reports.iter().any(|r| &r.extensions != first) {
        let detail: Vec<String> = reports
            .iter()
            .map(|r| format!("{}: {}", r.engine, names(&r.extensions).join(" ")))
            .collect();
        return Err(Failure::Disagreement(format!(
            "engines disagree; {}",
            detail.join("; ")
        )));
    }
    match reports.into_iter().find(|r| r.engine == engine) {
        Some(report) => Ok(report),
        None => Ok(solver.preferred(af, engine)?),
    }
}

fn parse_arguments(raw: &[String]) -> Result<Extension, Failure> {
    raw.iter()
        .flat_map(|s| s.split(|c: char| c == ',' || c.is_whitespace()))
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<Argument>().map_err(Failure::from))
        .collect()
}

fn check(
    config: &Config,
    solver: &Solver,
    af: &ArgumentationFramework,
    raw: &[String],
    out: &mut impl Write,
) -> Outcome {
    let candidate = parse_arguments(raw)?;
    let verdict = solver.check_preferred_unsat(af, &candidate)?;
    if config.cross_check {
        let by_consequence = solver.check_preferred_consequence(af, &candidate)?;
        if by_consequence != verdict.is_preferred() {
            return Err(Failure::Disagreement(format!(
                "checkers disagree on {candidate}: unsat says {}, consequence says {}",
                verdict.is_preferred(),
                by_consequence
            )));
        }
    }
    if config.json {
        let line = match &verdict {
            PreferredCheck::Preferred => json!({"candidate": candidate, "preferred": true}),
            PreferredCheck::NotAModel { violated } => json!({
                "candidate": candidate,
                "preferred": false,
                "reason": "not-a-model",
                "violated": violated.to_string(),
            }),
            PreferredCheck::Satisfiable { counter_model } => json!({
                "candidate": candidate,
                "preferred": false,
                "reason": "satisfiable",
                "counter_model": counter_model,
            }),
        };
        writeln!(out, "{line}")?;
    } else {
        match &verdict {
            PreferredCheck::Preferred => writeln!(out, "preferred")?,
            PreferredCheck::NotAModel { violated } => {
                writeln!(out, "not preferred: not a model, violates {violated}")?
            }
            PreferredCheck::Satisfiable { counter_model } => writeln!(
                out,
                "not preferred: satisfiable, counter-model {counter_model}"
            )?,
        }
    }
    if verdict.is_preferred() {
        Ok(())
    } else {
        Err(Failure::Negative)
    }
}

fn query(
    config: &Config,
    solver: &Solver,
    af: &ArgumentationFramework,
    raw: &str,
    out: &mut impl Write,
) -> Outcome {
    let argument: Argument = raw.parse()?;
    let mode = if config.cautious {
        QueryMode::Cautious
    } else {
        QueryMode::Brave
    };
    let verdict = solver.query(af, &argument, mode)?;
    if config.json {
        let line = json!({
            "argument": verdict.argument,
            "mode": verdict.mode,
            "holds": verdict.holds,
            "evidence": verdict.evidence,
        });
        writeln!(out, "{line}")?;
    } else {
        writeln!(out, "{verdict}")?;
    }
    if verdict.holds {
        Ok(())
    } else {
        Err(Failure::Negative)
    }
}

fn translate_cmd(
    config: &Config,
    af: &ArgumentationFramework,
    target: Target,
    out: &mut impl Write,
) -> Outcome {
    let program: Program = match target {
        Target::Alpha => translate::alpha(af),
        Target::Beta => translate::beta(af),
        Target::Gamma => translate::gamma(af),
        Target::Lambda => translate::lambda(af),
        Target::StableFragment => translate::stable_fragment(af),
    };
    let text = match config.emit {
        Emit::Asp => export_asp(&program),
        Emit::Dimacs => export_dimacs(&program).0,
    };
    out.write_all(text.as_bytes())?;
    if !text.is_empty() && !text.ends_with('\n') {
        writeln!(out)?;
    }
    Ok(())
}

fn admissible(
    config: &Config,
    solver: &Solver,
    af: &ArgumentationFramework,
    out: &mut impl Write,
) -> Outcome {
    for set in solver.oracle.admissible(af)? {
        if config.json {
            writeln!(out, "{}", json!({ "admissible": set }))?;
        } else {
            writeln!(out, "{set}")?;
        }
    }
    Ok(())
}
