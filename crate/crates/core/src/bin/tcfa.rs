use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

use tcfa_core::conf::{self, SpaceCohomology};
use tcfa_core::format::{self, ResultFile, SpaceFile};
use tcfa_core::stability::{self, StabilityReport};
use tcfa_core::verify::{self, Suite};
use tcfa_core::{koszul, Error, Result};

#[derive(Parser)]
#[command(name = "tcfa", version, about = "Characters of generalized configuration spaces and their Koszul duals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Iterate,
    Toptriv,
    Figen,
}

#[derive(Subcommand)]
enum Command {
    /// Cohomology characters of the dual coLie coalgebra a_n and of Â_n.
    Koszul {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cohomology characters of P_n^k(X) for a space description file.
    Conf {
        #[arg(long)]
        space: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
        /// Drop the graded-degree-0 unit.
        #[arg(long)]
        no_unit: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Vanishing lines, generator windows and splittings.
    Stability {
        #[arg(long)]
        space: PathBuf,
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long)]
        c0: Option<i64>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        i: Option<i64>,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the calibration and oracle suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
    },
}

fn read_space(path: &PathBuf) -> Result<SpaceCohomology> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    let (space, warnings) = SpaceFile::parse(&text)?;
    for w in warnings {
        eprintln!("warning: {w}");
    }
    Ok(space)
}

fn space_value(space: &SpaceCohomology) -> Value {
    serde_json::to_value(SpaceFile::from_space(space)).expect("space files always serialize")
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_koszul(n: usize, d: usize, max_degree: usize, fmt: OutputFormat, out: &Option<PathBuf>) -> Result<()> {
    let a = koszul::an_character(n, d, max_degree)?;
    let text = match fmt {
        OutputFormat::Json => {
            let parameters = BTreeMap::from([
                ("n".to_string(), Value::from(n)),
                ("d".to_string(), Value::from(d)),
                ("max_degree".to_string(), Value::from(max_degree)),
            ]);
            let mut file = ResultFile::new("koszul", parameters);
            file.graded = format::character_entries(&a.character)?;
            file.renormalized = Some(format::character_entries(&a.renormalized)?);
            file.to_json()
        }
        OutputFormat::Table => format!(
            "a_{n} (d = {d})\n{}\nrenormalized\n{}",
            format::character_table(&a.character),
            format::character_table(&a.renormalized)
        ),
    };
    emit(&text, out)
}

fn cmd_conf(
    path: &PathBuf,
    n: usize,
    max_degree: usize,
    fmt: OutputFormat,
    no_unit: bool,
    out: &Option<PathBuf>,
) -> Result<()> {
    let space = read_space(path)?;
    let cc = conf::conf_cohomology(&space, n, max_degree, !no_unit)?;
    let text = match fmt {
        OutputFormat::Json => {
            let parameters = BTreeMap::from([
                ("space".to_string(), space_value(&space)),
                ("n".to_string(), Value::from(n)),
                ("max_degree".to_string(), Value::from(max_degree)),
                ("unit".to_string(), Value::from(!no_unit)),
            ]);
            let mut file = ResultFile::new("conf", parameters);
            file.graded = format::character_entries(&cc.character)?;
            file.to_json()
        }
        OutputFormat::Table => format::character_table(&cc.character),
    };
    emit(&text, out)
}

fn require<T>(value: Option<T>, flag: &str, mode: &str) -> Result<T> {
    value.ok_or_else(|| Error::InvalidArgument(format!("--mode {mode} needs {flag}")))
}

#[allow(clippy::too_many_arguments)]
fn cmd_stability(
    path: &PathBuf,
    mode: ModeArg,
    c0: Option<i64>,
    m: Option<usize>,
    i: Option<i64>,
    n: usize,
    max_degree: usize,
    fmt: OutputFormat,
    out: &Option<PathBuf>,
) -> Result<()> {
    let space = read_space(path)?;
    let report: StabilityReport = match mode {
        ModeArg::Iterate => {
            let c0 = require(c0, "--c0", "iterate")?;
            stability::iterate_indecomposables(&space, n, c0, max_degree)?
        }
        ModeArg::Toptriv => {
            let m = require(m, "--m", "toptriv")?;
            if n != 2 {
                return Err(Error::Hypothesis(format!(
                    "the operator splitting is only available for n = 2, got n = {n}"
                )));
            }
            stability::toptriv_split(&space, m, max_degree)?
        }
        ModeArg::Figen => {
            let c0 = require(c0, "--c0", "figen")?;
            let i = require(i, "--i", "figen")?;
            stability::finite_generation_report(&space, n, c0, i)?
        }
    };
    let text = match fmt {
        OutputFormat::Json => {
            let mut parameters = BTreeMap::from([
                ("space".to_string(), space_value(&space)),
                ("mode".to_string(), Value::from(report.mode.name())),
                ("n".to_string(), Value::from(n)),
                ("max_degree".to_string(), Value::from(max_degree)),
            ]);
            for (key, value) in [("c0", c0.map(Value::from)), ("m", m.map(Value::from)), ("i", i.map(Value::from))] {
                if let Some(v) = value {
                    parameters.insert(key.to_string(), v);
                }
            }
            let mut file = ResultFile::new("stability", parameters);
            file.report = Some(format::report_entry(&report)?);
            file.to_json()
        }
        OutputFormat::Table => format::report_text(&report),
    };
    emit(&text, out)
}

fn cmd_verify(suite: &str, max_degree: usize) -> Result<bool> {
    let suite: Suite = suite.parse()?;
    if max_degree < 1 {
        return Err(Error::InvalidArgument("--max-degree must be ≥ 1".into()));
    }
    let results = verify::run(suite, max_degree);
    for r in &results {
        println!("{r}");
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    println!("{} checks, {failed} failed", results.len());
    if let Some(first) = results.iter().find(|r| !r.passed) {
        eprintln!("first counterexample: {}: {}", first.name, first.detail);
    }
    Ok(failed == 0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    let outcome = match &cli.command {
        Command::Koszul {
            n,
            d,
            max_degree,
            format,
            out,
        } => cmd_koszul(*n, *d, *max_degree, *format, out).map(|_| true),
        Command::Conf {
            space,
            n,
            max_degree,
            format,
            no_unit,
            out,
        } => cmd_conf(space, *n, *max_degree, *format, *no_unit, out).map(|_| true),
        Command::Stability {
            space,
            mode,
            c0,
            m,
            i,
            n,
            max_degree,
            format,
            out,
        } => cmd_stability(space, *mode, *c0, *m, *i, *n, *max_degree, *format, out).map(|_| true),
        Command::Verify { suite, max_degree } => cmd_verify(suite, *max_degree),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
