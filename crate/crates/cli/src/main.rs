use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::anyhow;
use belief_kernel::io::{parse_scenario, preorder_to_json, run_scenario, EvalError};
use belief_kernel::lab::{
    check_postulate, find_counterexample, verify_characterization, Scope, TheoremId, DEFAULT_SAMPLES,
};
use belief_kernel::orders::enumerate_preorders;
use belief_kernel::{ChangeError, ChangeOperator, Flavor, LabError, OpConfig, PostulateId, Signature, Strategy};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

const WORKERS_VAR: &str = "BELIEF_KERNEL_WORKERS";

#[derive(Parser)]
#[command(name = "belief-kernel", version, about = "Iterated belief change over total preorders")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a scenario file and print the belief trace.
    Eval {
        scenario: PathBuf,
        #[arg(long, default_value = "natural")]
        operator_contraction: String,
        #[arg(long, default_value = "natural")]
        operator_revision: String,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check one postulate for one operator.
    Check {
        #[arg(long)]
        operator: String,
        #[arg(long)]
        postulate: String,
        #[arg(long, default_value_t = 2)]
        signature_size: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Exhaustive)]
        mode: ModeArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
    },
    /// Search for a violating instance of a postulate.
    Counterexample {
        #[arg(long)]
        operator: String,
        #[arg(long)]
        postulate: String,
        #[arg(long, default_value_t = 2)]
        signature_size: usize,
    },
    /// Check that the postulate groups of a theorem agree.
    VerifyTheorem {
        #[arg(long)]
        operator: String,
        #[arg(long)]
        theorem: String,
        #[arg(long, default_value_t = 2)]
        signature_size: usize,
    },
    /// List every normalized preorder over a signature.
    Enumerate {
        #[arg(long)]
        signature_size: usize,
        #[arg(long)]
        count_only: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Sampled,
}

/// A failed command with the exit code it maps to.
struct Exit {
    code: u8,
    error: anyhow::Error,
}

impl Exit {
    fn usage(error: impl Into<anyhow::Error>) -> Exit {
        Exit {
            code: 2,
            error: error.into(),
        }
    }

    fn inconsistent(error: impl Into<anyhow::Error>) -> Exit {
        Exit {
            code: 3,
            error: error.into(),
        }
    }
}

impl From<LabError> for Exit {
    fn from(e: LabError) -> Exit {
        Exit::usage(e)
    }
}

fn operator(name: &str, flavor: Flavor) -> Result<Strategy, Exit> {
    Strategy::from_short_name(name, flavor)
        .or_else(|_| name.parse::<Strategy>().map_err(|_| ChangeError::UnknownStrategy(name.into())))
        .and_then(|s| {
            if s.flavor() == flavor {
                Ok(s)
            } else {
                Err(ChangeError::UnknownStrategy(format!("{name} is not a {flavor} operator")))
            }
        })
        .map_err(Exit::usage)
}

fn print_line(v: &Value) {
    println!("{v}");
}

fn eval(scenario: &PathBuf, contraction: &str, revision: &str, out: Option<&PathBuf>) -> Result<u8, Exit> {
    let config = OpConfig::new(
        operator(contraction, Flavor::Contraction)?,
        operator(revision, Flavor::Revision)?,
    )
    .map_err(Exit::usage)?;
    let text = fs::read_to_string(scenario)
        .map_err(|e| Exit::usage(anyhow!("reading {}: {e}", scenario.display())))?;
    let parsed = parse_scenario(&text).map_err(|e| {
        if e.is_inconsistency() {
            Exit::inconsistent(e)
        } else {
            Exit::usage(e)
        }
    })?;
    let report = run_scenario(&parsed, &config).map_err(|e| match &e {
        EvalError::Script(s) if s.source == ChangeError::InconsistentInput => Exit::inconsistent(e),
        EvalError::Io(io) if io.is_inconsistency() => Exit::inconsistent(e),
        _ => Exit::usage(e),
    })?;
    let rendered = serde_json::to_string_pretty(&report).expect("report serializes");
    match out {
        Some(path) => fs::write(path, rendered + "\n")
            .map_err(|e| Exit::usage(anyhow!("writing {}: {e}", path.display())))?,
        None => println!("{rendered}"),
    }
    Ok(0)
}

fn check(name: &str, postulate: &str, size: usize, mode: ModeArg, seed: u64, samples: usize) -> Result<u8, Exit> {
    let id: PostulateId = postulate.parse()?;
    let op = operator(name, id.flavor())?;
    let scope = match mode {
        ModeArg::Exhaustive => Scope::exhaustive(size),
        ModeArg::Sampled => Scope::sampled(size, seed, samples),
    };
    let verdict = check_postulate(&op, id, &scope)?;
    print_line(&verdict.to_json());
    Ok(if verdict.holds() { 0 } else { 1 })
}

fn counterexample(name: &str, postulate: &str, size: usize) -> Result<u8, Exit> {
    let id: PostulateId = postulate.parse()?;
    let op = operator(name, id.flavor())?;
    let found = find_counterexample(&op, id, size)?;
    print_line(&json!({
        "postulate": id.name(),
        "operator": op.canonical_name(),
        "signature_size": size,
        "witness": found.as_ref().map(|w| w.to_json()),
    }));
    Ok(if found.is_some() { 1 } else { 0 })
}

fn verify_theorem(name: &str, theorem: &str, size: usize) -> Result<u8, Exit> {
    let thm: TheoremId = theorem.parse()?;
    let op = operator(name, thm.flavor())?;
    match verify_characterization(&op, thm, size) {
        Ok(report) => {
            print_line(&report.to_json());
            Ok(if report.pass { 0 } else { 1 })
        }
        Err(LabError::NotAgm(verdict)) => {
            print_line(&json!({
                "theorem": thm.name(),
                "operator": op.canonical_name(),
                "signature_size": size,
                "result": "NOT-AGM",
                "failing": verdict.to_json(),
            }));
            Ok(1)
        }
        Err(e) => Err(e.into()),
    }
}

fn enumerate(size: usize, count_only: bool) -> Result<u8, Exit> {
    let sig = Signature::with_size(size).map_err(Exit::usage)?;
    let iter = enumerate_preorders(sig.world_count()).map_err(Exit::usage)?;
    if count_only {
        println!("{}", iter.count());
    } else {
        use std::io::Write;
        let stdout = std::io::stdout();
        let mut out = std::io::BufWriter::new(stdout.lock());
        for order in iter {
            writeln!(out, "{}", preorder_to_json(&sig, &order)).map_err(Exit::usage)?;
        }
        out.flush().map_err(Exit::usage)?;
    }
    Ok(0)
}

fn configure_workers() -> Result<(), Exit> {
    let Ok(raw) = std::env::var(WORKERS_VAR) else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Exit::usage(anyhow!("{WORKERS_VAR} must be a positive integer, got '{raw}'")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(Exit::usage)
}

fn run(cli: Cli) -> Result<u8, Exit> {
    configure_workers()?;
    match cli.command {
        Command::Eval {
            scenario,
            operator_contraction,
            operator_revision,
            out,
        } => eval(&scenario, &operator_contraction, &operator_revision, out.as_ref()),
        Command::Check {
            operator,
            postulate,
            signature_size,
            mode,
            seed,
            samples,
        } => check(&operator, &postulate, signature_size, mode, seed, samples),
        Command::Counterexample {
            operator,
            postulate,
            signature_size,
        } => counterexample(&operator, &postulate, signature_size),
        Command::VerifyTheorem {
            operator,
            theorem,
            signature_size,
        } => verify_theorem(&operator, &theorem, signature_size),
        Command::Enumerate {
            signature_size,
            count_only,
        } => enumerate(signature_size, count_only),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Exit { code, error }) => {
            eprintln!("error: {error}");
            ExitCode::from(code)
        }
    }
}
