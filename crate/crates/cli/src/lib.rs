//! Command-line front end for `orbit-atlas`.
//!
//! Exit codes: 0 success, 1 verification failure or domain error,
//! 2 budget or bound exceeded, 64 usage error, 66 unreadable input.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use orbit_atlas::homext::Pairing;
use orbit_atlas::{DimensionVector, Limits};
use thiserror::Error;

pub mod commands;
pub mod config;
pub mod render;

use commands::Outcome;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_NO_INPUT: i32 = 66;

#[derive(Debug, Error)]
pub enum Failure {
    #[error(transparent)]
    Domain(#[from] orbit_atlas::Error),
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {0}")]
    Unreadable(String),
    #[error("write failed: {0}")]
    Io(#[from] std::io::Error),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Domain(
                orbit_atlas::Error::BudgetExceeded { .. }
                | orbit_atlas::Error::TreeBoundExceeded { .. },
            ) => EXIT_BUDGET,
            Self::Domain(_) | Self::Io(_) => EXIT_FAILURE,
            Self::Usage(_) => EXIT_USAGE,
            Self::Unreadable(_) => EXIT_NO_INPUT,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DiagramFormat {
    Text,
    Json,
    Ascii,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CountMethod {
    Brute,
    Partitions,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Dot,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Hom,
    Ext,
    Euler,
}

impl From<Kind> for Pairing {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Hom => Pairing::Hom,
            Kind::Ext => Pairing::Ext,
            Kind::Euler => Pairing::Euler,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "orbit-atlas",
    version,
    about = "Orbits of equioriented type-A quiver representations"
)]
pub struct Cli {
    /// key=value file with enum_budget and tree_t_max
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Maximum number of multisegments an exhaustive check may visit
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    /// Largest t for tree enumeration
    #[arg(long, global = true)]
    pub tree_t_max: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generic multisegment M(d)
    Generic {
        #[arg(short = 'd', long = "dims")]
        d: DimensionVector,
        #[arg(long, value_enum, default_value = "text")]
        format: DiagramFormat,
    },
    /// Irreducible components of the complement of the dense orbit
    Components {
        #[arg(short = 'd', long = "dims")]
        d: DimensionVector,
        #[arg(long)]
        json: bool,
    },
    /// Number of orbits
    Count {
        #[arg(short = 'd', long = "dims")]
        d: DimensionVector,
        #[arg(long, value_enum, default_value = "both")]
        method: CountMethod,
        #[arg(long)]
        json: bool,
    },
    /// Hom, Ext or Euler pairing of two multisegments
    Pairing {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long, value_enum)]
        kind: Kind,
        /// Number of vertices; defaults to the largest segment end
        #[arg(short = 't')]
        t: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Whether a multisegment has no self-extensions
    Rigid {
        #[arg(short = 'm', long = "multisegment")]
        m: String,
        #[arg(short = 't')]
        t: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustive check of the component decomposition
    Verify {
        #[arg(short = 'd', long = "dims", required_unless_present = "random")]
        d: Option<DimensionVector>,
        /// Check this many seeded random sincere vectors instead
        #[arg(long, conflicts_with = "d")]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        max_t: usize,
        #[arg(long, default_value_t = 3)]
        max_entry: u32,
        #[arg(long)]
        json: bool,
    },
    /// Exchange graph of the tilting trees
    Fan {
        #[arg(long = "t")]
        t: usize,
        #[arg(long, value_enum, default_value = "dot")]
        emit: Emit,
    },
    /// Cones of the fan containing d
    Locate {
        #[arg(short = 'd', long = "dims")]
        d: DimensionVector,
        #[arg(long)]
        json: bool,
    },
    /// Generic, pure, concave and unimodal predicates
    Classify {
        #[arg(short = 'd', long = "dims")]
        d: DimensionVector,
        #[arg(long)]
        json: bool,
    },
    /// Run one subcommand per line of a file
    Batch { file: PathBuf },
}

const BATCH_COMMANDS: [&str; 6] = [
    "components",
    "generic",
    "classify",
    "count",
    "verify",
    "locate",
];

fn execute(command: Command, limits: &Limits) -> Result<Outcome, Failure> {
    match command {
        Command::Generic { d, format } => Ok(commands::generic(&d, format)),
        Command::Components { d, json } => commands::components(&d, json),
        Command::Count { d, method, json } => commands::count(&d, method, json, limits),
        Command::Pairing {
            from,
            to,
            kind,
            t,
            json,
        } => commands::pairing(&from, &to, kind.into(), t, json),
        Command::Rigid { m, t, json } => commands::rigid(&m, t, json),
        Command::Verify {
            d,
            random,
            seed,
            max_t,
            max_entry,
            json,
        } => {
            let vectors = match (d, random) {
                (Some(d), _) => vec![d],
                (None, Some(n)) => commands::random_vectors(n, seed, max_t, max_entry),
                (None, None) => return Err(Failure::Usage("verify needs -d or --random".into())),
            };
            commands::verify(&vectors, json, limits)
        }
        Command::Fan { t, emit } => commands::fan(t, emit, limits),
        Command::Locate { d, json } => commands::locate_cmd(&d, json, limits),
        Command::Classify { d, json } => commands::classify_cmd(&d, json),
        Command::Batch { file } => batch(&file, limits),
    }
}

/// Arguments for one batch line: an optional subcommand, the dimension vector, extra flags.
fn batch_args(line: &str) -> Vec<String> {
    let mut tokens: Vec<&str> = line.split_whitespace().collect();
    let sub = if BATCH_COMMANDS.contains(&tokens[0]) {
        tokens.remove(0)
    } else {
        "components"
    };
    let mut args = vec!["orbit-atlas".to_string(), sub.to_string()];
    if let Some((&dims, rest)) = tokens.split_first() {
        args.extend(["-d".to_string(), dims.to_string()]);
        args.extend(rest.iter().map(|s| s.to_string()));
    }
    args
}

fn batch(file: &std::path::Path, limits: &Limits) -> Result<Outcome, Failure> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| Failure::Unreadable(format!("{}: {e}", file.display())))?;
    let mut out = String::new();
    let (mut passed, mut total) = (0, 0);
    for (n, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        total += 1;
        let result = Cli::try_parse_from(batch_args(line))
            .map_err(|e| {
                let msg = e.to_string();
                let first = msg.lines().next().unwrap_or_default();
                Failure::Usage(first.trim_start_matches("error: ").to_string())
            })
            .and_then(|cli| execute(cli.command, limits));
        match result {
            Ok(outcome) => {
                let status = if outcome.ok { "pass" } else { "fail" };
                out.push_str(&format!("line {}: {line}: {status}\n", n + 1));
                for l in outcome.text.lines() {
                    out.push_str(&format!("  {l}\n"));
                }
                passed += usize::from(outcome.ok);
            }
            Err(e) => out.push_str(&format!("line {}: {line}: fail: {e}\n", n + 1)),
        }
    }
    out.push_str(&format!(
        "summary: {passed}/{total} pass, {} fail\n",
        total - passed
    ));
    Ok(Outcome {
        text: out,
        ok: passed == total,
    })
}

/// Parses `args`, runs the command and writes its output. Returns the exit code.
///
/// `env_budget` is the value of `ORBIT_ATLAS_BUDGET`, if set.
pub fn run<I, T>(args: I, env_budget: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let result = config::resolve(
        cli.config.as_deref(),
        env_budget,
        cli.budget,
        cli.tree_t_max,
    )
    .and_then(|limits| execute(cli.command, &limits))
    .and_then(|outcome| {
        out.write_all(outcome.text.as_bytes())?;
        Ok(outcome.ok)
    });
    match result {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_FAILURE,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
