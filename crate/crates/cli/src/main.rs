use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod output;

use output::Format;

#[derive(Parser, Debug)]
#[command(name = "riordan", version, about = "Truncated Riordan groups over finite rings")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads (default: available cores).
    #[arg(long, global = true, env = "RIORDAN_JOBS", value_parser = clap::value_parser!(u32).range(1..))]
    jobs: Option<u32>,
    /// Include elapsed times in reports. Output is then no longer reproducible.
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GroupName {
    #[value(name = "TR")]
    Tr,
    #[value(name = "TA")]
    Ta,
    #[value(name = "TJ")]
    Tj,
    #[value(name = "TN")]
    Tn,
}

impl std::fmt::Display for GroupName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            GroupName::Tr => "TR",
            GroupName::Ta => "TA",
            GroupName::Tj => "TJ",
            GroupName::Tn => "TN",
        })
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Invariant factors of the truncated Appell groups over F2.
    Table1 {
        #[arg(long, default_value_t = 10)]
        n: u64,
        /// Cross-check every row against the group engine (n <= 16).
        #[arg(long)]
        verify: bool,
    },
    /// Print, multiply, invert or take the order of a pair.
    Element {
        /// `(g, f)` polynomial literal, `aK`, `aK(b)`, `eI`, `eI[a]`, or a JSON object.
        expr: String,
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value = "F2")]
        ring: String,
        #[arg(long, value_name = "EXPR", group = "action")]
        mul: Option<String>,
        #[arg(long, group = "action")]
        inv: bool,
        #[arg(long, group = "action")]
        matrix: bool,
        #[arg(long, group = "action")]
        order: bool,
        /// Require the element to lie in this subgroup.
        #[arg(long, value_enum, default_value_t = GroupName::Tr)]
        group: GroupName,
    },
    /// Order of a truncated group by closure enumeration.
    GroupOrder {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "F2")]
        ring: String,
        #[arg(long, value_enum, default_value_t = GroupName::Tr)]
        group: GroupName,
    },
    /// Lower central series of TR_n(F2) with quotient invariants.
    Lcs {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        depth: usize,
    },
    /// Abelianization splitting, plus the Nottingham checks and stabilization over F2.
    Abelianization {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "F2")]
        ring: String,
    },
    /// The dihedral group of order 2^(n+2) inside TR_(2^n).
    Dihedral {
        #[arg(long, default_value_t = 3)]
        n: u32,
    },
    /// Commutator-subgroup membership over the integers.
    Shapiro {
        /// JSON file, or an inline object such as '{"g":[1,0],"f":[0,1,0,0,0,0,0,0]}'.
        input: String,
    },
    /// Run verification suites; exits 1 if any check fails.
    Verify {
        #[arg(long, default_value = "all")]
        suites: String,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        #[arg(long, default_value_t = 3)]
        depth: usize,
    },
}

/// Whether every check behind the output passed.
pub type Outcome = bool;

fn run(cli: &Cli) -> Result<Outcome> {
    if let Some(k) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(k as usize)
            .build_global()
            .context("configuring worker threads")?;
    }
    let ctx = output::Context { format: cli.format, out: cli.out.clone(), timings: cli.timings };
    match &cli.command {
        Command::Table1 { n, verify } => commands::table1(&ctx, *n, *verify),
        Command::Element { expr, n, ring, mul, inv, matrix, order, group } => {
            let action = match (mul, inv, matrix, order) {
                (Some(other), ..) => commands::Action::Mul(other.clone()),
                (_, true, ..) => commands::Action::Inv,
                (_, _, true, _) => commands::Action::Matrix,
                (_, _, _, true) => commands::Action::Order,
                _ => commands::Action::Show,
            };
            commands::element(&ctx, expr, *n, &parse_ring(ring)?, action, *group)
        }
        Command::GroupOrder { n, ring, group } => commands::group_order(&ctx, *n, &parse_ring(ring)?, *group),
        Command::Lcs { n, depth } => commands::lcs(&ctx, *n, *depth),
        Command::Abelianization { n, ring } => commands::abelianization(&ctx, *n, &parse_ring(ring)?),
        Command::Dihedral { n } => commands::dihedral(&ctx, *n),
        Command::Shapiro { input } => commands::shapiro(&ctx, input),
        Command::Verify { suites, n_max, depth } => commands::verify(&ctx, suites, *n_max, *depth),
    }
}

fn parse_ring(s: &str) -> Result<riordan_core::RingSpec> {
    match s.parse() {
        Ok(r) => Ok(r),
        Err(e) => bail!("--ring: {e}"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
