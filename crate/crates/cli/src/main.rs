//! Command-line front end for the chevwidth toolkit.
//!
//! Exit codes: 0 on success, 1 for usage and input errors, 2 when a
//! verification fails; failures print a JSON report on stdout naming the
//! violated invariant. Output is byte-identical across runs with the same
//! seed and flags.

mod cache;
mod cmd;
mod config;
mod output;

use clap::{Parser, Subcommand};
use cmd::{CheckKind, CliError, Ctx, Outcome, RepChoice};
use config::Format;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "chevwidth", version, about = "Exact computations in Chevalley groups")]
struct Cli {
    /// Seed for sampled checks; fixed-seed runs are byte-identical
    #[arg(long, global = true, value_name = "N")]
    seed: Option<u64>,

    /// Directory for hash-guarded coefficient table caches
    #[arg(long, global = true, value_name = "DIR")]
    cache_dir: Option<PathBuf>,

    /// Allow the costly sweeps: E-type tables, full rank-lift enumeration
    #[arg(long, global = true)]
    expensive: bool,

    /// Output format for reports and tables
    #[arg(long, global = true, value_enum, value_name = "FMT")]
    format: Option<Format>,

    /// Config file; defaults to ./chevwidth.toml when present. Flags win.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Root system data: roots, Cartan matrix, sizes
    Roots {
        #[command(subcommand)]
        what: RootsCmd,
    },
    /// Commutator coefficient tables, derived or loaded from cache
    Constants {
        /// System name, e.g. A2, C3, F4
        system: String,
    },
    /// Check a relation family in a matrix representation
    Verify {
        #[arg(value_enum)]
        check: CheckKind,
        #[arg(long)]
        system: String,
        #[arg(long, default_value = "F5")]
        ring: String,
        /// Representation; defaults to the faithful one for the type
        #[arg(long, value_enum)]
        rep: Option<RepChoice>,
        /// Random parameter pairs per root pair
        #[arg(long, default_value_t = 25)]
        trials: usize,
    },
    /// Build and evaluate words over the elementary generators
    Steinberg {
        #[command(subcommand)]
        what: SteinbergCmd,
    },
    /// Tame-symbol model of K2 over function fields
    K2 {
        #[command(subcommand)]
        what: K2Cmd,
    },
    /// Factor a special linear matrix into elementary generators
    Factor {
        #[arg(long)]
        ring: String,
        /// Type-A system fixing the matrix size: A1 is SL2, A2 is SL3, ...
        #[arg(long, default_value = "A1")]
        system: String,
        /// Matrix file (JSON, as printed by other subcommands)
        #[arg(long, value_name = "FILE")]
        matrix: Option<PathBuf>,
        /// Write the factorization to a file instead of stdout
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        /// Factor N seeded random products and emit a width histogram
        #[arg(long, value_name = "N")]
        random: Option<usize>,
        /// Letters per sampled random product
        #[arg(long, default_value_t = 20)]
        letters: usize,
    },
    /// Unitriangular four-block coverage and the rank-reduction lift
    Tavgen {
        /// Target system: A1 or A2 enumerate directly, A3 runs the lift
        #[arg(long, default_value = "A2")]
        target: String,
        /// Prime field order
        #[arg(long, default_value_t = 3)]
        field: u64,
        /// Oracle subsystems for the lift, e.g. A2,A2
        #[arg(long)]
        subsystems: Option<String>,
        /// Number of unitriangular blocks
        #[arg(long = "N", value_name = "N")]
        blocks: Option<usize>,
        /// Re-evaluate every element instead of a sampled stride
        #[arg(long)]
        exhaustive: bool,
    },
    /// Acceptance battery
    Suite {
        #[command(subcommand)]
        what: SuiteCmd,
    },
    /// Representation-level data of the matrix groups
    Groups {
        #[command(subcommand)]
        what: GroupsCmd,
    },
}

#[derive(Subcommand)]
enum RootsCmd {
    /// Dump the root list, Cartan matrix, and group sizes
    Info { system: String },
}

#[derive(Subcommand)]
enum SteinbergCmd {
    /// Evaluate a word file in a matrix representation
    Eval {
        #[arg(long)]
        system: String,
        #[arg(long, value_enum)]
        rep: Option<RepChoice>,
        /// JSON array of {"root": index, "param": element}
        #[arg(long, value_name = "FILE")]
        file: PathBuf,
        /// Ring override; needed only when the file is an empty word
        #[arg(long)]
        ring: Option<String>,
    },
    /// The 12-letter unit symbol and its image, with a kernel verdict
    Symbol {
        #[arg(long)]
        system: String,
        #[arg(long)]
        ring: String,
        /// Root index the symbol is built over
        #[arg(long, default_value_t = 0)]
        root: usize,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
    },
}

#[derive(Subcommand)]
enum K2Cmd {
    /// Tame symbol of two rational functions as a place -> residue map
    Class {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
    },
    /// Group structure report for a polynomial or Laurent ring
    Ring {
        #[arg(long)]
        ring: String,
    },
}

#[derive(Subcommand)]
enum SuiteCmd {
    /// Run the acceptance battery, or a single criterion
    Acceptance {
        #[arg(long, value_name = "ID")]
        criterion: Option<usize>,
    },
}

#[derive(Subcommand)]
enum GroupsCmd {
    /// Emit the bilinear form preserved by the symplectic representation
    Form {
        #[arg(long)]
        system: String,
        #[arg(long, default_value = "Z")]
        ring: String,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version surface as clap "errors" but are not.
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail(report)) => {
            output::print_json(&report);
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("chevwidth: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    let cfg = config::load(cli.config.as_deref())?;
    let ctx = Ctx {
        seed: cli.seed.or(cfg.seed).unwrap_or(0),
        cache_dir: cli.cache_dir.or(cfg.cache_dir),
        expensive: cli.expensive || cfg.expensive_suites.unwrap_or(false),
        format: cli.format.or(cfg.output_format).unwrap_or(Format::Json),
    };
    match cli.command {
        Command::Roots {
            what: RootsCmd::Info { system },
        } => cmd::roots::info(&ctx, &system),
        Command::Constants { system } => cmd::constants::run(&ctx, &system),
        Command::Verify {
            check,
            system,
            ring,
            rep,
            trials,
        } => cmd::verify::run(&ctx, check, &system, &ring, rep, trials),
        Command::Steinberg { what } => match what {
            SteinbergCmd::Eval {
                system,
                rep,
                file,
                ring,
            } => cmd::steinberg::eval(&ctx, &system, rep, &file, ring.as_deref()),
            SteinbergCmd::Symbol {
                system,
                ring,
                root,
                u,
                v,
            } => cmd::steinberg::symbol(&ctx, &system, &ring, root, &u, &v),
        },
        Command::K2 { what } => match what {
            K2Cmd::Class { ring, f, g } => cmd::k2::class(&ctx, &ring, &f, &g),
            K2Cmd::Ring { ring } => cmd::k2::ring(&ctx, &ring),
        },
        Command::Factor {
            ring,
            system,
            matrix,
            out,
            random,
            letters,
        } => cmd::factor::run(
            &ctx,
            &ring,
            &system,
            matrix.as_deref(),
            out.as_deref(),
            random,
            letters,
        ),
        Command::Tavgen {
            target,
            field,
            subsystems,
            blocks,
            exhaustive,
        } => cmd::tavgen::run(&ctx, &target, field, subsystems.as_deref(), blocks, exhaustive),
        Command::Suite {
            what: SuiteCmd::Acceptance { criterion },
        } => cmd::suite::acceptance(&ctx, criterion),
        Command::Groups {
            what: GroupsCmd::Form { system, ring },
        } => cmd::groups::form(&ctx, &system, &ring),
    }
}
