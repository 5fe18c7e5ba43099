//! Subcommand implementations and the types they share.

pub mod constants;
pub mod factor;
pub mod groups;
pub mod k2;
pub mod roots;
pub mod steinberg;
pub mod suite;
pub mod tavgen;
pub mod verify;

use crate::config::Format;
use chevwidth_core::factor::FactorError;
use chevwidth_core::groups::{GroupError, RepKind};
use chevwidth_core::rings::{grammar, RingDescriptor, RingError};
use chevwidth_core::roots::{RootError, RootSystem, SystemKind};
use chevwidth_core::steinberg::SteinbergError;
use serde_json::Value;
use std::path::{Path, PathBuf};
use thiserror::Error;

/// Settings every subcommand sees, resolved from flags and config.
pub struct Ctx {
    pub seed: u64,
    pub cache_dir: Option<PathBuf>,
    pub expensive: bool,
    pub format: Format,
}

/// Pass prints its own output and exits 0; Fail prints the report as JSON
/// and exits 2.
pub enum Outcome {
    Pass,
    Fail(Value),
}

/// Everything that exits 1: bad arguments, unreadable files, and domain
/// errors from the toolkit (wrong ring, singular matrix, unknown system).
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Steinberg(#[from] SteinbergError),
    #[error(transparent)]
    Factor(#[from] FactorError),
    #[error("{path}: {err}")]
    Io {
        path: String,
        err: std::io::Error,
    },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

#[derive(Clone, Copy, Debug, clap::ValueEnum)]
pub enum CheckKind {
    /// The commutator formula on every ordered non-opposite root pair
    Commutator,
    /// x(r) x(s) = x(r+s) on every root
    Additivity,
    /// The rank-one conjugation relation, exhaustively over a finite field
    RankOne,
    /// Unit symbols evaluate to the identity, exhaustively over a field
    Symbol,
}

#[derive(Clone, Copy, Debug, clap::ValueEnum)]
pub enum RepChoice {
    Adjoint,
    Sl,
    Sp,
}

pub fn parse_system(name: &str) -> Result<RootSystem, CliError> {
    Ok(RootSystem::parse(name)?)
}

pub fn parse_ring(src: &str) -> Result<RingDescriptor, CliError> {
    Ok(grammar::parse_descriptor(src)?)
}

/// E-type tables take minutes to derive; require the explicit flag.
pub fn guard_expensive(kind: SystemKind, ctx: &Ctx) -> Result<(), CliError> {
    if matches!(kind, SystemKind::E(_)) && !ctx.expensive {
        return Err(CliError::Usage(format!(
            "{kind} tables are large; pass --expensive to build them"
        )));
    }
    Ok(())
}

/// The faithful standard representation where one exists, else adjoint.
pub fn choose_rep(choice: Option<RepChoice>, kind: SystemKind) -> RepKind {
    match choice {
        Some(RepChoice::Adjoint) => RepKind::Adjoint,
        Some(RepChoice::Sl) => RepKind::StandardSL,
        Some(RepChoice::Sp) => RepKind::StandardSp,
        None => match kind {
            SystemKind::A(_) => RepKind::StandardSL,
            SystemKind::C(_) => RepKind::StandardSp,
            _ => RepKind::Adjoint,
        },
    }
}

pub fn rep_name(kind: RepKind) -> &'static str {
    match kind {
        RepKind::Adjoint => "adjoint",
        RepKind::StandardSL => "sl",
        RepKind::StandardSp => "sp",
    }
}

pub fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        err: e,
    })
}

pub fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        err: e,
    })
}
