//! Library half of the `tenfold` binary: argument parsing into a validated
//! [`RunConfig`] and its execution against an output sink.

mod args;
mod format;
mod run;
mod spec;

pub use args::{parse_args, Command, Format, ModelConfig, ModelSource, RunConfig, Space, SweepRange};
pub use format::fmt_float;
pub use run::{execute, run, Outcome};
pub use spec::{SpecFile, SymmetrySpec};

use tenfold::invariants::InvariantError;
use tenfold::ktable::KTableError;
use tenfold::models::ModelError;
use tenfold::symmetry::SymmetryError;

pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_FILE_NOT_FOUND: i32 = 3;
pub const EXIT_GAPLESS: i32 = 4;
pub const EXIT_NONCONVERGENT: i32 = 5;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Clap(#[from] clap::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{}: file not found", .0.display())]
    FileNotFound(std::path::PathBuf),
    #[error("{path}: {reason}")]
    BadSpec { path: String, reason: String },
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Symmetry(#[from] SymmetryError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    KTable(#[from] KTableError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Clap(e) if !e.use_stderr() => 0,
            CliError::Clap(_) | CliError::Usage(_) | CliError::BadSpec { .. } | CliError::Model(_) => EXIT_USAGE,
            CliError::KTable(_) | CliError::Invariant(InvariantError::KTable(_)) => EXIT_USAGE,
            CliError::FileNotFound(_) => EXIT_FILE_NOT_FOUND,
            CliError::Symmetry(SymmetryError::GaplessModel { .. })
            | CliError::Invariant(InvariantError::GaplessModel { .. })
            | CliError::Invariant(InvariantError::Symmetry(SymmetryError::GaplessModel { .. })) => EXIT_GAPLESS,
            CliError::Invariant(e) if is_nonconvergent(e) => EXIT_NONCONVERGENT,
            _ => EXIT_FAILURE,
        }
    }
}

/// Resolution failures: the grid is too coarse for the invariant to settle.
pub(crate) fn is_nonconvergent(e: &InvariantError) -> bool {
    matches!(
        e,
        InvariantError::NonConvergent { .. }
            | InvariantError::NotSmooth { .. }
            | InvariantError::SingularOverlap { .. }
    )
}
