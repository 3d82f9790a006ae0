//! Theorem harness: constructor grammar, structure sources, registered checks,
//! golden-table diffs and text reports.

use std::time::Duration;

use thiserror::Error;

use crate::error::{ClassifyError, ConstructError, MagmaError, MultiError, NeutroError};

pub mod checks;
pub mod golden;
pub mod grammar;
pub mod report;
pub mod source;

pub use checks::{registry, run_check, run_check_with, verify_all, verify_all_with, CheckResult, Overrides, ParamRange, TheoremCheck};
pub use golden::{regenerate_and_diff, CellMismatch, TableDiff};
pub use grammar::{parse, parse_magma, Built, SpecError};
pub use source::{Library, Mutant, Mutation, Source};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("unknown check id {0:?}")]
    UnknownId(String),
    #[error("bad range {0:?}: expected a, a..b or a..=b")]
    BadRange(String),
    #[error("no fixture for {0:?}")]
    MissingFixture(String),
    #[error("{id} exceeded its budget of {budget:?}")]
    BudgetExceeded { id: String, budget: Duration },
    #[error("{0}")]
    BadSpec(String),
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error(transparent)]
    Magma(#[from] MagmaError),
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error(transparent)]
    Neutro(#[from] NeutroError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Multi(#[from] MultiError),
}
