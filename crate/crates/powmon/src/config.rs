//! Validated run configuration shared by the subcommands, and the mapping
//! from errors to exit codes.

use std::ops::RangeInclusive;
use std::path::PathBuf;

use powmon_core::{AtomError, FactorError, GroundError, GroundMonoid, PowsetError, Subset, Variant};
use thiserror::Error;

use crate::table_file::{load_table, TableFileError};

pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_BOUND: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    Bound(String),
    #[error("{0}")]
    Io(String),
    #[error("{0} check(s) failed")]
    ChecksFailed(usize),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => EXIT_INVALID,
            CliError::Bound(_) => EXIT_BOUND,
            CliError::Io(_) | CliError::ChecksFailed(_) => EXIT_FAILED,
        }
    }
}

impl From<GroundError> for CliError {
    fn from(e: GroundError) -> Self {
        match e {
            GroundError::ModulusTooLarge(_) | GroundError::CapTooLarge(_) | GroundError::TableTooLarge { .. } => {
                CliError::Bound(e.to_string())
            }
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<PowsetError> for CliError {
    fn from(e: PowsetError) -> Self {
        match e {
            PowsetError::CapExceeded { .. } => CliError::Bound(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<AtomError> for CliError {
    fn from(e: AtomError) -> Self {
        match e {
            AtomError::CensusBound { .. } | AtomError::RestrictedTooLarge(_) => CliError::Bound(e.to_string()),
            AtomError::Powset(p) => p.into(),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<FactorError> for CliError {
    fn from(e: FactorError) -> Self {
        match e {
            FactorError::Atom(a) => a.into(),
            FactorError::Powset(p) => p.into(),
            FactorError::GroupTooLarge { .. } | FactorError::WordTooLong { .. } => CliError::Bound(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<TableFileError> for CliError {
    fn from(e: TableFileError) -> Self {
        match e {
            TableFileError::Ground(g) => g.into(),
            e => CliError::Invalid(e.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroundArg {
    Cyclic(usize),
    Natural(usize),
    Table(PathBuf),
}

impl GroundArg {
    pub fn build(&self) -> Result<GroundMonoid, CliError> {
        Ok(match self {
            GroundArg::Cyclic(n) => GroundMonoid::cyclic(*n)?,
            GroundArg::Natural(cap) => GroundMonoid::natural_segment(*cap)?,
            GroundArg::Table(path) => load_table(path)?,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    Json,
    Csv,
    #[default]
    Text,
}

pub fn parse_format(s: &str) -> Result<OutputFormat, CliError> {
    match s {
        "json" => Ok(OutputFormat::Json),
        "csv" => Ok(OutputFormat::Csv),
        "text" => Ok(OutputFormat::Text),
        _ => Err(CliError::Invalid(format!("unknown format `{s}` (json, csv, text)"))),
    }
}

pub fn parse_variant(s: &str) -> Result<Variant, CliError> {
    match s {
        "reduced" => Ok(Variant::Reduced),
        "restricted" => Ok(Variant::Restricted),
        _ => Err(CliError::Invalid(format!("unknown variant `{s}` (reduced, restricted)"))),
    }
}

/// `a..b` and `a..=b` are both inclusive; a single number is a one-point range.
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, CliError> {
    let bad = || CliError::Invalid(format!("bad range `{s}` (expected a..b)"));
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    let r = match s.split_once("..") {
        Some((a, b)) => num(a)?..=num(b.strip_prefix('=').unwrap_or(b))?,
        None => {
            let n = num(s)?;
            n..=n
        }
    };
    if r.is_empty() {
        return Err(bad());
    }
    Ok(r)
}

/// Everything one invocation needs, after validation.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub ground: Option<GroundArg>,
    pub set: Option<String>,
    pub variant: Variant,
    pub lmax: Option<usize>,
    pub census_bound: usize,
    pub workers: Option<usize>,
    pub format: OutputFormat,
    pub cache_dir: Option<PathBuf>,
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.lmax == Some(0) {
            return Err(CliError::Invalid("--lmax must be positive".into()));
        }
        if self.census_bound == 0 {
            return Err(CliError::Invalid("--census-bound must be positive".into()));
        }
        if self.workers == Some(0) {
            return Err(CliError::Invalid("--workers must be positive".into()));
        }
        Ok(())
    }

    pub fn ground(&self) -> Result<GroundMonoid, CliError> {
        self.ground
            .as_ref()
            .ok_or_else(|| CliError::Invalid("a ground is required (--cyclic, --natural or --table)".into()))?
            .build()
    }

    /// The set literal parsed against `g`; reports whether residues were
    /// reduced.
    pub fn subset(&self, g: &GroundMonoid) -> Result<(Subset, bool), CliError> {
        let text = self
            .set
            .as_deref()
            .ok_or_else(|| CliError::Invalid("--set is required".into()))?;
        let p = g.parse_subset(text)?;
        Ok((p.set, p.reduced))
    }
}
