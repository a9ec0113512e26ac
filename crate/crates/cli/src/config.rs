use std::path::PathBuf;

use rainbowtri_core::search::Budget;

use crate::error::{CliError, CliResult};

/// Overrides `--out-dir` when set.
pub const OUT_DIR_ENV: &str = "RAINBOWTRI_OUT";
pub const DEFAULT_OUT_DIR: &str = "rainbowtri-out";

/// Settings shared by every command; recorded in each report.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub out_dir: PathBuf,
    /// Wall-clock budget for one command invocation.
    pub budget_secs: f64,
    pub workers: usize,
    /// Seed for the sampling in verification suites; solvers are deterministic.
    pub seed: u64,
}

impl RunConfig {
    pub fn new(out_dir: PathBuf, budget_secs: f64, workers: usize, seed: u64) -> CliResult<Self> {
        if budget_secs.is_nan() || budget_secs <= 0.0 {
            return Err(CliError::Usage(format!("--budget-secs must be positive, got {budget_secs}")));
        }
        if workers == 0 {
            return Err(CliError::Usage("--workers must be at least 1".into()));
        }
        Ok(RunConfig {
            out_dir,
            budget_secs,
            workers,
            seed,
        })
    }

    /// The environment variable wins over the flag, which wins over the default.
    pub fn resolve_out_dir(flag: Option<PathBuf>) -> PathBuf {
        match std::env::var_os(OUT_DIR_ENV) {
            Some(dir) if !dir.is_empty() => PathBuf::from(dir),
            _ => flag.unwrap_or_else(|| PathBuf::from(DEFAULT_OUT_DIR)),
        }
    }

    /// A fresh deadline starting now.
    pub fn budget(&self) -> Budget {
        Budget::seconds(self.budget_secs)
    }
}
