use std::fs::OpenOptions;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::Value;

use crate::config::RunConfig;
use crate::error::{CliError, CliResult};

pub const REPORT_LOG: &str = "reports.jsonl";

/// One line of the append-only result log.
#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub command: String,
    pub params: Value,
    /// Exact when `exhausted`; otherwise the best value found.
    pub value: Option<u64>,
    /// Present for bracketed results.
    pub upper: Option<u64>,
    pub exhausted: bool,
    /// Set by verification suites.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub passed: Option<bool>,
    /// Sidecar files, relative to the output directory.
    pub witness_files: Vec<String>,
    pub wall_secs: f64,
    pub nodes: u64,
    pub version: &'static str,
    pub seed: u64,
    pub budget_secs: f64,
    pub workers: usize,
    pub details: Value,
}

impl SearchReport {
    pub fn new(command: &str, params: Value, config: &RunConfig) -> Self {
        SearchReport {
            command: command.into(),
            params,
            value: None,
            upper: None,
            exhausted: true,
            passed: None,
            witness_files: Vec::new(),
            wall_secs: 0.0,
            nodes: 0,
            version: env!("CARGO_PKG_VERSION"),
            seed: config.seed,
            budget_secs: config.budget_secs,
            workers: config.workers,
            details: Value::Null,
        }
    }

    /// 0 when exact, 3 when only a bracket was reached, 4 when a
    /// verification check failed.
    pub fn exit_code(&self) -> i32 {
        if self.passed == Some(false) {
            4
        } else if self.exhausted {
            0
        } else {
            3
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

pub(crate) fn ensure_dir(dir: &Path) -> CliResult<()> {
    std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))
}

/// Writes a sidecar file and returns its name for the report.
pub(crate) fn write_sidecar(config: &RunConfig, name: &str, contents: &str) -> CliResult<String> {
    ensure_dir(&config.out_dir)?;
    let path = config.out_dir.join(name);
    std::fs::write(&path, contents).map_err(|e| CliError::io(&path, e))?;
    Ok(name.to_string())
}

pub(crate) fn append_report(config: &RunConfig, report: &SearchReport) -> CliResult<PathBuf> {
    ensure_dir(&config.out_dir)?;
    let path = config.out_dir.join(REPORT_LOG);
    let mut file = OpenOptions::new()
        .create(true)
        .append(true)
        .open(&path)
        .map_err(|e| CliError::io(&path, e))?;
    writeln!(file, "{}", report.to_json_line()).map_err(|e| CliError::io(&path, e))?;
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_and_serialization() {
        let config = RunConfig::new(PathBuf::from("unused"), 1.0, 1, 7).unwrap();
        let mut r = SearchReport::new("rb", serde_json::json!({ "n": 6 }), &config);
        assert_eq!(r.exit_code(), 0);
        assert!(!r.to_json_line().contains("passed"));
        r.exhausted = false;
        assert_eq!(r.exit_code(), 3);
        r.passed = Some(false);
        assert_eq!(r.exit_code(), 4);
        let v: serde_json::Value = serde_json::from_str(&r.to_json_line()).unwrap();
        assert_eq!(v["seed"], 7);
        assert_eq!(v["params"]["n"], 6);
    }
}
