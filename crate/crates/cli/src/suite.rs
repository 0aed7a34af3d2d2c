use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::catalog::{expand, Family, Overrides, Task};
use crate::report::{params_label, witness_digest, CheckReport, OutputFormat};
use crate::SuiteError;

/// Overrides `parallelism` when set.
pub const PARALLELISM_ENV: &str = "QC_PARALLELISM";

/// `"all"`, a single check id, or a list of check ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Selection {
    One(String),
    Many(Vec<String>),
}

impl Default for Selection {
    fn default() -> Self {
        Selection::One("all".into())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SuiteConfig {
    pub selected_checks: Selection,
    pub overrides: Overrides,
    pub output_format: OutputFormat,
    /// Run sequentially and stop at the first failing check.
    pub fail_fast: bool,
    /// Worker threads; 0 picks the number of cores.
    pub parallelism: usize,
    pub unsafe_extended: bool,
    /// Where witnesses of failing checks are written.
    pub detail_dir: PathBuf,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            selected_checks: Selection::default(),
            overrides: Overrides::default(),
            output_format: OutputFormat::default(),
            fail_fast: false,
            parallelism: 0,
            unsafe_extended: false,
            detail_dir: PathBuf::from("qc-witnesses"),
        }
    }
}

impl SuiteConfig {
    pub fn from_json(text: &str) -> Result<SuiteConfig, SuiteError> {
        serde_json::from_str(text).map_err(|e| SuiteError::Config(e.to_string()))
    }

    pub fn from_file(path: &Path) -> Result<SuiteConfig, SuiteError> {
        let text = fs::read_to_string(path).map_err(|e| SuiteError::Io(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    fn families(&self) -> Result<Vec<Family>, SuiteError> {
        let ids: Vec<&str> = match &self.selected_checks {
            Selection::One(s) if s == "all" => return Ok(Family::all()),
            Selection::One(s) => vec![s.as_str()],
            Selection::Many(v) => v.iter().map(String::as_str).collect(),
        };
        if ids.is_empty() {
            return Err(SuiteError::Config("selected_checks is empty".into()));
        }
        if ids.contains(&"all") {
            return Err(SuiteError::Config("\"all\" cannot be combined with other ids".into()));
        }
        ids.into_iter().map(Family::parse).collect()
    }

    fn effective_parallelism(&self) -> Result<usize, SuiteError> {
        match std::env::var(PARALLELISM_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| SuiteError::Config(format!("{PARALLELISM_ENV}={v:?} is not a nonnegative integer"))),
            Err(_) => Ok(self.parallelism),
        }
    }
}

/// Reports in task order plus the process exit code: 0 when every check
/// passes, 1 when any fails, 2 when the configuration is rejected.
#[derive(Debug)]
pub struct SuiteRun {
    pub reports: Vec<CheckReport>,
    pub exit_code: i32,
    pub error: Option<SuiteError>,
}

pub fn run_suite(config: &SuiteConfig) -> SuiteRun {
    match plan(config) {
        Ok((tasks, threads)) => execute(config, &tasks, threads),
        Err(e) => SuiteRun { reports: Vec::new(), exit_code: 2, error: Some(e) },
    }
}

fn plan(config: &SuiteConfig) -> Result<(Vec<Task>, usize), SuiteError> {
    let threads = config.effective_parallelism()?;
    let mut tasks = Vec::new();
    for family in config.families()? {
        tasks.extend(expand(family, &config.overrides, config.unsafe_extended)?);
    }
    Ok((tasks, threads))
}

fn execute(config: &SuiteConfig, tasks: &[Task], threads: usize) -> SuiteRun {
    let mut reports = Vec::with_capacity(tasks.len());
    let mut io_error = None;
    if config.fail_fast {
        for t in tasks {
            let r = run_one(t, &config.detail_dir);
            let failed = !r.0.pass;
            io_error = io_error.or(r.1);
            reports.push(r.0);
            if failed {
                break;
            }
        }
    } else {
        let pool = match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
            Ok(p) => p,
            Err(e) => return SuiteRun { reports, exit_code: 2, error: Some(SuiteError::Config(e.to_string())) },
        };
        let results: Vec<_> = pool.install(|| tasks.par_iter().map(|t| run_one(t, &config.detail_dir)).collect());
        for (r, e) in results {
            io_error = io_error.or(e);
            reports.push(r);
        }
    }
    let exit_code = if reports.iter().all(|r| r.pass) { 0 } else { 1 };
    SuiteRun { reports, exit_code, error: io_error }
}

fn detail_file_name(check_id: &str, label: &str) -> String {
    let params: String = label.chars().map(|c| if c == ' ' { '_' } else { c }).collect();
    format!("{check_id}__{params}.json")
}

fn run_one(task: &Task, detail_dir: &Path) -> (CheckReport, Option<SuiteError>) {
    let start = Instant::now();
    let outcome = task.run();
    let elapsed_ms = start.elapsed().as_millis() as u64;
    let check_id = task.check_id();
    let params = task.params();
    let mut io_error = None;
    let detail_path = if outcome.pass {
        None
    } else {
        let path = detail_dir.join(detail_file_name(&check_id, &params_label(&params)));
        let body = json!({
            "check_id": check_id,
            "params": params,
            "witness": outcome.witness,
            "error": outcome.error,
        });
        let written = fs::create_dir_all(detail_dir)
            .and_then(|_| fs::write(&path, serde_json::to_string_pretty(&body).expect("JSON values always serialize")));
        if let Err(e) = written {
            io_error = Some(SuiteError::Io(format!("{}: {e}", path.display())));
        }
        Some(path.display().to_string())
    };
    let report = CheckReport {
        check_id,
        params,
        pass: outcome.pass,
        witness_digest: witness_digest(&outcome.witness),
        elapsed_ms,
        detail_path,
        warnings: outcome.warnings,
        error: outcome.error,
    };
    (report, io_error)
}
