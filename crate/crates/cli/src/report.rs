use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

/// One executed check.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check_id: String,
    pub params: BTreeMap<String, Value>,
    pub pass: bool,
    /// SHA-256 of the witness in its compact JSON form.
    pub witness_digest: String,
    pub elapsed_ms: u64,
    /// Full witness file, written for failing checks.
    pub detail_path: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    #[default]
    JsonLines,
    TextTable,
}

pub fn witness_digest(witness: &Value) -> String {
    let bytes = serde_json::to_vec(witness).expect("JSON values always serialize");
    format!("{:x}", Sha256::digest(bytes))
}

/// `k=v` pairs in key order, e.g. `k=-1 n=3`.
pub fn params_label(params: &BTreeMap<String, Value>) -> String {
    params
        .iter()
        .map(|(k, v)| match v {
            Value::String(s) => format!("{k}={s}"),
            other => format!("{k}={other}"),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn format_report(reports: &[CheckReport], format: OutputFormat) -> String {
    match format {
        OutputFormat::JsonLines => {
            let mut out = String::new();
            for r in reports {
                out.push_str(&serde_json::to_string(r).expect("reports always serialize"));
                out.push('\n');
            }
            out
        }
        OutputFormat::TextTable => text_table(reports),
    }
}

fn text_table(reports: &[CheckReport]) -> String {
    let header = ["STATUS", "CHECK", "PARAMS", "MS", "DIGEST"];
    let rows: Vec<[String; 5]> = reports
        .iter()
        .map(|r| {
            [
                if r.pass { "PASS".into() } else { "FAIL".into() },
                r.check_id.clone(),
                params_label(&r.params),
                r.elapsed_ms.to_string(),
                r.witness_digest.chars().take(12).collect(),
            ]
        })
        .collect();
    let mut widths = header.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let line = |cells: [&str; 5], out: &mut String| {
        let padded: Vec<String> = cells.iter().zip(widths).map(|(c, w)| format!("{c:<w$}")).collect();
        out.push_str(padded.join("  ").trim_end());
        out.push('\n');
    };
    line(header, &mut out);
    for (row, r) in rows.iter().zip(reports) {
        line([&row[0], &row[1], &row[2], &row[3], &row[4]], &mut out);
        if let Some(e) = &r.error {
            let _ = writeln!(out, "    error: {e}");
        }
        if let (false, Some(p)) = (r.pass, &r.detail_path) {
            let _ = writeln!(out, "    witness: {p}");
        }
        for w in &r.warnings {
            let _ = writeln!(out, "    warning: {w}");
        }
    }
    let failed = reports.iter().filter(|r| !r.pass).count();
    let _ = writeln!(out, "{} checks: {} passed, {} failed", reports.len(), reports.len() - failed, failed);
    out
}
