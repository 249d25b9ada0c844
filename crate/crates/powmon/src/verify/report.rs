use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// Exploratory run: findings are reported, nothing is asserted.
    Info,
}

impl Verdict {
    pub fn label(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Info => "INFO",
        }
    }
}

/// Outcome of one check. A failing report always carries at least one
/// witness; `evidence` records what was established along the way.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub check: String,
    pub params: BTreeMap<String, Value>,
    pub verdict: Verdict,
    pub witnesses: Vec<String>,
    pub evidence: Vec<String>,
    pub elapsed_ms: f64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fail
    }

    pub fn params_text(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}={s}"),
                v => format!("{k}={v}"),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

pub(crate) struct ReportBuilder {
    check: &'static str,
    params: BTreeMap<String, Value>,
    witnesses: Vec<String>,
    evidence: Vec<String>,
    exploratory: bool,
    start: Instant,
}

impl ReportBuilder {
    pub fn new(check: &'static str) -> Self {
        ReportBuilder {
            check,
            params: BTreeMap::new(),
            witnesses: Vec::new(),
            evidence: Vec::new(),
            exploratory: false,
            start: Instant::now(),
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn exploratory(mut self) -> Self {
        self.exploratory = true;
        self
    }

    pub fn fail(&mut self, witness: impl Into<String>) {
        self.witnesses.push(witness.into());
    }

    pub fn note(&mut self, evidence: impl Into<String>) {
        self.evidence.push(evidence.into());
    }

    pub fn finish(self) -> VerifyReport {
        let verdict = if !self.witnesses.is_empty() {
            Verdict::Fail
        } else if self.exploratory {
            Verdict::Info
        } else {
            Verdict::Pass
        };
        VerifyReport {
            check: self.check.to_string(),
            params: self.params,
            verdict,
            witnesses: self.witnesses,
            evidence: self.evidence,
            elapsed_ms: self.start.elapsed().as_secs_f64() * 1e3,
        }
    }
}

/// Human-readable table, one row per report, failing witnesses indented.
pub fn summary_table(reports: &[VerifyReport]) -> String {
    let width = reports
        .iter()
        .map(|r| r.check.len() + r.params_text().len() + 1)
        .max()
        .unwrap_or(0);
    let mut out = String::new();
    for r in reports {
        let name = format!("{} {}", r.check, r.params_text());
        let _ = writeln!(out, "{:<4}  {:<width$}  {:>10.1} ms", r.verdict.label(), name, r.elapsed_ms);
        for w in &r.witnesses {
            let _ = writeln!(out, "      - {w}");
        }
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let _ = writeln!(out, "{} checks, {} failed", reports.len(), failed);
    out
}
