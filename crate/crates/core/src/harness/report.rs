use std::fmt::Write as _;
use std::path::Path;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use super::config::ConfigEcho;
use crate::error::HarnessError;

pub const REPORT_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// Outcome for one catalog group under one parameter choice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupRecord {
    pub label: String,
    pub params: String,
    pub status: Status,
    /// Failed checks, the skip reason, or a short summary.
    pub details: String,
    pub injector_orders: Vec<usize>,
    pub class_count: Option<usize>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl Totals {
    pub fn of(records: &[GroupRecord]) -> Self {
        let mut t = Totals::default();
        for r in records {
            match r.status {
                Status::Pass => t.pass += 1,
                Status::Fail => t.fail += 1,
                Status::Skipped => t.skipped += 1,
            }
        }
        t
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub id: String,
    pub totals: Totals,
    #[serde(rename = "groups")]
    pub records: Vec<GroupRecord>,
    /// Not serialized, so that JSON reports are byte-stable.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl SuiteResult {
    pub fn new(id: impl Into<String>, records: Vec<GroupRecord>, wall_time: Duration) -> Self {
        SuiteResult {
            id: id.into(),
            totals: Totals::of(&records),
            records,
            wall_time,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &GroupRecord> {
        self.records.iter().filter(|r| r.status == Status::Fail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub config_echo: ConfigEcho,
    pub suites: Vec<SuiteResult>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl Report {
    pub fn new(config_echo: ConfigEcho, suites: Vec<SuiteResult>) -> Self {
        Report {
            version: REPORT_VERSION.to_string(),
            config_echo,
            suites,
        }
    }

    pub fn failure_count(&self) -> usize {
        self.suites.iter().map(|s| s.totals.fail).sum()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// One summary line per suite followed by the failing records.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for s in &self.suites {
            let t = s.totals;
            let _ = writeln!(
                out,
                "{:<14} pass {:>5}  fail {:>3}  skipped {:>4}  ({:.2}s)",
                s.id,
                t.pass,
                t.fail,
                t.skipped,
                s.wall_time.as_secs_f64()
            );
            for r in s.failures() {
                let _ = writeln!(out, "  FAIL {} [{}]: {}", r.label, r.params, r.details);
            }
        }
        let _ = writeln!(out, "total failures: {}", self.failure_count());
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Json => self.to_json(),
        }
    }
}

/// Writes the report to `path`, or to standard output when `path` is `None`.
pub fn emit_report(report: &Report, format: Format, path: Option<&Path>) -> Result<(), HarnessError> {
    let text = report.render(format);
    match path {
        Some(p) => std::fs::write(p, text).map_err(|source| HarnessError::Write {
            path: p.to_path_buf(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
