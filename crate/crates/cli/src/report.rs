use std::fmt::Write as _;
use std::path::Path;

use clap::ValueEnum;
use ckq_core::report::{Report, Status};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;
pub const REPORT_FILE: &str = "ckq-report.json";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidualSummary {
    pub nonzero: usize,
    pub first_order: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub check: String,
    pub family: String,
    pub variant: String,
    pub j: String,
    #[serde(rename = "N")]
    pub order: usize,
    /// `pass`, `fail` or `pass-with-note`.
    pub status: String,
    pub residual: ResidualSummary,
    pub notes: Vec<String>,
    /// Seconds.
    pub wall_time: f64,
}

impl Record {
    pub fn from_report(check: &str, family: &str, variant: &str, j: &str, order: usize, rep: &Report) -> Self {
        let s = rep.summary(check);
        Record {
            check: check.into(),
            family: family.into(),
            variant: variant.into(),
            j: j.into(),
            order,
            status: s.status.label().into(),
            residual: ResidualSummary { nonzero: s.residual.nonzero, first_order: s.residual.first_order },
            notes: s.notes,
            wall_time: 0.0,
        }
    }

    pub fn error(check: &str, family: &str, variant: &str, j: &str, order: usize, msg: String) -> Self {
        Record {
            check: check.into(),
            family: family.into(),
            variant: variant.into(),
            j: j.into(),
            order,
            status: Status::Fail.label().into(),
            residual: ResidualSummary::default(),
            notes: vec![msg],
            wall_time: 0.0,
        }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail.label()
    }

    fn key(&self) -> (&str, &str, &str, &str) {
        (&self.check, &self.family, &self.variant, &self.j)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub runs: Vec<Record>,
}

impl RunReport {
    /// Sorted by check, family, variant, j.
    pub fn new(mut runs: Vec<Record>) -> Self {
        runs.sort_by(|a, b| a.key().cmp(&b.key()));
        RunReport { schema_version: SCHEMA_VERSION, runs }
    }

    pub fn all_pass(&self) -> bool {
        self.runs.iter().all(Record::passed)
    }

    pub fn save(&self, path: &Path) -> anyhow::Result<()> {
        std::fs::write(path, emit(self, Format::Json))?;
        Ok(())
    }

    pub fn load(path: &Path) -> anyhow::Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let r: RunReport = serde_json::from_str(&text)?;
        anyhow::ensure!(r.schema_version == SCHEMA_VERSION, "unsupported schema_version {}", r.schema_version);
        Ok(r)
    }
}

pub fn exit_code(r: &RunReport) -> i32 {
    if r.all_pass() {
        0
    } else {
        1
    }
}

pub fn emit(r: &RunReport, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(r).expect("report serializes") + "\n",
        Format::Text => text_table(r),
    }
}

fn text_table(r: &RunReport) -> String {
    let head = ["check", "family", "variant", "j", "N", "status", "nonzero", "first", "time"];
    let rows: Vec<[String; 9]> = r
        .runs
        .iter()
        .map(|x| {
            [
                x.check.clone(),
                x.family.clone(),
                x.variant.clone(),
                x.j.clone(),
                x.order.to_string(),
                x.status.clone(),
                x.residual.nonzero.to_string(),
                x.residual.first_order.map_or("-".into(), |v| v.to_string()),
                format!("{:.3}s", x.wall_time),
            ]
        })
        .collect();
    let mut w = head.map(str::len);
    for row in &rows {
        for (k, c) in row.iter().enumerate() {
            w[k] = w[k].max(c.chars().count());
        }
    }
    let mut out = String::new();
    let line = |out: &mut String, cells: &[&str]| {
        let parts: Vec<String> = cells.iter().enumerate().map(|(k, c)| format!("{c:<width$}", width = w[k])).collect();
        let _ = writeln!(out, "{}", parts.join("  ").trim_end());
    };
    line(&mut out, &head);
    for (row, rec) in rows.iter().zip(&r.runs) {
        line(&mut out, &row.iter().map(String::as_str).collect::<Vec<_>>());
        for n in &rec.notes {
            let _ = writeln!(out, "    note: {}", n.replace('\n', "\n          "));
        }
    }
    let pass = r.runs.iter().filter(|x| x.passed()).count();
    let _ = writeln!(out, "{pass}/{} pass", r.runs.len());
    out
}
