//! Verification records and their two renderings.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        }
    }
}

/// One verification result. Field order is the serialized order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    pub detail: String,
    pub millis: u64,
}

/// One JSON object per line.
pub fn to_json_lines(records: &[CheckRecord]) -> String {
    records.iter().map(|r| serde_json::to_string(r).expect("plain data") + "\n").collect()
}

pub fn to_table(records: &[CheckRecord]) -> String {
    let width = records.iter().map(|r| r.id.len()).max().unwrap_or(0);
    let mut out = String::new();
    for r in records {
        out += &format!("{} {:<width$} {:>7} ms  {}\n    {}\n", r.status.label(), r.id, r.millis, r.anchor, r.detail);
    }
    let passed = records.iter().filter(|r| r.status == Status::Pass).count();
    out += &format!("{}/{} checks passed\n", passed, records.len());
    out
}
