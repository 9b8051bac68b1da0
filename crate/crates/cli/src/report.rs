//! The one output shape every subcommand emits.  Reports are plain
//! serde structs printed as pretty JSON, so a rerun with the same
//! configuration and seed produces byte-identical output; wall-clock
//! timings are only recorded behind the `--timings` flag for exactly
//! that reason.

use serde::Serialize;
use serde_json::Value;

pub const EXIT_VERIFIED: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Serialize)]
pub struct Report {
    pub command: String,
    pub field: String,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub window: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nmax: Option<usize>,
    pub items: Vec<Value>,
    pub witnesses: Vec<Value>,
    pub inconclusive: Vec<String>,
    pub failures: Vec<String>,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<Vec<(String, u128)>>,
}

impl Report {
    pub fn new(command: &str, field: String, seed: u64) -> Self {
        Report {
            command: command.into(),
            field,
            seed,
            window: None,
            nmax: None,
            items: vec![],
            witnesses: vec![],
            inconclusive: vec![],
            failures: vec![],
            status: String::new(),
            timings_ms: None,
        }
    }

    /// Settles the status line from what was recorded.
    pub fn finish(mut self) -> Self {
        self.status = if !self.failures.is_empty() {
            "counterexample".into()
        } else if !self.inconclusive.is_empty() {
            "inconclusive".into()
        } else {
            "verified".into()
        };
        self
    }

    pub fn exit_code(&self) -> i32 {
        match self.status.as_str() {
            "verified" => EXIT_VERIFIED,
            "counterexample" => EXIT_COUNTEREXAMPLE,
            _ => EXIT_INCONCLUSIVE,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }
}
