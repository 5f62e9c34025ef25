use mockq::{Status, VerificationReport};
use serde::{Deserialize, Serialize};

/// One line of JSON output.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema: u32,
    pub command: String,
    pub inputs: serde_json::Value,
    pub id: String,
    /// pass, fail, error, or ok for plain computations
    pub status: String,
    pub truncation: Option<String>,
    pub first_mismatch: Option<String>,
    pub detail: String,
    pub result: Option<serde_json::Value>,
    pub timing_ms: f64,
    pub version: String,
}

impl RunReport {
    pub fn new(command: &str, inputs: &serde_json::Value, id: impl Into<String>) -> Self {
        RunReport {
            schema: 1,
            command: command.into(),
            inputs: inputs.clone(),
            id: id.into(),
            status: "ok".into(),
            truncation: None,
            first_mismatch: None,
            detail: String::new(),
            result: None,
            timing_ms: 0.0,
            version: crate::VERSION.into(),
        }
    }

    pub fn from_verification(command: &str, inputs: &serde_json::Value, r: &VerificationReport) -> Self {
        let mut out = RunReport::new(command, inputs, r.id.clone());
        out.status = match r.status {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        }
        .into();
        out.truncation = (!r.truncation.is_empty()).then(|| r.truncation.clone());
        out.first_mismatch = r.first_mismatch.clone();
        out.detail = r.detail.clone();
        out
    }

    pub fn failed(&self) -> bool {
        self.status == "fail" || self.status == "error"
    }

    pub fn text(&self) -> String {
        let mut s = format!("{} {}", self.status.to_uppercase(), self.id);
        if let Some(t) = &self.truncation {
            s += &format!(" (T={t})");
        }
        if let Some(m) = &self.first_mismatch {
            s += &format!(" first mismatch at q^{m}");
        }
        if !self.detail.is_empty() {
            s += &format!(": {}", self.detail);
        }
        s
    }
}
