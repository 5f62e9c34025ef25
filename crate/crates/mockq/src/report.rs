use serde::Serialize;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

/// Outcome of one identity check.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub id: String,
    pub status: Status,
    /// truncation order the comparison was made at (as a q-exponent)
    pub truncation: String,
    /// first exponent where the two sides differ, as a rational string
    pub first_mismatch: Option<String>,
    pub detail: String,
}

impl VerificationReport {
    pub fn pass(id: impl Into<String>, truncation: impl ToString, detail: impl Into<String>) -> Self {
        VerificationReport {
            id: id.into(),
            status: Status::Pass,
            truncation: truncation.to_string(),
            first_mismatch: None,
            detail: detail.into(),
        }
    }

    pub fn fail(
        id: impl Into<String>,
        truncation: impl ToString,
        mismatch: Option<String>,
        detail: impl Into<String>,
    ) -> Self {
        VerificationReport {
            id: id.into(),
            status: Status::Fail,
            truncation: truncation.to_string(),
            first_mismatch: mismatch,
            detail: detail.into(),
        }
    }

    pub fn error(id: impl Into<String>, detail: impl Into<String>) -> Self {
        VerificationReport {
            id: id.into(),
            status: Status::Error,
            truncation: String::new(),
            first_mismatch: None,
            detail: detail.into(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn with_id(mut self, id: impl Into<String>) -> Self {
        self.id = id.into();
        self
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let st = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
        };
        write!(f, "{st} {} (T={})", self.id, self.truncation)?;
        if let Some(m) = &self.first_mismatch {
            write!(f, " first mismatch at q^{m}")?;
        }
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}
