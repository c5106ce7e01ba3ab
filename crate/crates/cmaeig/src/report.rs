//! Machine-readable verification rows shared by the identity suite, the
//! sampling suite and the CLI reports.

use serde::Serialize;

/// One named check: `id` is the audit tag, `pass` the verdict.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub pass: bool,
    pub detail: String,
}

impl CheckResult {
    pub fn pass(id: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckResult {
            id: id.into(),
            pass: true,
            detail: detail.into(),
        }
    }

    pub fn fail(id: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckResult {
            id: id.into(),
            pass: false,
            detail: detail.into(),
        }
    }

    pub fn from_flag(id: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        CheckResult {
            id: id.into(),
            pass,
            detail: detail.into(),
        }
    }
}

/// Counts over a list of checks.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct CheckSummary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

pub fn summarize(checks: &[CheckResult]) -> CheckSummary {
    let passed = checks.iter().filter(|c| c.pass).count();
    CheckSummary {
        total: checks.len(),
        passed,
        failed: checks.len() - passed,
    }
}
