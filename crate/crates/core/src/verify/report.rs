use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Version of the report layout.
pub const REPORT_SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

/// One verified statement with its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub params: BTreeMap<String, String>,
    pub status: CheckStatus,
    /// Present on failure: the offending residue, entry or value.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
    /// Present when skipped.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
}

impl CheckResult {
    pub fn new<I, K, V>(id: &str, params: I) -> Self
    where
        I: IntoIterator<Item = (K, V)>,
        K: Into<String>,
        V: ToString,
    {
        CheckResult {
            id: id.to_string(),
            params: params.into_iter().map(|(k, v)| (k.into(), v.to_string())).collect(),
            status: CheckStatus::Pass,
            witness: None,
            reason: None,
        }
    }

    pub fn fail(mut self, witness: impl Into<String>) -> Self {
        self.status = CheckStatus::Fail;
        self.witness = Some(witness.into());
        self
    }

    pub fn skip(mut self, reason: impl Into<String>) -> Self {
        self.status = CheckStatus::Skipped;
        self.reason = Some(reason.into());
        self
    }

    /// Passes unless `witness` is given.
    pub fn verdict(self, witness: Option<String>) -> Self {
        match witness {
            Some(w) => self.fail(w),
            None => self,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

/// Conventions in effect while the checks ran.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportEnvironment {
    pub monomial_order: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub slot_convention: Option<String>,
    pub rank_mode: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub subject: String,
    pub environment: ReportEnvironment,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
    /// Wall-clock time; excluded when comparing runs.
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn new(subject: impl Into<String>, environment: ReportEnvironment, checks: Vec<CheckResult>) -> Self {
        let mut summary = Summary::default();
        for c in &checks {
            match c.status {
                CheckStatus::Pass => summary.passed += 1,
                CheckStatus::Fail => summary.failed += 1,
                CheckStatus::Skipped => summary.skipped += 1,
            }
        }
        VerificationReport {
            schema: REPORT_SCHEMA,
            subject: subject.into(),
            environment,
            checks,
            summary,
            elapsed_ms: 0,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }

    pub fn find(&self, id: &str) -> impl Iterator<Item = &CheckResult> {
        let id = id.to_string();
        self.checks.iter().filter(move |c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Plain-text rendering, one line per check.
    pub fn to_text(&self) -> String {
        let mut out = format!("subject: {}\n", self.subject);
        out += &format!("monomial order: {}\n", self.environment.monomial_order);
        if let Some(c) = &self.environment.slot_convention {
            out += &format!("slot convention: {c}\n");
        }
        out += &format!("rank mode: {}\n", self.environment.rank_mode);
        if let Some(n) = &self.environment.note {
            out += &format!("note: {n}\n");
        }
        for c in &self.checks {
            let params: Vec<String> = c.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let tag = match c.status {
                CheckStatus::Pass => "PASS",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Skipped => "SKIP",
            };
            out += &format!("[{tag}] {} {}", c.id, params.join(" "));
            if let Some(w) = &c.witness {
                out += &format!("\n       witness: {w}");
            }
            if let Some(r) = &c.reason {
                out += &format!(" ({r})");
            }
            out.push('\n');
        }
        out += &format!(
            "summary: {} passed, {} failed, {} skipped ({} ms)\n",
            self.summary.passed, self.summary.failed, self.summary.skipped, self.elapsed_ms
        );
        out
    }
}
