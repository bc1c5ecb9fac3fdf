//! The report: a deterministic list of check records, rendered as text or
//! JSON. Identical input produces byte-identical JSON output.

use serde::Serialize;

pub use crgeo::groups::CheckStatus;

#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub subject: String,
    pub check: String,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual_terms: Option<usize>,
    pub details: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub version: String,
    pub invocation: String,
    pub records: Vec<Record>,
}

impl Report {
    pub fn new(invocation: String) -> Self {
        Report {
            version: env!("CARGO_PKG_VERSION").to_string(),
            invocation,
            records: Vec::new(),
        }
    }

    pub fn push(
        &mut self,
        subject: impl Into<String>,
        check: impl Into<String>,
        status: CheckStatus,
        residual_terms: Option<usize>,
        details: Vec<String>,
    ) {
        self.records.push(Record {
            subject: subject.into(),
            check: check.into(),
            status,
            residual_terms,
            details,
        });
    }

    pub fn counts(&self) -> (usize, usize, usize) {
        let mut pass = 0;
        let mut fail = 0;
        let mut errata = 0;
        for r in &self.records {
            match r.status {
                CheckStatus::Pass => pass += 1,
                CheckStatus::Fail => fail += 1,
                CheckStatus::Erratum => errata += 1,
            }
        }
        (pass, fail, errata)
    }

    /// Exit code: failures fail the run; errata only under `strict`.
    pub fn exit_code(&self, strict_errata: bool) -> i32 {
        let (_, fail, errata) = self.counts();
        if fail > 0 || (strict_errata && errata > 0) {
            1
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("crgeo {} :: {}\n", self.version, self.invocation));
        for r in &self.records {
            let status = match r.status {
                CheckStatus::Pass => "pass   ",
                CheckStatus::Fail => "FAIL   ",
                CheckStatus::Erratum => "erratum",
            };
            let residual = match r.residual_terms {
                Some(n) => format!(" (residual terms: {n})"),
                None => String::new(),
            };
            out.push_str(&format!(
                "[{status}] {} :: {}{}\n",
                r.subject, r.check, residual
            ));
            for d in &r.details {
                out.push_str(&format!("          {d}\n"));
            }
        }
        let (pass, fail, errata) = self.counts();
        out.push_str(&format!(
            "{} checks: {pass} pass, {fail} fail, {errata} errata\n",
            self.records.len()
        ));
        out
    }
}
