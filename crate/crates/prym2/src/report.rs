//! Structured outcomes of the verification checks, serializable as text
//! or JSON.

use serde::Serialize;

/// Outcome of one registered check.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub pass: bool,
    pub detail: String,
}

/// Outcome of the headline ideal-equality verification.
#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub verified: bool,
    pub computed_generators: Vec<String>,
    pub target_generators: Vec<String>,
    pub presentation: String,
}

/// Full report: every check in registry order plus the final theorem.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub version: String,
    pub checks: Vec<CheckResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem: Option<TheoremReport>,
    pub timing_ms: u64,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass) && self.theorem.as_ref().is_none_or(|t| t.verified)
    }

    /// A check that did not run to completion is reported as failing with
    /// an `internal error:` detail; those map to a distinct exit status.
    pub fn has_internal_error(&self) -> bool {
        self.checks
            .iter()
            .any(|c| !c.pass && c.detail.starts_with("internal error:"))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }

    /// Plain-text rendering. One line per check; the presentation of the
    /// answer ring is the final line when the theorem was run.
    pub fn to_text(&self, color: bool) -> String {
        let mut out = String::new();
        let width = self.checks.iter().map(|c| c.id.len()).max().unwrap_or(0);
        for c in &self.checks {
            let verdict = render_verdict(c.pass, color);
            let mut lines = c.detail.lines();
            let head = lines.next().unwrap_or("");
            out.push_str(&format!("check {:width$}  {verdict}  {head}\n", c.id));
            for extra in lines {
                out.push_str(&format!("      {:width$}        {extra}\n", ""));
            }
        }
        if let Some(t) = &self.theorem {
            let verdict = render_verdict(t.verified, color);
            out.push_str(&format!(
                "theorem {}  assembled ideal ({} generators) vs target ideal ({} generators)\n",
                verdict,
                t.computed_generators.len(),
                t.target_generators.len()
            ));
            if t.verified {
                out.push_str(&format!("CH*(R_2) = {}\n", t.presentation));
            } else {
                out.push_str("theorem NOT verified; see failing checks above\n");
            }
        }
        out
    }
}

fn render_verdict(pass: bool, color: bool) -> String {
    match (pass, color) {
        (true, true) => "\x1b[32mPASS\x1b[0m".to_owned(),
        (false, true) => "\x1b[31mFAIL\x1b[0m".to_owned(),
        (true, false) => "PASS".to_owned(),
        (false, false) => "FAIL".to_owned(),
    }
}
