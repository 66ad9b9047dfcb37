//! Machine-readable scenario reports.

use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub paper_ref: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub scenario: String,
    pub status: String,
    pub checks: Vec<Check>,
    pub elapsed_ms: u128,
}

impl Report {
    pub fn new(scenario: impl Into<String>, checks: Vec<Check>, elapsed_ms: u128) -> Self {
        let status = if checks.iter().all(|c| c.pass) {
            "pass"
        } else {
            "fail"
        };
        Report {
            scenario: scenario.into(),
            status: status.to_string(),
            checks,
            elapsed_ms,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == "pass"
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One line per check, plus a summary line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("scenario {}\n", self.scenario));
        for c in &self.checks {
            out.push_str(&format!(
                "  [{}] {}: expected {}, got {}   ({})\n",
                if c.pass { "pass" } else { "FAIL" },
                c.name,
                c.expected,
                c.actual,
                c.paper_ref
            ));
        }
        out.push_str(&format!(
            "  => {} ({} checks, {} ms)\n",
            self.status,
            self.checks.len(),
            self.elapsed_ms
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_reflects_checks() {
        let ok = Check {
            name: "a".into(),
            paper_ref: "loc".into(),
            expected: "1".into(),
            actual: "1".into(),
            pass: true,
        };
        let bad = Check {
            pass: false,
            ..ok.clone()
        };
        assert!(Report::new("s", vec![ok.clone()], 0).passed());
        assert!(!Report::new("s", vec![ok, bad], 0).passed());
    }

    #[test]
    fn json_has_schema_fields() {
        let r = Report::new(
            "s",
            vec![Check {
                name: "a".into(),
                paper_ref: "loc".into(),
                expected: "1".into(),
                actual: "1".into(),
                pass: true,
            }],
            5,
        );
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["scenario"], "s");
        assert_eq!(v["status"], "pass");
        assert!(v["checks"][0]["paper_ref"].is_string());
        assert!(v["elapsed_ms"].is_number());
    }
}
