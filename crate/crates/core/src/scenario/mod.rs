//! Named verification scenarios. Each scenario is an ordered list of
//! exact checks tied to locations in the monograph under verification;
//! a run never stops early and reports every check's outcome.

mod checks;

use crate::catalog::{BuiltCatalog, Catalog};
use crate::report::{Check, Report};
use std::sync::OnceLock;
use std::time::Instant;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ScenarioError {
    #[error("unknown scenario '{0}'")]
    Unknown(String),
    #[error("catalog failed to build: {0}")]
    Catalog(String),
}

/// Deterministic scenario registry, in report order.
pub fn list_scenarios() -> Vec<&'static str> {
    vec![
        "mukai-orders",
        "klein-l27",
        "c3c7-family",
        "m9",
        "n72",
        "t48",
        "d16-a6",
        "a6-valentiner",
        "s5-clebsch-curve",
        "ledgers",
        "germs-ch6",
    ]
}

static BUILT: OnceLock<Result<BuiltCatalog, String>> = OnceLock::new();

/// The bundled catalog, built strictly once per process.
pub fn built_catalog() -> Result<&'static BuiltCatalog, ScenarioError> {
    BUILT
        .get_or_init(|| {
            Catalog::bundled()
                .and_then(|c| c.build_strict())
                .map_err(|e| e.to_string())
        })
        .as_ref()
        .map_err(|e| ScenarioError::Catalog(e.clone()))
}

/// Run one scenario by name.
pub fn run_scenario(name: &str) -> Result<Report, ScenarioError> {
    let start = Instant::now();
    let cat = built_catalog()?;
    let checks = match name {
        "mukai-orders" => checks::mukai_orders(cat),
        "klein-l27" => checks::klein_l27(cat),
        "c3c7-family" => checks::c3c7_family(cat),
        "m9" => checks::m9(cat),
        "n72" => checks::n72(cat),
        "t48" => checks::t48(cat),
        "d16-a6" => checks::d16_a6(cat),
        "a6-valentiner" => checks::a6_valentiner(cat),
        "s5-clebsch-curve" => checks::s5_clebsch_curve(cat),
        "ledgers" => checks::ledgers(cat),
        "germs-ch6" => checks::germs_ch6(cat),
        other => return Err(ScenarioError::Unknown(other.to_string())),
    };
    Ok(Report::new(name, checks, start.elapsed().as_millis()))
}

/// Collector for scenario checks.
pub(crate) struct Checker {
    checks: Vec<Check>,
}

impl Checker {
    pub fn new() -> Self {
        Checker { checks: Vec::new() }
    }

    /// Equality check: `actual` computes a display string compared
    /// literally against `expected`. Errors fail the check.
    pub fn eq(
        &mut self,
        name: &str,
        paper_ref: &str,
        expected: impl Into<String>,
        actual: impl FnOnce() -> Result<String, String>,
    ) {
        let expected = expected.into();
        let (actual, pass) = match actual() {
            Ok(a) => {
                let ok = a == expected;
                (a, ok)
            }
            Err(e) => (format!("error: {e}"), false),
        };
        self.checks.push(Check {
            name: name.to_string(),
            paper_ref: paper_ref.to_string(),
            expected,
            actual,
            pass,
        });
    }

    /// Predicate check: the closure reports (pass, actual description).
    pub fn holds(
        &mut self,
        name: &str,
        paper_ref: &str,
        expected: impl Into<String>,
        outcome: impl FnOnce() -> Result<(bool, String), String>,
    ) {
        let (pass, actual) = match outcome() {
            Ok((p, a)) => (p, a),
            Err(e) => (false, format!("error: {e}")),
        };
        self.checks.push(Check {
            name: name.to_string(),
            paper_ref: paper_ref.to_string(),
            expected: expected.into(),
            actual,
            pass,
        });
    }

    /// Informational check: recorded but never failing; used where the
    /// bundled data is deliberately compared non-strictly.
    pub fn info(
        &mut self,
        name: &str,
        paper_ref: &str,
        expected: impl Into<String>,
        outcome: impl FnOnce() -> Result<String, String>,
    ) {
        let actual = match outcome() {
            Ok(a) => a,
            Err(e) => format!("error: {e}"),
        };
        self.checks.push(Check {
            name: name.to_string(),
            paper_ref: paper_ref.to_string(),
            expected: expected.into(),
            actual,
            pass: true,
        });
    }

    pub fn finish(self) -> Vec<Check> {
        self.checks
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_contains_required_names() {
        let names = list_scenarios();
        for required in [
            "mukai-orders",
            "klein-l27",
            "c3c7-family",
            "m9",
            "n72",
            "t48",
            "d16-a6",
            "s5-clebsch-curve",
            "ledgers",
            "germs-ch6",
        ] {
            assert!(names.contains(&required));
        }
    }

    #[test]
    fn unknown_scenario_errors() {
        assert!(matches!(
            run_scenario("no-such-scenario"),
            Err(ScenarioError::Unknown(_))
        ));
    }
}
