//! Check records and the assembled report.

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const REPORT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub anchor: String,
    pub expected: Value,
    pub computed: Value,
    pub pass: bool,
}

impl Check {
    /// A record that passes iff `expected == computed`.
    pub fn compare<T: Serialize>(id: impl Into<String>, anchor: &str, expected: T, computed: T) -> Self {
        let expected = serde_json::to_value(expected).unwrap_or(Value::Null);
        let computed = serde_json::to_value(computed).unwrap_or(Value::Null);
        let pass = expected == computed;
        Check {
            id: id.into(),
            anchor: anchor.to_string(),
            expected,
            computed,
            pass,
        }
    }

    /// A record for a computation that failed outright.
    pub fn error<T: Serialize>(id: impl Into<String>, anchor: &str, expected: T, message: &str) -> Self {
        Check {
            id: id.into(),
            anchor: anchor.to_string(),
            expected: serde_json::to_value(expected).unwrap_or(Value::Null),
            computed: serde_json::json!({ "error": message }),
            pass: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub section: String,
    pub seconds: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub version: u32,
    pub checks: Vec<Check>,
    pub summary: Summary,
    /// Wall-clock time per section; the only nondeterministic field.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub timings: Vec<Timing>,
}

impl Report {
    /// Merges section outputs, ordered by check id.
    pub fn assemble(mut checks: Vec<Check>, timings: Vec<Timing>) -> Self {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        let passed = checks.iter().filter(|c| c.pass).count();
        let total = checks.len();
        Report {
            version: REPORT_VERSION,
            summary: Summary {
                total,
                passed,
                failed: total - passed,
                pass: passed == total,
            },
            checks,
            timings,
        }
    }

    pub fn pass(&self) -> bool {
        self.summary.pass
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn without_timings(&self) -> Report {
        Report {
            timings: Vec::new(),
            ..self.clone()
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summary_counts() {
        let r = Report::assemble(
            vec![
                Check::compare("b", "x", 1, 1),
                Check::compare("a", "x", 1, 2),
            ],
            vec![],
        );
        assert_eq!(r.checks[0].id, "a");
        assert_eq!((r.summary.passed, r.summary.failed), (1, 1));
        assert!(!r.pass());
    }

    #[test]
    fn json_round_trip_is_a_fixpoint() {
        let r = Report::assemble(
            vec![Check::compare("a", "Table 2", vec![1u64, 2], vec![1, 2])],
            vec![Timing {
                section: "s".into(),
                seconds: 0.5,
            }],
        );
        let text = r.to_json();
        let back: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.to_json(), text);
    }
}
