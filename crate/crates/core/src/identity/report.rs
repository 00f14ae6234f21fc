use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::linalg::Vector;

/// Default number of violations kept in a report.
pub const DEFAULT_CAP: usize = 100;

/// One failing instance of an equation: the basis indices it was evaluated
/// at and the non-zero residual `lhs - rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub id: String,
    pub witness: Vec<usize>,
    #[serde(with = "crate::document::vector_serde")]
    pub residual: Vector,
}

/// Per-equation totals, independent of the violation cap.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchemaTally {
    pub id: String,
    pub checked: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationReport {
    pub checked: usize,
    pub violations: Vec<Violation>,
    #[serde(default)]
    pub schemas: Vec<SchemaTally>,
}

impl ViolationReport {
    pub fn passed(&self) -> bool {
        self.schemas.iter().all(|s| s.failed == 0) && self.violations.is_empty()
    }

    /// Total failures, including those beyond the cap.
    pub fn violation_count(&self) -> usize {
        let tallied: usize = self.schemas.iter().map(|s| s.failed).sum();
        tallied.max(self.violations.len())
    }

    /// Appends the results of one equation, keeping at most `cap`
    /// violations overall.
    pub(crate) fn record(&mut self, id: &str, checked: usize, failures: Vec<Violation>, cap: usize) {
        self.checked += checked;
        self.schemas.push(SchemaTally {
            id: id.to_string(),
            checked,
            failed: failures.len(),
        });
        let room = cap.saturating_sub(self.violations.len());
        self.violations.extend(failures.into_iter().take(room));
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// Human-readable summary: one line per equation, then witnesses.
    pub fn render_text(&self) -> String {
        let mut s = String::new();
        for t in &self.schemas {
            let status = if t.failed == 0 { "pass" } else { "FAIL" };
            let _ = writeln!(s, "  {status}  {:<14} {} checked, {} failed", t.id, t.checked, t.failed);
        }
        for v in &self.violations {
            let _ = writeln!(
                s,
                "  witness {} at {:?}: residual {}",
                v.id, v.witness, v.residual
            );
        }
        let shown = self.violations.len();
        let total = self.violation_count();
        if total > shown {
            let _ = writeln!(s, "  ... {} more violation(s) not shown", total - shown);
        }
        let _ = writeln!(
            s,
            "{}: {} evaluations, {} violation(s)",
            if self.passed() { "PASS" } else { "FAIL" },
            self.checked,
            total
        );
        s
    }
}
