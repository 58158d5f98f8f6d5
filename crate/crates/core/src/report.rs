use std::fmt;

use serde::{Deserialize, Serialize};

/// Default number of violations retained per report.
pub const DEFAULT_VIOLATION_CAP: usize = 32;

/// One failed law instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Violation {
    /// Name of the law, e.g. `pentagon` or `naturality`.
    pub law: String,
    /// Object or morphism ids that witness the failure, in scan order.
    pub witness: Vec<usize>,
    /// Rendered composite path(s) that disagree.
    pub detail: String,
}

/// Result of an exhaustive law scan.
///
/// Violations are stored in scan order up to `cap`; `total` keeps counting
/// past the cap so a truncated report is never mistaken for a clean one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub violations: Vec<Violation>,
    pub total: usize,
    pub cap: usize,
}

impl Default for Report {
    fn default() -> Self {
        Self::with_cap(DEFAULT_VIOLATION_CAP)
    }
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_cap(cap: usize) -> Self {
        Report {
            violations: Vec::new(),
            total: 0,
            cap,
        }
    }

    pub fn push(&mut self, law: &str, witness: Vec<usize>, detail: impl FnOnce() -> String) {
        self.total += 1;
        if self.violations.len() < self.cap {
            self.violations.push(Violation {
                law: law.to_string(),
                witness,
                detail: detail(),
            });
        }
    }

    /// Records a violation when `holds` is false.
    pub fn require(
        &mut self,
        holds: bool,
        law: &str,
        witness: impl FnOnce() -> Vec<usize>,
        detail: impl FnOnce() -> String,
    ) {
        if !holds {
            let w = witness();
            self.push(law, w, detail);
        }
    }

    /// Appends another report, prefixing its law names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        let stored = other.violations.len();
        for v in other.violations {
            self.push(&format!("{prefix}.{}", v.law), v.witness, || v.detail);
        }
        // count violations the other report dropped at its own cap
        self.total += other.total - stored;
    }

    pub fn is_ok(&self) -> bool {
        self.total == 0
    }

    pub fn truncated(&self) -> bool {
        self.total > self.violations.len()
    }

    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }

    pub fn has_law(&self, law: &str) -> bool {
        self.violations
            .iter()
            .any(|v| v.law == law || v.law.ends_with(&format!(".{law}")))
    }

    pub fn summary(&self) -> String {
        match self.violations.first() {
            None => "no violations".to_string(),
            Some(v) => format!(
                "{} violation(s); first: {} at {:?} ({})",
                self.total, v.law, v.witness, v.detail
            ),
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return write!(f, "ok");
        }
        writeln!(f, "{} violation(s)", self.total)?;
        for v in &self.violations {
            writeln!(f, "  {} {:?}: {}", v.law, v.witness, v.detail)?;
        }
        if self.truncated() {
            writeln!(f, "  ... {} more", self.total - self.violations.len())?;
        }
        Ok(())
    }
}
