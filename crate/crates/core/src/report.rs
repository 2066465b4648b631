//! Check reports: pass/fail plus sorted violation witnesses.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Sort key: (family position, index) per witness slot.
    pub key: Vec<(usize, i64)>,
    /// Rendered witness, e.g. ["L(2)", "L(1)", "L(-3)"].
    pub witness: Vec<String>,
    /// Canonical rendering of the nonzero residual.
    pub residual: String,
}

#[derive(Debug, Clone)]
pub struct CheckReport {
    pub check: String,
    pub window: i64,
    pub violations: Vec<Violation>,
}

impl CheckReport {
    pub fn new(check: &str, window: i64) -> Self {
        CheckReport {
            check: check.to_string(),
            window,
            violations: Vec::new(),
        }
    }

    pub fn record(&mut self, key: Vec<(usize, i64)>, witness: Vec<String>, residual: String) {
        self.violations.push(Violation {
            key,
            witness,
            residual,
        });
    }

    pub fn finish(mut self) -> Self {
        self.violations.sort_by(|a, b| a.key.cmp(&b.key));
        self
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn merge(mut self, other: CheckReport) -> CheckReport {
        self.check = format!("{}+{}", self.check, other.check);
        self.violations.extend(other.violations);
        self
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} (window {}): {}",
            self.check,
            self.window,
            if self.passed() { "pass" } else { "fail" }
        )?;
        for v in &self.violations {
            writeln!(f, "  [{}] residual {}", v.witness.join(", "), v.residual)?;
        }
        Ok(())
    }
}
