//! Seeded verification suites. The same seed always gives the same report.

pub mod random;
mod suites;

pub use suites::*;

use std::fmt;

use serde_json::{json, Value};

/// The result of one suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub id: usize,
    pub title: &'static str,
    pub passed: bool,
    pub trials: usize,
    pub failures: usize,
    /// The first few failures, plus informational lines.
    pub notes: Vec<String>,
}

impl Outcome {
    pub fn new(id: usize, title: &'static str, trials: usize) -> Self {
        Outcome {
            id,
            title,
            passed: true,
            trials,
            failures: 0,
            notes: Vec::new(),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "id": self.id,
            "title": self.title,
            "passed": self.passed,
            "trials": self.trials,
            "failures": self.failures,
            "notes": self.notes,
        })
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{}] {} ({} checks, {} failed)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.trials,
            self.failures
        )?;
        for n in &self.notes {
            write!(f, "\n    {n}")?;
        }
        Ok(())
    }
}
