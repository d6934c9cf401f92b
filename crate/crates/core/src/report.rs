//! Report-based validation: validators return a list of violated axioms with
//! witnesses instead of a bare boolean, so failures stay diagnosable.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Short stable name of the violated axiom.
    pub axiom: String,
    /// Witness tuple rendered as text.
    pub witness: String,
}

#[derive(Debug, Clone, Default)]
pub struct ValidationReport {
    pub subject: String,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn new(subject: impl Into<String>) -> Self {
        ValidationReport {
            subject: subject.into(),
            violations: Vec::new(),
        }
    }

    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, axiom: impl Into<String>, witness: impl fmt::Display) {
        self.violations.push(Violation {
            axiom: axiom.into(),
            witness: witness.to_string(),
        });
    }

    /// Record a violation only when `holds` is false.
    pub fn check(&mut self, holds: bool, axiom: &str, witness: impl Fn() -> String) {
        if !holds {
            self.violations.push(Violation {
                axiom: axiom.to_string(),
                witness: witness(),
            });
        }
    }

    pub fn merge(&mut self, other: ValidationReport) {
        for v in other.violations {
            self.violations.push(Violation {
                axiom: format!("{}: {}", other.subject, v.axiom),
                witness: v.witness,
            });
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok() {
            write!(f, "{}: ok", self.subject)
        } else {
            writeln!(
                f,
                "{}: {} violation(s)",
                self.subject,
                self.violations.len()
            )?;
            for v in &self.violations {
                writeln!(f, "  {} [{}]", v.axiom, v.witness)?;
            }
            Ok(())
        }
    }
}
