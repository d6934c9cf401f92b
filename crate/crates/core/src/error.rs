//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A multiplication table failed the group axioms.
    #[error("invalid group `{label}`: {detail}")]
    InvalidGroup { label: String, detail: String },

    /// A map between groups is not a homomorphism or is otherwise malformed.
    #[error("invalid homomorphism: {0}")]
    InvalidHom(String),

    /// An action table is not a valid action by automorphisms.
    #[error("invalid action: {0}")]
    InvalidAction(String),

    /// Quotient requested by a subset that is not a normal subgroup.
    #[error("normality error: {0}")]
    Normality(String),

    /// An operation's precondition does not hold for the given input.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// An enumeration or materialization would exceed the node budget.
    #[error("budget exceeded: estimated {estimate} nodes > budget {budget}")]
    Budget { estimate: u128, budget: u64 },

    /// Malformed input data (tables of the wrong size, dangling references...).
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Enumeration node budget. Guards the exponential enumerations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Default for Budget {
    fn default() -> Self {
        Budget(10_000_000)
    }
}

impl Budget {
    /// Fail fast when `estimate` nodes would blow the budget.
    pub fn check(&self, estimate: u128) -> Result<()> {
        if estimate > self.0 as u128 {
            Err(Error::Budget {
                estimate,
                budget: self.0,
            })
        } else {
            Ok(())
        }
    }
}
