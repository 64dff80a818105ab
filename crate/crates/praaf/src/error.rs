//! Error and diagnostic types shared across the crate.

use std::fmt;

use crate::aaf::Attack;

/// A single invariant violation found while validating a framework.
///
/// Validation collects every violation instead of stopping at the first one,
/// so callers can report all problems in one pass.
#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    /// An argument or attack id contains characters outside `[A-Za-z0-9_]`
    /// or is empty.
    InvalidId { id: String },
    /// A probability is outside the half-open interval `(0, 1]`.
    /// Probability 0 is rejected: an element that can never exist carries
    /// no information and should simply be removed from the framework.
    ProbabilityOutOfRange { element: String, value: f64 },
    /// An attack names an argument that is not declared in the framework.
    UnknownEndpoint { attack: Attack, endpoint: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::InvalidId { id } => {
                write!(f, "invalid id `{id}` (expected non-empty [A-Za-z0-9_])")
            }
            Violation::ProbabilityOutOfRange { element, value } => {
                if *value == 0.0 {
                    write!(f, "{element} has probability 0 (zero-probability elements are redundant; remove them)")
                } else {
                    write!(f, "{element} has probability {value} outside (0, 1]")
                }
            }
            Violation::UnknownEndpoint { attack, endpoint } => {
                write!(
                    f,
                    "attack {attack} references undeclared argument `{endpoint}`"
                )
            }
        }
    }
}

/// List of violations, displayed one per line.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Violations(pub Vec<Violation>);

impl fmt::Display for Violations {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Errors raised by framework operations.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("unknown argument `{0}`")]
    UnknownArgument(String),

    #[error("unknown semantics `{0}` (expected one of: conflict-free, admissible, complete, grounded, preferred, stable)")]
    UnknownSemantics(String),

    #[error("unknown stance `{0}` (expected credulous or skeptical)")]
    UnknownStance(String),

    #[error(
        "framework has {count} probabilistic elements, exceeding the enumeration cap of {cap}"
    )]
    TooManyElements { count: usize, cap: usize },

    #[error("framework has {count} arguments, exceeding the enumeration cap of {cap}")]
    TooManyArguments { count: usize, cap: usize },

    #[error("assignment covers {got} probabilistic elements, expected {expected}")]
    IncompleteAssignment { got: usize, expected: usize },

    #[error("world index {index} out of range ({count} worlds)")]
    WorldIndexOutOfRange { index: u64, count: u64 },

    #[error("invalid framework:\n{0}")]
    Invalid(Violations),

    #[error("argument `{0}` already exists; choose a different ground-truth id")]
    GroundTruthCollision(String),

    #[error("ground-truth argument `{0}` not found in the framework")]
    GroundTruthMissing(String),

    #[error("ground-truth argument `{eta}` is attacked by `{attacker}`")]
    GroundTruthAttacked { eta: String, attacker: String },

    #[error("framework is not in normal form: argument `{0}` is probabilistic")]
    NotNormalForm(String),

    #[error("attack {attack} has probability 1, which would give `{target}` probability 0")]
    ImpliedZeroProbability { attack: Attack, target: String },
}

pub type Result<T> = std::result::Result<T, Error>;
