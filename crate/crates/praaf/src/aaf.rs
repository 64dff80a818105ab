//! Concrete (non-probabilistic) argumentation frameworks.
//!
//! An [`Aaf`] is a directed graph of arguments and attacks. Arguments are
//! identified by string tokens over `[A-Za-z0-9_]`; identity is case
//! sensitive. Attacks are ordered pairs of declared arguments.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result, Violation, Violations};

/// Returns true when `id` is a legal argument token: non-empty, ASCII
/// alphanumerics and underscores only.
pub fn is_valid_id(id: &str) -> bool {
    !id.is_empty() && id.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

/// A directed attack between two arguments, `source -> target`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Attack {
    pub source: String,
    pub target: String,
}

impl Attack {
    pub fn new(source: impl Into<String>, target: impl Into<String>) -> Self {
        Attack {
            source: source.into(),
            target: target.into(),
        }
    }
}

impl fmt::Display for Attack {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}->{})", self.source, self.target)
    }
}

/// A set of argument ids in canonical (lexicographic) member order.
///
/// Ordering between sets compares cardinality first, then members
/// lexicographically, which keeps listings of extensions stable and
/// readable (singletons before pairs, and so on).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ArgumentSet {
    members: Vec<String>,
}

impl ArgumentSet {
    pub fn empty() -> Self {
        ArgumentSet::default()
    }

    pub fn new<I, S>(members: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let set: BTreeSet<String> = members.into_iter().map(Into::into).collect();
        ArgumentSet {
            members: set.into_iter().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, id: &str) -> bool {
        self.members
            .binary_search_by(|m| m.as_str().cmp(id))
            .is_ok()
    }

    pub fn members(&self) -> impl Iterator<Item = &str> {
        self.members.iter().map(String::as_str)
    }

    pub fn is_subset(&self, other: &ArgumentSet) -> bool {
        self.members().all(|m| other.contains(m))
    }

    /// The set with `id` removed (unchanged if `id` is not a member).
    pub fn without(&self, id: &str) -> ArgumentSet {
        ArgumentSet {
            members: self
                .members
                .iter()
                .filter(|m| m.as_str() != id)
                .cloned()
                .collect(),
        }
    }
}

impl Ord for ArgumentSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.members
            .len()
            .cmp(&other.members.len())
            .then_with(|| self.members.cmp(&other.members))
    }
}

impl PartialOrd for ArgumentSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<S: Into<String>> FromIterator<S> for ArgumentSet {
    fn from_iter<I: IntoIterator<Item = S>>(iter: I) -> Self {
        ArgumentSet::new(iter)
    }
}

impl fmt::Display for ArgumentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}")
    }
}

/// A concrete abstract argumentation framework: a set of arguments and a
/// set of attacks between them.
///
/// Construction validates well-formedness: ids must be legal tokens and
/// every attack endpoint must be a declared argument. Duplicate inputs
/// collapse under set semantics. Self-attacks are permitted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Aaf {
    args: BTreeSet<String>,
    attacks: BTreeSet<Attack>,
}

impl Aaf {
    pub fn new<A, S, T>(args: A, attacks: T) -> Result<Self>
    where
        A: IntoIterator<Item = S>,
        S: Into<String>,
        T: IntoIterator<Item = Attack>,
    {
        let args: BTreeSet<String> = args.into_iter().map(Into::into).collect();
        let attacks: BTreeSet<Attack> = attacks.into_iter().collect();

        let mut violations = Vec::new();
        for id in &args {
            if !is_valid_id(id) {
                violations.push(Violation::InvalidId { id: id.clone() });
            }
        }
        for att in &attacks {
            for endpoint in [&att.source, &att.target] {
                if !args.contains(endpoint) {
                    violations.push(Violation::UnknownEndpoint {
                        attack: att.clone(),
                        endpoint: endpoint.clone(),
                    });
                }
            }
        }
        if violations.is_empty() {
            Ok(Aaf { args, attacks })
        } else {
            Err(Error::Invalid(Violations(violations)))
        }
    }

    pub fn arg_count(&self) -> usize {
        self.args.len()
    }

    pub fn attack_count(&self) -> usize {
        self.attacks.len()
    }

    /// Argument ids in lexicographic order.
    pub fn args(&self) -> impl Iterator<Item = &str> {
        self.args.iter().map(String::as_str)
    }

    pub fn attacks(&self) -> impl Iterator<Item = &Attack> {
        self.attacks.iter()
    }

    pub fn has_arg(&self, id: &str) -> bool {
        self.args.contains(id)
    }

    pub fn has_attack(&self, source: &str, target: &str) -> bool {
        self.attacks
            .contains(&Attack::new(source.to_owned(), target.to_owned()))
    }

    /// All declared arguments as an [`ArgumentSet`].
    pub fn argument_set(&self) -> ArgumentSet {
        ArgumentSet::new(self.args.iter().cloned())
    }

    /// Checks that every member of `set` is declared in this framework.
    pub(crate) fn check_members(&self, set: &ArgumentSet) -> Result<()> {
        for m in set.members() {
            if !self.args.contains(m) {
                return Err(Error::UnknownArgument(m.to_owned()));
            }
        }
        Ok(())
    }
}
