//! Exact probability distributions over extensions.
//!
//! The probability that a set is a σ-extension is the sum of the
//! probabilities of the worlds whose realized AAF has it as a σ-extension.
//! One world contributes to many extensions, so the entries of a
//! distribution do not sum to 1.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::aaf::ArgumentSet;
use crate::error::{Error, Result};
use crate::praaf::Praaf;
use crate::semantics::Semantics;
use crate::world::{Limits, WorldMode};

/// Map from argument set to the probability that it is a σ-extension.
/// Zero-probability sets are not stored.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtensionDistribution {
    sigma: Semantics,
    mode: WorldMode,
    entries: BTreeMap<ArgumentSet, f64>,
}

impl ExtensionDistribution {
    pub(crate) fn from_entries(
        sigma: Semantics,
        mode: WorldMode,
        entries: BTreeMap<ArgumentSet, f64>,
    ) -> Self {
        ExtensionDistribution {
            sigma,
            mode,
            entries,
        }
    }

    pub fn sigma(&self) -> Semantics {
        self.sigma
    }

    pub fn mode(&self) -> WorldMode {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Probability that `set` is an extension; 0 when absent.
    pub fn probability(&self, set: &ArgumentSet) -> f64 {
        self.entries.get(set).copied().unwrap_or(0.0)
    }

    pub fn contains(&self, set: &ArgumentSet) -> bool {
        self.entries.contains_key(set)
    }

    /// Entries in canonical order (small sets first).
    pub fn entries(&self) -> impl Iterator<Item = (&ArgumentSet, f64)> {
        self.entries.iter().map(|(set, &p)| (set, p))
    }

    pub(crate) fn into_entries(self) -> BTreeMap<ArgumentSet, f64> {
        self.entries
    }
}

impl fmt::Display for ExtensionDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (set, p)) in self.entries().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{set}\t{p}")?;
        }
        Ok(())
    }
}

/// Acceptance query stance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stance {
    /// The argument belongs to at least one σ-extension of the world.
    Credulous,
    /// The argument belongs to every σ-extension of the world.
    Skeptical,
}

impl Stance {
    pub fn name(self) -> &'static str {
        match self {
            Stance::Credulous => "credulous",
            Stance::Skeptical => "skeptical",
        }
    }
}

impl fmt::Display for Stance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Stance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "credulous" => Ok(Stance::Credulous),
            "skeptical" => Ok(Stance::Skeptical),
            other => Err(Error::UnknownStance(other.to_owned())),
        }
    }
}

/// Result of an acceptance query.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AcceptanceProbability {
    pub probability: f64,
    /// Probability mass of worlds with zero σ-extensions, which count
    /// toward skeptical acceptance vacuously (possible under stable
    /// semantics). Always 0 for credulous queries.
    pub vacuous: f64,
}

impl Praaf {
    /// Computes the full distribution over σ-extensions by streaming the
    /// possible worlds and summing per extension in enumeration order.
    pub fn extension_distribution(
        &self,
        sigma: Semantics,
        mode: WorldMode,
        limits: Limits,
    ) -> Result<ExtensionDistribution> {
        let mut entries: BTreeMap<ArgumentSet, f64> = BTreeMap::new();
        for world in self.worlds_limited(mode, limits)? {
            let extensions = world.aaf().extensions_capped(sigma, limits.max_arguments)?;
            for extension in extensions {
                *entries.entry(extension).or_insert(0.0) += world.probability();
            }
        }
        entries.retain(|_, p| *p > 0.0);
        Ok(ExtensionDistribution::from_entries(sigma, mode, entries))
    }

    /// Probability that `set` is a σ-extension of the realized AAF.
    pub fn extension_probability(
        &self,
        set: &ArgumentSet,
        sigma: Semantics,
        mode: WorldMode,
        limits: Limits,
    ) -> Result<f64> {
        for member in set.members() {
            if !self.has_arg(member) {
                return Err(Error::UnknownArgument(member.to_owned()));
            }
        }
        Ok(self
            .extension_distribution(sigma, mode, limits)?
            .probability(set))
    }

    /// Probability that `arg` is credulously/skeptically accepted. Worlds
    /// where the argument does not exist contribute to neither stance.
    pub fn acceptance_probability(
        &self,
        arg: &str,
        sigma: Semantics,
        stance: Stance,
        mode: WorldMode,
        limits: Limits,
    ) -> Result<AcceptanceProbability> {
        if !self.has_arg(arg) {
            return Err(Error::UnknownArgument(arg.to_owned()));
        }
        let mut probability = 0.0;
        let mut vacuous = 0.0;
        for world in self.worlds_limited(mode, limits)? {
            if !world.aaf().has_arg(arg) {
                continue;
            }
            let extensions = world.aaf().extensions_capped(sigma, limits.max_arguments)?;
            let accepted = match stance {
                Stance::Credulous => extensions.iter().any(|ext| ext.contains(arg)),
                Stance::Skeptical => {
                    if extensions.is_empty() {
                        vacuous += world.probability();
                        true
                    } else {
                        extensions.iter().all(|ext| ext.contains(arg))
                    }
                }
            };
            if accepted {
                probability += world.probability();
            }
        }
        Ok(AcceptanceProbability {
            probability,
            vacuous,
        })
    }
}
