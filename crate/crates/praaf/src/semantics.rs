//! Dung extension semantics, computed exactly.
//!
//! All subset-based semantics are decided by exhaustive enumeration of the
//! `2^n` argument subsets, guarded by an enumeration cap. The grounded
//! extension is computed by fixed-point iteration of the characteristic
//! function instead, since it is unique and the iteration converges in at
//! most `n` steps.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::aaf::{Aaf, ArgumentSet};
use crate::error::{Error, Result};

/// Default cap on the number of arguments for subset enumeration (`2^20`
/// subsets). Exceeding it is an explicit capacity error rather than a hang.
pub const DEFAULT_ARGUMENT_CAP: usize = 20;

/// Bitmask enumeration cannot address more than 63 arguments regardless of
/// the configured cap.
const HARD_ARGUMENT_LIMIT: usize = 63;

/// The extension semantics supported by this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Semantics {
    ConflictFree,
    Admissible,
    Complete,
    Grounded,
    Preferred,
    Stable,
}

impl Semantics {
    /// All supported semantics, in refinement order.
    pub const ALL: [Semantics; 6] = [
        Semantics::ConflictFree,
        Semantics::Admissible,
        Semantics::Complete,
        Semantics::Grounded,
        Semantics::Preferred,
        Semantics::Stable,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Semantics::ConflictFree => "conflict-free",
            Semantics::Admissible => "admissible",
            Semantics::Complete => "complete",
            Semantics::Grounded => "grounded",
            Semantics::Preferred => "preferred",
            Semantics::Stable => "stable",
        }
    }
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Semantics {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "conflict-free" => Ok(Semantics::ConflictFree),
            "admissible" => Ok(Semantics::Admissible),
            "complete" => Ok(Semantics::Complete),
            "grounded" => Ok(Semantics::Grounded),
            "preferred" => Ok(Semantics::Preferred),
            "stable" => Ok(Semantics::Stable),
            other => Err(Error::UnknownSemantics(other.to_owned())),
        }
    }
}

/// Bitmask view of an AAF: argument `i` is the i-th id in lexicographic
/// order, `attackers[i]` is the mask of arguments attacking it.
struct Dense<'a> {
    ids: Vec<&'a str>,
    attackers: Vec<u64>,
    full: u64,
}

impl<'a> Dense<'a> {
    /// Builds the mask view. Callers must have checked `arg_count() <= 63`.
    fn build(aaf: &'a Aaf) -> Dense<'a> {
        let ids: Vec<&str> = aaf.args().collect();
        debug_assert!(ids.len() <= HARD_ARGUMENT_LIMIT);
        let index_of = |id: &str| ids.binary_search(&id).expect("endpoint declared");
        let mut attackers = vec![0u64; ids.len()];
        for att in aaf.attacks() {
            attackers[index_of(&att.target)] |= 1 << index_of(&att.source);
        }
        let full = if ids.is_empty() {
            0
        } else {
            (1u64 << ids.len()) - 1
        };
        Dense {
            ids,
            attackers,
            full,
        }
    }

    fn mask_of(&self, set: &ArgumentSet) -> u64 {
        let mut mask = 0;
        for m in set.members() {
            let i = self.ids.binary_search(&m).expect("member declared");
            mask |= 1 << i;
        }
        mask
    }

    fn set_of(&self, mask: u64) -> ArgumentSet {
        ArgumentSet::new(
            self.ids
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, id)| *id),
        )
    }

    fn members(&self, mask: u64) -> impl Iterator<Item = usize> + '_ {
        (0..self.ids.len()).filter(move |i| mask & (1 << i) != 0)
    }

    fn is_conflict_free(&self, mask: u64) -> bool {
        self.members(mask).all(|i| self.attackers[i] & mask == 0)
    }

    fn is_acceptable(&self, arg: usize, mask: u64) -> bool {
        self.members(self.attackers[arg])
            .all(|attacker| self.attackers[attacker] & mask != 0)
    }

    fn characteristic(&self, mask: u64) -> u64 {
        let mut out = 0;
        for i in 0..self.ids.len() {
            if self.is_acceptable(i, mask) {
                out |= 1 << i;
            }
        }
        out
    }

    fn is_admissible(&self, mask: u64) -> bool {
        self.is_conflict_free(mask) && mask & self.characteristic(mask) == mask
    }

    fn is_complete(&self, mask: u64) -> bool {
        self.is_conflict_free(mask) && self.characteristic(mask) == mask
    }

    /// Least fixed point of the characteristic function, starting from the
    /// empty set. Monotonicity guarantees convergence in at most `n` steps.
    fn grounded(&self) -> u64 {
        let mut current = 0;
        loop {
            let next = self.characteristic(current);
            if next == current {
                return current;
            }
            current = next;
        }
    }

    fn is_stable(&self, mask: u64) -> bool {
        self.is_conflict_free(mask)
            && self
                .members(self.full & !mask)
                .all(|outside| self.attackers[outside] & mask != 0)
    }

    fn is_preferred(&self, mask: u64) -> bool {
        if !self.is_admissible(mask) {
            return false;
        }
        // Scan the proper supersets of `mask` for a larger admissible set.
        let mut superset = mask;
        loop {
            superset = (superset + 1) | mask;
            if superset > self.full {
                return true;
            }
            if self.is_admissible(superset) {
                return false;
            }
        }
    }

    fn is_extension(&self, mask: u64, sigma: Semantics) -> bool {
        match sigma {
            Semantics::ConflictFree => self.is_conflict_free(mask),
            Semantics::Admissible => self.is_admissible(mask),
            Semantics::Complete => self.is_complete(mask),
            Semantics::Grounded => mask == self.grounded(),
            Semantics::Preferred => self.is_preferred(mask),
            Semantics::Stable => self.is_stable(mask),
        }
    }

    fn extensions(&self, sigma: Semantics) -> Vec<u64> {
        match sigma {
            Semantics::Grounded => vec![self.grounded()],
            Semantics::Preferred => {
                let admissible: Vec<u64> =
                    (0..=self.full).filter(|&m| self.is_admissible(m)).collect();
                admissible
                    .iter()
                    .copied()
                    .filter(|&m| !admissible.iter().any(|&other| other != m && other & m == m))
                    .collect()
            }
            _ => (0..=self.full)
                .filter(|&m| self.is_extension(m, sigma))
                .collect(),
        }
    }
}

impl Aaf {
    fn dense_checked(&self, cap: usize) -> Result<Dense<'_>> {
        let cap = cap.min(HARD_ARGUMENT_LIMIT);
        if self.arg_count() > cap {
            return Err(Error::TooManyArguments {
                count: self.arg_count(),
                cap,
            });
        }
        Ok(Dense::build(self))
    }

    /// Pre-checked mask view for membership-style queries; these only need
    /// the hard mask limit, not the enumeration cap.
    fn dense_for_query(&self) -> Result<Dense<'_>> {
        self.dense_checked(HARD_ARGUMENT_LIMIT)
    }

    /// True iff no member of `set` attacks another member (self-attacks
    /// count: a set containing a self-attacker is not conflict-free).
    pub fn is_conflict_free(&self, set: &ArgumentSet) -> Result<bool> {
        self.check_members(set)?;
        let dense = self.dense_for_query()?;
        Ok(dense.is_conflict_free(dense.mask_of(set)))
    }

    /// True iff every attacker of `arg` is attacked by some member of
    /// `set`; vacuously true when `arg` has no attackers.
    pub fn is_acceptable(&self, arg: &str, set: &ArgumentSet) -> Result<bool> {
        if !self.has_arg(arg) {
            return Err(Error::UnknownArgument(arg.to_owned()));
        }
        self.check_members(set)?;
        let dense = self.dense_for_query()?;
        let index = dense.ids.binary_search(&arg).expect("checked above");
        Ok(dense.is_acceptable(index, dense.mask_of(set)))
    }

    /// The characteristic function: all arguments acceptable with respect
    /// to `set`.
    pub fn characteristic(&self, set: &ArgumentSet) -> Result<ArgumentSet> {
        self.check_members(set)?;
        let dense = self.dense_for_query()?;
        Ok(dense.set_of(dense.characteristic(dense.mask_of(set))))
    }

    /// The unique grounded extension: the least fixed point of the
    /// characteristic function. Computed without subset enumeration, so no
    /// cap applies.
    pub fn grounded_extension(&self) -> ArgumentSet {
        // Set-based fixed point; works for frameworks of any size.
        let mut attackers: BTreeMap<&str, Vec<&str>> =
            self.args().map(|arg| (arg, Vec::new())).collect();
        for att in self.attacks() {
            attackers
                .get_mut(att.target.as_str())
                .expect("well-formed AAF")
                .push(att.source.as_str());
        }
        let mut current: BTreeSet<&str> = BTreeSet::new();
        loop {
            let next: BTreeSet<&str> = attackers
                .keys()
                .copied()
                .filter(|arg| {
                    attackers[arg].iter().all(|attacker| {
                        attackers[attacker]
                            .iter()
                            .any(|defender| current.contains(defender))
                    })
                })
                .collect();
            if next == current {
                return ArgumentSet::new(current);
            }
            current = next;
        }
    }

    /// Decides whether `set` is a σ-extension of this framework.
    pub fn is_extension(&self, set: &ArgumentSet, sigma: Semantics) -> Result<bool> {
        self.check_members(set)?;
        let dense = self.dense_for_query()?;
        Ok(dense.is_extension(dense.mask_of(set), sigma))
    }

    /// Enumerates all σ-extensions, in canonical order, using the default
    /// argument cap of [`DEFAULT_ARGUMENT_CAP`].
    pub fn extensions(&self, sigma: Semantics) -> Result<Vec<ArgumentSet>> {
        self.extensions_capped(sigma, DEFAULT_ARGUMENT_CAP)
    }

    /// Enumerates all σ-extensions with an explicit argument cap.
    pub fn extensions_capped(&self, sigma: Semantics, cap: usize) -> Result<Vec<ArgumentSet>> {
        let dense = self.dense_checked(cap)?;
        let mut out: Vec<ArgumentSet> = dense
            .extensions(sigma)
            .into_iter()
            .map(|m| dense.set_of(m))
            .collect();
        out.sort();
        Ok(out)
    }
}
