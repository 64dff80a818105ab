//! The probabilistic-attack normal form.
//!
//! A framework is in normal form when it has no probabilistic arguments.
//! Any framework can be brought into normal form: add a never-attacked
//! ground-truth argument η with probability 1 and replace each
//! probabilistic argument `a` (probability `p`) by a probabilistic attack
//! `η -> a` with probability `1 - p`. Since η survives undefeated in every
//! world, that attack suppresses `a` exactly as often as `a` used to be
//! absent, and the distribution over extensions is preserved once η itself
//! is ignored. Extensions of an η-framework only count when they contain η.

use std::collections::BTreeMap;
use std::fmt;

use crate::aaf::{is_valid_id, Aaf, ArgumentSet, Attack};
use crate::distribution::ExtensionDistribution;
use crate::error::{Error, Result, Violation, Violations};
use crate::praaf::Praaf;
use crate::semantics::Semantics;
use crate::world::{Limits, WorldMode};

/// The reserved ground-truth argument: certain, never attacked, and a
/// member of every extension that counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundTruth {
    id: String,
}

impl GroundTruth {
    pub fn new(id: impl Into<String>) -> Result<Self> {
        let id = id.into();
        if !is_valid_id(&id) {
            return Err(Error::Invalid(Violations(vec![Violation::InvalidId {
                id,
            }])));
        }
        Ok(GroundTruth { id })
    }

    pub fn id(&self) -> &str {
        &self.id
    }
}

impl Default for GroundTruth {
    fn default() -> Self {
        GroundTruth { id: "eta".into() }
    }
}

impl fmt::Display for GroundTruth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id)
    }
}

/// How one probabilistic argument was rewritten.
#[derive(Debug, Clone, PartialEq)]
pub struct MappingEntry {
    pub argument: String,
    pub original_probability: f64,
    pub attack: Attack,
    pub attack_probability: f64,
}

/// Result of a normal-form transformation: the transformed framework plus
/// the argument-to-attack mapping that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalFormCertificate {
    pub original: Praaf,
    pub transformed: Praaf,
    pub eta: GroundTruth,
    pub mapping: Vec<MappingEntry>,
}

impl NormalFormCertificate {
    /// True when the transformation actually introduced the ground truth
    /// (i.e. the original had at least one probabilistic argument).
    pub fn eta_added(&self) -> bool {
        !self.mapping.is_empty()
    }
}

/// True iff `set` counts as an extension of an η-framework: it contains η.
pub fn is_acceptable_extension(set: &ArgumentSet, aaf: &Aaf, eta: &GroundTruth) -> Result<bool> {
    if !aaf.has_arg(eta.id()) {
        return Err(Error::GroundTruthMissing(eta.id().to_owned()));
    }
    Ok(set.contains(eta.id()))
}

impl Praaf {
    /// True iff every argument is certain (no probabilistic arguments).
    pub fn is_normal_form(&self) -> bool {
        self.args().all(|(_, p)| p >= 1.0)
    }

    /// Rewrites every probabilistic argument into a probabilistic attack
    /// from the ground truth η. When the framework has no probabilistic
    /// arguments it is returned unchanged, without introducing η.
    pub fn to_normal_form(&self, eta: &GroundTruth) -> Result<NormalFormCertificate> {
        let violations = self.validate();
        if !violations.is_empty() {
            return Err(Error::Invalid(Violations(violations)));
        }
        if self.probabilistic_arg_count() == 0 {
            return Ok(NormalFormCertificate {
                original: self.clone(),
                transformed: self.clone(),
                eta: eta.clone(),
                mapping: Vec::new(),
            });
        }
        if self.has_arg(eta.id()) {
            return Err(Error::GroundTruthCollision(eta.id().to_owned()));
        }
        let mut args: Vec<(String, f64)> =
            self.args().map(|(id, _)| (id.to_owned(), 1.0)).collect();
        args.push((eta.id().to_owned(), 1.0));
        let mut attacks: Vec<(Attack, f64)> =
            self.attacks().map(|(att, p)| (att.clone(), p)).collect();
        let mut mapping = Vec::new();
        for (id, p) in self.args().filter(|(_, p)| *p < 1.0) {
            let attack = Attack::new(eta.id(), id);
            let attack_probability = 1.0 - p;
            attacks.push((attack.clone(), attack_probability));
            mapping.push(MappingEntry {
                argument: id.to_owned(),
                original_probability: p,
                attack,
                attack_probability,
            });
        }
        let transformed = Praaf::new(args, attacks);
        debug_assert!(transformed.is_normal_form());
        Ok(NormalFormCertificate {
            original: self.clone(),
            transformed,
            eta: eta.clone(),
            mapping,
        })
    }

    /// Reverses the normal-form transformation: every attack `η -> a` with
    /// probability `q` becomes argument probability `1 - q`, and η is
    /// removed together with its outgoing attacks.
    pub fn from_normal_form(&self, eta: &GroundTruth) -> Result<Praaf> {
        let violations = self.validate();
        if !violations.is_empty() {
            return Err(Error::Invalid(Violations(violations)));
        }
        if let Some((id, _)) = self.args().find(|(_, p)| *p < 1.0) {
            return Err(Error::NotNormalForm(id.to_owned()));
        }
        if !self.has_arg(eta.id()) {
            return Err(Error::GroundTruthMissing(eta.id().to_owned()));
        }
        if let Some((attack, _)) = self.attacks().find(|(att, _)| att.target == eta.id()) {
            return Err(Error::GroundTruthAttacked {
                eta: eta.id().to_owned(),
                attacker: attack.source.clone(),
            });
        }
        let mut arg_probability: BTreeMap<String, f64> = self
            .args()
            .filter(|(id, _)| *id != eta.id())
            .map(|(id, _)| (id.to_owned(), 1.0))
            .collect();
        for (attack, q) in self.attacks().filter(|(att, _)| att.source == eta.id()) {
            if q >= 1.0 {
                return Err(Error::ImpliedZeroProbability {
                    attack: attack.clone(),
                    target: attack.target.clone(),
                });
            }
            arg_probability.insert(attack.target.clone(), 1.0 - q);
        }
        let attacks: Vec<(Attack, f64)> = self
            .attacks()
            .filter(|(att, _)| att.source != eta.id())
            .map(|(att, p)| (att.clone(), p))
            .collect();
        Ok(Praaf::new(arg_probability, attacks))
    }

    /// Structural equality up to a probability tolerance: same arguments,
    /// same attacks, the same certain/probabilistic split, and every
    /// probability within `tol`.
    pub fn approx_eq(&self, other: &Praaf, tol: f64) -> bool {
        if self.arg_count() != other.arg_count() || self.attack_count() != other.attack_count() {
            return false;
        }
        let args_match = self.args().all(|(id, p)| match other.arg_probability(id) {
            Some(q) => (p - q).abs() <= tol && (p >= 1.0) == (q >= 1.0),
            None => false,
        });
        let attacks_match = self.attacks().all(|(att, p)| {
            match other.attack_probability(&att.source, &att.target) {
                Some(q) => (p - q).abs() <= tol && (p >= 1.0) == (q >= 1.0),
                None => false,
            }
        });
        args_match && attacks_match
    }
}

impl ExtensionDistribution {
    /// Restricts a distribution over an η-framework to the extensions that
    /// contain η, re-keying each as the extension without η. Probabilities
    /// are unchanged.
    pub fn strip_eta(&self, eta: &GroundTruth) -> ExtensionDistribution {
        let entries: BTreeMap<ArgumentSet, f64> = self
            .entries()
            .filter(|(set, _)| set.contains(eta.id()))
            .map(|(set, p)| (set.without(eta.id()), p))
            .collect();
        ExtensionDistribution::from_entries(self.sigma(), self.mode(), entries)
    }
}

/// One disagreeing extension in an equivalence check. `left`/`right` hold
/// the probability on each side, `None` when the side lacks the entry.
#[derive(Debug, Clone, PartialEq)]
pub struct Discrepancy {
    pub extension: ArgumentSet,
    pub left: Option<f64>,
    pub right: Option<f64>,
}

/// Outcome of comparing the extension distribution of a framework with the
/// η-stripped distribution of another.
#[derive(Debug, Clone, PartialEq)]
pub struct EquivalenceReport {
    pub sigma: Semantics,
    pub tolerance: f64,
    /// Number of extensions compared (union of both key sets).
    pub compared: usize,
    pub discrepancies: Vec<Discrepancy>,
}

impl EquivalenceReport {
    pub fn pass(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

/// Checks distributional equivalence under σ: the distribution of `left`
/// must equal the distribution of `right` after ignoring η (when `right`
/// contains it), with identical key sets and probabilities within
/// `tolerance`. Both sides are computed over raw-mode worlds.
pub fn check_equivalence(
    left: &Praaf,
    right: &Praaf,
    eta: &GroundTruth,
    sigma: Semantics,
    tolerance: f64,
    limits: Limits,
) -> Result<EquivalenceReport> {
    let left_dist = left.extension_distribution(sigma, WorldMode::Raw, limits)?;
    let right_dist = right.extension_distribution(sigma, WorldMode::Raw, limits)?;
    let right_dist = if right.has_arg(eta.id()) {
        right_dist.strip_eta(eta)
    } else {
        right_dist
    };
    let left_entries = left_dist.into_entries();
    let right_entries = right_dist.into_entries();
    let mut keys: Vec<&ArgumentSet> = left_entries.keys().collect();
    keys.extend(right_entries.keys());
    keys.sort();
    keys.dedup();
    let compared = keys.len();
    let mut discrepancies = Vec::new();
    for key in keys {
        let l = left_entries.get(key).copied();
        let r = right_entries.get(key).copied();
        let agree = match (l, r) {
            (Some(l), Some(r)) => (l - r).abs() <= tolerance,
            _ => false,
        };
        if !agree {
            discrepancies.push(Discrepancy {
                extension: key.clone(),
                left: l,
                right: r,
            });
        }
    }
    Ok(EquivalenceReport {
        sigma,
        tolerance,
        compared,
        discrepancies,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_praaf() -> Praaf {
        Praaf::new(
            [("a", 1.0), ("b", 1.0), ("c", 0.4), ("d", 1.0)],
            [
                (Attack::new("a", "c"), 0.3),
                (Attack::new("b", "c"), 0.7),
                (Attack::new("c", "d"), 1.0),
            ],
        )
    }

    /// The transformed example: all arguments certain, plus eta -> c with
    /// probability 0.6.
    fn transformed_example() -> Praaf {
        Praaf::new(
            [("a", 1.0), ("b", 1.0), ("c", 1.0), ("d", 1.0), ("eta", 1.0)],
            [
                (Attack::new("a", "c"), 0.3),
                (Attack::new("b", "c"), 0.7),
                (Attack::new("c", "d"), 1.0),
                (Attack::new("eta", "c"), 0.6),
            ],
        )
    }

    fn eta() -> GroundTruth {
        GroundTruth::default()
    }

    fn set(ids: &[&str]) -> ArgumentSet {
        ArgumentSet::new(ids.iter().copied())
    }

    #[test]
    fn normal_form_detection() {
        assert!(transformed_example().is_normal_form());
        assert!(!example_praaf().is_normal_form());
        assert!(Praaf::new(Vec::<(String, f64)>::new(), []).is_normal_form());
    }

    #[test]
    fn transformation_matches_worked_example() {
        let cert = example_praaf().to_normal_form(&eta()).unwrap();
        assert_eq!(cert.transformed, transformed_example());
        assert!(cert.eta_added());
        assert_eq!(cert.mapping.len(), 1);
        let entry = &cert.mapping[0];
        assert_eq!(entry.argument, "c");
        assert_eq!(entry.original_probability, 0.4);
        assert_eq!(entry.attack, Attack::new("eta", "c"));
        assert!((entry.attack_probability - 0.6).abs() < 1e-12);
    }

    #[test]
    fn already_normal_framework_is_unchanged() {
        let praaf = transformed_example();
        let cert = praaf.to_normal_form(&eta()).unwrap();
        assert_eq!(cert.transformed, praaf);
        assert!(!cert.eta_added());
        assert!(cert.mapping.is_empty());
    }

    #[test]
    fn single_probabilistic_argument() {
        let praaf = Praaf::new([("x", 0.25)], []);
        let cert = praaf.to_normal_form(&eta()).unwrap();
        assert_eq!(cert.transformed.arg_count(), 2);
        assert!(cert.transformed.has_arg("eta"));
        let q = cert.transformed.attack_probability("eta", "x").unwrap();
        assert!((q - 0.75).abs() < 1e-12);
    }

    #[test]
    fn eta_collision_is_an_error() {
        let praaf = Praaf::new([("eta", 1.0), ("x", 0.5)], []);
        assert!(matches!(
            praaf.to_normal_form(&eta()),
            Err(Error::GroundTruthCollision(_))
        ));
        // A custom ground-truth id avoids the collision.
        let gt = GroundTruth::new("truth").unwrap();
        assert!(praaf.to_normal_form(&gt).is_ok());
    }

    #[test]
    fn transformation_size_bookkeeping() {
        let praaf = Praaf::new(
            [("a", 0.5), ("b", 0.25), ("c", 1.0)],
            [(Attack::new("a", "b"), 0.75), (Attack::new("c", "a"), 1.0)],
        );
        let cert = praaf.to_normal_form(&eta()).unwrap();
        assert_eq!(cert.transformed.arg_count(), praaf.arg_count() + 1);
        assert_eq!(
            cert.transformed.attack_count(),
            praaf.attack_count() + praaf.probabilistic_arg_count()
        );
        // eta is never attacked.
        assert!(cert
            .transformed
            .attacks()
            .all(|(att, _)| att.target != "eta"));
    }

    #[test]
    fn reverse_recovers_the_example() {
        let recovered = transformed_example().from_normal_form(&eta()).unwrap();
        assert!(recovered.approx_eq(&example_praaf(), 1e-9));
    }

    #[test]
    fn round_trip_is_identity_up_to_tolerance() {
        let praaf = Praaf::new(
            [("a", 0.5), ("b", 0.25), ("c", 1.0)],
            [(Attack::new("a", "b"), 0.75), (Attack::new("c", "a"), 1.0)],
        );
        let cert = praaf.to_normal_form(&eta()).unwrap();
        let recovered = cert.transformed.from_normal_form(&eta()).unwrap();
        assert!(recovered.approx_eq(&praaf, 1e-9));
    }

    #[test]
    fn reverse_requires_eta() {
        let praaf = Praaf::new([("a", 1.0)], []);
        assert!(matches!(
            praaf.from_normal_form(&eta()),
            Err(Error::GroundTruthMissing(_))
        ));
    }

    #[test]
    fn reverse_rejects_attacked_eta() {
        let praaf = Praaf::new([("a", 1.0), ("eta", 1.0)], [(Attack::new("a", "eta"), 1.0)]);
        assert!(matches!(
            praaf.from_normal_form(&eta()),
            Err(Error::GroundTruthAttacked { .. })
        ));
    }

    #[test]
    fn reverse_rejects_certain_eta_attack() {
        let praaf = Praaf::new([("a", 1.0), ("eta", 1.0)], [(Attack::new("eta", "a"), 1.0)]);
        assert!(matches!(
            praaf.from_normal_form(&eta()),
            Err(Error::ImpliedZeroProbability { .. })
        ));
    }

    #[test]
    fn acceptable_extension_requires_eta_membership() {
        let aaf = transformed_example().underlying_aaf().unwrap();
        assert!(is_acceptable_extension(&set(&["eta"]), &aaf, &eta()).unwrap());
        assert!(!is_acceptable_extension(&set(&[]), &aaf, &eta()).unwrap());
        assert!(is_acceptable_extension(&set(&["eta", "a", "b", "d"]), &aaf, &eta()).unwrap());
        let no_eta = example_praaf().underlying_aaf().unwrap();
        assert!(matches!(
            is_acceptable_extension(&set(&[]), &no_eta, &eta()),
            Err(Error::GroundTruthMissing(_))
        ));
    }

    #[test]
    fn strip_eta_rekeys_and_discards() {
        let praaf = transformed_example();
        let dist = praaf
            .extension_distribution(Semantics::Admissible, WorldMode::Raw, Limits::default())
            .unwrap();
        let stripped = dist.strip_eta(&eta());
        // {eta,a,b,d} becomes {a,b,d} with the same probability.
        assert!((stripped.probability(&set(&["a", "b", "d"])) - 0.916).abs() < 1e-9);
        // {eta} becomes the empty set.
        assert!((stripped.probability(&set(&[])) - 1.0).abs() < 1e-9);
        // Entries without eta are gone: {a,b} was admissible in every
        // world but is not acceptable.
        for (key, _) in stripped.entries() {
            assert!(!key.contains("eta"));
        }
        assert!(stripped.len() < dist.len());
    }

    #[test]
    fn equivalence_of_the_worked_pair() {
        let report = check_equivalence(
            &example_praaf(),
            &transformed_example(),
            &eta(),
            Semantics::Admissible,
            1e-9,
            Limits::default(),
        )
        .unwrap();
        assert!(report.pass(), "discrepancies: {:?}", report.discrepancies);
    }

    #[test]
    fn perturbed_transform_fails_with_witnesses() {
        let mut bad = transformed_example();
        // Shift the eta -> c probability away from 1 - 0.4.
        bad = Praaf::new(
            bad.args()
                .map(|(id, p)| (id.to_owned(), p))
                .collect::<Vec<_>>(),
            bad.attacks()
                .map(|(att, p)| {
                    let p = if att.source == "eta" { 0.5 } else { p };
                    (att.clone(), p)
                })
                .collect::<Vec<_>>(),
        );
        let report = check_equivalence(
            &example_praaf(),
            &bad,
            &eta(),
            Semantics::Admissible,
            1e-9,
            Limits::default(),
        )
        .unwrap();
        assert!(!report.pass());
        assert!(!report.discrepancies.is_empty());
        for d in &report.discrepancies {
            assert_ne!(d.left, d.right);
        }
    }

    #[test]
    fn isolated_eta_changes_nothing_after_stripping() {
        let certain = Praaf::from_aaf(&example_praaf().underlying_aaf().unwrap());
        let mut with_eta: Vec<(String, f64)> =
            certain.args().map(|(id, p)| (id.to_owned(), p)).collect();
        with_eta.push(("eta".into(), 1.0));
        let right = Praaf::new(
            with_eta,
            certain
                .attacks()
                .map(|(att, p)| (att.clone(), p))
                .collect::<Vec<_>>(),
        );
        for sigma in Semantics::ALL {
            let report =
                check_equivalence(&certain, &right, &eta(), sigma, 1e-9, Limits::default())
                    .unwrap();
            assert!(report.pass(), "sigma {sigma}: {:?}", report.discrepancies);
        }
    }
}
