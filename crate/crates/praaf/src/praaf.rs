//! Probabilistic argumentation frameworks.
//!
//! A [`Praaf`] attaches an existence probability in `(0, 1]` to every
//! argument and every attack. Elements with probability exactly 1 are
//! certain; everything else is a probabilistic element and doubles the
//! number of possible worlds.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::aaf::{is_valid_id, Aaf, Attack};
use crate::error::{Error, Result, Violation, Violations};
use crate::world::WorldMode;

/// Identity of a framework element, without its probability.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ElementId {
    Argument(String),
    Attack(Attack),
}

impl ElementId {
    /// Renders the element as a world literal: `c` / `!c` for arguments,
    /// `(a->c)` / `!(a->c)` for attacks.
    pub fn literal(&self, present: bool) -> String {
        let positive = match self {
            ElementId::Argument(id) => id.clone(),
            ElementId::Attack(att) => att.to_string(),
        };
        if present {
            positive
        } else {
            format!("!{positive}")
        }
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementId::Argument(id) => write!(f, "argument `{id}`"),
            ElementId::Attack(att) => write!(f, "attack {att}"),
        }
    }
}

/// An element whose existence is uncertain: probability strictly below 1.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilisticElement {
    pub id: ElementId,
    pub probability: f64,
}

/// A probabilistic abstract argumentation framework.
///
/// Stored as probability maps keyed by argument id and by attack, so every
/// element has exactly one probability entry by construction. Use
/// [`Praaf::validate`] to check the remaining invariants (probability
/// ranges, referential integrity, id syntax).
#[derive(Debug, Clone, PartialEq)]
pub struct Praaf {
    args: BTreeMap<String, f64>,
    attacks: BTreeMap<Attack, f64>,
}

impl Praaf {
    pub fn new<A, S, T>(args: A, attacks: T) -> Praaf
    where
        A: IntoIterator<Item = (S, f64)>,
        S: Into<String>,
        T: IntoIterator<Item = (Attack, f64)>,
    {
        Praaf {
            args: args.into_iter().map(|(id, p)| (id.into(), p)).collect(),
            attacks: attacks.into_iter().collect(),
        }
    }

    /// The all-certain framework over an [`Aaf`].
    pub fn from_aaf(aaf: &Aaf) -> Praaf {
        Praaf {
            args: aaf.args().map(|id| (id.to_owned(), 1.0)).collect(),
            attacks: aaf.attacks().map(|att| (att.clone(), 1.0)).collect(),
        }
    }

    /// Checks every framework invariant and reports all violations found.
    /// An empty report means the framework is valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut violations = Vec::new();
        let in_range = |p: f64| p > 0.0 && p <= 1.0;
        for (id, &p) in &self.args {
            if !is_valid_id(id) {
                violations.push(Violation::InvalidId { id: id.clone() });
            }
            if !in_range(p) {
                violations.push(Violation::ProbabilityOutOfRange {
                    element: format!("argument `{id}`"),
                    value: p,
                });
            }
        }
        for (att, &p) in &self.attacks {
            for endpoint in [&att.source, &att.target] {
                if !self.args.contains_key(endpoint) {
                    violations.push(Violation::UnknownEndpoint {
                        attack: att.clone(),
                        endpoint: endpoint.clone(),
                    });
                }
            }
            if !in_range(p) {
                violations.push(Violation::ProbabilityOutOfRange {
                    element: format!("attack {att}"),
                    value: p,
                });
            }
        }
        violations
    }

    /// Consumes the framework, returning it only if valid.
    pub fn validated(self) -> Result<Praaf> {
        let violations = self.validate();
        if violations.is_empty() {
            Ok(self)
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

    pub fn has_arg(&self, id: &str) -> bool {
        self.args.contains_key(id)
    }

    /// Arguments with probabilities, in lexicographic order.
    pub fn args(&self) -> impl Iterator<Item = (&str, f64)> {
        self.args.iter().map(|(id, &p)| (id.as_str(), p))
    }

    /// Attacks with probabilities, ordered by (source, target).
    pub fn attacks(&self) -> impl Iterator<Item = (&Attack, f64)> {
        self.attacks.iter().map(|(att, &p)| (att, p))
    }

    pub fn arg_probability(&self, id: &str) -> Option<f64> {
        self.args.get(id).copied()
    }

    pub fn attack_probability(&self, source: &str, target: &str) -> Option<f64> {
        self.attacks
            .get(&Attack::new(source.to_owned(), target.to_owned()))
            .copied()
    }

    /// All probabilistic elements in canonical order: attacks first
    /// (lexicographic by source then target), then arguments
    /// (lexicographic). This order defines the bit order for world
    /// enumeration, with the first element in the most significant
    /// position; arguments therefore occupy the fastest-varying bits,
    /// matching the usual tabulation of possible worlds.
    pub fn probabilistic_elements(&self) -> Vec<ProbabilisticElement> {
        let mut elements: Vec<ProbabilisticElement> = self
            .attacks
            .iter()
            .filter(|(_, &p)| p < 1.0)
            .map(|(att, &p)| ProbabilisticElement {
                id: ElementId::Attack(att.clone()),
                probability: p,
            })
            .collect();
        elements.extend(self.args.iter().filter(|(_, &p)| p < 1.0).map(|(id, &p)| {
            ProbabilisticElement {
                id: ElementId::Argument(id.clone()),
                probability: p,
            }
        }));
        elements
    }

    pub fn probabilistic_arg_count(&self) -> usize {
        self.args.values().filter(|&&p| p < 1.0).count()
    }

    /// True when the framework has no probabilistic elements at all.
    pub fn is_certain(&self) -> bool {
        self.args.values().all(|&p| p >= 1.0) && self.attacks.values().all(|&p| p >= 1.0)
    }

    /// The framework's graph with probabilities ignored.
    pub fn underlying_aaf(&self) -> Result<Aaf> {
        Aaf::new(self.args.keys().cloned(), self.attacks.keys().cloned())
    }

    fn check_assignment_length(
        &self,
        elements: &[ProbabilisticElement],
        present: &[bool],
    ) -> Result<()> {
        if present.len() != elements.len() {
            return Err(Error::IncompleteAssignment {
                got: present.len(),
                expected: elements.len(),
            });
        }
        Ok(())
    }

    /// Arguments present under an assignment: certain ones plus the
    /// probabilistic ones assigned true.
    fn present_args<'a>(
        &'a self,
        elements: &'a [ProbabilisticElement],
        present: &[bool],
    ) -> BTreeSet<&'a str> {
        let mut out: BTreeSet<&str> = self
            .args
            .iter()
            .filter(|(_, &p)| p >= 1.0)
            .map(|(id, _)| id.as_str())
            .collect();
        for (element, &v) in elements.iter().zip(present) {
            if let ElementId::Argument(id) = &element.id {
                if v {
                    out.insert(id);
                }
            }
        }
        out
    }

    pub(crate) fn realize_of(
        &self,
        elements: &[ProbabilisticElement],
        present: &[bool],
    ) -> Result<Aaf> {
        let args = self.present_args(elements, present);
        let mut attacks: Vec<&Attack> = self
            .attacks
            .iter()
            .filter(|(_, &p)| p >= 1.0)
            .map(|(att, _)| att)
            .collect();
        for (element, &v) in elements.iter().zip(present) {
            if let ElementId::Attack(att) = &element.id {
                if v {
                    attacks.push(att);
                }
            }
        }
        let attacks = attacks
            .into_iter()
            .filter(|att| args.contains(att.source.as_str()) && args.contains(att.target.as_str()))
            .cloned();
        Aaf::new(args.iter().map(|s| s.to_owned()), attacks)
    }

    pub(crate) fn proper_of(&self, elements: &[ProbabilisticElement], present: &[bool]) -> bool {
        let args = self.present_args(elements, present);
        let dangling = |att: &Attack| {
            !args.contains(att.source.as_str()) || !args.contains(att.target.as_str())
        };
        let certain_ok = self
            .attacks
            .iter()
            .filter(|(_, &p)| p >= 1.0)
            .all(|(att, _)| !dangling(att));
        let assigned_ok = elements
            .iter()
            .zip(present)
            .all(|(element, &v)| match &element.id {
                ElementId::Attack(att) => !v || !dangling(att),
                ElementId::Argument(_) => true,
            });
        certain_ok && assigned_ok
    }

    pub(crate) fn probability_of(
        &self,
        elements: &[ProbabilisticElement],
        present: &[bool],
        mode: WorldMode,
    ) -> f64 {
        let args = self.present_args(elements, present);
        let mut probability = 1.0;
        for (element, &v) in elements.iter().zip(present) {
            if mode == WorldMode::Induced {
                if let ElementId::Attack(att) = &element.id {
                    if !args.contains(att.source.as_str()) || !args.contains(att.target.as_str()) {
                        continue;
                    }
                }
            }
            probability *= if v {
                element.probability
            } else {
                1.0 - element.probability
            };
        }
        probability
    }

    /// Realizes the AAF of one possible world. `present` runs parallel to
    /// [`Praaf::probabilistic_elements`]: `present[k]` states whether
    /// element `k` exists in the world. The realized framework keeps the
    /// certain arguments plus the present probabilistic ones, and every
    /// surviving attack whose endpoints both survive; attacks that lose an
    /// endpoint are dropped.
    pub fn realize(&self, present: &[bool]) -> Result<Aaf> {
        let elements = self.probabilistic_elements();
        self.check_assignment_length(&elements, present)?;
        self.realize_of(&elements, present)
    }

    /// Whether the literal element set of a raw-mode world forms a
    /// well-formed AAF on its own: false iff some certain or present
    /// attack has an absent endpoint.
    pub fn assignment_is_proper(&self, present: &[bool]) -> Result<bool> {
        let elements = self.probabilistic_elements();
        self.check_assignment_length(&elements, present)?;
        Ok(self.proper_of(&elements, present))
    }

    /// Probability of one complete assignment under the given mode.
    ///
    /// Raw mode multiplies a factor for every probabilistic element:
    /// `P(e)` when present, `1 - P(e)` when absent. Induced mode reads
    /// attack probabilities conditionally: an attack contributes a factor
    /// only when both of its endpoints are present, and is conditioned out
    /// (factor 1, its assignment entry ignored) otherwise.
    pub fn world_probability(&self, present: &[bool], mode: WorldMode) -> Result<f64> {
        let elements = self.probabilistic_elements();
        self.check_assignment_length(&elements, present)?;
        Ok(self.probability_of(&elements, present, mode))
    }

    /// The induced-AAF check: `aaf` is induced from this framework
    /// iff its arguments and attacks come from here, every certain argument
    /// is kept, and every attack that is certain and runs between certain
    /// arguments is kept.
    pub fn induces(&self, aaf: &Aaf) -> bool {
        let args_from_praaf = aaf.args().all(|id| self.args.contains_key(id));
        let atts_from_praaf = aaf.attacks().all(|att| {
            self.attacks.contains_key(att) && aaf.has_arg(&att.source) && aaf.has_arg(&att.target)
        });
        let certain_args_kept = self
            .args
            .iter()
            .filter(|(_, &p)| p >= 1.0)
            .all(|(id, _)| aaf.has_arg(id));
        let certain_atts_kept = self.attacks.iter().all(|(att, &p)| {
            let forced = p >= 1.0
                && self.args.get(&att.source).copied() == Some(1.0)
                && self.args.get(&att.target).copied() == Some(1.0);
            !forced || aaf.has_attack(&att.source, &att.target)
        });
        args_from_praaf && atts_from_praaf && certain_args_kept && certain_atts_kept
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The probabilistic running example: P(c) = 0.4, P(a->c) = 0.3,
    /// P(b->c) = 0.7, everything else certain.
    pub(crate) fn example_praaf() -> Praaf {
        Praaf::new(
            [("a", 1.0), ("b", 1.0), ("c", 0.4), ("d", 1.0)],
            [
                (Attack::new("a", "c"), 0.3),
                (Attack::new("b", "c"), 0.7),
                (Attack::new("c", "d"), 1.0),
            ],
        )
    }

    #[test]
    fn example_is_valid() {
        assert!(example_praaf().validate().is_empty());
    }

    #[test]
    fn zero_probability_is_a_violation() {
        let praaf = Praaf::new([("c", 0.0)], []);
        let violations = praaf.validate();
        assert_eq!(violations.len(), 1);
        assert!(violations[0].to_string().contains("probability 0"));
    }

    #[test]
    fn unknown_endpoint_is_a_violation() {
        let praaf = Praaf::new([("x", 1.0)], [(Attack::new("x", "y"), 1.0)]);
        let violations = praaf.validate();
        assert_eq!(violations.len(), 1);
        assert!(violations[0]
            .to_string()
            .contains("undeclared argument `y`"));
    }

    #[test]
    fn probability_above_one_is_a_violation() {
        let praaf = Praaf::new([("x", 1.5)], []);
        assert_eq!(praaf.validate().len(), 1);
        assert!(Praaf::new([("x", f64::NAN)], []).validate().len() == 1);
    }

    #[test]
    fn probabilistic_elements_in_canonical_order() {
        let elements = example_praaf().probabilistic_elements();
        let ids: Vec<String> = elements.iter().map(|e| e.id.literal(true)).collect();
        assert_eq!(ids, vec!["(a->c)", "(b->c)", "c"]);
        let probs: Vec<f64> = elements.iter().map(|e| e.probability).collect();
        assert_eq!(probs, vec![0.3, 0.7, 0.4]);
    }

    #[test]
    fn certain_praaf_has_no_elements() {
        let aaf = example_praaf().underlying_aaf().unwrap();
        let praaf = Praaf::from_aaf(&aaf);
        assert!(praaf.probabilistic_elements().is_empty());
        assert!(praaf.is_certain());
    }

    #[test]
    fn realize_drops_attacks_with_absent_endpoints() {
        let praaf = example_praaf();
        // !(a->c), (b->c), !c
        let aaf = praaf.realize(&[false, true, false]).unwrap();
        assert_eq!(aaf.arg_count(), 3);
        assert_eq!(aaf.attack_count(), 0);
        assert!(aaf.has_arg("a") && aaf.has_arg("b") && aaf.has_arg("d"));
    }

    #[test]
    fn realize_full_assignment_gives_underlying_graph() {
        let praaf = example_praaf();
        let aaf = praaf.realize(&[true, true, true]).unwrap();
        assert_eq!(aaf, praaf.underlying_aaf().unwrap());
    }

    #[test]
    fn realize_checks_assignment_length() {
        let praaf = example_praaf();
        assert!(matches!(
            praaf.realize(&[true]),
            Err(Error::IncompleteAssignment {
                got: 1,
                expected: 3
            })
        ));
    }

    #[test]
    fn world_probability_raw_examples() {
        let praaf = example_praaf();
        let p = praaf
            .world_probability(&[false, false, false], WorldMode::Raw)
            .unwrap();
        assert!((p - 0.126).abs() < 1e-12);
        let p = praaf
            .world_probability(&[true, true, true], WorldMode::Raw)
            .unwrap();
        assert!((p - 0.084).abs() < 1e-12);
    }

    #[test]
    fn world_probability_induced_conditions_out_dead_attacks() {
        let praaf = example_praaf();
        // With c absent, neither a->c nor b->c contributes a factor.
        let p = praaf
            .world_probability(&[false, false, false], WorldMode::Induced)
            .unwrap();
        assert!((p - 0.6).abs() < 1e-12);
        let p = praaf
            .world_probability(&[true, true, false], WorldMode::Induced)
            .unwrap();
        assert!((p - 0.6).abs() < 1e-12);
    }

    #[test]
    fn proper_flags_match_dangling_attacks() {
        let praaf = example_praaf();
        // !c with certain c->d dangling
        assert!(!praaf.assignment_is_proper(&[false, false, false]).unwrap());
        assert!(praaf.assignment_is_proper(&[false, false, true]).unwrap());
        // (b->c) present while c absent
        assert!(!praaf.assignment_is_proper(&[false, true, false]).unwrap());
    }

    #[test]
    fn induces_examples() {
        let praaf = example_praaf();
        // {a,b,d} with no attacks: c is not forced (P(c) < 1) and c->d is
        // not forced either, so the sub-AAF is induced.
        let sub = Aaf::new(["a", "b", "d"], []).unwrap();
        assert!(praaf.induces(&sub));
        let full = praaf.underlying_aaf().unwrap();
        assert!(praaf.induces(&full));
        // b and d are certain but missing here.
        let tiny = Aaf::new(["a"], []).unwrap();
        assert!(!praaf.induces(&tiny));
    }

    #[test]
    fn induces_requires_attacks_from_praaf() {
        let praaf = example_praaf();
        let foreign = Aaf::new(["a", "b", "c", "d"], [Attack::new("d", "a")]).unwrap();
        assert!(!praaf.induces(&foreign));
    }
}
