//! Independent brute-force oracle used by the integration tests.
//!
//! Everything here is implemented from the definitions over plain string
//! sets, with no bitmasks, no fixed-point shortcuts, and a different world
//! recursion order than the library's enumerator. Agreement between the
//! two routes is the point of these helpers, so they must not call into
//! the library's computation paths.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use praaf::{Aaf, ArgumentSet, Praaf, Semantics};

pub type Set = BTreeSet<String>;
pub type Edge = (String, String);

/// Plain-data view of a concrete framework.
#[derive(Debug, Clone, PartialEq)]
pub struct NaiveAaf {
    pub args: Set,
    pub atts: BTreeSet<Edge>,
}

impl NaiveAaf {
    pub fn from_lib(aaf: &Aaf) -> NaiveAaf {
        NaiveAaf {
            args: aaf.args().map(str::to_owned).collect(),
            atts: aaf
                .attacks()
                .map(|att| (att.source.clone(), att.target.clone()))
                .collect(),
        }
    }
}

pub fn to_lib_set(set: &Set) -> ArgumentSet {
    ArgumentSet::new(set.iter().cloned())
}

pub fn from_lib_set(set: &ArgumentSet) -> Set {
    set.members().map(str::to_owned).collect()
}

pub fn naive_conflict_free(s: &Set, g: &NaiveAaf) -> bool {
    !g.atts
        .iter()
        .any(|(source, target)| s.contains(source) && s.contains(target))
}

pub fn naive_acceptable(arg: &str, s: &Set, g: &NaiveAaf) -> bool {
    g.atts
        .iter()
        .filter(|(_, target)| target == arg)
        .all(|(attacker, _)| {
            g.atts
                .iter()
                .any(|(defender, victim)| victim == attacker && s.contains(defender))
        })
}

pub fn naive_characteristic(s: &Set, g: &NaiveAaf) -> Set {
    g.args
        .iter()
        .filter(|arg| naive_acceptable(arg, s, g))
        .cloned()
        .collect()
}

pub fn naive_admissible(s: &Set, g: &NaiveAaf) -> bool {
    naive_conflict_free(s, g) && s.iter().all(|arg| naive_acceptable(arg, s, g))
}

pub fn naive_complete(s: &Set, g: &NaiveAaf) -> bool {
    naive_admissible(s, g) && naive_characteristic(s, g) == *s
}

pub fn naive_stable(s: &Set, g: &NaiveAaf) -> bool {
    naive_conflict_free(s, g)
        && g.args
            .iter()
            .filter(|arg| !s.contains(*arg))
            .all(|outside| {
                g.atts
                    .iter()
                    .any(|(source, target)| target == outside && s.contains(source))
            })
}

fn powerset(args: &Set) -> Vec<Set> {
    let items: Vec<&String> = args.iter().collect();
    let mut out = vec![Set::new()];
    for item in items {
        let mut extended = Vec::new();
        for existing in &out {
            let mut with = existing.clone();
            with.insert((*item).clone());
            extended.push(with);
        }
        out.extend(extended);
    }
    out
}

/// All σ-extensions by scanning the full powerset. Grounded is computed as
/// the ⊆-least complete extension, a characterization independent of the
/// library's fixed-point iteration.
pub fn naive_extensions(g: &NaiveAaf, sigma: Semantics) -> BTreeSet<Set> {
    let subsets = powerset(&g.args);
    match sigma {
        Semantics::ConflictFree => subsets
            .into_iter()
            .filter(|s| naive_conflict_free(s, g))
            .collect(),
        Semantics::Admissible => subsets
            .into_iter()
            .filter(|s| naive_admissible(s, g))
            .collect(),
        Semantics::Complete => subsets
            .into_iter()
            .filter(|s| naive_complete(s, g))
            .collect(),
        Semantics::Stable => subsets.into_iter().filter(|s| naive_stable(s, g)).collect(),
        Semantics::Preferred => {
            let admissible: Vec<Set> = subsets
                .into_iter()
                .filter(|s| naive_admissible(s, g))
                .collect();
            admissible
                .iter()
                .filter(|s| {
                    !admissible
                        .iter()
                        .any(|other| *other != **s && s.is_subset(other))
                })
                .cloned()
                .collect()
        }
        Semantics::Grounded => {
            let complete: Vec<Set> = powerset(&g.args)
                .into_iter()
                .filter(|s| naive_complete(s, g))
                .collect();
            let least = complete
                .iter()
                .find(|candidate| complete.iter().all(|other| candidate.is_subset(other)))
                .expect("every AAF has a least complete extension");
            BTreeSet::from([least.clone()])
        }
    }
}

/// Plain-data view of a probabilistic framework.
#[derive(Debug, Clone, PartialEq)]
pub struct NaivePraaf {
    pub args: BTreeMap<String, f64>,
    pub atts: BTreeMap<Edge, f64>,
}

impl NaivePraaf {
    pub fn from_lib(praaf: &Praaf) -> NaivePraaf {
        NaivePraaf {
            args: praaf.args().map(|(id, p)| (id.to_owned(), p)).collect(),
            atts: praaf
                .attacks()
                .map(|(att, p)| ((att.source.clone(), att.target.clone()), p))
                .collect(),
        }
    }

    fn realize(&self, present_args: &Set, present_atts: &BTreeSet<Edge>) -> NaiveAaf {
        let atts = present_atts
            .iter()
            .filter(|(source, target)| {
                present_args.contains(source) && present_args.contains(target)
            })
            .cloned()
            .collect();
        NaiveAaf {
            args: present_args.clone(),
            atts,
        }
    }
}

/// Materializes every raw-mode world by recursion, branching over the
/// probabilistic ARGUMENTS first and the attacks second — deliberately a
/// different order than the library's canonical one, so that agreement on
/// distributions is evidence of order independence.
pub fn naive_raw_worlds(p: &NaivePraaf) -> Vec<(NaiveAaf, f64)> {
    let prob_args: Vec<(&String, f64)> = p
        .args
        .iter()
        .map(|(id, &pr)| (id, pr))
        .filter(|(_, pr)| *pr < 1.0)
        .collect();
    let prob_atts: Vec<(&Edge, f64)> = p
        .atts
        .iter()
        .map(|(e, &pr)| (e, pr))
        .filter(|(_, pr)| *pr < 1.0)
        .collect();
    let certain_args: Set = p
        .args
        .iter()
        .filter(|(_, &pr)| pr >= 1.0)
        .map(|(id, _)| id.clone())
        .collect();
    let certain_atts: BTreeSet<Edge> = p
        .atts
        .iter()
        .filter(|(_, &pr)| pr >= 1.0)
        .map(|(e, _)| e.clone())
        .collect();
    let mut worlds = Vec::new();
    let mut stack: Vec<(usize, Set, f64)> = vec![(0, certain_args, 1.0)];
    // First enumerate argument assignments recursively.
    let mut arg_assignments: Vec<(Set, f64)> = Vec::new();
    while let Some((k, args, weight)) = stack.pop() {
        if k == prob_args.len() {
            arg_assignments.push((args, weight));
            continue;
        }
        let (id, pr) = prob_args[k];
        let mut with = args.clone();
        with.insert(id.clone());
        stack.push((k + 1, with, weight * pr));
        stack.push((k + 1, args, weight * (1.0 - pr)));
    }
    // Then attack assignments under each.
    for (args, weight) in arg_assignments {
        let mut att_stack: Vec<(usize, BTreeSet<Edge>, f64)> =
            vec![(0, certain_atts.clone(), weight)];
        while let Some((k, atts, w)) = att_stack.pop() {
            if k == prob_atts.len() {
                worlds.push((p.realize(&args, &atts), w));
                continue;
            }
            let (edge, pr) = prob_atts[k];
            let mut with = atts.clone();
            with.insert(edge.clone());
            att_stack.push((k + 1, with, w * pr));
            att_stack.push((k + 1, atts, w * (1.0 - pr)));
        }
    }
    worlds
}

/// Materializes every induced-mode world: argument assignments first, then
/// only the attacks whose endpoints are both present.
pub fn naive_induced_worlds(p: &NaivePraaf) -> Vec<(NaiveAaf, f64)> {
    let prob_args: Vec<(&String, f64)> = p
        .args
        .iter()
        .map(|(id, &pr)| (id, pr))
        .filter(|(_, pr)| *pr < 1.0)
        .collect();
    let certain_args: Set = p
        .args
        .iter()
        .filter(|(_, &pr)| pr >= 1.0)
        .map(|(id, _)| id.clone())
        .collect();
    let mut arg_assignments: Vec<(Set, f64)> = Vec::new();
    let mut stack: Vec<(usize, Set, f64)> = vec![(0, certain_args, 1.0)];
    while let Some((k, args, weight)) = stack.pop() {
        if k == prob_args.len() {
            arg_assignments.push((args, weight));
            continue;
        }
        let (id, pr) = prob_args[k];
        let mut with = args.clone();
        with.insert(id.clone());
        stack.push((k + 1, with, weight * pr));
        stack.push((k + 1, args, weight * (1.0 - pr)));
    }
    let mut worlds = Vec::new();
    for (args, weight) in arg_assignments {
        let live: Vec<(&Edge, f64)> = p
            .atts
            .iter()
            .map(|(e, &pr)| (e, pr))
            .filter(|((source, target), pr)| {
                *pr < 1.0 && args.contains(source) && args.contains(target)
            })
            .collect();
        let base: BTreeSet<Edge> = p
            .atts
            .iter()
            .filter(|(_, &pr)| pr >= 1.0)
            .map(|(e, _)| e.clone())
            .collect();
        let mut att_stack: Vec<(usize, BTreeSet<Edge>, f64)> = vec![(0, base, weight)];
        while let Some((k, atts, w)) = att_stack.pop() {
            if k == live.len() {
                worlds.push((p.realize(&args, &atts), w));
                continue;
            }
            let (edge, pr) = live[k];
            let mut with = atts.clone();
            with.insert(edge.clone());
            att_stack.push((k + 1, with, w * pr));
            att_stack.push((k + 1, atts, w * (1.0 - pr)));
        }
    }
    worlds
}

/// Materialize-then-group distribution over σ-extensions.
pub fn naive_distribution(p: &NaivePraaf, sigma: Semantics, induced: bool) -> BTreeMap<Set, f64> {
    let worlds = if induced {
        naive_induced_worlds(p)
    } else {
        naive_raw_worlds(p)
    };
    let mut out: BTreeMap<Set, f64> = BTreeMap::new();
    for (aaf, weight) in worlds {
        for extension in naive_extensions(&aaf, sigma) {
            *out.entry(extension).or_insert(0.0) += weight;
        }
    }
    out.retain(|_, p| *p > 0.0);
    out
}

/// Compares a library distribution with a naive one: identical key sets,
/// probabilities within `tol`.
pub fn distributions_agree(
    lib: &praaf::ExtensionDistribution,
    naive: &BTreeMap<Set, f64>,
    tol: f64,
) -> std::result::Result<(), String> {
    let lib_map: BTreeMap<Set, f64> = lib
        .entries()
        .map(|(set, p)| (from_lib_set(set), p))
        .collect();
    let lib_keys: BTreeSet<&Set> = lib_map.keys().collect();
    let naive_keys: BTreeSet<&Set> = naive.keys().collect();
    if lib_keys != naive_keys {
        return Err(format!(
            "key sets differ: lib-only {:?}, naive-only {:?}",
            lib_keys.difference(&naive_keys).collect::<Vec<_>>(),
            naive_keys.difference(&lib_keys).collect::<Vec<_>>()
        ));
    }
    for (key, lib_p) in &lib_map {
        let naive_p = naive[key];
        if (lib_p - naive_p).abs() > tol {
            return Err(format!(
                "probability of {key:?} differs: lib {lib_p}, naive {naive_p}"
            ));
        }
    }
    Ok(())
}
