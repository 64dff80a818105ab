//! Possible-world enumeration.
//!
//! A possible world is one present/absent assignment to the probabilistic
//! elements of a framework. Raw mode assigns every element independently,
//! yielding exactly `2^N` worlds. Induced mode assigns arguments first and
//! then only those attacks whose endpoints both survive; attacks that lose
//! an endpoint are conditioned out rather than assigned, following the
//! conditional reading of attack probabilities.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::aaf::Aaf;
use crate::error::{Error, Result, Violations};
use crate::praaf::{ElementId, Praaf, ProbabilisticElement};
use crate::semantics::DEFAULT_ARGUMENT_CAP;

/// How possible worlds are generated from a framework.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WorldMode {
    /// Independent assignment to every probabilistic element.
    Raw,
    /// Argument assignments first; attack probabilities read conditionally
    /// on both endpoints being present.
    Induced,
}

impl WorldMode {
    pub fn name(self) -> &'static str {
        match self {
            WorldMode::Raw => "raw",
            WorldMode::Induced => "induced",
        }
    }
}

impl std::fmt::Display for WorldMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Default cap on the number of probabilistic elements (`2^20` worlds).
pub const DEFAULT_ELEMENT_CAP: usize = 20;

/// Bit counters cannot address more than 62 elements regardless of the
/// configured cap.
const HARD_ELEMENT_LIMIT: usize = 62;

/// Enumeration caps. Exceeding either produces a capacity error up front
/// instead of an open-ended computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of probabilistic elements for world enumeration.
    pub max_elements: usize,
    /// Maximum number of arguments for extension enumeration over a
    /// realized AAF.
    pub max_arguments: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_elements: DEFAULT_ELEMENT_CAP,
            max_arguments: DEFAULT_ARGUMENT_CAP,
        }
    }
}

/// One possible world: its assignment, probability, and realized AAF.
#[derive(Debug, Clone)]
pub struct World {
    index: u64,
    elements: Arc<[ProbabilisticElement]>,
    present: Vec<bool>,
    assigned: Vec<bool>,
    probability: f64,
    proper: bool,
    aaf: Aaf,
}

impl World {
    /// Position of this world in the enumeration order, starting at 0.
    pub fn index(&self) -> u64 {
        self.index
    }

    pub fn probability(&self) -> f64 {
        self.probability
    }

    /// False iff the literal element set of this world contains an attack
    /// with an absent endpoint. Induced worlds are always proper because
    /// such attacks are conditioned out instead of assigned.
    pub fn proper(&self) -> bool {
        self.proper
    }

    /// The realized AAF (attacks with absent endpoints dropped).
    pub fn aaf(&self) -> &Aaf {
        &self.aaf
    }

    /// The probabilistic elements of the owning framework, in canonical
    /// order.
    pub fn elements(&self) -> &[ProbabilisticElement] {
        &self.elements
    }

    /// The assigned value of element `k`, or `None` when the element is
    /// conditioned out in this world (induced mode only).
    pub fn value(&self, k: usize) -> Option<bool> {
        if self.assigned[k] {
            Some(self.present[k])
        } else {
            None
        }
    }

    /// World literals such as `!(a->c) (b->c) c`, in canonical element
    /// order, skipping conditioned-out elements.
    pub fn literals(&self) -> Vec<String> {
        self.elements
            .iter()
            .enumerate()
            .filter_map(|(k, e)| self.value(k).map(|v| e.id.literal(v)))
            .collect()
    }

    /// The assignment rendered as a single space-separated string. A world
    /// with nothing to assign renders as `(certain)`.
    pub fn assignment_string(&self) -> String {
        let literals = self.literals();
        if literals.is_empty() {
            "(certain)".to_owned()
        } else {
            literals.join(" ")
        }
    }
}

/// Streaming iterator over the possible worlds of a framework, in
/// deterministic canonical order.
///
/// Raw mode treats the assignment as a binary counter over the canonical
/// element order, the last element occupying the least significant bit.
/// Induced mode runs the same counter over argument elements in the outer
/// loop and over the live attacks in the inner loop.
pub struct Worlds<'a> {
    praaf: &'a Praaf,
    mode: WorldMode,
    elements: Arc<[ProbabilisticElement]>,
    /// Element slots of the probabilistic arguments / attacks.
    arg_slots: Vec<usize>,
    att_slots: Vec<usize>,
    /// Probabilistic argument id -> element slot.
    arg_slot_by_id: BTreeMap<String, usize>,
    emitted: u64,
    done: bool,
    // Raw-mode counter.
    raw_next: u64,
    raw_total: u64,
    // Induced-mode nested counters.
    induced_started: bool,
    arg_current: u64,
    arg_total: u64,
    live: Vec<usize>,
    att_next: u64,
    att_total: u64,
}

impl<'a> Worlds<'a> {
    pub(crate) fn new(praaf: &'a Praaf, mode: WorldMode, limits: Limits) -> Result<Self> {
        let violations = praaf.validate();
        if !violations.is_empty() {
            return Err(Error::Invalid(Violations(violations)));
        }
        let elements: Arc<[ProbabilisticElement]> = praaf.probabilistic_elements().into();
        let cap = limits.max_elements.min(HARD_ELEMENT_LIMIT);
        if elements.len() > cap {
            return Err(Error::TooManyElements {
                count: elements.len(),
                cap,
            });
        }
        let mut arg_slots = Vec::new();
        let mut att_slots = Vec::new();
        let mut arg_slot_by_id = BTreeMap::new();
        for (k, element) in elements.iter().enumerate() {
            match &element.id {
                ElementId::Argument(id) => {
                    arg_slots.push(k);
                    arg_slot_by_id.insert(id.clone(), k);
                }
                ElementId::Attack(_) => att_slots.push(k),
            }
        }
        let raw_total = 1u64 << elements.len();
        let arg_total = 1u64 << arg_slots.len();
        Ok(Worlds {
            praaf,
            mode,
            elements,
            arg_slots,
            att_slots,
            arg_slot_by_id,
            emitted: 0,
            done: false,
            raw_next: 0,
            raw_total,
            induced_started: false,
            arg_current: 0,
            arg_total,
            live: Vec::new(),
            att_next: 0,
            att_total: 0,
        })
    }

    pub fn mode(&self) -> WorldMode {
        self.mode
    }

    pub fn elements(&self) -> &[ProbabilisticElement] {
        &self.elements
    }

    /// Present flags of the argument elements for one counter value, the
    /// first argument element in the most significant position.
    fn arg_presence(&self, counter: u64) -> Vec<(usize, bool)> {
        let n = self.arg_slots.len();
        self.arg_slots
            .iter()
            .enumerate()
            .map(|(j, &slot)| (slot, counter & (1 << (n - 1 - j)) != 0))
            .collect()
    }

    /// True when `id` exists under the given argument presence flags.
    fn arg_is_present(&self, id: &str, presence: &[(usize, bool)]) -> bool {
        match self.arg_slot_by_id.get(id) {
            Some(&slot) => presence
                .iter()
                .find(|(s, _)| *s == slot)
                .map(|&(_, v)| v)
                .unwrap_or(false),
            // Not a probabilistic argument: present iff declared (certain).
            None => self.praaf.has_arg(id),
        }
    }

    /// Attack element slots whose endpoints are both present.
    fn live_attacks(&self, presence: &[(usize, bool)]) -> Vec<usize> {
        self.att_slots
            .iter()
            .copied()
            .filter(|&slot| match &self.elements[slot].id {
                ElementId::Attack(att) => {
                    self.arg_is_present(&att.source, presence)
                        && self.arg_is_present(&att.target, presence)
                }
                ElementId::Argument(_) => unreachable!("att_slots holds attacks"),
            })
            .collect()
    }

    fn build_world(&mut self, present: Vec<bool>, assigned: Vec<bool>) -> World {
        let probability = self
            .praaf
            .probability_of(&self.elements, &present, self.mode);
        let proper = match self.mode {
            WorldMode::Raw => self.praaf.proper_of(&self.elements, &present),
            WorldMode::Induced => true,
        };
        let aaf = self
            .praaf
            .realize_of(&self.elements, &present)
            .expect("validated framework realizes well-formed worlds");
        let world = World {
            index: self.emitted,
            elements: Arc::clone(&self.elements),
            present,
            assigned,
            probability,
            proper,
            aaf,
        };
        self.emitted += 1;
        world
    }

    fn next_raw(&mut self) -> Option<World> {
        if self.raw_next == self.raw_total {
            self.done = true;
            return None;
        }
        let counter = self.raw_next;
        self.raw_next += 1;
        let n = self.elements.len();
        let present: Vec<bool> = (0..n).map(|k| counter & (1 << (n - 1 - k)) != 0).collect();
        let assigned = vec![true; n];
        Some(self.build_world(present, assigned))
    }

    fn enter_arg_assignment(&mut self, counter: u64) {
        self.arg_current = counter;
        let presence = self.arg_presence(counter);
        self.live = self.live_attacks(&presence);
        self.att_total = 1u64 << self.live.len();
        self.att_next = 0;
    }

    fn next_induced(&mut self) -> Option<World> {
        if !self.induced_started {
            self.induced_started = true;
            self.enter_arg_assignment(0);
        }
        if self.att_next == self.att_total {
            let next_arg = self.arg_current + 1;
            if next_arg == self.arg_total {
                self.done = true;
                return None;
            }
            self.enter_arg_assignment(next_arg);
        }
        let att_counter = self.att_next;
        self.att_next += 1;

        let n = self.elements.len();
        let mut present = vec![false; n];
        let mut assigned = vec![false; n];
        for (slot, v) in self.arg_presence(self.arg_current) {
            present[slot] = v;
            assigned[slot] = true;
        }
        let m = self.live.len();
        for (l, slot) in self.live.clone().into_iter().enumerate() {
            present[slot] = att_counter & (1 << (m - 1 - l)) != 0;
            assigned[slot] = true;
        }
        Some(self.build_world(present, assigned))
    }
}

impl Iterator for Worlds<'_> {
    type Item = World;

    fn next(&mut self) -> Option<World> {
        if self.done {
            return None;
        }
        match self.mode {
            WorldMode::Raw => self.next_raw(),
            WorldMode::Induced => self.next_induced(),
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        if self.done {
            return (0, Some(0));
        }
        match self.mode {
            WorldMode::Raw => {
                let remaining = (self.raw_total - self.raw_next) as usize;
                (remaining, Some(remaining))
            }
            WorldMode::Induced => (0, None),
        }
    }
}

impl Praaf {
    /// Enumerates all possible worlds under default limits.
    pub fn worlds(&self, mode: WorldMode) -> Result<Worlds<'_>> {
        self.worlds_limited(mode, Limits::default())
    }

    /// Enumerates all possible worlds with explicit caps.
    pub fn worlds_limited(&self, mode: WorldMode, limits: Limits) -> Result<Worlds<'_>> {
        Worlds::new(self, mode, limits)
    }

    /// The world at a given position of the enumeration order.
    pub fn world_at(&self, index: u64, mode: WorldMode, limits: Limits) -> Result<World> {
        match self.worlds_limited(mode, limits)?.nth(index as usize) {
            Some(world) => Ok(world),
            None => {
                let count = self.worlds_limited(mode, limits)?.count() as u64;
                Err(Error::WorldIndexOutOfRange { index, count })
            }
        }
    }
}
