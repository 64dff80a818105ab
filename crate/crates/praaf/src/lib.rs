//! Exact inference for probabilistic abstract argumentation frameworks
//! (PrAAFs) under constellation semantics.
//!
//! A PrAAF attaches existence probabilities to the arguments and attacks of
//! a Dung-style argumentation framework, and thereby describes a probability
//! distribution over concrete frameworks. This crate enumerates the possible
//! worlds of that distribution exhaustively, computes exact probability
//! distributions over extensions for the standard semantics (conflict-free,
//! admissible, complete, grounded, preferred, stable), and implements the
//! probabilistic-attack normal form: every probabilistic argument can be
//! replaced by a probabilistic attack from a ground-truth argument, without
//! changing the distribution over extensions once the ground truth is
//! ignored.
//!
//! The crate favors exactness and determinism over scale: subset and world
//! enumeration are capped (defaults of 20 arguments and 20 probabilistic
//! elements) and every listing is emitted in a canonical order.
//!
//! # Example
//!
//! ```
//! use praaf::{io, ArgumentSet, GroundTruth, Limits, Semantics, WorldMode};
//!
//! let praaf = io::parse_praaf(
//!     "arg(a). arg(b). arg(c,0.4). arg(d). att(a,c,0.3). att(b,c,0.7). att(c,d).",
//! )?;
//! assert_eq!(praaf.worlds(WorldMode::Raw)?.count(), 8);
//!
//! let p = praaf.extension_probability(
//!     &ArgumentSet::new(["a", "b", "d"]),
//!     Semantics::Admissible,
//!     WorldMode::Raw,
//!     Limits::default(),
//! )?;
//! assert!((p - 0.916).abs() < 1e-9);
//!
//! // Rewrite the probabilistic argument c into an attack from the ground
//! // truth; the distribution over extensions is preserved modulo eta.
//! let eta = GroundTruth::default();
//! let cert = praaf.to_normal_form(&eta)?;
//! assert!(cert.transformed.is_normal_form());
//! let report = praaf::check_equivalence(
//!     &praaf, &cert.transformed, &eta, Semantics::Admissible, 1e-9, Limits::default(),
//! )?;
//! assert!(report.pass());
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

mod aaf;
mod distribution;
mod error;
mod normal_form;
mod praaf;
mod semantics;
mod world;

pub mod io;

pub use aaf::{is_valid_id, Aaf, ArgumentSet, Attack};
pub use distribution::{AcceptanceProbability, ExtensionDistribution, Stance};
pub use error::{Error, Result, Violation, Violations};
pub use normal_form::{
    check_equivalence, is_acceptable_extension, Discrepancy, EquivalenceReport, GroundTruth,
    MappingEntry, NormalFormCertificate,
};
pub use praaf::{ElementId, Praaf, ProbabilisticElement};
pub use semantics::{Semantics, DEFAULT_ARGUMENT_CAP};
pub use world::{Limits, World, WorldMode, Worlds, DEFAULT_ELEMENT_CAP};
