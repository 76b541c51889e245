//! Finite-model checker for soft topological spaces.
//!
//! A soft set over a finite ground set `X` and parameter set `A` assigns a
//! subset of `X` to every parameter; a soft topology is a family of soft
//! sets containing the null and absolute sets and closed under soft union
//! and intersection. This crate implements the full algebra, decides twelve
//! separation axioms, constructs the T0 reflection (quotient by the
//! indistinguishability relation `≈`), decides the reflected separation
//! axioms by two independent routes, checks structural properties of soft
//! maps, and exhaustively enumerates all soft topologies on tiny universes
//! to mine implications between the axioms and hunt for counterexamples.
//!
//! The decision procedures are organized as named strategies behind the
//! [`predicate::SpacePredicate`] trait; [`predicate::PredicateRegistry`]
//! holds one per axiom and resolves the names used by the mining CLI.

pub mod document;
pub mod error;
pub mod explorer;
pub mod mapping;
pub mod morphisms;
pub mod predicate;
pub mod reflection;
pub mod separation;
pub mod soft_set;
pub mod topology;

pub use document::{MappingDocument, ReflectionDoc, SpaceDocument};
pub use error::{Error, Result, TopologyViolation};
pub use explorer::{
    enumerate_spaces, find_counterexample, mine_implication, verify_corpus,
    EnumerationMode, EnumerationSpec, ImplicationReport, ImplicationStatus,
};
pub use mapping::{compose, SoftMapping};
pub use morphisms::{check_map, map_report, two_of_three, MapProperty, MapReport, Verdict, Witness};
pub use predicate::{PredicateRegistry, SpacePredicate};
pub use reflection::{
    check_t0_alpha, check_t0_alpha_direct, compute_reflection, factor_through_reflection,
    induced_map, point_class_soft_set, Alpha, Reflection,
};
pub use separation::{check_axiom, classify, is_point_soft_set_closed, Axiom, AxiomProfile};
pub use soft_set::{SoftSet, Universe};
pub use topology::{validate_family, SoftSpace, SoftTopology};
