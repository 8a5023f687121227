//! Finite meet-semilattices with adjoint operator pairs and their spectral duals.
//!
//! The library works with algebras `⟨A, ∧, 1⟩` on a small indexed carrier and
//! builds the whole duality pipeline on top of them:
//!
//! - filters, irreducible filters and the spectrum embedding `β` ([`filter`]);
//! - adjoint pairs `i ⊣ d` and the algebras carrying them ([`adjoint`]);
//! - subbasic spaces `⟨X, K⟩`, dual spaces, multirelations and the space-side
//!   axioms ([`space`]);
//! - meet-relations between spaces, their composition calculus and the
//!   relations induced by homomorphisms ([`relation`]);
//! - congruences, quotients and the matching families of closed sets on the
//!   dual side ([`congruence`]);
//! - tense algebras `⟨A, P, G, F, H⟩` and their duality ([`tense`]);
//! - exhaustive generation of all small labeled algebras ([`corpus`]).
//!
//! Everything is exact and deterministic: carriers are index sets in one
//! machine word, every derived family is kept in a canonical order, and each
//! verification reports a concrete witness on failure.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod adjoint;
pub mod congruence;
pub mod corpus;
pub mod filter;
pub mod fixtures;
pub mod order;
pub mod relation;
pub mod set;
pub mod space;
pub mod tense;
pub mod verdict;

pub use adjoint::{AdjointPair, Slata};
pub use filter::{Filter, SpectrumPoint};
pub use order::{MeetSemilattice, Poset};
pub use set::SmallSet;
pub use space::{DualSpace, Multirelation, SSpace};
pub use tense::ESlata;
pub use verdict::Verdict;
