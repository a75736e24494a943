//! Elementwise stable range one: decision procedures, witness certificates,
//! and brute-force theorem verification over finite rings and integer matrices.
//!
//! An element a of a ring R has *(right) stable range one* when every
//! comaximal pair aR + tR = R can be completed to a unit a + tb. This crate
//! decides that property and its refinements on explicit finite rings, builds
//! checkable witness certificates by following the constructive arguments
//! (idempotent unitizers, product chains, unit transport, corner suspension),
//! runs the Super Jacobson's Lemma toolkit, decides stable range one exactly
//! for integer matrices via Smith normal form, and verifies the whole theory
//! wholesale on a registry of small rings.
//!
//! Entry points:
//!
//! * [`ring`] — finite ring construction from spec strings (`"M(2,Z/4)"`),
//!   element encoding, units, idempotents, Peirce splits.
//! * [`classify`] — per-element class flags (regular, unit-regular, clean, …)
//!   and ring-level predicates.
//! * [`sr`] — stable-range-one decisions, witness search, and certified
//!   witness constructions.
//! * [`jacobson`] — the generalized circle operation, Banachiewicz block
//!   inversion, Super Jacobson's Lemma checks.
//! * [`intmat`] — exact integer-matrix decisions: Bareiss determinants, Smith
//!   normal form, refutation certificates, constructive witnesses.
//! * [`suite`] — the theorem-by-theorem verification suite with deterministic
//!   machine-readable reports.
//! * [`cli`] — the command-line front end.

pub mod classify;
pub mod cli;
pub mod intmat;
pub mod jacobson;
pub mod ring;
pub mod sr;
pub mod suite;
