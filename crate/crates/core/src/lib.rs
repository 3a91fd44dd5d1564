//! Exact computations for conic-line arrangements with nodes, tacnodes and
//! ordinary triple points: singular-point classification, Jacobian syzygy
//! degrees, global Tjurina numbers, near-freeness verdicts, and enumeration
//! of admissible weak combinatorics.
//!
//! Everything here is exact rational or algebraic-number arithmetic; no
//! floating point value enters a decision.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod arrangement;
pub mod combinat;
pub mod exactpoly;
pub mod jacobian;
pub mod linalg;
pub mod singular;
