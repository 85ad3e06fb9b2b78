//! Exact rational algebra behind rationalization of groups and spaces.
//!
//! The crate is `no_std` (it needs `alloc`) and has no IO. It covers:
//!
//! * [`exactalg`]: dense linear algebra over arbitrary-precision rationals.
//! * [`freelie`]: the free Lie algebra on finitely many generators, in the
//!   Lyndon (Hall) basis, truncated at a nilpotency class.
//! * [`malcev`]: the Baker–Campbell–Hausdorff group law on truncated free Lie
//!   algebras, i.e. the Malcev correspondence for free nilpotent groups.
//! * [`groupwords`]: free-group words, the Magnus expansion and logarithmic
//!   coordinates on the finite stages of the rational completion.
//! * [`simplicial`]: finite simplicial sets and their rational (co)homology.
//! * [`cdga`]: free commutative differential graded algebras.
//! * [`sullivan`]: polynomial de Rham forms, the PL de Rham complex of a
//!   simplicial set, minimal models and rational homotopy ranks.

#![no_std]

extern crate alloc;

pub mod assoc;
pub mod cdga;
pub mod error;
pub mod exactalg;
mod expr;
pub mod freelie;
pub mod groupwords;
pub mod malcev;
pub mod rational;
pub mod simplicial;
pub mod sullivan;

pub use error::{Error, Result};
pub use rational::Rational;
