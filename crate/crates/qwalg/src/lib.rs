//! Finite-model workbench for bounded involutive BE algebras and their
//! quantum generalizations.
//!
//! An algebra is a Cayley table for `->` with designated `1` and `0`; every
//! other operation (`*`, join, meet, `(*)`, `(+)`) and both order relations
//! are derived from it. On top of that sit:
//!
//! - [`axioms`]: a catalogue of named identities and classes, decided by
//!   exhaustive quantification with lexicographically least witnesses;
//! - [`terms`]: a parser, evaluator and checker for (quasi-)identities over
//!   the derived signature;
//! - [`classify`]: whole-model class reports and the cross-class structure
//!   theorems;
//! - [`center`]: the commutative center and its Wajsberg-subalgebra report;
//! - [`effect`]: the partial-addition view and its axioms;
//! - [`search`]: pruned exhaustive enumeration up to isomorphism and
//!   counterexample hunting;
//! - [`io`] and [`cli`]: a text file format and the command surface;
//! - [`fixtures`]: built-in identity suites per hypothesis class.

// index loops over Cayley tables read better than iterator chains here
#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod axioms;
pub mod center;
pub mod classify;
pub mod cli;
pub mod effect;
pub mod fixtures;
pub mod io;
pub mod search;
pub mod terms;

pub use algebra::{Conn, FiniteAlgebra, MbeAlgebra};
pub use axioms::{AxiomId, CheckOutcome, CheckStatus, ClassId};
