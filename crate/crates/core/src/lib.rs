//! Half-integral weight theta series on Hilbert modular groups.
//!
//! The crate works over `Q` or a real quadratic field `Q(sqrt D)` with exact
//! big-integer arithmetic. It covers local Hilbert symbols, the Kubota
//! cocycle and its splitting, the multiplier `v_lambda` attached to a triple
//! `(beta, S3, a)`, existence and counting of such triples via narrow class
//! groups, and numerical evaluation of the resulting theta series.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod arith;
pub mod classgroup;
mod error;
pub mod existence;
pub mod localsymbols;
pub mod multiplier;
pub mod quadfield;
pub mod theta;

pub use arith::{QuadElem, Rational};
pub use error::{Error, Result};
pub use quadfield::{FieldCtx, FracIdeal, GTriple, PrimePlace, Weight};
