//! Exact toolkit for constant-coefficient recurrent sequences of Laurent
//! polynomials and the quasi-polynomial behaviour of their Newton polytopes.
//!
//! * [`algebra`]: rationals, sparse Laurent polynomials, rational functions.
//! * [`recurrence`]: term generation, recurrence guessing, generalized power
//!   sums, trace sequences and characteristic polynomials.
//! * [`polytope`]: Newton polytopes (dimension 1 and 2), support functions,
//!   lattice counts.
//! * [`quasifit`]: quasi-polynomial fitting, polygon vertex models, shears and
//!   zero patterns.
//! * [`elimination`]: Sylvester resultants and the power-substitution family.
//! * [`valuation`]: root valuations from Newton polygons and the slope fan.

pub mod algebra;
pub mod elimination;
pub mod error;
pub mod par;
pub mod polytope;
pub mod quasifit;
pub mod recurrence;
pub mod sample;
pub mod valuation;

pub use error::{Error, Result};
pub use par::Exec;
