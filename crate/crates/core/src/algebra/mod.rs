//! Exact coefficient arithmetic: rationals, sparse Laurent polynomials and
//! rational functions.

pub mod bareiss;
mod json;
pub mod laurent;
pub mod rational;
pub mod ratfn;
pub mod upoly;
pub(crate) mod zpoly;

pub use json::{rational_str, rational_vec};
pub use laurent::{default_names, ExpVec, LaurentPoly};
pub use rational::Rational;
pub use ratfn::RatFn;
pub use upoly::UPoly;
