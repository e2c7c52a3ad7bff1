#![allow(dead_code)]

use polyrec::algebra::rational::int;
use polyrec::algebra::{ExpVec, LaurentPoly};
use proptest::prelude::*;

pub fn poly(vars: usize, max_terms: usize, exp_bound: i64) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((prop::collection::vec(-exp_bound..=exp_bound, vars), -5i64..=5), 0..=max_terms).prop_map(
        move |v| LaurentPoly::from_terms(vars, v.into_iter().map(|(e, c)| (ExpVec::new(&e), int(c)))).unwrap(),
    )
}

pub fn nonzero_poly(vars: usize, max_terms: usize, exp_bound: i64) -> impl Strategy<Value = LaurentPoly> {
    poly(vars, max_terms.max(1), exp_bound).prop_filter("nonzero", |p| !p.is_zero())
}

/// Polynomial with nonnegative exponents below `deg_bound`.
pub fn ordinary(vars: usize, max_terms: usize, deg_bound: i64) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((prop::collection::vec(0..=deg_bound, vars), -4i64..=4), 1..=max_terms).prop_map(
        move |v| LaurentPoly::from_terms(vars, v.into_iter().map(|(e, c)| (ExpVec::new(&e), int(c)))).unwrap(),
    )
}

pub fn direction(dim: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-7i64..=7, dim).prop_filter("nonzero", |w| w.iter().any(|&x| x != 0))
}
