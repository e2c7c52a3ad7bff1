//! Seeded random instances for property tests, benchmarks and the CLI.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{ExpVec, LaurentPoly, RatFn, Rational};
use crate::recurrence::{MatrixRF, Recurrence};

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Bounds for random recurrences.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RecurrenceShape {
    pub vars: usize,
    pub order_max: usize,
    /// Exponents are drawn from `[-exp_bound, exp_bound]`.
    pub exp_bound: i64,
    /// Nonzero integer coefficients from `[-coeff_bound, coeff_bound]`.
    pub coeff_bound: i64,
    /// Monomials per non-leading coefficient.
    pub terms_max: usize,
    /// Initial terms are integers from `[-init_bound, init_bound]`.
    pub init_bound: i64,
}

impl RecurrenceShape {
    pub fn univariate() -> Self {
        RecurrenceShape { vars: 1, order_max: 3, exp_bound: 3, coeff_bound: 3, terms_max: 2, init_bound: 3 }
    }

    pub fn bivariate() -> Self {
        RecurrenceShape { vars: 2, order_max: 2, exp_bound: 1, coeff_bound: 2, terms_max: 2, init_bound: 2 }
    }
}

fn nonzero(rng: &mut SampleRng, bound: i64) -> i64 {
    let v = rng.random_range(1..=bound.max(1));
    if rng.random_bool(0.5) {
        v
    } else {
        -v
    }
}

fn exponent(rng: &mut SampleRng, vars: usize, bound: i64) -> ExpVec {
    let e: Vec<i64> = (0..vars).map(|_| rng.random_range(-bound..=bound)).collect();
    ExpVec::new(&e)
}

/// Sum of up to `terms` random monomials (possibly fewer after collisions, never zero).
pub fn random_laurent(rng: &mut SampleRng, vars: usize, terms: usize, exp_bound: i64, coeff_bound: i64) -> LaurentPoly {
    loop {
        let mut p = LaurentPoly::zero(vars);
        for _ in 0..terms.max(1) {
            let m = LaurentPoly::monomial(exponent(rng, vars, exp_bound), Rational::from_integer(nonzero(rng, coeff_bound).into()));
            p = &p + &m;
        }
        if !p.is_zero() {
            return p;
        }
    }
}

/// Recurrence of order `1..=order_max` whose leading coefficient is a signed
/// monomial and whose constant coefficient `c_0` is nonzero, together with
/// integer initial terms that are not all zero.
pub fn random_unit_leading(rng: &mut SampleRng, shape: &RecurrenceShape) -> (Recurrence, Vec<LaurentPoly>) {
    let vars = shape.vars;
    let d = rng.random_range(1..=shape.order_max.max(1));
    let mut coeffs = Vec::with_capacity(d + 1);
    for k in 0..d {
        let zero_ok = k > 0 && rng.random_bool(0.25);
        if zero_ok {
            coeffs.push(LaurentPoly::zero(vars));
        } else {
            let t = rng.random_range(1..=shape.terms_max.max(1));
            coeffs.push(random_laurent(rng, vars, t, shape.exp_bound, shape.coeff_bound));
        }
    }
    let sign = if rng.random_bool(0.5) { 1 } else { -1 };
    coeffs.push(LaurentPoly::monomial(exponent(rng, vars, shape.exp_bound), Rational::from_integer(sign.into())));
    let rec = Recurrence::new(coeffs).expect("nonzero leading coefficient");
    let init = loop {
        let init: Vec<LaurentPoly> =
            (0..d).map(|_| LaurentPoly::from_int(vars, rng.random_range(-shape.init_bound..=shape.init_bound))).collect();
        if init.iter().any(|p| !p.is_zero()) {
            break init;
        }
    };
    (rec, init)
}

/// Polynomial in one variable of degree at most `deg` with small integer coefficients.
fn small_poly(rng: &mut SampleRng, deg: usize) -> LaurentPoly {
    let terms: Vec<(ExpVec, Rational)> = (0..=deg)
        .map(|e| (ExpVec::new(&[e as i64]), Rational::from_integer(rng.random_range(-3i64..=3).into())))
        .collect();
    LaurentPoly::from_terms(1, terms).expect("one variable")
}

/// Random entry: a polynomial of degree `<= deg`, or with probability 1/4 a
/// quotient of two such polynomials.
fn random_entry(rng: &mut SampleRng, deg: usize) -> RatFn {
    let num = small_poly(rng, deg);
    if rng.random_bool(0.25) {
        loop {
            let den = small_poly(rng, deg);
            if !den.is_zero() {
                return RatFn::new(num, den).expect("nonzero denominator");
            }
        }
    }
    RatFn::from_poly(num)
}

pub fn random_matrix(rng: &mut SampleRng, size: usize, deg: usize) -> MatrixRF {
    let rows = (0..size).map(|_| (0..size).map(|_| random_entry(rng, deg)).collect()).collect();
    MatrixRF::new(rows).expect("square matrix")
}

/// Pair `(A, B)` of `size x size` matrices over `Q(x)` with `B` nonsingular.
pub fn random_matrix_pair(rng: &mut SampleRng, size: usize, deg: usize) -> (MatrixRF, MatrixRF) {
    let a = random_matrix(rng, size, deg);
    loop {
        let b = random_matrix(rng, size, deg);
        if crate::recurrence::char_poly_recurrence(&b).is_ok() {
            return (a, b);
        }
    }
}
