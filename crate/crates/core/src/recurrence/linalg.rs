//! Column-incremental Gaussian elimination over a field, used to locate the
//! first linearly dependent column of a matrix.
//!
//! Running it over a word-sized prime field first is cheap and sound in one
//! direction: independence modulo `p` implies independence over the rationals.

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::algebra::Rational;

pub trait Field: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn inv(&self) -> Self;
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn inv(&self) -> Self {
        self.recip()
    }
}

/// The Mersenne prime 2^61 - 1.
pub const PRIME: u64 = (1 << 61) - 1;

/// Element of the prime field of order [`PRIME`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fp(pub u64);

impl Fp {
    /// Reduces a rational; `None` when the denominator vanishes modulo the prime.
    pub fn from_rational(q: &Rational) -> Option<Fp> {
        let p = num_bigint::BigInt::from(PRIME);
        let n = q.numer().mod_floor(&p).to_u64()?;
        let d = q.denom().mod_floor(&p).to_u64()?;
        if d == 0 {
            return None;
        }
        Some(Fp(n).mul(&Fp(d).inv()))
    }

    fn pow(self, mut e: u64) -> Fp {
        let mut base = self;
        let mut acc = Fp(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

impl Field for Fp {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, other: &Self) -> Self {
        let s = self.0 + other.0;
        Fp(if s >= PRIME { s - PRIME } else { s })
    }
    fn sub(&self, other: &Self) -> Self {
        Fp(if self.0 >= other.0 { self.0 - other.0 } else { self.0 + PRIME - other.0 })
    }
    fn mul(&self, other: &Self) -> Self {
        Fp(((self.0 as u128 * other.0 as u128) % PRIME as u128) as u64)
    }
    fn inv(&self) -> Self {
        assert!(self.0 != 0, "inverse of zero");
        self.pow(PRIME - 2)
    }
}

/// Result of scanning columns left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColumnScan {
    /// All columns independent.
    FullRank,
    /// Column `column` is the first one in the span of its predecessors;
    /// `pivot_rows[j]` is the row chosen for column `j < column`, and the square
    /// submatrix on those rows and the first `column` columns is nonsingular.
    Dependent { column: usize, pivot_rows: Vec<usize> },
}

/// Scans the columns of a row-major `rows x cols` matrix.
pub fn first_dependent_column<F: Field>(matrix: &[Vec<F>], cols: usize) -> ColumnScan {
    let rows = matrix.len();
    // reduced copies of accepted columns, each with a pivot row where it is 1
    let mut basis: Vec<(usize, Vec<F>)> = Vec::new();
    for c in 0..cols {
        let mut v: Vec<F> = (0..rows).map(|r| matrix[r][c].clone()).collect();
        for (pr, b) in &basis {
            let f = v[*pr].clone();
            if !f.is_zero() {
                for (x, y) in v.iter_mut().zip(b) {
                    if !y.is_zero() {
                        *x = x.sub(&f.mul(y));
                    }
                }
            }
        }
        match v.iter().position(|x| !x.is_zero()) {
            None => {
                return ColumnScan::Dependent { column: c, pivot_rows: basis.iter().map(|b| b.0).collect() };
            }
            Some(pr) => {
                let inv = v[pr].inv();
                for x in v.iter_mut() {
                    *x = x.mul(&inv);
                }
                // keep earlier basis vectors zero on the new pivot row
                for (_, b) in basis.iter_mut() {
                    let f = b[pr].clone();
                    if !f.is_zero() {
                        for (x, y) in b.iter_mut().zip(&v) {
                            if !y.is_zero() {
                                *x = x.sub(&f.mul(y));
                            }
                        }
                    }
                }
                basis.push((pr, v));
            }
        }
    }
    ColumnScan::FullRank
}

/// Solves the square system `a x = b` by Gaussian elimination with row pivoting.
/// Returns `None` if `a` is singular.
pub fn solve_square<F: Field>(mut a: Vec<Vec<F>>, mut b: Vec<F>) -> Option<Vec<F>> {
    let n = a.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        b.swap(col, piv);
        let inv = a[col][col].inv();
        for j in col..n {
            a[col][j] = a[col][j].mul(&inv);
        }
        b[col] = b[col].mul(&inv);
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in col..n {
                let t = f.mul(&a[col][j]);
                a[r][j] = a[r][j].sub(&t);
            }
            let t = f.mul(&b[col]);
            b[r] = b[r].sub(&t);
        }
    }
    Some(b)
}

/// Exact nullspace vector supported on the first `column + 1` columns with
/// entry 1 at `column`, using the given pivot rows.
pub fn dependency_vector(matrix: &[Vec<Rational>], column: usize, pivot_rows: &[usize]) -> Option<Vec<Rational>> {
    let a: Vec<Vec<Rational>> =
        pivot_rows.iter().map(|&r| matrix[r][..column].to_vec()).collect();
    let b: Vec<Rational> = pivot_rows.iter().map(|&r| -matrix[r][column].clone()).collect();
    let mut x = solve_square(a, b)?;
    x.push(<Rational as One>::one());
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;

    fn q(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect()
    }

    #[test]
    fn prime_field_inverse() {
        let a = Fp(123456789);
        assert_eq!(a.mul(&a.inv()), Fp(1));
        assert_eq!(Fp::from_rational(&crate::algebra::rational::frac(1, 2)).unwrap().mul(&Fp(2)), Fp(1));
    }

    #[test]
    fn finds_first_dependency() {
        // third column = first + 2 * second
        let m = q(&[&[1, 0, 1, 5], &[0, 1, 2, 0], &[1, 1, 3, 1], &[2, 0, 2, 7]]);
        let scan = first_dependent_column(&m, 4);
        let ColumnScan::Dependent { column, pivot_rows } = scan else { panic!("expected dependency") };
        assert_eq!(column, 2);
        let v = dependency_vector(&m, column, &pivot_rows).unwrap();
        assert_eq!(v, vec![int(-1), int(-2), int(1)]);
        // the modular scan agrees
        let mp: Vec<Vec<Fp>> =
            m.iter().map(|r| r.iter().map(|x| Fp::from_rational(x).unwrap()).collect()).collect();
        assert!(matches!(first_dependent_column(&mp, 4), ColumnScan::Dependent { column: 2, .. }));
    }

    #[test]
    fn full_rank() {
        let m = q(&[&[1, 2], &[3, 4], &[5, 6]]);
        assert_eq!(first_dependent_column(&m, 2), ColumnScan::FullRank);
        assert!(solve_square(q(&[&[1, 2], &[2, 4]]), vec![int(1), int(2)]).is_none());
    }
}
