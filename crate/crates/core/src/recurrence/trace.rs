//! Trace sequences `tr(A B^n)` over `Q(q)` and the characteristic-polynomial
//! recurrence that annihilates them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::Recurrence;
use crate::algebra::bareiss::determinant;
use crate::algebra::{zpoly, ExpVec, LaurentPoly, RatFn, Rational, UPoly};
use crate::error::{Error, Result};

/// Square matrix of rational functions in one variable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct MatrixRF {
    rows: Vec<Vec<RatFn>>,
}

impl<'de> Deserialize<'de> for MatrixRF {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        MatrixRF::new(Vec::<Vec<RatFn>>::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

fn lcm(a: &LaurentPoly, b: &LaurentPoly) -> Result<LaurentPoly> {
    let (ua, sa) = UPoly::from_laurent(a)?;
    let (ub, sb) = UPoly::from_laurent(b)?;
    let g = ua.gcd(&ub);
    Ok(ua.mul(&ub.div_exact(&g)?).to_laurent(sa.max(sb)))
}

impl MatrixRF {
    pub fn new(rows: Vec<Vec<RatFn>>) -> Result<Self> {
        let s = rows.len();
        if s == 0 || rows.iter().any(|r| r.len() != s) {
            return Err(Error::DimensionMismatch("matrix must be square and nonempty".into()));
        }
        if let Some(bad) = rows.iter().flatten().find(|e| e.vars() != 1) {
            return Err(Error::WrongVarCount { expected: 1, got: bad.vars() });
        }
        Ok(MatrixRF { rows })
    }

    /// Matrix with rational constant entries.
    pub fn from_rationals(rows: &[Vec<Rational>]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|c| RatFn::constant(1, c.clone())).collect())
                .collect(),
        )
    }

    pub fn identity(size: usize) -> Self {
        let rows = (0..size)
            .map(|i| (0..size).map(|j| if i == j { RatFn::one(1) } else { RatFn::zero(1) }).collect())
            .collect();
        MatrixRF { rows }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<RatFn>] {
        &self.rows
    }

    /// `(M', D)` with `M = M' / D`, `M'` polynomial and `D` the lcm of the denominators.
    pub fn cleared(&self) -> Result<(Vec<Vec<LaurentPoly>>, LaurentPoly)> {
        let mut d = LaurentPoly::one(1);
        for e in self.rows.iter().flatten() {
            if !e.den().is_one() {
                d = lcm(&d, e.den())?;
            }
        }
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|e| e.num().checked_mul(&d.div_exact(e.den())?)).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?;
        Ok((rows, d))
    }
}

type ZMatrix = Vec<Vec<Vec<BigInt>>>;

/// `(Z, c, s)` with `rows = c x^s Z` and `Z` integral with nonnegative exponents.
fn integer_matrix(rows: &[Vec<LaurentPoly>]) -> Result<(ZMatrix, Rational, i64)> {
    let flat = rows.iter().flatten().filter(|e| !e.is_zero());
    let shift = flat.clone().filter_map(|e| e.min_exp(0)).min().unwrap_or(0);
    let den = flat.flat_map(|e| e.terms().iter()).fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let z = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|e| {
                    let mut v = Vec::new();
                    for (exp, c) in e.terms() {
                        let k = (exp.as_slice()[0] - shift) as usize;
                        if v.len() <= k {
                            v.resize(k + 1, BigInt::zero());
                        }
                        v[k] = c.numer() * (&den / c.denom());
                    }
                    v
                })
                .collect()
        })
        .collect();
    Ok((z, Rational::new(BigInt::one(), den), shift))
}

fn mat_mul(a: &ZMatrix, b: &ZMatrix) -> ZMatrix {
    let s = a.len();
    (0..s)
        .map(|i| {
            (0..s)
                .map(|j| {
                    let mut acc: Vec<BigInt> = Vec::new();
                    for k in 0..s {
                        let p = zpoly::mul(&a[i][k], &b[k][j]);
                        if acc.len() < p.len() {
                            acc.resize(p.len(), BigInt::zero());
                        }
                        for (t, c) in p.into_iter().enumerate() {
                            acc[t] += c;
                        }
                    }
                    while acc.last().is_some_and(Zero::is_zero) {
                        acc.pop();
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// `tr(A B^n)` for `n = 0..=last`, each fully reduced.
///
/// Denominators and rational content are cleared once, so the loop multiplies
/// integer polynomial matrices; the `n`-th trace is reduced against the factors
/// of the two denominators.
pub fn trace_sequence(a: &MatrixRF, b: &MatrixRF, last: usize) -> Result<Vec<RatFn>> {
    if a.size() != b.size() {
        return Err(Error::DimensionMismatch(format!("sizes {} and {}", a.size(), b.size())));
    }
    let (ma, da) = a.cleared()?;
    let (mb, db) = b.cleared()?;
    let (mut m, ca, sa) = integer_matrix(&ma)?;
    let (bz, cb, sb) = integer_matrix(&mb)?;
    let base = da.checked_mul(&db)?;
    let mut den = da.clone();
    let mut scale = ca;
    let mut shift = sa;
    let mut out = Vec::with_capacity(last + 1);
    for n in 0..=last {
        let mut tr: Vec<(ExpVec, Rational)> = Vec::new();
        let len = m.iter().enumerate().map(|(i, r)| r[i].len()).max().unwrap_or(0);
        for t in 0..len {
            let mut c = BigInt::zero();
            for (i, row) in m.iter().enumerate() {
                if let Some(v) = row[i].get(t) {
                    c += v;
                }
            }
            if !c.is_zero() {
                tr.push((ExpVec::new(&[t as i64 + shift]), Rational::from_integer(c) * &scale));
            }
        }
        let tr = LaurentPoly::from_terms(1, tr)?;
        out.push(RatFn::with_factor_base(tr, den.clone(), &base)?);
        if n < last {
            m = mat_mul(&bz, &m);
            den = den.checked_mul(&db)?;
            scale *= &cb;
            shift += sb;
        }
    }
    Ok(out)
}

/// `det(z D I - D B)` as a polynomial in `(z, q)`, where `D` clears the
/// denominators of `B`. It equals `D^s det(z I - B)`.
pub fn char_polynomial(b: &MatrixRF) -> Result<LaurentPoly> {
    let (bp, d) = b.cleared()?;
    let s = b.size();
    let zd = LaurentPoly::var(2, 0)?.checked_mul(&d.embed(0))?;
    let m: Vec<Vec<LaurentPoly>> = (0..s)
        .map(|i| {
            (0..s)
                .map(|j| {
                    let e = -&bp[i][j].embed(0);
                    if i == j {
                        &e + &zd
                    } else {
                        e
                    }
                })
                .collect()
        })
        .collect();
    determinant(2, m)
}

/// The recurrence read off the characteristic polynomial of `B`, with
/// polynomial coefficients in `q` (common factors removed, normalized).
///
/// By Cayley-Hamilton it annihilates `tr(A B^n)` for every `A`. A singular `B`
/// gives `c_0 = 0`, which is reported as `Degenerate`.
pub fn char_poly_recurrence(b: &MatrixRF) -> Result<Recurrence> {
    let chi = char_polynomial(b)?;
    let s = b.size();
    let mut coeffs = vec![LaurentPoly::zero(1); s + 1];
    for (k, c) in chi.coefficients_in(0)? {
        coeffs[k as usize] = c;
    }
    if coeffs[0].is_zero() {
        return Err(Error::Degenerate("singular matrix: characteristic polynomial has c_0 = 0".into()));
    }
    // strip the common univariate factor
    let mut g = UPoly::zero();
    let mut shift = i64::MAX;
    for c in coeffs.iter().filter(|c| !c.is_zero()) {
        let (u, sh) = UPoly::from_laurent(c)?;
        g = g.gcd(&u);
        shift = shift.min(sh);
    }
    let divisor = g.to_laurent(shift);
    let coeffs = coeffs
        .iter()
        .map(|c| if c.is_zero() { Ok(c.clone()) } else { c.div_exact(&divisor) })
        .collect::<Result<Vec<_>>>()?;
    // integral coefficients with content 1 and c_d's least coefficient positive
    let mut content = coeffs
        .iter()
        .filter(|c| !c.is_zero())
        .map(|c| c.primitive().0)
        .fold(Rational::zero(), |acc, c| gcd_rational(&acc, &c));
    if crate::algebra::rational::is_negative(&coeffs[s].trailing().expect("c_d is nonzero").1) {
        content = -content;
    }
    let inv = content.recip();
    Recurrence::new(coeffs.iter().map(|c| c.scale(&inv)).collect())
}

/// Gcd of two nonnegative-denominator rationals: gcd of numerators over lcm of denominators.
fn gcd_rational(a: &Rational, b: &Rational) -> Rational {
    use num_integer::Integer;
    if a.is_zero() {
        return num_traits::Signed::abs(b);
    }
    let n = a.numer().gcd(b.numer());
    let d = a.denom().lcm(b.denom());
    Rational::new(n, d)
}
