//! Constant-coefficient linear recurrences `sum_k c_k R_{n+k} = 0` over Laurent
//! polynomial rings.

mod generate;
mod gps;
mod guess;
pub mod linalg;
mod trace;

use serde::{Deserialize, Serialize};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::algebra::{zpoly, LaurentPoly, RatFn, Rational, UPoly};
use crate::error::{Error, Result};

pub use generate::Generated;
pub use gps::GeneralizedPowerSum;
pub use guess::{guess_recurrence, SupportBox};
pub use trace::{char_poly_recurrence, char_polynomial, trace_sequence, MatrixRF};

/// An order-`d` recurrence with coefficients `c_0..c_d`, `c_0 c_d != 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recurrence {
    vars: usize,
    coeffs: Vec<LaurentPoly>,
}

#[derive(Serialize, Deserialize)]
struct RecurrenceRepr {
    vars: usize,
    coeffs: Vec<LaurentPoly>,
}

impl Serialize for Recurrence {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RecurrenceRepr { vars: self.vars, coeffs: self.coeffs.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Recurrence {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = RecurrenceRepr::deserialize(d)?;
        let rec = Recurrence::new(repr.coeffs).map_err(serde::de::Error::custom)?;
        if rec.vars != repr.vars {
            return Err(serde::de::Error::custom(Error::VarCountMismatch { left: repr.vars, right: rec.vars }));
        }
        Ok(rec)
    }
}

impl Recurrence {
    pub fn new(coeffs: Vec<LaurentPoly>) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::Precondition("a recurrence needs order d >= 1".into()));
        }
        let vars = coeffs[0].vars();
        if let Some(bad) = coeffs.iter().find(|c| c.vars() != vars) {
            return Err(Error::VarCountMismatch { left: vars, right: bad.vars() });
        }
        if coeffs[0].is_zero() || coeffs.last().unwrap().is_zero() {
            return Err(Error::Precondition("c_0 and c_d must be nonzero".into()));
        }
        Ok(Recurrence { vars, coeffs })
    }

    /// Scalar recurrence `sum_k c_k a_{n+k} = 0` with rational coefficients, in
    /// zero variables.
    pub fn scalar(coeffs: &[crate::algebra::Rational]) -> Result<Self> {
        Self::new(coeffs.iter().map(|c| LaurentPoly::constant(0, c.clone())).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    pub fn leading(&self) -> &LaurentPoly {
        self.coeffs.last().unwrap()
    }

    /// `c_d` is a unit of the Laurent ring.
    pub fn is_unit_leading(&self) -> bool {
        self.leading().is_monomial()
    }

    /// `sum_k c_k T_{n+k}`.
    pub fn residual(&self, terms: &[LaurentPoly], n: usize) -> Result<LaurentPoly> {
        let d = self.order();
        if n + d >= terms.len() {
            return Err(Error::InsufficientData(format!("window {n} needs {} terms", n + d + 1)));
        }
        let mut acc = LaurentPoly::zero(self.vars);
        for (k, c) in self.coeffs.iter().enumerate() {
            acc = acc.checked_add(&c.checked_mul(&terms[n + k])?)?;
        }
        Ok(acc)
    }

    /// Every length-`d+1` window of `terms` is annihilated.
    pub fn annihilates(&self, terms: &[LaurentPoly]) -> Result<bool> {
        let d = self.order();
        for n in 0..terms.len().saturating_sub(d) {
            if !self.residual(terms, n)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Annihilation check for univariate rational-function terms.
    ///
    /// Each window is brought to the lcm of its denominators; the numerator of
    /// the sum is never reduced, only tested for zero.
    pub fn annihilates_fractions(&self, terms: &[RatFn]) -> Result<bool> {
        if self.vars != 1 {
            return Err(Error::WrongVarCount { expected: 1, got: self.vars });
        }
        let d = self.order();
        // value = scale * z^shift * poly (/ den), all polys primitive over Z
        let split = |p: &LaurentPoly| -> Result<(Rational, i64, Vec<BigInt>)> {
            let (u, s) = UPoly::from_laurent(p)?;
            let (c, z) = zpoly::primitive(&u);
            Ok((c, s, z))
        };
        let coeffs: Vec<_> = self.coeffs.iter().map(split).collect::<Result<_>>()?;
        let parts: Vec<_> = terms.iter().map(|t| Ok((split(t.num())?, split(t.den())?))).collect::<Result<_>>()?;
        for n in 0..terms.len().saturating_sub(d) {
            let window = &parts[n..=n + d];
            let mut lcm = vec![BigInt::one()];
            for (_, (_, _, den)) in window {
                lcm = zpoly::lcm(&lcm, den);
            }
            let mut shifted = Vec::with_capacity(d + 1);
            for (k, ((nc, ns, num), (dc, ds, den))) in window.iter().enumerate() {
                let (cc, cs, c) = &coeffs[k];
                if cc.is_zero() || nc.is_zero() {
                    continue;
                }
                let cof = zpoly::div_exact(&lcm, den).ok_or(Error::InexactDivision)?;
                shifted.push((cc * nc / dc, cs + ns - ds, zpoly::mul(&zpoly::mul(c, num), &cof)));
            }
            let Some(lo) = shifted.iter().map(|t| t.1).min() else { continue };
            let den = shifted.iter().fold(BigInt::one(), |acc, t| acc.lcm(t.0.denom()));
            let mut sum: Vec<BigInt> = Vec::new();
            for (scale, s, p) in shifted {
                let f = scale.numer() * (&den / scale.denom());
                let off = (s - lo) as usize;
                if sum.len() < off + p.len() {
                    sum.resize(off + p.len(), BigInt::zero());
                }
                for (i, c) in p.iter().enumerate() {
                    sum[off + i] += &f * c;
                }
            }
            if sum.iter().any(|c| !c.is_zero()) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `sum_k c_k z^k` as a polynomial in `(z, x_1, .., x_r)`.
    pub fn characteristic_polynomial(&self) -> LaurentPoly {
        let pairs: Vec<(i64, LaurentPoly)> =
            self.coeffs.iter().enumerate().map(|(k, c)| (k as i64, c.clone())).collect();
        LaurentPoly::from_coefficients_in(self.vars + 1, 0, &pairs).expect("consistent variables")
    }

    /// Scales so that the lexicographically-least coefficient of `c_d` is 1.
    pub fn normalized(&self) -> Recurrence {
        let lead = self.leading().trailing().unwrap().1.recip();
        Recurrence { vars: self.vars, coeffs: self.coeffs.iter().map(|c| c.scale(&lead)).collect() }
    }
}
