//! Dense univariate polynomials over the rationals, used for gcd computations.

use num_traits::{One, Zero};

use super::laurent::{ExpVec, LaurentPoly};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Coefficients in ascending degree; no trailing zeros (zero is the empty vector).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPoly(Vec<Rational>);

impl UPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UPoly(coeffs)
    }

    pub fn zero() -> Self {
        UPoly(Vec::new())
    }

    pub fn one() -> Self {
        UPoly(vec![Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; zero has degree `None`.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&Rational> {
        self.0.last()
    }

    /// Writes a univariate Laurent polynomial as `x^shift * u(x)` with `u(0) != 0`.
    pub fn from_laurent(p: &LaurentPoly) -> Result<(UPoly, i64)> {
        if p.vars() != 1 {
            return Err(Error::WrongVarCount { expected: 1, got: p.vars() });
        }
        if p.is_zero() {
            return Ok((UPoly::zero(), 0));
        }
        let (lo, hi) = p.valuations()?;
        let mut coeffs = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (e, c) in p.terms() {
            coeffs[(e[0] - lo) as usize] = c.clone();
        }
        Ok((UPoly::new(coeffs), lo))
    }

    pub fn to_laurent(&self, shift: i64) -> LaurentPoly {
        let terms = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (ExpVec::new(&[i as i64 + shift]), c.clone()));
        LaurentPoly::from_terms(1, terms).expect("univariate terms")
    }

    pub fn add(&self, other: &UPoly) -> UPoly {
        let n = self.0.len().max(other.0.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.0.get(i);
            let b = other.0.get(i);
            v.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        UPoly::new(v)
    }

    pub fn neg(&self) -> UPoly {
        UPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, other: &UPoly) -> UPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let mut v = vec![Rational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        UPoly::new(v)
    }

    pub fn scale(&self, c: &Rational) -> UPoly {
        UPoly::new(self.0.iter().map(|a| a * c).collect())
    }

    /// Euclidean division.
    pub fn div_rem(&self, divisor: &UPoly) -> Result<(UPoly, UPoly)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = divisor.lead().unwrap().recip();
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            return Ok((UPoly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.0.iter().enumerate() {
                if !b.is_zero() {
                    rem[k + j] -= &c * b;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((UPoly::new(quot), UPoly::new(rem)))
    }

    pub fn div_exact(&self, divisor: &UPoly) -> Result<UPoly> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::InexactDivision);
        }
        Ok(q)
    }

    pub fn monic(&self) -> UPoly {
        match self.lead() {
            Some(l) => self.scale(&l.recip()),
            None => UPoly::zero(),
        }
    }

    /// Monic greatest common divisor (zero iff both inputs are zero).
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return self.add(other).monic();
        }
        let (_, a) = super::zpoly::primitive(self);
        let (_, b) = super::zpoly::primitive(other);
        match super::zpoly::modular_gcd(&a, &b) {
            Some(g) => super::zpoly::to_upoly(&Rational::one(), &g).monic(),
            None => self.euclid_gcd(other),
        }
    }

    pub(crate) fn euclid_gcd(&self, other: &UPoly) -> UPoly {
        let (mut a, mut b) = if self.0.len() >= other.0.len() {
            (self.clone(), other.clone())
        } else {
            (other.clone(), self.clone())
        };
        while !b.is_zero() {
            let r = a.div_rem(&b).expect("nonzero divisor").1;
            a = b;
            // keeping remainders monic bounds the size of the rationals
            b = r.monic();
        }
        a.monic()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}
