//! Rational functions `num / den` of Laurent polynomials.
//!
//! In one variable the fraction is fully reduced with a univariate gcd. In
//! several variables only monomial and integer content are normalized, so equal
//! functions may have different representations there; compare with
//! [`RatFn::equals`].

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::laurent::{ExpVec, LaurentPoly};
use super::rational::Rational;
use super::upoly::UPoly;
use super::zpoly;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFn {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if num.vars() != den.vars() {
            return Err(Error::VarCountMismatch { left: num.vars(), right: den.vars() });
        }
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.vars() == 1 {
            let (n, _) = UPoly::from_laurent(&num)?;
            let (d, _) = UPoly::from_laurent(&den)?;
            let g = n.gcd(&d);
            return Ok(Self::cancel(num, den, &g));
        }
        Ok(Self::normalize(num, den))
    }

    /// Univariate construction where every irreducible factor of `den` divides
    /// `base`. Much cheaper than [`new`](Self::new) when `den` is a high power of
    /// a small polynomial.
    pub fn with_factor_base(num: LaurentPoly, den: LaurentPoly, base: &LaurentPoly) -> Result<Self> {
        if num.vars() != 1 || den.vars() != 1 || base.vars() != 1 {
            return Err(Error::WrongVarCount { expected: 1, got: num.vars().max(den.vars()) });
        }
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (n, n_shift) = UPoly::from_laurent(&num)?;
        let (d, d_shift) = UPoly::from_laurent(&den)?;
        let (b, _) = UPoly::from_laurent(base)?;
        if n.is_zero() {
            return Ok(Self::normalize(num, den));
        }
        let (cn, mut nz) = zpoly::primitive(&n);
        let (cd, mut dz) = zpoly::primitive(&d);
        let (_, mut bz) = zpoly::primitive(&b);
        // every later common factor divides the previous one
        loop {
            let g = zpoly::gcd(&nz, &bz);
            if g.len() <= 1 {
                break;
            }
            let (g, dq) = zpoly::gcd_cofactor(&dz, &g);
            if g.len() <= 1 {
                break;
            }
            nz = zpoly::div_exact(&nz, &g).ok_or(Error::InexactDivision)?;
            dz = dq;
            bz = g;
        }
        // nz and dz are primitive, so the reduced ratio gives joint content 1
        let mut ratio = cn / cd;
        if dz[0].is_negative() {
            ratio = -ratio;
            dz.iter_mut().for_each(|c| *c = -&*c);
        }
        let shift = n_shift - d_shift;
        let build = |v: &[BigInt], f: &BigInt, s: i64| {
            let terms = v
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (ExpVec::new(&[k as i64 + s]), Rational::from_integer(c * f)))
                .collect();
            LaurentPoly::from_sorted_unchecked(1, terms)
        };
        Ok(RatFn { num: build(&nz, ratio.numer(), shift), den: build(&dz, ratio.denom(), 0) })
    }

    fn cancel(num: LaurentPoly, den: LaurentPoly, g: &UPoly) -> RatFn {
        if g.degree().unwrap_or(0) == 0 {
            return Self::normalize(num, den);
        }
        let (n, ns) = UPoly::from_laurent(&num).unwrap();
        let (d, ds) = UPoly::from_laurent(&den).unwrap();
        let n = n.div_exact(g).expect("gcd divides numerator");
        let d = d.div_exact(g).expect("gcd divides denominator");
        Self::normalize(n.to_laurent(ns), d.to_laurent(ds))
    }

    /// Monomial part of `den` moves to `num`; both become integral with joint
    /// content 1 and the lexicographically-least coefficient of `den` positive.
    fn normalize(num: LaurentPoly, den: LaurentPoly) -> RatFn {
        let vars = num.vars();
        if num.is_zero() {
            return RatFn { num, den: LaurentPoly::one(vars) };
        }
        let shift = den.min_exponents();
        let one = Rational::one();
        let den = den.mul_monomial(&shift.neg(), &one);
        let num = num.mul_monomial(&shift.neg(), &one);
        let (cn, pn) = num.primitive();
        let (cd, pd) = den.primitive();
        // num/den = (cn/cd) * pn/pd
        let ratio = cn / cd;
        let scale_num = Rational::from_integer(ratio.numer().clone());
        let scale_den = Rational::from_integer(ratio.denom().clone());
        RatFn { num: pn.scale(&scale_num), den: pd.scale(&scale_den) }
    }

    pub fn from_poly(p: LaurentPoly) -> RatFn {
        let vars = p.vars();
        Self::normalize(p, LaurentPoly::one(vars))
    }

    pub fn zero(vars: usize) -> RatFn {
        Self::from_poly(LaurentPoly::zero(vars))
    }

    pub fn one(vars: usize) -> RatFn {
        Self::from_poly(LaurentPoly::one(vars))
    }

    pub fn constant(vars: usize, c: Rational) -> RatFn {
        Self::from_poly(LaurentPoly::constant(vars, c))
    }

    pub fn vars(&self) -> usize {
        self.num.vars()
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The denominator is a unit of the Laurent ring.
    pub fn is_laurent(&self) -> bool {
        self.den.is_monomial()
    }

    /// The Laurent polynomial this fraction equals, if the denominator is a unit.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        if !self.den.is_monomial() {
            return None;
        }
        let (e, c) = &self.den.terms()[0];
        Some(self.num.mul_monomial(&e.neg(), &c.recip()))
    }

    pub fn add(&self, other: &RatFn) -> Result<RatFn> {
        if self.den == other.den {
            return RatFn::new(self.num.checked_add(&other.num)?, self.den.clone());
        }
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        RatFn::new(num, self.den.checked_mul(&other.den)?)
    }

    pub fn sub(&self, other: &RatFn) -> Result<RatFn> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RatFn {
        RatFn { num: -&self.num, den: self.den.clone() }
    }

    pub fn mul(&self, other: &RatFn) -> Result<RatFn> {
        RatFn::new(self.num.checked_mul(&other.num)?, self.den.checked_mul(&other.den)?)
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Result<RatFn> {
        RatFn::new(self.num.checked_mul(p)?, self.den.clone())
    }

    pub fn div(&self, other: &RatFn) -> Result<RatFn> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFn::new(self.num.checked_mul(&other.den)?, self.den.checked_mul(&other.num)?)
    }

    /// Mathematical equality (cross multiplication), valid in any number of variables.
    pub fn equals(&self, other: &RatFn) -> bool {
        self.vars() == other.vars() && &self.num * &other.den == &other.num * &self.den
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        let d = self.den.eval(point)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(point)? / d)
    }

    /// Both parts have integer coefficients (always true after normalization).
    pub fn is_integral(&self) -> bool {
        self.num.all_integer() && self.den.all_integer()
    }

    /// The lexicographically-least denominator coefficient is positive.
    pub fn den_sign_positive(&self) -> bool {
        self.den.trailing().is_some_and(|t| t.1.is_positive())
    }

    /// Content of the denominator as an integer.
    pub fn den_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in self.den.terms() {
            g = num_integer::Integer::gcd(&g, c.numer());
        }
        g
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFn[{}]({})", self.vars(), self)
    }
}
