//! Sparse Laurent polynomials in a fixed number of variables over the rationals.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use super::rational::{self, Rational};
use crate::error::{Error, Result};

/// Exponent vector of a Laurent monomial. Ordered lexicographically.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExpVec(SmallVec<[i64; 4]>);

impl ExpVec {
    pub fn new(entries: &[i64]) -> Self {
        ExpVec(SmallVec::from_slice(entries))
    }

    pub fn zeros(len: usize) -> Self {
        ExpVec(SmallVec::from_elem(0, len))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn dot(&self, w: &[i64]) -> i64 {
        self.0.iter().zip(w).map(|(a, b)| a * b).sum()
    }

    pub fn add(&self, other: &ExpVec) -> ExpVec {
        ExpVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &ExpVec) -> ExpVec {
        ExpVec(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> ExpVec {
        ExpVec(self.0.iter().map(|a| -a).collect())
    }

    /// Drops entry `index`.
    pub fn without(&self, index: usize) -> ExpVec {
        let mut v = self.0.clone();
        v.remove(index);
        ExpVec(v)
    }

    /// Inserts `value` at position `index`.
    pub fn with_inserted(&self, index: usize, value: i64) -> ExpVec {
        let mut v = self.0.clone();
        v.insert(index, value);
        ExpVec(v)
    }
}

impl std::ops::Index<usize> for ExpVec {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl std::ops::IndexMut<usize> for ExpVec {
    fn index_mut(&mut self, i: usize) -> &mut i64 {
        &mut self.0[i]
    }
}

impl fmt::Debug for ExpVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

impl From<Vec<i64>> for ExpVec {
    fn from(v: Vec<i64>) -> Self {
        ExpVec(SmallVec::from_vec(v))
    }
}

/// A Laurent polynomial in `vars` variables with rational coefficients.
///
/// Terms are kept sorted by exponent (lexicographic, ascending) with no zero
/// coefficients; the zero polynomial has no terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    vars: usize,
    terms: Vec<(ExpVec, Rational)>,
}

impl LaurentPoly {
    pub fn zero(vars: usize) -> Self {
        LaurentPoly { vars, terms: Vec::new() }
    }

    pub fn one(vars: usize) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn constant(vars: usize, c: Rational) -> Self {
        Self::monomial(ExpVec::zeros(vars), c)
    }

    pub fn from_int(vars: usize, c: i64) -> Self {
        Self::constant(vars, rational::int(c))
    }

    pub fn monomial(exp: ExpVec, c: Rational) -> Self {
        let vars = exp.len();
        if c.is_zero() {
            return Self::zero(vars);
        }
        LaurentPoly { vars, terms: vec![(exp, c)] }
    }

    /// The variable `x_index` (zero based).
    pub fn var(vars: usize, index: usize) -> Result<Self> {
        if index >= vars {
            return Err(Error::InvalidIndex { index, vars });
        }
        let mut e = ExpVec::zeros(vars);
        e[index] = 1;
        Ok(Self::monomial(e, Rational::one()))
    }

    /// Builds a polynomial from arbitrary terms; duplicates are summed and zeros pruned.
    pub fn from_terms<I>(vars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExpVec, Rational)>,
    {
        let mut v: Vec<(ExpVec, Rational)> = Vec::new();
        for (e, c) in terms {
            if e.len() != vars {
                return Err(Error::VarCountMismatch { left: vars, right: e.len() });
            }
            v.push((e, c));
        }
        Ok(Self::from_unsorted(vars, v))
    }

    /// Terms already sorted by exponent with nonzero, distinct entries.
    pub(crate) fn from_sorted_unchecked(vars: usize, terms: Vec<(ExpVec, Rational)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        LaurentPoly { vars, terms }
    }

    fn from_unsorted(vars: usize, mut v: Vec<(ExpVec, Rational)>) -> Self {
        v.sort_by(|a, b| a.0.cmp(&b.0));
        let mut terms: Vec<(ExpVec, Rational)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match terms.last_mut() {
                Some(last) if last.0 == e => last.1 += c,
                _ => {
                    if let Some(last) = terms.last() {
                        if last.1.is_zero() {
                            terms.pop();
                        }
                    }
                    terms.push((e, c));
                }
            }
        }
        if terms.last().is_some_and(|t| t.1.is_zero()) {
            terms.pop();
        }
        LaurentPoly { vars, terms }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_zero() && self.terms[0].1.is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(ExpVec, Rational)] {
        &self.terms
    }

    pub fn exponents(&self) -> impl Iterator<Item = &ExpVec> {
        self.terms.iter().map(|t| &t.0)
    }

    pub fn coeff(&self, e: &ExpVec) -> Rational {
        match self.terms.binary_search_by(|t| t.0.cmp(e)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    /// Lexicographically largest term.
    pub fn leading(&self) -> Option<&(ExpVec, Rational)> {
        self.terms.last()
    }

    /// Lexicographically smallest term.
    pub fn trailing(&self) -> Option<&(ExpVec, Rational)> {
        self.terms.first()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_zero())
    }

    /// The constant value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(e, c)] if e.is_zero() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn all_integer(&self) -> bool {
        self.terms.iter().all(|t| t.1.is_integer())
    }

    fn check_vars(&self, other: &LaurentPoly) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::VarCountMismatch { left: self.vars, right: other.vars });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_vars(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_vars(other)?;
        Ok(self.merge(other, true))
    }

    fn merge(&self, other: &LaurentPoly, negate: bool) -> LaurentPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        LaurentPoly { vars: self.vars, terms: out }
    }

    /// Exact product.
    pub fn checked_mul(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_vars(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(LaurentPoly::zero(self.vars));
        }
        if other.terms.len() == 1 {
            let (e, c) = &other.terms[0];
            return Ok(self.mul_monomial(e, c));
        }
        if self.terms.len() == 1 {
            let (e, c) = &self.terms[0];
            return Ok(other.mul_monomial(e, c));
        }
        if self.all_integer() && other.all_integer() {
            return Ok(self.mul_integer(other));
        }
        let mut v = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                v.push((ea.add(eb), ca * cb));
            }
        }
        Ok(LaurentPoly::from_unsorted(self.vars, v))
    }

    fn mul_integer(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut acc: BTreeMap<ExpVec, BigInt> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            let ca = ca.numer();
            for (eb, cb) in &other.terms {
                let p = ca * cb.numer();
                match acc.entry(ea.add(eb)) {
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(p);
                    }
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        *o.get_mut() += p;
                    }
                }
            }
        }
        let terms = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e, Rational::from_integer(c)))
            .collect();
        LaurentPoly { vars: self.vars, terms }
    }

    /// Multiplies by `c * x^e`.
    pub fn mul_monomial(&self, e: &ExpVec, c: &Rational) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero(self.vars);
        }
        let terms = self.terms.iter().map(|(f, d)| (f.add(e), d * c)).collect();
        LaurentPoly { vars: self.vars, terms }
    }

    pub fn scale(&self, c: &Rational) -> LaurentPoly {
        self.mul_monomial(&ExpVec::zeros(self.vars), c)
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut result = LaurentPoly::one(self.vars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Evaluates at a point; fails if a variable with a negative exponent is zero.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.vars {
            return Err(Error::VarCountMismatch { left: self.vars, right: point.len() });
        }
        let mut sum = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e.as_slice()) {
                if k < 0 {
                    if x.is_zero() {
                        return Err(Error::DivisionByZero);
                    }
                    t *= num_traits::pow(x.recip(), (-k) as usize);
                } else if k > 0 {
                    t *= num_traits::pow(x.clone(), k as usize);
                }
            }
            sum += t;
        }
        Ok(sum)
    }

    /// Substitutes `x_i = t^{omega_i}`, returning a univariate polynomial in `t`.
    pub fn specialize(&self, omega: &[i64]) -> Result<LaurentPoly> {
        if omega.len() != self.vars {
            return Err(Error::VarCountMismatch { left: self.vars, right: omega.len() });
        }
        if omega.iter().all(|&w| w == 0) {
            return Err(Error::ZeroDirection);
        }
        let v = self
            .terms
            .iter()
            .map(|(e, c)| (ExpVec::new(&[e.dot(omega)]), c.clone()))
            .collect();
        Ok(LaurentPoly::from_unsorted(1, v))
    }

    /// Replaces `x_var` by `x_var^n`.
    pub fn power_subst(&self, var: usize, n: i64) -> Result<LaurentPoly> {
        if var >= self.vars {
            return Err(Error::InvalidIndex { index: var, vars: self.vars });
        }
        if n < 1 {
            return Err(Error::Precondition(format!("power substitution needs n >= 1, got {n}")));
        }
        let v = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e = e.clone();
                e[var] *= n;
                (e, c.clone())
            })
            .collect();
        Ok(LaurentPoly::from_unsorted(self.vars, v))
    }

    /// Lowest and highest exponent of a univariate polynomial.
    pub fn valuations(&self) -> Result<(i64, i64)> {
        if self.vars != 1 {
            return Err(Error::WrongVarCount { expected: 1, got: self.vars });
        }
        match (self.terms.first(), self.terms.last()) {
            (Some(lo), Some(hi)) => Ok((lo.0[0], hi.0[0])),
            _ => Err(Error::ZeroPolynomial),
        }
    }

    pub fn min_exp(&self, var: usize) -> Option<i64> {
        self.terms.iter().map(|t| t.0[var]).min()
    }

    pub fn max_exp(&self, var: usize) -> Option<i64> {
        self.terms.iter().map(|t| t.0[var]).max()
    }

    /// Per-variable exponent ranges `(min, max)`, or `None` for zero.
    pub fn exponent_box(&self) -> Option<Vec<(i64, i64)>> {
        if self.is_zero() {
            return None;
        }
        Some(
            (0..self.vars)
                .map(|i| (self.min_exp(i).unwrap(), self.max_exp(i).unwrap()))
                .collect(),
        )
    }

    /// Componentwise minimum exponent (the monomial gcd of the support).
    pub fn min_exponents(&self) -> ExpVec {
        let mut m = ExpVec::zeros(self.vars);
        for i in 0..self.vars {
            m[i] = self.min_exp(i).unwrap_or(0);
        }
        m
    }

    /// Exact division. Fails with `InexactDivision` when `divisor` does not divide `self`.
    ///
    /// Lex order is a group order on the exponent lattice, so leading terms multiply.
    /// The quotient support must lie in the box difference of the supports, which
    /// bounds the loop.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_vars(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero(self.vars));
        }
        if divisor.terms.len() == 1 {
            let (e, c) = &divisor.terms[0];
            return Ok(self.mul_monomial(&e.neg(), &c.recip()));
        }
        let a_box = self.exponent_box().unwrap();
        let b_box = divisor.exponent_box().unwrap();
        let bounds: Vec<(i64, i64)> =
            a_box.iter().zip(&b_box).map(|(a, b)| (a.0 - b.0, a.1 - b.1)).collect();
        if bounds.iter().any(|(lo, hi)| lo > hi) {
            return Err(Error::InexactDivision);
        }
        let (lead_e, lead_c) = divisor.leading().unwrap().clone();
        let mut rem: BTreeMap<ExpVec, Rational> = self.terms.iter().cloned().collect();
        let mut quotient = Vec::new();
        while let Some((e, c)) = rem.pop_last() {
            let t = e.sub(&lead_e);
            if t.as_slice().iter().zip(&bounds).any(|(&x, &(lo, hi))| x < lo || x > hi) {
                return Err(Error::InexactDivision);
            }
            let q = &c / &lead_c;
            for (de, dc) in &divisor.terms[..divisor.terms.len() - 1] {
                let key = de.add(&t);
                let delta = &q * dc;
                match rem.entry(key) {
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(-delta);
                    }
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        *o.get_mut() -= delta;
                        if o.get().is_zero() {
                            o.remove();
                        }
                    }
                }
            }
            quotient.push((t, q));
        }
        Ok(LaurentPoly::from_unsorted(self.vars, quotient))
    }

    /// True when `divisor` divides `self` exactly in the Laurent ring.
    pub fn divisible_by(&self, divisor: &LaurentPoly) -> bool {
        self.div_exact(divisor).is_ok()
    }

    /// Splits along variable `var`: returns `(exponent, coefficient)` pairs with
    /// coefficients in the remaining `vars - 1` variables, ascending in exponent.
    pub fn coefficients_in(&self, var: usize) -> Result<Vec<(i64, LaurentPoly)>> {
        if var >= self.vars {
            return Err(Error::InvalidIndex { index: var, vars: self.vars });
        }
        let mut groups: BTreeMap<i64, Vec<(ExpVec, Rational)>> = BTreeMap::new();
        for (e, c) in &self.terms {
            groups.entry(e[var]).or_default().push((e.without(var), c.clone()));
        }
        Ok(groups
            .into_iter()
            .map(|(k, v)| (k, LaurentPoly::from_unsorted(self.vars - 1, v)))
            .collect())
    }

    /// Inverse of [`coefficients_in`](Self::coefficients_in).
    pub fn from_coefficients_in(vars: usize, var: usize, coeffs: &[(i64, LaurentPoly)]) -> Result<Self> {
        if var >= vars {
            return Err(Error::InvalidIndex { index: var, vars });
        }
        let mut v = Vec::new();
        for (k, p) in coeffs {
            if p.vars + 1 != vars {
                return Err(Error::VarCountMismatch { left: vars - 1, right: p.vars });
            }
            for (e, c) in &p.terms {
                v.push((e.with_inserted(var, *k), c.clone()));
            }
        }
        Ok(LaurentPoly::from_unsorted(vars, v))
    }

    /// Inserts a new variable at position `index` that the polynomial does not depend on.
    pub fn embed(&self, index: usize) -> LaurentPoly {
        let terms = self.terms.iter().map(|(e, c)| (e.with_inserted(index, 0), c.clone())).collect();
        LaurentPoly { vars: self.vars + 1, terms }
    }

    /// Removes variable `index`; fails unless every exponent of it is zero.
    pub fn drop_var(&self, index: usize) -> Result<LaurentPoly> {
        if index >= self.vars {
            return Err(Error::InvalidIndex { index, vars: self.vars });
        }
        if self.terms.iter().any(|t| t.0[index] != 0) {
            return Err(Error::Precondition(format!("variable {index} still occurs")));
        }
        let terms = self.terms.iter().map(|(e, c)| (e.without(index), c.clone())).collect();
        Ok(LaurentPoly { vars: self.vars - 1, terms })
    }

    /// Applies an arbitrary exponent map (re-sorting and merging as needed).
    pub fn map_exponents<F: Fn(&ExpVec) -> ExpVec>(&self, vars: usize, f: F) -> LaurentPoly {
        let v = self.terms.iter().map(|(e, c)| (f(e), c.clone())).collect();
        LaurentPoly::from_unsorted(vars, v)
    }

    /// Splits `self = c * p` with `p` having coprime integer coefficients and a
    /// positive lexicographically-least coefficient. Zero maps to `(0, 0)`.
    pub fn primitive(&self) -> (Rational, LaurentPoly) {
        if self.is_zero() {
            return (Rational::zero(), self.clone());
        }
        let mut den_lcm = BigInt::one();
        for (_, c) in &self.terms {
            den_lcm = num_integer::Integer::lcm(&den_lcm, c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for (_, c) in &self.terms {
            let n = c.numer() * (&den_lcm / c.denom());
            num_gcd = num_integer::Integer::gcd(&num_gcd, &n);
        }
        let mut content = Rational::new(num_gcd, den_lcm);
        if self.terms[0].1.is_negative() {
            content = -content;
        }
        let inv = content.recip();
        (content, self.scale(&inv))
    }

    /// Formats with the given variable names.
    pub fn to_string_with(&self, names: &[&str]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors = Vec::new();
            for (i, &k) in e.as_slice().iter().enumerate() {
                let name = names.get(i).copied().unwrap_or("?");
                match k {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{k}")),
                }
            }
            if factors.is_empty() {
                out.push_str(&rational::format(&abs));
            } else {
                if !abs.is_one() {
                    out.push_str(&rational::format(&abs));
                    out.push('*');
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }

    /// Parses expressions such as `"x^4 + 3*x^2*y^-1 - 1/2"` over the given names.
    pub fn parse(names: &[&str], s: &str) -> Result<LaurentPoly> {
        let vars = names.len();
        let bad = |msg: &str| Error::Schema(format!("cannot parse polynomial {s:?}: {msg}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty"));
        }
        // split into signed terms at top-level +/- not following '^'
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        let mut prev: Option<char> = None;
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && prev.is_some_and(|p| p != '^' && p != '*' && p != '/') {
                pieces.push((neg, std::mem::take(&mut cur)));
                neg = ch == '-';
            } else if (ch == '+' || ch == '-') && prev.is_none() {
                neg = ch == '-';
            } else {
                cur.push(ch);
            }
            prev = Some(ch);
        }
        pieces.push((neg, cur));
        let mut terms = Vec::new();
        for (neg, piece) in pieces {
            if piece.is_empty() {
                return Err(bad("empty term"));
            }
            let mut coeff = Rational::one();
            let mut exp = ExpVec::zeros(vars);
            for factor in piece.split('*') {
                if factor.is_empty() {
                    return Err(bad("empty factor"));
                }
                if factor.chars().next().unwrap().is_ascii_digit() {
                    coeff *= rational::parse(factor).map_err(|_| bad("bad coefficient"))?;
                    continue;
                }
                let (name, power) = match factor.split_once('^') {
                    Some((n, p)) => (n, p.parse::<i64>().map_err(|_| bad("bad exponent"))?),
                    None => (factor, 1),
                };
                let idx = names.iter().position(|n| *n == name).ok_or_else(|| bad("unknown variable"))?;
                exp[idx] += power;
            }
            if neg {
                coeff = -coeff;
            }
            terms.push((exp, coeff));
        }
        Ok(LaurentPoly::from_unsorted(vars, terms))
    }
}

/// Conventional variable names: `x` for one variable, `x1..xr` otherwise.
pub fn default_names(vars: usize) -> Vec<String> {
    if vars == 1 {
        vec!["x".to_string()]
    } else {
        (1..=vars).map(|i| format!("x{i}")).collect()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = default_names(self.vars);
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        f.write_str(&self.to_string_with(&refs))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly[{}]({})", self.vars, self)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    /// Panics on variable-count mismatch; use `checked_add` otherwise.
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_add(rhs).expect("LaurentPoly addition")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_sub(rhs).expect("LaurentPoly subtraction")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs).expect("LaurentPoly multiplication")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect();
        LaurentPoly { vars: self.vars, terms }
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}
