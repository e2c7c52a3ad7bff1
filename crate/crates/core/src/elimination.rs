//! Sylvester resultants and the power-substitution family
//! `R_n = Res_{l2}(P(m1, l1, l2^n), Q(m1, l1, l2))`.
//!
//! The Sylvester matrix lists the rows of the first argument first, with
//! coefficients in descending degree. Laurent inputs are first multiplied by
//! the monomial that makes them ordinary polynomials in the eliminated variable.

use serde::{Deserialize, Serialize};

use crate::algebra::bareiss::determinant;
use crate::algebra::{ExpVec, LaurentPoly, RatFn, Rational};
use crate::error::{Error, Result};
use crate::par::Exec;
use crate::polytope::Polytope;
use crate::quasifit::{fit_polygon_model, PolygonModel};
use crate::recurrence::{guess_recurrence, Recurrence};

/// Variable names of `P`.
pub const P_VARS: [&str; 3] = ["m1", "l1", "m2"];
/// Variable names of `Q`.
pub const Q_VARS: [&str; 3] = ["m1", "l1", "l2"];
/// Variable names of the terms `R_n`.
pub const R_VARS: [&str; 2] = ["m1", "l1"];

/// Multiplies by `x_var^s` so the lowest exponent of `x_var` becomes 0;
/// returns the product and `s`.
pub fn clear_to_polynomial(p: &LaurentPoly, var: usize) -> Result<(LaurentPoly, i64)> {
    if var >= p.vars() {
        return Err(Error::InvalidIndex { index: var, vars: p.vars() });
    }
    let s = -p.min_exp(var).unwrap_or(0);
    let mut e = ExpVec::zeros(p.vars());
    e[var] = s;
    Ok((p.mul_monomial(&e, &Rational::from_integer(1.into())), s))
}

/// Degree in `var` after clearing.
fn degree_in(p: &LaurentPoly, var: usize) -> Result<usize> {
    let (c, _) = clear_to_polynomial(p, var)?;
    Ok(c.max_exp(var).unwrap_or(0) as usize)
}

/// `Res_{x_var}(a, b)` as a Laurent polynomial in the remaining variables.
pub fn sylvester_resultant(a: &LaurentPoly, b: &LaurentPoly, var: usize) -> Result<LaurentPoly> {
    if a.vars() != b.vars() {
        return Err(Error::VarCountMismatch { left: a.vars(), right: b.vars() });
    }
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (a, _) = clear_to_polynomial(a, var)?;
    let (b, _) = clear_to_polynomial(b, var)?;
    let da = a.max_exp(var).unwrap() as usize;
    let db = b.max_exp(var).unwrap() as usize;
    if da == 0 && db == 0 {
        return Err(Error::Precondition(format!("variable {var} occurs in neither polynomial")));
    }
    let rest = a.vars() - 1;
    let dense = |p: &LaurentPoly, d: usize| -> Result<Vec<LaurentPoly>> {
        let mut v = vec![LaurentPoly::zero(rest); d + 1];
        for (k, c) in p.coefficients_in(var)? {
            v[d - k as usize] = c;
        }
        Ok(v)
    };
    let ca = dense(&a, da)?;
    let cb = dense(&b, db)?;
    let size = da + db;
    let mut m = vec![vec![LaurentPoly::zero(rest); size]; size];
    for i in 0..db {
        for (j, c) in ca.iter().enumerate() {
            m[i][i + j] = c.clone();
        }
    }
    for i in 0..da {
        for (j, c) in cb.iter().enumerate() {
            m[db + i][i + j] = c.clone();
        }
    }
    determinant(rest, m)
}

/// `P(m1, l1, m2)` and `Q(m1, l1, l2)` with positive degrees in `m2` and `l2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EliminationInstance {
    #[serde(rename = "P")]
    p: LaurentPoly,
    #[serde(rename = "Q")]
    q: LaurentPoly,
}

#[derive(Deserialize)]
struct InstanceRepr {
    #[serde(rename = "P")]
    p: LaurentPoly,
    #[serde(rename = "Q")]
    q: LaurentPoly,
}

impl<'de> Deserialize<'de> for EliminationInstance {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = InstanceRepr::deserialize(d)?;
        EliminationInstance::new(r.p, r.q).map_err(serde::de::Error::custom)
    }
}

impl EliminationInstance {
    pub fn new(p: LaurentPoly, q: LaurentPoly) -> Result<Self> {
        for f in [&p, &q] {
            if f.vars() != 3 {
                return Err(Error::WrongVarCount { expected: 3, got: f.vars() });
            }
            if f.is_zero() {
                return Err(Error::ZeroPolynomial);
            }
        }
        if degree_in(&p, 2)? < 1 || degree_in(&q, 2)? < 1 {
            return Err(Error::Degenerate("P and Q need positive degree in m2 and l2".into()));
        }
        Ok(EliminationInstance { p, q })
    }

    /// Parses both polynomials from text in the variables `m1, l1, m2` and `m1, l1, l2`.
    pub fn parse(p: &str, q: &str) -> Result<Self> {
        Self::new(LaurentPoly::parse(&P_VARS, p)?, LaurentPoly::parse(&Q_VARS, q)?)
    }

    pub fn p(&self) -> &LaurentPoly {
        &self.p
    }

    pub fn q(&self) -> &LaurentPoly {
        &self.q
    }

    /// `(d_P, d_Q)`.
    pub fn degrees(&self) -> (usize, usize) {
        (degree_in(&self.p, 2).unwrap(), degree_in(&self.q, 2).unwrap())
    }
}

/// `Res_{l2}(P(m1, l1, l2^n), Q)` in `(m1, l1)`.
pub fn dehn_resultant(inst: &EliminationInstance, n: i64) -> Result<RatFn> {
    // m2 takes the place of l2, then l2 -> l2^n
    let p = inst.p.power_subst(2, n)?;
    let r = sylvester_resultant(&p, &inst.q, 2)?;
    Ok(RatFn::from_poly(r))
}

/// Terms, recurrence and Newton polygon model of the family `R_1..R_nMax`.
/// A missing recurrence or model is recorded as `None` (`null` in JSON).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliminationReport {
    /// `terms[k]` is `R_{k+1}`.
    pub terms: Vec<RatFn>,
    pub recurrence: Option<Recurrence>,
    pub model: Option<PolygonModel>,
}

impl EliminationReport {
    /// Newton polygons of the numerators, indexed by `n` (entry 0 is unused).
    pub fn polygons(&self) -> Result<Vec<Option<Polytope>>> {
        let mut out = vec![None];
        for t in &self.terms {
            out.push(if t.num().is_zero() { None } else { Some(Polytope::newton(t.num())?) });
        }
        Ok(out)
    }
}

/// Degree bound of the polygon model fitted in [`elimination_report`].
pub const REPORT_MODEL_DEGREE: usize = 2;

pub fn elimination_report(inst: &EliminationInstance, n_max: usize, d_max: usize, exec: Exec) -> Result<EliminationReport> {
    if d_max == 0 || n_max < 2 * d_max + 4 {
        return Err(Error::Precondition(format!("nMax = {n_max} must be at least 2 dMax + 4 = {}", 2 * d_max + 4)));
    }
    let terms: Vec<RatFn> =
        exec.map_range(1..n_max + 1, |n| dehn_resultant(inst, n as i64)).into_iter().collect::<Result<_>>()?;
    let mut report = EliminationReport { terms, recurrence: None, model: None };
    let numerators: Vec<LaurentPoly> = report.terms.iter().map(|t| t.num().clone()).collect();
    report.recurrence = guess_recurrence(&numerators, d_max, None)?;
    let polys = report.polygons()?;
    let m_max = ((polys.len() - 1) / (2 * (REPORT_MODEL_DEGREE + 2))).clamp(1, 6);
    report.model = match fit_polygon_model(&polys, REPORT_MODEL_DEGREE, m_max, 8) {
        Ok(m) => m,
        Err(Error::InsufficientData(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xz(s: &str) -> LaurentPoly {
        LaurentPoly::parse(&["x", "z"], s).unwrap()
    }

    fn x(s: &str) -> LaurentPoly {
        LaurentPoly::parse(&["x"], s).unwrap()
    }

    fn r(s: &str) -> LaurentPoly {
        LaurentPoly::parse(&R_VARS, s).unwrap()
    }

    #[test]
    fn small_resultants() {
        assert_eq!(sylvester_resultant(&xz("z - x"), &xz("z - 1"), 1).unwrap(), x("x - 1"));
        assert_eq!(sylvester_resultant(&xz("z^2 - x"), &xz("z - 1"), 1).unwrap(), x("1 - x"));
        assert_eq!(sylvester_resultant(&xz("z^3 + x"), &xz("2*x"), 1).unwrap(), x("8*x^3"));
        assert!(matches!(sylvester_resultant(&xz("x"), &xz("x + 1"), 1), Err(Error::Precondition(_))));
        assert_eq!(sylvester_resultant(&xz("0"), &xz("z"), 1), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn laurent_inputs_are_cleared() {
        // z^-1 (z^2 - x) has the same resultant as z^2 - x
        assert_eq!(sylvester_resultant(&xz("z - x*z^-1"), &xz("z - 1"), 1).unwrap(), x("1 - x"));
        let (p, s) = clear_to_polynomial(&xz("z^-2 + x"), 1).unwrap();
        assert_eq!((p, s), (xz("1 + x*z^2"), 2));
    }

    #[test]
    fn power_family_closed_form() {
        let inst = EliminationInstance::parse("m2 - m1", "l2 - l1").unwrap();
        for n in 1..=6i64 {
            let rn = dehn_resultant(&inst, n).unwrap();
            let closed = r(&format!("l1^{n} - m1"));
            let expect = if n % 2 == 0 { closed } else { -&closed };
            assert_eq!(rn, RatFn::from_poly(expect), "n = {n}");
        }
        // n = 1 is the plain resultant with m2 renamed
        let p1 = inst.p().clone();
        assert_eq!(dehn_resultant(&inst, 1).unwrap(), RatFn::from_poly(sylvester_resultant(&p1, inst.q(), 2).unwrap()));
    }

    #[test]
    fn common_root_vanishes() {
        let inst = EliminationInstance::parse("m2 - 1", "l2 - 1").unwrap();
        assert!(dehn_resultant(&inst, 3).unwrap().is_zero());
    }

    #[test]
    fn degenerate_instances() {
        assert!(matches!(EliminationInstance::parse("m1 + l1", "l2 - l1"), Err(Error::Degenerate(_))));
        assert!(EliminationInstance::new(LaurentPoly::one(2), LaurentPoly::one(3)).is_err());
    }

    #[test]
    fn report_on_constant_p() {
        let inst = EliminationInstance::parse("m2 - 1", "l2 - l1").unwrap();
        let rep = elimination_report(&inst, 12, 2, Exec::Sequential).unwrap();
        for (k, t) in rep.terms.iter().enumerate() {
            let n = k + 1;
            let closed = r(&format!("l1^{n} - 1"));
            assert!(t.num() == &closed || t.num() == &-&closed);
        }
        let rec = rep.recurrence.as_ref().unwrap();
        let nums: Vec<LaurentPoly> = rep.terms.iter().map(|t| t.num().clone()).collect();
        assert!(rec.annihilates(&nums).unwrap());
        let model = rep.model.as_ref().unwrap();
        assert_eq!(model.degree(), 1);
        assert_eq!(model.eval(9).unwrap().vertices(), &[vec![0, 0], vec![0, 9]]);
        assert!(matches!(elimination_report(&inst, 7, 2, Exec::Sequential), Err(Error::Precondition(_))));
    }

    #[test]
    fn json_round_trip() {
        let inst = EliminationInstance::parse("m2 - m1", "l2 - l1").unwrap();
        let s = serde_json::to_string(&inst).unwrap();
        assert!(s.starts_with(r#"{"P":{"vars":3"#));
        assert_eq!(serde_json::from_str::<EliminationInstance>(&s).unwrap(), inst);
    }
}
