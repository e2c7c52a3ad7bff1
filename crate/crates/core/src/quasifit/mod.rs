//! Exact quasi-polynomial fitting.
//!
//! A quasi-polynomial of period `M` with prefix `n0` is a list of `M`
//! polynomials; index `n >= n0` is predicted by the polynomial of residue
//! `n mod M`. Fitting interpolates each residue class on its first `deg + 1`
//! usable points and then requires every later point of the class to match.

mod polygon;
mod zeros;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{rational_vec, Rational, UPoly};
use crate::error::{Error, Result};

pub use polygon::{fit_polygon_model, fit_polygon_model_with_period, shear_polygon, shear_polygons, PolygonModel, ResidueModel};
pub use zeros::{zero_pattern, ZeroPattern};

/// Polynomial in `n` with rational coefficients, constant term first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coeffs(#[serde(with = "rational_vec")] pub Vec<Rational>);

impl Coeffs {
    pub fn eval(&self, n: usize) -> Rational {
        let x = Rational::from_integer(n.into());
        let mut acc = Rational::zero();
        for c in self.0.iter().rev() {
            acc = acc * &x + c;
        }
        acc
    }

    /// Degree, with the zero polynomial reported as 0.
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasiPolynomial {
    pub period: usize,
    pub prefix: usize,
    /// `None` for a residue class without usable data.
    pub residues: Vec<Option<Coeffs>>,
}

impl QuasiPolynomial {
    /// Predicted value at `n`; `None` before the prefix or on an empty class.
    pub fn eval(&self, n: usize) -> Option<Rational> {
        if n < self.prefix {
            return None;
        }
        self.residues[n % self.period].as_ref().map(|c| c.eval(n))
    }

    pub fn degree(&self) -> usize {
        self.residues.iter().flatten().map(Coeffs::degree).max().unwrap_or(0)
    }

    /// Exact agreement with `seq` on every defined index in `range` past the prefix.
    pub fn predicts(&self, seq: &[Option<Rational>], range: std::ops::RangeInclusive<usize>) -> bool {
        range.filter(|&n| n >= self.prefix && n < seq.len()).all(|n| match (&seq[n], self.eval(n)) {
            (Some(a), Some(b)) => *a == b,
            (None, _) => true,
            (Some(_), None) => false,
        })
    }
}

/// Interpolating polynomial through `points` (distinct abscissae).
pub fn interpolate(points: &[(usize, Rational)]) -> Coeffs {
    let mut acc = UPoly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = UPoly::one();
        let mut denom = Rational::from_integer(1.into());
        for (j, (xj, _)) in points.iter().enumerate() {
            if i != j {
                let xj = Rational::from_integer((*xj).into());
                basis = basis.mul(&UPoly::new(vec![-xj.clone(), Rational::from_integer(1.into())]));
                denom *= Rational::from_integer((*xi).into()) - xj;
            }
        }
        acc = acc.add(&basis.scale(&(yi / denom)));
    }
    Coeffs(acc.coeffs().to_vec())
}

/// Fits one class: interpolate the first `deg + 1` points, verify the rest.
/// At least one verification point is required.
pub(crate) fn fit_class(points: &[(usize, Rational)], deg: usize) -> Option<Coeffs> {
    if points.len() < deg + 2 {
        return None;
    }
    let c = interpolate(&points[..=deg]);
    points[deg + 1..].iter().all(|(n, v)| c.eval(*n) == *v).then_some(c)
}

fn check_deg(deg_max: usize) -> Result<()> {
    if deg_max > 2 {
        return Err(Error::Precondition(format!("degree bound {deg_max} exceeds 2")));
    }
    Ok(())
}

/// Minimum number of terms (`N + 1`) for a fit with these bounds.
pub fn required_len(deg_max: usize, m_max: usize) -> usize {
    2 * m_max * (deg_max + 2) + 1
}

fn check_len(len: usize, deg_max: usize, m_max: usize) -> Result<()> {
    if m_max == 0 {
        return Err(Error::Precondition("MMax must be at least 1".into()));
    }
    if len < required_len(deg_max, m_max) {
        return Err(Error::InsufficientData(format!(
            "need N >= {} (2 MMax (deg + 2)), got N = {}",
            required_len(deg_max, m_max) - 1,
            len as i64 - 1
        )));
    }
    Ok(())
}

/// Fit with a fixed period and prefix.
pub fn fit_at(seq: &[Option<Rational>], deg: usize, period: usize, prefix: usize) -> Option<QuasiPolynomial> {
    let mut residues = Vec::with_capacity(period);
    for r in 0..period {
        let start = if prefix <= r { r } else { r + (prefix - r).div_ceil(period) * period };
        let points: Vec<(usize, Rational)> =
            (start..seq.len()).step_by(period).filter_map(|n| seq[n].clone().map(|v| (n, v))).collect();
        if points.is_empty() {
            residues.push(None);
            continue;
        }
        residues.push(Some(fit_class(&points, deg)?));
    }
    if residues.iter().all(Option::is_none) {
        return None;
    }
    Some(QuasiPolynomial { period, prefix, residues })
}

/// Smallest `(M, prefix)` in lexicographic order with an exact fit of degree
/// at most `deg_max`. Undefined entries (`None`) are skipped. `Ok(None)` when
/// no model exists within the bounds.
pub fn fit_quasipoly_sparse(
    seq: &[Option<Rational>],
    deg_max: usize,
    m_max: usize,
    prefix_budget: usize,
) -> Result<Option<QuasiPolynomial>> {
    check_deg(deg_max)?;
    check_len(seq.len(), deg_max, m_max)?;
    for m in 1..=m_max {
        for prefix in 0..=prefix_budget {
            if let Some(q) = fit_at(seq, deg_max, m, prefix) {
                return Ok(Some(q));
            }
        }
    }
    Ok(None)
}

/// [`fit_quasipoly_sparse`] on a fully defined sequence.
pub fn fit_quasipoly(
    seq: &[Rational],
    deg_max: usize,
    m_max: usize,
    prefix_budget: usize,
) -> Result<Option<QuasiPolynomial>> {
    let seq: Vec<Option<Rational>> = seq.iter().cloned().map(Some).collect();
    fit_quasipoly_sparse(&seq, deg_max, m_max, prefix_budget)
}

/// Least prefix fit with the period fixed.
pub fn fit_quasipoly_with_period(
    seq: &[Option<Rational>],
    deg_max: usize,
    period: usize,
    prefix_budget: usize,
) -> Result<Option<QuasiPolynomial>> {
    check_deg(deg_max)?;
    check_len(seq.len(), deg_max, period)?;
    Ok((0..=prefix_budget).find_map(|p| fit_at(seq, deg_max, period, p)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;

    fn seq(f: impl Fn(i64) -> i64, n: i64) -> Vec<Rational> {
        (0..=n).map(|k| int(f(k))).collect()
    }

    fn coeffs(v: &[i64]) -> Option<Coeffs> {
        Some(Coeffs(v.iter().map(|&x| int(x)).collect()))
    }

    #[test]
    fn parity_shifted_line() {
        let q = fit_quasipoly(&seq(|n| n + n % 2, 20), 1, 2, 2).unwrap().unwrap();
        assert_eq!((q.period, q.prefix), (2, 0));
        assert_eq!(q.residues, vec![coeffs(&[0, 1]), coeffs(&[1, 1])]);
    }

    #[test]
    fn constant_sequence() {
        let q = fit_quasipoly(&seq(|_| 7, 20), 1, 2, 2).unwrap().unwrap();
        assert_eq!((q.period, q.prefix), (1, 0));
        assert_eq!(q.residues, vec![coeffs(&[7])]);
    }

    #[test]
    fn degree_obstruction() {
        assert_eq!(fit_quasipoly(&seq(|n| n * n, 20), 1, 2, 2).unwrap(), None);
        let q = fit_quasipoly(&seq(|n| n * n, 20), 2, 2, 2).unwrap().unwrap();
        assert_eq!(q.residues, vec![coeffs(&[0, 0, 1])]);
    }

    #[test]
    fn prefix_absorbs_exceptions() {
        let mut s = seq(|n| 3 * n - 1, 30);
        s[1] = int(100);
        let q = fit_quasipoly(&s, 1, 3, 4).unwrap().unwrap();
        assert_eq!((q.period, q.prefix), (1, 2));
    }

    #[test]
    fn insufficient_data() {
        assert!(matches!(fit_quasipoly(&seq(|n| n, 10), 1, 2, 2), Err(Error::InsufficientData(_))));
        assert!(matches!(fit_quasipoly(&seq(|n| n, 40), 3, 2, 2), Err(Error::Precondition(_))));
    }

    #[test]
    fn sparse_sequences_skip_gaps() {
        let s: Vec<Option<Rational>> = (0..=30).map(|n| (n % 5 != 2).then(|| int(2 * n))).collect();
        let q = fit_quasipoly_sparse(&s, 1, 3, 2).unwrap().unwrap();
        assert_eq!(q.period, 1);
        assert!(q.predicts(&s, 0..=30));
        // a class with no data is left undefined
        let s: Vec<Option<Rational>> = (0..=30).map(|n| (n % 2 == 0).then(|| int(n))).collect();
        let q = fit_quasipoly_sparse(&s, 1, 3, 2).unwrap().unwrap();
        assert_eq!(q.period, 1);
    }

    #[test]
    fn interpolation_matches_values() {
        let pts = vec![(2, int(5)), (4, int(17)), (7, int(50))];
        let c = interpolate(&pts);
        assert_eq!(c, coeffs(&[1, 0, 1]).unwrap());
    }

    #[test]
    fn json_shape() {
        let q = QuasiPolynomial { period: 2, prefix: 1, residues: vec![coeffs(&[0, 1]), None] };
        let s = serde_json::to_string(&q).unwrap();
        assert_eq!(s, r#"{"period":2,"prefix":1,"residues":[["0","1"],null]}"#);
        assert_eq!(serde_json::from_str::<QuasiPolynomial>(&s).unwrap(), q);
    }
}
