//! Root valuations from Newton polygons of characteristic polynomials, the
//! slope fan in two variables, and the comparison of predicted slopes with the
//! degree growth of generated terms.
//!
//! The characteristic polynomial is a Laurent polynomial in `(z, x_1, .., x_r)`
//! with `z` as variable 0. For a direction `w` the points `(b, min_a w.a)` over
//! the monomials `x^a z^b` form a Newton polygon whose lower-hull edges give the
//! minimal exponents of the roots in `z`; upper hulls of the maxima give the
//! maximal exponents.

use std::cmp::Ordering;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{rational_vec, LaurentPoly, Rational};
use crate::error::{Error, Result};
use crate::quasifit::{fit_quasipoly_sparse, QuasiPolynomial};
use crate::recurrence::Recurrence;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    /// Minimal exponent.
    #[serde(rename = "vstar")]
    VStar,
    /// Maximal exponent.
    #[serde(rename = "v")]
    V,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlopeSpectrum {
    #[serde(with = "rational_vec")]
    pub slopes: Vec<Rational>,
    pub multiplicities: Vec<usize>,
}

impl SlopeSpectrum {
    pub fn contains(&self, s: &Rational) -> bool {
        self.slopes.contains(s)
    }

    pub fn position(&self, s: &Rational) -> Option<usize> {
        self.slopes.iter().position(|x| x == s)
    }
}

/// `(b, extreme of w.a)` for every `z`-exponent `b`, shifted so the least `b` is 0.
fn weight_points(chi: &LaurentPoly, omega: &[i64], side: Side) -> Result<Vec<(i64, i64)>> {
    if chi.vars() < 2 {
        return Err(Error::Precondition("characteristic polynomial needs z and at least one x".into()));
    }
    if omega.len() != chi.vars() - 1 {
        return Err(Error::VarCountMismatch { left: chi.vars() - 1, right: omega.len() });
    }
    if omega.iter().all(|&w| w == 0) {
        return Err(Error::ZeroDirection);
    }
    let cols = chi.coefficients_in(0)?;
    if cols.len() < 2 {
        return Err(Error::Precondition("z-degree must be positive".into()));
    }
    let b0 = cols[0].0;
    Ok(cols
        .iter()
        .map(|(b, c)| {
            let ws = c.exponents().map(|e| e.dot(omega));
            let w = match side {
                Side::VStar => ws.min().unwrap(),
                Side::V => ws.max().unwrap(),
            };
            (b - b0, w)
        })
        .collect())
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i128 {
    (a.0 - o.0) as i128 * (b.1 - o.1) as i128 - (a.1 - o.1) as i128 * (b.0 - o.0) as i128
}

/// Indices of the lower (or upper) hull of points sorted by first coordinate.
fn hull_indices(pts: &[(i64, i64)], upper: bool) -> Vec<usize> {
    let mut h: Vec<usize> = Vec::new();
    for i in 0..pts.len() {
        while h.len() >= 2 {
            let c = cross(pts[h[h.len() - 2]], pts[h[h.len() - 1]], pts[i]);
            if (!upper && c <= 0) || (upper && c >= 0) {
                h.pop();
            } else {
                break;
            }
        }
        h.push(i);
    }
    h
}

/// Valuations of the roots in `z` after substituting `x_i = t^{w_i}`:
/// negated slopes of the lower hull (`VStar`) or upper hull (`V`), with edge
/// widths as multiplicities, sorted ascending.
pub fn root_valuations(chi: &LaurentPoly, omega: &[i64], side: Side) -> Result<SlopeSpectrum> {
    let pts = weight_points(chi, omega, side)?;
    let hull = hull_indices(&pts, side == Side::V);
    let mut edges: Vec<(Rational, usize)> = hull
        .windows(2)
        .map(|w| {
            let (a, b) = (pts[w[0]], pts[w[1]]);
            let width = b.0 - a.0;
            (-Rational::new((b.1 - a.1).into(), width.into()), width as usize)
        })
        .collect();
    edges.sort_by(|x, y| x.0.cmp(&y.0));
    Ok(SlopeSpectrum {
        slopes: edges.iter().map(|e| e.0.clone()).collect(),
        multiplicities: edges.iter().map(|e| e.1).collect(),
    })
}

/// Primitive rays in the plane, sorted by angle from the positive first axis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fan2D {
    pub rays: Vec<[i64; 2]>,
}

fn primitive(v: [i64; 2]) -> [i64; 2] {
    let g = num_integer::gcd(v[0].abs(), v[1].abs()).max(1);
    [v[0] / g, v[1] / g]
}

fn half(v: [i64; 2]) -> u8 {
    if v[1] > 0 || (v[1] == 0 && v[0] > 0) {
        0
    } else {
        1
    }
}

fn cross2(a: [i64; 2], b: [i64; 2]) -> i128 {
    a[0] as i128 * b[1] as i128 - a[1] as i128 * b[0] as i128
}

fn angle_cmp(a: &[i64; 2], b: &[i64; 2]) -> Ordering {
    half(*a).cmp(&half(*b)).then_with(|| 0.cmp(&cross2(*a, *b)))
}

/// Linear description of the lower-hull valuations on an open cone: for each
/// hull edge between `x^a z^b` and `x^a' z^b'` the valuation is `w.(a - a')/(b' - b)`.
/// Returned as sorted `(vector, multiplicity)` pairs.
pub fn cone_structure(chi: &LaurentPoly, omega: &[i64]) -> Result<Vec<([Rational; 2], usize)>> {
    if chi.vars() != 3 {
        return Err(Error::WrongVarCount { expected: 3, got: chi.vars() });
    }
    let cols = chi.coefficients_in(0)?;
    let b0 = cols[0].0;
    let mut pts = Vec::with_capacity(cols.len());
    let mut arg = Vec::with_capacity(cols.len());
    for (b, c) in &cols {
        let best = c.exponents().min_by_key(|e| e.dot(omega)).unwrap();
        pts.push((b - b0, best.dot(omega)));
        arg.push([best.as_slice()[0], best.as_slice()[1]]);
    }
    let hull = hull_indices(&pts, false);
    let mut out: Vec<([Rational; 2], usize)> = hull
        .windows(2)
        .map(|w| {
            let width = pts[w[1]].0 - pts[w[0]].0;
            let (a, a2) = (arg[w[0]], arg[w[1]]);
            let v = [Rational::new((a[0] - a2[0]).into(), width.into()), Rational::new((a[1] - a2[1]).into(), width.into())];
            (v, width as usize)
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Rays where the linear structure of the lower-hull valuations changes.
///
/// Candidates are the normals of all tie loci (two monomials with the same
/// `z`-exponent, or three with distinct ones becoming collinear); a candidate
/// is kept when the structures of its two neighbouring cones differ.
pub fn slope_fan(chi: &LaurentPoly) -> Result<Fan2D> {
    if chi.vars() != 3 {
        return Err(Error::WrongVarCount { expected: 3, got: chi.vars() });
    }
    let cols = chi.coefficients_in(0)?;
    if cols.len() < 2 {
        return Err(Error::Precondition("z-degree must be positive".into()));
    }
    let mons: Vec<(i64, [i64; 2])> =
        cols.iter().flat_map(|(b, c)| c.exponents().map(move |e| (*b, [e.as_slice()[0], e.as_slice()[1]]))).collect();
    let mut normals: Vec<[i64; 2]> = Vec::new();
    for i in 0..mons.len() {
        for j in i + 1..mons.len() {
            let (b1, a1) = mons[i];
            let (b2, a2) = mons[j];
            if b1 == b2 {
                normals.push([a1[0] - a2[0], a1[1] - a2[1]]);
                continue;
            }
            for &(b3, a3) in &mons[j + 1..] {
                if b3 == b1 || b3 == b2 {
                    continue;
                }
                normals.push([
                    (b2 - b1) * (a3[0] - a1[0]) - (b3 - b1) * (a2[0] - a1[0]),
                    (b2 - b1) * (a3[1] - a1[1]) - (b3 - b1) * (a2[1] - a1[1]),
                ]);
            }
        }
    }
    let mut rays: Vec<[i64; 2]> = Vec::new();
    for n in normals.into_iter().filter(|n| n != &[0, 0]) {
        let p = primitive([-n[1], n[0]]);
        rays.push(p);
        rays.push([-p[0], -p[1]]);
    }
    rays.sort_by(angle_cmp);
    rays.dedup();
    if rays.is_empty() {
        return Ok(Fan2D { rays });
    }
    let k = rays.len();
    // cone i lies between rays[i] and rays[i + 1]
    let structures: Vec<Vec<([Rational; 2], usize)>> = (0..k)
        .map(|i| {
            let (a, b) = (rays[i], rays[(i + 1) % k]);
            let c = cross2(a, b);
            let inside = if k == 1 {
                [-a[1], a[0]]
            } else if c > 0 {
                [a[0] + b[0], a[1] + b[1]]
            } else if c == 0 {
                [-a[1], a[0]]
            } else {
                [-(a[0] + b[0]), -(a[1] + b[1])]
            };
            cone_structure(chi, &inside)
        })
        .collect::<Result<_>>()?;
    let kept = (0..k).filter(|&i| structures[(i + k - 1) % k] != structures[i]).map(|i| rays[i]).collect();
    Ok(Fan2D { rays: kept })
}

/// Slope check for one residue class of a fitted valuation sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueSlope {
    pub side: Side,
    pub residue: usize,
    #[serde(with = "crate::algebra::rational_str")]
    pub slope: Rational,
    #[serde(with = "crate::algebra::rational_str")]
    pub intercept: Rational,
    /// Index of the matching spectrum element, if any.
    pub witness: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SideReport {
    pub spectrum: SlopeSpectrum,
    /// Valuation of each term after specialization (`None` for a zero term).
    pub valuations: Vec<Option<i64>>,
    pub model: Option<QuasiPolynomial>,
    /// Model agrees with every term after the fit window.
    pub holdout_ok: bool,
    pub residues: Vec<ResidueSlope>,
}

impl SideReport {
    pub fn fitted(&self) -> bool {
        self.model.is_some() && self.holdout_ok
    }

    pub fn all_members(&self) -> bool {
        self.residues.iter().all(|r| r.witness.is_some())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlopeReport {
    pub omega: Vec<i64>,
    pub vstar: SideReport,
    pub v: SideReport,
}

/// Parameters of [`predicted_vs_empirical`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SlopeFitConfig {
    /// Last generated index.
    pub n_max: usize,
    /// Last index used for fitting; later indices are the holdout.
    pub fit_last: usize,
    pub m_max: usize,
    pub prefix_budget: usize,
}

impl Default for SlopeFitConfig {
    fn default() -> Self {
        SlopeFitConfig { n_max: 64, fit_last: 48, m_max: 6, prefix_budget: 8 }
    }
}

fn side_report(
    vals: Vec<Option<i64>>,
    spectrum: SlopeSpectrum,
    side: Side,
    cfg: &SlopeFitConfig,
) -> Result<SideReport> {
    let seq: Vec<Option<Rational>> = vals.iter().map(|v| v.map(|x| Rational::from_integer(x.into()))).collect();
    let model = fit_quasipoly_sparse(&seq[..=cfg.fit_last], 1, cfg.m_max, cfg.prefix_budget)?;
    let mut residues = Vec::new();
    let mut holdout_ok = false;
    if let Some(m) = &model {
        holdout_ok = m.predicts(&seq, cfg.fit_last + 1..=cfg.n_max);
        for (r, c) in m.residues.iter().enumerate() {
            let Some(c) = c else { continue };
            let slope = c.0.get(1).cloned().unwrap_or_else(Rational::zero);
            let intercept = c.0.first().cloned().unwrap_or_else(Rational::zero);
            let witness = spectrum.position(&slope);
            residues.push(ResidueSlope { side, residue: r, slope, intercept, witness });
        }
    }
    Ok(SideReport { spectrum, valuations: vals, model, holdout_ok, residues })
}

/// Generates `R_0..R_nMax`, specializes along `omega`, fits the minimal and
/// maximal exponent sequences on `[0, fit_last]` and compares each fitted slope
/// with the spectra of the characteristic polynomial.
pub fn predicted_vs_empirical(
    rec: &Recurrence,
    init: &[LaurentPoly],
    omega: &[i64],
    cfg: &SlopeFitConfig,
) -> Result<SlopeReport> {
    if cfg.fit_last > cfg.n_max {
        return Err(Error::Precondition("fit window exceeds the generated range".into()));
    }
    let gen = rec.generate(init, cfg.n_max)?;
    let mut vstar = Vec::with_capacity(gen.terms.len());
    let mut v = Vec::with_capacity(gen.terms.len());
    for (num, den) in gen.terms.iter().zip(&gen.denominators) {
        let sn = num.specialize(omega)?;
        if sn.is_zero() {
            vstar.push(None);
            v.push(None);
            continue;
        }
        let (nlo, nhi) = sn.valuations()?;
        let (dlo, dhi) = den.specialize(omega)?.valuations()?;
        vstar.push(Some(nlo - dlo));
        v.push(Some(nhi - dhi));
    }
    let chi = rec.characteristic_polynomial();
    Ok(SlopeReport {
        omega: omega.to_vec(),
        vstar: side_report(vstar, root_valuations(&chi, omega, Side::VStar)?, Side::VStar, cfg)?,
        v: side_report(v, root_valuations(&chi, omega, Side::V)?, Side::V, cfg)?,
    })
}
