//! Vertex models for sequences of polytopes.

use serde::{Deserialize, Serialize};

use super::{check_deg, check_len, fit_class, Coeffs};
use crate::algebra::rational::to_i64;
use crate::algebra::Rational;
use crate::error::{Error, Result};
use crate::polytope::Polytope;

/// Coordinate polynomials of every vertex of one residue class, in canonical
/// vertex order: `vertices[j][i]` is coordinate `i` of vertex `j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueModel {
    pub vertices: Vec<Vec<Coeffs>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolygonModel {
    pub period: usize,
    pub prefix: usize,
    pub residues: Vec<Option<ResidueModel>>,
}

impl ResidueModel {
    fn eval(&self, n: usize) -> Option<Vec<Vec<i64>>> {
        self.vertices
            .iter()
            .map(|v| v.iter().map(|c| to_i64(&c.eval(n))).collect::<Option<Vec<i64>>>())
            .collect()
    }
}

impl PolygonModel {
    /// Model polytope at `n`, or `None` before the prefix, on an empty class or
    /// at a non-lattice vertex.
    pub fn eval(&self, n: usize) -> Option<Polytope> {
        if n < self.prefix {
            return None;
        }
        let verts = self.residues[n % self.period].as_ref()?.eval(n)?;
        let dim = verts.first()?.len();
        Polytope::hull(dim, &verts).ok()
    }

    /// Largest coordinate degree.
    pub fn degree(&self) -> usize {
        self.residues
            .iter()
            .flatten()
            .flat_map(|r| r.vertices.iter().flatten())
            .map(Coeffs::degree)
            .max()
            .unwrap_or(0)
    }

    /// Exact agreement on every defined index in `range` past the prefix.
    pub fn predicts(&self, polys: &[Option<Polytope>], range: std::ops::RangeInclusive<usize>) -> bool {
        range.filter(|&n| n >= self.prefix && n < polys.len()).all(|n| match &polys[n] {
            None => true,
            Some(p) => self.eval(n).as_ref() == Some(p),
        })
    }
}

fn fit_residue(points: &[(usize, &Polytope)], deg: usize) -> Option<ResidueModel> {
    let k = points[0].1.vertex_count();
    let dim = points[0].1.dim();
    if points.iter().any(|(_, p)| p.vertex_count() != k) {
        return None;
    }
    let mut vertices = Vec::with_capacity(k);
    for j in 0..k {
        let mut coords = Vec::with_capacity(dim);
        for i in 0..dim {
            let pts: Vec<(usize, Rational)> =
                points.iter().map(|(n, p)| (*n, Rational::from_integer(p.vertices()[j][i].into()))).collect();
            coords.push(fit_class(&pts, deg)?);
        }
        vertices.push(coords);
    }
    Some(ResidueModel { vertices })
}

fn fit_at(polys: &[Option<Polytope>], deg: usize, period: usize, prefix: usize) -> Option<PolygonModel> {
    let mut residues = Vec::with_capacity(period);
    for r in 0..period {
        let start = if prefix <= r { r } else { r + (prefix - r).div_ceil(period) * period };
        let points: Vec<(usize, &Polytope)> =
            (start..polys.len()).step_by(period).filter_map(|n| polys[n].as_ref().map(|p| (n, p))).collect();
        if points.is_empty() {
            residues.push(None);
            continue;
        }
        residues.push(Some(fit_residue(&points, deg)?));
    }
    if residues.iter().all(Option::is_none) {
        return None;
    }
    Some(PolygonModel { period, prefix, residues })
}

fn check_dims(polys: &[Option<Polytope>]) -> Result<()> {
    let mut dims = polys.iter().flatten().map(Polytope::dim);
    if let Some(d) = dims.next() {
        if dims.any(|e| e != d) {
            return Err(Error::DimensionMismatch("polytopes of different dimensions".into()));
        }
    }
    Ok(())
}

/// Smallest `(M, prefix)` such that each residue class past the prefix has a
/// constant vertex count and every vertex coordinate is a polynomial of degree
/// at most `deg_max` in `n`. Missing entries (`None`) are skipped.
pub fn fit_polygon_model(
    polys: &[Option<Polytope>],
    deg_max: usize,
    m_max: usize,
    prefix_budget: usize,
) -> Result<Option<PolygonModel>> {
    check_deg(deg_max)?;
    check_len(polys.len(), deg_max, m_max)?;
    check_dims(polys)?;
    for m in 1..=m_max {
        for prefix in 0..=prefix_budget {
            if let Some(model) = fit_at(polys, deg_max, m, prefix) {
                return Ok(Some(model));
            }
        }
    }
    Ok(None)
}

/// Least-prefix model with the period fixed.
pub fn fit_polygon_model_with_period(
    polys: &[Option<Polytope>],
    deg_max: usize,
    period: usize,
    prefix_budget: usize,
) -> Result<Option<PolygonModel>> {
    check_deg(deg_max)?;
    check_len(polys.len(), deg_max, period)?;
    check_dims(polys)?;
    Ok((0..=prefix_budget).find_map(|p| fit_at(polys, deg_max, period, p)))
}

/// The unimodular map `(a, b) -> (a - f^2 b n, b)` applied at index `n`.
pub fn shear_polygon(p: &Polytope, n: usize, f: i64) -> Result<Polytope> {
    if p.dim() != 2 {
        return Err(Error::Precondition("shear needs dimension 2".into()));
    }
    let k = f * f * n as i64;
    p.map_vertices(|v| vec![v[0] - k * v[1], v[1]])
}

/// Shears the `n`-th polytope with [`shear_polygon`] at index `n`.
pub fn shear_polygons(polys: &[Option<Polytope>], f: i64) -> Result<Vec<Option<Polytope>>> {
    polys
        .iter()
        .enumerate()
        .map(|(n, p)| p.as_ref().map(|p| shear_polygon(p, n, f)).transpose())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;

    fn seg(a: i64, b: i64) -> Option<Polytope> {
        Some(Polytope::hull(1, &[vec![a], vec![b]]).unwrap())
    }

    fn lin(c0: i64, c1: i64) -> Coeffs {
        Coeffs(super::super::interpolate(&[(0, int(c0)), (1, int(c0 + c1))]).0)
    }

    #[test]
    fn parity_segments() {
        let polys: Vec<Option<Polytope>> = (0..=40).map(|n| seg(n % 2, n)).collect();
        let m = fit_polygon_model(&polys, 1, 6, 8).unwrap().unwrap();
        // n = 0 and n = 1 are single points
        assert_eq!((m.period, m.prefix), (2, 2));
        assert_eq!(m.residues[0].as_ref().unwrap().vertices, vec![vec![lin(0, 0)], vec![lin(0, 1)]]);
        assert_eq!(m.residues[1].as_ref().unwrap().vertices, vec![vec![lin(1, 0)], vec![lin(0, 1)]]);
        assert!(m.predicts(&polys, 0..=40));
    }

    #[test]
    fn constant_point() {
        let polys = vec![Some(Polytope::point(vec![0]).unwrap()); 30];
        let m = fit_polygon_model(&polys, 1, 2, 2).unwrap().unwrap();
        assert_eq!((m.period, m.prefix), (1, 0));
        assert_eq!(m.residues[0].as_ref().unwrap().vertices, vec![vec![Coeffs(vec![])]]);
    }

    #[test]
    fn growing_triangles() {
        let polys: Vec<Option<Polytope>> = (0..=30)
            .map(|n| Some(Polytope::hull(2, &[vec![0, 0], vec![n + 1, 0], vec![0, n + 1]]).unwrap()))
            .collect();
        let m = fit_polygon_model(&polys, 1, 3, 2).unwrap().unwrap();
        assert_eq!((m.period, m.prefix, m.degree()), (1, 0, 1));
        let v = &m.residues[0].as_ref().unwrap().vertices;
        assert_eq!(v[1][0], lin(1, 1));
        // shearing sends the apex to (-n(n+1), n+1)
        let sheared = shear_polygons(&polys, 1).unwrap();
        assert_eq!(fit_polygon_model(&sheared, 1, 3, 2).unwrap(), None);
        let q = fit_polygon_model(&sheared, 2, 3, 2).unwrap().unwrap();
        assert_eq!((q.period, q.prefix, q.degree()), (1, 1, 2));
        assert_eq!(q.residues[0].as_ref().unwrap().vertices[0][0], Coeffs(vec![int(0), int(-1), int(-1)]));
        assert!(q.predicts(&sheared, 0..=30));
    }

    #[test]
    fn shear_formula() {
        let p = Polytope::hull(2, &[vec![0, 1], vec![2, 0]]).unwrap();
        let s = shear_polygon(&p, 3, 1).unwrap();
        assert_eq!(s, Polytope::hull(2, &[vec![-3, 1], vec![2, 0]]).unwrap());
        assert_eq!(shear_polygon(&p, 7, 0).unwrap(), p);
        assert!(shear_polygon(&Polytope::point(vec![1]).unwrap(), 1, 1).is_err());
    }

    #[test]
    fn mixed_dims_rejected() {
        let mut polys = vec![seg(0, 1); 30];
        polys[3] = Some(Polytope::point(vec![0, 0]).unwrap());
        assert!(matches!(fit_polygon_model(&polys, 1, 2, 2), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn json_shape() {
        let polys: Vec<Option<Polytope>> = (0..=20).map(|n| seg(0, n + 1)).collect();
        let m = fit_polygon_model(&polys, 1, 2, 2).unwrap().unwrap();
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"{"period":1,"prefix":0,"residues":[{"vertices":[[[]],[["1","1"]]]}]}"#);
        assert_eq!(serde_json::from_str::<PolygonModel>(&s).unwrap(), m);
    }
}
