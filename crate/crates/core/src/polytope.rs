//! Lattice polytopes of dimension 1 and 2: Newton polytopes, support
//! functions, projections, lattice counts and areas.
//!
//! Vertex lists are canonical. In dimension 1 they are `[min, max]` (or a
//! single point). In dimension 2 they run counter-clockwise from the
//! lexicographically smallest vertex with collinear points dropped; collinear
//! inputs give a two-vertex segment and a single point gives one vertex.

use std::fmt::Write as _;

use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{LaurentPoly, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Polytope {
    dim: usize,
    vertices: Vec<Vec<i64>>,
}

#[derive(Deserialize)]
struct PolytopeRepr {
    dim: usize,
    vertices: Vec<Vec<i64>>,
}

impl<'de> Deserialize<'de> for Polytope {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = PolytopeRepr::deserialize(d)?;
        Polytope::hull(r.dim, &r.vertices).map_err(serde::de::Error::custom)
    }
}

fn cross(o: &[i64], a: &[i64], b: &[i64]) -> i128 {
    let (ax, ay) = ((a[0] - o[0]) as i128, (a[1] - o[1]) as i128);
    let (bx, by) = ((b[0] - o[0]) as i128, (b[1] - o[1]) as i128);
    ax * by - ay * bx
}

impl Polytope {
    /// Convex hull of a nonempty point set.
    pub fn hull(dim: usize, points: &[Vec<i64>]) -> Result<Polytope> {
        if !(1..=2).contains(&dim) {
            return Err(Error::Precondition(format!("hulls are supported in dimension 1 and 2, not {dim}")));
        }
        if points.is_empty() {
            return Err(Error::Precondition("hull of an empty point set".into()));
        }
        if let Some(bad) = points.iter().find(|p| p.len() != dim) {
            return Err(Error::DimensionMismatch(format!("point of length {} in dimension {dim}", bad.len())));
        }
        if dim == 1 {
            let lo = points.iter().map(|p| p[0]).min().unwrap();
            let hi = points.iter().map(|p| p[0]).max().unwrap();
            let vertices = if lo == hi { vec![vec![lo]] } else { vec![vec![lo], vec![hi]] };
            return Ok(Polytope { dim, vertices });
        }
        let mut pts: Vec<&Vec<i64>> = points.iter().collect();
        pts.sort();
        pts.dedup();
        if pts.len() <= 2 {
            return Ok(Polytope { dim, vertices: pts.into_iter().cloned().collect() });
        }
        let mut lower: Vec<&Vec<i64>> = Vec::new();
        for p in &pts {
            while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
                lower.pop();
            }
            lower.push(p);
        }
        let mut upper: Vec<&Vec<i64>> = Vec::new();
        for p in pts.iter().rev() {
            while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
                upper.pop();
            }
            upper.push(p);
        }
        lower.pop();
        upper.pop();
        let mut vertices: Vec<Vec<i64>> = lower.into_iter().chain(upper).cloned().collect();
        if vertices.len() == 2 && vertices[0] == vertices[1] {
            vertices.pop();
        }
        Ok(Polytope { dim, vertices })
    }

    /// Newton polytope: hull of the exponents of `p`.
    pub fn newton(p: &LaurentPoly) -> Result<Polytope> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let pts: Vec<Vec<i64>> = p.exponents().map(|e| e.as_slice().to_vec()).collect();
        Polytope::hull(p.vars(), &pts)
    }

    pub fn point(p: Vec<i64>) -> Result<Polytope> {
        let dim = p.len();
        Polytope::hull(dim, &[p])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    fn check_direction(&self, u: &[i64]) -> Result<()> {
        if u.len() != self.dim {
            return Err(Error::DimensionMismatch(format!("direction of length {} in dimension {}", u.len(), self.dim)));
        }
        if u.iter().all(|&x| x == 0) {
            return Err(Error::ZeroDirection);
        }
        Ok(())
    }

    /// `h_P(u) = max u.v` over the vertices.
    pub fn support(&self, u: &[i64]) -> Result<i64> {
        self.check_direction(u)?;
        Ok(self.vertices.iter().map(|v| dot(v, u)).max().unwrap())
    }

    /// The segment `[-h_P(-w), h_P(w)]`.
    pub fn project(&self, omega: &[i64]) -> Result<(i64, i64)> {
        self.check_direction(omega)?;
        let vals = self.vertices.iter().map(|v| dot(v, omega));
        Ok((vals.clone().min().unwrap(), vals.max().unwrap()))
    }

    /// Edges in canonical order; a segment has its edge twice, a point none.
    pub fn edges(&self) -> Vec<(&[i64], &[i64])> {
        let k = self.vertices.len();
        if k == 1 {
            return Vec::new();
        }
        (0..k).map(|i| (self.vertices[i].as_slice(), self.vertices[(i + 1) % k].as_slice())).collect()
    }

    /// Number of lattice points, boundary included.
    pub fn lattice_count(&self) -> u64 {
        if self.dim == 1 {
            let lo = self.vertices[0][0];
            let hi = self.vertices.last().unwrap()[0];
            return (hi - lo + 1) as u64;
        }
        let ylo = self.vertices.iter().map(|v| v[1]).min().unwrap();
        let yhi = self.vertices.iter().map(|v| v[1]).max().unwrap();
        let mut total = 0u64;
        for y in ylo..=yhi {
            if let Some((a, b)) = self.row_range(y) {
                if b >= a {
                    total += (b - a + 1) as u64;
                }
            }
        }
        total
    }

    /// Integer `x` range of the horizontal slice at height `y`.
    fn row_range(&self, y: i64) -> Option<(i64, i64)> {
        let mut lo: Option<Rational> = None;
        let mut hi: Option<Rational> = None;
        let mut take = |x: Rational| {
            if lo.as_ref().is_none_or(|l| &x < l) {
                lo = Some(x.clone());
            }
            if hi.as_ref().is_none_or(|h| &x > h) {
                hi = Some(x);
            }
        };
        if self.vertices.len() == 1 {
            let v = &self.vertices[0];
            if v[1] == y {
                take(Rational::from_integer(v[0].into()));
            }
        }
        for (p, q) in self.edges() {
            if y < p[1].min(q[1]) || y > p[1].max(q[1]) {
                continue;
            }
            if p[1] == q[1] {
                take(Rational::from_integer(p[0].into()));
                take(Rational::from_integer(q[0].into()));
            } else {
                let t = Rational::new((y - p[1]).into(), (q[1] - p[1]).into());
                take(Rational::from_integer(p[0].into()) + t * Rational::from_integer((q[0] - p[0]).into()));
            }
        }
        let (lo, hi) = (lo?, hi?);
        let a = lo.ceil().to_integer();
        let b = hi.floor().to_integer();
        Some((i64::try_from(a).ok()?, i64::try_from(b).ok()?))
    }

    /// Lattice points on the boundary.
    pub fn boundary_count(&self) -> u64 {
        match self.vertices.len() {
            1 => 1,
            2 => self.lattice_count(),
            _ => self
                .edges()
                .iter()
                .map(|(p, q)| (p[0] - q[0]).abs().gcd(&(p[1] - q[1]).abs()) as u64)
                .sum(),
        }
    }

    /// Area by the shoelace formula; zero below dimension 2.
    pub fn area(&self) -> Rational {
        if self.dim < 2 || self.vertices.len() < 3 {
            return Rational::zero();
        }
        let mut twice: i128 = 0;
        for (p, q) in self.edges() {
            twice += p[0] as i128 * q[1] as i128 - q[0] as i128 * p[1] as i128;
        }
        Rational::new(twice.into(), 2.into())
    }

    /// Minkowski sum, as the hull of pairwise vertex sums.
    pub fn minkowski_sum(&self, other: &Polytope) -> Result<Polytope> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(format!("dimensions {} and {}", self.dim, other.dim)));
        }
        let mut pts = Vec::with_capacity(self.vertices.len() * other.vertices.len());
        for a in &self.vertices {
            for b in &other.vertices {
                pts.push(a.iter().zip(b).map(|(x, y)| x + y).collect());
            }
        }
        Polytope::hull(self.dim, &pts)
    }

    /// Applies a lattice map to every vertex and re-canonicalizes.
    pub fn map_vertices<F: Fn(&[i64]) -> Vec<i64>>(&self, f: F) -> Result<Polytope> {
        let pts: Vec<Vec<i64>> = self.vertices.iter().map(|v| f(v)).collect();
        Polytope::hull(self.dim, &pts)
    }

    /// Outer edge normals (primitive integer vectors).
    pub fn edge_normals(&self) -> Vec<Vec<i64>> {
        if self.dim == 1 {
            return vec![vec![-1], vec![1]];
        }
        self.edges()
            .iter()
            .map(|(p, q)| {
                let (dx, dy) = (q[0] - p[0], q[1] - p[1]);
                let g = dx.abs().gcd(&dy.abs()).max(1);
                vec![dy / g, -dx / g]
            })
            .collect()
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Renders a sequence of polytopes as one SVG, one frame per polytope on a
/// shared integer grid. Dimension-1 polytopes are drawn on the x axis.
pub fn render_svg(polys: &[Polytope], labels: &[String]) -> String {
    let pts = |p: &Polytope| -> Vec<(i64, i64)> {
        p.vertices.iter().map(|v| (v[0], if p.dim == 2 { v[1] } else { 0 })).collect()
    };
    let all: Vec<(i64, i64)> = polys.iter().flat_map(pts).collect();
    let (x0, x1) = (all.iter().map(|p| p.0).min().unwrap_or(0), all.iter().map(|p| p.0).max().unwrap_or(0));
    let (y0, y1) = (all.iter().map(|p| p.1).min().unwrap_or(0), all.iter().map(|p| p.1).max().unwrap_or(0));
    let (w, h) = ((x1 - x0).max(1) as f64, (y1 - y0).max(1) as f64);
    let frame = 160.0;
    let pad = 12.0;
    let scale = (frame - 2.0 * pad) / w.max(h);
    let cols = (polys.len() as f64).sqrt().ceil().max(1.0) as usize;
    let rows = polys.len().div_ceil(cols).max(1);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        cols as f64 * frame,
        rows as f64 * (frame + 14.0),
        cols as f64 * frame,
        rows as f64 * (frame + 14.0)
    );
    for (i, p) in polys.iter().enumerate() {
        let ox = (i % cols) as f64 * frame;
        let oy = (i / cols) as f64 * (frame + 14.0);
        let map = |(x, y): (i64, i64)| {
            (ox + pad + (x - x0) as f64 * scale, oy + 14.0 + frame - pad - (y - y0) as f64 * scale)
        };
        let label = labels.get(i).cloned().unwrap_or_else(|| format!("n={i}"));
        let _ = writeln!(out, r#"<g><text x="{:.1}" y="{:.1}" font-size="11">{label}</text>"#, ox + pad, oy + 11.0);
        let _ = writeln!(
            out,
            r##"<rect x="{ox:.1}" y="{:.1}" width="{frame:.1}" height="{frame:.1}" fill="none" stroke="#ddd"/>"##,
            oy + 14.0
        );
        let coords: Vec<String> = pts(p).into_iter().map(map).map(|(x, y)| format!("{x:.2},{y:.2}")).collect();
        match coords.len() {
            1 => {
                let (x, y) = map(pts(p)[0]);
                let _ = writeln!(out, r##"<circle cx="{x:.2}" cy="{y:.2}" r="2.5" fill="#1f4e79"/>"##);
            }
            2 => {
                let _ = writeln!(out, r##"<polyline points="{}" fill="none" stroke="#1f4e79" stroke-width="2"/>"##, coords.join(" "));
            }
            _ => {
                let _ = writeln!(
                    out,
                    r##"<polygon points="{}" fill="#9ecae1" fill-opacity="0.6" stroke="#1f4e79"/>"##,
                    coords.join(" ")
                );
            }
        }
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    out
}
