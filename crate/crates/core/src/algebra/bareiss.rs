//! Fraction-free determinants over the Laurent ring.

use super::laurent::LaurentPoly;
use crate::error::{Error, Result};

/// Determinant of a square matrix by Bareiss elimination. Every division is
/// exact, so entries stay Laurent polynomials throughout.
pub fn determinant(vars: usize, mut m: Vec<Vec<LaurentPoly>>) -> Result<LaurentPoly> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::DimensionMismatch("determinant of a non-square matrix".into()));
    }
    if let Some(bad) = m.iter().flatten().find(|e| e.vars() != vars) {
        return Err(Error::VarCountMismatch { left: vars, right: bad.vars() });
    }
    if n == 0 {
        return Ok(LaurentPoly::one(vars));
    }
    let mut negate = false;
    let mut prev = LaurentPoly::one(vars);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return Ok(LaurentPoly::zero(vars));
            };
            m.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[k][k].checked_mul(&m[i][j])?.checked_sub(&m[i][k].checked_mul(&m[k][j])?)?;
                m[i][j] = t.div_exact(&prev)?;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { -&det } else { det })
}
