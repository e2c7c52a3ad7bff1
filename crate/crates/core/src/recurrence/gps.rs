use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::Recurrence;
use crate::algebra::{rational_vec, Rational, UPoly};
use crate::error::{Error, Result};

/// `a_n = sum_i A_i(n) alpha_i^n` with distinct nonzero roots `alpha_i` and
/// nonzero polynomials `A_i` (coefficients ascending in `n`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralizedPowerSum {
    roots: Vec<Rational>,
    coeff_polys: Vec<Vec<Rational>>,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
struct GpsRepr {
    #[serde(with = "rational_vec")]
    roots: Vec<Rational>,
    coeff_polys: Vec<StrVec>,
}

#[derive(Serialize, Deserialize)]
#[serde(transparent)]
struct StrVec(#[serde(with = "rational_vec")] Vec<Rational>);

impl Serialize for GeneralizedPowerSum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GpsRepr {
            roots: self.roots.clone(),
            coeff_polys: self.coeff_polys.iter().cloned().map(StrVec).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GeneralizedPowerSum {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = GpsRepr::deserialize(d)?;
        GeneralizedPowerSum::new(r.roots, r.coeff_polys.into_iter().map(|v| v.0).collect())
            .map_err(serde::de::Error::custom)
    }
}

impl GeneralizedPowerSum {
    pub fn new(roots: Vec<Rational>, coeff_polys: Vec<Vec<Rational>>) -> Result<Self> {
        if roots.len() != coeff_polys.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} roots but {} coefficient polynomials",
                roots.len(),
                coeff_polys.len()
            )));
        }
        if roots.is_empty() {
            return Err(Error::Precondition("at least one root is required".into()));
        }
        for (i, a) in roots.iter().enumerate() {
            if a.is_zero() {
                return Err(Error::Precondition("roots must be nonzero".into()));
            }
            if roots[..i].contains(a) {
                return Err(Error::Precondition(format!("repeated root {a}")));
            }
        }
        let coeff_polys: Vec<Vec<Rational>> =
            coeff_polys.into_iter().map(|p| UPoly::new(p).coeffs().to_vec()).collect();
        if coeff_polys.iter().any(|p| p.is_empty()) {
            return Err(Error::Precondition("coefficient polynomials must be nonzero".into()));
        }
        Ok(GeneralizedPowerSum { roots, coeff_polys })
    }

    pub fn roots(&self) -> &[Rational] {
        &self.roots
    }

    pub fn coeff_polys(&self) -> &[Vec<Rational>] {
        &self.coeff_polys
    }

    /// Multiplicities `m_i = deg A_i + 1`.
    pub fn multiplicities(&self) -> Vec<usize> {
        self.coeff_polys.iter().map(|p| p.len()).collect()
    }

    pub fn order(&self) -> usize {
        self.multiplicities().iter().sum()
    }

    pub fn eval(&self, n: u64) -> Rational {
        let nq = Rational::from_integer(n.into());
        let mut sum = Rational::zero();
        for (alpha, a) in self.roots.iter().zip(&self.coeff_polys) {
            let an = UPoly::new(a.clone()).eval(&nq);
            if !an.is_zero() {
                sum += an * num_traits::pow(alpha.clone(), n as usize);
            }
        }
        sum
    }

    /// `s(x) = prod_i (1 - alpha_i x)^{m_i}`, ascending coefficients.
    pub fn s_polynomial(&self) -> UPoly {
        let mut s = UPoly::one();
        for (alpha, m) in self.roots.iter().zip(self.multiplicities()) {
            let factor = UPoly::new(vec![Rational::one(), -alpha.clone()]);
            for _ in 0..m {
                s = s.mul(&factor);
            }
        }
        s
    }

    /// The scalar recurrence `a_{n+d} = s_1 a_{n+d-1} + .. + s_d a_n`.
    pub fn to_recurrence(&self) -> Recurrence {
        let s = self.s_polynomial();
        let d = self.order();
        let coeffs: Vec<Rational> = (0..=d).map(|k| s.coeffs()[d - k].clone()).collect();
        Recurrence::scalar(&coeffs).expect("s(x) has nonzero constant and top coefficients")
    }
}
