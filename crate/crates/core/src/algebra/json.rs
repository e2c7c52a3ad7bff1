//! Serde encodings for polynomials and rational functions.
//!
//! Polynomial: `{"vars": r, "terms": [[num, den, [e1, .., er]], ..]}`, terms in
//! ascending lexicographic exponent order, coefficients as decimal strings.
//! Rational function: `[num_poly, den_poly]`.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::laurent::{ExpVec, LaurentPoly};
use super::ratfn::RatFn;
use super::rational;

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    vars: usize,
    terms: Vec<(String, String, Vec<i64>)>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms = self
            .terms()
            .iter()
            .map(|(e, c)| (c.numer().to_string(), c.denom().to_string(), e.as_slice().to_vec()))
            .collect();
        PolyRepr { vars: self.vars(), terms }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(d)?;
        let mut terms = Vec::with_capacity(repr.terms.len());
        for (n, den, e) in repr.terms {
            let c = rational::parse_pair(&n, &den).map_err(D::Error::custom)?;
            terms.push((ExpVec::from(e), c));
        }
        LaurentPoly::from_terms(repr.vars, terms).map_err(D::Error::custom)
    }
}

impl Serialize for RatFn {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        (self.num(), self.den()).serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatFn {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let (num, den) = <(LaurentPoly, LaurentPoly)>::deserialize(d)?;
        RatFn::new(num, den).map_err(D::Error::custom)
    }
}

/// Serde helper for a rational stored as a string (`"a"` or `"a/b"`).
pub mod rational_str {
    use super::*;
    use crate::algebra::Rational;

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        rational::format(q).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        rational::parse(&s).map_err(D::Error::custom)
    }
}

/// Serde helper for a list of rationals stored as strings.
pub mod rational_vec {
    use super::*;
    use crate::algebra::Rational;

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(rational::format).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter().map(|s| rational::parse(s).map_err(D::Error::custom)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_json_is_bit_exact() {
        let p = LaurentPoly::parse(&["x1", "x2"], "-3/2*x1^2*x2^-1 + 7 + x2").unwrap();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"vars":2,"terms":[["7","1",[0,0]],["1","1",[0,1]],["-3","2",[2,-1]]]}"#);
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        assert_eq!(serde_json::to_string(&back).unwrap(), s);
    }

    #[test]
    fn rejects_bad_polynomials() {
        assert!(serde_json::from_str::<LaurentPoly>(r#"{"vars":2,"terms":[["1","1",[0]]]}"#).is_err());
        assert!(serde_json::from_str::<LaurentPoly>(r#"{"vars":1,"terms":[["1","0",[0]]]}"#).is_err());
        assert!(serde_json::from_str::<LaurentPoly>(r#"{"vars":1,"terms":[["a","1",[0]]]}"#).is_err());
    }

    #[test]
    fn ratfn_json() {
        let f = RatFn::new(
            LaurentPoly::parse(&["q"], "q").unwrap(),
            LaurentPoly::parse(&["q"], "q^2+1").unwrap(),
        )
        .unwrap();
        let s = serde_json::to_string(&f).unwrap();
        let back: RatFn = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
    }
}
