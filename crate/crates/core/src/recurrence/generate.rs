use super::Recurrence;
use crate::algebra::{LaurentPoly, RatFn};
use crate::error::{Error, Result};

/// Output of [`Recurrence::generate`].
///
/// `terms[n] / denominators[n]` is the reduced value of `R_n`. When every
/// denominator is a unit the terms are the exact Laurent polynomials and all
/// denominators are 1; otherwise `fractional` is set and `terms` holds the
/// numerators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generated {
    pub terms: Vec<LaurentPoly>,
    pub denominators: Vec<LaurentPoly>,
    pub fractional: bool,
}

impl Generated {
    pub fn fractions(&self) -> Vec<RatFn> {
        self.terms
            .iter()
            .zip(&self.denominators)
            .map(|(n, d)| RatFn::new(n.clone(), d.clone()).expect("nonzero denominator"))
            .collect()
    }
}

impl Recurrence {
    fn check_init(&self, init: &[LaurentPoly], last: usize) -> Result<()> {
        let d = self.order();
        if init.len() != d {
            return Err(Error::Precondition(format!("expected {d} initial terms, got {}", init.len())));
        }
        if let Some(bad) = init.iter().find(|t| t.vars() != self.vars) {
            return Err(Error::VarCountMismatch { left: self.vars, right: bad.vars() });
        }
        if last + 1 < d {
            return Err(Error::Precondition(format!("N = {last} is below d - 1 = {}", d - 1)));
        }
        Ok(())
    }

    /// Terms `R_0..=R_last`.
    ///
    /// With a monomial `c_d` the terms stay in the Laurent ring. Otherwise one
    /// variable is required and the terms are computed as reduced fractions.
    pub fn generate(&self, init: &[LaurentPoly], last: usize) -> Result<Generated> {
        if self.is_unit_leading() {
            let terms = self.generate_laurent(init, last)?;
            let denominators = vec![LaurentPoly::one(self.vars); terms.len()];
            return Ok(Generated { terms, denominators, fractional: false });
        }
        if self.vars != 1 {
            return Err(Error::NonUnitLeading { vars: self.vars });
        }
        let fractions = self.generate_fractions(init, last)?;
        let mut fractional = false;
        let mut terms = Vec::with_capacity(fractions.len());
        let mut denominators = Vec::with_capacity(fractions.len());
        for f in fractions {
            match f.to_laurent() {
                Some(p) => {
                    terms.push(p);
                    denominators.push(LaurentPoly::one(1));
                }
                None => {
                    fractional = true;
                    terms.push(f.num().clone());
                    denominators.push(f.den().clone());
                }
            }
        }
        Ok(Generated { terms, denominators, fractional })
    }

    /// Unit-leading stepping `R_{n+d} = -c_d^{-1} sum_{k<d} c_k R_{n+k}`.
    pub fn generate_laurent(&self, init: &[LaurentPoly], last: usize) -> Result<Vec<LaurentPoly>> {
        self.check_init(init, last)?;
        if !self.is_unit_leading() {
            return Err(Error::NonUnitLeading { vars: self.vars });
        }
        let d = self.order();
        let (e, c) = self.leading().terms()[0].clone();
        let inv_e = e.neg();
        let inv_c = -c.recip();
        let mut terms: Vec<LaurentPoly> = init.to_vec();
        while terms.len() <= last {
            let n = terms.len() - d;
            let mut acc = LaurentPoly::zero(self.vars);
            for k in 0..d {
                acc = &acc + &(&self.coeffs[k] * &terms[n + k]);
            }
            terms.push(acc.mul_monomial(&inv_e, &inv_c));
        }
        Ok(terms)
    }

    /// Runs the recurrence backwards from `R_0..R_{d-1}` to get
    /// `R_{-1}, .., R_{-count}`. Requires `c_0` to be a monomial.
    pub fn generate_backward(&self, init: &[LaurentPoly], count: usize) -> Result<Vec<LaurentPoly>> {
        self.check_init(init, self.order().saturating_sub(1))?;
        let c0 = &self.coeffs[0];
        if !c0.is_monomial() {
            return Err(Error::Precondition("backward stepping needs a monomial c_0".into()));
        }
        let d = self.order();
        let (e, c) = c0.terms()[0].clone();
        let inv_e = e.neg();
        let inv_c = -c.recip();
        // window[0] = R_m, .., window[d-1] = R_{m+d-1}
        let mut window: std::collections::VecDeque<LaurentPoly> = init.iter().cloned().collect();
        let mut out = Vec::with_capacity(count);
        for _ in 0..count {
            // c_0 R_{m-1} = -sum_{k>=1} c_k R_{m-1+k}
            let mut acc = LaurentPoly::zero(self.vars);
            for k in 1..=d {
                acc = &acc + &(&self.coeffs[k] * &window[k - 1]);
            }
            let prev = acc.mul_monomial(&inv_e, &inv_c);
            window.pop_back();
            window.push_front(prev.clone());
            out.push(prev);
        }
        Ok(out)
    }

    /// One-variable stepping with an arbitrary `c_d`, as reduced fractions.
    ///
    /// `R_m` is tracked as `N_m / c_d^{e_m}` with `e_m = max(0, m - d + 1)`, so
    /// the loop is polynomial; each output is reduced against the factors of `c_d`.
    pub fn generate_fractions(&self, init: &[LaurentPoly], last: usize) -> Result<Vec<RatFn>> {
        self.check_init(init, last)?;
        if self.vars != 1 {
            return Err(Error::WrongVarCount { expected: 1, got: self.vars });
        }
        let d = self.order();
        let lead = self.leading().clone();
        let exponent = |m: usize| (m + 1).saturating_sub(d);
        let mut powers = vec![LaurentPoly::one(1)];
        let mut nums: Vec<LaurentPoly> = init.to_vec();
        while nums.len() <= last {
            let n = nums.len() - d;
            while powers.len() <= n + 1 {
                let next = powers.last().unwrap() * &lead;
                powers.push(next);
            }
            let mut acc = LaurentPoly::zero(1);
            for k in 0..d {
                let lift = n - exponent(n + k);
                acc = &acc + &(&(&self.coeffs[k] * &nums[n + k]) * &powers[lift]);
            }
            nums.push(-&acc);
        }
        nums.into_iter()
            .enumerate()
            .map(|(m, num)| {
                let e = exponent(m);
                if e == 0 {
                    Ok(RatFn::from_poly(num))
                } else {
                    RatFn::with_factor_base(num, powers[e].clone(), &lead)
                }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;
    use crate::algebra::Rational;

    fn x(s: &str) -> LaurentPoly {
        LaurentPoly::parse(&["x"], s).unwrap()
    }

    fn chebyshev() -> Recurrence {
        // R_{n+2} = x R_{n+1} + R_n
        Recurrence::new(vec![x("1"), x("x"), x("-1")]).unwrap()
    }

    #[test]
    fn chebyshev_like_terms() {
        let g = chebyshev().generate(&[x("1"), x("x")], 4).unwrap();
        let expected = ["1", "x", "x^2+1", "x^3+2*x", "x^4+3*x^2+1"];
        assert_eq!(g.terms, expected.iter().map(|s| x(s)).collect::<Vec<_>>());
        assert!(!g.fractional);
        // evaluation at x = 1 gives Fibonacci numbers
        let fib: Vec<Rational> = g.terms.iter().map(|t| t.eval(&[int(1)]).unwrap()).collect();
        assert_eq!(fib, vec![int(1), int(1), int(2), int(3), int(5)]);
        assert!(chebyshev().annihilates(&g.terms).unwrap());
    }

    #[test]
    fn constant_and_geometric() {
        let rec = Recurrence::new(vec![x("-1"), x("1")]).unwrap();
        assert_eq!(rec.generate(&[x("1")], 3).unwrap().terms, vec![x("1"); 4]);
        let rec = Recurrence::new(vec![x("-x"), x("1")]).unwrap();
        let t = rec.generate(&[x("1")], 3).unwrap().terms;
        assert_eq!(t, vec![x("1"), x("x"), x("x^2"), x("x^3")]);
    }

    #[test]
    fn precondition_errors() {
        let rec = chebyshev();
        assert!(matches!(rec.generate(&[x("1")], 4), Err(Error::Precondition(_))));
        assert!(matches!(rec.generate(&[x("1"), x("x")], 0), Err(Error::Precondition(_))));
        let two = |s: &str| LaurentPoly::parse(&["x1", "x2"], s).unwrap();
        let rec2 = Recurrence::new(vec![two("1"), two("x1 + x2")]).unwrap();
        assert_eq!(rec2.generate(&[two("1")], 3).unwrap_err(), Error::NonUnitLeading { vars: 2 });
    }

    #[test]
    fn fraction_mode() {
        // (1 + x) R_{n+1} = R_n  ->  R_n = (1+x)^{-n}
        let rec = Recurrence::new(vec![x("-1"), x("1 + x")]).unwrap();
        let g = rec.generate(&[x("1")], 4).unwrap();
        assert!(g.fractional);
        for (n, f) in g.fractions().iter().enumerate() {
            assert_eq!(f, &RatFn::new(x("1"), x("1+x").pow(n as u32)).unwrap());
        }
        assert!(rec.annihilates_fractions(&g.fractions()).unwrap());
        // denominators that cancel collapse back to Laurent terms:
        // (1+x) R_{n+2} = (1+x) R_n with R_0 = 1, R_1 = x
        let rec = Recurrence::new(vec![x("-1-x"), x("0"), x("1+x")]).unwrap();
        let g = rec.generate(&[x("1"), x("x")], 6).unwrap();
        assert!(!g.fractional);
        assert_eq!(g.terms[6], x("1"));
        assert_eq!(g.terms[5], x("x"));
    }

    #[test]
    fn backward_steps() {
        let rec = chebyshev();
        let back = rec.generate_backward(&[x("1"), x("x")], 3).unwrap();
        // R_{-1} = R_1 - x R_0 = 0, R_{-2} = R_0 - x R_{-1} = 1, R_{-3} = R_{-1} - x R_{-2} = -x
        assert_eq!(back, vec![x("0"), x("1"), x("-x")]);
        let forward_from = rec.generate(&[back[2].clone(), back[1].clone()], 4).unwrap().terms;
        assert_eq!(forward_from[3], x("1"));
        assert_eq!(forward_from[4], x("x"));
    }
}
