mod common;

use std::collections::BTreeMap;

use polyrec::algebra::rational::int;
use polyrec::algebra::{ExpVec, LaurentPoly, Rational};
use polyrec::sample::{self, RecurrenceShape};
use polyrec::valuation::{cone_structure, predicted_vs_empirical, root_valuations, slope_fan, Side, SlopeFitConfig};
use proptest::prelude::*;
use rand::Rng;

/// `(c, a)` for the root `c x^a`.
fn monomial_root(vars: usize) -> impl Strategy<Value = (i64, Vec<i64>)> {
    (prop_oneof![-3i64..=-1, 1i64..=3], prop::collection::vec(-2i64..=2, vars))
}

/// `prod (z - c x^a)` in `(z, x_1, .., x_r)`.
fn from_roots(vars: usize, roots: &[(i64, Vec<i64>)]) -> LaurentPoly {
    let z = LaurentPoly::var(vars + 1, 0).unwrap();
    roots.iter().fold(LaurentPoly::one(vars + 1), |acc, (c, a)| {
        let mut e = vec![0];
        e.extend(a);
        &acc * &(&z - &LaurentPoly::monomial(ExpVec::new(&e), int(*c)))
    })
}

fn expected_spectrum(roots: &[(i64, Vec<i64>)], omega: &[i64]) -> (Vec<Rational>, Vec<usize>) {
    let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
    for (_, a) in roots {
        *counts.entry(a.iter().zip(omega).map(|(x, w)| x * w).sum()).or_default() += 1;
    }
    (counts.keys().map(|&k| int(k)).collect(), counts.values().copied().collect())
}

fn half(v: [i64; 2]) -> u8 {
    u8::from(!(v[1] > 0 || (v[1] == 0 && v[0] > 0)))
}

fn cross(a: [i64; 2], b: [i64; 2]) -> i64 {
    a[0] * b[1] - a[1] * b[0]
}

/// Index of the open cone `(rays[i], rays[i + 1])` containing `w`, or `None` on a ray.
fn cone_of(rays: &[[i64; 2]], w: [i64; 2]) -> Option<usize> {
    if rays.iter().any(|&r| cross(r, w) == 0 && r[0] * w[0] + r[1] * w[1] > 0) {
        return None;
    }
    let before = |r: [i64; 2]| half(r) < half(w) || (half(r) == half(w) && cross(r, w) > 0);
    let k = rays.iter().filter(|&&r| before(r)).count();
    Some(if k == 0 { rays.len() - 1 } else { k - 1 })
}

/// Valuations of a cone structure at `w`, merged and sorted like a spectrum.
fn evaluate(structure: &[([Rational; 2], usize)], w: [i64; 2]) -> (Vec<Rational>, Vec<usize>) {
    let mut merged: BTreeMap<Rational, usize> = BTreeMap::new();
    for (v, m) in structure {
        *merged.entry(&v[0] * int(w[0]) + &v[1] * int(w[1])).or_default() += m;
    }
    (merged.keys().cloned().collect(), merged.values().copied().collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hull_slopes_are_root_valuations(
        roots in prop::collection::vec(monomial_root(2), 1..=4),
        omega in common::direction(2),
    ) {
        let chi = from_roots(2, &roots);
        let (slopes, mult) = expected_spectrum(&roots, &omega);
        for side in [Side::VStar, Side::V] {
            let s = root_valuations(&chi, &omega, side).unwrap();
            prop_assert_eq!(&s.slopes, &slopes);
            prop_assert_eq!(&s.multiplicities, &mult);
        }
    }

    #[test]
    fn spectra_scale_with_the_direction(chi in common::nonzero_poly(3, 5, 2), omega in common::direction(2), k in 2i64..=4) {
        prop_assume!(chi.coefficients_in(0).unwrap().len() >= 2);
        let scaled: Vec<i64> = omega.iter().map(|w| w * k).collect();
        for side in [Side::VStar, Side::V] {
            let a = root_valuations(&chi, &omega, side).unwrap();
            let b = root_valuations(&chi, &scaled, side).unwrap();
            let a_scaled: Vec<Rational> = a.slopes.iter().map(|s| s * int(k)).collect();
            prop_assert_eq!(b.slopes, a_scaled);
            prop_assert_eq!(b.multiplicities, a.multiplicities);
        }
    }

    #[test]
    fn valuations_are_linear_on_fan_cones(chi in common::nonzero_poly(3, 5, 2), seed in any::<u64>()) {
        prop_assume!(chi.coefficients_in(0).unwrap().len() >= 2);
        let fan = slope_fan(&chi).unwrap();
        let mut g = sample::rng(seed);
        type Sample = ([i64; 2], (Vec<Rational>, Vec<usize>), Vec<([Rational; 2], usize)>);
        let mut cones: BTreeMap<usize, Vec<Sample>> = BTreeMap::new();
        for _ in 0..400 {
            let w = [g.random_range(-60i64..=60), g.random_range(-60i64..=60)];
            if w == [0, 0] {
                continue;
            }
            let cone = if fan.rays.is_empty() { Some(0) } else { cone_of(&fan.rays, w) };
            let Some(cone) = cone else { continue };
            let actual = root_valuations(&chi, &w, Side::VStar).unwrap();
            let structure = cone_structure(&chi, &w).unwrap();
            cones.entry(cone).or_default().push((w, (actual.slopes, actual.multiplicities), structure));
        }
        // one structure per cone predicts the valuations in every sampled direction
        for samples in cones.values() {
            let linear = samples.iter().any(|(_, _, s)| samples.iter().all(|(w, actual, _)| &evaluate(s, *w) == actual));
            prop_assert!(linear, "rays {:?}, directions {:?}", &fan.rays, samples.iter().map(|s| s.0).collect::<Vec<_>>());
        }
    }

    #[test]
    fn fitted_slopes_lie_in_the_spectrum(seed in any::<u64>()) {
        let (rec, init) = sample::random_unit_leading(&mut sample::rng(seed), &RecurrenceShape::univariate());
        let rep = predicted_vs_empirical(&rec, &init, &[1], &SlopeFitConfig::default()).unwrap();
        for side in [&rep.vstar, &rep.v] {
            if side.fitted() {
                prop_assert!(side.all_members(), "{:?}", side.residues);
            }
        }
    }
}

#[test]
fn single_ray_pair() {
    let chi = LaurentPoly::parse(&["z", "x1", "x2"], "z^2 - x1*z - x2").unwrap();
    let fan = slope_fan(&chi).unwrap();
    assert_eq!(fan.rays, vec![[1, 2], [-1, -2]]);
    assert_ne!(cone_structure(&chi, &[1, 0]).unwrap(), cone_structure(&chi, &[-1, 0]).unwrap());
}
