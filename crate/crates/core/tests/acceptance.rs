//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use num_integer::Integer;
use polyrec::algebra::rational::int;
use polyrec::algebra::{LaurentPoly, Rational};
use polyrec::elimination::{elimination_report, EliminationInstance};
use polyrec::polytope::Polytope;
use polyrec::quasifit::{
    fit_polygon_model, fit_polygon_model_with_period, fit_quasipoly, fit_quasipoly_sparse, shear_polygons,
    zero_pattern, Coeffs,
};
use polyrec::recurrence::{char_poly_recurrence, guess_recurrence, trace_sequence, GeneralizedPowerSum, Recurrence};
use polyrec::sample::{self, RecurrenceShape};
use polyrec::valuation::{predicted_vs_empirical, SlopeFitConfig};
use polyrec::Exec;

type Check = Result<String, String>;

fn x(s: &str) -> LaurentPoly {
    LaurentPoly::parse(&["x"], s).unwrap()
}

fn chebyshev() -> (Recurrence, Vec<LaurentPoly>) {
    (Recurrence::new(vec![x("-1"), x("-x"), x("1")]).unwrap(), vec![x("1"), x("x")])
}

fn coeffs(v: &[i64]) -> Coeffs {
    Coeffs(v.iter().map(|&c| int(c)).collect())
}

fn newton_all(terms: &[LaurentPoly]) -> Vec<Option<Polytope>> {
    terms.iter().map(|t| (!t.is_zero()).then(|| Polytope::newton(t).unwrap())).collect()
}

fn c1_valuations() -> Check {
    let v = x("x^2 + x^7").valuations().map_err(|e| e.to_string())?;
    if v == (2, 7) {
        Ok("(v*, v) = (2, 7)".into())
    } else {
        Err(format!("got {v:?}"))
    }
}

fn c2_chebyshev_polygons() -> Check {
    let (rec, init) = chebyshev();
    let terms = rec.generate_laurent(&init, 64).map_err(|e| e.to_string())?;
    let polys = newton_all(&terms);
    let m = fit_polygon_model(&polys, 1, 6, 8).map_err(|e| e.to_string())?.ok_or("no model")?;
    if m.period != 2 || m.prefix > 2 {
        return Err(format!("period {} prefix {}", m.period, m.prefix));
    }
    let r0 = &m.residues[0].as_ref().ok_or("empty residue 0")?.vertices;
    let r1 = &m.residues[1].as_ref().ok_or("empty residue 1")?.vertices;
    if *r0 != vec![vec![coeffs(&[])], vec![coeffs(&[0, 1])]] || *r1 != vec![vec![coeffs(&[1])], vec![coeffs(&[0, 1])]] {
        return Err(format!("unexpected vertices {r0:?} / {r1:?}"));
    }
    // oracle: segments [n mod 2, n] read off the generated terms
    for (n, t) in terms.iter().enumerate() {
        let expect = Polytope::hull(1, &[vec![(n % 2) as i64], vec![n as i64]]).unwrap();
        if Polytope::newton(t).unwrap() != expect {
            return Err(format!("term {n} has unexpected support"));
        }
    }
    if !m.predicts(&polys, 0..=64) {
        return Err("model disagrees with generated terms".into());
    }
    Ok(format!("period 2, prefix {}", m.prefix))
}

/// Instances for criteria 3 and 4 together with their slope reports.
fn univariate_reports() -> Vec<(Recurrence, Vec<LaurentPoly>, Result<polyrec::valuation::SlopeReport, String>)> {
    let mut g = sample::rng(20240301);
    let shape = RecurrenceShape::univariate();
    let cfg = SlopeFitConfig { n_max: 64, fit_last: 48, m_max: 6, prefix_budget: 8 };
    let instances: Vec<_> = (0..100).map(|_| sample::random_unit_leading(&mut g, &shape)).collect();
    let reports = Exec::default()
        .map(&instances, |(rec, init)| predicted_vs_empirical(rec, init, &[1], &cfg).map_err(|e| e.to_string()));
    instances.into_iter().zip(reports).map(|((r, i), rep)| (r, i, rep)).collect()
}

fn describe(rec: &Recurrence, init: &[LaurentPoly]) -> String {
    let init: Vec<String> = init.iter().map(|p| p.to_string_with(&["x"])).collect();
    format!("{} init {:?}", serde_json::to_string(rec).unwrap(), init)
}

fn c3_fit_rate(reports: &[(Recurrence, Vec<LaurentPoly>, Result<polyrec::valuation::SlopeReport, String>)]) -> Check {
    let mut ok = 0;
    for (rec, init, rep) in reports {
        match rep {
            Ok(r) if r.vstar.fitted() && r.v.fitted() => ok += 1,
            Ok(r) => eprintln!(
                "  criterion 3 miss: {} (v* fitted {}, v fitted {})",
                describe(rec, init),
                r.vstar.fitted(),
                r.v.fitted()
            ),
            Err(e) => eprintln!("  criterion 3 error: {} ({e})", describe(rec, init)),
        }
    }
    if ok >= 95 {
        Ok(format!("{ok}/100 instances fit and predict the holdout"))
    } else {
        Err(format!("only {ok}/100 instances fit"))
    }
}

fn c4_membership(reports: &[(Recurrence, Vec<LaurentPoly>, Result<polyrec::valuation::SlopeReport, String>)]) -> Check {
    let mut fitted = 0;
    for (rec, init, rep) in reports {
        let Ok(r) = rep else { continue };
        if !(r.vstar.fitted() && r.v.fitted()) {
            continue;
        }
        fitted += 1;
        if !r.vstar.all_members() || !r.v.all_members() {
            return Err(format!("slope outside spectrum for {}", describe(rec, init)));
        }
    }
    Ok(format!("{fitted}/{fitted} fitted instances have slopes in the spectrum"))
}

const DIRECTIONS: [[i64; 2]; 8] = [[1, 2], [2, -1], [-1, 3], [-3, -1], [3, 2], [-2, 3], [1, -3], [-2, -5]];

struct Bivariate {
    rec: Recurrence,
    init: Vec<LaurentPoly>,
    polys: Vec<Option<Polytope>>,
}

fn bivariate_instances() -> Vec<Bivariate> {
    let mut g = sample::rng(20240302);
    let shape = RecurrenceShape::bivariate();
    let pairs: Vec<_> = (0..25).map(|_| sample::random_unit_leading(&mut g, &shape)).collect();
    Exec::default().map(&pairs, |(rec, init)| {
        let terms = rec.generate_laurent(init, 64).unwrap();
        Bivariate { rec: rec.clone(), init: init.clone(), polys: newton_all(&terms) }
    })
}

fn bivariate_ok(b: &Bivariate) -> Result<usize, String> {
    let mut period = 1usize;
    for w in DIRECTIONS {
        let seq: Vec<Option<Rational>> =
            b.polys.iter().map(|p| p.as_ref().map(|p| int(p.support(&w).unwrap()))).collect();
        let q = fit_quasipoly_sparse(&seq[..=48], 1, 6, 8).map_err(|e| e.to_string())?;
        let q = q.ok_or(format!("support along {w:?} has no model"))?;
        if !q.predicts(&seq, 49..=64) {
            return Err(format!("support along {w:?} fails the holdout"));
        }
        period = period.lcm(&q.period);
    }
    if 6 * period + 1 > 49 {
        return Err(format!("common period {period} too large for the fit window"));
    }
    let m = fit_polygon_model_with_period(&b.polys[..=48], 1, period, 8).map_err(|e| e.to_string())?;
    let m = m.ok_or(format!("no polygon model with period {period}"))?;
    if !m.predicts(&b.polys, 49..=64) {
        return Err("polygon model fails the holdout".into());
    }
    Ok(period)
}

fn c5_supports(insts: &[Bivariate]) -> Check {
    let results = Exec::default().map(insts, bivariate_ok);
    let mut ok = 0;
    for (b, r) in insts.iter().zip(&results) {
        match r {
            Ok(_) => ok += 1,
            Err(e) => eprintln!(
                "  criterion 5 miss: {} init {:?}: {e}",
                serde_json::to_string(&b.rec).unwrap(),
                b.init.iter().map(|p| p.to_string_with(&["x1", "x2"])).collect::<Vec<_>>()
            ),
        }
    }
    if ok >= 22 {
        Ok(format!("{ok}/25 instances"))
    } else {
        Err(format!("only {ok}/25 instances"))
    }
}

fn c6_traces() -> Check {
    let mut g = sample::rng(20240303);
    let pairs: Vec<_> = (0..50).map(|_| sample::random_matrix_pair(&mut g, 3, 2)).collect();
    let results = Exec::default().map(&pairs, |(a, b)| -> Result<bool, String> {
        let rec = char_poly_recurrence(b).map_err(|e| e.to_string())?;
        let seq = trace_sequence(a, b, 30).map_err(|e| e.to_string())?;
        rec.annihilates_fractions(&seq).map_err(|e| e.to_string())
    });
    for (k, r) in results.iter().enumerate() {
        match r {
            Ok(true) => {}
            Ok(false) => return Err(format!("pair {k} not annihilated")),
            Err(e) => return Err(format!("pair {k}: {e}")),
        }
    }
    Ok("50/50 pairs annihilated for n <= 30".into())
}

fn c7_elimination() -> Check {
    let inst = EliminationInstance::parse("m2 - m1", "l2 - l1").map_err(|e| e.to_string())?;
    let rep = elimination_report(&inst, 16, 3, Exec::default()).map_err(|e| e.to_string())?;
    let vars = ["m1", "l1"];
    let mut nums = Vec::new();
    for (k, t) in rep.terms.iter().enumerate() {
        let n = k + 1;
        let closed = LaurentPoly::parse(&vars, &format!("l1^{n} - m1")).unwrap();
        let signed = if n % 2 == 0 { closed.clone() } else { -&closed };
        if !t.is_laurent() || t.num() != &signed {
            return Err(format!("R_{n} differs from the closed form"));
        }
        if !t.num().divisible_by(&closed) {
            return Err(format!("l1^{n} - m1 does not divide R_{n}"));
        }
        nums.push(t.num().clone());
    }
    // n <= 8 is 8 terms, enough for order 2
    let rec = guess_recurrence(&nums[..8], 2, None).map_err(|e| e.to_string())?.ok_or("no recurrence from n <= 8")?;
    if !rec.annihilates(&nums).map_err(|e| e.to_string())? {
        return Err("guessed recurrence fails on n in [9, 16]".into());
    }
    let model = rep.model.as_ref().ok_or("no polygon model")?;
    if model.degree() > 1 {
        return Err(format!("polygon model has degree {}", model.degree()));
    }
    if !model.predicts(&rep.polygons().map_err(|e| e.to_string())?, 1..=16) {
        return Err("polygon model disagrees with the terms".into());
    }
    Ok(format!("order {} recurrence, linear model of period {}", rec.order(), model.period))
}

fn c8_zeros() -> Check {
    let parity = |last: usize| -> Vec<Rational> { (0..=last).map(|n| int((n % 2) as i64)).collect() };
    let g = GeneralizedPowerSum::new(vec![int(2)], vec![vec![int(-3), int(1)]]).map_err(|e| e.to_string())?;
    let shifted = |last: usize| -> Vec<Rational> { (0..=last as u64).map(|n| g.eval(n)).collect() };
    // oracle for the second sequence
    if shifted(10)[5] != int(64) {
        return Err("power-sum evaluation".into());
    }
    for last in [60, 90] {
        let z = zero_pattern(&parity(last), 6, 8).map_err(|e| e.to_string())?;
        if z.full_residues != vec![0] || z.period != 2 || !z.sporadic.is_empty() {
            return Err(format!("parity at N = {last}: {z:?}"));
        }
        let z = zero_pattern(&shifted(last), 6, 8).map_err(|e| e.to_string())?;
        if !z.full_residues.is_empty() || z.sporadic != vec![3] {
            return Err(format!("(n-3)2^n at N = {last}: {z:?}"));
        }
    }
    Ok("patterns stable from N = 60 to N = 90".into())
}

fn c9_counts_and_shear(insts: &[Bivariate]) -> Check {
    let (rec, init) = chebyshev();
    let terms = rec.generate_laurent(&init, 64).map_err(|e| e.to_string())?;
    let polys: Vec<Polytope> = newton_all(&terms).into_iter().map(Option::unwrap).collect();
    let counts: Vec<Rational> = polys.iter().map(|p| int(p.lattice_count() as i64)).collect();
    if polys.iter().any(|p| p.area() != int(0)) {
        return Err("nonzero area".into());
    }
    let q = fit_quasipoly(&counts, 1, 6, 8).map_err(|e| e.to_string())?.ok_or("no count model")?;
    if q.period != 2 || q.residues != vec![Some(coeffs(&[1, 1])), Some(coeffs(&[0, 1]))] {
        return Err(format!("count model {q:?}"));
    }
    for b in insts {
        let sheared = shear_polygons(&b.polys, 1).map_err(|e| e.to_string())?;
        if let Some(m) = fit_polygon_model(&sheared, 2, 6, 8).map_err(|e| e.to_string())? {
            if m.degree() == 2 && m.predicts(&sheared, 0..=64) {
                return Ok(format!("counts n+1 / n; sheared model of period {} is quasi-quadratic", m.period));
            }
        }
    }
    Err("no sheared instance with a quasi-quadratic model".into())
}

fn c10_polytope_kernel() -> Check {
    let mut g = sample::rng(20240304);
    let bound = 3;
    // injective on the exponent box, so no two monomials collide
    let dirs = [[1, 2 * bound + 1], [2 * bound + 1, -1], [-1, -(2 * bound + 1)], [-(2 * bound + 1), 1]];
    for k in 0..200 {
        let p = sample::random_laurent(&mut g, 2, 4, bound, 5);
        let q = sample::random_laurent(&mut g, 2, 4, bound, 5);
        let (np, nq) = (Polytope::newton(&p).unwrap(), Polytope::newton(&q).unwrap());
        let npq = Polytope::newton(&(&p * &q)).unwrap();
        if npq != np.minkowski_sum(&nq).unwrap() {
            return Err(format!("Minkowski sum fails for polynomial pair {k}"));
        }
        let total = np.lattice_count() as i64;
        let boundary = np.boundary_count() as i64;
        if np.vertex_count() >= 3 {
            // Pick: A = I + B/2 - 1
            let pick = Rational::new((2 * (total - boundary) + boundary - 2).into(), 2.into());
            if np.area() != pick {
                return Err(format!("Pick's formula fails for polynomial {k}"));
            }
        }
        for w in dirs {
            let (lo, hi) = p.specialize(&w).unwrap().valuations().unwrap();
            if np.project(&w).unwrap() != (lo, hi) || np.support(&w).unwrap() != hi {
                return Err(format!("projection fails for polynomial {k} along {w:?}"));
            }
        }
    }
    Ok("200 polynomials".into())
}

fn main() -> ExitCode {
    let mut failed = 0;
    let mut report = |idx: usize, name: &str, start: Instant, r: Check| {
        let secs = start.elapsed().as_secs_f64();
        match r {
            Ok(msg) => println!("PASS criterion {idx:>2} {name}: {msg} ({secs:.2}s)"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {idx:>2} {name}: {msg} ({secs:.2}s)")
            }
        }
    };
    let t = Instant::now();
    report(1, "valuations of x^2 + x^7", t, c1_valuations());
    let t = Instant::now();
    report(2, "Chebyshev polygon model", t, c2_chebyshev_polygons());
    let t = Instant::now();
    let reports = univariate_reports();
    report(3, "univariate fit and holdout", t, c3_fit_rate(&reports));
    let t = Instant::now();
    report(4, "slope spectrum membership", t, c4_membership(&reports));
    let t = Instant::now();
    let insts = bivariate_instances();
    report(5, "bivariate supports and polygons", t, c5_supports(&insts));
    let t = Instant::now();
    report(6, "trace sequences", t, c6_traces());
    let t = Instant::now();
    report(7, "elimination pipeline", t, c7_elimination());
    let t = Instant::now();
    report(8, "zero patterns", t, c8_zeros());
    let t = Instant::now();
    report(9, "lattice counts and shear", t, c9_counts_and_shear(&insts));
    let t = Instant::now();
    report(10, "polytope kernel", t, c10_polytope_kernel());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
