use serde_json::{json, Value};

use polyrec::algebra::{rational, LaurentPoly, Rational};
use polyrec::elimination::{elimination_report, EliminationInstance};
use polyrec::polytope::{render_svg, Polytope};
use polyrec::quasifit::{fit_polygon_model, fit_quasipoly_sparse, shear_polygons, zero_pattern};
use polyrec::recurrence::{char_poly_recurrence, guess_recurrence, trace_sequence, MatrixRF, Recurrence};
use polyrec::sample::{self, RecurrenceShape};
use polyrec::valuation::{predicted_vs_empirical, root_valuations, slope_fan, Side, SlopeFitConfig};
use polyrec::Exec;

use crate::Opts;

#[derive(Debug)]
pub enum CliError {
    Io(String),
    Schema(String),
    Precondition(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Io(_) => 1,
            CliError::Schema(_) => 2,
            CliError::Precondition(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Io(m) => write!(f, "io error: {m}"),
            CliError::Schema(m) => write!(f, "schema error: {m}"),
            CliError::Precondition(m) => write!(f, "precondition failed: {m}"),
        }
    }
}

impl From<polyrec::Error> for CliError {
    fn from(e: polyrec::Error) -> Self {
        match e {
            polyrec::Error::Schema(m) => CliError::Schema(m),
            other => CliError::Precondition(other.to_string()),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Schema(e.to_string())
    }
}

pub struct Outcome {
    pub value: Value,
    pub found: bool,
    pub svg: Option<String>,
}

impl Outcome {
    fn new(value: Value) -> Self {
        Outcome { value, found: true, svg: None }
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> Result<Value, CliError> {
    serde_json::to_value(v).map_err(|e| CliError::Io(e.to_string()))
}

fn parse<T: serde::de::DeserializeOwned>(v: Value) -> Result<T, CliError> {
    Ok(serde_json::from_value(v)?)
}

fn field(v: &mut Value, key: &str) -> Result<Value, CliError> {
    v.get_mut(key).map(Value::take).ok_or_else(|| CliError::Schema(format!("missing field \"{key}\"")))
}

fn one_or_many<T: serde::de::DeserializeOwned>(v: Value) -> Result<(Vec<T>, bool), CliError> {
    if v.is_array() {
        Ok((parse(v)?, true))
    } else {
        Ok((vec![parse(v)?], false))
    }
}

fn rational_entry(v: &Value) -> Result<Option<Rational>, CliError> {
    match v {
        Value::Null => Ok(None),
        Value::String(s) => Ok(Some(rational::parse(s)?)),
        Value::Number(n) => {
            let i = n.as_i64().ok_or_else(|| CliError::Schema(format!("not an integer: {n}")))?;
            Ok(Some(Rational::from_integer(i.into())))
        }
        other => Err(CliError::Schema(format!("expected a rational, got {other}"))),
    }
}

fn newton_or_none(p: &LaurentPoly) -> Result<Option<Polytope>, CliError> {
    Ok(if p.is_zero() { None } else { Some(Polytope::newton(p)?) })
}

fn svg_of(polys: &[Option<Polytope>]) -> String {
    let (shown, labels): (Vec<Polytope>, Vec<String>) =
        polys.iter().enumerate().filter_map(|(n, p)| p.clone().map(|p| (p, format!("n={n}")))).unzip();
    render_svg(&shown, &labels)
}

/// `{"vars","coeffs","init"}`, or a random univariate instance from the seed.
fn instance(input: Option<Value>, opts: &Opts) -> Result<(Recurrence, Vec<LaurentPoly>), CliError> {
    match input {
        Some(mut v) => {
            let init: Vec<LaurentPoly> = parse(field(&mut v, "init")?)?;
            let obj = v.as_object_mut().ok_or_else(|| CliError::Schema("expected an object".into()))?;
            obj.remove("init");
            Ok((parse(v)?, init))
        }
        None => {
            let seed = opts.seed.unwrap_or(0);
            Ok(sample::random_unit_leading(&mut sample::rng(seed), &RecurrenceShape::univariate()))
        }
    }
}

fn instance_value(rec: &Recurrence, init: &[LaurentPoly]) -> Result<Value, CliError> {
    let mut v = to_value(rec)?;
    v["init"] = to_value(&init)?;
    Ok(v)
}

pub fn gen(input: Option<Value>, opts: &Opts) -> Result<Outcome, CliError> {
    let (rec, init) = instance(input, opts)?;
    let g = rec.generate(&init, opts.n_max.unwrap_or(10))?;
    let value = if g.fractional { to_value(&g.fractions())? } else { to_value(&g.terms)? };
    Ok(Outcome::new(value))
}

pub fn newton(input: Value) -> Result<Outcome, CliError> {
    let (polys, many): (Vec<LaurentPoly>, bool) = one_or_many(input)?;
    let out: Vec<Option<Polytope>> = polys.iter().map(newton_or_none).collect::<Result<_, _>>()?;
    Ok(Outcome::new(if many { to_value(&out)? } else { to_value(&out[0])? }))
}

pub fn fit(input: Value, opts: &Opts) -> Result<Outcome, CliError> {
    let items = input.as_array().ok_or_else(|| CliError::Schema("expected an array".into()))?;
    let deg = opts.deg_max.unwrap_or(1);
    let m_max = opts.m_max.unwrap_or(6);
    let budget = opts.prefix_budget.unwrap_or(8);
    let polygonal = items.iter().any(Value::is_object);
    let (value, found) = if polygonal {
        let polys: Vec<Option<Polytope>> = parse(input)?;
        let m = fit_polygon_model(&polys, deg, m_max, budget)?;
        (to_value(&m)?, m.is_some())
    } else {
        let seq: Vec<Option<Rational>> = items.iter().map(rational_entry).collect::<Result<_, _>>()?;
        let m = fit_quasipoly_sparse(&seq, deg, m_max, budget)?;
        (to_value(&m)?, m.is_some())
    };
    Ok(Outcome { value, found, svg: None })
}

pub fn zeros(input: Value, opts: &Opts) -> Result<Outcome, CliError> {
    let items = input.as_array().ok_or_else(|| CliError::Schema("expected an array".into()))?;
    let seq: Vec<Rational> = items
        .iter()
        .map(|v| rational_entry(v)?.ok_or_else(|| CliError::Schema("null entry".into())))
        .collect::<Result<_, _>>()?;
    let z = zero_pattern(&seq, opts.m_max.unwrap_or(6), opts.prefix_budget.unwrap_or(8))?;
    Ok(Outcome::new(to_value(&z)?))
}

pub fn guess(input: Value, opts: &Opts) -> Result<Outcome, CliError> {
    let terms: Vec<LaurentPoly> = parse(input)?;
    let rec = guess_recurrence(&terms, opts.order_max.unwrap_or(2), None)?;
    Ok(Outcome { value: to_value(&rec)?, found: rec.is_some(), svg: None })
}

pub fn eliminate(mut input: Value, opts: &Opts) -> Result<Outcome, CliError> {
    let p: LaurentPoly = parse(field(&mut input, "P")?)?;
    let q: LaurentPoly = parse(field(&mut input, "Q")?)?;
    let inst = EliminationInstance::new(p, q)?;
    let rep = elimination_report(&inst, opts.n_max.unwrap_or(12), opts.order_max.unwrap_or(2), Exec::default())?;
    let svg = svg_of(&rep.polygons()?);
    Ok(Outcome { value: to_value(&rep)?, found: rep.recurrence.is_some() && rep.model.is_some(), svg: Some(svg) })
}

pub fn trace(mut input: Value, opts: &Opts) -> Result<Outcome, CliError> {
    let a: MatrixRF = parse(field(&mut input, "A")?)?;
    let b: MatrixRF = parse(field(&mut input, "B")?)?;
    let terms = trace_sequence(&a, &b, opts.n_max.unwrap_or(10))?;
    let rec = char_poly_recurrence(&b)?;
    Ok(Outcome::new(json!({ "terms": to_value(&terms)?, "recurrence": to_value(&rec)? })))
}

pub fn fan(input: Value, opts: &Opts) -> Result<Outcome, CliError> {
    let chi: LaurentPoly = parse(input)?;
    let value = match &opts.omega {
        Some(w) => json!({
            "vstar": to_value(&root_valuations(&chi, w, Side::VStar)?)?,
            "v": to_value(&root_valuations(&chi, w, Side::V)?)?,
        }),
        None => to_value(&slope_fan(&chi)?)?,
    };
    Ok(Outcome::new(value))
}

pub fn shear(input: Value, opts: &Opts) -> Result<Outcome, CliError> {
    let polys: Vec<Option<Polytope>> = parse(input)?;
    let out = shear_polygons(&polys, opts.f.unwrap_or(1))?;
    Ok(Outcome { value: to_value(&out)?, found: true, svg: Some(svg_of(&out)) })
}

pub fn count(input: Value) -> Result<Outcome, CliError> {
    let (polys, many): (Vec<Polytope>, bool) = one_or_many(input)?;
    let rows: Vec<Value> = polys
        .iter()
        .map(|p| json!({ "count": p.lattice_count(), "area": rational::format(&p.area()) }))
        .collect();
    Ok(Outcome::new(if many { Value::Array(rows) } else { rows.into_iter().next().unwrap() }))
}

pub fn report(input: Option<Value>, opts: &Opts) -> Result<Outcome, CliError> {
    let (rec, init) = instance(input, opts)?;
    let n_max = opts.n_max.unwrap_or(64);
    let m_max = opts.m_max.unwrap_or(6);
    let budget = opts.prefix_budget.unwrap_or(8);
    let omega = opts.omega.clone().unwrap_or_else(|| vec![1; rec.vars()]);
    let g = rec.generate(&init, n_max)?;
    let polys: Vec<Option<Polytope>> = g.terms.iter().map(newton_or_none).collect::<Result<_, _>>()?;
    let model = fit_polygon_model(&polys, opts.deg_max.unwrap_or(1), m_max, budget)?;
    let cfg = SlopeFitConfig { n_max, fit_last: n_max * 3 / 4, m_max, prefix_budget: budget };
    let slopes = predicted_vs_empirical(&rec, &init, &omega, &cfg)?;
    let found = model.is_some() && slopes.vstar.fitted() && slopes.v.fitted();
    let terms = if g.fractional { to_value(&g.fractions())? } else { to_value(&g.terms)? };
    let value = json!({
        "instance": instance_value(&rec, &init)?,
        "terms": terms,
        "polytopes": to_value(&polys)?,
        "model": to_value(&model)?,
        "slopes": to_value(&slopes)?,
    });
    Ok(Outcome { value, found, svg: Some(svg_of(&polys)) })
}
