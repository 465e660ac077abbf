//! JSON descriptions of rings, algebras and quadratic presentations.
//!
//! This is the input format the CLI consumes and the output format it emits.
//! Rings are tagged objects, e.g. `{"kind":"integers"}` or
//! `{"kind":"polynomial","base":{"kind":"integers"},"variables":["s","t"]}`;
//! a compact shorthand (`Z`, `Q`, `Z/7`, `Z[s,t]`, `Q[s][x]`) is accepted on
//! the command line. Algebras are one of
//!
//! ```json
//! {"type":"monogenic","poly":[1,-3,2]}
//! {"type":"table","constants":[[[...]]],"unit":[...]}
//! {"type":"product","factors":[...]}
//! {"type":"square_zero","rank":3}
//! ```
//!
//! Coefficients are JSON integers or strings in the ring's textual
//! serialization. Emitted JSON uses sorted keys and integer coefficients as
//! JSON numbers (arbitrary precision), so identical inputs yield
//! byte-identical outputs.

use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};

use crate::algebra::FreeAlgebra;
use crate::delta::QuadraticAlgebra;
use crate::error::{Error, Result};
use crate::ring::{Elem, Ring};

fn parse_err(detail: impl Into<String>) -> Error {
    Error::Parse {
        what: "JSON description".into(),
        detail: detail.into(),
    }
}

/// Parses a ring from its JSON description.
pub fn ring_from_json(v: &Value) -> Result<Ring> {
    let obj = v.as_object().ok_or_else(|| parse_err("ring must be an object"))?;
    let kind = obj
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| parse_err("ring needs a string `kind`"))?;
    let ring = match kind {
        "integers" => Ring::Integers,
        "rationals" => Ring::Rationals,
        "integers_mod" => {
            let m = obj
                .get("modulus")
                .ok_or_else(|| parse_err("integers_mod needs `modulus`"))?;
            let m = json_bigint(m)?;
            let m = m
                .to_biguint()
                .ok_or_else(|| parse_err("modulus must be positive"))?;
            Ring::IntegersMod(m)
        }
        "polynomial" => {
            let base = ring_from_json(
                obj.get("base")
                    .ok_or_else(|| parse_err("polynomial ring needs `base`"))?,
            )?;
            let vars = obj
                .get("variables")
                .and_then(Value::as_array)
                .ok_or_else(|| parse_err("polynomial ring needs `variables`"))?;
            let vars: Vec<String> = vars
                .iter()
                .map(|v| {
                    v.as_str()
                        .map(str::to_string)
                        .ok_or_else(|| parse_err("variable names must be strings"))
                })
                .collect::<Result<_>>()?;
            Ring::poly(base, vars)
        }
        other => return Err(parse_err(format!("unknown ring kind {other:?}"))),
    };
    ring.validate()?;
    Ok(ring)
}

pub fn ring_to_json(r: &Ring) -> Value {
    match r {
        Ring::Integers => json!({"kind": "integers"}),
        Ring::Rationals => json!({"kind": "rationals"}),
        Ring::IntegersMod(m) => {
            json!({"kind": "integers_mod", "modulus": big_number(&BigInt::from(m.clone()))})
        }
        Ring::Polynomial(pr) => json!({
            "kind": "polynomial",
            "base": ring_to_json(&pr.base),
            "variables": pr.vars,
        }),
    }
}

/// Parses the compact command-line ring notation: `Z`, `Q`, `Z/m`, each
/// optionally followed by variable groups like `[s,t][x]`.
pub fn ring_shorthand(s: &str) -> Result<Ring> {
    let s = s.trim();
    let (head, rest) = match s.find('[') {
        Some(i) => (&s[..i], &s[i..]),
        None => (s, ""),
    };
    let head = head.trim();
    let mut ring = if head == "Z" {
        Ring::Integers
    } else if head == "Q" {
        Ring::Rationals
    } else if let Some(m) = head.strip_prefix("Z/") {
        let m: BigInt = m
            .trim()
            .parse()
            .map_err(|_| parse_err(format!("bad modulus in {head:?}")))?;
        Ring::IntegersMod(
            m.to_biguint()
                .ok_or_else(|| parse_err("modulus must be positive"))?,
        )
    } else {
        return Err(parse_err(format!(
            "unknown ring {head:?} (expected Z, Q, or Z/m)"
        )));
    };
    let mut rest = rest.trim();
    while !rest.is_empty() {
        if !rest.starts_with('[') {
            return Err(parse_err(format!("unexpected trailing input {rest:?}")));
        }
        let close = rest
            .find(']')
            .ok_or_else(|| parse_err("unbalanced `[` in ring"))?;
        let vars: Vec<String> = rest[1..close]
            .split(',')
            .map(|v| v.trim().to_string())
            .collect();
        ring = Ring::poly(ring, vars);
        rest = rest[close + 1..].trim();
    }
    ring.validate()?;
    Ok(ring)
}

fn json_bigint(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => {
            let text = n.to_string();
            BigInt::from_str(&text)
                .map_err(|_| parse_err(format!("expected an integer, got {text}")))
        }
        Value::String(s) => {
            BigInt::from_str(s.trim()).map_err(|_| parse_err(format!("expected an integer, got {s:?}")))
        }
        _ => Err(parse_err("expected an integer")),
    }
}

/// A coefficient: a JSON integer, or a string in the ring serialization.
pub fn elem_from_json(ring: &Ring, v: &Value) -> Result<Elem> {
    match v {
        Value::Number(_) => Ok(ring.from_int(json_bigint(v)?)),
        Value::String(s) => ring.parse(s),
        _ => Err(parse_err(format!("expected a coefficient, got {v}"))),
    }
}

fn big_number(n: &BigInt) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("decimal integer is a JSON number"))
}

/// Serializes a coefficient: integers as JSON numbers, everything else as a
/// string in the ring serialization.
pub fn elem_to_json(ring: &Ring, e: &Elem) -> Value {
    match e {
        Elem::Int(n) => big_number(n),
        _ => Value::String(ring.to_text(e)),
    }
}

/// Parses an algebra description against a ring.
pub fn algebra_from_json(ring: &Ring, v: &Value) -> Result<FreeAlgebra> {
    let obj = v
        .as_object()
        .ok_or_else(|| parse_err("algebra must be an object"))?;
    let ty = obj
        .get("type")
        .and_then(Value::as_str)
        .ok_or_else(|| parse_err("algebra needs a string `type`"))?;
    match ty {
        "monogenic" => {
            let poly = obj
                .get("poly")
                .and_then(Value::as_array)
                .ok_or_else(|| parse_err("monogenic algebra needs a `poly` array"))?;
            let coeffs: Vec<Elem> = poly
                .iter()
                .map(|c| elem_from_json(ring, c))
                .collect::<Result<_>>()?;
            FreeAlgebra::monogenic(ring.clone(), &coeffs)
        }
        "table" => {
            let constants = obj
                .get("constants")
                .and_then(Value::as_array)
                .ok_or_else(|| parse_err("table algebra needs `constants`"))?;
            let unit = obj
                .get("unit")
                .and_then(Value::as_array)
                .ok_or_else(|| parse_err("table algebra needs `unit`"))?;
            let n = constants.len();
            let mut structure = Vec::with_capacity(n * n * n);
            for row in constants {
                let row = row
                    .as_array()
                    .filter(|r| r.len() == n)
                    .ok_or_else(|| parse_err("constants must be an n×n×n array"))?;
                for col in row {
                    let col = col
                        .as_array()
                        .filter(|c| c.len() == n)
                        .ok_or_else(|| parse_err("constants must be an n×n×n array"))?;
                    for c in col {
                        structure.push(elem_from_json(ring, c)?);
                    }
                }
            }
            let unit: Vec<Elem> = unit
                .iter()
                .map(|c| elem_from_json(ring, c))
                .collect::<Result<_>>()?;
            FreeAlgebra::new(ring.clone(), n, structure, unit)
        }
        "product" => {
            let factors = obj
                .get("factors")
                .and_then(Value::as_array)
                .ok_or_else(|| parse_err("product algebra needs `factors`"))?;
            let mut algs = factors
                .iter()
                .map(|f| algebra_from_json(ring, f))
                .collect::<Result<Vec<_>>>()?;
            let mut acc = algs
                .drain(..)
                .reduce(|a, b| FreeAlgebra::product(&a, &b).expect("same ring"));
            acc.take()
                .ok_or_else(|| parse_err("product needs at least one factor"))
        }
        "square_zero" => {
            let rank = obj
                .get("rank")
                .and_then(Value::as_u64)
                .ok_or_else(|| parse_err("square_zero needs a positive `rank`"))?;
            if rank == 0 {
                return Err(Error::RankTooSmall { min: 1, got: 0 });
            }
            // `rank` is the total rank; one slot is the unit, the rest are
            // the square-zero generators.
            FreeAlgebra::square_zero(ring.clone(), rank as usize - 1)
        }
        other => Err(parse_err(format!("unknown algebra type {other:?}"))),
    }
}

/// Serializes an algebra in the normalized `table` form.
pub fn algebra_to_json(a: &FreeAlgebra) -> Value {
    let n = a.rank();
    let ring = a.ring();
    let constants: Vec<Value> = (0..n)
        .map(|i| {
            Value::Array(
                (0..n)
                    .map(|j| {
                        Value::Array(
                            (0..n)
                                .map(|k| elem_to_json(ring, a.structure_constant(i, j, k)))
                                .collect(),
                        )
                    })
                    .collect(),
            )
        })
        .collect();
    let unit: Vec<Value> = a
        .unit_element()
        .coords
        .iter()
        .map(|c| elem_to_json(ring, c))
        .collect();
    json!({
        "type": "table",
        "constants": constants,
        "unit": unit,
    })
}

/// Parses a full input document `{"ring": …, "algebra": …}`. A ring given
/// out-of-band (the `--ring` flag) overrides the document's ring.
pub fn input_from_value(v: &Value, ring_override: Option<Ring>) -> Result<(Ring, FreeAlgebra)> {
    let obj = v
        .as_object()
        .ok_or_else(|| parse_err("input must be a JSON object"))?;
    let ring = match ring_override {
        Some(r) => r,
        None => ring_from_json(
            obj.get("ring")
                .ok_or_else(|| parse_err("input needs a `ring` (or pass --ring)"))?,
        )?,
    };
    let alg = algebra_from_json(
        &ring,
        obj.get("algebra")
            .ok_or_else(|| parse_err("input needs an `algebra`"))?,
    )?;
    Ok((ring, alg))
}

pub fn input_from_str(s: &str, ring_override: Option<Ring>) -> Result<(Ring, FreeAlgebra)> {
    let v: Value =
        serde_json::from_str(s).map_err(|e| parse_err(format!("invalid JSON: {e}")))?;
    input_from_value(&v, ring_override)
}

/// Like [`input_from_str`], but `table` algebras skip the axiom checks, so
/// that an invalid table can still be diagnosed with
/// [`FreeAlgebra::check_axioms`].
pub fn input_from_str_unchecked(
    s: &str,
    ring_override: Option<Ring>,
) -> Result<(Ring, FreeAlgebra)> {
    let v: Value =
        serde_json::from_str(s).map_err(|e| parse_err(format!("invalid JSON: {e}")))?;
    let obj = v
        .as_object()
        .ok_or_else(|| parse_err("input must be a JSON object"))?;
    let ring = match ring_override {
        Some(r) => r,
        None => ring_from_json(
            obj.get("ring")
                .ok_or_else(|| parse_err("input needs a `ring` (or pass --ring)"))?,
        )?,
    };
    let alg_v = obj
        .get("algebra")
        .ok_or_else(|| parse_err("input needs an `algebra`"))?;
    let is_table = alg_v.get("type").and_then(Value::as_str) == Some("table");
    if !is_table {
        let alg = algebra_from_json(&ring, alg_v)?;
        return Ok((ring, alg));
    }
    let alg_obj = alg_v.as_object().unwrap();
    let constants = alg_obj
        .get("constants")
        .and_then(Value::as_array)
        .ok_or_else(|| parse_err("table algebra needs `constants`"))?;
    let unit = alg_obj
        .get("unit")
        .and_then(Value::as_array)
        .ok_or_else(|| parse_err("table algebra needs `unit`"))?;
    let n = constants.len();
    let mut structure = Vec::with_capacity(n * n * n);
    for row in constants {
        let row = row
            .as_array()
            .filter(|r| r.len() == n)
            .ok_or_else(|| parse_err("constants must be an n×n×n array"))?;
        for col in row {
            let col = col
                .as_array()
                .filter(|c| c.len() == n)
                .ok_or_else(|| parse_err("constants must be an n×n×n array"))?;
            for c in col {
                structure.push(elem_from_json(&ring, c)?);
            }
        }
    }
    let unit: Vec<Elem> = unit
        .iter()
        .map(|c| elem_from_json(&ring, c))
        .collect::<Result<_>>()?;
    let alg = FreeAlgebra::new_unchecked(ring.clone(), n, structure, unit)?;
    Ok((ring, alg))
}

/// Parses a quadratic presentation `{"T": …, "N": …}`.
pub fn quadratic_from_json(ring: &Ring, v: &Value) -> Result<QuadraticAlgebra> {
    let obj = v
        .as_object()
        .ok_or_else(|| parse_err("quadratic algebra must be an object"))?;
    let t = elem_from_json(
        ring,
        obj.get("T").ok_or_else(|| parse_err("quadratic algebra needs `T`"))?,
    )?;
    let n = elem_from_json(
        ring,
        obj.get("N").ok_or_else(|| parse_err("quadratic algebra needs `N`"))?,
    )?;
    QuadraticAlgebra::new(ring.clone(), t, n)
}

/// The presentation line `R[X]/(X^2 - (T)X + (N))` used in output.
pub fn presentation(q: &QuadraticAlgebra) -> String {
    let r = q.ring();
    format!(
        "{}[X]/(X^2 - ({})X + ({}))",
        r,
        r.to_text(q.t()),
        r.to_text(q.n())
    )
}

/// The JSON document the CLI emits for a discriminant algebra.
pub fn delta_to_json(q: &QuadraticAlgebra) -> Value {
    let r = q.ring();
    let mut map = Map::new();
    map.insert("T".into(), elem_to_json(r, q.t()));
    map.insert("N".into(), elem_to_json(r, q.n()));
    map.insert("disc".into(), elem_to_json(r, &q.disc()));
    map.insert("presentation".into(), Value::String(presentation(q)));
    Value::Object(map)
}
