use std::path::Path;

use serde_json::Value;

use super::{Builtin, ReflectionGroup, DEFAULT_CAP};
use crate::error::{Error, Result};
use crate::numerics::{cx, CMatrix};

/// A group definition: a built-in family or explicit generator matrices.
#[derive(Clone, Debug)]
pub enum GroupSpec {
    Builtin(Builtin),
    Explicit { name: String, dim: usize, generators: Vec<CMatrix> },
}

impl GroupSpec {
    pub fn build(&self, cap: usize) -> Result<ReflectionGroup> {
        match self {
            GroupSpec::Builtin(b) => b.build_with_cap(cap),
            GroupSpec::Explicit { name, generators, .. } => ReflectionGroup::from_generators(name.clone(), generators, cap),
        }
    }

    pub fn build_default(&self) -> Result<ReflectionGroup> {
        self.build(DEFAULT_CAP)
    }
}

/// Parses `"p"`, `"p/q"` or a decimal literal.
pub fn parse_rational(s: &str) -> Result<f64> {
    let s = s.trim();
    let bad = || Error::Input(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: f64 = p.trim().parse().map_err(|_| bad())?;
            let q: f64 = q.trim().parse().map_err(|_| bad())?;
            if q == 0.0 {
                return Err(bad());
            }
            Ok(p / q)
        }
        None => s.parse().map_err(|_| bad()),
    }
}

/// Parses a complex literal: `"2"`, `"-1/2"`, `"0.5+1.5i"`, `"-i"`.
pub fn parse_complex(s: &str) -> Result<num_complex::Complex64> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let Some(body) = t.strip_suffix('i') else {
        return Ok(cx(parse_rational(&t)?, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        x => parse_rational(x.strip_prefix('+').unwrap_or(x))?,
    };
    Ok(cx(parse_rational(re)?, im))
}

/// A number, a complex literal string, or an `[re, im]` pair.
pub fn parse_entry(v: &Value) -> Result<num_complex::Complex64> {
    let part = |x: &Value| -> Result<f64> {
        match x {
            Value::String(s) => parse_rational(s),
            Value::Number(n) => n.as_f64().ok_or_else(|| Error::Input(format!("bad number {n}"))),
            other => Err(Error::Input(format!("expected a number or rational string, got {other}"))),
        }
    };
    match v {
        Value::Array(p) if p.len() == 2 && !p[0].is_array() => Ok(cx(part(&p[0])?, part(&p[1])?)),
        Value::String(s) => parse_complex(s),
        Value::Number(n) => Ok(cx(n.as_f64().ok_or_else(|| Error::Input(format!("bad number {n}")))?, 0.0)),
        other => Err(Error::Input(format!("matrix entry must be a number or [re, im], got {other}"))),
    }
}

/// A `dim x dim` matrix given as rows or as a flat row-major list.
pub fn parse_matrix(v: &Value, dim: usize) -> Result<CMatrix> {
    let items = v.as_array().ok_or_else(|| Error::Input("generator must be an array".into()))?;
    let mut entries = Vec::with_capacity(dim * dim);
    // either dim rows of dim entries, or dim*dim entries in row-major order
    if dim > 1 && items.len() == dim && items.iter().all(|r| r.as_array().is_some_and(|a| a.len() == dim)) {
        for row in items {
            for e in row.as_array().unwrap() {
                entries.push(parse_entry(e)?);
            }
        }
    } else {
        for e in items {
            entries.push(parse_entry(e)?);
        }
    }
    if entries.len() != dim * dim {
        return Err(Error::Dimension(format!("generator has {} entries, expected {}", entries.len(), dim * dim)));
    }
    Ok(CMatrix::from_row_slice(dim, dim, &entries))
}

pub fn parse_group_spec(json: &Value) -> Result<GroupSpec> {
    if json.get("builtin").is_some() {
        let b: Builtin = serde_json::from_value(json.clone())
            .map_err(|e| Error::Input(format!("bad built-in group description: {e}")))?;
        return Ok(GroupSpec::Builtin(b));
    }
    let dim = json
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Input("group file needs \"dim\" or \"builtin\"".into()))? as usize;
    let gens = json
        .get("generators")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Input("group file needs a \"generators\" array".into()))?;
    let generators = gens.iter().map(|g| parse_matrix(g, dim)).collect::<Result<Vec<_>>>()?;
    let name = json.get("name").and_then(Value::as_str).unwrap_or("W").to_string();
    Ok(GroupSpec::Explicit { name, dim, generators })
}

pub fn load_group_spec(path: &Path) -> Result<GroupSpec> {
    let text = std::fs::read_to_string(path)?;
    parse_group_spec(&serde_json::from_str(&text)?)
}
