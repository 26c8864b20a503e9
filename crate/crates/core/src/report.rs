//! JSON formatting shared by all reports.

use num_complex::Complex64;
use serde::ser::SerializeTuple;
use serde::{Serialize, Serializer};

/// Values below this magnitude print as `"0"`.
pub const FLUSH: f64 = 1e-10;

/// Decimal string with at most 15 significant digits.
pub fn fmt_real(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x.abs() < FLUSH {
        return "0".into();
    }
    let rounded: f64 = format!("{x:.14e}").parse().unwrap_or(x);
    format!("{rounded}")
}

/// A complex number serialized as `[re, im]` strings.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Cx(pub Complex64);

impl Serialize for Cx {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut t = s.serialize_tuple(2)?;
        t.serialize_element(&fmt_real(self.0.re))?;
        t.serialize_element(&fmt_real(self.0.im))?;
        t.end()
    }
}

/// A real number serialized as a string.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Real(pub f64);

impl Serialize for Real {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_real(self.0))
    }
}

pub fn cx_vec(v: &[Complex64]) -> Vec<Cx> {
    v.iter().copied().map(Cx).collect()
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serialization");
    s.push('\n');
    s
}
