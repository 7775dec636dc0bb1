//! A tagged union over every carrier's element type, with JSON literals.

use std::fmt;

use serde_json::Value as Json;

use crate::domain::Domain;
use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::matrix::IntervalMatrix;
use crate::polynomial::IntervalPolynomial;
use crate::transform::TransformationMap;

/// One element of some carrier.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Value {
    Interval(Interval),
    Matrix(IntervalMatrix),
    Polynomial(IntervalPolynomial),
    Map(TransformationMap),
    /// An abstract element known only by name, used for table-defined semigroups.
    Label(String),
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Interval(_) => "interval",
            Value::Matrix(_) => "matrix",
            Value::Polynomial(_) => "polynomial",
            Value::Map(_) => "map",
            Value::Label(_) => "label",
        }
    }

    pub fn as_interval(&self) -> Result<&Interval> {
        match self {
            Value::Interval(x) => Ok(x),
            other => Err(Error::InvalidInput(format!("expected an interval, got a {}", other.kind()))),
        }
    }

    pub fn as_matrix(&self) -> Result<&IntervalMatrix> {
        match self {
            Value::Matrix(x) => Ok(x),
            other => Err(Error::InvalidInput(format!("expected a matrix, got a {}", other.kind()))),
        }
    }

    pub fn as_polynomial(&self) -> Result<&IntervalPolynomial> {
        match self {
            Value::Polynomial(x) => Ok(x),
            other => Err(Error::InvalidInput(format!("expected a polynomial, got a {}", other.kind()))),
        }
    }

    pub fn as_map(&self) -> Result<&TransformationMap> {
        match self {
            Value::Map(x) => Ok(x),
            other => Err(Error::InvalidInput(format!("expected a map, got a {}", other.kind()))),
        }
    }

    /// Parses a JSON literal.
    ///
    /// Accepted forms: `"[0, a]"` or `"a"`, `{"upper": "a"}`,
    /// `{"rows": r, "cols": c, "entries": [..]}`, an array of element strings
    /// (row matrix), an array of arrays (matrix), `{"coeffs": {"e": "a"}}`,
    /// and `{"n": n, "images": [..]}`.
    pub fn from_json(domain: Option<Domain>, json: &Json) -> Result<Value> {
        let need_domain =
            || domain.ok_or_else(|| Error::InvalidInput("this literal needs a coefficient domain".into()));
        let text = |v: &Json| -> Result<String> {
            v.as_str()
                .map(str::to_owned)
                .ok_or_else(|| Error::InvalidInput(format!("expected an element string, got {v}")))
        };
        match json {
            Json::String(s) => Ok(Value::Interval(Interval::parse(need_domain()?, s)?)),
            Json::Array(items) if items.iter().all(Json::is_array) && !items.is_empty() => {
                let d = need_domain()?;
                let rows = items.len();
                let cols = items[0].as_array().map_or(0, Vec::len);
                let mut entries = Vec::new();
                for row in items {
                    let row = row.as_array().expect("checked");
                    if row.len() != cols {
                        return Err(Error::Shape("matrix rows have different lengths".into()));
                    }
                    for e in row {
                        entries.push(Interval::parse(d, &text(e)?)?);
                    }
                }
                Ok(Value::Matrix(IntervalMatrix::new(rows, cols, entries)?))
            }
            Json::Array(items) => {
                let d = need_domain()?;
                let entries = items.iter().map(|e| Interval::parse(d, &text(e)?)).collect::<Result<Vec<_>>>()?;
                Ok(Value::Matrix(IntervalMatrix::new(1, entries.len(), entries)?))
            }
            Json::Object(map) => {
                if let Some(u) = map.get("upper") {
                    return Ok(Value::Interval(Interval::parse(need_domain()?, &text(u)?)?));
                }
                if let Some(images) = map.get("images") {
                    let images: Vec<usize> = serde_json::from_value(images.clone())
                        .map_err(|e| Error::InvalidInput(format!("images: {e}")))?;
                    if let Some(n) = map.get("n").and_then(Json::as_u64) {
                        if n as usize != images.len() {
                            return Err(Error::Shape(format!("map declares n = {n} but has {} images", images.len())));
                        }
                    }
                    return Ok(Value::Map(TransformationMap::new(images)?));
                }
                if let Some(coeffs) = map.get("coeffs") {
                    let d = need_domain()?;
                    let obj =
                        coeffs.as_object().ok_or_else(|| Error::InvalidInput("coeffs must be an object".into()))?;
                    let mut terms = Vec::new();
                    for (e, c) in obj {
                        let e: u64 = e.parse().map_err(|_| Error::InvalidInput(format!("bad exponent '{e}'")))?;
                        terms.push((e, Interval::parse(d, &text(c)?)?));
                    }
                    return Ok(Value::Polynomial(IntervalPolynomial::from_terms(d, terms)?));
                }
                if let Some(entries) = map.get("entries") {
                    let d = need_domain()?;
                    let dim = |k: &str| {
                        map.get(k)
                            .and_then(Json::as_u64)
                            .ok_or_else(|| Error::InvalidInput(format!("matrix literal needs '{k}'")))
                    };
                    let (rows, cols) = (dim("rows")? as usize, dim("cols")? as usize);
                    let entries = entries
                        .as_array()
                        .ok_or_else(|| Error::InvalidInput("entries must be an array".into()))?
                        .iter()
                        .map(|e| Interval::parse(d, &text(e)?))
                        .collect::<Result<Vec<_>>>()?;
                    return Ok(Value::Matrix(IntervalMatrix::new(rows, cols, entries)?));
                }
                Err(Error::InvalidInput(format!("unrecognised literal {json}")))
            }
            other => Err(Error::InvalidInput(format!("unrecognised literal {other}"))),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Interval(x) => write!(f, "{x}"),
            Value::Matrix(x) => write!(f, "{x}"),
            Value::Polynomial(x) => write!(f, "{x}"),
            Value::Map(x) => write!(f, "{x}"),
            Value::Label(x) => write!(f, "{x}"),
        }
    }
}
