//! Text and JSON literals for series and pairs.
//!
//! Text: polynomials in `t` with integer coefficients, e.g. `1 - 2t^3 + 5*t^4`,
//! pairs as `(g, f)`, and the named pairs `a3` = `a3(1)` = `(1 + t^3, t)` and
//! `e2` = `e2[1]` = `(1, t + t^3)`.
//!
//! JSON: `{"g": [1, 1], "f": [0, 1], "ring": "F2"}`, coefficients as integers
//! or decimal strings, ring as in [`RingSpec`] (`"m"` sits beside `"ring"`).

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::fps::{FpsError, RingSpec, TruncatedSeries};
use crate::riordan::{RiordanError, RiordanPair};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiteralError {
    #[error("parse error at column {}: {message}", pos + 1)]
    Syntax { pos: usize, message: String },
    #[error("bad JSON literal: {0}")]
    Json(String),
    #[error(transparent)]
    Riordan(#[from] RiordanError),
}

impl From<FpsError> for LiteralError {
    fn from(e: FpsError) -> Self {
        LiteralError::Riordan(e.into())
    }
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Cursor { s: s.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), LiteralError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", c as char)))
        }
    }

    fn error(&self, message: impl Into<String>) -> LiteralError {
        LiteralError::Syntax { pos: self.pos, message: message.into() }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.s[start..self.pos]).expect("ascii"))
    }

    fn number(&mut self) -> Result<usize, LiteralError> {
        let at = self.pos;
        self.digits()
            .and_then(|d| d.parse().ok())
            .ok_or(LiteralError::Syntax { pos: at, message: "expected a number".into() })
    }

    fn integer(&mut self) -> Result<BigInt, LiteralError> {
        let neg = self.eat(b'-');
        if !neg {
            self.eat(b'+');
        }
        let at = self.pos;
        let d = self
            .digits()
            .ok_or(LiteralError::Syntax { pos: at, message: "expected an integer".into() })?;
        let v: BigInt = d.parse().expect("digits");
        Ok(if neg { -v } else { v })
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }
}

/// Coefficients by degree, without truncation.
fn polynomial(c: &mut Cursor) -> Result<Vec<BigInt>, LiteralError> {
    let mut coeffs: Vec<BigInt> = Vec::new();
    let mut first = true;
    loop {
        let sign_at = c.pos;
        let neg = if c.eat(b'-') {
            true
        } else if c.eat(b'+') || first {
            false
        } else {
            break;
        };
        first = false;
        let start = c.pos;
        let mut coeff = match c.digits() {
            Some(d) => d.parse::<BigInt>().expect("digits"),
            None => BigInt::from(1),
        };
        let has_coeff = c.pos != start;
        if has_coeff {
            c.eat(b'*');
        }
        let degree = if c.eat(b't') {
            if c.eat(b'^') {
                c.number()?
            } else {
                1
            }
        } else if has_coeff {
            0
        } else {
            return Err(LiteralError::Syntax { pos: c.pos.max(sign_at), message: "expected a term".into() });
        };
        if neg {
            coeff = -coeff;
        }
        if coeffs.len() <= degree {
            coeffs.resize(degree + 1, BigInt::zero());
        }
        coeffs[degree] += coeff;
    }
    if coeffs.is_empty() {
        return Err(c.error("expected a polynomial"));
    }
    Ok(coeffs)
}

/// A polynomial in `t` read as a series mod `t^(order+1)`.
pub fn parse_series(text: &str, ring: RingSpec, order: usize) -> Result<TruncatedSeries, LiteralError> {
    let mut c = Cursor::new(text);
    let coeffs = polynomial(&mut c)?;
    if !c.at_end() {
        return Err(c.error("unexpected trailing input"));
    }
    Ok(TruncatedSeries::with_order(ring, &coeffs, order))
}

/// `(g, f)`, `aK`, `aK(beta)`, `eI` or `eI[alpha]`.
pub fn parse_pair(text: &str, ring: RingSpec, order: usize) -> Result<RiordanPair, LiteralError> {
    let mut c = Cursor::new(text);
    let pair = match c.peek() {
        Some(b'(') => {
            c.expect(b'(')?;
            let g = polynomial(&mut c)?;
            c.expect(b',')?;
            let f = polynomial(&mut c)?;
            c.expect(b')')?;
            RiordanPair::new(
                TruncatedSeries::with_order(ring, &g, order),
                TruncatedSeries::with_order(ring, &f, order),
            )?
        }
        Some(b'a') => {
            c.pos += 1;
            let k = c.number()?;
            let beta = if c.eat(b'(') {
                let b = c.integer()?;
                c.expect(b')')?;
                b
            } else {
                BigInt::from(1)
            };
            RiordanPair::elem_a(ring, k, &beta, order)?
        }
        Some(b'e') => {
            c.pos += 1;
            let i = c.number()?;
            let alpha = if c.eat(b'[') {
                let a = c.integer()?;
                c.expect(b']')?;
                a
            } else {
                BigInt::from(1)
            };
            RiordanPair::elem_e(ring, i, &alpha, order)
        }
        _ => return Err(c.error("expected '(', 'a' or 'e'")),
    };
    if !c.at_end() {
        return Err(c.error("unexpected trailing input"));
    }
    Ok(pair)
}

fn json_coeffs(v: &Value, key: &str) -> Result<Vec<BigInt>, LiteralError> {
    let arr = v
        .get(key)
        .and_then(Value::as_array)
        .ok_or_else(|| LiteralError::Json(format!("missing array \"{key}\"")))?;
    if arr.is_empty() {
        return Err(LiteralError::Json(format!("\"{key}\" is empty")));
    }
    arr.iter()
        .map(|x| match x {
            Value::Number(n) if n.is_i64() || n.is_u64() => Ok(n.to_string().parse().expect("integer")),
            Value::String(s) => s
                .trim()
                .parse::<BigInt>()
                .map_err(|_| LiteralError::Json(format!("not an integer: {s:?}"))),
            other => Err(LiteralError::Json(format!("not an integer: {other}"))),
        })
        .collect()
}

/// Ring named in a JSON object, if any.
pub fn ring_from_json(v: &Value) -> Result<Option<RingSpec>, LiteralError> {
    match v.get("ring") {
        None => Ok(None),
        Some(Value::String(name)) => {
            let mut lit = Map::new();
            lit.insert("ring".into(), Value::String(name.clone()));
            if let Some(m) = v.get("m") {
                lit.insert("m".into(), m.clone());
            }
            serde_json::from_value(Value::Object(lit))
                .map(Some)
                .map_err(|e| LiteralError::Json(e.to_string()))
        }
        Some(obj @ Value::Object(_)) => serde_json::from_value(obj.clone())
            .map(Some)
            .map_err(|e| LiteralError::Json(e.to_string())),
        Some(other) => Err(LiteralError::Json(format!("bad ring: {other}"))),
    }
}

/// Integer coefficient list under `key`, e.g. for predicates on raw integers.
pub fn integers_from_json(v: &Value, key: &str) -> Result<Vec<BigInt>, LiteralError> {
    json_coeffs(v, key)
}

/// A pair from its JSON object. Without `order` the longer list decides it;
/// without a ring in the object `default_ring` is used.
pub fn pair_from_json(
    v: &Value,
    default_ring: RingSpec,
    order: Option<usize>,
) -> Result<RiordanPair, LiteralError> {
    let ring = ring_from_json(v)?.unwrap_or(default_ring);
    let g = json_coeffs(v, "g")?;
    let f = json_coeffs(v, "f")?;
    let order = order.unwrap_or(g.len().max(f.len()) - 1);
    Ok(RiordanPair::new(
        TruncatedSeries::with_order(ring, &g, order),
        TruncatedSeries::with_order(ring, &f, order),
    )?)
}

/// Coefficients as decimal strings.
pub fn series_to_json(s: &TruncatedSeries) -> Value {
    Value::Array(s.coeffs().iter().map(|c| Value::String(c.to_string())).collect())
}

pub fn pair_to_json(p: &RiordanPair) -> Value {
    let mut out = json!({ "g": series_to_json(p.g()), "f": series_to_json(p.f()) });
    if let (Value::Object(o), Value::Object(r)) = (&mut out, serde_json::to_value(p.ring()).expect("ring")) {
        o.extend(r);
    }
    out
}
