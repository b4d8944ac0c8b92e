//! Text and JSON forms of polynomials.
//!
//! Grammar:
//! ```text
//! expr := term (('+'|'-') term)* ; term := factor ('*' factor)* ; factor := base ('^' uint)?
//! base := rational | var | '(' expr ')' ; var := 'x[' uint ',' uint ']' ; rational := '-'? uint ('/' uint)?
//! ```
//! A leading '-' in front of a non-numeric base is also accepted as negation.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::poly::{Monomial, Polynomial};
use super::shape::{Shape, VarIndex};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

pub fn parse_poly(src: &str, shape: &Shape) -> Result<Polynomial> {
    let mut p = Parser { src: src.as_bytes(), pos: 0, shape };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    shape: &'a Shape,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn uint(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected unsigned integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse as integer"))
    }

    fn small_uint(&mut self) -> Result<usize> {
        let start = self.pos;
        let n = self.uint()?;
        usize::try_from(n).map_err(|_| Error::Syntax { pos: start, msg: "integer too large".into() })
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.base()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let start = self.pos;
            let e = self.small_uint()?;
            let e = u32::try_from(e).map_err(|_| Error::Syntax { pos: start, msg: "exponent too large".into() })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(b'x') => self.var(),
            Some(b'-') => {
                self.pos += 1;
                match self.peek() {
                    Some(c) if c.is_ascii_digit() => Ok(-self.rational()?),
                    Some(b'x') | Some(b'(') => Ok(-self.base()?),
                    _ => Err(self.error("expected operand after '-'")),
                }
            }
            Some(c) if c.is_ascii_digit() => self.rational(),
            Some(_) => Err(self.error("expected number, variable or '('")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn rational(&mut self) -> Result<Polynomial> {
        let n = self.uint()?;
        let mut q = Rational::from_integer(n);
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let d = self.uint()?;
            if d.is_zero() {
                return Err(self.error("zero denominator"));
            }
            q /= Rational::from_integer(d);
        }
        Ok(Polynomial::constant(self.shape, q))
    }

    fn var(&mut self) -> Result<Polynomial> {
        let start = self.pos;
        self.pos += 1;
        self.expect(b'[')?;
        let k = self.small_uint()?;
        self.expect(b',')?;
        let i = self.small_uint()?;
        self.expect(b']')?;
        let idx = self.shape.index(VarIndex::new(k, i)).map_err(|_| {
            Error::OutOfShape(format!("x[{k},{i}] at position {start} not in shape {:?}", self.shape.parts()))
        })?;
        Ok(Polynomial::var(self.shape, idx))
    }
}

fn monomial_text(shape: &Shape, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (a, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        let v = shape.var(a);
        if e == 1 {
            parts.push(format!("{v}"));
        } else {
            parts.push(format!("{v}^{e}"));
        }
    }
    parts.join("*")
}

/// Canonical text: terms in decreasing graded-lexicographic order.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let shape = self.shape();
        for (n, (m, c)) in self.terms().rev().enumerate() {
            let mono = monomial_text(shape, m);
            let neg = c.is_negative();
            let mag = c.abs();
            let body = if mono.is_empty() {
                rational::to_string(&mag)
            } else if mag.is_one() {
                mono
            } else {
                format!("{}*{}", rational::to_string(&mag), mono)
            };
            match (n, neg) {
                (0, false) => write!(f, "{body}")?,
                (0, true) if mag.is_one() && m.degree() > 0 => write!(f, "-1*{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

/// JSON list of {"exp": {"k,i": e}, "coef": "p/q"} in canonical order.
pub fn poly_to_json(p: &Polynomial) -> Value {
    let shape = p.shape();
    let terms: Vec<Value> = p
        .terms()
        .rev()
        .map(|(m, c)| {
            let mut exp = serde_json::Map::new();
            for (a, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    let v = shape.var(a);
                    exp.insert(format!("{},{}", v.k, v.i), json!(e));
                }
            }
            json!({"exp": exp, "coef": rational::to_string(c)})
        })
        .collect();
    Value::Array(terms)
}

pub fn poly_from_json(v: &Value, shape: &Shape) -> Result<Polynomial> {
    let bad = |msg: String| Error::InvalidConfig(msg);
    let arr = v.as_array().ok_or_else(|| bad("polynomial must be a JSON list".into()))?;
    let n = shape.nvars();
    let mut terms = Vec::with_capacity(arr.len());
    for t in arr {
        let exp = t.get("exp").and_then(Value::as_object).ok_or_else(|| bad("term without \"exp\" object".into()))?;
        let coef = t.get("coef").and_then(Value::as_str).ok_or_else(|| bad("term without \"coef\" string".into()))?;
        let mut e = vec![0u32; n];
        let mut seen = BTreeMap::new();
        for (key, val) in exp {
            let (k, i) = key.split_once(',').ok_or_else(|| bad(format!("bad variable key {key:?}")))?;
            let k: usize = k.trim().parse().map_err(|_| bad(format!("bad variable key {key:?}")))?;
            let i: usize = i.trim().parse().map_err(|_| bad(format!("bad variable key {key:?}")))?;
            let idx = shape.index(VarIndex::new(k, i))?;
            let power = val
                .as_u64()
                .and_then(|x| u32::try_from(x).ok())
                .ok_or_else(|| bad(format!("bad exponent for {key:?}")))?;
            if seen.insert(idx, ()).is_some() {
                return Err(bad(format!("repeated variable key {key:?}")));
            }
            e[idx] = power;
        }
        terms.push((Monomial::from_exponents(e), rational::parse(coef)?));
    }
    Ok(Polynomial::from_terms(shape, terms))
}
