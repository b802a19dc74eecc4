//! Plain-text multivector format.
//!
//! Terms look like `coef*label^label...` and are joined by `+` or `-`, e.g.
//! `1.5*e1^e2 - 1*O^inf`. A bare number is a scalar term and a bare blade
//! has coefficient 1. Labels are matched case-sensitively and greedily
//! (longest label first), so labels such as `e+` and `e-` are unambiguous.
//! Output always uses the orthonormal basis labels of the signature and
//! Rust's shortest round-trip float formatting.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ga::{Multivector, Signature};

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<_> = self.terms().collect();
        if terms.is_empty() {
            return f.write_str("0");
        }
        terms.sort_by_key(|(b, _)| (b.grade(), b.0));
        let sig = self.signature();
        for (n, (blade, coef)) in terms.into_iter().enumerate() {
            let mag = coef.abs();
            match (n, coef.is_sign_negative()) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                (_, false) => f.write_str(" + ")?,
                (_, true) => f.write_str(" - ")?,
            }
            if blade.grade() == 0 {
                write!(f, "{mag:?}")?;
                continue;
            }
            write!(f, "{mag:?}*")?;
            for (k, i) in blade.indices().enumerate() {
                if k > 0 {
                    f.write_str("^")?;
                }
                f.write_str(sig.label(i))?;
            }
        }
        Ok(())
    }
}

/// Parses `text` using only the basis labels of `sig`.
pub fn parse_multivector(sig: &Arc<Signature>, text: &str) -> Result<Multivector> {
    parse_multivector_with(sig, text, &[])
}

/// Parses `text`, additionally resolving `named` vectors (e.g. `O`, `inf`).
/// Blade factors are joined with the outer product.
pub fn parse_multivector_with(
    sig: &Arc<Signature>,
    text: &str,
    named: &[(&str, &Multivector)],
) -> Result<Multivector> {
    let mut table: Vec<(String, Multivector)> = sig
        .labels()
        .iter()
        .enumerate()
        .map(|(i, l)| (l.clone(), Multivector::basis(sig, i)))
        .collect();
    for (name, v) in named {
        if v.signature().as_ref() != sig.as_ref() {
            return Err(Error::IncompatibleAlgebras(
                v.signature().to_string(),
                sig.to_string(),
            ));
        }
        if table.iter().any(|(l, _)| l == name) {
            return Err(Error::Parse(format!("name {name:?} shadows a basis label")));
        }
        table.push((name.to_string(), (*v).clone()));
    }
    table.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then_with(|| a.0.cmp(&b.0)));

    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        table: &table,
        text,
    };
    let mut out = Multivector::zero(sig);
    let mut first = true;
    loop {
        p.skip_ws();
        if p.at_end() {
            if first {
                return Err(p.error("empty multivector"));
            }
            return Ok(out);
        }
        let sign = match p.peek() {
            Some(b'+') => {
                p.pos += 1;
                1.0
            }
            Some(b'-') => {
                p.pos += 1;
                -1.0
            }
            _ if first => 1.0,
            _ => return Err(p.error("expected '+' or '-' between terms")),
        };
        p.skip_ws();
        let term = p.term(sig)?;
        out += &term.scale(sign);
        first = false;
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    table: &'a [(String, Multivector)],
    text: &'a str,
}

impl Parser<'_> {
    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn error(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {} in {:?}", self.pos, self.text))
    }

    fn term(&mut self, sig: &Arc<Signature>) -> Result<Multivector> {
        if matches!(self.peek(), Some(c) if c.is_ascii_digit() || c == b'.') {
            let coef = self.number()?;
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                self.skip_ws();
                Ok(self.blade()?.scale(coef))
            } else {
                Ok(Multivector::scalar(sig, coef))
            }
        } else {
            self.blade()
        }
    }

    fn number(&mut self) -> Result<f64> {
        let start = self.pos;
        let digits = |p: &mut Self| {
            while matches!(p.peek(), Some(c) if c.is_ascii_digit()) {
                p.pos += 1;
            }
        };
        digits(self);
        if self.peek() == Some(b'.') {
            self.pos += 1;
            digits(self);
        }
        if matches!(self.peek(), Some(b'e' | b'E')) {
            let save = self.pos;
            self.pos += 1;
            if matches!(self.peek(), Some(b'+' | b'-')) {
                self.pos += 1;
            }
            if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                digits(self);
            } else {
                self.pos = save;
            }
        }
        let s = &self.text[start..self.pos];
        s.parse::<f64>()
            .map_err(|_| self.error(&format!("bad number {s:?}")))
    }

    fn label(&mut self) -> Result<&Multivector> {
        let rest = &self.src[self.pos..];
        let (name, v) = self
            .table
            .iter()
            .find(|(l, _)| rest.starts_with(l.as_bytes()))
            .ok_or_else(|| self.error("unknown label"))?;
        self.pos += name.len();
        Ok(v)
    }

    fn blade(&mut self) -> Result<Multivector> {
        let mut acc = self.label()?.clone();
        loop {
            self.skip_ws();
            if self.peek() != Some(b'^') {
                return Ok(acc);
            }
            self.pos += 1;
            self.skip_ws();
            let next = self.label()?.clone();
            acc = acc.outer_product(&next)?;
        }
    }
}

impl Multivector {
    pub fn parse(sig: &Arc<Signature>, text: &str) -> Result<Self> {
        parse_multivector(sig, text)
    }
}
