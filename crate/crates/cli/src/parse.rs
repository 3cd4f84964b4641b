//! Field elements from text: `3/2`, `2-i`, `1/2*i`, `3+2*sqrt(5)`, `√5`,
//! `(1+t)/(5*t^2)`.

use std::fmt;

use num_bigint::BigInt;
use quasival::fields::{Elem, QuadElem, Rat, RatFn};
use quasival::sample::Domain;

/// The field an element is read in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Field {
    Q,
    QSqrt(i64),
    QT,
}

impl Field {
    pub fn of(domain: &Domain) -> Field {
        match domain {
            Domain::Rationals | Domain::PIntegers { .. } => Field::Q,
            Domain::Quad { d } | Domain::QuadOrder { d, .. } => Field::QSqrt(*d),
            Domain::RatFns | Domain::RatFnRing { .. } => Field::QT,
        }
    }

    fn constant(&self, c: Rat) -> Elem {
        match *self {
            Field::Q => Elem::Rat(c),
            Field::QSqrt(d) => Elem::Quad(QuadElem::scalar(c, d)),
            Field::QT => Elem::RatFn(RatFn::constant(c)),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Q => write!(f, "ℚ"),
            Field::QSqrt(d) => write!(f, "ℚ(√{d})"),
            Field::QT => write!(f, "ℚ(t)"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Root,
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>, String> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push(Tok::Num(digits.parse().expect("digits")));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphabetic() {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if c == '√' {
            out.push(Tok::Root);
            i += 1;
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(format!("unexpected character {c:?}"));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
    field: Field,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Elem, String> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.try_add(&self.term()?).map_err(|e| e.to_string())?;
            } else if self.eat('-') {
                acc = acc.try_add(&self.term()?.neg()).map_err(|e| e.to_string())?;
            } else {
                return Ok(acc);
            }
        }
    }

    /// Starts an implicit product: `2i`, `3t`, `2√5`, `2(1+t)`.
    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(Tok::Ident(_) | Tok::Root | Tok::Op('(')))
    }

    fn term(&mut self) -> Result<Elem, String> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') || self.starts_factor() {
                acc = acc.try_mul(&self.unary()?).map_err(|e| e.to_string())?;
            } else if self.eat('/') {
                let den = self.unary()?;
                let inv = den.inverse().ok_or("division by zero")?;
                acc = acc.try_mul(&inv).map_err(|e| e.to_string())?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Elem, String> {
        if self.eat('-') {
            return Ok(self.unary()?.neg());
        }
        let base = self.atom()?;
        if self.eat('^') {
            let neg = self.eat('-');
            let Some(Tok::Num(n)) = self.peek().cloned() else {
                return Err("expected an integer exponent".into());
            };
            self.pos += 1;
            let n: u32 = n.try_into().map_err(|_| "exponent too large")?;
            let power = base.pow(n);
            return if neg { power.inverse().ok_or_else(|| "division by zero".into()) } else { Ok(power) };
        }
        Ok(base)
    }

    fn root(&self, n: i64) -> Result<Elem, String> {
        match self.field {
            Field::QSqrt(d) if d == n => Ok(Elem::Quad(QuadElem::root(d))),
            other => Err(format!("√{n} does not lie in {other}")),
        }
    }

    fn signed_int(&mut self) -> Result<i64, String> {
        let neg = self.eat('-');
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let n: i64 = n.try_into().map_err(|_| "integer too large")?;
                Ok(if neg { -n } else { n })
            }
            _ => Err("expected an integer under the root".into()),
        }
    }

    fn atom(&mut self) -> Result<Elem, String> {
        let tok = self.peek().cloned().ok_or("unexpected end of input")?;
        self.pos += 1;
        match tok {
            Tok::Num(n) => Ok(self.field.constant(Rat::from_integer(n))),
            Tok::Op('(') => {
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err("missing )".into());
                }
                Ok(inner)
            }
            Tok::Root => {
                let n = if self.eat('(') {
                    let n = self.signed_int()?;
                    if !self.eat(')') {
                        return Err("missing )".into());
                    }
                    n
                } else {
                    self.signed_int()?
                };
                self.root(n)
            }
            Tok::Ident(name) => match name.as_str() {
                "i" => self.root(-1),
                "t" if self.field == Field::QT => {
                    Ok(Elem::RatFn(RatFn::monomial(Rat::from_integer(1.into()), 1)))
                }
                "sqrt" => {
                    if !self.eat('(') {
                        return Err("expected ( after sqrt".into());
                    }
                    let n = self.signed_int()?;
                    if !self.eat(')') {
                        return Err("missing )".into());
                    }
                    self.root(n)
                }
                other => Err(format!("unknown symbol {other:?} in {}", self.field)),
            },
            Tok::Op(c) => Err(format!("unexpected {c:?}")),
        }
    }
}

/// Parses `text` as an element of `field`.
pub fn parse_element(text: &str, field: Field) -> Result<Elem, String> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err("empty element".into());
    }
    let mut p = Parser { toks, pos: 0, field };
    let x = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(format!("trailing input after token {}", p.pos));
    }
    Ok(x)
}
