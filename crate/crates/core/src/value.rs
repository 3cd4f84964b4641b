//! Values of quasi-valuations: an element of one ordered monoid, or `∞`.

use std::cmp::Ordering;
use std::fmt;

use serde_json::{json, Value as Json};

use crate::cut::{Cut, CutValue};
use crate::error::{Error, Result};
use crate::ordered::{DivElem, GroupElem, LexProductElem, MaxElem, OrderedMonoid};

/// The monoid a quasi-valuation takes its finite values in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Codomain {
    /// ℚᵏ, the divisible hull of ℤᵏ-lex.
    Div { rank: usize },
    /// The cut monoid of ℤᵏ-lex.
    Cut { rank: usize },
    /// ℤ × (max-monoid); `chain_len: None` is ℕ∪{0}.
    LexMax { chain_len: Option<u32> },
}

impl Codomain {
    pub fn zero(&self) -> MonoidValue {
        match *self {
            Codomain::Div { rank } => MonoidValue::Div(DivElem::zero(rank)),
            Codomain::Cut { rank } => MonoidValue::Cut(Cut::zero(rank)),
            Codomain::LexMax { chain_len } => {
                let m = match chain_len {
                    Some(len) => MaxElem::chain(0, len).expect("nonempty chain"),
                    None => MaxElem::nat(0),
                };
                MonoidValue::LexMax(LexProductElem::new(0, m))
            }
        }
    }

    pub fn family(&self) -> &'static str {
        match self {
            Codomain::Div { .. } => "div",
            Codomain::Cut { .. } => "cut",
            Codomain::LexMax { .. } => "lexmax",
        }
    }

    /// Whether the monoid is cancellative (true for groups only here).
    pub fn is_cancellative(&self) -> bool {
        matches!(self, Codomain::Div { .. })
    }
}

impl fmt::Display for Codomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Codomain::Div { rank } => write!(f, "ℚ^{rank}"),
            Codomain::Cut { rank } => write!(f, "M(ℤ^{rank})"),
            Codomain::LexMax { chain_len: Some(n) } => write!(f, "ℤ×{{α0..α{}}}", n - 1),
            Codomain::LexMax { chain_len: None } => write!(f, "ℤ×(ℕ∪{{0}},max)"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum MonoidValue {
    Div(DivElem),
    Cut(Cut),
    LexMax(LexProductElem),
    Infinity,
}

impl MonoidValue {
    pub fn int(v: i64) -> Self {
        MonoidValue::Div(DivElem::from_int(v))
    }

    pub fn principal(gamma: GroupElem) -> Self {
        MonoidValue::Cut(Cut::principal(gamma))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, MonoidValue::Infinity)
    }

    pub fn family(&self) -> &'static str {
        match self {
            MonoidValue::Div(_) => "div",
            MonoidValue::Cut(_) => "cut",
            MonoidValue::LexMax(_) => "lexmax",
            MonoidValue::Infinity => "infinity",
        }
    }

    pub fn as_div(&self) -> Option<&DivElem> {
        match self {
            MonoidValue::Div(d) => Some(d),
            _ => None,
        }
    }

    pub fn as_cut(&self) -> Option<&Cut> {
        match self {
            MonoidValue::Cut(c) => Some(c),
            _ => None,
        }
    }

    pub fn as_lexmax(&self) -> Option<&LexProductElem> {
        match self {
            MonoidValue::LexMax(x) => Some(x),
            _ => None,
        }
    }

    fn mismatch(&self, other: &Self) -> Error {
        Error::MonoidMismatch { left: self.family(), right: other.family() }
    }

    pub fn try_cmp(&self, other: &Self) -> Result<Ordering> {
        use MonoidValue::*;
        match (self, other) {
            (Infinity, Infinity) => Ok(Ordering::Equal),
            (Infinity, _) => Ok(Ordering::Greater),
            (_, Infinity) => Ok(Ordering::Less),
            (Div(a), Div(b)) => a.lex_compare(b),
            (Cut(a), Cut(b)) => a.cmp_cut(b),
            (LexMax(a), LexMax(b)) => a.lex_compare(b),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        use MonoidValue::*;
        match (self, other) {
            (Infinity, _) | (_, Infinity) => Ok(Infinity),
            (Div(a), Div(b)) => Ok(Div(a.add(b)?)),
            (Cut(a), Cut(b)) => Ok(Cut(a.add(b)?)),
            (LexMax(a), LexMax(b)) => Ok(LexMax(a.add(b)?)),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn times(&self, n: u64) -> Result<Self> {
        use MonoidValue::*;
        match self {
            Infinity => Ok(Infinity),
            Div(a) => Ok(Div(a.times(n)?)),
            Cut(a) => Ok(Cut(a.scalar(n)?)),
            LexMax(a) => Ok(LexMax(a.times(n)?)),
        }
    }

    /// Sign against the zero of the value's own monoid; `∞` is positive.
    pub fn sign(&self) -> Ordering {
        match self {
            MonoidValue::Infinity => Ordering::Greater,
            MonoidValue::Div(d) => d.signum(),
            MonoidValue::Cut(Cut::MinusInf) => Ordering::Less,
            MonoidValue::Cut(Cut::PlusInf) => Ordering::Greater,
            MonoidValue::Cut(c @ Cut::CutOf { gamma, .. }) => {
                c.cmp_cut(&Cut::zero(gamma.rank())).expect("same rank")
            }
            MonoidValue::LexMax(x) => {
                x.lex_compare(&x.identity_like()).expect("same max-monoid")
            }
        }
    }

    pub fn min(&self, other: &Self) -> Result<Self> {
        Ok(if self.try_cmp(other)? == Ordering::Greater { other.clone() } else { self.clone() })
    }

    pub fn to_json(&self) -> Json {
        match self {
            MonoidValue::Div(d) => json!({
                "kind": "div",
                "coords": d.coords().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            }),
            MonoidValue::Cut(c) => {
                serde_json::to_value(CutValue::Cut(c.clone())).expect("cut records serialize")
            }
            MonoidValue::LexMax(x) => json!({
                "kind": "lexmax",
                "g": x.g,
                "m": x.m.level(),
            }),
            MonoidValue::Infinity => json!({ "kind": "infinity" }),
        }
    }
}

impl From<CutValue> for MonoidValue {
    fn from(v: CutValue) -> Self {
        match v {
            CutValue::Cut(c) => MonoidValue::Cut(c),
            CutValue::Infinity => MonoidValue::Infinity,
        }
    }
}

impl From<DivElem> for MonoidValue {
    fn from(d: DivElem) -> Self {
        MonoidValue::Div(d)
    }
}

impl fmt::Debug for MonoidValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MonoidValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonoidValue::Div(d) => write!(f, "{d}"),
            MonoidValue::Cut(c) => write!(f, "{c}"),
            MonoidValue::LexMax(x) => write!(f, "{x}"),
            MonoidValue::Infinity => write!(f, "∞"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infinity_is_absorbing_and_maximal() {
        let x = MonoidValue::int(3);
        assert_eq!(x.try_add(&MonoidValue::Infinity).unwrap(), MonoidValue::Infinity);
        assert_eq!(x.try_cmp(&MonoidValue::Infinity).unwrap(), Ordering::Less);
        assert_eq!(MonoidValue::Infinity.sign(), Ordering::Greater);
    }

    #[test]
    fn families_do_not_mix() {
        let d = MonoidValue::int(0);
        let c = MonoidValue::principal(GroupElem::new(vec![0]));
        assert!(matches!(d.try_cmp(&c), Err(Error::MonoidMismatch { .. })));
        assert!(d.try_add(&c).is_err());
    }

    #[test]
    fn signs() {
        assert_eq!(MonoidValue::Cut(Cut::PlusInf).sign(), Ordering::Greater);
        assert_eq!(MonoidValue::Cut(Cut::MinusInf).sign(), Ordering::Less);
        let h = Cut::new(GroupElem::new(vec![0, 0]), 1).unwrap();
        assert_eq!(MonoidValue::Cut(h).sign(), Ordering::Greater);
        let a1 = LexProductElem::new(0, MaxElem::chain(1, 2).unwrap());
        assert_eq!(MonoidValue::LexMax(a1).sign(), Ordering::Greater);
        assert_eq!(Codomain::LexMax { chain_len: Some(2) }.zero().sign(), Ordering::Equal);
    }

    #[test]
    fn json_shapes() {
        assert_eq!(MonoidValue::int(-1).to_json(), json!({"kind":"div","coords":["-1"]}));
        assert_eq!(
            MonoidValue::principal(GroupElem::new(vec![-1])).to_json(),
            json!({"kind":"cut","gamma":[-1],"h_level":0})
        );
    }
}
