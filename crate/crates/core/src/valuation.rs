//! Valuations on ℚ, ℚ(t) and ℚ(√d).
//!
//! Extensions of `v_p` to a quadratic field are computed exactly: in the
//! ramified and inert cases the unique extension is `v_p(N(x))/2`; in the
//! split case `u₁(a + b√d) = v_p(a + b·r)` for a `p`-adic square root `r`
//! of `d`, evaluated modulo `p^m` with `m` doubled until the residue is
//! nonzero, and `u₂(x) = u₁(x̄)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};
use crate::fields::{
    is_squarefree, require_prime, residue, vp_raw, Elem, QuadElem, Rat, RatFn,
};
use crate::ordered::{DivElem, Q};
use crate::value::{Codomain, MonoidValue};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Splitting {
    Split,
    Inert,
    Ramified,
}

impl fmt::Display for Splitting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Splitting::Split => "split",
            Splitting::Inert => "inert",
            Splitting::Ramified => "ramified",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ValuationKind {
    PAdic { p: i64 },
    /// Trivial valuation with value group `{0}` (rank 0).
    Trivial,
    /// `(ord_t f, v_p(lowest coefficient ratio))` on ℚ(t), values in ℤ²-lex.
    Composite { p: i64 },
    /// Extension of `v_p` to ℚ(√d).
    QuadExtension { p: i64, d: i64, splitting: Splitting, branch: u8 },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Valuation {
    kind: ValuationKind,
}

impl Valuation {
    pub fn p_adic(p: i64) -> Result<Self> {
        require_prime(p)?;
        Ok(Valuation { kind: ValuationKind::PAdic { p } })
    }

    pub fn trivial() -> Self {
        Valuation { kind: ValuationKind::Trivial }
    }

    pub fn composite(p: i64) -> Result<Self> {
        require_prime(p)?;
        Ok(Valuation { kind: ValuationKind::Composite { p } })
    }

    pub fn kind(&self) -> &ValuationKind {
        &self.kind
    }

    /// Residue characteristic, when there is one.
    pub fn prime(&self) -> Option<i64> {
        match self.kind {
            ValuationKind::PAdic { p }
            | ValuationKind::Composite { p }
            | ValuationKind::QuadExtension { p, .. } => Some(p),
            ValuationKind::Trivial => None,
        }
    }

    pub fn rank(&self) -> usize {
        match self.kind {
            ValuationKind::Trivial => 0,
            ValuationKind::Composite { .. } => 2,
            _ => 1,
        }
    }

    pub fn codomain(&self) -> Codomain {
        Codomain::Div { rank: self.rank() }
    }

    pub fn name(&self) -> String {
        match &self.kind {
            ValuationKind::PAdic { p } => format!("v_{p}"),
            ValuationKind::Trivial => "trivial".into(),
            ValuationKind::Composite { p } => format!("v_(t,{p})"),
            ValuationKind::QuadExtension { p, d, splitting: Splitting::Split, branch } => {
                format!("u{}[p={p},d={d}]", branch + 1)
            }
            ValuationKind::QuadExtension { p, d, .. } => format!("u[p={p},d={d}]"),
        }
    }

    /// Value of `x`; `None` is `∞`.
    pub fn value(&self, x: &Elem) -> Result<Option<DivElem>> {
        let wrong = || Error::OutsideDomain { element: x.to_string(), domain: self.name() };
        match &self.kind {
            ValuationKind::PAdic { p } => {
                let x = x.as_rat().ok_or_else(wrong)?;
                Ok(vp_raw(*p, x).map(DivElem::from_int))
            }
            ValuationKind::Trivial => Ok((!x.is_zero()).then(|| DivElem::zero(0))),
            ValuationKind::Composite { p } => {
                let f = x.as_ratfn().ok_or_else(wrong)?;
                Ok(composite_value(*p, f))
            }
            ValuationKind::QuadExtension { p, d, splitting, branch } => {
                let q = x.as_quad().ok_or_else(wrong)?;
                if q.d != *d {
                    return Err(wrong());
                }
                if q.is_zero() {
                    return Ok(None);
                }
                let v = match splitting {
                    Splitting::Split => {
                        let q = if *branch == 0 { q.clone() } else { q.conj() };
                        Q::from_integer(split_branch_value(*p, &q)?)
                    }
                    _ => Q::new(vp_raw(*p, &q.norm()).expect("nonzero norm"), 2),
                };
                Ok(Some(DivElem::scalar(v)))
            }
        }
    }

    pub fn eval(&self, x: &Elem) -> Result<MonoidValue> {
        Ok(match self.value(x)? {
            Some(d) => MonoidValue::Div(d),
            None => MonoidValue::Infinity,
        })
    }
}

/// `v_p(x)` as a rank-1 value, `None` for `∞`.
pub fn vp(p: i64, x: &Rat) -> Result<Option<DivElem>> {
    require_prime(p)?;
    Ok(vp_raw(p, x).map(DivElem::from_int))
}

fn composite_value(p: i64, f: &RatFn) -> Option<DivElem> {
    let (num_k, num_c) = f.num().lowest_term()?;
    let (den_k, den_c) = f.den().lowest_term().expect("nonzero denominator");
    let c = num_c / den_c;
    let t_order = num_k as i64 - den_k as i64;
    Some(DivElem::from_ints(&[t_order, vp_raw(p, &c).expect("nonzero coefficient")]))
}

/// The rank-2 valuation `f ↦ (ord_t f, v_p(c))` on ℚ(t).
pub fn composite_valuation(p: i64, f: &RatFn) -> Result<Option<DivElem>> {
    require_prime(p)?;
    Ok(composite_value(p, f))
}

fn legendre_is_residue(d: &BigInt, p: &BigInt) -> bool {
    let d = d.mod_floor(p);
    if d.is_zero() {
        return true;
    }
    let e: BigInt = (p - 1u32) / 2u32;
    d.modpow(&e, p).is_one()
}

/// Splitting type of `p` in ℚ(√d), `p` odd or `p | d`.
pub fn classify_prime(p: i64, d: i64) -> Result<Splitting> {
    require_prime(p)?;
    if !is_squarefree(d) {
        return Err(Error::NotSquarefree(d));
    }
    if d % p == 0 {
        return Ok(Splitting::Ramified);
    }
    if p == 2 {
        return Err(Error::Unsupported(format!(
            "splitting of 2 in ℚ(√{d}) with 2 ∤ d"
        )));
    }
    if legendre_is_residue(&BigInt::from(d), &BigInt::from(p)) {
        Ok(Splitting::Split)
    } else {
        Ok(Splitting::Inert)
    }
}

/// Square root of `d` modulo `p^m` lifted from the smallest root in `[1, p-1]`.
pub fn hensel_sqrt(d: i64, p: i64, m: u32) -> Result<BigInt> {
    require_prime(p)?;
    if p == 2 {
        return Err(Error::Unsupported("Hensel square roots modulo powers of 2".into()));
    }
    if m == 0 {
        return Err(Error::InvalidArgument("precision must be at least 1".into()));
    }
    let pb = BigInt::from(p);
    let db = BigInt::from(d);
    if db.mod_floor(&pb).is_zero() || !legendre_is_residue(&db, &pb) {
        return Err(Error::NotAResidue(format!("{d} mod {p}")));
    }
    let base = (1..p)
        .find(|r| (r * r - d).rem_euclid(p) == 0)
        .expect("a residue has a root");
    let mut r = BigInt::from(base);
    let mut k = 1u32;
    while k < m {
        k = (2 * k).min(m);
        let modulus = Pow::pow(&pb, k);
        let f = (&r * &r - &db).mod_floor(&modulus);
        let df = (BigInt::from(2) * &r).mod_floor(&modulus);
        let inv = crate::fields::mod_inverse(&df, &modulus).expect("2r is a unit");
        r = (&r - f * inv).mod_floor(&modulus);
    }
    Ok(r.mod_floor(&Pow::pow(&pb, m)))
}

/// `v_p(a + b·r)` where `r` is the chosen `p`-adic square root of `d`.
fn split_branch_value(p: i64, x: &QuadElem) -> Result<i64> {
    if x.b.is_zero() {
        return Ok(vp_raw(p, &x.a).expect("nonzero"));
    }
    let s = [vp_raw(p, &x.a), vp_raw(p, &x.b)].into_iter().flatten().min().unwrap();
    let unit = pow_rat(p, -s);
    let a = &x.a * &unit;
    let b = &x.b * &unit;
    let scaled = QuadElem::new(a.clone(), b.clone(), x.d);
    let norm_v = vp_raw(p, &scaled.norm()).expect("nonzero norm");
    let mut m = (norm_v + 2).max(1) as u32;
    let pb = BigInt::from(p);
    loop {
        let r = hensel_sqrt(x.d, p, m)?;
        let modulus: BigInt = Pow::pow(&pb, m);
        let z = (residue(&a, &modulus)? + residue(&b, &modulus)? * r).mod_floor(&modulus);
        if !z.is_zero() {
            return Ok(s + crate::fields::int_valuation(&pb, &z));
        }
        m *= 2;
    }
}

fn pow_rat(p: i64, e: i64) -> Rat {
    let base = Rat::from_integer(BigInt::from(p));
    if e >= 0 {
        Pow::pow(&base, e as u32)
    } else {
        Rat::one() / Pow::pow(&base, (-e) as u32)
    }
}

/// `p^e` as an exact rational.
pub fn prime_power(p: i64, e: i64) -> Rat {
    pow_rat(p, e)
}

/// All extensions of `v_p` from ℚ to ℚ(√d).
pub fn extend_valuation(p: i64, d: i64) -> Result<Vec<Valuation>> {
    let splitting = classify_prime(p, d)?;
    let branches: &[u8] = if splitting == Splitting::Split { &[0, 1] } else { &[0] };
    Ok(branches
        .iter()
        .map(|&branch| Valuation {
            kind: ValuationKind::QuadExtension { p, d, splitting, branch },
        })
        .collect())
}

/// Values of a DivElem as a single rational; helper for rank-1 codomains.
pub fn rank_one(v: &DivElem) -> Ratio<i64> {
    v.coords()[0]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::{int, rat, Poly};

    fn quad(a: i64, b: i64, d: i64) -> Elem {
        Elem::Quad(QuadElem::from_ints(a, b, d))
    }

    fn val(v: &Valuation, x: &Elem) -> Option<Q> {
        v.value(x).unwrap().map(|d| d.coords()[0])
    }

    #[test]
    fn vp_examples() {
        assert_eq!(vp(5, &int(50)).unwrap(), Some(DivElem::from_int(2)));
        assert_eq!(vp(2, &rat(3, 8)).unwrap(), Some(DivElem::from_int(-3)));
        assert_eq!(vp(3, &int(0)).unwrap(), None);
        assert_eq!(vp(4, &int(2)), Err(Error::NotPrime(4)));
    }

    #[test]
    fn composite_examples() {
        let f = RatFn::monomial(int(3), 2);
        assert_eq!(composite_valuation(3, &f).unwrap(), Some(DivElem::from_ints(&[2, 1])));
        let g = RatFn::monomial(int(1), -1);
        assert_eq!(composite_valuation(3, &g).unwrap(), Some(DivElem::from_ints(&[-1, 0])));
        assert_eq!(composite_valuation(3, &RatFn::zero()).unwrap(), None);
        // (9 + t) / (2t^3): lowest terms 9 and 2
        let h = RatFn::new(Poly::new(vec![int(9), int(1)]), Poly::monomial(int(2), 3)).unwrap();
        assert_eq!(composite_valuation(3, &h).unwrap(), Some(DivElem::from_ints(&[-3, 2])));
    }

    #[test]
    fn classification() {
        assert_eq!(classify_prime(5, -1).unwrap(), Splitting::Split);
        assert_eq!(classify_prime(3, -1).unwrap(), Splitting::Inert);
        assert_eq!(classify_prime(5, 5).unwrap(), Splitting::Ramified);
        assert_eq!(classify_prime(3, 5).unwrap(), Splitting::Inert);
        assert_eq!(classify_prime(2, -2).unwrap(), Splitting::Ramified);
        assert!(matches!(classify_prime(2, -1), Err(Error::Unsupported(_))));
        assert_eq!(classify_prime(5, 12), Err(Error::NotSquarefree(12)));
    }

    #[test]
    fn hensel_examples() {
        assert_eq!(hensel_sqrt(-1, 5, 1).unwrap(), BigInt::from(2));
        assert_eq!(hensel_sqrt(-1, 5, 2).unwrap(), BigInt::from(7));
        assert_eq!(hensel_sqrt(2, 7, 1).unwrap(), BigInt::from(3));
        assert!(matches!(hensel_sqrt(-1, 3, 2), Err(Error::NotAResidue(_))));
        for m in 1..12 {
            let r = hensel_sqrt(-1, 5, m).unwrap();
            let modulus = BigInt::from(5).pow(m);
            assert!(((&r * &r) + 1u32).mod_floor(&modulus).is_zero());
        }
    }

    #[test]
    fn split_extensions() {
        let us = extend_valuation(5, -1).unwrap();
        assert_eq!(us.len(), 2);
        let x = quad(2, 1, -1);
        let (a, b) = (val(&us[0], &x).unwrap(), val(&us[1], &x).unwrap());
        assert_eq!(a + b, Q::from_integer(1));
        let mut pair = [a, b];
        pair.sort();
        assert_eq!(pair, [Q::from_integer(0), Q::from_integer(1)]);
        assert_eq!(val(&us[0], &quad(5, 0, -1)), Some(Q::from_integer(1)));
        assert_eq!(us[0].value(&quad(0, 0, -1)).unwrap(), None);
    }

    #[test]
    fn inert_and_ramified_extensions() {
        let inert = extend_valuation(3, -1).unwrap();
        assert_eq!(inert.len(), 1);
        assert_eq!(val(&inert[0], &quad(1, 1, -1)), Some(Q::from_integer(0)));
        let ram = extend_valuation(5, 5).unwrap();
        assert_eq!(ram.len(), 1);
        assert_eq!(val(&ram[0], &quad(0, 1, 5)), Some(Q::new(1, 2)));
    }

    #[test]
    fn high_valuation_needs_precision_escalation() {
        // 7 ≡ √-1 mod 25; a + b·r with large p-power content
        let us = extend_valuation(5, -1).unwrap();
        let r = hensel_sqrt(-1, 5, 12).unwrap();
        let r: i64 = r.try_into().unwrap();
        let x = Elem::Quad(QuadElem::new(int(-r), int(1), -1));
        let u1 = val(&us[0], &x).unwrap();
        let u2 = val(&us[1], &x).unwrap();
        let norm = vp_raw(5, &x.as_quad().unwrap().norm()).unwrap();
        assert_eq!(u1 + u2, Q::from_integer(norm));
        assert!(u1 >= Q::from_integer(12) || u2 >= Q::from_integer(12));
    }

    #[test]
    fn wrong_domain_is_rejected() {
        let v = Valuation::p_adic(5).unwrap();
        assert!(v.value(&quad(1, 1, -1)).is_err());
        let u = &extend_valuation(5, -1).unwrap()[0];
        assert!(u.value(&quad(1, 1, 5)).is_err());
    }
}
