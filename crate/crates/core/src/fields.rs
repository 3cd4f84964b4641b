//! Exact base fields: ℚ, ℚ(√d) and ℚ(t), plus the `Elem` wrapper the
//! quasi-valuation evaluators consume.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn is_prime(p: i64) -> bool {
    if p < 2 {
        return false;
    }
    let mut i = 2;
    while i * i <= p {
        if p % i == 0 {
            return false;
        }
        i += 1;
    }
    true
}

pub fn require_prime(p: i64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

pub fn is_squarefree(d: i64) -> bool {
    if d == 0 || d == 1 {
        return false;
    }
    let n = d.unsigned_abs();
    let mut i = 2u64;
    while i * i <= n {
        if n % (i * i) == 0 {
            return false;
        }
        i += 1;
    }
    true
}

/// Multiplicity of `p` in a nonzero integer.
pub fn int_valuation(p: &BigInt, n: &BigInt) -> i64 {
    debug_assert!(!n.is_zero());
    let mut n = n.clone();
    let mut count = 0;
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return count;
        }
        n = q;
        count += 1;
    }
}

/// `v_p(x)`, `None` standing for `v_p(0) = ∞`.
pub fn vp_raw(p: i64, x: &Rat) -> Option<i64> {
    if x.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    Some(int_valuation(&p, x.numer()) - int_valuation(&p, x.denom()))
}

/// Residue of a `p`-integral rational modulo `modulus` (a power of `p`).
pub fn residue(x: &Rat, modulus: &BigInt) -> Result<BigInt> {
    let den = x.denom().mod_floor(modulus);
    let inv = mod_inverse(&den, modulus).ok_or_else(|| {
        Error::InvalidArgument(format!("{x} has a denominator not invertible mod {modulus}"))
    })?;
    Ok((x.numer() * inv).mod_floor(modulus))
}

pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

/// Element `a + b√d` of ℚ(√d).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadElem {
    pub a: Rat,
    pub b: Rat,
    pub d: i64,
}

impl QuadElem {
    pub fn new(a: Rat, b: Rat, d: i64) -> Self {
        QuadElem { a, b, d }
    }

    pub fn from_ints(a: i64, b: i64, d: i64) -> Self {
        QuadElem::new(int(a), int(b), d)
    }

    pub fn scalar(a: Rat, d: i64) -> Self {
        QuadElem::new(a, Rat::zero(), d)
    }

    /// `√d` itself.
    pub fn root(d: i64) -> Self {
        QuadElem::from_ints(0, 1, d)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn conj(&self) -> Self {
        QuadElem::new(self.a.clone(), -self.b.clone(), self.d)
    }

    pub fn norm(&self) -> Rat {
        &self.a * &self.a - int(self.d) * &self.b * &self.b
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        let c = self.conj();
        Some(QuadElem::new(c.a / &n, c.b / n, self.d))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        QuadElem::new(&self.a * c, &self.b * c, self.d)
    }

    fn same_field(&self, other: &Self) {
        assert_eq!(self.d, other.d, "elements of different quadratic fields");
    }
}

impl Add for &QuadElem {
    type Output = QuadElem;
    fn add(self, rhs: &QuadElem) -> QuadElem {
        self.same_field(rhs);
        QuadElem::new(&self.a + &rhs.a, &self.b + &rhs.b, self.d)
    }
}

impl Sub for &QuadElem {
    type Output = QuadElem;
    fn sub(self, rhs: &QuadElem) -> QuadElem {
        self.same_field(rhs);
        QuadElem::new(&self.a - &rhs.a, &self.b - &rhs.b, self.d)
    }
}

impl Mul for &QuadElem {
    type Output = QuadElem;
    fn mul(self, rhs: &QuadElem) -> QuadElem {
        self.same_field(rhs);
        let a = &self.a * &rhs.a + int(self.d) * &self.b * &rhs.b;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        QuadElem::new(a, b, self.d)
    }
}

impl Neg for &QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        QuadElem::new(-self.a.clone(), -self.b.clone(), self.d)
    }
}

impl fmt::Debug for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let unit = if self.d == -1 { "i".to_string() } else { format!("√{}", self.d) };
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if !self.a.is_zero() {
            write!(f, "{}", self.a)?;
            if self.b.is_positive() {
                write!(f, "+")?;
            }
        }
        if self.b.is_one() {
            write!(f, "{unit}")
        } else if (-self.b.clone()).is_one() {
            write!(f, "-{unit}")
        } else {
            write!(f, "{}*{unit}", self.b)
        }
    }
}

/// Dense polynomial over ℚ, coefficients from degree 0 upward, no trailing
/// zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    /// `c·t^k`.
    pub fn monomial(c: Rat, k: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); k];
        coeffs.push(c);
        Poly::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    /// Index and coefficient of the lowest nonzero term.
    pub fn lowest_term(&self) -> Option<(usize, &Rat)> {
        self.coeffs.iter().enumerate().find(|(_, c)| !c.is_zero())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Poly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = Rat::zero();
        Poly::new(
            (0..n)
                .map(|i| {
                    self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero)
                })
                .collect(),
        )
    }

    pub fn neg(&self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let top = rem.len() - 1;
            let c = &rem[top] / &lead;
            let shift = top - dd;
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[shift + j] -= &c * dc;
            }
            quot[shift] = c;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some(l) => self.scale(&(Rat::one() / l)),
            None => Poly::zero(),
        }
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first && c.is_positive() {
                write!(f, "+")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*t")?,
                _ => write!(f, "{c}*t^{k}")?,
            }
        }
        Ok(())
    }
}

/// Element of ℚ(t) as a reduced fraction with monic denominator.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFn {
    num: Poly,
    den: Poly,
}

impl RatFn {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        if num.is_zero() {
            return Ok(RatFn::zero());
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lead = den.leading().unwrap().clone();
        Ok(RatFn { num: num.scale(&(Rat::one() / &lead)), den: den.monic() })
    }

    pub fn zero() -> Self {
        RatFn { num: Poly::zero(), den: Poly::constant(Rat::one()) }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFn::new(p, Poly::constant(Rat::one())).expect("constant denominator")
    }

    pub fn constant(c: Rat) -> Self {
        RatFn::from_poly(Poly::constant(c))
    }

    /// `c·t^k` for any integer `k`.
    pub fn monomial(c: Rat, k: i64) -> Self {
        if k >= 0 {
            RatFn::from_poly(Poly::monomial(c, k as usize))
        } else {
            RatFn::new(Poly::constant(c), Poly::monomial(Rat::one(), (-k) as usize))
                .expect("nonzero denominator")
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &RatFn) -> RatFn {
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        RatFn::new(num, self.den.mul(&other.den)).expect("nonzero denominators")
    }

    pub fn neg(&self) -> RatFn {
        RatFn { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &RatFn) -> RatFn {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatFn) -> RatFn {
        RatFn::new(self.num.mul(&other.num), self.den.mul(&other.den))
            .expect("nonzero denominators")
    }

    pub fn inverse(&self) -> Option<RatFn> {
        if self.is_zero() {
            None
        } else {
            RatFn::new(self.den.clone(), self.num.clone()).ok()
        }
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// A ring element handed to a quasi-valuation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Elem {
    Rat(Rat),
    Quad(QuadElem),
    RatFn(RatFn),
}

impl Elem {
    pub fn is_zero(&self) -> bool {
        match self {
            Elem::Rat(x) => x.is_zero(),
            Elem::Quad(x) => x.is_zero(),
            Elem::RatFn(x) => x.is_zero(),
        }
    }

    pub fn zero_like(&self) -> Elem {
        match self {
            Elem::Rat(_) => Elem::Rat(Rat::zero()),
            Elem::Quad(x) => Elem::Quad(QuadElem::from_ints(0, 0, x.d)),
            Elem::RatFn(_) => Elem::RatFn(RatFn::zero()),
        }
    }

    pub fn one_like(&self) -> Elem {
        match self {
            Elem::Rat(_) => Elem::Rat(Rat::one()),
            Elem::Quad(x) => Elem::Quad(QuadElem::from_ints(1, 0, x.d)),
            Elem::RatFn(_) => Elem::RatFn(RatFn::constant(Rat::one())),
        }
    }

    /// Embeds a rational in the same ring.
    pub fn embed_rat(&self, c: &Rat) -> Elem {
        match self {
            Elem::Rat(_) => Elem::Rat(c.clone()),
            Elem::Quad(x) => Elem::Quad(QuadElem::scalar(c.clone(), x.d)),
            Elem::RatFn(_) => Elem::RatFn(RatFn::constant(c.clone())),
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Elem::Rat(_) => "ℚ",
            Elem::Quad(_) => "ℚ(√d)",
            Elem::RatFn(_) => "ℚ(t)",
        }
    }

    pub fn try_add(&self, other: &Elem) -> Result<Elem> {
        match (self, other) {
            (Elem::Rat(a), Elem::Rat(b)) => Ok(Elem::Rat(a + b)),
            (Elem::Quad(a), Elem::Quad(b)) if a.d == b.d => Ok(Elem::Quad(a + b)),
            (Elem::RatFn(a), Elem::RatFn(b)) => Ok(Elem::RatFn(a.add(b))),
            _ => Err(Error::MonoidMismatch { left: self.kind(), right: other.kind() }),
        }
    }

    pub fn try_mul(&self, other: &Elem) -> Result<Elem> {
        match (self, other) {
            (Elem::Rat(a), Elem::Rat(b)) => Ok(Elem::Rat(a * b)),
            (Elem::Quad(a), Elem::Quad(b)) if a.d == b.d => Ok(Elem::Quad(a * b)),
            (Elem::RatFn(a), Elem::RatFn(b)) => Ok(Elem::RatFn(a.mul(b))),
            _ => Err(Error::MonoidMismatch { left: self.kind(), right: other.kind() }),
        }
    }

    pub fn neg(&self) -> Elem {
        match self {
            Elem::Rat(a) => Elem::Rat(-a.clone()),
            Elem::Quad(a) => Elem::Quad(-a),
            Elem::RatFn(a) => Elem::RatFn(a.neg()),
        }
    }

    pub fn pow(&self, n: u32) -> Elem {
        let mut acc = self.one_like();
        for _ in 0..n {
            acc = acc.try_mul(self).expect("same ring");
        }
        acc
    }

    pub fn inverse(&self) -> Option<Elem> {
        match self {
            Elem::Rat(a) if !a.is_zero() => Some(Elem::Rat(a.recip())),
            Elem::Quad(a) => a.inverse().map(Elem::Quad),
            Elem::RatFn(a) => a.inverse().map(Elem::RatFn),
            _ => None,
        }
    }

    pub fn as_rat(&self) -> Option<&Rat> {
        match self {
            Elem::Rat(x) => Some(x),
            _ => None,
        }
    }

    pub fn as_quad(&self) -> Option<&QuadElem> {
        match self {
            Elem::Quad(x) => Some(x),
            _ => None,
        }
    }

    pub fn as_ratfn(&self) -> Option<&RatFn> {
        match self {
            Elem::RatFn(x) => Some(x),
            _ => None,
        }
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Rat(x) => write!(f, "{x}"),
            Elem::Quad(x) => write!(f, "{x}"),
            Elem::RatFn(x) => write!(f, "{x}"),
        }
    }
}

impl From<Rat> for Elem {
    fn from(x: Rat) -> Self {
        Elem::Rat(x)
    }
}

impl From<QuadElem> for Elem {
    fn from(x: QuadElem) -> Self {
        Elem::Quad(x)
    }
}

impl From<RatFn> for Elem {
    fn from(x: RatFn) -> Self {
        Elem::RatFn(x)
    }
}
