//! Totally ordered abelian groups and monoids used as value sets.
//!
//! `GroupElem` is an element of ℤᵏ with the left-to-right lexicographic
//! order, `DivElem` an element of its divisible hull ℚᵏ, and `MaxElem` /
//! `LexProductElem` realize the max-monoids ℕ∪{0} and {α₀ < α₁ < ...}
//! together with their lexicographic products with ℤ.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Common surface of the ordered monoids that the law checkers run on.
pub trait OrderedMonoid: Clone + fmt::Debug + PartialEq {
    /// The identity of the monoid this element lives in.
    fn identity_like(&self) -> Self;

    fn try_add(&self, other: &Self) -> Result<Self>;

    fn try_cmp(&self, other: &Self) -> Result<Ordering>;

    /// `n·self` for `n ≥ 1`.
    fn times(&self, n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("scalar multiple by 0".into()));
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.try_add(self)?;
        }
        Ok(acc)
    }
}

fn check_rank(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::RankMismatch { left, right })
    }
}

/// Element of ℤᵏ under the lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupElem {
    coords: Vec<i64>,
}

impl GroupElem {
    pub fn new(coords: Vec<i64>) -> Self {
        GroupElem { coords }
    }

    pub fn zero(rank: usize) -> Self {
        GroupElem { coords: vec![0; rank] }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn lex_compare(&self, other: &Self) -> Result<Ordering> {
        check_rank(self.rank(), other.rank())?;
        Ok(self.coords.cmp(&other.coords))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_rank(self.rank(), other.rank())?;
        Ok(GroupElem::new(
            self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        GroupElem::new(self.coords.iter().map(|c| -c).collect())
    }

    pub fn scalar_mul(&self, n: i64) -> Self {
        GroupElem::new(self.coords.iter().map(|c| n * c).collect())
    }

    /// Zeroes the last `level` coordinates, i.e. reduces modulo the isolated
    /// subgroup of that level.
    pub fn zero_tail(&self, level: usize) -> Self {
        let keep = self.rank().saturating_sub(level);
        let mut coords = self.coords.clone();
        for c in &mut coords[keep..] {
            *c = 0;
        }
        GroupElem::new(coords)
    }

    /// The first `len` coordinates, an element of the quotient group.
    pub fn prefix(&self, len: usize) -> Self {
        GroupElem::new(self.coords[..len.min(self.rank())].to_vec())
    }
}

impl PartialOrd for GroupElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.lex_compare(other).ok()
    }
}

impl fmt::Debug for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rank() == 1 {
            return write!(f, "{}", self.coords[0]);
        }
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl OrderedMonoid for GroupElem {
    fn identity_like(&self) -> Self {
        GroupElem::zero(self.rank())
    }

    fn try_add(&self, other: &Self) -> Result<Self> {
        self.add(other)
    }

    fn try_cmp(&self, other: &Self) -> Result<Ordering> {
        self.lex_compare(other)
    }

    fn times(&self, n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("scalar multiple by 0".into()));
        }
        Ok(self.scalar_mul(n as i64))
    }
}

pub type Q = Ratio<i64>;

/// Element of the divisible hull ℚᵏ of ℤᵏ; the class of (γ, n) is stored
/// as γ/n coordinatewise.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DivElem {
    coords: Vec<Q>,
}

impl DivElem {
    pub fn new(coords: Vec<Q>) -> Self {
        DivElem { coords }
    }

    pub fn zero(rank: usize) -> Self {
        DivElem { coords: vec![Q::zero(); rank] }
    }

    pub fn from_int(value: i64) -> Self {
        DivElem::new(vec![Q::from_integer(value)])
    }

    pub fn from_ints(values: &[i64]) -> Self {
        DivElem::new(values.iter().map(|&v| Q::from_integer(v)).collect())
    }

    pub fn scalar(value: Q) -> Self {
        DivElem::new(vec![value])
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Q] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    /// Sign against zero: `Greater` for positive elements.
    pub fn signum(&self) -> Ordering {
        for c in &self.coords {
            if c.is_positive() {
                return Ordering::Greater;
            }
            if c.is_negative() {
                return Ordering::Less;
            }
        }
        Ordering::Equal
    }

    pub fn lex_compare(&self, other: &Self) -> Result<Ordering> {
        check_rank(self.rank(), other.rank())?;
        Ok(self.coords.cmp(&other.coords))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_rank(self.rank(), other.rank())?;
        Ok(DivElem::new(
            self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        DivElem::new(self.coords.iter().map(|c| -c).collect())
    }

    pub fn scalar_mul(&self, n: Q) -> Self {
        DivElem::new(self.coords.iter().map(|c| c * n).collect())
    }

    /// Least `n ≥ 1` with `n·self` integral.
    pub fn torsion_witness(&self) -> u64 {
        self.coords
            .iter()
            .fold(1i64, |acc, c| acc.lcm(c.denom()))
            .unsigned_abs()
    }

    /// The integral vector `n·self` for `n` = `torsion_witness()`.
    pub fn cleared(&self) -> (u64, GroupElem) {
        let n = self.torsion_witness();
        let g = self
            .coords
            .iter()
            .map(|c| (c * Q::from_integer(n as i64)).to_integer())
            .collect();
        (n, GroupElem::new(g))
    }

    pub fn to_group(&self) -> Option<GroupElem> {
        self.is_integral()
            .then(|| GroupElem::new(self.coords.iter().map(|c| c.to_integer()).collect()))
    }

    pub fn prefix(&self, len: usize) -> Self {
        DivElem::new(self.coords[..len.min(self.rank())].to_vec())
    }

    /// Componentwise fractional part; two elements lie in the same coset of
    /// ℤᵏ exactly when their fractional parts agree.
    pub fn fractional_part(&self) -> DivElem {
        DivElem::new(self.coords.iter().map(|c| c - c.floor()).collect())
    }
}

impl From<&GroupElem> for DivElem {
    fn from(g: &GroupElem) -> Self {
        DivElem::new(g.coords().iter().map(|&c| Q::from_integer(c)).collect())
    }
}

impl PartialOrd for DivElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.lex_compare(other).ok()
    }
}

impl fmt::Debug for DivElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for DivElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rank() == 1 {
            return write!(f, "{}", self.coords[0]);
        }
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl OrderedMonoid for DivElem {
    fn identity_like(&self) -> Self {
        DivElem::zero(self.rank())
    }

    fn try_add(&self, other: &Self) -> Result<Self> {
        self.add(other)
    }

    fn try_cmp(&self, other: &Self) -> Result<Ordering> {
        self.lex_compare(other)
    }

    fn times(&self, n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("scalar multiple by 0".into()));
        }
        Ok(self.scalar_mul(Q::from_integer(n as i64)))
    }
}

/// Element of a max-monoid: either ℕ∪{0} (`chain_len == None`) or the
/// finite chain α₀ < α₁ < ... < α_{len-1}. Addition is the maximum.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct MaxElem {
    level: u32,
    chain_len: Option<u32>,
}

impl MaxElem {
    pub fn nat(level: u32) -> Self {
        MaxElem { level, chain_len: None }
    }

    pub fn chain(level: u32, len: u32) -> Result<Self> {
        if level >= len {
            return Err(Error::InvalidArgument(format!(
                "α{level} is not in a chain of length {len}"
            )));
        }
        Ok(MaxElem { level, chain_len: Some(len) })
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn chain_len(&self) -> Option<u32> {
        self.chain_len
    }

    pub fn is_identity(&self) -> bool {
        self.level == 0
    }

    fn check_kind(&self, other: &Self) -> Result<()> {
        if self.chain_len == other.chain_len {
            Ok(())
        } else {
            Err(Error::MonoidMismatch { left: self.kind_name(), right: other.kind_name() })
        }
    }

    fn kind_name(&self) -> &'static str {
        if self.chain_len.is_some() {
            "finite max-chain"
        } else {
            "ℕ∪{0} under max"
        }
    }
}

impl fmt::Debug for MaxElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MaxElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.chain_len {
            Some(_) => write!(f, "α{}", self.level),
            None => write!(f, "{}", self.level),
        }
    }
}

impl OrderedMonoid for MaxElem {
    fn identity_like(&self) -> Self {
        MaxElem { level: 0, chain_len: self.chain_len }
    }

    fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_kind(other)?;
        Ok(MaxElem { level: self.level.max(other.level), chain_len: self.chain_len })
    }

    fn try_cmp(&self, other: &Self) -> Result<Ordering> {
        self.check_kind(other)?;
        Ok(self.level.cmp(&other.level))
    }

    fn times(&self, n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("scalar multiple by 0".into()));
        }
        Ok(*self)
    }
}

/// Element of ℤ × (max-monoid) with componentwise addition and the left to
/// right lexicographic order.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct LexProductElem {
    pub g: i64,
    pub m: MaxElem,
}

impl LexProductElem {
    pub fn new(g: i64, m: MaxElem) -> Self {
        LexProductElem { g, m }
    }

    pub fn lex_compare(&self, other: &Self) -> Result<Ordering> {
        Ok(self.g.cmp(&other.g).then(self.m.try_cmp(&other.m)?))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(LexProductElem { g: self.g + other.g, m: self.m.try_add(&other.m)? })
    }

    pub fn scalar_mul(&self, n: u64) -> Result<Self> {
        Ok(LexProductElem { g: self.g * n as i64, m: self.m.times(n)? })
    }

    /// Image of `z ∈ ℤ` under `z ↦ (z, identity)`.
    pub fn embed(g: i64, like: &MaxElem) -> Self {
        LexProductElem { g, m: like.identity_like() }
    }
}

impl fmt::Debug for LexProductElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LexProductElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.g, self.m)
    }
}

impl OrderedMonoid for LexProductElem {
    fn identity_like(&self) -> Self {
        LexProductElem::embed(0, &self.m)
    }

    fn try_add(&self, other: &Self) -> Result<Self> {
        self.add(other)
    }

    fn try_cmp(&self, other: &Self) -> Result<Ordering> {
        self.lex_compare(other)
    }

    fn times(&self, n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("scalar multiple by 0".into()));
        }
        self.scalar_mul(n)
    }
}

/// Verdict of a law checker over a finite sample.
#[derive(Debug, Clone, PartialEq)]
pub struct LawVerdict<M> {
    pub holds: bool,
    pub counterexample: Option<(M, M)>,
}

impl<M> LawVerdict<M> {
    fn pass() -> Self {
        LawVerdict { holds: true, counterexample: None }
    }

    fn fail(a: M, b: M) -> Self {
        LawVerdict { holds: false, counterexample: Some((a, b)) }
    }
}

/// Weak cancellation (`a + b = a ⇒ b = 0`) over all ordered sample pairs.
pub fn is_weakly_cancellative<M: OrderedMonoid>(samples: &[M]) -> Result<LawVerdict<M>> {
    for a in samples {
        for b in samples {
            if a.try_add(b)? == *a && *b != b.identity_like() {
                return Ok(LawVerdict::fail(a.clone(), b.clone()));
            }
        }
    }
    Ok(LawVerdict::pass())
}

/// ℕ-strict order (`a < b ⇒ n·a < n·b`) for all sample pairs and `n ≤ n_max`.
pub fn is_n_strictly_ordered<M: OrderedMonoid>(
    samples: &[M],
    n_max: u64,
) -> Result<LawVerdict<M>> {
    for a in samples {
        for b in samples {
            if a.try_cmp(b)? != Ordering::Less {
                continue;
            }
            for n in 1..=n_max {
                if a.times(n)?.try_cmp(&b.times(n)?)? != Ordering::Less {
                    return Ok(LawVerdict::fail(a.clone(), b.clone()));
                }
            }
        }
    }
    Ok(LawVerdict::pass())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(c: &[i64]) -> GroupElem {
        GroupElem::new(c.to_vec())
    }

    fn q(n: i64, d: i64) -> Q {
        Q::new(n, d)
    }

    #[test]
    fn lex_compare_examples() {
        assert_eq!(g(&[1, 0]).lex_compare(&g(&[0, 9])).unwrap(), Ordering::Greater);
        assert_eq!(g(&[0, 0]).lex_compare(&g(&[0, 0])).unwrap(), Ordering::Equal);
        assert_eq!(g(&[-1, 5]).lex_compare(&g(&[-1, 6])).unwrap(), Ordering::Less);
    }

    #[test]
    fn rank_mismatch_is_an_error() {
        assert_eq!(
            g(&[1]).lex_compare(&g(&[1, 2])),
            Err(Error::RankMismatch { left: 1, right: 2 })
        );
        assert!(g(&[1]).add(&g(&[1, 2])).is_err());
        assert_eq!(g(&[1]).partial_cmp(&g(&[1, 2])), None);
    }

    #[test]
    fn add_neg_scalar() {
        assert_eq!(g(&[1, 2]).add(&g(&[3, -1])).unwrap(), g(&[4, 1]));
        assert_eq!(g(&[1, -2]).neg(), g(&[-1, 2]));
        assert_eq!(g(&[1, -2]).times(3).unwrap(), g(&[3, -6]));
    }

    #[test]
    fn max_monoid_addition() {
        assert_eq!(MaxElem::nat(3).try_add(&MaxElem::nat(5)).unwrap(), MaxElem::nat(5));
        let a1 = MaxElem::chain(1, 2).unwrap();
        let x = LexProductElem::new(0, a1);
        assert_eq!(x.times(3).unwrap(), x);
        assert!(MaxElem::chain(2, 2).is_err());
        assert!(MaxElem::nat(1).try_add(&a1).is_err());
    }

    #[test]
    fn weak_cancellation() {
        let samples: Vec<GroupElem> =
            (-2..=2).flat_map(|a| (-2..=2).map(move |b| g(&[a, b]))).collect();
        assert!(is_weakly_cancellative(&samples).unwrap().holds);

        let lex = vec![
            LexProductElem::new(0, MaxElem::nat(1)),
            LexProductElem::new(0, MaxElem::nat(0)),
        ];
        let verdict = is_weakly_cancellative(&lex).unwrap();
        assert!(!verdict.holds);
        let (a, b) = verdict.counterexample.unwrap();
        assert_eq!(a.add(&b).unwrap(), a);
        assert_ne!(b, b.identity_like());

        let chain = vec![MaxElem::chain(0, 2).unwrap(), MaxElem::chain(1, 2).unwrap()];
        assert!(!is_weakly_cancellative(&chain).unwrap().holds);
    }

    #[test]
    fn n_strict_order() {
        let samples: Vec<GroupElem> = (-3..=3).map(|a| g(&[a, -a])).collect();
        assert!(is_n_strictly_ordered(&samples, 6).unwrap().holds);
        let nats: Vec<MaxElem> = (0..5).map(MaxElem::nat).collect();
        assert!(is_n_strictly_ordered(&nats, 6).unwrap().holds);
    }

    #[test]
    fn torsion_witness_examples() {
        assert_eq!(DivElem::new(vec![q(1, 2), q(3, 1)]).torsion_witness(), 2);
        assert_eq!(DivElem::from_ints(&[2, -5]).torsion_witness(), 1);
        assert_eq!(DivElem::new(vec![q(1, 3), q(1, 4)]).torsion_witness(), 12);
        let (n, cleared) = DivElem::new(vec![q(1, 3), q(-1, 4)]).cleared();
        assert_eq!((n, cleared), (12, g(&[4, -3])));
    }

    #[test]
    fn div_signum_and_fraction() {
        assert_eq!(DivElem::new(vec![q(0, 1), q(-1, 2)]).signum(), Ordering::Less);
        assert_eq!(
            DivElem::new(vec![q(-1, 2)]).fractional_part(),
            DivElem::new(vec![q(1, 2)])
        );
    }
}
