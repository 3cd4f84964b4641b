//! The cut monoid of ℤᵏ-lex in canonical finite form.
//!
//! Every cut handled here is ∅, Γ, or has left set `(-∞, γ] + H^{≥0}` for an
//! isolated subgroup `H`. That class contains the principal cuts `γ⁺`, is
//! closed under left-sum and scaling, and holds every value a filter
//! quasi-valuation produces on the supported algebras.
//!
//! With `H` of level `j` (the last `j` coordinates), `δ` lies in the left
//! set of `CutOf(γ, H)` iff the first `k - j` coordinates of `δ` are
//! lexicographically at most those of `γ`. Canonical form zeroes the last
//! `j` coordinates of `γ`; level `k` collapses to `PlusInf`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ordered::{GroupElem, OrderedMonoid};

/// Isolated subgroup `H_j` of ℤᵏ-lex: elements whose first `k - j`
/// coordinates vanish. `j = 0` is `{0}`, `j = k` is the whole group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IsolatedSubgroup {
    rank: usize,
    level: usize,
}

impl IsolatedSubgroup {
    pub fn new(rank: usize, level: usize) -> Result<Self> {
        if level > rank {
            return Err(Error::InvalidArgument(format!(
                "isolated subgroup level {level} exceeds rank {rank}"
            )));
        }
        Ok(IsolatedSubgroup { rank, level })
    }

    pub fn trivial(rank: usize) -> Self {
        IsolatedSubgroup { rank, level: 0 }
    }

    pub fn whole(rank: usize) -> Self {
        IsolatedSubgroup { rank, level: rank }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn is_trivial(&self) -> bool {
        self.level == 0
    }

    pub fn contains(&self, g: &GroupElem) -> bool {
        g.rank() == self.rank && g.coords()[..self.rank - self.level].iter().all(|&c| c == 0)
    }

    /// The cut `H⁺` with left set `(-∞, 0] ∪ H^{≥0}`.
    pub fn plus(&self) -> Cut {
        Cut::new(GroupElem::zero(self.rank), self.level).expect("level checked on construction")
    }
}

impl fmt::Display for IsolatedSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H{}⊆ℤ^{}", self.level, self.rank)
    }
}

/// All isolated subgroups of ℤᵏ-lex, ascending.
pub fn isolated_subgroups(rank: usize) -> Result<Vec<IsolatedSubgroup>> {
    if rank == 0 {
        return Err(Error::InvalidArgument("rank must be at least 1".into()));
    }
    Ok((0..=rank).map(|level| IsolatedSubgroup { rank, level }).collect())
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Cut {
    /// `(∅, Γ)`.
    MinusInf,
    /// Left set `(-∞, gamma] + H^{≥0}`, `H` of the given level; canonical.
    CutOf { gamma: GroupElem, level: usize },
    /// `(Γ, ∅)`.
    PlusInf,
}

impl Cut {
    /// Canonical cut with left set `(-∞, gamma] + H_level^{≥0}`.
    pub fn new(gamma: GroupElem, level: usize) -> Result<Cut> {
        let rank = gamma.rank();
        if level > rank {
            return Err(Error::InvalidArgument(format!(
                "isolated subgroup level {level} exceeds rank {rank}"
            )));
        }
        if level == rank {
            return Ok(Cut::PlusInf);
        }
        Ok(Cut::CutOf { gamma: gamma.zero_tail(level), level })
    }

    pub fn principal(gamma: GroupElem) -> Cut {
        Cut::new(gamma, 0).expect("level 0 is always valid")
    }

    /// `0⁺` of the cut monoid of ℤᵏ.
    pub fn zero(rank: usize) -> Cut {
        Cut::principal(GroupElem::zero(rank))
    }

    pub fn rank(&self) -> Option<usize> {
        match self {
            Cut::CutOf { gamma, .. } => Some(gamma.rank()),
            _ => None,
        }
    }

    pub fn is_principal(&self) -> bool {
        matches!(self, Cut::CutOf { level: 0, .. })
    }

    pub fn as_principal(&self) -> Option<&GroupElem> {
        match self {
            Cut::CutOf { gamma, level: 0 } => Some(gamma),
            _ => None,
        }
    }

    /// Membership of `delta` in the left set.
    pub fn contains(&self, delta: &GroupElem) -> Result<bool> {
        match self {
            Cut::MinusInf => Ok(false),
            Cut::PlusInf => Ok(true),
            Cut::CutOf { gamma, level } => {
                let keep = gamma.rank() - level;
                Ok(delta.prefix(keep).lex_compare(&gamma.prefix(keep))? != Ordering::Greater)
            }
        }
    }

    pub fn add(&self, other: &Cut) -> Result<Cut> {
        match (self, other) {
            (Cut::MinusInf, Cut::PlusInf) | (Cut::PlusInf, Cut::MinusInf) => Err(
                Error::Undefined("sum of the cuts (∅, Γ) and (Γ, ∅)".into()),
            ),
            (Cut::MinusInf, _) | (_, Cut::MinusInf) => Ok(Cut::MinusInf),
            (Cut::PlusInf, _) | (_, Cut::PlusInf) => Ok(Cut::PlusInf),
            (Cut::CutOf { gamma: g1, level: l1 }, Cut::CutOf { gamma: g2, level: l2 }) => {
                Cut::new(g1.add(g2)?, *l1.max(l2))
            }
        }
    }

    pub fn scalar(&self, n: u64) -> Result<Cut> {
        if n == 0 {
            return Err(Error::InvalidArgument("scalar multiple of a cut by 0".into()));
        }
        match self {
            Cut::CutOf { gamma, level } => Cut::new(gamma.scalar_mul(n as i64), *level),
            other => Ok(other.clone()),
        }
    }

    /// Left-set inclusion order.
    pub fn cmp_cut(&self, other: &Cut) -> Result<Ordering> {
        match (self, other) {
            (Cut::MinusInf, Cut::MinusInf) | (Cut::PlusInf, Cut::PlusInf) => Ok(Ordering::Equal),
            (Cut::MinusInf, _) | (_, Cut::PlusInf) => Ok(Ordering::Less),
            (_, Cut::MinusInf) | (Cut::PlusInf, _) => Ok(Ordering::Greater),
            (Cut::CutOf { gamma: g1, level: l1 }, Cut::CutOf { gamma: g2, level: l2 }) => {
                if g1.rank() != g2.rank() {
                    return Err(Error::RankMismatch { left: g1.rank(), right: g2.rank() });
                }
                let keep = g1.rank() - l1.max(l2);
                let by_prefix = g1.prefix(keep).lex_compare(&g2.prefix(keep))?;
                Ok(by_prefix.then(l1.cmp(l2)))
            }
        }
    }

    /// `self + alpha` for `alpha ∈ Γ`; the left set is shifted by `alpha`.
    pub fn add_group(&self, alpha: &GroupElem) -> Result<Cut> {
        match self {
            Cut::CutOf { gamma, level } => Cut::new(gamma.add(alpha)?, *level),
            other => Ok(other.clone()),
        }
    }

    pub fn sub_group(&self, alpha: &GroupElem) -> Result<Cut> {
        self.add_group(&alpha.neg())
    }

    /// Image in the cut monoid of `Γ / H_level`: the cut generated by the
    /// projected left set.
    pub fn project(&self, level: usize) -> Result<Cut> {
        match self {
            Cut::CutOf { gamma, level: own } => {
                if level > gamma.rank() {
                    return Err(Error::InvalidArgument(format!(
                        "quotient level {level} exceeds rank {}",
                        gamma.rank()
                    )));
                }
                let keep = gamma.rank() - level;
                Cut::new(gamma.prefix(keep), own.saturating_sub(level))
            }
            other => Ok(other.clone()),
        }
    }
}

impl PartialOrd for Cut {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.cmp_cut(other).ok()
    }
}

impl fmt::Debug for Cut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cut::MinusInf => write!(f, "(∅,Γ)"),
            Cut::PlusInf => write!(f, "(Γ,∅)"),
            Cut::CutOf { gamma, level: 0 } => write!(f, "({gamma})⁺"),
            Cut::CutOf { gamma, level } => write!(f, "({gamma}+H{level})⁺"),
        }
    }
}

/// A cut or the adjoined top element `∞`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "CutRecord", into = "CutRecord")]
pub enum CutValue {
    Cut(Cut),
    Infinity,
}

impl CutValue {
    pub fn principal(gamma: GroupElem) -> CutValue {
        CutValue::Cut(Cut::principal(gamma))
    }

    pub fn as_cut(&self) -> Option<&Cut> {
        match self {
            CutValue::Cut(c) => Some(c),
            CutValue::Infinity => None,
        }
    }
}

impl CutValue {
    /// `self + alpha` for `alpha ∈ Γ`.
    pub fn shifted(&self, alpha: &GroupElem) -> Result<CutValue> {
        Ok(match self {
            CutValue::Infinity => CutValue::Infinity,
            CutValue::Cut(c) => CutValue::Cut(c.add_group(alpha)?),
        })
    }

    /// Image in the cut monoid of `Γ / H_level`.
    pub fn project(&self, level: usize) -> Result<CutValue> {
        Ok(match self {
            CutValue::Infinity => CutValue::Infinity,
            CutValue::Cut(c) => CutValue::Cut(c.project(level)?),
        })
    }
}

impl From<Cut> for CutValue {
    fn from(c: Cut) -> Self {
        CutValue::Cut(c)
    }
}

impl fmt::Debug for CutValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CutValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CutValue::Cut(c) => write!(f, "{c}"),
            CutValue::Infinity => write!(f, "∞"),
        }
    }
}

pub fn principal(gamma: GroupElem) -> Cut {
    Cut::principal(gamma)
}

pub fn cut_add(a: &CutValue, b: &CutValue) -> Result<CutValue> {
    match (a, b) {
        (CutValue::Infinity, _) | (_, CutValue::Infinity) => Ok(CutValue::Infinity),
        (CutValue::Cut(x), CutValue::Cut(y)) => Ok(CutValue::Cut(x.add(y)?)),
    }
}

pub fn cut_scalar(n: u64, a: &CutValue) -> Result<CutValue> {
    match a {
        CutValue::Infinity if n == 0 => {
            Err(Error::InvalidArgument("scalar multiple of a cut by 0".into()))
        }
        CutValue::Infinity => Ok(CutValue::Infinity),
        CutValue::Cut(c) => Ok(CutValue::Cut(c.scalar(n)?)),
    }
}

pub fn cut_cmp(a: &CutValue, b: &CutValue) -> Result<Ordering> {
    match (a, b) {
        (CutValue::Infinity, CutValue::Infinity) => Ok(Ordering::Equal),
        (CutValue::Infinity, _) => Ok(Ordering::Greater),
        (_, CutValue::Infinity) => Ok(Ordering::Less),
        (CutValue::Cut(x), CutValue::Cut(y)) => x.cmp_cut(y),
    }
}

pub fn cut_sub_group(a: &CutValue, alpha: &GroupElem) -> Result<CutValue> {
    match a {
        CutValue::Infinity => Ok(CutValue::Infinity),
        CutValue::Cut(c) => Ok(CutValue::Cut(c.sub_group(alpha)?)),
    }
}

impl OrderedMonoid for Cut {
    /// Panics on the rank-less extremes, which carry no group context.
    fn identity_like(&self) -> Self {
        Cut::zero(self.rank().expect("identity of a rank-less extreme cut"))
    }

    fn try_add(&self, other: &Self) -> Result<Self> {
        self.add(other)
    }

    fn try_cmp(&self, other: &Self) -> Result<Ordering> {
        self.cmp_cut(other)
    }

    fn times(&self, n: u64) -> Result<Self> {
        self.scalar(n)
    }
}

/// Wire form: `{"kind": "minus_inf"|"cut"|"plus_inf"|"infinity", "gamma": [..], "h_level": j}`.
#[derive(Serialize, Deserialize)]
struct CutRecord {
    kind: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    gamma: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    h_level: Option<usize>,
}

impl From<CutValue> for CutRecord {
    fn from(value: CutValue) -> Self {
        let bare = |kind: &str| CutRecord { kind: kind.into(), gamma: None, h_level: None };
        match value {
            CutValue::Infinity => bare("infinity"),
            CutValue::Cut(Cut::MinusInf) => bare("minus_inf"),
            CutValue::Cut(Cut::PlusInf) => bare("plus_inf"),
            CutValue::Cut(Cut::CutOf { gamma, level }) => CutRecord {
                kind: "cut".into(),
                gamma: Some(gamma.coords().to_vec()),
                h_level: Some(level),
            },
        }
    }
}

impl TryFrom<CutRecord> for CutValue {
    type Error = Error;

    fn try_from(record: CutRecord) -> Result<Self> {
        match record.kind.as_str() {
            "infinity" => Ok(CutValue::Infinity),
            "minus_inf" => Ok(CutValue::Cut(Cut::MinusInf)),
            "plus_inf" => Ok(CutValue::Cut(Cut::PlusInf)),
            "cut" => {
                let gamma = record
                    .gamma
                    .ok_or_else(|| Error::InvalidArgument("cut record without gamma".into()))?;
                let level = record.h_level.unwrap_or(0);
                let gamma = GroupElem::new(gamma);
                let cut = Cut::new(gamma.clone(), level)?;
                if cut != (Cut::CutOf { gamma, level }) {
                    return Err(Error::InvalidArgument(
                        "cut record is not in canonical form".into(),
                    ));
                }
                Ok(CutValue::Cut(cut))
            }
            other => Err(Error::InvalidArgument(format!("unknown cut kind {other:?}"))),
        }
    }
}

/// A positive isolated monoid of the cut monoid: the hull of `H^{≥0}` or
/// its closure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PimDescriptor {
    pub h: IsolatedSubgroup,
    pub closed: bool,
}

impl PimDescriptor {
    pub fn hull(h: IsolatedSubgroup) -> Self {
        PimDescriptor { h, closed: false }
    }

    pub fn closure(h: IsolatedSubgroup) -> Self {
        PimDescriptor { h, closed: true }
    }
}

/// Membership of a non-negative cut in a hull or closure PIM.
pub fn pim_membership(m: &Cut, pim: &PimDescriptor) -> Result<bool> {
    let zero = Cut::zero(pim.h.rank());
    if m.cmp_cut(&zero)? == Ordering::Less {
        return Err(Error::InvalidArgument(format!("{m} is negative")));
    }
    if pim.h.is_trivial() {
        return Ok(*m == zero);
    }
    let against = m.cmp_cut(&pim.h.plus())?;
    Ok(against == Ordering::Less || (pim.closed && against == Ordering::Equal))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PimMonoidKind {
    /// The cut monoid of ℤᵏ-lex.
    CutMonoid { rank: usize },
    /// ℤ × (ℕ∪{0}, max).
    LexMax,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pim {
    Cut(PimDescriptor),
    /// `{(0, i) : i ≤ top}` inside ℤ × (ℕ∪{0}, max).
    LexMaxInitial { top: u32 },
}

impl fmt::Display for Pim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pim::Cut(d) if d.closed => write!(f, "closure(hull({}))", d.h),
            Pim::Cut(d) => write!(f, "hull({})", d.h),
            Pim::LexMaxInitial { top } => write!(f, "{{(0,i) : i ≤ {top}}}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PimListing {
    pub pims: Vec<Pim>,
    pub truncated: bool,
}

/// PIMs lying over `H^{≥0}`.
pub fn pims_over(level: usize, kind: PimMonoidKind, bound: u32) -> Result<PimListing> {
    match kind {
        PimMonoidKind::CutMonoid { rank } => {
            let h = IsolatedSubgroup::new(rank, level)?;
            let pims = if h.is_trivial() {
                vec![Pim::Cut(PimDescriptor::hull(h))]
            } else {
                vec![Pim::Cut(PimDescriptor::hull(h)), Pim::Cut(PimDescriptor::closure(h))]
            };
            Ok(PimListing { pims, truncated: false })
        }
        PimMonoidKind::LexMax => {
            if level != 0 {
                return Err(Error::Unsupported(
                    "PIM enumeration in ℤ × (ℕ∪{0}, max) is only available over {0}".into(),
                ));
            }
            Ok(PimListing {
                pims: (0..=bound).map(|top| Pim::LexMaxInitial { top }).collect(),
                truncated: true,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(c: &[i64]) -> GroupElem {
        GroupElem::new(c.to_vec())
    }

    fn p(c: &[i64]) -> CutValue {
        CutValue::principal(g(c))
    }

    fn h_cut(c: &[i64], level: usize) -> CutValue {
        CutValue::Cut(Cut::new(g(c), level).unwrap())
    }

    #[test]
    fn principal_embedding() {
        assert!(Cut::zero(1).contains(&g(&[0])).unwrap());
        assert!(!Cut::zero(1).contains(&g(&[1])).unwrap());
        assert_eq!(cut_cmp(&p(&[2]), &p(&[3])).unwrap(), Ordering::Less);
        assert_eq!(cut_add(&p(&[2]), &p(&[3])).unwrap(), p(&[5]));
    }

    #[test]
    fn add_rules() {
        let hp = h_cut(&[0, 0], 1);
        assert_eq!(cut_add(&hp, &hp).unwrap(), hp);
        assert_eq!(cut_add(&p(&[4]), &CutValue::Infinity).unwrap(), CutValue::Infinity);
        let minus = CutValue::Cut(Cut::MinusInf);
        let plus = CutValue::Cut(Cut::PlusInf);
        assert_eq!(cut_add(&minus, &p(&[1])).unwrap(), minus);
        assert_eq!(cut_add(&plus, &p(&[1])).unwrap(), plus);
        assert!(matches!(cut_add(&minus, &plus), Err(Error::Undefined(_))));
        assert_eq!(cut_add(&minus, &CutValue::Infinity).unwrap(), CutValue::Infinity);
    }

    #[test]
    fn scalar_rules() {
        assert_eq!(cut_scalar(3, &p(&[2])).unwrap(), p(&[6]));
        let hp = h_cut(&[0, 0], 1);
        assert_eq!(cut_scalar(5, &hp).unwrap(), hp);
        assert_eq!(cut_scalar(1, &h_cut(&[3, 0], 1)).unwrap(), h_cut(&[3, 0], 1));
        assert!(cut_scalar(0, &p(&[1])).is_err());
    }

    #[test]
    fn compare_rules() {
        assert_eq!(cut_cmp(&p(&[0, 0]), &h_cut(&[0, 0], 1)).unwrap(), Ordering::Less);
        assert_eq!(cut_cmp(&p(&[1, 0]), &h_cut(&[0, 0], 1)).unwrap(), Ordering::Greater);
        assert_eq!(cut_cmp(&p(&[0, 99]), &h_cut(&[0, 0], 1)).unwrap(), Ordering::Less);
        let minus = CutValue::Cut(Cut::MinusInf);
        let plus = CutValue::Cut(Cut::PlusInf);
        for c in [p(&[-5]), p(&[7])] {
            assert_eq!(cut_cmp(&minus, &c).unwrap(), Ordering::Less);
            assert_eq!(cut_cmp(&c, &plus).unwrap(), Ordering::Less);
        }
        assert!(cut_cmp(&p(&[1]), &p(&[1, 2])).is_err());
    }

    #[test]
    fn shift_by_group_elements() {
        assert_eq!(cut_sub_group(&p(&[5]), &g(&[3])).unwrap(), p(&[2]));
        assert_eq!(
            cut_sub_group(&h_cut(&[0, 0], 1), &g(&[2, 7])).unwrap(),
            h_cut(&[-2, 0], 1)
        );
        assert_eq!(cut_sub_group(&CutValue::Infinity, &g(&[3])).unwrap(), CutValue::Infinity);
    }

    #[test]
    fn canonical_form_ignores_h_coordinates() {
        assert_eq!(Cut::new(g(&[3, 5]), 1).unwrap(), Cut::new(g(&[3, -4]), 1).unwrap());
        assert_eq!(Cut::new(g(&[3, 5]), 2).unwrap(), Cut::PlusInf);
    }

    #[test]
    fn isolated_subgroup_chain() {
        assert_eq!(isolated_subgroups(1).unwrap().len(), 2);
        let hs = isolated_subgroups(2).unwrap();
        assert_eq!(hs.iter().map(|h| h.level()).collect::<Vec<_>>(), vec![0, 1, 2]);
        assert!(hs.windows(2).all(|w| w[0] < w[1]));
        assert!(hs[1].contains(&g(&[0, 4])) && !hs[1].contains(&g(&[1, 0])));
        assert!(isolated_subgroups(0).is_err());
    }

    #[test]
    fn pim_membership_rules() {
        let trivial = IsolatedSubgroup::trivial(1);
        assert!(pim_membership(&Cut::zero(1), &PimDescriptor::hull(trivial)).unwrap());
        let h = IsolatedSubgroup::new(2, 1).unwrap();
        let hp = h.plus();
        assert!(pim_membership(&hp, &PimDescriptor::closure(h)).unwrap());
        assert!(!pim_membership(&hp, &PimDescriptor::hull(h)).unwrap());
        let inside = Cut::principal(g(&[0, 17]));
        assert!(pim_membership(&inside, &PimDescriptor::hull(h)).unwrap());
        assert!(!pim_membership(&Cut::principal(g(&[1, 0])), &PimDescriptor::closure(h)).unwrap());
        assert!(pim_membership(&Cut::principal(g(&[-1])), &PimDescriptor::hull(trivial)).is_err());
    }

    #[test]
    fn pim_counts() {
        let one = pims_over(0, PimMonoidKind::CutMonoid { rank: 1 }, 0).unwrap();
        assert_eq!(one.pims.len(), 1);
        let two = pims_over(1, PimMonoidKind::CutMonoid { rank: 2 }, 0).unwrap();
        assert_eq!(two.pims.len(), 2);
        let lex = pims_over(0, PimMonoidKind::LexMax, 3).unwrap();
        assert_eq!(lex.pims.len(), 4);
        assert!(lex.truncated);
    }

    #[test]
    fn projection_to_quotient() {
        let c = Cut::principal(g(&[2, 1]));
        assert_eq!(c.project(1).unwrap(), Cut::principal(g(&[2])));
        assert_eq!(Cut::new(g(&[2, 0]), 1).unwrap().project(1).unwrap(), Cut::principal(g(&[2])));
        assert_eq!(c.project(2).unwrap(), Cut::PlusInf);
    }

    #[test]
    fn wire_format() {
        let v = h_cut(&[-1, 0], 1);
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(json, r#"{"kind":"cut","gamma":[-1,0],"h_level":1}"#);
        assert_eq!(serde_json::from_str::<CutValue>(&json).unwrap(), v);
        assert_eq!(serde_json::to_string(&CutValue::Infinity).unwrap(), r#"{"kind":"infinity"}"#);
        assert!(serde_json::from_str::<CutValue>(r#"{"kind":"cut","gamma":[1,5],"h_level":1}"#)
            .is_err());
        assert!(serde_json::from_str::<CutValue>(r#"{"kind":"bogus"}"#).is_err());
    }
}
