//! Comparing monoid values with the divisible hull of the value group,
//! domination of quasi-valuations by valuations, and exponential
//! quasi-valuations as minima of extensions.
//!
//! An element of `M` and an element `γ/n` of `Γ_div` are compared through
//! their images `(m, 1)` and `(γ, n)` in the divisible hull of `M`:
//! `(m₁, n₁) ≤ (m₂, n₂)` iff `n₂·m₁ ≤ n₁·m₂`. Both supported monoids are
//! `ℕ`-strictly ordered, so no extra multiplier is needed.

use std::cmp::Ordering;
use std::fmt;

use num_traits::Signed;

use crate::cut::Cut;
use crate::error::{Error, Result};
use crate::fields::{Elem, QuadElem};
use crate::ordered::{DivElem, GroupElem, LexProductElem, MaxElem, Q};
use crate::oracle;
use crate::quasival::{check_exponential, QuasiValuation};
use crate::report::Report;
use crate::sample::{small_quad_elements, Domain, Sampler};
use crate::valuation::{extend_valuation, Valuation};
use crate::value::{Codomain, MonoidValue};

/// The monoid `M` on the left of the amalgam. `Γ` is `ℤᵏ` for the cut
/// monoid, `ℤ × {identity}` for the lex-max monoid; when `M` already is
/// `ℚᵏ` the amalgam collapses to `ℚᵏ` itself.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonoidKind {
    Group { rank: usize },
    CutMonoid { rank: usize },
    LexMax { chain_len: Option<u32> },
}

impl MonoidKind {
    pub fn of(codomain: Codomain) -> Self {
        match codomain {
            Codomain::Div { rank } => MonoidKind::Group { rank },
            Codomain::Cut { rank } => MonoidKind::CutMonoid { rank },
            Codomain::LexMax { chain_len } => MonoidKind::LexMax { chain_len },
        }
    }

    /// Rank of `Γ`.
    pub fn group_rank(&self) -> usize {
        match *self {
            MonoidKind::Group { rank } | MonoidKind::CutMonoid { rank } => rank,
            MonoidKind::LexMax { .. } => 1,
        }
    }

    fn identity_max(&self) -> MaxElem {
        match *self {
            MonoidKind::LexMax { chain_len: Some(len) } => MaxElem::chain(0, len).expect("len ≥ 1"),
            _ => MaxElem::nat(0),
        }
    }

    /// `γ ∈ Γ` as an element of `M`.
    pub fn embed(&self, gamma: &GroupElem) -> MonoidValue {
        match self {
            MonoidKind::Group { .. } => MonoidValue::Div(DivElem::from(gamma)),
            MonoidKind::CutMonoid { .. } => MonoidValue::principal(gamma.clone()),
            MonoidKind::LexMax { .. } => {
                MonoidValue::LexMax(LexProductElem::new(gamma.coords()[0], self.identity_max()))
            }
        }
    }

    fn check_m(&self, m: &MonoidValue) -> Result<()> {
        let ok = match (self, m) {
            (MonoidKind::Group { rank }, MonoidValue::Div(d)) => d.rank() == *rank,
            (MonoidKind::CutMonoid { rank }, MonoidValue::Cut(c)) => {
                c.rank().is_none_or(|r| r == *rank)
            }
            (MonoidKind::LexMax { chain_len }, MonoidValue::LexMax(x)) => {
                x.m.chain_len() == *chain_len
            }
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!("{m} is not a finite element of {self}")))
        }
    }
}

impl fmt::Display for MonoidKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonoidKind::Group { rank } => write!(f, "ℚ^{rank}"),
            MonoidKind::CutMonoid { rank } => write!(f, "M(ℤ^{rank})"),
            MonoidKind::LexMax { chain_len: Some(n) } => write!(f, "ℤ×{{α0..α{}}}", n - 1),
            MonoidKind::LexMax { chain_len: None } => write!(f, "ℤ×(ℕ∪{{0}},max)"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    FromM(MonoidValue),
    FromDiv(DivElem),
}

/// An element of the disjoint union of `M` and `Γ_div`, with its
/// singularity worked out on construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AmalgamElem {
    kind: MonoidKind,
    side: Side,
    singular: bool,
}

impl AmalgamElem {
    /// `m` must be a finite value of the given monoid.
    pub fn from_m(kind: MonoidKind, m: MonoidValue) -> Result<Self> {
        kind.check_m(&m)?;
        let singular = match (&kind, &m) {
            (MonoidKind::Group { .. }, _) => false,
            // n·m stays a non-principal cut (or an extreme) for every n.
            (MonoidKind::CutMonoid { .. }, MonoidValue::Cut(c)) => !c.is_principal(),
            (MonoidKind::LexMax { .. }, MonoidValue::LexMax(x)) => !x.m.is_identity(),
            _ => unreachable!("checked above"),
        };
        Ok(AmalgamElem { kind, side: Side::FromM(m), singular })
    }

    pub fn from_div(kind: MonoidKind, q: DivElem) -> Result<Self> {
        if q.rank() != kind.group_rank() {
            return Err(Error::RankMismatch { left: q.rank(), right: kind.group_rank() });
        }
        // n·m = γ forces m = γ/n principal (or tagged with the identity),
        // which exists in M exactly when γ/n is integral.
        let singular = match kind {
            MonoidKind::Group { .. } => false,
            _ => !q.is_integral(),
        };
        Ok(AmalgamElem { kind, side: Side::FromDiv(q), singular })
    }

    pub fn kind(&self) -> MonoidKind {
        self.kind
    }

    pub fn side(&self) -> &Side {
        &self.side
    }

    pub fn is_singular(&self) -> bool {
        self.singular
    }

    /// Image `(m, n)` in the divisible hull of `M`.
    pub fn phi(&self) -> (MonoidValue, u64) {
        match &self.side {
            Side::FromM(m) => (m.clone(), 1),
            Side::FromDiv(q) => {
                let (n, gamma) = q.cleared();
                (self.kind.embed(&gamma), n)
            }
        }
    }

    /// An element of the other side with the same image, if there is one.
    pub fn counterpart(&self) -> Option<AmalgamElem> {
        if self.singular {
            return None;
        }
        let side = match &self.side {
            Side::FromM(m) => Side::FromDiv(match m {
                MonoidValue::Div(d) => d.clone(),
                MonoidValue::Cut(c) => DivElem::from(c.as_principal()?),
                MonoidValue::LexMax(x) => DivElem::from_int(x.g),
                MonoidValue::Infinity => return None,
            }),
            Side::FromDiv(q) => Side::FromM(match self.kind {
                MonoidKind::Group { .. } => MonoidValue::Div(q.clone()),
                kind => kind.embed(&q.to_group()?),
            }),
        };
        Some(AmalgamElem { side, ..self.clone() })
    }
}

impl fmt::Display for AmalgamElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.side {
            Side::FromM(m) => write!(f, "{m}"),
            Side::FromDiv(q) => write!(f, "[{q}]"),
        }
    }
}

/// Whether `x` is singular, i.e. equivalent to nothing but itself.
pub fn is_singular(x: &AmalgamElem) -> bool {
    x.is_singular()
}

fn phi_cmp(x: &AmalgamElem, y: &AmalgamElem) -> Result<Ordering> {
    let ((m1, n1), (m2, n2)) = (x.phi(), y.phi());
    m1.times(n2)?.try_cmp(&m2.times(n1)?)
}

fn same_kind(x: &AmalgamElem, y: &AmalgamElem) -> Result<()> {
    if x.kind == y.kind {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("comparing {} with {}", x.kind, y.kind)))
    }
}

/// The order on `T̄`: two singular elements of `M` compare in `M`, every
/// other pair through the divisible hull.
pub fn amalgam_cmp(x: &AmalgamElem, y: &AmalgamElem) -> Result<Ordering> {
    same_kind(x, y)?;
    match (&x.side, &y.side) {
        (Side::FromM(a), Side::FromM(b)) if x.singular && y.singular => a.try_cmp(b),
        _ => phi_cmp(x, y),
    }
}

/// `x ∼ y`: equal when both lie in `M`, equal images otherwise.
pub fn equivalent(x: &AmalgamElem, y: &AmalgamElem) -> Result<bool> {
    same_kind(x, y)?;
    match (&x.side, &y.side) {
        (Side::FromM(a), Side::FromM(b)) => Ok(a == b),
        _ => Ok(phi_cmp(x, y)? == Ordering::Equal),
    }
}

/// `w(x)` against `u(x)`; `None` is `∞` on either side.
fn value_cmp(kind: MonoidKind, wx: &MonoidValue, ux: Option<&DivElem>) -> Result<Ordering> {
    match (wx, ux) {
        (MonoidValue::Infinity, None) => Ok(Ordering::Equal),
        (MonoidValue::Infinity, Some(_)) => Ok(Ordering::Greater),
        (_, None) => Ok(Ordering::Less),
        (m, Some(q)) => amalgam_cmp(
            &AmalgamElem::from_m(kind, m.clone())?,
            &AmalgamElem::from_div(kind, q.clone())?,
        ),
    }
}

fn value_equiv(kind: MonoidKind, wx: &MonoidValue, ux: Option<&DivElem>) -> Result<bool> {
    match (wx, ux) {
        (MonoidValue::Infinity, None) => Ok(true),
        (MonoidValue::Infinity, _) | (_, None) => Ok(false),
        (m, Some(q)) => equivalent(
            &AmalgamElem::from_m(kind, m.clone())?,
            &AmalgamElem::from_div(kind, q.clone())?,
        ),
    }
}

// ---------------------------------------------------------------------------
// Sampling

/// A finite element of `M` near the origin.
pub fn sample_m(kind: MonoidKind, s: &mut Sampler) -> MonoidValue {
    match kind {
        MonoidKind::Group { rank } => MonoidValue::Div(sample_div(rank, s)),
        MonoidKind::CutMonoid { rank } => {
            let roll = s.index(12);
            if roll == 0 {
                return MonoidValue::Cut(Cut::MinusInf);
            }
            if roll == 1 {
                return MonoidValue::Cut(Cut::PlusInf);
            }
            let gamma = GroupElem::new((0..rank).map(|_| s.small_int(6)).collect());
            let level = s.index(rank + 1);
            MonoidValue::Cut(Cut::new(gamma, level).expect("level ≤ rank"))
        }
        MonoidKind::LexMax { chain_len } => {
            let top = chain_len.unwrap_or(4);
            let level = s.index(top as usize) as u32;
            let m = match chain_len {
                Some(len) => MaxElem::chain(level, len).expect("level < len"),
                None => MaxElem::nat(level),
            };
            MonoidValue::LexMax(LexProductElem::new(s.small_int(6), m))
        }
    }
}

fn sample_div(rank: usize, s: &mut Sampler) -> DivElem {
    DivElem::new(
        (0..rank)
            .map(|_| {
                let den = 1 + s.index(4) as i64;
                Q::new(s.small_int(6 * den), den)
            })
            .collect(),
    )
}

/// Either side, with images of `M`-elements and elements of `M` that are
/// equivalent to hull elements turning up often enough to produce ties.
pub fn sample_amalgam(kind: MonoidKind, s: &mut Sampler) -> AmalgamElem {
    let x = if s.index(2) == 0 {
        AmalgamElem::from_m(kind, sample_m(kind, s))
    } else {
        AmalgamElem::from_div(kind, sample_div(kind.group_rank(), s))
    }
    .expect("sampled in the right monoid");
    if s.index(4) == 0 {
        x.counterpart().unwrap_or(x)
    } else {
        x
    }
}

/// Elements `a + b√d` with `|a|, |b| ≤ 3` (sorted by `|a| + |b|`, then
/// `|b|`), quotients of the smaller ones, then `count` random elements.
fn probe_elements(d: i64, p: i64, seed: u64, count: usize) -> Vec<Elem> {
    let mut xs = small_quad_elements(d, 3);
    xs.sort_by_key(|x| {
        let q = x.as_quad().expect("quadratic");
        (q.a.abs() + q.b.abs(), q.b.abs(), q.a.is_negative(), q.b.is_negative())
    });
    let small = small_quad_elements(d, 2);
    for y in small.iter().filter_map(Elem::inverse) {
        for x in &small {
            let q = x.try_mul(&y).expect("same field");
            if !xs.contains(&q) {
                xs.push(q);
            }
        }
    }
    let mut s = Sampler::new(seed);
    xs.extend(s.elements(&Domain::Quad { d }, p, count));
    xs
}

// ---------------------------------------------------------------------------
// Order laws

/// Totality, antisymmetry up to `∼` and transitivity on sampled triples;
/// well-definedness on pairs of equivalent elements; and the closed-form
/// singularity test against a bounded search for `t, n ≤ 12`.
pub fn verify_amalgam_order(
    kind: MonoidKind,
    seed: u64,
    triples: usize,
    pairs: usize,
) -> Result<Report> {
    let mut report =
        Report::new("amalgam-order", "total order on M ⊔ Γ_div modulo ∼", kind.to_string(), seed);
    let mut s = Sampler::new(seed);
    for _ in 0..triples {
        let [x, y, z] = [0; 3].map(|_| sample_amalgam(kind, &mut s));
        let xy = amalgam_cmp(&x, &y)?;
        let ok = xy == amalgam_cmp(&y, &x)?.reverse()
            && (xy == Ordering::Equal) == equivalent(&x, &y)?
            && !(xy.is_le() && amalgam_cmp(&y, &z)?.is_le() && amalgam_cmp(&x, &z)?.is_gt());
        report.record(ok, || format!("x = {x}, y = {y}, z = {z}"));
    }
    for _ in 0..pairs {
        let [x, y] = [0; 2].map(|_| sample_amalgam(kind, &mut s));
        let x2 = x.counterpart().unwrap_or_else(|| x.clone());
        let y2 = y.counterpart().unwrap_or_else(|| y.clone());
        let ok = equivalent(&x, &x2)?
            && equivalent(&y, &y2)?
            && amalgam_cmp(&x, &y)? == amalgam_cmp(&x2, &y2)?;
        report.record(ok, || format!("{x} ∼ {x2}, {y} ∼ {y2} compare differently"));
    }
    if !matches!(kind, MonoidKind::Group { .. }) {
        const BOUND: u64 = 12;
        for _ in 0..pairs.min(200) {
            let x = sample_amalgam(kind, &mut s);
            let searched = match x.side() {
                Side::FromM(m) => {
                    let candidates = witness_candidates(m);
                    oracle::m_singular_by_search(m, &candidates, BOUND, BOUND)?
                }
                Side::FromDiv(q) => {
                    let (n, gamma) = q.cleared();
                    let candidates = m_candidates(kind, q);
                    oracle::div_singular_by_search(&gamma, n, &candidates, BOUND)?
                }
            };
            report.record(searched == x.is_singular(), || {
                format!("{x}: closed form says singular = {}, search says {searched}", x.is_singular())
            });
        }
        report.note(format!("singularity searched with t, n ≤ {BOUND}"));
    }
    Ok(report)
}

/// Group elements a bounded search should try against `m`: the multiples
/// of its own coordinates and a few small vectors.
fn witness_candidates(m: &MonoidValue) -> Vec<GroupElem> {
    let base: Option<GroupElem> = match m {
        MonoidValue::Cut(Cut::CutOf { gamma, .. }) => Some(gamma.clone()),
        MonoidValue::LexMax(x) => Some(GroupElem::new(vec![x.g])),
        _ => None,
    };
    let rank = match m {
        MonoidValue::Cut(c) => c.rank().unwrap_or(1),
        _ => 1,
    };
    let mut out: Vec<GroupElem> = Vec::new();
    if let Some(g) = &base {
        out.extend((1..=12).map(|n| g.scalar_mul(n)));
    }
    let small: Vec<Vec<i64>> = match rank {
        1 => (-2..=2).map(|a| vec![a]).collect(),
        _ => (-2..=2).flat_map(|a| (-2..=2).map(move |b| vec![a, b])).collect(),
    };
    out.extend(small.into_iter().map(GroupElem::new));
    out
}

/// Elements of `M` a bounded search should try against `q`: everything
/// with coordinates within one of `q` at every level, plus both extremes.
fn m_candidates(kind: MonoidKind, q: &DivElem) -> Vec<MonoidValue> {
    let near: Vec<Vec<i64>> = q
        .coords()
        .iter()
        .map(|c| (c.floor().to_integer() - 1..=c.ceil().to_integer() + 1).collect())
        .collect();
    let mut gammas: Vec<Vec<i64>> = vec![vec![]];
    for options in &near {
        gammas = gammas
            .into_iter()
            .flat_map(|g| {
                options.iter().map(move |&c| {
                    let mut g = g.clone();
                    g.push(c);
                    g
                })
            })
            .collect();
    }
    let mut out = Vec::new();
    match kind {
        MonoidKind::CutMonoid { rank } => {
            out.push(MonoidValue::Cut(Cut::MinusInf));
            out.push(MonoidValue::Cut(Cut::PlusInf));
            for g in gammas {
                for level in 0..rank {
                    out.push(MonoidValue::Cut(Cut::new(GroupElem::new(g.clone()), level).expect("ok")));
                }
            }
        }
        MonoidKind::LexMax { chain_len } => {
            for g in gammas {
                for level in 0..chain_len.unwrap_or(3) {
                    let m = match chain_len {
                        Some(len) => MaxElem::chain(level, len).expect("level < len"),
                        None => MaxElem::nat(level),
                    };
                    out.push(MonoidValue::LexMax(LexProductElem::new(g[0], m)));
                }
            }
        }
        MonoidKind::Group { .. } => out.push(MonoidValue::Div(q.clone())),
    }
    out
}

/// `n·m ≤ γ ≤ n·m′` with `γ ∈ Γ` forces `m ≤ m′`, on sampled triples.
pub fn check_division_bracket(kind: MonoidKind, seed: u64, count: usize) -> Result<Report> {
    let mut report = Report::new("amalgam-order", "n·m ≤ γ ≤ n·m′ ⇒ m ≤ m′", kind.to_string(), seed);
    let mut s = Sampler::new(seed);
    let mut fired = 0usize;
    for _ in 0..count {
        let m = sample_m(kind, &mut s);
        let m2 = sample_m(kind, &mut s);
        let n = 1 + s.index(6) as u64;
        let (nm, nm2) = (m.times(n)?, m2.times(n)?);
        // γ near n·m so that the hypothesis holds reasonably often.
        let centre: Vec<i64> = match &nm {
            MonoidValue::Cut(Cut::CutOf { gamma, .. }) => gamma.coords().to_vec(),
            MonoidValue::LexMax(x) => vec![x.g],
            MonoidValue::Div(d) => d.coords().iter().map(|c| c.floor().to_integer()).collect(),
            _ => vec![0; kind.group_rank()],
        };
        let gamma = GroupElem::new(centre.iter().map(|c| c + s.small_int(2)).collect());
        let g = kind.embed(&gamma);
        if nm.try_cmp(&g)?.is_le() && g.try_cmp(&nm2)?.is_le() {
            fired += 1;
            report.record(m.try_cmp(&m2)?.is_le(), || {
                format!("{n}·{m} ≤ {gamma} ≤ {n}·{m2} but {m} > {m2}")
            });
        }
    }
    report.note(format!("hypothesis held in {fired} of {count} draws"));
    Ok(report)
}

// ---------------------------------------------------------------------------
// Domination

fn field_samples(w: &QuasiValuation, seed: u64, count: usize) -> Vec<Elem> {
    let mut xs = match w.domain() {
        Domain::Quad { d } => probe_elements(*d, w.bias(), seed, count),
        other => Sampler::new(seed).elements(other, w.bias(), count),
    };
    xs.retain(|x| w.domain().contains(x));
    xs
}

/// First sample in `O_w ∖ O_u`, if any.
fn ring_escape(u: &Valuation, w: &QuasiValuation, xs: &[Elem]) -> Result<Option<Elem>> {
    for x in xs {
        let u_nonneg = u.eval(x)?.sign() != Ordering::Less;
        if w.in_ow(x)? && !u_nonneg {
            return Ok(Some(x.clone()));
        }
    }
    Ok(None)
}

/// `w(x) ≤ u(x)` in `T̄` on samples, once `O_u ⊇ O_w` has been seen to
/// hold on the same samples.
pub fn dominates(u: &Valuation, w: &QuasiValuation, seed: u64, count: usize) -> Result<Report> {
    let kind = MonoidKind::of(w.codomain());
    let mut report = Report::new(
        "domination",
        "w ≤ u in the amalgamated order",
        format!("{} ≤ {}", w.name(), u.name()),
        seed,
    );
    let xs = field_samples(w, seed, count);
    if let Some(x) = ring_escape(u, w, &xs)? {
        report.fail_precondition(format!("O_u ⊉ O_w: x = {x} has w(x) ≥ 0 > u(x)"));
        return Ok(report);
    }
    for x in &xs {
        let (wx, ux) = (w.eval(x)?, u.value(x)?);
        let ord = value_cmp(kind, &wx, ux.as_ref())?;
        report.record(ord.is_le(), || {
            let ux = ux.map_or("∞".to_string(), |q| q.to_string());
            format!("x = {x}: w(x) = {wx} > u(x) = {ux}")
        });
    }
    Ok(report)
}

/// `O_u ⊇ O_w ⇒ I_u ⊇ I_w` on samples.
pub fn check_ideal_containment(
    u: &Valuation,
    w: &QuasiValuation,
    seed: u64,
    count: usize,
) -> Result<Report> {
    let mut report = Report::new(
        "domination",
        "O_u ⊇ O_w implies I_u ⊇ I_w",
        format!("{} vs {}", w.name(), u.name()),
        seed,
    );
    let xs = field_samples(w, seed, count);
    if let Some(x) = ring_escape(u, w, &xs)? {
        report.fail_precondition(format!("O_u ⊉ O_w: x = {x} has w(x) ≥ 0 > u(x)"));
        return Ok(report);
    }
    for x in &xs {
        let ok = !w.in_iw(x)? || u.eval(x)?.sign() == Ordering::Greater;
        report.record(ok, || format!("x = {x} lies in I_w but not in I_u"));
    }
    Ok(report)
}

// ---------------------------------------------------------------------------
// Exponential quasi-valuations

/// Extensions of `v_p` from ℚ to ℚ(√d).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionSet {
    pub valuations: Vec<Valuation>,
    /// Whether these are all the extensions.
    pub complete: bool,
    p: i64,
    d: i64,
}

impl ExtensionSet {
    /// All extensions, as computed from the splitting of `p`.
    pub fn of(p: i64, d: i64) -> Result<Self> {
        Ok(ExtensionSet { valuations: extend_valuation(p, d)?, complete: true, p, d })
    }

    /// A chosen sublist of the extensions.
    pub fn partial(p: i64, d: i64, keep: &[usize]) -> Result<Self> {
        let all = extend_valuation(p, d)?;
        let valuations = keep
            .iter()
            .map(|&i| {
                all.get(i).cloned().ok_or_else(|| {
                    Error::InvalidArgument(format!("only {} extensions exist", all.len()))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let complete = valuations.len() == all.len();
        Ok(ExtensionSet { valuations, complete, p, d })
    }

    pub fn len(&self) -> usize {
        self.valuations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.valuations.is_empty()
    }

    pub fn prime(&self) -> i64 {
        self.p
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    /// `min` of the chosen members, as a quasi-valuation on ℚ(√d).
    pub fn min_of(&self, members: &[usize]) -> Result<QuasiValuation> {
        let ws: Vec<QuasiValuation> =
            members.iter().map(|&i| QuasiValuation::from_valuation(&self.valuations[i])).collect();
        crate::quasival::min_family(&ws)
    }

    fn min_value(&self, members: &[usize], x: &Elem) -> Result<Option<DivElem>> {
        let mut acc: Option<DivElem> = None;
        for &i in members {
            if let Some(q) = self.valuations[i].value(x)? {
                acc = Some(match acc {
                    Some(a) if a.lex_compare(&q)?.is_le() => a,
                    _ => q,
                });
            }
        }
        Ok(acc)
    }

    /// Pairwise distinctness of the members, each pair by a witness.
    pub fn distinctness(&self, seed: u64, count: usize) -> Result<Report> {
        let mut report = Report::new(
            "extensions",
            "extensions are pairwise distinct",
            format!("p={}, d={}", self.p, self.d),
            seed,
        );
        let xs = probe_elements(self.d, self.p, seed, count);
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                let mut found = None;
                for x in &xs {
                    if self.valuations[i].value(x)? != self.valuations[j].value(x)? {
                        found = Some(x.clone());
                        break;
                    }
                }
                report.record(found.is_some(), || format!("no sample separates u{} and u{}", i + 1, j + 1));
                if let Some(x) = found {
                    report.note(format!("u{} ≠ u{} at {x}", i + 1, j + 1));
                }
            }
        }
        Ok(report)
    }
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    /// The members kept, empty when no subset matches.
    pub kept: Vec<Valuation>,
    pub report: Report,
}

/// First sample where `w` and `min` over `members` differ.
fn first_mismatch(
    w: &QuasiValuation,
    set: &ExtensionSet,
    members: &[usize],
    xs: &[Elem],
) -> Result<Option<String>> {
    let kind = MonoidKind::of(w.codomain());
    for x in xs {
        let (wx, mx) = (w.eval(x)?, set.min_value(members, x)?);
        if !value_equiv(kind, &wx, mx.as_ref())? {
            let mx = mx.map_or("∞".to_string(), |q| q.to_string());
            return Ok(Some(format!("x = {x}: w(x) = {wx}, min = {mx}")));
        }
    }
    Ok(None)
}

/// Finds a minimal `U` among `candidates` with `w = min U` on samples.
/// Only candidates dominating `w` can take part; from those, members are
/// dropped one at a time while equality survives.
pub fn decompose_exponential(
    w: &QuasiValuation,
    candidates: &ExtensionSet,
    seed: u64,
    count: usize,
) -> Result<Decomposition> {
    if candidates.is_empty() {
        return Err(Error::InvalidArgument("no candidate valuations".into()));
    }
    let mut report = Report::new("exponential", "w = min of extensions", w.name(), seed);
    let exp = check_exponential(w, seed, count, 6);
    if !exp.passed {
        report.witness = exp.witness;
        report.fail_precondition("w is not exponential");
        return Ok(Decomposition { kept: Vec::new(), report });
    }
    let Domain::Quad { d } = *w.domain() else {
        return Err(Error::Unsupported(format!("{} is not defined on a quadratic field", w.name())));
    };
    if d != candidates.d() {
        return Err(Error::InvalidArgument(format!("candidates live on ℚ(√{})", candidates.d())));
    }
    let xs = probe_elements(d, candidates.prime(), seed, count);
    let kind = MonoidKind::of(w.codomain());
    let mut members: Vec<usize> = Vec::new();
    for (i, u) in candidates.valuations.iter().enumerate() {
        let mut above = true;
        for x in &xs {
            above &= value_cmp(kind, &w.eval(x)?, u.value(x)?.as_ref())?.is_le();
        }
        if above {
            members.push(i);
        }
    }
    if members.is_empty() {
        report.record(false, || "no candidate dominates w".into());
        return Ok(Decomposition { kept: Vec::new(), report });
    }
    if let Some(m) = first_mismatch(w, candidates, &members, &xs)? {
        let why = if candidates.complete { "no subset matches" } else { "candidates incomplete" };
        report.record(false, || format!("{why}; {m}"));
        return Ok(Decomposition { kept: Vec::new(), report });
    }
    for i in 0..candidates.len() {
        let trial: Vec<usize> = members.iter().copied().filter(|&j| j != i).collect();
        if !trial.is_empty() && first_mismatch(w, candidates, &trial, &xs)?.is_none() {
            members = trial;
        }
    }
    for _ in &xs {
        report.record(true, String::new);
    }
    let kept: Vec<Valuation> = members.iter().map(|&i| candidates.valuations[i].clone()).collect();
    report.note(format!(
        "U = {{{}}}",
        kept.iter().map(Valuation::name).collect::<Vec<_>>().join(", ")
    ));
    Ok(Decomposition { kept, report })
}

/// Number of distinct quasi-valuations `min U` over nonempty `U`.
pub fn count_exponentials(candidates: &ExtensionSet, seed: u64, count: usize) -> Result<usize> {
    let n = candidates.len();
    let xs = probe_elements(candidates.d(), candidates.prime(), seed, count);
    let mut seen: Vec<Vec<Option<DivElem>>> = Vec::new();
    for mask in 1u32..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let values =
            xs.iter().map(|x| candidates.min_value(&members, x)).collect::<Result<Vec<_>>>()?;
        if !seen.contains(&values) {
            seen.push(values);
        }
    }
    Ok(seen.len())
}

#[derive(Clone, Debug)]
pub struct Census {
    /// Number of distinct ideals `Kᵢ = {x ∈ O_w : uᵢ(x) > 0}`.
    pub distinct: usize,
    /// For each `i`, a sample lying in `Kᵢ` and in no other `Kⱼ`.
    pub witnesses: Vec<Option<Elem>>,
    pub report: Report,
}

/// Maximal ideals of `O_w` for `w = min` of the candidates, and
/// `√I_w = J_w` on samples.
pub fn max_ideal_census(candidates: &ExtensionSet, seed: u64, count: usize) -> Result<Census> {
    if candidates.is_empty() {
        return Err(Error::InvalidArgument("no candidate valuations".into()));
    }
    let all: Vec<usize> = (0..candidates.len()).collect();
    let w = candidates.min_of(&all)?;
    let mut report = Report::new("census", "maximal ideals of O_w; √I_w = J_w", w.name(), seed);
    let xs = probe_elements(candidates.d(), candidates.prime(), seed, count);

    let positive = |i: usize, x: &Elem| -> Result<bool> {
        Ok(candidates.valuations[i].eval(x)?.sign() == Ordering::Greater)
    };
    let mut membership: Vec<Vec<bool>> = Vec::new();
    for x in &xs {
        let in_ow = w.in_ow(x)?;
        membership.push(
            all.iter().map(|&i| Ok(in_ow && positive(i, x)?)).collect::<Result<Vec<_>>>()?,
        );
    }
    // Kᵢ and Kⱼ count as equal until a sample separates them.
    let mut reps: Vec<usize> = Vec::new();
    for i in 0..candidates.len() {
        let separated = |j: usize| membership.iter().any(|row| row[i] != row[j]);
        if reps.iter().all(|&j| separated(j)) {
            reps.push(i);
        }
    }
    let witnesses: Vec<Option<Elem>> = (0..candidates.len())
        .map(|i| {
            xs.iter()
                .zip(&membership)
                .find(|(x, row)| !x.is_zero() && row[i] && row.iter().filter(|&&b| b).count() == 1)
                .map(|(x, _)| x.clone())
        })
        .collect();
    let distinct = reps.len();
    report.record(distinct <= candidates.len(), || {
        format!("{distinct} maximal ideals exceed n = {}", candidates.len())
    });
    report.note(format!("distinct maximal ideals: {distinct}"));
    for (i, wit) in witnesses.iter().enumerate() {
        if let Some(x) = wit {
            report.note(format!("K{} ∋ {x}", i + 1));
        }
    }

    for (x, row) in xs.iter().zip(&membership) {
        let in_j = row.iter().all(|&b| b);
        let mut in_radical = false;
        for n in 1..=6 {
            in_radical |= w.in_iw(&x.pow(n))?;
        }
        report.record(in_j == in_radical, || {
            format!("x = {x}: J_w says {in_j}, some power in I_w says {in_radical}")
        });
    }
    Ok(Census { distinct, witnesses, report })
}

/// Elements integral over `O_v` that should lie in `O_w`: `√d` first,
/// then `a + b√d` with `a, b ∈ ℤ_(p)`.
pub fn integrality_probe(w: &QuasiValuation, seed: u64, count: usize) -> Result<Report> {
    let Domain::Quad { d } = *w.domain() else {
        return Err(Error::Unsupported(format!("{} is not defined on a quadratic field", w.name())));
    };
    let p = w.bias();
    let mut report = Report::new("integrality", "integral elements lie in O_w", w.name(), seed);
    let mut s = Sampler::new(seed);
    let mut xs = vec![Elem::Quad(QuadElem::root(d))];
    for _ in 0..count {
        let a = s.p_integer(p);
        let b = if s.index(4) == 0 { crate::fields::int(0) } else { s.p_integer(p) };
        xs.push(Elem::Quad(QuadElem::new(a, b, d)));
    }
    for x in &xs {
        report.record(w.in_ow(x)?, || format!("{x} is integral over O_v but w({x}) < 0"));
    }
    Ok(report)
}
