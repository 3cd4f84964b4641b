//! Ring descriptors and the seeded element generator used by every sampled
//! check.
//!
//! Rationals have numerators and denominators of height at most 10⁴, biased
//! towards powers of the residue prime so that valuations other than 0 show
//! up regularly.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::fields::{int, vp_raw, Elem, Poly, QuadElem, Rat, RatFn};
use crate::valuation::{composite_valuation, prime_power};

const HEIGHT: i64 = 10_000;

/// The ring a quasi-valuation is defined on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Domain {
    Rationals,
    /// The valuation ring ℤ_(p) of `v_p` in ℚ.
    PIntegers { p: i64 },
    Quad { d: i64 },
    /// `O_v ⊕ O_v·(c√d)` inside ℚ(√d).
    QuadOrder { p: i64, d: i64, c: Rat },
    RatFns,
    /// `{f ∈ ℚ(t) : first coordinates of v_(t,p)(f) ≥ 0}`; level 0 is the
    /// valuation ring itself, level 1 its localization with `u = ord_t`.
    RatFnRing { p: i64, level: usize },
}

impl Domain {
    pub fn contains(&self, x: &Elem) -> bool {
        match (self, x) {
            (Domain::Rationals, Elem::Rat(_)) | (Domain::RatFns, Elem::RatFn(_)) => true,
            (Domain::PIntegers { p }, Elem::Rat(r)) => vp_raw(*p, r).is_none_or(|v| v >= 0),
            (Domain::Quad { d }, Elem::Quad(q)) => q.d == *d,
            (Domain::QuadOrder { p, d, c }, Elem::Quad(q)) => {
                q.d == *d && quad_order_coords(*p, c, q).is_some()
            }
            (Domain::RatFnRing { p, level }, Elem::RatFn(f)) => {
                match composite_valuation(*p, f).expect("prime checked on construction") {
                    None => true,
                    Some(v) => v.prefix(2 - level).signum() != std::cmp::Ordering::Less,
                }
            }
            _ => false,
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Rationals => write!(f, "ℚ"),
            Domain::PIntegers { p } => write!(f, "ℤ_({p})"),
            Domain::Quad { d } => write!(f, "ℚ(√{d})"),
            Domain::QuadOrder { p, d, c } => write!(f, "ℤ_({p})[{c}·√{d}]"),
            Domain::RatFns => write!(f, "ℚ(t)"),
            Domain::RatFnRing { p, level: 0 } => write!(f, "O_v(t,{p})"),
            Domain::RatFnRing { p, .. } => write!(f, "O_u(t,{p})"),
        }
    }
}

/// Coordinates `(α, β)` of `x = α + β·(c√d)` when both lie in ℤ_(p).
pub fn quad_order_coords(p: i64, c: &Rat, x: &QuadElem) -> Option<(Rat, Rat)> {
    let alpha = x.a.clone();
    let beta = &x.b / c;
    let integral = |r: &Rat| vp_raw(p, r).is_none_or(|v| v >= 0);
    (integral(&alpha) && integral(&beta)).then_some((alpha, beta))
}

/// Deterministic generator of ring elements.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    fn p_biased_int(&mut self, p: Option<i64>, allow_p: bool) -> BigInt {
        let unit: i64 = self.rng.gen_range(1..=60);
        let mut n = unit;
        if let (Some(p), true) = (p, allow_p) {
            let e = self.rng.gen_range(0..=4u32);
            for _ in 0..e {
                if n * p > HEIGHT {
                    break;
                }
                n *= p;
            }
        } else if let Some(p) = p {
            while n % p == 0 {
                n += 1;
            }
        }
        BigInt::from(n)
    }

    /// Rational of height ≤ 10⁴; zero with probability 1/12.
    pub fn rational(&mut self, p: Option<i64>) -> Rat {
        if self.rng.gen_ratio(1, 12) {
            return Rat::zero();
        }
        if self.rng.gen_ratio(1, 6) {
            return int(self.rng.gen_range(-6..=6));
        }
        let num = self.p_biased_int(p, true);
        let den = self.p_biased_int(p, true);
        let r = Rat::new(num, den);
        if self.rng.gen_bool(0.5) {
            -r
        } else {
            r
        }
    }

    /// Nonzero element of ℤ_(p).
    pub fn p_integer(&mut self, p: i64) -> Rat {
        loop {
            let r = if self.rng.gen_ratio(1, 6) {
                int(self.rng.gen_range(-6..=6))
            } else {
                let num = self.p_biased_int(Some(p), true);
                let den = self.p_biased_int(Some(p), false);
                Rat::new(num, den)
            };
            let r = if self.rng.gen_bool(0.5) { -r } else { r };
            if !r.is_zero() && vp_raw(p, &r).is_some_and(|v| v >= 0) {
                return r;
            }
        }
    }

    fn maybe_zero(&mut self, x: Rat) -> Rat {
        if self.rng.gen_ratio(1, 10) {
            Rat::zero()
        } else {
            x
        }
    }

    fn poly(&mut self, p: i64) -> Poly {
        let shift = self.rng.gen_range(0..=2usize);
        let len = self.rng.gen_range(1..=2usize);
        let mut coeffs = vec![Rat::zero(); shift];
        for _ in 0..len {
            coeffs.push(self.rational(Some(p)));
        }
        if coeffs.iter().all(Zero::is_zero) {
            coeffs.push(Rat::one());
        }
        Poly::new(coeffs)
    }

    fn ratfn(&mut self, p: i64) -> RatFn {
        if self.rng.gen_ratio(1, 12) {
            return RatFn::zero();
        }
        let num = self.poly(p);
        let den = self.poly(p);
        let f = RatFn::new(num, den).expect("nonzero denominator");
        let k = self.rng.gen_range(-2..=2);
        f.mul(&RatFn::monomial(Rat::one(), k))
    }

    /// One element of the domain; `p` steers the valuation bias where the
    /// domain does not fix it.
    pub fn element(&mut self, domain: &Domain, p_hint: i64) -> Elem {
        match domain {
            Domain::Rationals => Elem::Rat(self.rational(Some(p_hint))),
            Domain::PIntegers { p } => {
                let x = self.p_integer(*p);
                Elem::Rat(self.maybe_zero(x))
            }
            Domain::Quad { d } => {
                let a = self.rational(Some(p_hint));
                let b = self.rational(Some(p_hint));
                Elem::Quad(QuadElem::new(a, b, *d))
            }
            Domain::QuadOrder { p, d, c } => {
                let alpha = self.p_integer(*p);
                let alpha = self.maybe_zero(alpha);
                let beta = self.p_integer(*p);
                let beta = self.maybe_zero(beta);
                Elem::Quad(QuadElem::new(alpha, beta * c, *d))
            }
            Domain::RatFns => Elem::RatFn(self.ratfn(p_hint)),
            Domain::RatFnRing { p, level } => {
                let f = self.ratfn(*p);
                let Some(v) = composite_valuation(*p, &f).expect("prime") else {
                    return Elem::RatFn(f);
                };
                let t_order = v.coords()[0].to_integer();
                let p_order = v.coords()[1].to_integer();
                let mut g = f;
                if t_order < 0 {
                    g = g.mul(&RatFn::monomial(Rat::one(), -t_order));
                }
                if *level == 0 && t_order <= 0 && p_order < 0 {
                    g = g.mul(&RatFn::constant(prime_power(*p, -p_order)));
                }
                Elem::RatFn(g)
            }
        }
    }

    pub fn elements(&mut self, domain: &Domain, p_hint: i64, count: usize) -> Vec<Elem> {
        (0..count).map(|_| self.element(domain, p_hint)).collect()
    }

    /// Nonzero element.
    pub fn nonzero(&mut self, domain: &Domain, p_hint: i64) -> Elem {
        loop {
            let x = self.element(domain, p_hint);
            if !x.is_zero() {
                return x;
            }
        }
    }

    pub fn small_int(&mut self, bound: i64) -> i64 {
        self.rng.gen_range(-bound..=bound)
    }

    pub fn index(&mut self, len: usize) -> usize {
        self.rng.gen_range(0..len)
    }
}

/// Small elements `a + b√d`, `a, b ∈ [-bound, bound]`, simplest first
/// (`0, √d, -√d, 1, …`).
pub fn small_quad_elements(d: i64, bound: i64) -> Vec<Elem> {
    let mut pairs: Vec<(i64, i64)> = Vec::new();
    for a in -bound..=bound {
        for b in -bound..=bound {
            pairs.push((a, b));
        }
    }
    pairs.sort_by_key(|&(a, b)| (a.abs() + b.abs(), a.abs(), a < 0, b < 0));
    pairs.into_iter().map(|(a, b)| Elem::Quad(QuadElem::from_ints(a, b, d))).collect()
}

/// Splits a seed into a sub-seed for a named suite (FNV-1a of the name
/// mixed with splitmix64).
pub fn sub_seed(seed: u64, name: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in name.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    let mut z = seed ^ h;
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

pub fn is_p_integral(p: i64, r: &Rat) -> bool {
    vp_raw(p, r).is_none_or(|v| v >= 0)
}

pub fn is_negative(r: &Rat) -> bool {
    r.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_samples() {
        let d = Domain::Quad { d: -1 };
        let a = Sampler::new(7).elements(&d, 5, 50);
        let b = Sampler::new(7).elements(&d, 5, 50);
        assert_eq!(a, b);
        assert_ne!(a, Sampler::new(8).elements(&d, 5, 50));
    }

    #[test]
    fn samples_stay_in_their_domain() {
        let domains = [
            Domain::PIntegers { p: 5 },
            Domain::QuadOrder { p: 5, d: -1, c: int(5) },
            Domain::RatFnRing { p: 3, level: 0 },
            Domain::RatFnRing { p: 3, level: 1 },
        ];
        let mut s = Sampler::new(1);
        for d in &domains {
            for x in s.elements(d, 5, 300) {
                assert!(d.contains(&x), "{x} not in {d}");
            }
        }
    }

    #[test]
    fn heights_are_bounded() {
        let mut s = Sampler::new(3);
        for _ in 0..500 {
            let r = s.rational(Some(7));
            assert!(r.numer().abs() <= BigInt::from(HEIGHT));
            assert!(r.denom() <= &BigInt::from(HEIGHT));
        }
    }

    #[test]
    fn sub_seeds_differ_by_name() {
        assert_ne!(sub_seed(1, "axioms"), sub_seed(1, "domination"));
        assert_eq!(sub_seed(1, "axioms"), sub_seed(1, "axioms"));
    }

    #[test]
    fn quad_order_membership() {
        let c = int(5);
        assert!(quad_order_coords(5, &c, &QuadElem::from_ints(1, 5, -1)).is_some());
        assert!(quad_order_coords(5, &c, &QuadElem::from_ints(1, 1, -1)).is_none());
    }
}
