use std::cmp::Ordering;

use proptest::prelude::*;
use quasival::cut::Cut;
use quasival::domination::{amalgam_cmp, AmalgamElem, MonoidKind};
use quasival::fields::{rat, Elem, QuadElem};
use quasival::filter::{filter_qv_extend, OvAlgebra};
use quasival::ordered::{DivElem, GroupElem, Q};
use quasival::quasival::{kummer, nadic};
use quasival::valuation::{extend_valuation, Valuation};
use quasival::value::MonoidValue;

fn cut(rank: usize) -> impl Strategy<Value = Cut> {
    (prop::collection::vec(-6i64..=6, rank), 0..=rank).prop_map(move |(g, level)| {
        if level == rank {
            // Level k is the whole group: use a principal cut instead.
            Cut::principal(GroupElem::new(g))
        } else {
            Cut::new(GroupElem::new(g), level).unwrap()
        }
    })
}

fn nonzero_rat() -> impl Strategy<Value = Elem> {
    (-300i64..=300, 1i64..=300)
        .prop_filter("nonzero", |(n, _)| *n != 0)
        .prop_map(|(n, d)| Elem::Rat(rat(n, d)))
}

fn gaussian() -> impl Strategy<Value = Elem> {
    (-40i64..=40, -40i64..=40, 1i64..=30).prop_map(|(a, b, den)| {
        Elem::Quad(QuadElem::new(rat(a, den), rat(b, den), -1))
    })
}

fn ge(a: &MonoidValue, b: &MonoidValue) -> bool {
    a.try_cmp(b).unwrap() != Ordering::Less
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn cut_sum_is_commutative_and_associative(a in cut(2), b in cut(2), c in cut(2)) {
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(a.add(&b).unwrap().add(&c).unwrap(), a.add(&b.add(&c).unwrap()).unwrap());
        prop_assert_eq!(a.add(&Cut::zero(2)).unwrap(), a);
    }

    #[test]
    fn cut_order_is_total_and_translation_invariant(a in cut(2), b in cut(2), c in cut(2)) {
        let ab = a.cmp_cut(&b).unwrap();
        prop_assert_eq!(ab.reverse(), b.cmp_cut(&a).unwrap());
        if ab == Ordering::Equal {
            prop_assert_eq!(&a, &b);
        }
        if ab != Ordering::Greater {
            let (ac, bc) = (a.add(&c).unwrap(), b.add(&c).unwrap());
            prop_assert_ne!(ac.cmp_cut(&bc).unwrap(), Ordering::Greater);
        }
    }

    #[test]
    fn cut_multiples_are_repeated_sums(a in cut(2), n in 1u64..=5) {
        let mut sum = a.clone();
        for _ in 1..n {
            sum = sum.add(&a).unwrap();
        }
        prop_assert_eq!(a.scalar(n).unwrap(), sum);
    }

    #[test]
    fn p_adic_valuation_laws(x in nonzero_rat(), y in nonzero_rat(), p in prop::sample::select(vec![2i64, 3, 5, 7])) {
        let v = Valuation::p_adic(p).unwrap();
        let (vx, vy) = (v.eval(&x).unwrap(), v.eval(&y).unwrap());
        prop_assert_eq!(v.eval(&x.try_mul(&y).unwrap()).unwrap(), vx.try_add(&vy).unwrap());
        prop_assert!(ge(&v.eval(&x.try_add(&y).unwrap()).unwrap(), &vx.min(&vy).unwrap()));
    }

    #[test]
    fn extensions_restrict_to_v_p(x in nonzero_rat(), d in prop::sample::select(vec![-1i64, 2, 5])) {
        let base = Valuation::p_adic(5).unwrap().eval(&x).unwrap();
        let Elem::Rat(r) = &x else { unreachable!() };
        let lifted = Elem::Quad(QuadElem::scalar(r.clone(), d));
        for u in extend_valuation(5, d).unwrap() {
            prop_assert_eq!(u.eval(&lifted).unwrap(), base.clone());
        }
    }

    #[test]
    fn nadic_is_a_quasi_valuation(x in nonzero_rat(), y in nonzero_rat(), n in prop::sample::select(vec![6i64, 10, 12])) {
        let w = nadic(n).unwrap();
        let (wx, wy) = (w.eval(&x).unwrap(), w.eval(&y).unwrap());
        prop_assert!(ge(&w.eval(&x.try_mul(&y).unwrap()).unwrap(), &wx.try_add(&wy).unwrap()));
        prop_assert!(ge(&w.eval(&x.try_add(&y).unwrap()).unwrap(), &wx.min(&wy).unwrap()));
    }

    #[test]
    fn filter_matches_kummer_on_gaussians(x in gaussian()) {
        let w = filter_qv_extend(&OvAlgebra::quad_order(5, -1, rat(5, 1)).unwrap()).unwrap();
        let k = kummer(5, Q::from(1), -1).unwrap();
        let expected = match k.eval(&x).unwrap() {
            MonoidValue::Div(d) => MonoidValue::principal(d.to_group().unwrap()),
            other => other,
        };
        prop_assert_eq!(w.eval(&x).unwrap(), expected);
    }

    #[test]
    fn amalgam_order_is_antisymmetric(a in cut(1), num in -20i64..=20, den in 1i64..=4) {
        let kind = MonoidKind::CutMonoid { rank: 1 };
        let m = AmalgamElem::from_m(kind, MonoidValue::Cut(a)).unwrap();
        let q = AmalgamElem::from_div(kind, DivElem::new(vec![Q::new(num, den)])).unwrap();
        prop_assert_eq!(amalgam_cmp(&m, &q).unwrap(), amalgam_cmp(&q, &m).unwrap().reverse());
        prop_assert_eq!(amalgam_cmp(&m, &m).unwrap(), Ordering::Equal);
    }
}
