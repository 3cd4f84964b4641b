use quasival::domination::{verify_amalgam_order, MonoidKind};
use quasival::filter::{kummer_equivalence, OvAlgebra};
use quasival::fields::int;
use quasival::oracle::verify_support;
use quasival::quasival::{check_axioms, nadic};
use quasival::sample::{sub_seed, Domain, Sampler};

#[test]
fn same_seed_same_samples() {
    let domain = Domain::Quad { d: -1 };
    let a = Sampler::new(11).elements(&domain, 5, 50);
    let b = Sampler::new(11).elements(&domain, 5, 50);
    let c = Sampler::new(12).elements(&domain, 5, 50);
    assert_eq!(a, b);
    assert_ne!(a, c);
}

#[test]
fn same_seed_same_reports() {
    let w = nadic(12).unwrap();
    assert_eq!(check_axioms(&w, 3, 200), check_axioms(&w, 3, 200));
    let k = MonoidKind::CutMonoid { rank: 2 };
    assert_eq!(
        verify_amalgam_order(k, 5, 300, 50).unwrap(),
        verify_amalgam_order(k, 5, 300, 50).unwrap()
    );
    assert_eq!(
        kummer_equivalence(5, -1, &int(5), 8, 100).unwrap().to_json(),
        kummer_equivalence(5, -1, &int(5), 8, 100).unwrap().to_json()
    );
    let r = OvAlgebra::quotient(5, Some(3)).unwrap();
    assert_eq!(verify_support(&r, 2, 20, 10).unwrap(), verify_support(&r, 2, 20, 10).unwrap());
}

#[test]
fn sub_seeds_separate_names() {
    let names = ["axioms", "exponential", "domination", "cut-oracle", "pims"];
    let seeds: std::collections::BTreeSet<u64> = names.iter().map(|n| sub_seed(1, n)).collect();
    assert_eq!(seeds.len(), names.len());
    assert_eq!(sub_seed(1, "axioms"), sub_seed(1, "axioms"));
    assert_ne!(sub_seed(1, "axioms"), sub_seed(2, "axioms"));
}
