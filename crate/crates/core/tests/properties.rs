//! Structural invariants checked on randomly drawn inputs.

mod common;

use intsemi::analyzer::elements::{all_profiles, closure, identity};
use intsemi::analyzer::{is_ideal, IdealLattice, Side};
use intsemi::eval::eval_expression;
use intsemi::fuzzy::{
    fuzzy_family_build, fuzzy_ideal_check, is_down_closed, semilattice_violation, FuzzyFamilySpec, LatticeOp,
};
use intsemi::{analyze, build_semigroup, AnalysisOptions, Domain, Interval, SemigroupSpec, TransformationMap};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use common::{random_small_spec, spec};

fn small_semigroup(seed: u64) -> (String, intsemi::FiniteSemigroup) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let json = random_small_spec(&mut rng);
        if let Ok(s) = build_semigroup(&spec(&json)) {
            return (json, s);
        }
    }
}

fn map_strategy() -> impl Strategy<Value = (usize, Vec<usize>, Vec<usize>, Vec<usize>)> {
    (1usize..7).prop_flat_map(|n| {
        let images = prop::collection::vec(0..n, n);
        (Just(n), images.clone(), images.clone(), images)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn built_tables_are_associative(seed in any::<u64>()) {
        let (json, s) = small_semigroup(seed);
        prop_assert!(s.associativity_violation().is_none(), "{}", json);
    }

    #[test]
    fn principal_ideals_are_ideals_and_contain_the_minimal_ideal(seed in any::<u64>()) {
        let (json, s) = small_semigroup(seed);
        let lattice = IdealLattice::new(&s);
        let minimal = lattice.minimal_ideals();
        prop_assert_eq!(minimal.len(), 1, "{}", json);
        for (_, members) in lattice.principal_ideals() {
            prop_assert!(is_ideal(&s, &members, Side::TwoSided).unwrap().is_ideal, "{}", json);
            prop_assert!(minimal[0].iter().all(|x| members.contains(x)), "{}", json);
        }
    }

    #[test]
    fn closures_are_closed_and_contain_their_seed(seed in any::<u64>(), picks in prop::collection::vec(any::<usize>(), 1..4)) {
        let (json, s) = small_semigroup(seed);
        let seed_set: Vec<usize> = picks.iter().map(|p| p % s.order()).collect();
        let c = closure(&s, &seed_set);
        prop_assert!(seed_set.iter().all(|x| c.contains(x)), "{}", json);
        for &a in &c {
            for &b in &c {
                prop_assert!(c.contains(&s.op(a, b)), "{}", json);
            }
        }
    }

    #[test]
    fn monogenic_profiles_describe_the_power_sequence(seed in any::<u64>()) {
        let (json, s) = small_semigroup(seed);
        for (x, p) in all_profiles(&s, identity(&s)).iter().enumerate() {
            let i = p.index as u64;
            prop_assert_eq!(s.pow(x, i + p.period as u64), s.pow(x, i), "{}", json);
            prop_assert_eq!(s.op(p.idempotent, p.idempotent), p.idempotent, "{}", json);
        }
    }

    #[test]
    fn composition_is_associative_and_powers_iterate((n, f, g, h) in map_strategy(), k in 1u64..8) {
        let f = TransformationMap::new(f).unwrap();
        let g = TransformationMap::new(g).unwrap();
        let h = TransformationMap::new(h).unwrap();
        prop_assert_eq!(f.compose(&g.compose(&h).unwrap()).unwrap(), f.compose(&g).unwrap().compose(&h).unwrap());
        for i in 0..n {
            prop_assert_eq!(f.compose(&g).unwrap().apply(i), f.apply(g.apply(i)));
        }
        let mut iterated = f.clone();
        for _ in 1..k {
            iterated = iterated.compose(&f).unwrap();
        }
        prop_assert_eq!(f.pow(k), iterated);
    }

    #[test]
    fn fuzzy_families_are_semilattices(p in 1u64..10, extra in 1u64..10, n_max in 0u64..30) {
        let ratio = format!("{}/{}", p, p + extra);
        for op in [LatticeOp::Min, LatticeOp::Max] {
            let s = fuzzy_family_build(&FuzzyFamilySpec::new(&ratio, n_max), op).unwrap();
            prop_assert_eq!(s.order() as u64, n_max + 1);
            prop_assert!(semilattice_violation(&s).is_none());
        }
    }

    #[test]
    fn min_family_ideals_are_the_down_closed_sets(n_max in 1u64..12, mask in any::<u16>()) {
        let s = fuzzy_family_build(&FuzzyFamilySpec::new("2/3", n_max), LatticeOp::Min).unwrap();
        let t: Vec<usize> = (0..s.order()).filter(|i| mask >> i & 1 == 1).collect();
        prop_assume!(!t.is_empty());
        prop_assert_eq!(fuzzy_ideal_check(&s, &t).unwrap().is_ideal, is_down_closed(&s, &t).unwrap());
    }

    #[test]
    fn neutrosophic_product_distributes_and_commutes(m in 2u64..15, v in prop::collection::vec(0u64..100, 6)) {
        let spec_json = format!(r#"{{"domain":"N(Z{m})","carrier":{{"type":"interval"}},"operation":"mul"}}"#);
        let sp = spec(&spec_json);
        let el = |i: usize| json!(format!("{}+{}I", v[2 * i] % m, v[2 * i + 1] % m));
        let (a, b, c) = (el(0), el(1), el(2));
        let run = |e: serde_json::Value| eval_expression(&sp, &e).unwrap().to_string();
        prop_assert_eq!(
            run(json!({"op": "mul", "args": [a.clone(), {"op": "add", "args": [b.clone(), c.clone()]}]})),
            run(json!({"op": "add", "args": [{"op": "mul", "args": [a.clone(), b.clone()]}, {"op": "mul", "args": [a.clone(), c.clone()]}]}))
        );
        prop_assert_eq!(run(json!({"op": "mul", "args": [a.clone(), b.clone()]})), run(json!({"op": "mul", "args": [b, a]})));
    }

    #[test]
    fn specs_round_trip_through_json(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let original = spec(&random_small_spec(&mut rng));
        let text = serde_json::to_string(&original).unwrap();
        prop_assert_eq!(SemigroupSpec::from_json_str(&text).unwrap(), original);
    }
}

#[test]
fn interval_renderings_parse_back() {
    for domain in ["Z12", "Z9I", "N(Z4)", "[0,1]"] {
        let d: Domain = domain.parse().unwrap();
        let elements = if d.is_finite() {
            d.enumerate().unwrap()
        } else {
            ["0", "1", "1/2", "3/7"].iter().map(|t| d.parse_element(t).unwrap()).collect()
        };
        for x in elements {
            let iv = Interval::new(d, x).unwrap();
            assert_eq!(Interval::parse(d, &iv.to_string()).unwrap(), iv, "{domain}: {iv}");
        }
    }
}

#[test]
fn reports_are_deterministic_and_reproducible_from_their_spec() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let json = random_small_spec(&mut rng);
        let Ok(s) = build_semigroup(&spec(&json)) else { continue };
        let opts = AnalysisOptions::default();
        let first = analyze(&s, &opts);
        assert_eq!(first.to_json(), analyze(&s, &opts).to_json(), "{json}");
        let embedded = first.spec.clone().expect("reports embed their spec");
        let again = analyze(&build_semigroup(&embedded).unwrap(), &opts);
        assert_eq!(first.to_json(), again.to_json(), "{json}");
    }
}
