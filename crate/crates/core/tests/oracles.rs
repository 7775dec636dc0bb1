//! Library results against independent brute-force or closed-form oracles.

mod common;

use std::collections::BTreeSet;

use intsemi::analyzer::elements::{all_profiles, idempotents, identity};
use intsemi::analyzer::{all_subgroups, maximal_subgroup_at, maximal_subgroups, IdealLattice};
use intsemi::eval::eval_expression;
use intsemi::transform::{enumerate_transformations, factorial, transform_count};
use intsemi::{Element, FiniteSemigroup, TransformKind, Value};
use num_bigint::BigUint;
use proptest::prelude::*;
use serde_json::{json, Value as Json};

use common::{brute_ideals, brute_maximal_subgroup, brute_subgroups, build, spec};

fn poly_json(coeffs: &[u64]) -> Json {
    let map: serde_json::Map<String, Json> =
        coeffs.iter().enumerate().map(|(e, c)| (e.to_string(), json!(c.to_string()))).collect();
    json!({ "coeffs": map })
}

fn matrix_json(n: usize, entries: &[u64]) -> Json {
    json!((0..n).map(|r| (0..n).map(|c| entries[r * n + c].to_string()).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn eval(spec_json: &str, expr: Json) -> Value {
    eval_expression(&spec(spec_json), &expr).unwrap()
}

fn upper_int(v: &intsemi::Interval) -> Element {
    v.upper().clone()
}

/// Units of the local monoid eSe; these form the maximal subgroup at `e`.
fn local_monoid_units(s: &FiniteSemigroup, e: usize) -> Vec<usize> {
    let local: BTreeSet<usize> = (0..s.order()).map(|x| s.op(s.op(e, x), e)).collect();
    local.iter().copied().filter(|&u| local.iter().any(|&v| s.op(u, v) == e && s.op(v, u) == e)).collect()
}

fn leibniz(n: usize, m: &[i128]) -> i128 {
    fn perms(items: Vec<usize>) -> Vec<Vec<usize>> {
        if items.len() <= 1 {
            return vec![items];
        }
        let mut out = Vec::new();
        for i in 0..items.len() {
            let mut rest = items.clone();
            let head = rest.remove(i);
            for mut p in perms(rest) {
                p.insert(0, head);
                out.push(p);
            }
        }
        out
    }
    perms((0..n).collect())
        .into_iter()
        .map(|p| {
            let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            let sign = if inversions % 2 == 0 { 1 } else { -1 };
            sign * (0..n).map(|r| m[r * n + p[r]]).product::<i128>()
        })
        .sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polynomial_product_matches_convolution(
        a in prop::collection::vec(0u64..1000, 1..8),
        b in prop::collection::vec(0u64..1000, 1..8),
    ) {
        let product = eval(
            r#"{"domain":"Z+","carrier":{"type":"polynomial"},"operation":"mul"}"#,
            json!({"op": "mul", "args": [poly_json(&a), poly_json(&b)]}),
        );
        let p = product.as_polynomial().unwrap();
        let mut expected = vec![0u64; a.len() + b.len()];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                expected[i + j] += x * y;
            }
        }
        for (e, c) in expected.iter().enumerate() {
            prop_assert_eq!(upper_int(&p.coeff(e as u64)), Element::int(*c));
        }
    }

    #[test]
    fn cyclic_product_matches_folded_convolution(
        m in 2u64..13,
        k in 1usize..7,
        seed_a in prop::collection::vec(0u64..100, 7),
        seed_b in prop::collection::vec(0u64..100, 7),
    ) {
        let a: Vec<u64> = seed_a[..k].iter().map(|x| x % m).collect();
        let b: Vec<u64> = seed_b[..k].iter().map(|x| x % m).collect();
        let spec_json = format!(r#"{{"domain":"Z{m}","carrier":{{"type":"polynomial_cyclic","k":{k}}},"operation":"mul"}}"#);
        let product = eval(&spec_json, json!({"op": "mul", "args": [poly_json(&a), poly_json(&b)]}));
        let p = product.as_polynomial().unwrap();
        let mut expected = vec![0u64; k];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                expected[(i + j) % k] = (expected[(i + j) % k] + x * y) % m;
            }
        }
        for (e, c) in expected.iter().enumerate() {
            prop_assert_eq!(upper_int(&p.coeff(e as u64)), Element::residue(*c, 0));
        }
    }

    #[test]
    fn modular_matrix_product_matches_triple_loop(
        m in 2u64..20,
        n in 1usize..4,
        seed in prop::collection::vec(0u64..1000, 18),
    ) {
        let a: Vec<u64> = seed[..n * n].iter().map(|x| x % m).collect();
        let b: Vec<u64> = seed[9..9 + n * n].iter().map(|x| x % m).collect();
        let spec_json = format!(r#"{{"domain":"Z{m}","carrier":{{"type":"matrix","rows":{n},"cols":{n}}},"operation":"mul"}}"#);
        let product = eval(&spec_json, json!({"op": "mul", "args": [matrix_json(n, &a), matrix_json(n, &b)]}));
        let p = product.as_matrix().unwrap();
        for r in 0..n {
            for c in 0..n {
                let want = (0..n).map(|t| a[r * n + t] * b[t * n + c]).sum::<u64>() % m;
                prop_assert_eq!(upper_int(p.get(r, c)), Element::residue(want, 0));
            }
        }
    }

    #[test]
    fn determinant_matches_leibniz(
        m in 2u64..20,
        n in 1usize..4,
        seed in prop::collection::vec(0u64..50, 9),
    ) {
        let entries = &seed[..n * n];
        let signed = leibniz(n, &entries.iter().map(|&x| x as i128).collect::<Vec<_>>());

        let over_z = format!(r#"{{"domain":"Z+","carrier":{{"type":"matrix","rows":{n},"cols":{n}}},"operation":"mul"}}"#);
        let det = eval(&over_z, json!({"op": "det", "args": [matrix_json(n, entries)]}));
        prop_assert_eq!(upper_int(det.as_interval().unwrap()), Element::int(signed.unsigned_abs() as u64));

        let reduced: Vec<u64> = entries.iter().map(|x| x % m).collect();
        let over_zm = format!(r#"{{"domain":"Z{m}","carrier":{{"type":"matrix","rows":{n},"cols":{n}}},"operation":"mul"}}"#);
        let det = eval(&over_zm, json!({"op": "det", "args": [matrix_json(n, &reduced)]}));
        let want = signed.rem_euclid(m as i128) as u64;
        prop_assert_eq!(upper_int(det.as_interval().unwrap()), Element::residue(want, 0));
    }
}

#[test]
fn maximal_subgroups_are_units_of_local_monoids() {
    let cases = [
        r#"{"carrier":{"type":"full_transformation","n":3},"operation":"compose"}"#,
        r#"{"carrier":{"type":"full_transformation","n":4},"operation":"compose"}"#,
        r#"{"domain":"Z60","carrier":{"type":"interval"},"operation":"mul"}"#,
        r#"{"domain":"Z36I","carrier":{"type":"interval"},"operation":"mul"}"#,
        r#"{"domain":"N(Z6)","carrier":{"type":"interval"},"operation":"mul"}"#,
        r#"{"domain":"Z2","carrier":{"type":"matrix","rows":2,"cols":2},"operation":"mul"}"#,
        r#"{"domain":"Z3","carrier":{"type":"polynomial_cyclic","k":3},"operation":"mul"}"#,
    ];
    for json in cases {
        let s = build(json);
        let profiles = all_profiles(&s, identity(&s));
        for e in idempotents(&s) {
            let g = maximal_subgroup_at(&s, &profiles, e).unwrap();
            assert_eq!(g, local_monoid_units(&s, e), "{json} at {}", s.render(e));
        }
    }
}

#[test]
fn ideals_and_subgroups_match_subset_search_at_order_sixteen() {
    let cases = [
        r#"{"domain":"Z2","carrier":{"type":"matrix","rows":2,"cols":2},"operation":"mul"}"#,
        r#"{"domain":"Z16","carrier":{"type":"interval"},"operation":"mul"}"#,
        r#"{"domain":"Z2","carrier":{"type":"polynomial_cyclic","k":4},"operation":"mul"}"#,
        r#"{"domain":"Z4","carrier":{"type":"row_matrix","len":2},"operation":"mul"}"#,
        r#"{"domain":"N(Z4)","carrier":{"type":"interval"},"operation":"mul"}"#,
    ];
    for json in cases {
        let s = build(json);
        assert_eq!(s.order(), 16, "{json}");
        let ideals: BTreeSet<Vec<usize>> = IdealLattice::new(&s).all_ideals(1 << 16).unwrap().into_iter().collect();
        assert_eq!(ideals, brute_ideals(&s), "{json}");
        let profiles = all_profiles(&s, identity(&s));
        let maximal = maximal_subgroups(&s, &profiles);
        let subgroups: BTreeSet<Vec<usize>> = all_subgroups(&s, &maximal, 64).unwrap().into_iter().collect();
        assert_eq!(subgroups, brute_subgroups(&s), "{json}");
        for e in idempotents(&s) {
            assert_eq!(maximal_subgroup_at(&s, &profiles, e).unwrap(), brute_maximal_subgroup(&s, e), "{json}");
        }
    }
}

#[test]
fn transformation_counts_match_enumeration() {
    for n in 1..=5usize {
        let all = enumerate_transformations(n, TransformKind::All, 10_000).unwrap();
        assert_eq!(BigUint::from(all.len()), BigUint::from(n).pow(n as u32));
        assert_eq!(BigUint::from(all.len()), transform_count(n, TransformKind::All));
        let bijections = enumerate_transformations(n, TransformKind::Bijections, 10_000).unwrap();
        assert_eq!(BigUint::from(bijections.len()), factorial(n));
        let with_constants = enumerate_transformations(n, TransformKind::BijectionsAndConstants, 10_000).unwrap();
        let constants = if n == 1 { 0 } else { n };
        assert_eq!(BigUint::from(with_constants.len()), factorial(n) + BigUint::from(constants));
        assert_eq!(BigUint::from(with_constants.len()), transform_count(n, TransformKind::BijectionsAndConstants));
    }
}

#[test]
fn monomial_orders_match_closed_form() {
    for domain in ["Z2I", "Z3I", "Z4I", "Z6I", "Z9I", "N(Z2)", "N(Z3)"] {
        let unit = if domain.starts_with('N') { "one" } else { "I" };
        for k in 1..=6usize {
            let json = format!(
                r#"{{"domain":"{domain}","carrier":{{"type":"monomial","k":{k},"unit":"{unit}"}},"operation":"mul"}}"#
            );
            let s = build(&json);
            let d = spec(&json).domain.unwrap().size().unwrap() as usize;
            assert_eq!(s.order(), (d - 1) * k + 1, "{json}");
            assert!(s.associativity_violation().is_none(), "{json}");
        }
    }
}

#[test]
fn modular_interval_special_elements_match_number_theory() {
    for m in 2u64..=40 {
        let s = build(&format!(r#"{{"domain":"Z{m}","carrier":{{"type":"interval"}},"operation":"mul"}}"#));
        let residue = |i: usize| -> u64 {
            let v = s.element(i).as_interval().unwrap().upper().real_part();
            v.to_integer().try_into().unwrap()
        };
        let gcd = |mut a: u64, mut b: u64| {
            while b != 0 {
                (a, b) = (b, a % b);
            }
            a
        };
        let idem: Vec<u64> = idempotents(&s).into_iter().map(residue).collect();
        let want: Vec<u64> = (0..m).filter(|x| x * x % m == *x).collect();
        assert_eq!(idem, want, "idempotents of Z{m}");
        let profiles = all_profiles(&s, identity(&s));
        let one = identity(&s).unwrap();
        let units: Vec<u64> = maximal_subgroup_at(&s, &profiles, one).unwrap().into_iter().map(residue).collect();
        let want: Vec<u64> = (1..m).filter(|&x| gcd(x, m) == 1).collect();
        assert_eq!(units, want, "units of Z{m}");
    }
}
