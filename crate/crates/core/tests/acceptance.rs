//! Acceptance suite: one PASS/FAIL line per criterion; exits nonzero if any fails.

mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use intsemi::analyzer::elements::{all_profiles, idempotents, identity};
use intsemi::analyzer::{
    all_subgroups, is_ideal, is_subgroup, maximal_subgroup_at, maximal_subgroups, IdealLattice, Side,
};
use intsemi::catalog::{verify_claims, Verdict};
use intsemi::eval::eval_expression;
use intsemi::fuzzy::{
    exponent_indices, fuzzy_family_build, fuzzy_ideal_check, semilattice_violation, FuzzyFamilySpec, LatticeOp,
};
use intsemi::transform::{self, factorial, IntervalSetX};
use intsemi::{analyze, AnalysisOptions, FiniteSemigroup};
use num_bigint::BigUint;
use serde_json::{json, Value as Json};

use common::{brute_ideals, brute_maximal_subgroup, brute_subgroups, build, random_small_semigroups, spec};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, message: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(message())
    }
}

fn ensure_eq<T: PartialEq + std::fmt::Debug>(what: &str, actual: T, expected: T) -> Outcome {
    ensure(actual == expected, || format!("{what}: expected {expected:?}, got {actual:?}"))
}

fn interval(domain: &str) -> String {
    format!(r#"{{"domain":"{domain}","carrier":{{"type":"interval"}},"operation":"mul"}}"#)
}

fn transformations(kind: &str, n: usize) -> String {
    format!(r#"{{"carrier":{{"type":"{kind}","n":{n}}},"operation":"compose"}}"#)
}

fn report(spec_json: &str) -> Json {
    let s = build(spec_json);
    serde_json::to_value(analyze(&s, &AnalysisOptions::default())).unwrap()
}

fn evaluate(spec_json: &str, expr: Json) -> Result<String, String> {
    eval_expression(&spec(spec_json), &expr).map(|v| v.to_string()).map_err(|e| format!("{spec_json}: {e}"))
}

fn locate(s: &FiniteSemigroup, items: Json) -> Vec<usize> {
    s.locate_all(items.as_array().unwrap()).unwrap()
}

fn transformation_orders() -> Outcome {
    for (n, expected) in [(2, 4), (3, 27), (4, 256)] {
        ensure_eq(&format!("|S(X)| for n = {n}"), build(&transformations("full_transformation", n)).order(), expected)?;
    }
    for n in 1..=5 {
        let order = build(&transformations("permutations", n)).order();
        ensure_eq(&format!("|S_X| for n = {n}"), BigUint::from(order), factorial(n))?;
    }
    Ok(())
}

fn special_spans() -> Outcome {
    let x = IntervalSetX::from_pairs(&[(7, 12), (5, 10), (3, 8)]).map_err(|e| e.to_string())?;
    ensure(x.is_special(), || "the 3-element set is not special".into())?;
    let span = transform::span_special_intervals(&x).map_err(|e| e.to_string())?;
    ensure_eq("span size", span.len(), 9)?;
    let order = transform::special_symmetric_order(&x).map_err(|e| e.to_string())?;
    ensure_eq("order of S(<X>)", order, BigUint::from(387_420_489u64))
}

fn monomial_orders() -> Outcome {
    let cases = [
        ("Z6I", 7, "I", 36),
        ("Z8I", 3, "I", 22),
        ("Z17I", 2, "I", 33),
        ("Z13I", 2, "I", 25),
        ("Z11I", 3, "I", 31),
        ("Z12I", 3, "I", 34),
        ("Z5I", 3, "I", 13),
        ("N(Z3)", 2, "one", 17),
        ("N(Z2)", 3, "one", 10),
        ("N(Z5)", 2, "one", 49),
    ];
    for (domain, k, unit, expected) in cases {
        let json = format!(
            r#"{{"domain":"{domain}","carrier":{{"type":"monomial","k":{k},"unit":"{unit}"}},"operation":"mul"}}"#
        );
        let s = build(&json);
        let size = spec(&json).domain.unwrap().size().unwrap() as usize;
        ensure_eq(&format!("{domain} k={k} enumerated"), s.order(), expected)?;
        ensure_eq(&format!("{domain} k={k} formula"), (size - 1) * k + 1, expected)?;
        ensure(s.associativity_violation().is_none(), || format!("{domain} k={k} is not associative"))?;
    }
    Ok(())
}

fn cyclic_polynomials() -> Outcome {
    let s = build(r#"{"domain":"Z2","carrier":{"type":"polynomial_cyclic","k":4},"operation":"mul"}"#);
    ensure_eq("order", s.order(), 16)?;
    let powers =
        locate(&s, json!([{"coeffs":{"0":"1"}},{"coeffs":{"1":"1"}},{"coeffs":{"2":"1"}},{"coeffs":{"3":"1"}}]));
    let check = is_subgroup(&s, &powers).map_err(|e| e.to_string())?;
    ensure(check.is_subgroup, || format!("{{1, x, x^2, x^3}} is not a subgroup: {check:?}"))?;
    let ideal = locate(&s, json!([{"coeffs":{}},{"coeffs":{"0":"1","1":"1","2":"1","3":"1"}}]));
    let check = is_ideal(&s, &ideal, Side::TwoSided).map_err(|e| e.to_string())?;
    ensure(check.is_ideal, || format!("{{0, 1 + x + x^2 + x^3}} is not an ideal: {check:?}"))
}

fn arithmetic_identities() -> Outcome {
    let mul = |a: &str, b: &str| json!({"op": "mul", "args": [a, b]});
    let mut cases: Vec<(String, Json, &str)> = Vec::new();
    let z15 = interval("Z15I");
    for (a, b, r) in [
        ("6I", "6I", "[0, 6I]"),
        ("10I", "10I", "[0, 10I]"),
        ("11I", "11I", "[0, I]"),
        ("4I", "4I", "[0, I]"),
        ("5I", "6I", "[0, 0]"),
        ("3I", "10I", "[0, 0]"),
    ] {
        cases.push((z15.clone(), mul(a, b), r));
    }
    let z27 = interval("Z27I");
    for (a, b, r) in [("4I", "7I", "[0, I]"), ("2I", "14I", "[0, I]"), ("11I", "5I", "[0, I]")] {
        cases.push((z27.clone(), mul(a, b), r));
    }
    for a in ["3I", "9I", "18I"] {
        let cube = json!({"op": "pow", "args": [a], "exp": 3});
        cases.push((z27.clone(), cube, "[0, 0]"));
    }
    let n5 = interval("N(Z5)");
    for (a, b, r) in [
        ("1+I", "1+I", "[0, 1+3I]"),
        ("2+2I", "2+2I", "[0, 4+2I]"),
        ("1+I", "2+3I", "[0, 2+3I]"),
        ("2+3I", "3+2I", "[0, 1+4I]"),
        ("1+4I", "4+I", "[0, 4+I]"),
    ] {
        cases.push((n5.clone(), mul(a, b), r));
    }
    let n6 = interval("N(Z6)");
    for (a, b, r) in [
        ("3I", "2I", "[0, 0]"),
        ("3", "2", "[0, 0]"),
        ("3I", "3I", "[0, 3I]"),
        ("3+3I", "2+2I", "[0, 0]"),
        ("5I", "5I", "[0, I]"),
    ] {
        cases.push((n6.clone(), mul(a, b), r));
    }
    cases.push((
        r#"{"domain":"Z9","carrier":{"type":"matrix","rows":4,"cols":3},"operation":"add"}"#.into(),
        json!({"op": "add", "args": [
            [["5","1","3"],["2","4","7"],["1","6","5"],["0","2","8"]],
            [["1","2","3"],["4","5","6"],["7","8","1"],["2","4","5"]]]}),
        "[[0, 6], [0, 3], [0, 6]; [0, 6], [0, 0], [0, 4]; [0, 8], [0, 5], [0, 6]; [0, 2], [0, 6], [0, 4]]",
    ));
    cases.push((
        r#"{"domain":"Z+","carrier":{"type":"matrix","rows":2,"cols":2},"operation":"mul"}"#.into(),
        json!({"op": "mul", "args": [[["5","7"],["1","4"]], [["3","1"],["5","8"]]]}),
        "[[0, 50], [0, 61]; [0, 23], [0, 33]]",
    ));
    cases.push((
        r#"{"domain":"Z4","carrier":{"type":"matrix","rows":2,"cols":2},"operation":"mul"}"#.into(),
        json!({"op": "mul", "args": [[["3","1"],["2","2"]], [["1","2"],["2","3"]]]}),
        "[[0, 1], [0, 1]; [0, 2], [0, 2]]",
    ));
    cases.push((
        r#"{"domain":"Z6","carrier":{"type":"polynomial_cyclic","k":7},"operation":"mul"}"#.into(),
        json!({"op": "mul", "args": [{"coeffs":{"0":"2","1":"1","5":"5"}}, {"coeffs":{"0":"4","3":"3"}}]}),
        "[0, 2] + [0, 1]x + [0, 3]x^4 + [0, 2]x^5",
    ));
    cases.push((
        r#"{"domain":"Z+I","carrier":{"type":"polynomial"},"operation":"mul"}"#.into(),
        json!({"op": "mul", "args": [{"coeffs":{"0":"7I","1":"2I","2":"3I"}}, {"coeffs":{"0":"2I","1":"3I","3":"12I"}}]}),
        "[0, 14I] + [0, 25I]x + [0, 12I]x^2 + [0, 93I]x^3 + [0, 24I]x^4 + [0, 36I]x^5",
    ));
    for (spec_json, expr, expected) in &cases {
        let got = evaluate(spec_json, expr.clone())?;
        ensure(got == *expected, || format!("{expr} in {spec_json}: expected {expected}, got {got}"))?;
    }
    let s = build(&z15);
    let idem: BTreeSet<String> = idempotents(&s).into_iter().map(|i| s.render(i)).collect();
    ensure(idem.contains("[0, 6I]") && idem.contains("[0, 10I]"), || format!("Z15I idempotents {idem:?}"))?;
    let nilpotents = report(&z27)["nilpotents"].clone();
    for n in ["[0, 3I]", "[0, 9I]", "[0, 18I]"] {
        ensure(nilpotents.as_array().unwrap().contains(&json!(n)), || format!("{n} missing from {nilpotents}"))?;
    }
    Ok(())
}

fn smarandache_flags() -> Outcome {
    let z12 = report(&interval("Z12I"));
    ensure_eq("Z12I is_s_lagrange", &z12["smarandache"]["is_s_lagrange"], &json!(true))?;
    ensure_eq("Z12I subgroup orders", &z12["subgroups"]["orders"], &json!([1, 2, 4]))?;

    let t4 = report(&transformations("full_transformation", 4));
    ensure_eq("S(X) n=4 is_s_lagrange", &t4["smarandache"]["is_s_lagrange"], &json!(false))?;
    ensure_eq("S(X) n=4 is_s_weakly_lagrange", &t4["smarandache"]["is_s_weakly_lagrange"], &json!(true))?;

    let t5 = report(&transformations("full_transformation", 5));
    for (i, p) in [(0, 2), (1, 3)] {
        let class = &t5["smarandache"]["s_p_sylow"][i];
        ensure_eq("prime", &class["prime"], &json!(p))?;
        let non_sylow = class["non_sylow"].as_array().unwrap();
        ensure(non_sylow.contains(&json!(p)), || format!("order {p} is not classified non-Sylow: {class}"))?;
    }

    for domain in ["Z19", "Z7I", "Z11I", "Z19I", "Z23I"] {
        let r = report(&interval(domain));
        ensure_eq(&format!("{domain} S-Cauchy elements"), &r["smarandache"]["s_cauchy_elements"], &json!([]))?;
    }

    let z23 = report(&interval("Z23I"));
    let two = &z23["smarandache"]["s_p_sylow"][0];
    ensure(two["prime"] == json!(2) && two["non_sylow"] == json!([2]), || format!("Z23I 2-classes: {two}"))?;
    let s = build(&interval("Z23I"));
    let check = is_subgroup(&s, &locate(&s, json!(["I", "22I"]))).map_err(|e| e.to_string())?;
    ensure(check.is_subgroup, || "{I, 22I} is not a subgroup of Z23I".into())?;

    let z6 = report(&interval("Z6"));
    ensure_eq("Z6 hyper witness", &z6["smarandache"]["hyper_witness"], &json!(["[0, 0]", "[0, 1]", "[0, 5]"]))
}

fn support_pattern_ideals() -> Outcome {
    let s = build(r#"{"domain":"N(Z2)","carrier":{"type":"row_matrix","len":3},"operation":"mul"}"#);
    let mut verified = 0;
    for mask in 1u32..7 {
        let members: Vec<usize> = (0..s.order())
            .filter(|&i| {
                let m = s.element(i).as_matrix().unwrap();
                (0..3).all(|c| mask >> c & 1 == 1 || m.get(0, c).is_zero())
            })
            .collect();
        let check = is_ideal(&s, &members, Side::TwoSided).map_err(|e| e.to_string())?;
        ensure(check.is_ideal, || format!("support pattern {mask:03b} is not an ideal: {check:?}"))?;
        verified += 1;
    }
    ensure_eq("ideal support patterns", verified, 6)
}

fn oracle_equivalence() -> Outcome {
    let samples = random_small_semigroups(0x5eed, 50, 12);
    ensure_eq("sample count", samples.len(), 50)?;
    for (json, s) in &samples {
        let ideals: BTreeSet<Vec<usize>> = IdealLattice::new(s).all_ideals(1 << 12).unwrap().into_iter().collect();
        ensure(ideals == brute_ideals(s), || format!("{json}: ideal enumeration disagrees with the subset oracle"))?;

        let profiles = all_profiles(s, identity(s));
        let maximal = maximal_subgroups(s, &profiles);
        let subgroups: BTreeSet<Vec<usize>> = all_subgroups(s, &maximal, 64).unwrap().into_iter().collect();
        ensure(subgroups == brute_subgroups(s), || {
            format!("{json}: subgroup discovery disagrees with the subset oracle")
        })?;
        for e in idempotents(s) {
            let found = maximal_subgroup_at(s, &profiles, e).map_err(|err| err.to_string())?;
            ensure(found == brute_maximal_subgroup(s, e), || {
                format!("{json}: maximal subgroup at {} differs", s.render(e))
            })?;
        }
    }
    Ok(())
}

fn known_discrepancies() -> Outcome {
    let summary = verify_claims(None).map_err(|e| e.to_string())?;
    ensure_eq("unexpected failures", summary.failed, 0)?;
    let known: Vec<&str> =
        summary.results.iter().filter(|r| r.verdict == Verdict::KnownDiscrepancy).map(|r| r.id.as_str()).collect();
    ensure_eq("known discrepancies", known, vec!["ch3-product-1", "ex-2.65", "ex-6.3.16"])?;
    let actual = |id: &str| summary.results.iter().find(|r| r.id == id).unwrap().actual.clone();
    ensure_eq("Z16 closure witness", &actual("ex-2.65")["is_subgroup"], &json!(false))?;
    let product = actual("ch3-product-1");
    ensure(product.as_str().unwrap().contains("[0, 133]x^5"), || format!("x^5 coefficient in {product}"))?;
    let law = actual("ex-6.3.16");
    ensure_eq("equality law", &law["eq"], &json!(false))?;
    ensure_eq("<= law", &law["le"], &json!(true))?;
    ensure_eq("violating x", &law["first_violation"]["x"], &json!("[0, 2]"))?;
    ensure_eq("violating y", &law["first_violation"]["y"], &json!("[0, 2]"))
}

fn fuzzy_layer() -> Outcome {
    for ratio in ["1/2", "1/5", "7/10"] {
        for op in [LatticeOp::Min, LatticeOp::Max] {
            let s = fuzzy_family_build(&FuzzyFamilySpec::new(ratio, 40), op).map_err(|e| e.to_string())?;
            ensure_eq("family order", s.order(), 41)?;
            if let Some(v) = semilattice_violation(&s) {
                return Err(format!("r = {ratio} under {op:?}: {v}"));
            }
        }
    }
    let ideal = |ratio: &str, n_max: u64, op: LatticeOp, lo: u64, hi: u64| -> Outcome {
        let s = fuzzy_family_build(&FuzzyFamilySpec::new(ratio, n_max), op).map_err(|e| e.to_string())?;
        let t = exponent_indices(&s, lo..=hi).map_err(|e| e.to_string())?;
        let check = fuzzy_ideal_check(&s, &t).map_err(|e| e.to_string())?;
        ensure(check.is_ideal, || format!("exponents {lo}..{hi} of {ratio} under {op:?}: {check:?}"))
    };
    ideal("1/5", 40, LatticeOp::Min, 20, 40)?;
    ideal("1/8", 30, LatticeOp::Max, 0, 20)
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("transformation semigroup orders", transformation_orders),
        ("special interval spans", special_spans),
        ("monomial semigroup orders", monomial_orders),
        ("cyclic polynomial semigroup over Z2, k = 4", cyclic_polynomials),
        ("arithmetic identities", arithmetic_identities),
        ("Smarandache flags", smarandache_flags),
        ("coordinate-support ideals", support_pattern_ideals),
        ("subset-oracle equivalence on 50 random semigroups", oracle_equivalence),
        ("known-discrepancy suite", known_discrepancies),
        ("fuzzy layer", fuzzy_layer),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS  criterion {:>2}: {name} ({secs:.2}s)", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL  criterion {:>2}: {name} ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
