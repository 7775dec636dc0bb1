//! Shared helpers: random small semigroups and brute-force subset oracles.
#![allow(dead_code)]

use std::collections::BTreeSet;

use intsemi::{build_semigroup, FiniteSemigroup, SemigroupSpec};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn spec(json: &str) -> SemigroupSpec {
    SemigroupSpec::from_json_str(json).unwrap_or_else(|e| panic!("bad spec {json}: {e}"))
}

pub fn build(json: &str) -> FiniteSemigroup {
    build_semigroup(&spec(json)).unwrap_or_else(|e| panic!("cannot build {json}: {e}"))
}

/// One random spec from the small end of the spec space, as JSON text.
pub fn random_small_spec(rng: &mut ChaCha8Rng) -> String {
    let ops = ["mul", "add", "min", "max"];
    match rng.gen_range(0..10) {
        0 => format!(
            r#"{{"domain":"Z{}","carrier":{{"type":"interval"}},"operation":"{}"}}"#,
            rng.gen_range(2..=12),
            ops.choose(rng).unwrap()
        ),
        1 => format!(
            r#"{{"domain":"Z{}I","carrier":{{"type":"interval"}},"operation":"{}"}}"#,
            rng.gen_range(2..=12),
            ["mul", "add"].choose(rng).unwrap()
        ),
        2 => format!(
            r#"{{"domain":"N(Z{})","carrier":{{"type":"interval"}},"operation":"{}"}}"#,
            rng.gen_range(2..=3),
            ["mul", "add"].choose(rng).unwrap()
        ),
        3 => {
            let (m, len) = *[(2, 2), (2, 3), (3, 2)].choose(rng).unwrap();
            format!(
                r#"{{"domain":"Z{m}","carrier":{{"type":"row_matrix","len":{len}}},"operation":"{}"}}"#,
                ops.choose(rng).unwrap()
            )
        }
        4 => format!(
            r#"{{"domain":"Z{}","carrier":{{"type":"interval"}},"operation":"mul","exclude_zero":true}}"#,
            [2, 3, 5, 7, 11].choose(rng).unwrap()
        ),
        5 => {
            let carrier = *[
                r#"{"type":"full_transformation","n":2}"#,
                r#"{"type":"permutations","n":3}"#,
                r#"{"type":"permutations_and_constants","n":3}"#,
            ]
            .choose(rng)
            .unwrap();
            format!(r#"{{"carrier":{carrier},"operation":"compose"}}"#)
        }
        6 => {
            let (m, k) = *[(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)].choose(rng).unwrap();
            format!(
                r#"{{"domain":"Z{m}","carrier":{{"type":"polynomial_cyclic","k":{k}}},"operation":"{}"}}"#,
                ["mul", "add"].choose(rng).unwrap()
            )
        }
        7 => {
            let (d, k, unit) =
                *[("Z2I", 5, "I"), ("Z3I", 4, "I"), ("Z4I", 3, "I"), ("Z5I", 2, "I"), ("N(Z2)", 3, "one")]
                    .choose(rng)
                    .unwrap();
            format!(r#"{{"domain":"{d}","carrier":{{"type":"monomial","k":{k},"unit":"{unit}"}},"operation":"mul"}}"#)
        }
        8 => format!(
            r#"{{"carrier":{{"type":"fuzzy_family","ratio":"{}","n_max":{}}},"operation":"{}"}}"#,
            ["1/2", "1/3", "2/3", "7/10"].choose(rng).unwrap(),
            rng.gen_range(0..=11),
            ["min", "max"].choose(rng).unwrap()
        ),
        _ => format!(
            r#"{{"domain":"Z{}","carrier":{{"type":"row_matrix","len":{},"constant":true}},"operation":"mul","exclude_zero":{}}}"#,
            [2, 3, 5, 7].choose(rng).unwrap(),
            rng.gen_range(1..=4),
            rng.gen_bool(0.5)
        ),
    }
}

/// `count` random semigroups of order at most `max_order`, deterministic in `seed`.
pub fn random_small_semigroups(seed: u64, count: usize, max_order: usize) -> Vec<(String, FiniteSemigroup)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count {
        attempts += 1;
        assert!(attempts < 100 * count, "spec generator produces too few valid small semigroups");
        let json = random_small_spec(&mut rng);
        if let Ok(s) = build_semigroup(&spec(&json)) {
            if s.order() <= max_order {
                out.push((json, s));
            }
        }
    }
    out
}

fn members(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Every nonempty two-sided ideal, by scanning all subsets.
pub fn brute_ideals(s: &FiniteSemigroup) -> BTreeSet<Vec<usize>> {
    let n = s.order();
    assert!(n <= 16, "subset oracle is limited to order 16");
    let table = s.table_rows();
    (1u32..1 << n)
        .filter(|&mask| {
            (0..n).all(|x| {
                (0..n)
                    .filter(|&t| mask >> t & 1 == 1)
                    .all(|t| mask >> table[x][t] & 1 == 1 && mask >> table[t][x] & 1 == 1)
            })
        })
        .map(|mask| members(mask, n))
        .collect()
}

/// Identity of the subset `mask` if it is a group under the ambient product.
pub fn group_identity(table: &[Vec<usize>], mask: u32) -> Option<usize> {
    let n = table.len();
    let t = members(mask, n);
    if t.iter().any(|&a| t.iter().any(|&b| mask >> table[a][b] & 1 == 0)) {
        return None;
    }
    let e = *t.iter().find(|&&e| t.iter().all(|&x| table[e][x] == x && table[x][e] == x))?;
    t.iter().all(|&x| t.iter().any(|&y| table[x][y] == e && table[y][x] == e)).then_some(e)
}

/// Every subgroup (including singletons), by scanning all subsets.
pub fn brute_subgroups(s: &FiniteSemigroup) -> BTreeSet<Vec<usize>> {
    let n = s.order();
    assert!(n <= 16, "subset oracle is limited to order 16");
    let table = s.table_rows();
    (1u32..1 << n).filter(|&mask| group_identity(&table, mask).is_some()).map(|mask| members(mask, n)).collect()
}

/// The largest subgroup whose identity is `e`, by scanning all subsets.
pub fn brute_maximal_subgroup(s: &FiniteSemigroup, e: usize) -> Vec<usize> {
    let n = s.order();
    let table = s.table_rows();
    (1u32..1 << n)
        .filter(|&mask| group_identity(&table, mask) == Some(e))
        .map(|mask| members(mask, n))
        .max_by_key(Vec::len)
        .unwrap_or_else(|| panic!("{e} is not idempotent"))
}
