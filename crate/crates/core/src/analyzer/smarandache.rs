//! Smarandache predicates: S-semigroup, Lagrange variants, Sylow classes,
//! Cauchy elements, hyper subsemigroups and simplicity.

use serde::Serialize;

use super::build::FiniteSemigroup;
use super::elements::{closure, closure_bounded, MonogenicProfile};
use super::ideals::IdealLattice;
use super::subgroups::{all_subgroups, SubgroupOrders};

/// Largest order the exhaustive subset search accepts.
pub const MAX_SUBSET_ORACLE: usize = 24;

/// Tunable limits for the analyses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct AnalysisOptions {
    /// Maximal subgroups up to this order get their full lattice enumerated.
    pub exact_cap: usize,
    /// Count singleton subgroups in the Smarandache predicates.
    pub include_trivial_subgroups: bool,
    /// Zero-divisor pairs listed in reports.
    pub zero_divisor_list_cap: usize,
    /// Semigroups up to this order are also checked by exhaustive subset search.
    pub subset_oracle_cap: usize,
    /// Ideals are counted up to this bound.
    pub ideal_count_bound: u64,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            exact_cap: super::subgroups::DEFAULT_EXACT_CAP,
            include_trivial_subgroups: false,
            zero_divisor_list_cap: 256,
            subset_oracle_cap: 16,
            ideal_count_bound: 100_000,
        }
    }
}

/// Subgroup orders of one prime, split by how they relate to |S|.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SylowClass {
    pub prime: usize,
    /// `p^a` divides |S|.
    pub sylow: Vec<usize>,
    /// `p` does not divide |S|.
    pub non_sylow: Vec<usize>,
    /// `p` divides |S| but `p^a` does not.
    pub other: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmarandacheFlags {
    pub is_s_semigroup: bool,
    pub is_s_lagrange: bool,
    pub is_s_weakly_lagrange: bool,
    pub s_p_sylow: Vec<SylowClass>,
    pub s_cauchy_elements: Vec<usize>,
    pub has_s_hyper_subsemigroup: bool,
    pub hyper_witness: Option<Vec<usize>>,
    pub is_simple: bool,
    /// A proper subsemigroup of size at least 2, when one exists.
    pub simple_witness: Option<Vec<usize>>,
    pub is_doubly_simple: bool,
    pub notes: Vec<String>,
}

/// `Some((p, a))` when `q = p^a` with `a >= 1`.
pub fn prime_power(q: usize) -> Option<(usize, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d)).expect("q >= 2 has a prime factor");
    let mut r = q;
    let mut a = 0;
    while r.is_multiple_of(p) {
        r /= p;
        a += 1;
    }
    (r == 1).then_some((p, a))
}

/// True when `s` is itself a group.
fn is_group(s: &FiniteSemigroup, maximal: &[(usize, Vec<usize>)]) -> bool {
    maximal.len() == 1 && maximal[0].1.len() == s.order()
}

/// Orders of proper subgroups counted by the predicates.
fn proper_orders(s: &FiniteSemigroup, orders: &SubgroupOrders, group: bool, opts: &AnalysisOptions) -> Vec<usize> {
    let min = if opts.include_trivial_subgroups { 1 } else { 2 };
    orders.orders.iter().copied().filter(|&q| q >= min && !(group && q == s.order())).collect()
}

pub fn smarandache_report(
    s: &FiniteSemigroup,
    profiles: &[MonogenicProfile],
    maximal: &[(usize, Vec<usize>)],
    orders: &SubgroupOrders,
    lattice: &IdealLattice,
    identity: Option<usize>,
    opts: &AnalysisOptions,
) -> SmarandacheFlags {
    let n = s.order();
    let mut notes = Vec::new();
    let group = is_group(s, maximal);
    let proper = proper_orders(s, orders, group, opts);
    let is_s_semigroup = !proper.is_empty();
    let is_s_lagrange = is_s_semigroup && proper.iter().all(|q| n.is_multiple_of(*q));
    let is_s_weakly_lagrange = proper.iter().any(|&q| q >= 2 && n.is_multiple_of(q));
    if !orders.exact {
        notes.push("Lagrange and Sylow predicates use a partial subgroup order set".into());
    }

    let mut s_p_sylow: Vec<SylowClass> = Vec::new();
    for &q in &proper {
        let Some((p, _)) = prime_power(q) else { continue };
        let idx = match s_p_sylow.iter().position(|c| c.prime == p) {
            Some(i) => i,
            None => {
                s_p_sylow.push(SylowClass { prime: p, sylow: vec![], non_sylow: vec![], other: vec![] });
                s_p_sylow.len() - 1
            }
        };
        let class = &mut s_p_sylow[idx];
        if n.is_multiple_of(q) {
            class.sylow.push(q);
        } else if !n.is_multiple_of(p) {
            class.non_sylow.push(q);
        } else {
            class.other.push(q);
        }
    }
    s_p_sylow.sort_by_key(|c| c.prime);

    let s_cauchy_elements: Vec<usize> = match identity {
        Some(_) => (0..n)
            .filter(|&x| matches!(profiles[x].order_rel_identity, Some(t) if t >= 2 && n.is_multiple_of(t)))
            .collect(),
        None => Vec::new(),
    };

    let hyper_witness = hyper_search(s, maximal, group, opts, &mut notes);
    let (is_simple, simple_witness) = simplicity(s, profiles);
    let is_doubly_simple = is_simple && !lattice.has_proper_ideal();

    SmarandacheFlags {
        is_s_semigroup,
        is_s_lagrange,
        is_s_weakly_lagrange,
        s_p_sylow,
        s_cauchy_elements,
        has_s_hyper_subsemigroup: hyper_witness.is_some(),
        hyper_witness,
        is_simple,
        simple_witness,
        is_doubly_simple,
        notes,
    }
}

/// A proper subsemigroup strictly containing a proper subgroup of maximal order.
fn hyper_search(
    s: &FiniteSemigroup,
    maximal: &[(usize, Vec<usize>)],
    group: bool,
    opts: &AnalysisOptions,
    notes: &mut Vec<String>,
) -> Option<Vec<usize>> {
    let n = s.order();
    let candidates: Vec<Vec<usize>> = if group {
        match all_subgroups(s, maximal, opts.exact_cap) {
            Some(subs) => subs.into_iter().filter(|g| g.len() >= 2 && g.len() < n).collect(),
            None => {
                notes.push("hyper subsemigroup search skipped: the group exceeds the exact cap".into());
                return None;
            }
        }
    } else {
        maximal.iter().map(|(_, g)| g.clone()).filter(|g| g.len() >= 2).collect()
    };
    let top = candidates.iter().map(Vec::len).max()?;
    let mut found = None;
    'outer: for g in candidates.iter().filter(|g| g.len() == top) {
        for x in (0..n).filter(|x| g.binary_search(x).is_err()) {
            let mut seed = g.clone();
            seed.push(x);
            if let Some(t) = closure_bounded(s, &seed, n) {
                found = Some(t);
                break 'outer;
            }
        }
    }
    if n <= opts.subset_oracle_cap.min(MAX_SUBSET_ORACLE) {
        let oracle = hyper_by_subsets(s, &candidates, top);
        if oracle != found.is_some() {
            notes.push("hyper subsemigroup closure search disagrees with exhaustive subsets".into());
        }
    }
    found
}

fn hyper_by_subsets(s: &FiniteSemigroup, candidates: &[Vec<usize>], top: usize) -> bool {
    let n = s.order();
    let masks: Vec<u64> =
        candidates.iter().filter(|g| g.len() == top).map(|g| g.iter().fold(0u64, |m, &i| m | (1 << i))).collect();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    (1..full).any(|t| {
        masks.iter().any(|&g| t & g == g && t != g)
            && (0..n)
                .filter(|i| t >> i & 1 == 1)
                .all(|a| (0..n).filter(|j| t >> j & 1 == 1).all(|b| t >> s.op(a, b) & 1 == 1))
    })
}

/// No subsemigroup `T` with `2 <= |T| < |S|`.
///
/// A subsemigroup containing a non-idempotent `x` contains `<x>`, which has at
/// least two elements; otherwise it consists of idempotents and contains the
/// closure of any two of them. Checking those closures is therefore exact.
fn simplicity(s: &FiniteSemigroup, profiles: &[MonogenicProfile]) -> (bool, Option<Vec<usize>>) {
    let n = s.order();
    if n <= 2 {
        return (true, None);
    }
    let mut idempotents = Vec::new();
    for (x, profile) in profiles.iter().enumerate() {
        if profile.idempotent == x {
            idempotents.push(x);
            continue;
        }
        let t = closure(s, &[x]);
        if t.len() < n {
            return (false, Some(t));
        }
    }
    for (i, &e) in idempotents.iter().enumerate() {
        for &f in &idempotents[i + 1..] {
            if let Some(t) = closure_bounded(s, &[e, f], n) {
                return (false, Some(t));
            }
        }
    }
    (true, None)
}
