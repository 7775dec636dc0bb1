//! Maximal subgroups and subgroup lattices.

use std::collections::{BTreeSet, HashSet};

use fixedbitset::FixedBitSet;

use super::build::FiniteSemigroup;
use super::elements::{is_subgroup, MonogenicProfile};
use crate::error::{Error, Result};

/// Default bound on maximal-subgroup size for exact lattice enumeration.
pub const DEFAULT_EXACT_CAP: usize = 48;

/// The maximal subgroup with identity `e`: elements of index 1 whose idempotent power is `e`.
pub fn maximal_subgroup_at(s: &FiniteSemigroup, profiles: &[MonogenicProfile], e: usize) -> Result<Vec<usize>> {
    if e >= s.order() || s.op(e, e) != e {
        return Err(Error::InvalidInput(format!(
            "{} is not an idempotent",
            if e < s.order() { s.render(e) } else { e.to_string() }
        )));
    }
    let group: Vec<usize> = (0..s.order()).filter(|&x| profiles[x].index == 1 && profiles[x].idempotent == e).collect();
    let check = is_subgroup(s, &group)?;
    if !check.is_subgroup || check.identity != Some(e) {
        return Err(Error::Closure(format!("maximal subgroup at {} failed the group axioms", s.render(e))));
    }
    Ok(group)
}

/// Every maximal subgroup as (idempotent, members), in idempotent order.
pub fn maximal_subgroups(s: &FiniteSemigroup, profiles: &[MonogenicProfile]) -> Vec<(usize, Vec<usize>)> {
    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); s.order()];
    for (x, p) in profiles.iter().enumerate() {
        if p.index == 1 {
            groups[p.idempotent].push(x);
        }
    }
    groups.into_iter().enumerate().filter(|(_, g)| !g.is_empty()).collect()
}

/// All subgroups of the group `h` (including the trivial one), by incremental generation.
pub fn subgroups_of_group(s: &FiniteSemigroup, h: &[usize]) -> Vec<Vec<usize>> {
    let local: Vec<usize> = h.to_vec();
    let k = local.len();
    let pos = |x: usize| local.binary_search(&x).expect("group is closed");
    let table: Vec<usize> =
        (0..k).flat_map(|a| (0..k).map(move |b| (a, b))).map(|(a, b)| pos(s.op(local[a], local[b]))).collect();
    let e_local = (0..k).find(|&e| table[e * k + e] == e).expect("groups contain an identity");
    let generate = |gens: &FixedBitSet| -> FixedBitSet {
        let mut set = FixedBitSet::with_capacity(k);
        set.insert(e_local);
        let mut list = vec![e_local];
        let gens: Vec<usize> = gens.ones().collect();
        let mut i = 0;
        while i < list.len() {
            let a = list[i];
            for &g in &gens {
                let c = table[a * k + g];
                if !set.put(c) {
                    list.push(c);
                }
            }
            i += 1;
        }
        set
    };
    let mut trivial = FixedBitSet::with_capacity(k);
    trivial.insert(e_local);
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    seen.insert(trivial.clone());
    let mut queue = vec![trivial];
    while let Some(sub) = queue.pop() {
        for g in 0..k {
            if sub.contains(g) {
                continue;
            }
            let mut gens = sub.clone();
            gens.insert(g);
            let next = generate(&gens);
            if seen.insert(next.clone()) {
                queue.push(next);
            }
        }
    }
    let mut out: Vec<Vec<usize>> = seen.into_iter().map(|b| b.ones().map(|i| local[i]).collect()).collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Orders of subgroups, with an exactness flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupOrders {
    pub orders: BTreeSet<usize>,
    pub exact: bool,
    pub notes: Vec<String>,
}

/// Cyclic and maximal subgroup orders always; full lattices when every maximal subgroup fits `exact_cap`.
pub fn subgroup_order_set(
    s: &FiniteSemigroup,
    profiles: &[MonogenicProfile],
    maximal: &[(usize, Vec<usize>)],
    exact_cap: usize,
) -> SubgroupOrders {
    let mut orders: BTreeSet<usize> = profiles.iter().map(|p| p.period).collect();
    let mut exact = true;
    let mut notes = Vec::new();
    for (e, group) in maximal {
        orders.insert(group.len());
        if group.len() <= exact_cap {
            orders.extend(subgroups_of_group(s, group).iter().map(Vec::len));
        } else {
            exact = false;
            notes.push(format!(
                "maximal subgroup at {} has order {} above the exact cap {exact_cap}; only cyclic and maximal subgroup orders are included",
                s.render(*e),
                group.len()
            ));
        }
    }
    SubgroupOrders { orders, exact, notes }
}

/// Every subgroup of `s`, or `None` if some maximal subgroup exceeds `exact_cap`.
pub fn all_subgroups(
    s: &FiniteSemigroup,
    maximal: &[(usize, Vec<usize>)],
    exact_cap: usize,
) -> Option<Vec<Vec<usize>>> {
    if maximal.iter().any(|(_, g)| g.len() > exact_cap) {
        return None;
    }
    let mut out: Vec<Vec<usize>> = maximal.iter().flat_map(|(_, g)| subgroups_of_group(s, g)).collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Some(out)
}
