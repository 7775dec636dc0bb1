//! Element-level analyses: powers, special elements, closures and membership checks.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use super::build::FiniteSemigroup;
use crate::error::{Error, Result};

/// Index and period of the cyclic subsemigroup generated by one element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MonogenicProfile {
    /// Least `i >= 1` with `x^(i+p) = x^i` for some `p >= 1`.
    pub index: usize,
    /// Least such `p`.
    pub period: usize,
    /// Least `t >= 1` with `x^t` equal to the identity, when reached.
    pub order_rel_identity: Option<usize>,
    /// The unique idempotent power of `x`.
    pub idempotent: usize,
}

/// Computes the monogenic profile of `x`.
pub fn monogenic_profile(s: &FiniteSemigroup, x: usize, identity: Option<usize>) -> MonogenicProfile {
    let mut seen: HashMap<usize, usize> = HashMap::new();
    let mut powers = Vec::new();
    let mut current = x;
    let mut k = 1;
    let (index, period) = loop {
        if let Some(&first) = seen.get(&current) {
            break (first, k - first);
        }
        seen.insert(current, k);
        powers.push(current);
        current = s.op(current, x);
        k += 1;
    };
    let m = period * index.div_ceil(period);
    let idempotent = powers[m - 1];
    let order_rel_identity = identity.and_then(|e| powers.iter().position(|&p| p == e).map(|t| t + 1));
    MonogenicProfile { index, period, order_rel_identity, idempotent }
}

pub fn all_profiles(s: &FiniteSemigroup, identity: Option<usize>) -> Vec<MonogenicProfile> {
    (0..s.order()).map(|x| monogenic_profile(s, x, identity)).collect()
}

/// The two-sided identity, if any.
pub fn identity(s: &FiniteSemigroup) -> Option<usize> {
    let n = s.order();
    (0..n).find(|&e| (0..n).all(|x| s.op(e, x) == x && s.op(x, e) == x))
}

/// The two-sided zero, if any.
pub fn zero(s: &FiniteSemigroup) -> Option<usize> {
    let n = s.order();
    (0..n).find(|&z| (0..n).all(|x| s.op(z, x) == z && s.op(x, z) == z))
}

pub fn idempotents(s: &FiniteSemigroup) -> Vec<usize> {
    (0..s.order()).filter(|&x| s.op(x, x) == x).collect()
}

/// Idempotents, nilpotents, units and zero divisors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialElements {
    pub identity: Option<usize>,
    pub zero: Option<usize>,
    pub idempotents: Vec<usize>,
    /// Non-zero elements with some power equal to zero, with the least such exponent.
    pub nilpotents: Vec<(usize, usize)>,
    /// Units with an inverse.
    pub units: Vec<(usize, usize)>,
    /// Ordered pairs `(x, y)` of non-zero elements with `xy = 0`, up to the listing cap.
    pub zero_divisor_pairs: Vec<(usize, usize)>,
    pub zero_divisor_total: u64,
    pub notes: Vec<String>,
}

pub fn special_elements(s: &FiniteSemigroup, profiles: &[MonogenicProfile], list_cap: usize) -> SpecialElements {
    let n = s.order();
    let identity = identity(s);
    let zero = zero(s);
    let mut notes = Vec::new();
    let idempotents = idempotents(s);
    let mut nilpotents = Vec::new();
    let mut zero_divisor_pairs = Vec::new();
    let mut zero_divisor_total = 0u64;
    match zero {
        Some(z) => {
            for x in (0..n).filter(|&x| x != z) {
                let p = &profiles[x];
                if p.idempotent == z && p.period == 1 {
                    nilpotents.push((x, p.index));
                }
            }
            for x in (0..n).filter(|&x| x != z) {
                for y in (0..n).filter(|&y| y != z) {
                    if s.op(x, y) == z {
                        zero_divisor_total += 1;
                        if zero_divisor_pairs.len() < list_cap {
                            zero_divisor_pairs.push((x, y));
                        }
                    }
                }
            }
            if zero_divisor_total as usize > zero_divisor_pairs.len() {
                notes.push(format!("zero-divisor pairs listed up to {list_cap} of {zero_divisor_total}"));
            }
        }
        None => notes.push("no zero element: nilpotents and zero divisors are empty".into()),
    }
    let mut units = Vec::new();
    match identity {
        Some(e) => {
            for (x, profile) in profiles.iter().enumerate() {
                if let Some(t) = profile.order_rel_identity {
                    let inverse = if t == 1 { e } else { s.pow(x, (t - 1) as u64) };
                    units.push((x, inverse));
                }
            }
        }
        None => notes.push("no identity element: units and S-Cauchy elements are empty".into()),
    }
    SpecialElements { identity, zero, idempotents, nilpotents, units, zero_divisor_pairs, zero_divisor_total, notes }
}

/// Least subset containing `seed` and closed under the operation, sorted.
pub fn closure(s: &FiniteSemigroup, seed: &[usize]) -> Vec<usize> {
    closure_bounded(s, seed, usize::MAX).expect("unbounded closure always completes")
}

/// Like [`closure`], but gives up with `None` once the set reaches `limit` elements.
pub fn closure_bounded(s: &FiniteSemigroup, seed: &[usize], limit: usize) -> Option<Vec<usize>> {
    let mut mark = FixedBitSet::with_capacity(s.order());
    let mut list = Vec::new();
    for &x in seed {
        if !mark.put(x) {
            list.push(x);
        }
    }
    let mut i = 0;
    while i < list.len() {
        if list.len() >= limit {
            return None;
        }
        let a = list[i];
        for j in 0..=i {
            let b = list[j];
            for p in [s.op(a, b), s.op(b, a)] {
                if !mark.put(p) {
                    list.push(p);
                }
            }
        }
        i += 1;
    }
    if list.len() >= limit {
        return None;
    }
    list.sort_unstable();
    Some(list)
}

fn check_subset(s: &FiniteSemigroup, t: &[usize]) -> Result<FixedBitSet> {
    if t.is_empty() {
        return Err(Error::InvalidInput("the subset must be nonempty".into()));
    }
    let mut member = FixedBitSet::with_capacity(s.order());
    for &x in t {
        if x >= s.order() {
            return Err(Error::InvalidInput(format!("element index {x} is not in the semigroup")));
        }
        member.insert(x);
    }
    Ok(member)
}

/// A product `left * right = product` witnessing a failed check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProductWitness {
    pub left: usize,
    pub right: usize,
    pub product: usize,
}

/// First product of two members of `t` that leaves `t`.
pub fn closure_violation(s: &FiniteSemigroup, t: &[usize]) -> Result<Option<ProductWitness>> {
    let member = check_subset(s, t)?;
    for &a in t {
        for &b in t {
            let c = s.op(a, b);
            if !member.contains(c) {
                return Ok(Some(ProductWitness { left: a, right: b, product: c }));
            }
        }
    }
    Ok(None)
}

/// Which products an ideal must absorb.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

/// Outcome of an ideal check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealCheck {
    pub is_ideal: bool,
    pub closed: bool,
    pub witness: Option<ProductWitness>,
}

/// Left ideals absorb `s * t`, right ideals absorb `t * s`.
pub fn is_ideal(s: &FiniteSemigroup, t: &[usize], side: Side) -> Result<IdealCheck> {
    if let Some(w) = closure_violation(s, t)? {
        return Ok(IdealCheck { is_ideal: false, closed: false, witness: Some(w) });
    }
    let member = check_subset(s, t)?;
    for &x in t {
        for y in 0..s.order() {
            if matches!(side, Side::Left | Side::TwoSided) {
                let c = s.op(y, x);
                if !member.contains(c) {
                    return Ok(IdealCheck {
                        is_ideal: false,
                        closed: true,
                        witness: Some(ProductWitness { left: y, right: x, product: c }),
                    });
                }
            }
            if matches!(side, Side::Right | Side::TwoSided) {
                let c = s.op(x, y);
                if !member.contains(c) {
                    return Ok(IdealCheck {
                        is_ideal: false,
                        closed: true,
                        witness: Some(ProductWitness { left: x, right: y, product: c }),
                    });
                }
            }
        }
    }
    Ok(IdealCheck { is_ideal: true, closed: true, witness: None })
}

/// Outcome of a subgroup check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupCheck {
    pub is_subgroup: bool,
    pub identity: Option<usize>,
    pub reason: Option<String>,
}

/// Checks closure, a two-sided identity inside `t` and inverses inside `t`.
pub fn is_subgroup(s: &FiniteSemigroup, t: &[usize]) -> Result<SubgroupCheck> {
    let fail = |reason: String| SubgroupCheck { is_subgroup: false, identity: None, reason: Some(reason) };
    if let Some(w) = closure_violation(s, t)? {
        return Ok(fail(format!(
            "not closed: {} * {} = {} lies outside the set",
            s.render(w.left),
            s.render(w.right),
            s.render(w.product)
        )));
    }
    let Some(e) = t.iter().copied().find(|&e| t.iter().all(|&x| s.op(e, x) == x && s.op(x, e) == x)) else {
        return Ok(fail("no identity element inside the set".into()));
    };
    for &x in t {
        if !t.iter().any(|&y| s.op(x, y) == e && s.op(y, x) == e) {
            return Ok(fail(format!("{} has no inverse inside the set", s.render(x))));
        }
    }
    Ok(SubgroupCheck { is_subgroup: true, identity: Some(e), reason: None })
}

/// The coset `xH` (left) or `Hx` (right), sorted.
pub fn coset(s: &FiniteSemigroup, h: &[usize], x: usize, side: Side) -> Result<Vec<usize>> {
    if !is_subgroup(s, h)?.is_subgroup {
        return Err(Error::InvalidInput("coset needs a subgroup".into()));
    }
    if x >= s.order() {
        return Err(Error::InvalidInput(format!("element index {x} is not in the semigroup")));
    }
    let mut out: Vec<usize> = h
        .iter()
        .map(|&g| match side {
            Side::Right => s.op(g, x),
            _ => s.op(x, g),
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Elements with `xH = Hx = H` versus the exceptional rest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalityPartition {
    pub stabilizing: Vec<usize>,
    pub exceptional: Vec<usize>,
}

pub fn normality_partition(s: &FiniteSemigroup, h: &[usize]) -> Result<NormalityPartition> {
    let mut sorted = h.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut stabilizing = Vec::new();
    let mut exceptional = Vec::new();
    for x in 0..s.order() {
        let fixes = coset(s, &sorted, x, Side::Left)? == sorted && coset(s, &sorted, x, Side::Right)? == sorted;
        if fixes {
            stabilizing.push(x);
        } else {
            exceptional.push(x);
        }
    }
    Ok(NormalityPartition { stabilizing, exceptional })
}
