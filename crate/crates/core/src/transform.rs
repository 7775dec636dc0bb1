//! Self-maps of finite interval sets and the special span construction.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An opaque interval label `[lower, upper]` with `lower < upper`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntervalLabel {
    lower: BigRational,
    upper: BigRational,
}

impl IntervalLabel {
    pub fn new(lower: BigRational, upper: BigRational) -> Result<Self> {
        if lower < BigRational::zero() || lower >= upper {
            return Err(Error::InvalidInput(format!(
                "interval label needs 0 <= lower < upper, got [{lower}, {upper}]"
            )));
        }
        Ok(IntervalLabel { lower, upper })
    }

    pub fn from_ints(lower: u64, upper: u64) -> Result<Self> {
        IntervalLabel::new(BigRational::from_integer(lower.into()), BigRational::from_integer(upper.into()))
    }

    /// Parses `[a, b]` with rational endpoints.
    pub fn parse(text: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("malformed interval label '{text}'"));
        let inner = text.trim().strip_prefix('[').and_then(|r| r.strip_suffix(']')).ok_or_else(bad)?;
        let (a, b) = inner.split_once(',').ok_or_else(bad)?;
        let num = |s: &str| -> Result<BigRational> {
            let s = s.trim();
            let r = match s.split_once('/') {
                Some((p, q)) => {
                    let (p, q): (u64, u64) =
                        (p.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?);
                    if q == 0 {
                        return Err(bad());
                    }
                    BigRational::new(p.into(), q.into())
                }
                None => BigRational::from_integer(s.parse::<u64>().map_err(|_| bad())?.into()),
            };
            Ok(r)
        };
        IntervalLabel::new(num(a)?, num(b)?)
    }

    pub fn lower(&self) -> &BigRational {
        &self.lower
    }

    pub fn upper(&self) -> &BigRational {
        &self.upper
    }
}

impl fmt::Display for IntervalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lower, self.upper)
    }
}

/// A finite sequence of distinct interval labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalSetX {
    labels: Vec<IntervalLabel>,
    special: bool,
}

impl IntervalSetX {
    pub fn new(labels: Vec<IntervalLabel>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::InvalidInput("interval set must be nonempty".into()));
        }
        let mut seen = HashSet::new();
        if let Some(dup) = labels.iter().find(|l| !seen.insert(*l)) {
            return Err(Error::InvalidInput(format!("duplicate interval label {dup}")));
        }
        let max_lower = labels.iter().map(|l| &l.lower).max().expect("nonempty");
        let min_upper = labels.iter().map(|l| &l.upper).min().expect("nonempty");
        let special = max_lower < min_upper;
        Ok(IntervalSetX { labels, special })
    }

    pub fn from_pairs(pairs: &[(u64, u64)]) -> Result<Self> {
        let labels = pairs.iter().map(|&(a, b)| IntervalLabel::from_ints(a, b)).collect::<Result<Vec<_>>>()?;
        IntervalSetX::new(labels)
    }

    pub fn labels(&self) -> &[IntervalLabel] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn is_special(&self) -> bool {
        self.special
    }

    pub fn index_of(&self, label: &IntervalLabel) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// All `[a_i, b_j]` built from a special set, deduplicated, in `(i, j)` order.
pub fn span_special_intervals(x: &IntervalSetX) -> Result<IntervalSetX> {
    if !x.special {
        return Err(Error::InvalidInput(
            "interval set is not special: some lower endpoint is not below every upper endpoint".into(),
        ));
    }
    let mut seen = HashSet::new();
    let mut labels = Vec::new();
    for a in &x.labels {
        for b in &x.labels {
            let label = IntervalLabel::new(a.lower.clone(), b.upper.clone())?;
            if seen.insert(label.clone()) {
                labels.push(label);
            }
        }
    }
    IntervalSetX::new(labels)
}

/// A self-map of `{0, .., n-1}` given by its image sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TransformationMap {
    images: Vec<usize>,
}

impl TransformationMap {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidInput("transformation needs n >= 1".into()));
        }
        if let Some(bad) = images.iter().find(|&&i| i >= n) {
            return Err(Error::InvalidInput(format!("image {bad} out of range for n = {n}")));
        }
        Ok(TransformationMap { images })
    }

    pub fn identity(n: usize) -> Self {
        TransformationMap { images: (0..n).collect() }
    }

    pub fn constant(n: usize, value: usize) -> Result<Self> {
        TransformationMap::new(vec![value; n])
    }

    /// `i -> i + 1 mod n`.
    pub fn cycle(n: usize) -> Self {
        TransformationMap { images: (0..n).map(|i| (i + 1) % n).collect() }
    }

    /// Cycles the first `p` points and fixes the rest.
    pub fn prefix_cycle(n: usize, p: usize) -> Result<Self> {
        if p == 0 || p > n {
            return Err(Error::InvalidInput(format!("cycle length {p} out of range for n = {n}")));
        }
        Ok(TransformationMap { images: (0..n).map(|i| if i < p { (i + 1) % p } else { i }).collect() })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.n()];
        self.images.iter().all(|&i| !std::mem::replace(&mut seen[i], true))
    }

    pub fn is_constant(&self) -> bool {
        self.images.iter().all(|&i| i == self.images[0])
    }

    /// `(self ∘ g)(i) = self(g(i))`: `g` is applied first.
    pub fn compose(&self, g: &TransformationMap) -> Result<TransformationMap> {
        if self.n() != g.n() {
            return Err(Error::Shape(format!("cannot compose maps on {} and {} points", self.n(), g.n())));
        }
        Ok(TransformationMap { images: g.images.iter().map(|&i| self.images[i]).collect() })
    }

    pub fn pow(&self, k: u64) -> TransformationMap {
        let mut out = TransformationMap::identity(self.n());
        for _ in 0..k {
            out = self.compose(&out).expect("same size");
        }
        out
    }

    /// Applies the map to a label of `x` through its index.
    pub fn act(&self, x: &IntervalSetX, label: &IntervalLabel) -> Result<IntervalLabel> {
        if x.len() != self.n() {
            return Err(Error::Shape(format!("map on {} points, set of {}", self.n(), x.len())));
        }
        let i = x.index_of(label).ok_or_else(|| Error::InvalidInput(format!("{label} is not in the interval set")))?;
        Ok(x.labels[self.images[i]].clone())
    }
}

impl fmt::Display for TransformationMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|i| i.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Which self-maps to enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TransformKind {
    All,
    Bijections,
    BijectionsAndConstants,
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// `n^n`, the number of self-maps of an n-element set.
pub fn symmetric_semigroup_order(n: usize) -> BigUint {
    BigUint::from(n).pow(n as u32)
}

/// Order of the full symmetric semigroup on the span of a special set.
pub fn special_symmetric_order(x: &IntervalSetX) -> Result<BigUint> {
    Ok(symmetric_semigroup_order(span_special_intervals(x)?.len()))
}

pub fn transform_count(n: usize, kind: TransformKind) -> BigUint {
    match kind {
        TransformKind::All => symmetric_semigroup_order(n),
        TransformKind::Bijections => factorial(n),
        TransformKind::BijectionsAndConstants => {
            let constants_not_perm = if n == 1 { 0 } else { n };
            factorial(n) + BigUint::from(constants_not_perm)
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Maps in lexicographic order of their image sequences.
pub fn enumerate_transformations(n: usize, kind: TransformKind, cap: u64) -> Result<Vec<TransformationMap>> {
    if n == 0 {
        return Err(Error::InvalidInput("transformation needs n >= 1".into()));
    }
    let required = transform_count(n, kind);
    if required > BigUint::from(cap) {
        return Err(Error::CapExceeded { required, cap });
    }
    let mut out = Vec::new();
    match kind {
        TransformKind::All => {
            let total = n.pow(n as u32);
            let mut images = vec![0usize; n];
            for _ in 0..total {
                out.push(TransformationMap { images: images.clone() });
                for pos in (0..n).rev() {
                    images[pos] += 1;
                    if images[pos] < n {
                        break;
                    }
                    images[pos] = 0;
                }
            }
        }
        TransformKind::Bijections | TransformKind::BijectionsAndConstants => {
            let mut images: Vec<usize> = (0..n).collect();
            loop {
                out.push(TransformationMap { images: images.clone() });
                if !next_permutation(&mut images) {
                    break;
                }
            }
            if kind == TransformKind::BijectionsAndConstants && n > 1 {
                out.extend((0..n).map(|c| TransformationMap { images: vec![c; n] }));
                out.sort();
            }
        }
    }
    Ok(out)
}
