//! Fuzzy interval semigroups under min/max, fuzzy ideals and special fuzzy maps.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::analyzer::{
    build_semigroup, is_ideal, Carrier, FiniteSemigroup, IdealCheck, Operation, SemigroupSpec, Side,
};
use crate::domain::{Domain, Element};
use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::value::Value;

/// Violating pairs kept per mode.
pub const VIOLATION_LIST_CAP: usize = 32;

/// The family `{[0, r^i] : 0 <= i <= n_max}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FuzzyFamilySpec {
    pub ratio: String,
    pub n_max: u64,
}

/// The lattice operation of a fuzzy family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LatticeOp {
    Min,
    Max,
}

impl FuzzyFamilySpec {
    pub fn new(ratio: &str, n_max: u64) -> Self {
        FuzzyFamilySpec { ratio: ratio.to_string(), n_max }
    }

    pub fn semigroup_spec(&self, op: LatticeOp) -> SemigroupSpec {
        let operation = match op {
            LatticeOp::Min => Operation::Min,
            LatticeOp::Max => Operation::Max,
        };
        let mut spec = SemigroupSpec::new(
            Some(Domain::FuzzyUnit),
            Carrier::FuzzyFamily { ratio: self.ratio.clone(), n_max: self.n_max },
            operation,
        );
        spec.element_cap = self.n_max.saturating_add(1);
        spec
    }
}

/// Builds the family as a finite semigroup; element `i` is `[0, r^i]` when `r < 1`.
pub fn fuzzy_family_build(spec: &FuzzyFamilySpec, op: LatticeOp) -> Result<FiniteSemigroup> {
    build_semigroup(&spec.semigroup_spec(op))
}

/// Element indices of the exponents `range` in a family built with `r < 1`.
pub fn exponent_indices(s: &FiniteSemigroup, range: std::ops::RangeInclusive<u64>) -> Result<Vec<usize>> {
    range
        .map(|i| {
            let i = i as usize;
            if i < s.order() {
                Ok(i)
            } else {
                Err(Error::InvalidInput(format!("exponent {i} is outside the family")))
            }
        })
        .collect()
}

/// Two-sided ideal check for a min/max family.
pub fn fuzzy_ideal_check(s: &FiniteSemigroup, t: &[usize]) -> Result<IdealCheck> {
    if let Some(&x) = t.iter().find(|&&x| x >= s.order()) {
        return Err(Error::InvalidInput(format!("element index {x} is not in the family")));
    }
    is_ideal(s, t, Side::TwoSided)
}

/// The first failed semilattice law, described in words.
pub fn semilattice_violation(s: &FiniteSemigroup) -> Option<String> {
    let n = s.order();
    for a in 0..n {
        if s.op(a, a) != a {
            return Some(format!("{} is not idempotent", s.render(a)));
        }
        for b in 0..n {
            if s.op(a, b) != s.op(b, a) {
                return Some(format!("{} and {} do not commute", s.render(a), s.render(b)));
            }
        }
    }
    s.associativity_violation()
        .map(|(a, b, c)| format!("({0} {1}) {2} differs from {0} ({1} {2})", s.render(a), s.render(b), s.render(c)))
}

/// True when `t` contains every element below one of its members in value order.
pub fn is_down_closed(s: &FiniteSemigroup, t: &[usize]) -> Result<bool> {
    let upper = |i: usize| -> Result<BigRational> { Ok(s.element(i).as_interval()?.upper().real_part()) };
    for &x in t {
        let ux = upper(x)?;
        for y in 0..s.order() {
            if upper(y)? <= ux && !t.contains(&y) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// How a special fuzzy map assigns values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum FuzzyRule {
    /// `[0, a] -> 1/a` for `a != 0`, and `[0, 0] -> 1`.
    ReciprocalOrOne,
    /// The same value everywhere.
    Constant { value: String },
    /// Rendered element to value.
    Table { values: BTreeMap<String, String> },
}

impl FuzzyRule {
    /// The membership value of `v`, checked to lie in `[0, 1]`.
    pub fn value(&self, v: &Value) -> Result<BigRational> {
        let r = match self {
            FuzzyRule::ReciprocalOrOne => {
                let iv = v.as_interval()?;
                let upper = iv.upper();
                if !upper.neutro_part().is_zero() {
                    return Err(Error::Unsupported(format!("reciprocal of the neutrosophic value {v}")));
                }
                let a = upper.real_part();
                if a.is_zero() {
                    BigRational::one()
                } else {
                    a.recip()
                }
            }
            FuzzyRule::Constant { value } => parse_unit(value)?,
            FuzzyRule::Table { values } => {
                let key = v.to_string();
                let text = values
                    .get(&key)
                    .or_else(|| match v {
                        Value::Interval(iv) => values.get(&iv.render_upper()),
                        _ => None,
                    })
                    .ok_or_else(|| Error::InvalidInput(format!("the map has no value for {key}")))?;
                parse_unit(text)?
            }
        };
        if r < BigRational::zero() || r > BigRational::one() {
            return Err(Error::InvalidInput(format!("map value {r} at {v} lies outside [0, 1]")));
        }
        Ok(r)
    }
}

fn parse_unit(text: &str) -> Result<BigRational> {
    Ok(Domain::FuzzyUnit.parse_element(text)?.real_part())
}

/// The law a special fuzzy map is compared against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LawMode {
    /// `mu(xy) = min(mu(x), mu(y))`.
    Eq,
    /// `mu(xy) >= min(mu(x), mu(y))`.
    Ge,
    /// `mu(xy) <= min(mu(x), mu(y))`.
    Le,
}

impl LawMode {
    pub const ALL: [LawMode; 3] = [LawMode::Eq, LawMode::Ge, LawMode::Le];

    fn holds(self, lhs: &BigRational, rhs: &BigRational) -> bool {
        match self {
            LawMode::Eq => lhs == rhs,
            LawMode::Ge => lhs >= rhs,
            LawMode::Le => lhs <= rhs,
        }
    }
}

impl std::fmt::Display for LawMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            LawMode::Eq => "eq",
            LawMode::Ge => "ge",
            LawMode::Le => "le",
        })
    }
}

/// Where a special fuzzy map takes its arguments.
#[derive(Clone, Debug)]
pub enum FuzzySource<'a> {
    /// Every pair of elements of a finite semigroup.
    Semigroup(&'a FiniteSemigroup),
    /// The intervals `[0, 1] .. [0, max]` over `Z+` under multiplication; products may leave the sample.
    PositiveIntegers { max: u64 },
}

/// A map from a semigroup into `[0, 1]`.
#[derive(Clone, Debug)]
pub struct SpecialFuzzyMap<'a> {
    pub source: FuzzySource<'a>,
    pub rule: FuzzyRule,
}

/// One pair breaking the law.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FuzzyViolation {
    pub x: String,
    pub y: String,
    pub product: String,
    /// `mu(xy)`.
    pub value: String,
    /// `min(mu(x), mu(y))`.
    pub min: String,
}

/// Outcome of one law over all pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModeVerdict {
    pub mode: LawMode,
    pub holds: bool,
    pub violation_count: u64,
    pub violations: Vec<FuzzyViolation>,
}

/// Verdicts for every law, with the violations of the requested one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FuzzyMapReport {
    pub mode: LawMode,
    pub pairs_checked: u64,
    pub holds: bool,
    pub verdicts: Vec<ModeVerdict>,
}

impl FuzzyMapReport {
    pub fn verdict(&self, mode: LawMode) -> &ModeVerdict {
        self.verdicts.iter().find(|v| v.mode == mode).expect("every mode is checked")
    }

    /// The first violation of the requested law, in scan order.
    pub fn first_violation(&self) -> Option<&FuzzyViolation> {
        self.verdict(self.mode).violations.first()
    }
}

fn render_rational(r: &BigRational) -> String {
    Domain::FuzzyUnit.render(&Element::rational(r.clone()))
}

/// Product of two source elements, by index.
type ProductFn<'a> = dyn Fn(usize, usize) -> Result<Value> + 'a;

/// Compares `mu(xy)` with `min(mu(x), mu(y))` over every pair of the source.
pub fn special_fuzzy_map_check(map: &SpecialFuzzyMap<'_>, mode: LawMode) -> Result<FuzzyMapReport> {
    let (elements, combine): (Vec<Value>, Box<ProductFn<'_>>) = match &map.source {
        FuzzySource::Semigroup(s) => (s.elements().to_vec(), Box::new(move |a, b| Ok(s.element(s.op(a, b)).clone()))),
        FuzzySource::PositiveIntegers { max } => {
            if *max == 0 {
                return Err(Error::InvalidInput("the sample needs at least [0, 1]".into()));
            }
            let d = Domain::NonnegInt;
            let values: Vec<Value> =
                (1..=*max).map(|a| Interval::new(d, Element::int(a)).map(Value::Interval)).collect::<Result<_>>()?;
            let sample = values.clone();
            (values, Box::new(move |a, b| Ok(Value::Interval(sample[a].as_interval()?.mul(sample[b].as_interval()?)?))))
        }
    };
    let mu: Vec<BigRational> = elements.iter().map(|v| map.rule.value(v)).collect::<Result<_>>()?;
    let mut verdicts: Vec<ModeVerdict> = LawMode::ALL
        .iter()
        .map(|&m| ModeVerdict { mode: m, holds: true, violation_count: 0, violations: Vec::new() })
        .collect();
    let n = elements.len();
    for a in 0..n {
        for b in 0..n {
            let product = combine(a, b)?;
            let lhs = map.rule.value(&product)?;
            let rhs = (&mu[a]).min(&mu[b]);
            for v in verdicts.iter_mut() {
                if !v.mode.holds(&lhs, rhs) {
                    v.holds = false;
                    v.violation_count += 1;
                    if v.violations.len() < VIOLATION_LIST_CAP {
                        v.violations.push(FuzzyViolation {
                            x: elements[a].to_string(),
                            y: elements[b].to_string(),
                            product: product.to_string(),
                            value: render_rational(&lhs),
                            min: render_rational(rhs),
                        });
                    }
                }
            }
        }
    }
    let holds = verdicts.iter().find(|v| v.mode == mode).expect("every mode").holds;
    Ok(FuzzyMapReport { mode, pairs_checked: (n * n) as u64, holds, verdicts })
}
