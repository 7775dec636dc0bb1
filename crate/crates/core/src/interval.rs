//! Intervals `[0, a]` identified with their upper endpoint.

use std::fmt;

use crate::domain::{Domain, Element};
use crate::error::{Error, Result};

/// The interval `[0, upper]` over a coefficient domain.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    domain: Domain,
    upper: Element,
}

/// Binary operations on intervals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IntervalOp {
    Add,
    Mul,
    Min,
    Max,
}

impl Interval {
    pub fn new(domain: Domain, upper: Element) -> Result<Self> {
        domain.check(&upper)?;
        Ok(Interval { domain, upper })
    }

    pub fn zero(domain: Domain) -> Self {
        Interval { domain, upper: domain.zero() }
    }

    pub fn one(domain: Domain) -> Option<Self> {
        domain.one().map(|upper| Interval { domain, upper })
    }

    /// Parses `[0, a]` or a bare endpoint `a`.
    pub fn parse(domain: Domain, text: &str) -> Result<Self> {
        let t = text.trim();
        let upper = match t.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            Some(inner) => {
                let (lower, upper) =
                    inner.split_once(',').ok_or_else(|| Error::InvalidInput(format!("malformed interval '{text}'")))?;
                if !domain.parse_element(lower)?.is_zero() {
                    return Err(Error::InvalidInput(format!("interval '{text}' must have lower endpoint 0")));
                }
                upper
            }
            None => t,
        };
        Ok(Interval { domain, upper: domain.parse_element(upper)? })
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn upper(&self) -> &Element {
        &self.upper
    }

    pub fn is_zero(&self) -> bool {
        self.upper.is_zero()
    }

    /// Rendering of the upper endpoint alone.
    pub fn render_upper(&self) -> String {
        self.domain.render(&self.upper)
    }

    fn same_domain(&self, other: &Interval) -> Result<()> {
        if self.domain == other.domain {
            Ok(())
        } else {
            Err(Error::DomainMismatch(format!(
                "intervals over {} and {} cannot be combined",
                self.domain, other.domain
            )))
        }
    }

    pub fn apply(&self, op: IntervalOp, other: &Interval) -> Result<Interval> {
        self.same_domain(other)?;
        let d = self.domain;
        let upper = match op {
            IntervalOp::Add => d.add(&self.upper, &other.upper)?,
            IntervalOp::Mul => d.mul(&self.upper, &other.upper)?,
            IntervalOp::Min => d.min_of(&self.upper, &other.upper)?,
            IntervalOp::Max => d.max_of(&self.upper, &other.upper)?,
        };
        Ok(Interval { domain: d, upper })
    }

    pub fn add(&self, other: &Interval) -> Result<Interval> {
        self.apply(IntervalOp::Add, other)
    }

    pub fn mul(&self, other: &Interval) -> Result<Interval> {
        self.apply(IntervalOp::Mul, other)
    }

    pub fn min_with(&self, other: &Interval) -> Result<Interval> {
        self.apply(IntervalOp::Min, other)
    }

    pub fn max_with(&self, other: &Interval) -> Result<Interval> {
        self.apply(IntervalOp::Max, other)
    }

    /// `self^k` by repeated squaring; `k = 0` yields the identity when one exists.
    pub fn pow(&self, k: u64) -> Result<Interval> {
        if !self.domain.has_mul() {
            return Err(Error::Unsupported(format!("{} has no multiplication", self.domain)));
        }
        if k == 0 {
            return Interval::one(self.domain)
                .ok_or_else(|| Error::Unsupported(format!("{} has no identity for exponent 0", self.domain)));
        }
        let mut base = self.clone();
        let mut acc: Option<Interval> = None;
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.mul(&base)?,
                });
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc.expect("k >= 1"))
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[0, {}]", self.render_upper())
    }
}
