//! Interval-coefficient polynomials, cyclic quotients and monomial semigroups.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::domain::Domain;
use crate::error::{Error, Result};
use crate::interval::Interval;

/// The unit that `x^k` is identified with.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum UnitKind {
    #[serde(rename = "one", alias = "1")]
    One,
    #[serde(rename = "I")]
    I,
}

/// The identification `x^k = 1` or `x^k = I`; exponents are taken modulo `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CyclicRule {
    pub k: u64,
    pub unit: UnitKind,
}

impl CyclicRule {
    pub fn new(k: u64, unit: UnitKind) -> Self {
        CyclicRule { k, unit }
    }

    pub fn validate(&self, domain: Domain) -> Result<()> {
        if self.k == 0 {
            return Err(Error::InvalidInput("cyclic rule needs k >= 1".into()));
        }
        if self.unit == UnitKind::I && !domain.is_pure_neutrosophic() {
            return Err(Error::InvalidInput(format!("x^k = I requires a pure neutrosophic domain, got {domain}")));
        }
        Ok(())
    }
}

/// A polynomial with interval coefficients; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntervalPolynomial {
    domain: Domain,
    coeffs: BTreeMap<u64, Interval>,
}

impl IntervalPolynomial {
    pub fn zero(domain: Domain) -> Self {
        IntervalPolynomial { domain, coeffs: BTreeMap::new() }
    }

    pub fn monomial(coeff: Interval, exponent: u64) -> Self {
        let mut p = IntervalPolynomial::zero(coeff.domain());
        if !coeff.is_zero() {
            p.coeffs.insert(exponent, coeff);
        }
        p
    }

    /// Builds a polynomial from (exponent, coefficient) terms, summing repeats.
    pub fn from_terms(domain: Domain, terms: impl IntoIterator<Item = (u64, Interval)>) -> Result<Self> {
        let mut p = IntervalPolynomial::zero(domain);
        for (e, c) in terms {
            if c.domain() != domain {
                return Err(Error::DomainMismatch(format!(
                    "coefficient over {} in a polynomial over {domain}",
                    c.domain()
                )));
            }
            p.accumulate(e, c)?;
        }
        Ok(p)
    }

    /// Builds a polynomial from (exponent, element text) pairs.
    pub fn parse_terms(domain: Domain, terms: &[(u64, &str)]) -> Result<Self> {
        let parsed = terms.iter().map(|(e, s)| Ok((*e, Interval::parse(domain, s)?))).collect::<Result<Vec<_>>>()?;
        IntervalPolynomial::from_terms(domain, parsed)
    }

    fn accumulate(&mut self, exponent: u64, c: Interval) -> Result<()> {
        let sum = match self.coeffs.remove(&exponent) {
            Some(prev) => prev.add(&c)?,
            None => c,
        };
        if !sum.is_zero() {
            self.coeffs.insert(exponent, sum);
        }
        Ok(())
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn coeffs(&self) -> &BTreeMap<u64, Interval> {
        &self.coeffs
    }

    pub fn coeff(&self, exponent: u64) -> Interval {
        self.coeffs.get(&exponent).cloned().unwrap_or_else(|| Interval::zero(self.domain))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<u64> {
        self.coeffs.keys().next_back().copied()
    }

    fn same_domain(&self, other: &IntervalPolynomial) -> Result<()> {
        if self.domain == other.domain {
            Ok(())
        } else {
            Err(Error::DomainMismatch(format!(
                "polynomials over {} and {} cannot be combined",
                self.domain, other.domain
            )))
        }
    }

    pub fn add(&self, other: &IntervalPolynomial) -> Result<IntervalPolynomial> {
        self.same_domain(other)?;
        let mut out = self.clone();
        for (e, c) in &other.coeffs {
            out.accumulate(*e, c.clone())?;
        }
        Ok(out)
    }

    /// Convolution product; with a rule, exponents are reduced modulo `k`.
    pub fn mul(&self, other: &IntervalPolynomial, rule: Option<&CyclicRule>) -> Result<IntervalPolynomial> {
        self.same_domain(other)?;
        if !self.domain.has_mul() {
            return Err(Error::Unsupported(format!("{} has no multiplication", self.domain)));
        }
        if let Some(r) = rule {
            r.validate(self.domain)?;
        }
        let mut out = IntervalPolynomial::zero(self.domain);
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &other.coeffs {
                let e = e1
                    .checked_add(*e2)
                    .ok_or_else(|| Error::InvalidInput("exponent overflow in polynomial product".into()))?;
                let e = rule.map_or(e, |r| e % r.k);
                out.accumulate(e, c1.mul(c2)?)?;
            }
        }
        Ok(out)
    }

    /// Folds every exponent modulo `k`.
    pub fn reduce(&self, rule: &CyclicRule) -> Result<IntervalPolynomial> {
        rule.validate(self.domain)?;
        IntervalPolynomial::from_terms(self.domain, self.coeffs.iter().map(|(e, c)| (e % rule.k, c.clone())))
    }
}

impl fmt::Display for IntervalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}x")?,
                _ => write!(f, "{c}x^{e}")?,
            }
        }
        Ok(())
    }
}

fn finite_elements(domain: Domain) -> Result<Vec<Interval>> {
    Ok(domain
        .enumerate()?
        .into_iter()
        .map(|e| Interval::new(domain, e).expect("enumerated elements belong to the domain"))
        .collect())
}

/// Size of the monomial semigroup: `(|d| - 1) * k + 1`.
pub fn monomial_semigroup_order(domain: Domain, rule: &CyclicRule) -> Result<BigUint> {
    rule.validate(domain)?;
    let size = domain.size().ok_or_else(|| Error::Unsupported(format!("{domain} is infinite")))?;
    Ok(BigUint::from(size - 1) * BigUint::from(rule.k) + BigUint::from(1u8))
}

/// `{0} ∪ {c x^i : c nonzero, 0 <= i < k}`: zero first, then exponent major, coefficient minor.
pub fn monomial_semigroup(domain: Domain, rule: &CyclicRule, cap: u64) -> Result<Vec<IntervalPolynomial>> {
    let order = monomial_semigroup_order(domain, rule)?;
    if order > BigUint::from(cap) {
        return Err(Error::CapExceeded { required: order, cap });
    }
    let nonzero: Vec<Interval> = finite_elements(domain)?.into_iter().filter(|c| !c.is_zero()).collect();
    let mut out = vec![IntervalPolynomial::zero(domain)];
    for i in 0..rule.k {
        for c in &nonzero {
            out.push(IntervalPolynomial::monomial(c.clone(), i));
        }
    }
    Ok(out)
}

/// All polynomials of degree below `k`, coefficient of `x^0` most significant.
pub fn full_cyclic_poly_semigroup(domain: Domain, k: u64, cap: u64) -> Result<Vec<IntervalPolynomial>> {
    if k == 0 {
        return Err(Error::InvalidInput("cyclic rule needs k >= 1".into()));
    }
    let elems = finite_elements(domain)?;
    let required = BigUint::from(elems.len()).pow(k as u32);
    if k > u32::MAX as u64 || required > BigUint::from(cap) {
        return Err(Error::CapExceeded { required, cap });
    }
    let total = elems.len().pow(k as u32);
    let mut out = Vec::with_capacity(total);
    let mut digits = vec![0usize; k as usize];
    for _ in 0..total {
        let terms = digits.iter().enumerate().map(|(e, &i)| (e as u64, elems[i].clone()));
        out.push(IntervalPolynomial::from_terms(domain, terms)?);
        for pos in (0..k as usize).rev() {
            digits[pos] += 1;
            if digits[pos] < elems.len() {
                break;
            }
            digits[pos] = 0;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> Domain {
        s.parse().unwrap()
    }

    fn p(dom: &str, terms: &[(u64, &str)]) -> IntervalPolynomial {
        IntervalPolynomial::parse_terms(d(dom), terms).unwrap()
    }

    #[test]
    fn sum_over_positive_integers() {
        let a = p("Z+", &[(0, "2"), (2, "3"), (7, "7"), (9, "11")]);
        let b = p("Z+", &[(0, "12"), (1, "7"), (3, "14"), (7, "10"), (8, "5"), (9, "12"), (20, "5")]);
        let want = p("Z+", &[(0, "14"), (1, "7"), (2, "3"), (3, "14"), (7, "17"), (8, "5"), (9, "23"), (20, "5")]);
        assert_eq!(a.add(&b).unwrap(), want);
        assert_eq!(a.add(&IntervalPolynomial::zero(d("Z+"))).unwrap(), a);
        assert!(p("Z3", &[(0, "1")]).add(&p("Z3", &[(0, "2")])).unwrap().is_zero());
    }

    #[test]
    fn cyclic_product_over_z6() {
        let a = p("Z6", &[(0, "2"), (1, "1"), (5, "5")]);
        let b = p("Z6", &[(0, "4"), (3, "3")]);
        let rule = CyclicRule::new(7, UnitKind::One);
        let want = p("Z6", &[(0, "2"), (1, "1"), (4, "3"), (5, "2")]);
        assert_eq!(a.mul(&b, Some(&rule)).unwrap(), want);
    }

    #[test]
    fn pure_neutrosophic_product() {
        let a = p("Z+I", &[(2, "3I"), (1, "2I"), (0, "7I")]);
        let b = p("Z+I", &[(3, "12I"), (1, "3I"), (0, "2I")]);
        let want = p("Z+I", &[(5, "36I"), (4, "24I"), (3, "93I"), (2, "12I"), (1, "25I"), (0, "14I")]);
        assert_eq!(a.mul(&b, None).unwrap(), want);
        assert!(a.mul(&IntervalPolynomial::zero(d("Z+I")), None).unwrap().is_zero());
    }

    #[test]
    fn unit_i_needs_pure_neutrosophic_domain() {
        let a = p("Z6", &[(0, "1")]);
        assert!(a.mul(&a, Some(&CyclicRule::new(3, UnitKind::I))).is_err());
    }

    #[test]
    fn monomial_orders() {
        let cases = [
            ("Z6I", 7, UnitKind::I, 36),
            ("N(Z2)", 3, UnitKind::One, 10),
            ("N(Z3)", 2, UnitKind::One, 17),
            ("Z8I", 3, UnitKind::I, 22),
        ];
        for (dom, k, unit, want) in cases {
            let rule = CyclicRule::new(k, unit);
            assert_eq!(monomial_semigroup(d(dom), &rule, 10_000).unwrap().len(), want);
        }
        let rule = CyclicRule::new(7, UnitKind::I);
        assert!(matches!(monomial_semigroup(d("Z6I"), &rule, 10), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn full_cyclic_orders() {
        assert_eq!(full_cyclic_poly_semigroup(d("Z2"), 4, 10_000).unwrap().len(), 16);
        assert_eq!(full_cyclic_poly_semigroup(d("Z2"), 1, 10_000).unwrap().len(), 2);
        assert!(full_cyclic_poly_semigroup(d("Z5"), 7, 10_000).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(p("Z6", &[(0, "2"), (1, "1"), (4, "3")]).to_string(), "[0, 2] + [0, 1]x + [0, 3]x^4");
        assert_eq!(IntervalPolynomial::zero(d("Z6")).to_string(), "0");
    }
}
