//! Interval matrices: elementwise operations, products and determinants.

use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::domain::{Domain, Element};
use crate::error::{Error, Result};
use crate::interval::{Interval, IntervalOp};

/// A rows x cols matrix of intervals over one domain, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntervalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Interval>,
}

/// How differences are taken inside a determinant expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SubtractionConvention {
    /// Residue difference `(u - v) mod m`.
    Modular,
    /// Absolute value of the signed expansion, taken per component.
    Absolute,
}

/// Result of a determinant evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Determinant {
    pub value: Interval,
    pub nonsingular: bool,
    pub convention: SubtractionConvention,
}

impl IntervalMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Interval>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Shape("matrices need at least one row and one column".into()));
        }
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        let domain = entries[0].domain();
        if entries.iter().any(|e| e.domain() != domain) {
            return Err(Error::DomainMismatch("matrix entries must share one domain".into()));
        }
        Ok(IntervalMatrix { rows, cols, entries })
    }

    /// Parses entries given as element strings or `[0, a]` literals.
    pub fn parse(domain: Domain, rows: usize, cols: usize, entries: &[&str]) -> Result<Self> {
        let parsed = entries.iter().map(|s| Interval::parse(domain, s)).collect::<Result<Vec<_>>>()?;
        IntervalMatrix::new(rows, cols, parsed)
    }

    pub fn filled(rows: usize, cols: usize, value: Interval) -> Result<Self> {
        IntervalMatrix::new(rows, cols, vec![value; rows * cols])
    }

    pub fn identity(domain: Domain, n: usize) -> Result<Self> {
        let one = Interval::one(domain).ok_or_else(|| Error::Unsupported(format!("{domain} has no identity")))?;
        let zero = Interval::zero(domain);
        let entries = (0..n * n).map(|k| if k / n == k % n { one.clone() } else { zero.clone() }).collect();
        IntervalMatrix::new(n, n, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn domain(&self) -> Domain {
        self.entries[0].domain()
    }

    pub fn entries(&self) -> &[Interval] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &Interval {
        &self.entries[r * self.cols + c]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Interval::is_zero)
    }

    /// Entrywise application of an interval operation.
    pub fn elementwise(&self, op: IntervalOp, other: &IntervalMatrix) -> Result<IntervalMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Shape(format!(
                "elementwise operation on {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let entries =
            self.entries.iter().zip(&other.entries).map(|(a, b)| a.apply(op, b)).collect::<Result<Vec<_>>>()?;
        IntervalMatrix::new(self.rows, self.cols, entries)
    }

    /// Standard matrix product using interval multiplication and addition.
    pub fn product(&self, other: &IntervalMatrix) -> Result<IntervalMatrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let domain = self.domain();
        if domain != other.domain() {
            return Err(Error::DomainMismatch(format!(
                "matrices over {domain} and {} cannot be multiplied",
                other.domain()
            )));
        }
        if !domain.has_add() || !domain.has_mul() {
            return Err(Error::Unsupported(format!("{domain} lacks addition or multiplication")));
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = Interval::zero(domain);
                for k in 0..self.cols {
                    acc = acc.add(&self.get(r, k).mul(other.get(k, c))?)?;
                }
                entries.push(acc);
            }
        }
        IntervalMatrix::new(self.rows, other.cols, entries)
    }

    /// Determinant by cofactor expansion.
    ///
    /// Modular domains use residue subtraction. Ordered and non-negative
    /// neutrosophic domains evaluate the signed expansion exactly and return
    /// the absolute value of each component.
    pub fn determinant(&self) -> Result<Determinant> {
        if self.rows != self.cols {
            return Err(Error::Shape(format!("determinant needs a square matrix, got {}x{}", self.rows, self.cols)));
        }
        let domain = self.domain();
        if !domain.has_mul() || !domain.has_add() {
            return Err(Error::Unsupported(format!("{domain} has no determinant")));
        }
        let idx: Vec<usize> = (0..self.rows).collect();
        let (value, convention) = match domain.modulus() {
            Some(_) => {
                let upper = self.det_modular(domain, &idx, &idx)?;
                (Interval::new(domain, upper)?, SubtractionConvention::Modular)
            }
            None => {
                let (re, ne) = self.det_signed(&idx, &idx);
                let upper = Element::exact(re.abs(), ne.abs());
                (Interval::new(domain, upper)?, SubtractionConvention::Absolute)
            }
        };
        Ok(Determinant { nonsingular: !value.is_zero(), value, convention })
    }

    fn det_modular(&self, d: Domain, rows: &[usize], cols: &[usize]) -> Result<Element> {
        if rows.len() == 1 {
            return Ok(self.get(rows[0], cols[0]).upper().clone());
        }
        let mut acc = d.zero();
        for (j, &c) in cols.iter().enumerate() {
            let minor_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let minor = self.det_modular(d, &rows[1..], &minor_cols)?;
            let term = d.mul(self.get(rows[0], c).upper(), &minor)?;
            acc = if j % 2 == 0 { d.add(&acc, &term)? } else { d.add(&acc, &d.neg_mod(&term)?)? };
        }
        Ok(acc)
    }

    fn det_signed(&self, rows: &[usize], cols: &[usize]) -> (BigRational, BigRational) {
        if rows.len() == 1 {
            let e = self.get(rows[0], cols[0]).upper();
            return (e.real_part(), e.neutro_part());
        }
        let (mut re, mut ne) = (BigRational::zero(), BigRational::zero());
        for (j, &c) in cols.iter().enumerate() {
            let minor_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let (mr, mn) = self.det_signed(&rows[1..], &minor_cols);
            let e = self.get(rows[0], c).upper();
            let (a, b) = (e.real_part(), e.neutro_part());
            let tr = &a * &mr;
            let tn = &a * &mn + &b * &mr + &b * &mn;
            if j % 2 == 0 {
                re += tr;
                ne += tn;
            } else {
                re -= tr;
                ne -= tn;
            }
        }
        (re, ne)
    }
}

impl fmt::Display for IntervalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows == 1 {
            let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
            return write!(f, "({})", parts.join(", "));
        }
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        write!(f, "]")
    }
}
