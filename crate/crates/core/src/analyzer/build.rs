//! Semigroup specifications and finite semigroup construction.

use std::collections::HashMap;
use std::sync::RwLock;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::domain::{Domain, Element};
use crate::error::{Error, Result};
use crate::interval::{Interval, IntervalOp};
use crate::matrix::IntervalMatrix;
use crate::polynomial::{self, CyclicRule, IntervalPolynomial, UnitKind};
use crate::transform::{self, TransformKind};
use crate::value::Value;

/// Cayley tables are materialized up to this many elements.
pub const TABLE_THRESHOLD: usize = 4096;
/// Default bound on the number of enumerated elements.
pub const DEFAULT_ELEMENT_CAP: u64 = 10_000;
/// Largest accepted shape parameter (row length, matrix entry count, k, n).
pub const MAX_SHAPE: usize = 4096;
const MEMO_CAPACITY: usize = 1 << 22;

fn default_cap() -> u64 {
    DEFAULT_ELEMENT_CAP
}

fn default_unit() -> UnitKind {
    UnitKind::One
}

/// The binary operation of a semigroup.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Operation {
    Add,
    #[serde(alias = "compose")]
    Mul,
    Min,
    Max,
}

impl Operation {
    fn interval_op(self) -> IntervalOp {
        match self {
            Operation::Add => IntervalOp::Add,
            Operation::Mul => IntervalOp::Mul,
            Operation::Min => IntervalOp::Min,
            Operation::Max => IntervalOp::Max,
        }
    }
}

/// The shape of the elements being enumerated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum Carrier {
    Interval,
    /// Rows of `len` intervals; `constant` keeps only rows with equal entries.
    RowMatrix {
        len: usize,
        #[serde(default, skip_serializing_if = "std::ops::Not::not")]
        constant: bool,
    },
    Matrix {
        rows: usize,
        cols: usize,
    },
    /// Polynomials without a cyclic rule; infinite, so arithmetic only.
    Polynomial,
    /// All polynomials of degree below `k` with `x^k` identified with the unit.
    PolynomialCyclic {
        k: u64,
        #[serde(default = "default_unit")]
        unit: UnitKind,
    },
    /// Zero together with every monomial `c x^i`, `0 <= i < k`.
    Monomial {
        k: u64,
        #[serde(default = "default_unit")]
        unit: UnitKind,
    },
    FullTransformation {
        n: usize,
    },
    Permutations {
        n: usize,
    },
    /// Permutations together with the constant maps.
    PermutationsAndConstants {
        n: usize,
    },
    /// `{[0, r^i] : 0 <= i <= n_max}` over the fuzzy unit interval.
    FuzzyFamily {
        ratio: String,
        n_max: u64,
    },
}

impl Carrier {
    fn is_map(&self) -> bool {
        matches!(
            self,
            Carrier::FullTransformation { .. }
                | Carrier::Permutations { .. }
                | Carrier::PermutationsAndConstants { .. }
        )
    }

    /// The cyclic rule of polynomial carriers.
    pub fn rule(&self) -> Option<CyclicRule> {
        match *self {
            Carrier::PolynomialCyclic { k, unit } | Carrier::Monomial { k, unit } => Some(CyclicRule::new(k, unit)),
            _ => None,
        }
    }
}

/// A complete description of a finite semigroup to construct.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SemigroupSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub domain: Option<Domain>,
    pub carrier: Carrier,
    pub operation: Operation,
    #[serde(default)]
    pub exclude_zero: bool,
    #[serde(default = "default_cap")]
    pub element_cap: u64,
}

impl SemigroupSpec {
    pub fn new(domain: Option<Domain>, carrier: Carrier, operation: Operation) -> Self {
        SemigroupSpec { domain, carrier, operation, exclude_zero: false, element_cap: DEFAULT_ELEMENT_CAP }
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("semigroup spec: {e}")))
    }

    /// The coefficient domain used by the carrier, if any.
    pub fn coefficient_domain(&self) -> Option<Domain> {
        match self.carrier {
            Carrier::FuzzyFamily { .. } => Some(Domain::FuzzyUnit),
            _ if self.carrier.is_map() => None,
            _ => self.domain,
        }
    }

    /// Rejects shape parameters whose carrier sizes could not be computed in reasonable time.
    fn check_shape_bound(&self) -> Result<()> {
        let (field, size) = match self.carrier {
            Carrier::RowMatrix { len, .. } => ("len", len as u128),
            Carrier::Matrix { rows, cols } => ("rows * cols", rows as u128 * cols as u128),
            Carrier::PolynomialCyclic { k, .. } | Carrier::Monomial { k, .. } => ("k", k as u128),
            Carrier::FullTransformation { n }
            | Carrier::Permutations { n }
            | Carrier::PermutationsAndConstants { n } => ("n", n as u128),
            _ => return Ok(()),
        };
        if size > MAX_SHAPE as u128 {
            return Err(Error::InvalidInput(format!("field '{field}' is {size}, above the limit {MAX_SHAPE}")));
        }
        Ok(())
    }

    fn require_domain(&self) -> Result<Domain> {
        self.domain.ok_or_else(|| Error::InvalidInput("field 'domain' is required for this carrier".into()))
    }

    /// Checks operation/domain/carrier compatibility, ignoring finiteness.
    pub fn validate_operation(&self) -> Result<()> {
        self.check_shape_bound()?;
        let op = self.operation;
        if self.carrier.is_map() {
            if op != Operation::Mul {
                return Err(Error::InvalidInput("field 'operation': maps only support composition".into()));
            }
            return Ok(());
        }
        if let Carrier::FuzzyFamily { ratio, .. } = &self.carrier {
            if !matches!(op, Operation::Min | Operation::Max) {
                return Err(Error::InvalidInput("field 'operation': fuzzy families use min or max".into()));
            }
            if let Some(d) = self.domain {
                if d != Domain::FuzzyUnit {
                    return Err(Error::InvalidInput("field 'domain': fuzzy families live in [0,1]".into()));
                }
            }
            let r = Domain::FuzzyUnit
                .parse_element(ratio)
                .map_err(|e| Error::InvalidInput(format!("field 'ratio': {e}")))?;
            if r.is_zero() {
                return Err(Error::InvalidInput("field 'ratio' must be positive".into()));
            }
            return Ok(());
        }
        let d = self.require_domain()?;
        let ok = match op {
            Operation::Add => d.has_add(),
            Operation::Mul => d.has_mul(),
            Operation::Min | Operation::Max => d.is_ordered(),
        };
        if !ok {
            return Err(Error::InvalidInput(format!("field 'operation': {op:?} is not available over {d}")));
        }
        match self.carrier {
            Carrier::RowMatrix { len: 0, .. } => {
                return Err(Error::InvalidInput("field 'len' must be positive".into()))
            }
            Carrier::Matrix { rows, cols } => {
                if rows == 0 || cols == 0 {
                    return Err(Error::InvalidInput("fields 'rows' and 'cols' must be positive".into()));
                }
                if op == Operation::Mul && rows != cols {
                    return Err(Error::InvalidInput(format!(
                        "field 'operation': matrix product needs a square shape, got {rows}x{cols}"
                    )));
                }
                if op == Operation::Mul && !d.has_add() {
                    return Err(Error::InvalidInput(format!("matrix product needs addition over {d}")));
                }
            }
            Carrier::Polynomial => {
                if !matches!(op, Operation::Add | Operation::Mul) {
                    return Err(Error::InvalidInput("field 'operation': polynomials use add or mul".into()));
                }
            }
            Carrier::PolynomialCyclic { k, unit } | Carrier::Monomial { k, unit } => {
                CyclicRule::new(k, unit).validate(d)?;
                if matches!(self.carrier, Carrier::Monomial { .. }) && op != Operation::Mul {
                    return Err(Error::InvalidInput(
                        "field 'operation': monomial semigroups are closed under multiplication only".into(),
                    ));
                }
                if !matches!(op, Operation::Add | Operation::Mul) {
                    return Err(Error::InvalidInput("field 'operation': polynomials use add or mul".into()));
                }
            }
            _ => {}
        }
        Ok(())
    }

    /// Applies the semigroup operation to two carrier values.
    pub fn combine(&self, a: &Value, b: &Value) -> Result<Value> {
        let op = self.operation;
        match &self.carrier {
            Carrier::Interval | Carrier::FuzzyFamily { .. } => {
                Ok(Value::Interval(a.as_interval()?.apply(op.interval_op(), b.as_interval()?)?))
            }
            Carrier::RowMatrix { .. } => {
                Ok(Value::Matrix(a.as_matrix()?.elementwise(op.interval_op(), b.as_matrix()?)?))
            }
            Carrier::Matrix { .. } => {
                let (x, y) = (a.as_matrix()?, b.as_matrix()?);
                Ok(Value::Matrix(match op {
                    Operation::Mul => x.product(y)?,
                    _ => x.elementwise(op.interval_op(), y)?,
                }))
            }
            Carrier::Polynomial | Carrier::PolynomialCyclic { .. } | Carrier::Monomial { .. } => {
                let (x, y) = (a.as_polynomial()?, b.as_polynomial()?);
                let rule = self.carrier.rule();
                Ok(Value::Polynomial(match op {
                    Operation::Add => x.add(y)?,
                    _ => x.mul(y, rule.as_ref())?,
                }))
            }
            _ => Ok(Value::Map(a.as_map()?.compose(b.as_map()?)?)),
        }
    }

    /// Number of carrier elements before `exclude_zero` is applied.
    pub fn carrier_size(&self) -> Result<BigUint> {
        self.validate_operation()?;
        let finite_size = || -> Result<BigUint> {
            let d = self.require_domain()?;
            d.size()
                .map(BigUint::from)
                .ok_or_else(|| Error::Unsupported(format!("{d} is infinite; only arithmetic is available")))
        };
        Ok(match &self.carrier {
            Carrier::Interval => finite_size()?,
            Carrier::RowMatrix { len, constant } => {
                if *constant {
                    finite_size()?
                } else {
                    finite_size()?.pow(*len as u32)
                }
            }
            Carrier::Matrix { rows, cols } => finite_size()?.pow((rows * cols) as u32),
            Carrier::Polynomial => {
                return Err(Error::Unsupported(
                    "polynomials without a cyclic rule are infinite; only arithmetic is available".into(),
                ))
            }
            Carrier::PolynomialCyclic { k, .. } => {
                finite_size()?;
                let k = u32::try_from(*k).map_err(|_| Error::InvalidInput("field 'k' too large".into()))?;
                finite_size()?.pow(k)
            }
            Carrier::Monomial { k, unit } => {
                polynomial::monomial_semigroup_order(self.require_domain()?, &CyclicRule::new(*k, *unit))?
            }
            Carrier::FullTransformation { n } => transform::transform_count(*n, TransformKind::All),
            Carrier::Permutations { n } => transform::transform_count(*n, TransformKind::Bijections),
            Carrier::PermutationsAndConstants { n } => {
                transform::transform_count(*n, TransformKind::BijectionsAndConstants)
            }
            Carrier::FuzzyFamily { ratio, n_max } => {
                if Domain::FuzzyUnit.parse_element(ratio)? == Element::int(1) {
                    BigUint::from(1u8)
                } else {
                    BigUint::from(*n_max) + BigUint::from(1u8)
                }
            }
        })
    }

    /// The carrier's zero value, when it has one.
    pub fn zero_value(&self) -> Option<Value> {
        let d = self.coefficient_domain()?;
        let z = Interval::zero(d);
        match self.carrier {
            Carrier::Interval | Carrier::FuzzyFamily { .. } => Some(Value::Interval(z)),
            Carrier::RowMatrix { len, .. } => IntervalMatrix::filled(1, len, z).ok().map(Value::Matrix),
            Carrier::Matrix { rows, cols } => IntervalMatrix::filled(rows, cols, z).ok().map(Value::Matrix),
            Carrier::Polynomial | Carrier::PolynomialCyclic { .. } | Carrier::Monomial { .. } => {
                Some(Value::Polynomial(IntervalPolynomial::zero(d)))
            }
            _ => None,
        }
    }

    /// Enumerates the carrier in canonical order.
    pub fn enumerate(&self) -> Result<Vec<Value>> {
        let required = self.carrier_size()?;
        let zero =
            if self.exclude_zero {
                Some(self.zero_value().ok_or_else(|| {
                    Error::InvalidInput("field 'exclude_zero': this carrier has no zero element".into())
                })?)
            } else {
                None
            };
        let effective = if zero.is_some() { required.clone() - BigUint::from(1u8) } else { required.clone() };
        if effective > BigUint::from(self.element_cap) {
            return Err(Error::CapExceeded { required: effective, cap: self.element_cap });
        }
        let cap = u64::MAX;
        let intervals =
            |d: Domain| -> Result<Vec<Interval>> { d.enumerate()?.into_iter().map(|e| Interval::new(d, e)).collect() };
        let mut values: Vec<Value> = match &self.carrier {
            Carrier::Interval => intervals(self.require_domain()?)?.into_iter().map(Value::Interval).collect(),
            Carrier::RowMatrix { len, constant } => {
                let base = intervals(self.require_domain()?)?;
                if *constant {
                    base.into_iter()
                        .map(|c| IntervalMatrix::filled(1, *len, c).map(Value::Matrix))
                        .collect::<Result<_>>()?
                } else {
                    tuples(&base, *len)
                        .into_iter()
                        .map(|t| IntervalMatrix::new(1, *len, t).map(Value::Matrix))
                        .collect::<Result<_>>()?
                }
            }
            Carrier::Matrix { rows, cols } => {
                let base = intervals(self.require_domain()?)?;
                tuples(&base, rows * cols)
                    .into_iter()
                    .map(|t| IntervalMatrix::new(*rows, *cols, t).map(Value::Matrix))
                    .collect::<Result<_>>()?
            }
            Carrier::Polynomial => unreachable!("rejected by carrier_size"),
            Carrier::PolynomialCyclic { k, .. } => {
                polynomial::full_cyclic_poly_semigroup(self.require_domain()?, *k, cap)?
                    .into_iter()
                    .map(Value::Polynomial)
                    .collect()
            }
            Carrier::Monomial { k, unit } => {
                polynomial::monomial_semigroup(self.require_domain()?, &CyclicRule::new(*k, *unit), cap)?
                    .into_iter()
                    .map(Value::Polynomial)
                    .collect()
            }
            Carrier::FullTransformation { n } => maps(*n, TransformKind::All)?,
            Carrier::Permutations { n } => maps(*n, TransformKind::Bijections)?,
            Carrier::PermutationsAndConstants { n } => maps(*n, TransformKind::BijectionsAndConstants)?,
            Carrier::FuzzyFamily { ratio, n_max } => {
                let d = Domain::FuzzyUnit;
                let r = Interval::parse(d, ratio)?;
                let mut out: Vec<Value> = Vec::new();
                let mut power = Interval::one(d).expect("fuzzy unit has 1");
                for _ in 0..=*n_max {
                    let v = Value::Interval(power.clone());
                    if out.last() != Some(&v) {
                        out.push(v);
                    }
                    power = power.mul(&r)?;
                }
                out
            }
        };
        if let Some(z) = zero {
            values.retain(|v| *v != z);
        }
        Ok(values)
    }
}

fn maps(n: usize, kind: TransformKind) -> Result<Vec<Value>> {
    Ok(transform::enumerate_transformations(n, kind, u64::MAX)?.into_iter().map(Value::Map).collect())
}

fn tuples(base: &[Interval], len: usize) -> Vec<Vec<Interval>> {
    let mut out: Vec<Vec<Interval>> = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                base.iter().map(move |b| {
                    let mut t = prefix.clone();
                    t.push(b.clone());
                    t
                })
            })
            .collect();
    }
    out
}

enum Kernel {
    Table(Vec<u32>),
    Lazy { spec: SemigroupSpec, memo: RwLock<HashMap<(u32, u32), u32>> },
}

/// An enumerated semigroup with a total, verified binary operation.
pub struct FiniteSemigroup {
    /// The spec whose carrier the elements come from.
    origin: Option<SemigroupSpec>,
    /// True for subsemigroups cut out of a built semigroup.
    derived: bool,
    elements: Vec<Value>,
    index: HashMap<Value, usize>,
    kernel: Kernel,
}

impl std::fmt::Debug for FiniteSemigroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteSemigroup").field("order", &self.elements.len()).field("spec", &self.origin).finish()
    }
}

fn closure_error(a: &Value, b: &Value, c: &Value) -> Error {
    Error::Closure(format!("{a} * {b} = {c} is not in the carrier"))
}

/// Enumerates the spec's carrier, verifies closure and builds the semigroup.
pub fn build_semigroup(spec: &SemigroupSpec) -> Result<FiniteSemigroup> {
    let elements = spec.enumerate()?;
    if elements.is_empty() {
        return Err(Error::InvalidInput("the carrier is empty".into()));
    }
    let index: HashMap<Value, usize> = elements.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
    let n = elements.len();
    let product = |i: usize, j: usize| -> Result<u32> {
        let c = spec.combine(&elements[i], &elements[j])?;
        index.get(&c).map(|&k| k as u32).ok_or_else(|| closure_error(&elements[i], &elements[j], &c))
    };
    let kernel = if n <= TABLE_THRESHOLD {
        let rows: Vec<Result<Vec<u32>>> =
            (0..n).into_par_iter().map(|i| (0..n).map(|j| product(i, j)).collect()).collect();
        let mut table = Vec::with_capacity(n * n);
        for row in rows {
            table.extend(row?);
        }
        Kernel::Table(table)
    } else {
        let failures: Vec<Option<Error>> =
            (0..n).into_par_iter().map(|i| (0..n).find_map(|j| product(i, j).err())).collect();
        if let Some(e) = failures.into_iter().flatten().next() {
            return Err(e);
        }
        Kernel::Lazy { spec: spec.clone(), memo: RwLock::new(HashMap::new()) }
    };
    Ok(FiniteSemigroup { origin: Some(spec.clone()), derived: false, elements, index, kernel })
}

impl FiniteSemigroup {
    /// A semigroup given by labels and a Cayley table `table[i][j] = i * j`.
    pub fn from_table(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        if n == 0 || table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(Error::Shape("Cayley table must be n x n for n labels".into()));
        }
        if table.iter().flatten().any(|&k| k >= n) {
            return Err(Error::Closure("Cayley table entry out of range".into()));
        }
        let elements: Vec<Value> = labels.into_iter().map(Value::Label).collect();
        let index: HashMap<Value, usize> = elements.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        if index.len() != n {
            return Err(Error::InvalidInput("labels must be distinct".into()));
        }
        let flat = table.into_iter().flatten().map(|k| k as u32).collect();
        let s = FiniteSemigroup { origin: None, derived: false, elements, index, kernel: Kernel::Table(flat) };
        if let Some((a, b, c)) = s.associativity_violation() {
            return Err(Error::Closure(format!(
                "table is not associative at ({}, {}, {})",
                s.render(a),
                s.render(b),
                s.render(c)
            )));
        }
        Ok(s)
    }

    /// The subsemigroup on `subset`, in increasing index order.
    pub fn restrict(&self, subset: &[usize]) -> Result<FiniteSemigroup> {
        let mut members: Vec<usize> = subset.to_vec();
        members.sort_unstable();
        members.dedup();
        if members.is_empty() || members.iter().any(|&i| i >= self.order()) {
            return Err(Error::InvalidInput("subset must be a nonempty set of element indices".into()));
        }
        let pos: HashMap<usize, usize> = members.iter().enumerate().map(|(p, &i)| (i, p)).collect();
        let mut table = Vec::with_capacity(members.len() * members.len());
        for &a in &members {
            for &b in &members {
                let c = self.op(a, b);
                let p = pos
                    .get(&c)
                    .ok_or_else(|| closure_error(&self.elements[a], &self.elements[b], &self.elements[c]))?;
                table.push(*p as u32);
            }
        }
        let elements: Vec<Value> = members.iter().map(|&i| self.elements[i].clone()).collect();
        let index = elements.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        Ok(FiniteSemigroup {
            origin: self.origin.clone(),
            derived: true,
            elements,
            index,
            kernel: Kernel::Table(table),
        })
    }

    /// The spec this semigroup was built from; `None` for tables and subsemigroups.
    pub fn spec(&self) -> Option<&SemigroupSpec> {
        if self.derived {
            None
        } else {
            self.origin.as_ref()
        }
    }

    pub fn is_derived(&self) -> bool {
        self.derived
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Value] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Value {
        &self.elements[i]
    }

    pub fn index_of(&self, v: &Value) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn has_table(&self) -> bool {
        matches!(self.kernel, Kernel::Table(_))
    }

    pub fn render(&self, i: usize) -> String {
        self.elements[i].to_string()
    }

    pub fn render_set(&self, set: &[usize]) -> Vec<String> {
        set.iter().map(|&i| self.render(i)).collect()
    }

    /// Index of `a * b`.
    pub fn op(&self, a: usize, b: usize) -> usize {
        let n = self.elements.len();
        match &self.kernel {
            Kernel::Table(t) => t[a * n + b] as usize,
            Kernel::Lazy { spec, memo } => {
                let key = (a as u32, b as u32);
                if let Some(&c) = memo.read().expect("memo lock").get(&key) {
                    return c as usize;
                }
                let v = spec.combine(&self.elements[a], &self.elements[b]).expect("operation verified at build");
                let c = self.index[&v];
                let mut guard = memo.write().expect("memo lock");
                if guard.len() < MEMO_CAPACITY {
                    guard.insert(key, c as u32);
                }
                c
            }
        }
    }

    /// Index of `x^k` for `k >= 1`.
    pub fn pow(&self, x: usize, k: u64) -> usize {
        assert!(k >= 1, "exponent must be positive");
        let mut acc = x;
        for _ in 1..k {
            acc = self.op(acc, x);
        }
        acc
    }

    /// Parses a JSON literal and locates it among the elements.
    pub fn locate(&self, json: &serde_json::Value) -> Result<usize> {
        let v = match &self.origin {
            None => match json {
                serde_json::Value::String(s) => Value::Label(s.clone()),
                other => return Err(Error::InvalidInput(format!("expected an element label, got {other}"))),
            },
            Some(spec) => {
                let v = Value::from_json(spec.coefficient_domain(), json)?;
                match (spec.carrier.rule(), v) {
                    (Some(rule), Value::Polynomial(p)) => Value::Polynomial(p.reduce(&rule)?),
                    (Some(_), Value::Interval(iv)) => Value::Polynomial(IntervalPolynomial::monomial(iv, 0)),
                    (_, v) => v,
                }
            }
        };
        self.index_of(&v).ok_or_else(|| Error::InvalidInput(format!("{v} is not an element of this semigroup")))
    }

    pub fn locate_all(&self, items: &[serde_json::Value]) -> Result<Vec<usize>> {
        let mut out = items.iter().map(|j| self.locate(j)).collect::<Result<Vec<_>>>()?;
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a + 1..n).all(|b| self.op(a, b) == self.op(b, a)))
    }

    /// A triple violating associativity, if any.
    pub fn associativity_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.order();
        for a in 0..n {
            for b in 0..n {
                let ab = self.op(a, b);
                for c in 0..n {
                    if self.op(ab, c) != self.op(a, self.op(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// Rows of the Cayley table.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        (0..n).map(|a| (0..n).map(|b| self.op(a, b)).collect()).collect()
    }
}
