//! Exact construction and structural analysis of finite interval semigroups.

pub mod domain;
pub mod error;
pub mod interval;
pub mod matrix;

pub use domain::{Domain, Element};
pub use error::{Error, Result};
pub use interval::{Interval, IntervalOp};
pub use matrix::{Determinant, IntervalMatrix, SubtractionConvention};
pub mod polynomial;
pub mod transform;
pub use polynomial::{CyclicRule, IntervalPolynomial, UnitKind};
pub use transform::{IntervalLabel, IntervalSetX, TransformKind, TransformationMap};
pub mod analyzer;
pub mod value;
pub use analyzer::{analyze, build_semigroup, AnalysisOptions, FiniteSemigroup, SemigroupSpec, StructureReport};
pub use value::Value;
pub mod catalog;
pub mod cli;
pub mod eval;
pub mod fuzzy;
