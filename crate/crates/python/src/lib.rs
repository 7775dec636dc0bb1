//! Python bindings. Specs, expressions and reports cross the boundary as JSON text.

use intsemi::catalog::verify_claims;
use intsemi::eval::eval_expression;
use intsemi::{analyze, build_semigroup, AnalysisOptions, Error, SemigroupSpec};
use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;

create_exception!(intsemi_py, IntsemiError, PyException, "Invalid input to the interval semigroup library.");
create_exception!(intsemi_py, CapExceededError, IntsemiError, "The semigroup has more elements than the cap allows.");

fn to_py(err: Error) -> PyErr {
    match err {
        Error::CapExceeded { .. } => CapExceededError::new_err(err.to_string()),
        other => IntsemiError::new_err(other.to_string()),
    }
}

fn parse_spec(spec_json: &str, max_elements: Option<u64>) -> PyResult<SemigroupSpec> {
    let mut spec = SemigroupSpec::from_json_str(spec_json).map_err(to_py)?;
    if let Some(cap) = max_elements {
        spec.element_cap = cap;
    }
    Ok(spec)
}

/// Canonical renderings of every element, in canonical order.
#[pyfunction]
#[pyo3(signature = (spec_json, max_elements=None))]
fn construct(spec_json: &str, max_elements: Option<u64>) -> PyResult<Vec<String>> {
    let s = build_semigroup(&parse_spec(spec_json, max_elements)?).map_err(to_py)?;
    Ok((0..s.order()).map(|i| s.render(i)).collect())
}

/// The structure report as JSON text.
#[pyfunction]
#[pyo3(signature = (spec_json, max_elements=None, subset_oracle_cap=None))]
fn analyze_json(
    py: Python<'_>,
    spec_json: &str,
    max_elements: Option<u64>,
    subset_oracle_cap: Option<usize>,
) -> PyResult<String> {
    let spec = parse_spec(spec_json, max_elements)?;
    py.detach(|| {
        let s = build_semigroup(&spec)?;
        let mut opts = AnalysisOptions::default();
        if let Some(cap) = subset_oracle_cap {
            opts.subset_oracle_cap = cap;
        }
        Ok(analyze(&s, &opts).to_json())
    })
    .map_err(to_py)
}

/// Cayley table rows as rendered elements.
#[pyfunction]
#[pyo3(signature = (spec_json, max_elements=None))]
fn cayley_table(spec_json: &str, max_elements: Option<u64>) -> PyResult<Vec<Vec<String>>> {
    let s = build_semigroup(&parse_spec(spec_json, max_elements)?).map_err(to_py)?;
    Ok(s.table_rows().iter().map(|row| row.iter().map(|&c| s.render(c)).collect()).collect())
}

/// Evaluates a JSON expression tree in the spec's carrier and returns the rendering.
#[pyfunction]
fn evaluate(spec_json: &str, expr_json: &str) -> PyResult<String> {
    let spec = parse_spec(spec_json, None)?;
    let expr: serde_json::Value =
        serde_json::from_str(expr_json).map_err(|e| IntsemiError::new_err(format!("expression: {e}")))?;
    Ok(eval_expression(&spec, &expr).map_err(to_py)?.to_string())
}

/// Runs the embedded claims catalog and returns the summary as JSON text.
#[pyfunction]
#[pyo3(signature = (prefix=None))]
fn verify_claims_json(py: Python<'_>, prefix: Option<String>) -> PyResult<String> {
    let summary = py.detach(|| verify_claims(prefix.as_deref())).map_err(to_py)?;
    Ok(serde_json::to_string(&summary).expect("summaries serialize"))
}

#[pymodule]
pub fn intsemi_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("IntsemiError", m.py().get_type::<IntsemiError>())?;
    m.add("CapExceededError", m.py().get_type::<CapExceededError>())?;
    m.add_function(wrap_pyfunction!(construct, m)?)?;
    m.add_function(wrap_pyfunction!(analyze_json, m)?)?;
    m.add_function(wrap_pyfunction!(cayley_table, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate, m)?)?;
    m.add_function(wrap_pyfunction!(verify_claims_json, m)?)?;
    Ok(())
}
