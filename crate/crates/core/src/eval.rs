//! Evaluation of JSON expression trees inside a semigroup carrier.
//!
//! A node is either a literal (any form accepted by [`Value::from_json`]) or
//! `{"op": name, "args": [..]}` with `name` one of `add`, `mul`, `min`, `max`,
//! `compose`, `det`, or `pow` (which also takes `"exp": k`, `k >= 1`).

use serde_json::Value as Json;

use crate::analyzer::{Carrier, Operation, SemigroupSpec};
use crate::error::{Error, Result};
use crate::polynomial::IntervalPolynomial;
use crate::value::Value;

fn at(path: &str, err: Error) -> Error {
    match err {
        Error::Expression { .. } | Error::CapExceeded { .. } => err,
        other => Error::Expression { path: path.to_string(), message: other.to_string() },
    }
}

fn node_error(path: &str, message: impl Into<String>) -> Error {
    Error::Expression { path: path.to_string(), message: message.into() }
}

/// Evaluates `expr` with the arithmetic of `spec`'s carrier.
pub fn eval_expression(spec: &SemigroupSpec, expr: &Json) -> Result<Value> {
    eval_node(spec, expr, "$")
}

fn literal(spec: &SemigroupSpec, json: &Json, path: &str) -> Result<Value> {
    let v = Value::from_json(spec.coefficient_domain(), json).map_err(|e| at(path, e))?;
    let polynomial_carrier =
        matches!(spec.carrier, Carrier::Polynomial | Carrier::PolynomialCyclic { .. } | Carrier::Monomial { .. });
    Ok(match v {
        Value::Interval(iv) if polynomial_carrier => Value::Polynomial(IntervalPolynomial::monomial(iv, 0)),
        Value::Polynomial(p) => match spec.carrier.rule() {
            Some(rule) => Value::Polynomial(p.reduce(&rule).map_err(|e| at(path, e))?),
            None => Value::Polynomial(p),
        },
        v => v,
    })
}

fn eval_node(spec: &SemigroupSpec, node: &Json, path: &str) -> Result<Value> {
    let Some(obj) = node.as_object().filter(|o| o.contains_key("op")) else {
        return literal(spec, node, path);
    };
    let op = obj["op"].as_str().ok_or_else(|| node_error(path, "'op' must be a string"))?;
    let args = obj
        .get("args")
        .and_then(Json::as_array)
        .ok_or_else(|| node_error(path, format!("'{op}' needs an 'args' array")))?;
    let values: Vec<Value> = args
        .iter()
        .enumerate()
        .map(|(i, a)| eval_node(spec, a, &format!("{path}.args[{i}]")))
        .collect::<Result<_>>()?;
    let arity = |n: usize| -> Result<()> {
        if values.len() == n {
            Ok(())
        } else {
            Err(node_error(path, format!("'{op}' takes {n} argument(s), got {}", values.len())))
        }
    };
    let binary = |operation: Operation| -> Result<Value> {
        if values.len() < 2 {
            return Err(node_error(path, format!("'{op}' takes at least 2 arguments, got {}", values.len())));
        }
        let mut local = spec.clone();
        local.operation = operation;
        local.validate_operation().map_err(|e| at(path, e))?;
        let mut acc = values[0].clone();
        for v in &values[1..] {
            acc = local.combine(&acc, v).map_err(|e| at(path, e))?;
        }
        Ok(acc)
    };
    match op {
        "add" => binary(Operation::Add),
        "mul" => binary(Operation::Mul),
        "min" => binary(Operation::Min),
        "max" => binary(Operation::Max),
        "compose" => {
            if !matches!(
                spec.carrier,
                Carrier::FullTransformation { .. }
                    | Carrier::Permutations { .. }
                    | Carrier::PermutationsAndConstants { .. }
            ) {
                return Err(node_error(path, "'compose' needs a map carrier"));
            }
            binary(Operation::Mul)
        }
        "pow" => {
            arity(1)?;
            let k = obj
                .get("exp")
                .and_then(Json::as_u64)
                .filter(|&k| k >= 1)
                .ok_or_else(|| node_error(path, "'pow' needs a positive integer 'exp'"))?;
            let mut local = spec.clone();
            local.operation = Operation::Mul;
            local.validate_operation().map_err(|e| at(path, e))?;
            let base = &values[0];
            let mut acc = base.clone();
            for _ in 1..k {
                acc = local.combine(&acc, base).map_err(|e| at(path, e))?;
            }
            Ok(acc)
        }
        "det" => {
            arity(1)?;
            let m = values[0].as_matrix().map_err(|e| at(path, e))?;
            Ok(Value::Interval(m.determinant().map_err(|e| at(path, e))?.value))
        }
        other => Err(node_error(path, format!("unknown op '{other}'"))),
    }
}
