//! The embedded catalog of worked-example claims and its runner.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value as Json};

use crate::analyzer::{
    analyze, build_semigroup, closure, elements::closure_violation, is_ideal, is_subgroup, maximal_subgroup_at,
    monogenic_profile, normality_partition, AnalysisOptions, Carrier, FiniteSemigroup, SemigroupSpec, Side,
};
use crate::error::{Error, Result};
use crate::eval::eval_expression;
use crate::fuzzy::{
    exponent_indices, fuzzy_family_build, fuzzy_ideal_check, special_fuzzy_map_check, FuzzyFamilySpec, FuzzyRule,
    FuzzySource, LatticeOp, LawMode, SpecialFuzzyMap,
};
use crate::transform::{self, IntervalLabel, IntervalSetX, TransformationMap};

const CLAIMS_JSON: &str = include_str!("../data/claims.json");

/// Whether the printed statement is expected to hold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimStatus {
    Verified,
    KnownDiscrepancy,
}

/// How the computed result is compared with an expectation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Matcher {
    /// Exact JSON equality.
    #[default]
    Equals,
    /// Every key of the expected object equals the same key of the result.
    Fields,
    /// The result array contains every expected item.
    Contains,
    /// The check fails with an error whose message contains the expected text.
    Error,
}

/// Where a special fuzzy map draws its arguments.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MapSourceSpec {
    Spec(SemigroupSpec),
    PositiveIntegers(u64),
}

/// A mechanical check whose JSON result is compared with the expectation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Check {
    /// Evaluates an expression tree; the result is the rendered value.
    Eval {
        spec: SemigroupSpec,
        expr: Json,
    },
    /// Number of elements; built when within the cap, counted otherwise.
    Order {
        spec: SemigroupSpec,
    },
    /// A JSON pointer into the structure report.
    Analyze {
        spec: SemigroupSpec,
        path: String,
        #[serde(default)]
        options: Option<AnalysisOptions>,
    },
    Subgroup {
        spec: SemigroupSpec,
        set: Vec<Json>,
    },
    Ideal {
        spec: SemigroupSpec,
        set: Vec<Json>,
        #[serde(default = "two_sided")]
        side: Side,
    },
    /// Closure of a subset under the operation.
    Closed {
        spec: SemigroupSpec,
        set: Vec<Json>,
    },
    /// The subsemigroup generated by `seed`.
    Closure {
        spec: SemigroupSpec,
        seed: Vec<Json>,
    },
    MaximalSubgroup {
        spec: SemigroupSpec,
        idempotent: Json,
    },
    Monogenic {
        spec: SemigroupSpec,
        element: Json,
    },
    Normality {
        spec: SemigroupSpec,
        subgroup: Vec<Json>,
    },
    /// Ideal check for the set whose entries range over `allowed` in every coordinate
    /// of a componentwise row-matrix semigroup, decided on one coordinate.
    CoordinateIdeal {
        spec: SemigroupSpec,
        allowed: Vec<String>,
    },
    /// Rows vanishing outside each nonempty proper coordinate subset.
    SupportIdeals {
        spec: SemigroupSpec,
    },
    /// Span of a special interval set and the order of its symmetric semigroup.
    Span {
        labels: Vec<String>,
    },
    /// Order of one map and whether it divides `n^n`.
    MapOrder {
        images: Vec<usize>,
    },
    FuzzyIdeal {
        family: FuzzyFamilySpec,
        op: LatticeOp,
        exponents: [u64; 2],
    },
    FuzzyMap {
        source: MapSourceSpec,
        rule: FuzzyRule,
        mode: LawMode,
    },
}

fn two_sided() -> Side {
    Side::TwoSided
}

/// One claim of the catalog.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClaimEntry {
    pub id: String,
    pub note: String,
    pub status: ClaimStatus,
    pub check: Check,
    #[serde(default, rename = "match")]
    pub matcher: Matcher,
    /// Expected result of a verified claim.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Json>,
    /// The printed value of a known discrepancy.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claimed: Option<Json>,
    /// The computed value of a known discrepancy.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub derived: Option<Json>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Pass,
    Fail,
    KnownDiscrepancy,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::KnownDiscrepancy => "KNOWN_DISCREPANCY",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClaimResult {
    pub id: String,
    pub verdict: Verdict,
    pub note: String,
    pub actual: Json,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<Json>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub claimed: Option<Json>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub derived: Option<Json>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CatalogSummary {
    pub total: usize,
    pub passed: usize,
    pub known_discrepancies: usize,
    pub failed: usize,
    pub results: Vec<ClaimResult>,
}

impl CatalogSummary {
    pub fn all_expected(&self) -> bool {
        self.failed == 0
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            out.push_str(&format!("{:<18} {}  {}\n", r.verdict.to_string(), r.id, r.note));
            match r.verdict {
                Verdict::Pass => {}
                Verdict::KnownDiscrepancy => {
                    out.push_str(&format!("    claimed: {}\n", compact(r.claimed.as_ref())));
                    out.push_str(&format!("    derived: {}\n", compact(Some(&r.actual))));
                }
                Verdict::Fail => {
                    let want = r.expected.as_ref().or(r.derived.as_ref());
                    out.push_str(&format!("    expected: {}\n", compact(want)));
                    out.push_str(&format!("    actual:   {}\n", compact(Some(&r.actual))));
                }
            }
        }
        out.push_str(&format!(
            "{} claims: {} passed, {} known discrepancies, {} failed\n",
            self.total, self.passed, self.known_discrepancies, self.failed
        ));
        out
    }
}

fn compact(v: Option<&Json>) -> String {
    v.map_or("(none)".into(), |v| v.to_string())
}

/// The embedded catalog, sorted by id.
pub fn load_catalog() -> Result<Vec<ClaimEntry>> {
    let mut entries: Vec<ClaimEntry> =
        serde_json::from_str(CLAIMS_JSON).map_err(|e| Error::InvalidInput(format!("claims catalog: {e}")))?;
    entries.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(entries)
}

/// Runs every entry whose id starts with `prefix`; an unmatched prefix is an error.
pub fn verify_claims(prefix: Option<&str>) -> Result<CatalogSummary> {
    let entries: Vec<ClaimEntry> =
        load_catalog()?.into_iter().filter(|e| prefix.is_none_or(|p| e.id.starts_with(p))).collect();
    if entries.is_empty() {
        return Err(Error::InvalidInput(format!("no claim id starts with '{}'", prefix.unwrap_or(""))));
    }
    let results: Vec<ClaimResult> = entries.par_iter().map(run_claim).collect();
    let count = |v: Verdict| results.iter().filter(|r| r.verdict == v).count();
    Ok(CatalogSummary {
        total: results.len(),
        passed: count(Verdict::Pass),
        known_discrepancies: count(Verdict::KnownDiscrepancy),
        failed: count(Verdict::Fail),
        results,
    })
}

/// Runs one entry and grades it.
pub fn run_claim(entry: &ClaimEntry) -> ClaimResult {
    let outcome = run_check(&entry.check);
    let actual = match &outcome {
        Ok(v) => v.clone(),
        Err(e) => json!({ "error": e.to_string() }),
    };
    let verdict = match entry.status {
        ClaimStatus::Verified => {
            if grade(entry.matcher, &outcome, entry.expected.as_ref()) {
                Verdict::Pass
            } else {
                Verdict::Fail
            }
        }
        ClaimStatus::KnownDiscrepancy => {
            let refutes_claim = !grade(entry.matcher, &outcome, entry.claimed.as_ref());
            let matches_derived = grade(entry.matcher, &outcome, entry.derived.as_ref());
            if refutes_claim && matches_derived {
                Verdict::KnownDiscrepancy
            } else {
                Verdict::Fail
            }
        }
    };
    ClaimResult {
        id: entry.id.clone(),
        verdict,
        note: entry.note.clone(),
        actual,
        expected: entry.expected.clone(),
        claimed: entry.claimed.clone(),
        derived: entry.derived.clone(),
    }
}

fn grade(matcher: Matcher, outcome: &Result<Json>, expected: Option<&Json>) -> bool {
    let Some(expected) = expected else { return false };
    match (matcher, outcome) {
        (Matcher::Error, Err(e)) => expected.as_str().is_some_and(|text| e.to_string().contains(text)),
        (Matcher::Error, Ok(_)) | (_, Err(_)) => false,
        (Matcher::Equals, Ok(actual)) => actual == expected,
        (Matcher::Fields, Ok(actual)) => match expected.as_object() {
            Some(fields) => fields.iter().all(|(k, v)| actual.get(k) == Some(v)),
            None => false,
        },
        (Matcher::Contains, Ok(actual)) => match (actual.as_array(), expected.as_array()) {
            (Some(have), Some(want)) => want.iter().all(|w| have.contains(w)),
            _ => false,
        },
    }
}

fn render_witness(s: &FiniteSemigroup, left: usize, right: usize, product: usize) -> String {
    format!("{} * {} = {}", s.render(left), s.render(right), s.render(product))
}

fn number(n: BigUint) -> Json {
    match u64::try_from(&n) {
        Ok(v) => json!(v),
        Err(_) => json!(n.to_string()),
    }
}

/// Executes a check and returns its JSON result.
pub fn run_check(check: &Check) -> Result<Json> {
    match check {
        Check::Eval { spec, expr } => Ok(json!(eval_expression(spec, expr)?.to_string())),
        Check::Order { spec } => {
            let size = spec.carrier_size()?;
            if size <= BigUint::from(spec.element_cap) {
                Ok(json!(build_semigroup(spec)?.order()))
            } else {
                Ok(number(size))
            }
        }
        Check::Analyze { spec, path, options } => {
            let s = build_semigroup(spec)?;
            let report = serde_json::to_value(analyze(&s, &options.clone().unwrap_or_default()))
                .map_err(|e| Error::InvalidInput(e.to_string()))?;
            report.pointer(path).cloned().ok_or_else(|| Error::InvalidInput(format!("report has no field at '{path}'")))
        }
        Check::Subgroup { spec, set } => {
            let s = build_semigroup(spec)?;
            let t = s.locate_all(set)?;
            let c = is_subgroup(&s, &t)?;
            Ok(json!({
                "is_subgroup": c.is_subgroup,
                "identity": c.identity.map(|e| s.render(e)),
                "reason": c.reason,
            }))
        }
        Check::Ideal { spec, set, side } => {
            let s = build_semigroup(spec)?;
            let t = s.locate_all(set)?;
            let c = is_ideal(&s, &t, *side)?;
            Ok(json!({
                "is_ideal": c.is_ideal,
                "closed": c.closed,
                "witness": c.witness.map(|w| render_witness(&s, w.left, w.right, w.product)),
            }))
        }
        Check::Closed { spec, set } => {
            let s = build_semigroup(spec)?;
            let t = s.locate_all(set)?;
            let w = closure_violation(&s, &t)?;
            Ok(json!({
                "closed": w.is_none(),
                "witness": w.map(|w| render_witness(&s, w.left, w.right, w.product)),
            }))
        }
        Check::Closure { spec, seed } => {
            let s = build_semigroup(spec)?;
            let t = s.locate_all(seed)?;
            let c = closure(&s, &t);
            Ok(json!({ "order": c.len(), "elements": s.render_set(&c) }))
        }
        Check::MaximalSubgroup { spec, idempotent } => {
            let s = build_semigroup(spec)?;
            let e = s.locate(idempotent)?;
            let id = crate::analyzer::elements::identity(&s);
            let profiles = crate::analyzer::elements::all_profiles(&s, id);
            Ok(json!(s.render_set(&maximal_subgroup_at(&s, &profiles, e)?)))
        }
        Check::Monogenic { spec, element } => {
            let s = build_semigroup(spec)?;
            let x = s.locate(element)?;
            let p = monogenic_profile(&s, x, crate::analyzer::elements::identity(&s));
            Ok(json!({
                "index": p.index,
                "period": p.period,
                "order": p.order_rel_identity,
                "idempotent": s.render(p.idempotent),
            }))
        }
        Check::Normality { spec, subgroup } => {
            let s = build_semigroup(spec)?;
            let h = s.locate_all(subgroup)?;
            let p = normality_partition(&s, &h)?;
            Ok(json!({
                "stabilizing": p.stabilizing.len(),
                "exceptional": s.render_set(&p.exceptional),
            }))
        }
        Check::CoordinateIdeal { spec, allowed } => coordinate_ideal(spec, allowed),
        Check::SupportIdeals { spec } => support_ideals(spec),
        Check::Span { labels } => {
            let labels = labels.iter().map(|l| IntervalLabel::parse(l)).collect::<Result<Vec<_>>>()?;
            let x = IntervalSetX::new(labels)?;
            let span = transform::span_special_intervals(&x)?;
            Ok(json!({
                "special": x.is_special(),
                "span_size": span.len(),
                "symmetric_order": number(transform::special_symmetric_order(&x)?),
            }))
        }
        Check::MapOrder { images } => {
            let f = TransformationMap::new(images.clone())?;
            let n = f.n();
            let identity = TransformationMap::identity(n);
            if !f.is_bijective() {
                return Ok(json!({ "order": null, "divides": false }));
            }
            let mut power = f.clone();
            let mut t = 1u64;
            while power != identity {
                power = power.compose(&f)?;
                t += 1;
            }
            let total = transform::symmetric_semigroup_order(n);
            Ok(json!({ "order": t, "divides": (&total % BigUint::from(t)) == BigUint::from(0u8) }))
        }
        Check::FuzzyIdeal { family, op, exponents } => {
            let s = fuzzy_family_build(family, *op)?;
            let t = exponent_indices(&s, exponents[0]..=exponents[1])?;
            let c = fuzzy_ideal_check(&s, &t)?;
            Ok(json!({
                "order": s.order(),
                "is_ideal": c.is_ideal,
                "witness": c.witness.map(|w| render_witness(&s, w.left, w.right, w.product)),
            }))
        }
        Check::FuzzyMap { source, rule, mode } => {
            let built;
            let source = match source {
                MapSourceSpec::Spec(spec) => {
                    built = build_semigroup(spec)?;
                    FuzzySource::Semigroup(&built)
                }
                MapSourceSpec::PositiveIntegers(max) => FuzzySource::PositiveIntegers { max: *max },
            };
            let report = special_fuzzy_map_check(&SpecialFuzzyMap { source, rule: rule.clone() }, *mode)?;
            let mut out = json!({
                "mode": mode,
                "holds": report.holds,
                "pairs_checked": report.pairs_checked,
                "first_violation": report.first_violation(),
            });
            for v in &report.verdicts {
                out[v.mode.to_string()] = json!(v.holds);
            }
            Ok(out)
        }
    }
}

/// A product set `A^n` in a componentwise semigroup is an ideal iff `A` is one coordinatewise.
fn coordinate_ideal(spec: &SemigroupSpec, allowed: &[String]) -> Result<Json> {
    let Carrier::RowMatrix { len, constant: false } = spec.carrier else {
        return Err(Error::InvalidInput("field 'carrier': coordinate ideals need a row_matrix carrier".into()));
    };
    let mut coordinate = spec.clone();
    coordinate.carrier = Carrier::Interval;
    coordinate.exclude_zero = false;
    let s = build_semigroup(&coordinate)?;
    let items: Vec<Json> = allowed.iter().map(|a| json!(a)).collect();
    let t = s.locate_all(&items)?;
    let c = is_ideal(&s, &t, Side::TwoSided)?;
    let lift = |i: usize| format!("({})", vec![s.render(i); len].join(", "));
    Ok(json!({
        "is_ideal": c.is_ideal,
        "closed": c.closed,
        "witness": c.witness.map(|w| format!("{} * {} = {}", lift(w.left), lift(w.right), lift(w.product))),
    }))
}

fn support_ideals(spec: &SemigroupSpec) -> Result<Json> {
    let Carrier::RowMatrix { len, constant: false } = spec.carrier else {
        return Err(Error::InvalidInput("field 'carrier': support ideals need a row_matrix carrier".into()));
    };
    if len > 16 {
        return Err(Error::InvalidInput("field 'len': support patterns are enumerated up to length 16".into()));
    }
    let s = build_semigroup(spec)?;
    let mut verdicts = BTreeMap::new();
    for mask in 1u32..(1 << len) - 1 {
        let members: Vec<usize> = (0..s.order())
            .filter(|&i| {
                let m = s.element(i).as_matrix().expect("row matrices");
                (0..len).all(|c| mask >> c & 1 == 1 || m.get(0, c).is_zero())
            })
            .collect();
        let pattern: String = (0..len).map(|c| if mask >> c & 1 == 1 { '*' } else { '0' }).collect();
        verdicts.insert(pattern, is_ideal(&s, &members, Side::TwoSided)?.is_ideal);
    }
    let distinct = verdicts.len();
    Ok(json!({
        "patterns": distinct,
        "all_ideals": verdicts.values().all(|&b| b),
        "verdicts": verdicts,
    }))
}
