//! The structure report and the analysis driver.

use serde::Serialize;

use super::build::{Carrier, FiniteSemigroup, SemigroupSpec};
use super::elements::{all_profiles, special_elements};
use super::ideals::IdealLattice;
use super::smarandache::{smarandache_report, AnalysisOptions, SylowClass};
use super::subgroups::{maximal_subgroups, subgroup_order_set};

/// Version of the report JSON layout.
pub const REPORT_SCHEMA: u32 = 1;
/// Subgroups and ideals with more members than this are summarized by order only.
const LISTING_CAP: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZeroDivisorSummary {
    pub listed: Vec<[String; 2]>,
    pub total: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaximalSubgroupEntry {
    pub idempotent: String,
    pub order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubgroupData {
    pub maximal_subgroups: Vec<MaximalSubgroupEntry>,
    pub orders: Vec<usize>,
    pub orders_exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrincipalIdealEntry {
    pub generator: String,
    pub order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealData {
    pub principal_ideals: Vec<PrincipalIdealEntry>,
    pub minimal_ideals: Vec<PrincipalIdealEntry>,
    /// Number of two-sided ideals; `None` when above the counting bound.
    pub ideal_count: Option<u64>,
    pub has_proper_ideal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmarandacheData {
    pub is_s_semigroup: bool,
    pub is_s_lagrange: bool,
    pub is_s_weakly_lagrange: bool,
    pub s_p_sylow: Vec<SylowClass>,
    pub s_cauchy_elements: Vec<String>,
    pub has_s_hyper_subsemigroup: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hyper_witness: Option<Vec<String>>,
    pub is_simple: bool,
    pub is_doubly_simple: bool,
}

/// Everything the analyzer reports about one finite semigroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub schema: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spec: Option<SemigroupSpec>,
    pub options: AnalysisOptions,
    pub order: usize,
    pub is_commutative: bool,
    pub identity: Option<String>,
    pub zero: Option<String>,
    pub idempotents: Vec<String>,
    pub nilpotents: Vec<String>,
    pub units: Vec<String>,
    pub zero_divisor_pairs: ZeroDivisorSummary,
    pub subgroups: SubgroupData,
    pub ideals: IdealData,
    pub smarandache: SmarandacheData,
    pub method_notes: Vec<String>,
}

impl StructureReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// Human-readable summary.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let list = |v: &[String]| if v.is_empty() { "(none)".to_string() } else { v.join(", ") };
        let opt = |v: &Option<String>| v.clone().unwrap_or_else(|| "(none)".into());
        out.push_str(&format!("order: {}\n", self.order));
        out.push_str(&format!("commutative: {}\n", self.is_commutative));
        out.push_str(&format!("identity: {}\n", opt(&self.identity)));
        out.push_str(&format!("zero: {}\n", opt(&self.zero)));
        out.push_str(&format!("idempotents: {}\n", list(&self.idempotents)));
        out.push_str(&format!("nilpotents: {}\n", list(&self.nilpotents)));
        out.push_str(&format!("units: {}\n", list(&self.units)));
        out.push_str(&format!("zero-divisor pairs: {} total\n", self.zero_divisor_pairs.total));
        for [a, b] in &self.zero_divisor_pairs.listed {
            out.push_str(&format!("  {a} * {b}\n"));
        }
        out.push_str("maximal subgroups:\n");
        for g in &self.subgroups.maximal_subgroups {
            match &g.elements {
                Some(e) => out.push_str(&format!("  at {} (order {}): {}\n", g.idempotent, g.order, e.join(", "))),
                None => out.push_str(&format!("  at {} (order {})\n", g.idempotent, g.order)),
            }
        }
        let orders: Vec<String> = self.subgroups.orders.iter().map(|o| o.to_string()).collect();
        out.push_str(&format!(
            "subgroup orders: {{{}}} ({})\n",
            orders.join(", "),
            if self.subgroups.orders_exact { "exact" } else { "partial" }
        ));
        out.push_str(&format!("principal ideals: {}\n", self.ideals.principal_ideals.len()));
        for p in &self.ideals.principal_ideals {
            out.push_str(&format!("  generated by {} (order {})\n", p.generator, p.order));
        }
        for m in &self.ideals.minimal_ideals {
            match &m.elements {
                Some(e) => out.push_str(&format!("minimal ideal: {}\n", e.join(", "))),
                None => out.push_str(&format!("minimal ideal: order {}\n", m.order)),
            }
        }
        out.push_str(&format!(
            "ideal count: {}\n",
            self.ideals.ideal_count.map_or("above bound".to_string(), |c| c.to_string())
        ));
        out.push_str(&format!("has proper ideal: {}\n", self.ideals.has_proper_ideal));
        let sm = &self.smarandache;
        out.push_str(&format!("S-semigroup: {}\n", sm.is_s_semigroup));
        out.push_str(&format!("S-Lagrange: {}\n", sm.is_s_lagrange));
        out.push_str(&format!("S-weakly Lagrange: {}\n", sm.is_s_weakly_lagrange));
        for c in &sm.s_p_sylow {
            out.push_str(&format!(
                "S-{}-Sylow orders: {:?}; non-Sylow: {:?}; other: {:?}\n",
                c.prime, c.sylow, c.non_sylow, c.other
            ));
        }
        out.push_str(&format!("S-Cauchy elements: {}\n", list(&sm.s_cauchy_elements)));
        match &sm.hyper_witness {
            Some(w) => out.push_str(&format!("S-hyper subsemigroup: {}\n", w.join(", "))),
            None => out.push_str("S-hyper subsemigroup: (none)\n"),
        }
        out.push_str(&format!("simple: {}\n", sm.is_simple));
        out.push_str(&format!("doubly simple: {}\n", sm.is_doubly_simple));
        for note in &self.method_notes {
            out.push_str(&format!("note: {note}\n"));
        }
        out
    }
}

/// Runs every analysis on `s`.
pub fn analyze(s: &FiniteSemigroup, opts: &AnalysisOptions) -> StructureReport {
    let n = s.order();
    let mut notes = Vec::new();
    if let Some(spec) = s.spec() {
        if matches!(
            spec.carrier,
            Carrier::FullTransformation { .. }
                | Carrier::Permutations { .. }
                | Carrier::PermutationsAndConstants { .. }
        ) {
            notes.push("maps compose as (f*g)(i) = f(g(i)); g is applied first".into());
        }
    }
    if !s.has_table() {
        notes.push(format!("order {n} is above the table threshold; products are evaluated on demand"));
    }
    let identity = super::elements::identity(s);
    let profiles = all_profiles(s, identity);
    let special = special_elements(s, &profiles, opts.zero_divisor_list_cap);
    notes.extend(special.notes.iter().cloned());
    let maximal = maximal_subgroups(s, &profiles);
    let orders = subgroup_order_set(s, &profiles, &maximal, opts.exact_cap);
    notes.extend(orders.notes.iter().cloned());
    let lattice = IdealLattice::new(s);
    let ideal_count = lattice.count_ideals(opts.ideal_count_bound);
    if ideal_count.is_none() {
        notes.push(format!("ideal count exceeds the bound {}", opts.ideal_count_bound));
    }
    let flags = smarandache_report(s, &profiles, &maximal, &orders, &lattice, identity, opts);
    notes.extend(flags.notes.iter().cloned());

    let render = |set: &[usize]| s.render_set(set);
    let listing = |set: &[usize]| (set.len() <= LISTING_CAP).then(|| render(set));
    StructureReport {
        schema: REPORT_SCHEMA,
        spec: s.spec().cloned(),
        options: opts.clone(),
        order: n,
        is_commutative: s.is_commutative(),
        identity: identity.map(|e| s.render(e)),
        zero: special.zero.map(|z| s.render(z)),
        idempotents: render(&special.idempotents),
        nilpotents: special.nilpotents.iter().map(|&(x, _)| s.render(x)).collect(),
        units: special.units.iter().map(|&(x, _)| s.render(x)).collect(),
        zero_divisor_pairs: ZeroDivisorSummary {
            listed: special.zero_divisor_pairs.iter().map(|&(a, b)| [s.render(a), s.render(b)]).collect(),
            total: special.zero_divisor_total,
        },
        subgroups: SubgroupData {
            maximal_subgroups: maximal
                .iter()
                .map(|(e, g)| MaximalSubgroupEntry { idempotent: s.render(*e), order: g.len(), elements: listing(g) })
                .collect(),
            orders: orders.orders.iter().copied().collect(),
            orders_exact: orders.exact,
        },
        ideals: IdealData {
            principal_ideals: lattice
                .principal_ideals()
                .into_iter()
                .map(|(g, members)| PrincipalIdealEntry {
                    generator: s.render(g),
                    order: members.len(),
                    elements: listing(&members),
                })
                .collect(),
            minimal_ideals: lattice
                .minimal_ideals()
                .iter()
                .map(|m| PrincipalIdealEntry { generator: s.render(m[0]), order: m.len(), elements: listing(m) })
                .collect(),
            ideal_count,
            has_proper_ideal: lattice.has_proper_ideal(),
        },
        smarandache: SmarandacheData {
            is_s_semigroup: flags.is_s_semigroup,
            is_s_lagrange: flags.is_s_lagrange,
            is_s_weakly_lagrange: flags.is_s_weakly_lagrange,
            s_p_sylow: flags.s_p_sylow.clone(),
            s_cauchy_elements: render(&flags.s_cauchy_elements),
            has_s_hyper_subsemigroup: flags.has_s_hyper_subsemigroup,
            hyper_witness: flags.hyper_witness.as_ref().map(|w| render(w)),
            is_simple: flags.is_simple,
            is_doubly_simple: flags.is_doubly_simple,
        },
        method_notes: notes,
    }
}
