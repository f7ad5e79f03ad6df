//! Record building and rendering (text, JSON, CSV) for the CLI.

use std::collections::BTreeMap;

use qspread::bounds::{BestBounds, BoundDirection, BoundResult, ParamWitness};
use serde::Serialize;

/// One bound-table row. Big values are decimal strings: JSON numbers lose
/// precision past 2^53 and several bounds here exceed that.
#[derive(Debug, Clone, Serialize)]
pub struct OutputRecord {
    pub q: u32,
    pub n: u32,
    pub t: u32,
    pub k: u32,
    pub r: u32,
    pub l: String,
    pub lower: String,
    pub upper: String,
    pub exact: bool,
    pub upper_method: String,
    pub params: BTreeMap<String, String>,
}

pub fn params_map(params: &Option<ParamWitness>) -> BTreeMap<String, String> {
    let mut map = BTreeMap::new();
    match params {
        Some(ParamWitness::ZU { z, u }) => {
            map.insert("z".into(), z.to_string());
            map.insert("u".into(), u.to_string());
        }
        Some(ParamWitness::ZYX { z, y, x }) => {
            map.insert("z".into(), z.to_string());
            map.insert("y".into(), y.to_string());
            map.insert("x".into(), x.to_string());
        }
        Some(ParamWitness::Witness { id }) => {
            map.insert("witness".into(), id.clone());
        }
        None => {}
    }
    map
}

impl OutputRecord {
    pub fn from_best(bb: &BestBounds) -> Self {
        let inst = &bb.instance;
        OutputRecord {
            q: inst.q(),
            n: inst.n(),
            t: inst.t(),
            k: inst.k(),
            r: inst.r(),
            l: inst.l().to_string(),
            lower: bb.lower.value.to_string(),
            upper: bb.upper.value.to_string(),
            exact: bb.exact,
            upper_method: bb.upper.method.name().to_string(),
            params: params_map(&bb.upper.params),
        }
    }
}

pub const CSV_HEADER: &str = "q,n,t,k,r,l,lower,upper,exact,upper_method,z,y,x";

pub fn csv_row(rec: &OutputRecord) -> String {
    let get = |key: &str| rec.params.get(key).cloned().unwrap_or_default();
    format!(
        "{},{},{},{},{},{},{},{},{},{},{},{},{}",
        rec.q,
        rec.n,
        rec.t,
        rec.k,
        rec.r,
        rec.l,
        rec.lower,
        rec.upper,
        rec.exact,
        rec.upper_method,
        get("z"),
        get("y"),
        get("x"),
    )
}

/// A single method row for `--all-methods` output.
#[derive(Debug, Clone, Serialize)]
pub struct MethodRecord {
    pub method: String,
    pub direction: String,
    pub value: String,
    pub params: BTreeMap<String, String>,
    pub certificate: Vec<String>,
}

impl MethodRecord {
    pub fn from_bound(b: &BoundResult) -> Self {
        MethodRecord {
            method: b.method.name().to_string(),
            direction: match b.direction {
                BoundDirection::Lower => "lower".into(),
                BoundDirection::Upper => "upper".into(),
            },
            value: b.value.to_string(),
            params: params_map(&b.params),
            certificate: b.certificate.clone(),
        }
    }
}

pub fn render_params(params: &BTreeMap<String, String>) -> String {
    if params.is_empty() {
        return String::new();
    }
    let inner: Vec<String> = params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    format!(" ({})", inner.join(", "))
}

pub fn bound_text(bb: &BestBounds) -> String {
    let inst = &bb.instance;
    let rec = OutputRecord::from_best(bb);
    format!(
        "A_{}({}, {}; {}): k={} r={} l={}\n  lower  {}  {}\n  upper  {}  {}{}\n  exact  {}",
        inst.q(),
        inst.n(),
        2 * inst.t(),
        inst.t(),
        inst.k(),
        inst.r(),
        inst.l(),
        rec.lower,
        bb.lower.method.name(),
        rec.upper,
        rec.upper_method,
        render_params(&rec.params),
        if bb.exact { "yes" } else { "no" },
    )
}

pub fn methods_text(rows: &[MethodRecord]) -> String {
    let mut out = String::from("methods:\n");
    for row in rows {
        out.push_str(&format!(
            "  {:<13} {:<5} {}{}\n",
            row.method,
            row.direction,
            row.value,
            render_params(&row.params)
        ));
        for line in &row.certificate {
            out.push_str(&format!("    | {line}\n"));
        }
    }
    out.trim_end().to_string()
}
