//! JSON shapes for lemma reports and scenario tables. Field names are
//! part of the output contract; exact values are emitted alongside
//! decimal approximations.

use serde_json::{json, Value};

use crate::exactmath::Rat;

use super::satake::ScenarioRow;
use super::verify::LemmaReport;

/// Exact decimal-free rendering of a rational ("16", "-1/3").
pub fn rat_string(r: &Rat) -> String {
    r.to_string()
}

pub fn report_json(r: &LemmaReport) -> Value {
    json!({
        "lemma": r.lemma,
        "pass": r.pass,
        "witnesses": r.witnesses,
    })
}

pub fn row_json(row: &ScenarioRow) -> Value {
    json!({
        "nu": row.nu_hypothesis.name(),
        "class": row.class.name(),
        "S": row.s.iter().map(|c| c.json()).collect::<Vec<_>>(),
        "chiPi2": rat_string(&row.chi_pi_normsq),
        "T": row.t.iter().map(|c| c.json()).collect::<Vec<_>>(),
        "chiVarpi2": rat_string(&row.chi_varpi_sq),
        "phi": row.phi,
    })
}

pub fn rows_json(rows: &[ScenarioRow]) -> Value {
    Value::Array(rows.iter().map(row_json).collect())
}
