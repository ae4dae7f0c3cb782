//! JSON, CSV, and DOT renderings. Output is byte-stable for fixed input:
//! every collection is emitted in canonical order.

use serde_json::{json, Value};

use isogr_core::bruhat::BruhatPoset;
use isogr_core::diagram::DiagramReport;
use isogr_core::grassmannian::SchubertSymbol;
use isogr_core::pieri::{IntMatrix, PieriRow, PosetMatrices};
use isogr_core::projection::ZData;

use crate::cache;

pub fn list(values: &[usize]) -> String {
    let cells: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    format!("[{}]", cells.join(","))
}

pub fn pair_list(values: &[(usize, usize)]) -> String {
    let cells: Vec<String> = values.iter().map(|(a, b)| format!("({a},{b})")).collect();
    format!("[{}]", cells.join(","))
}

fn symbol_value(s: &SchubertSymbol) -> Value {
    json!(s.elems())
}

fn spec_value(spec: &isogr_core::Grassmannian) -> Value {
    json!({
        "lie_type": spec.lie_type().to_string(),
        "m": spec.m(),
        "n": spec.n(),
        "N": spec.ambient(),
        "k": spec.k(),
    })
}

pub fn diagram_json(report: &DiagramReport) -> Value {
    json!({
        "spec": spec_value(report.spec()),
        "P": symbol_value(report.p()),
        "T": symbol_value(report.t()),
        "rows": report.rows(),
        "cuts": report.cuts(),
        "visible_cuts": report.visible_cuts(),
        "exceptional_cuts": report.exceptional_cuts(),
        "zero_columns": report.zero_columns(),
        "lone_stars": report.lone_stars(),
        "L": report.l_set(),
        "Q": report.q_set(),
    })
}

pub fn zdata_json(z: &ZData) -> Value {
    json!({
        "linear": z.linear_vars(),
        "quadratic_gaps": z.quad_gaps(),
        "l": z.l(),
        "q": z.q(),
    })
}

pub fn poset_json(poset: &BruhatPoset) -> Value {
    let file = cache::to_file(poset);
    json!({
        "spec": { "lie_type": file.spec.lie_type, "m": file.spec.m, "n": file.spec.n },
        "symbols": file.symbols,
        "covers": file.covers,
        "rank": file.rank,
    })
}

pub fn row_json(row: &PieriRow) -> Value {
    let coefficients: Vec<Value> = row
        .coefficients()
        .iter()
        .map(|(q, v)| json!({ "Q": symbol_value(q), "value": v }))
        .collect();
    json!({
        "P": symbol_value(row.p()),
        "special": { "r": row.special().r(), "tilde": row.special().tilde() },
        "coefficients": coefficients,
    })
}

fn matrix_value(m: &IntMatrix) -> Value {
    let rows: Vec<Vec<i64>> = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j)).collect())
        .collect();
    json!(rows)
}

pub fn table_json(mats: &PosetMatrices) -> Value {
    let symbols: Vec<Value> = mats.poset().symbols().iter().map(symbol_value).collect();
    json!({
        "spec": spec_value(mats.poset().spec()),
        "special": { "r": mats.special().r(), "tilde": mats.special().tilde() },
        "symbols": symbols,
        "M": matrix_value(mats.incidence()),
        "D": matrix_value(mats.duals()),
        "T": matrix_value(mats.triples()),
        "C": matrix_value(mats.coefficients()),
    })
}

/// CSV of the coefficient matrix: a header row of symbols, then one row
/// per P. Symbols contain commas, so every symbol cell is quoted.
pub fn table_csv(mats: &PosetMatrices) -> String {
    let mut out = String::from("P");
    for q in mats.poset().symbols() {
        out.push_str(&format!(",\"{q}\""));
    }
    out.push('\n');
    for (i, p) in mats.poset().symbols().iter().enumerate() {
        out.push_str(&format!("\"{p}\""));
        for j in 0..mats.poset().len() {
            out.push_str(&format!(",{}", mats.coefficients().get(i, j)));
        }
        out.push('\n');
    }
    out
}

/// Rank-layered DOT rendering of the Hasse diagram.
pub fn dot(poset: &BruhatPoset) -> String {
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n");
    let max_rank = (0..poset.len()).map(|i| poset.rank_of_idx(i)).max();
    if let Some(max_rank) = max_rank {
        for rank in (0..=max_rank).rev() {
            let layer: Vec<String> = (0..poset.len())
                .filter(|&i| poset.rank_of_idx(i) == rank)
                .map(|i| format!("s{i}"))
                .collect();
            if layer.is_empty() {
                continue;
            }
            out.push_str(&format!("  {{ rank=same; {}; }}\n", layer.join("; ")));
        }
    }
    for (i, s) in poset.symbols().iter().enumerate() {
        let label: Vec<String> = s.elems().iter().map(|c| c.to_string()).collect();
        out.push_str(&format!("  s{i} [label=\"{{{}}}\"];\n", label.join(",")));
    }
    for &(lo, hi) in poset.covers() {
        out.push_str(&format!("  s{lo} -> s{hi};\n"));
    }
    out.push_str("}\n");
    out
}
