//! Browser bindings. Each export takes facet-file text and returns text.
//! The `*_text` functions hold the logic so they can be tested natively.

use golodtight_core::hochster::{hochster_table, DEFAULT_MAX_VERTICES};
use golodtight_core::io::parse_text;
use golodtight_core::oracle::{compare, OracleKind, RZK_MAX_VERTICES};
use golodtight_core::report::{analyze, render_text_stable, AnalyzeOptions};
use golodtight_core::{BuildOptions, FieldSpec, SimplicialComplex};
use wasm_bindgen::prelude::*;

/// Browser budget; full enumeration beyond this freezes the tab.
pub const DEMO_MAX_VERTICES: usize = 10;

fn load(text: &str) -> Result<SimplicialComplex, String> {
    let k = parse_text(text, BuildOptions::default()).map_err(|e| e.to_string())?;
    if k.m() > DEMO_MAX_VERTICES {
        return Err(format!(
            "{} vertices; the demo stops at {DEMO_MAX_VERTICES}",
            k.m()
        ));
    }
    Ok(k)
}

fn fields(spec: &str) -> Result<Vec<FieldSpec>, String> {
    let out: Vec<FieldSpec> = spec
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<FieldSpec>().map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    if out.is_empty() {
        return Err("no field given".into());
    }
    Ok(out)
}

pub fn analyze_text(facets: &str, field_list: &str) -> Result<String, String> {
    let k = load(facets)?;
    let opts = AnalyzeOptions {
        fields: fields(field_list)?,
        max_vertices: DEFAULT_MAX_VERTICES,
        ..AnalyzeOptions::default()
    };
    Ok(render_text_stable(&analyze(&k, &opts)))
}

pub fn hochster_text(facets: &str, field: &str) -> Result<String, String> {
    let k = load(facets)?;
    let mut out = String::new();
    for f in fields(field)? {
        let t = hochster_table(&k, f, DEFAULT_MAX_VERTICES).map_err(|e| e.to_string())?;
        let mut rows = t.entries();
        rows.sort_by(|a, b| a.0.cmp_lex(b.0).then(a.1.cmp(&b.1)));
        out.push_str(&format!("field {f}\n"));
        for (i, p, r) in rows {
            out.push_str(&format!("{i} {p} {r}\n"));
        }
    }
    Ok(out)
}

pub fn rzk_oracle_text(facets: &str, field: &str) -> Result<String, String> {
    let k = load(facets)?;
    let mut out = String::new();
    for f in fields(field)? {
        let c = compare(&k, OracleKind::Rzk, f, RZK_MAX_VERTICES).map_err(|e| e.to_string())?;
        out.push_str(&format!(
            "{f}: predicted {:?} computed {:?} {}\n",
            c.predicted,
            c.computed,
            if c.agrees() { "PASS" } else { "FAIL" }
        ));
    }
    Ok(out)
}

#[wasm_bindgen]
pub fn analyze_facets(facets: &str, fields: &str) -> Result<String, JsError> {
    analyze_text(facets, fields).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn hochster_rows(facets: &str, field: &str) -> Result<String, JsError> {
    hochster_text(facets, field).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn rzk_oracle(facets: &str, field: &str) -> Result<String, JsError> {
    rzk_oracle_text(facets, field).map_err(|e| JsError::new(&e))
}
