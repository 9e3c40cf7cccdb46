//! Browser bindings. The plain functions take and return strings so they can
//! be tested natively; the `#[wasm_bindgen]` wrappers only convert errors.

use gkm_core::corpus;
use gkm_core::document::{parse_covector, GraphDocument};
use gkm_core::lefschetz::LefschetzContext;
use gkm_core::render::render_svg;
use gkm_core::report::{build_report, orient_for_report, xi_candidates};
use gkm_core::{GkmGraph, OrientedGkmGraph, WeightVector};
use serde::Serialize;
use wasm_bindgen::prelude::*;

#[derive(Serialize)]
struct InstanceInfo {
    name: &'static str,
    summary: &'static str,
}

#[derive(Serialize)]
struct ScanRow {
    xi: String,
    index_increasing: bool,
    betti: Vec<usize>,
    hard_lefschetz: Option<bool>,
}

fn optional_xi(xi: &str) -> Result<Option<WeightVector>, String> {
    if xi.trim().is_empty() {
        return Ok(None);
    }
    parse_covector(xi).map(Some).map_err(|e| e.to_string())
}

fn oriented(document: &str, xi: &str) -> Result<(GkmGraph, Option<WeightVector>, Option<WeightVector>), String> {
    let doc = GraphDocument::from_json(document).map_err(|e| e.to_string())?;
    let g = doc.to_validated_graph().map_err(|e| e.to_string())?;
    let doc_xi = doc.xi().map_err(|e| e.to_string())?;
    Ok((g, doc_xi, optional_xi(xi)?))
}

fn orient(g: &GkmGraph, doc_xi: Option<WeightVector>, xi: Option<WeightVector>) -> Result<OrientedGkmGraph, String> {
    orient_for_report(g, doc_xi, xi)
        .map(|(og, _)| og)
        .map_err(|e| e.to_string())
}

/// `[{name, summary}, ...]` for the built-in instances.
pub fn corpus_list() -> String {
    let list: Vec<InstanceInfo> = corpus::instances()
        .into_iter()
        .filter(|i| i.enabled)
        .map(|i| InstanceInfo {
            name: i.name,
            summary: i.summary,
        })
        .collect();
    serde_json::to_string(&list).expect("plain data")
}

pub fn corpus_document(name: &str) -> Result<String, String> {
    corpus::instance(name)
        .map(|i| i.source.to_string())
        .map_err(|e| e.to_string())
}

/// SVG drawing; `xi` may be empty to use the document's or a searched one.
pub fn render(document: &str, xi: &str) -> Result<String, String> {
    let (g, doc_xi, xi) = oriented(document, xi)?;
    let og = orient(&g, doc_xi, xi)?;
    render_svg(&og).map_err(|e| e.to_string())
}

/// Full report as JSON.
pub fn report(document: &str, xi: &str) -> Result<String, String> {
    let (g, doc_xi, xi) = oriented(document, xi)?;
    let (og, source) = orient_for_report(&g, doc_xi, xi).map_err(|e| e.to_string())?;
    Ok(build_report(&og, source).to_json())
}

/// The first `limit` generic covectors from the search order, each with
/// its Betti numbers and, when index-increasing, the hard Lefschetz verdict.
pub fn scan_xi(document: &str, limit: usize) -> Result<String, String> {
    let (g, _, _) = oriented(document, "")?;
    let mut rows = Vec::new();
    for xi in xi_candidates(g.rank()) {
        if rows.len() >= limit {
            break;
        }
        let Ok(og) = g.orient(&xi) else { continue };
        let increasing = og.is_index_increasing();
        let hard_lefschetz = if increasing {
            LefschetzContext::new(&og)
                .and_then(|ctx| ctx.hard_lefschetz())
                .map(|v| v.iter().all(|x| x.nonsingular))
                .ok()
        } else {
            None
        };
        rows.push(ScanRow {
            xi: xi.to_string(),
            index_increasing: increasing,
            betti: og.morse_profile().betti,
            hard_lefschetz,
        });
    }
    Ok(serde_json::to_string(&rows).expect("plain data"))
}

fn js(r: Result<String, String>) -> Result<String, JsValue> {
    r.map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = corpusList)]
pub fn corpus_list_js() -> String {
    corpus_list()
}

#[wasm_bindgen(js_name = corpusDocument)]
pub fn corpus_document_js(name: &str) -> Result<String, JsValue> {
    js(corpus_document(name))
}

#[wasm_bindgen(js_name = renderSvg)]
pub fn render_js(document: &str, xi: &str) -> Result<String, JsValue> {
    js(render(document, xi))
}

#[wasm_bindgen(js_name = reportJson)]
pub fn report_js(document: &str, xi: &str) -> Result<String, JsValue> {
    js(report(document, xi))
}

#[wasm_bindgen(js_name = scanXi)]
pub fn scan_xi_js(document: &str, limit: usize) -> Result<String, JsValue> {
    js(scan_xi(document, limit))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn doc(name: &str) -> String {
        corpus_document(name).unwrap()
    }

    #[test]
    fn lists_the_corpus() {
        let list: serde_json::Value = serde_json::from_str(&corpus_list()).unwrap();
        let names: Vec<&str> = list.as_array().unwrap().iter().map(|v| v["name"].as_str().unwrap()).collect();
        assert!(names.contains(&"tol-d"));
        assert!(corpus_document("nope").is_err());
    }

    #[test]
    fn renders_with_and_without_override() {
        let svg = render(&doc("cube-g"), "").unwrap();
        assert!(svg.contains("&#958; = (1, 1)"));
        let svg = render(&doc("cube-g"), "2,1").unwrap();
        assert!(svg.contains("&#958; = (2, 1)"));
        assert!(render(&doc("cube-g"), "1,-1").is_err(), "orthogonal to an edge");
        assert!(render("{", "").is_err());
    }

    #[test]
    fn report_is_json() {
        let r: serde_json::Value = serde_json::from_str(&report(&doc("tol-d"), "").unwrap()).unwrap();
        assert_eq!(r["ok"], true);
        assert_eq!(r["lefschetz"]["table_type"], "d");
    }

    #[test]
    fn scan_marks_index_increasing_choices() {
        let rows: serde_json::Value = serde_json::from_str(&scan_xi(&doc("tol-d"), 6).unwrap()).unwrap();
        let rows = rows.as_array().unwrap();
        assert_eq!(rows.len(), 6);
        for row in rows {
            assert_eq!(row["betti"].as_array().unwrap().len(), 4);
            if row["index_increasing"] == true {
                assert_eq!(row["hard_lefschetz"], true);
            } else {
                assert!(row["hard_lefschetz"].is_null());
            }
        }
    }
}
