//! Browser bindings for the static demo page in `www/`.
//!
//! Each exported function has a plain Rust counterpart returning
//! `Result<String, String>` so it can be tested natively; the wasm wrappers
//! only convert the error into a JavaScript exception.

use mahonian::distribution::{ALL_COLUMNS, TABLE_COLUMNS};
use mahonian::record::{class_table, render_tsv, OutputRecord};
use mahonian::{code, phi_on_class, rsk, Multiset, Permutation, Word};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest class the demo will tabulate.
pub const TABLE_CAP: u64 = 5040;

#[derive(Serialize)]
struct Analysis {
    code: String,
    word: OutputRecord,
    image: OutputRecord,
}

fn record(w: Word) -> Result<OutputRecord, String> {
    OutputRecord::new(w, &ALL_COLUMNS).map_err(|e| e.to_string())
}

/// Statistics of a word and of its image under the class involution, as JSON.
pub fn analyze(word: &str) -> Result<String, String> {
    let w: Word = word
        .trim()
        .parse()
        .map_err(|e: mahonian::Error| e.to_string())?;
    let image = phi_on_class(&w).map_err(|e| e.to_string())?;
    let analysis = Analysis {
        code: code(&w).map_err(|e| e.to_string())?.to_string(),
        word: record(w)?,
        image: record(image)?,
    };
    serde_json::to_string(&analysis).map_err(|e| e.to_string())
}

/// Insertion and recording tableaux, one row per line.
pub fn tableaux(permutation: &str) -> Result<String, String> {
    let p: Permutation = permutation
        .trim()
        .parse()
        .map_err(|e: mahonian::Error| e.to_string())?;
    let (insertion, recording) = rsk(&p);
    Ok(format!("P:\n{insertion}\nQ:\n{recording}\n"))
}

/// The seven-column table over the rearrangement class of a word, as TSV.
pub fn table(word: &str) -> Result<String, String> {
    let ms: Multiset = word
        .trim()
        .parse()
        .map_err(|e: mahonian::Error| e.to_string())?;
    let rows = class_table(&ms, &TABLE_COLUMNS, TABLE_CAP).map_err(|e| e.to_string())?;
    Ok(render_tsv(&rows, &TABLE_COLUMNS))
}

fn to_js(r: Result<String, String>) -> Result<String, JsError> {
    r.map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = analyze)]
pub fn analyze_js(word: &str) -> Result<String, JsError> {
    to_js(analyze(word))
}

#[wasm_bindgen(js_name = tableaux)]
pub fn tableaux_js(permutation: &str) -> Result<String, JsError> {
    to_js(tableaux(permutation))
}

#[wasm_bindgen(js_name = table)]
pub fn table_js(word: &str) -> Result<String, JsError> {
    to_js(table(word))
}
