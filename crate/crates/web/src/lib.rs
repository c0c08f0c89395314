//! WebAssembly bindings for the browser demo. Every entry point returns a
//! JSON string; the plain-Rust functions in [`api`] do the work so they can
//! be tested natively.

use wasm_bindgen::prelude::*;

pub mod api;

fn js(r: Result<String, String>) -> Result<String, JsError> {
    r.map_err(|e| JsError::new(&e))
}

/// Class count for one group and degree; also runs the oracle when the
/// group is small enough.
#[wasm_bindgen]
pub fn census(spec: &str, degree: usize, mode: &str) -> Result<String, JsError> {
    js(api::census(spec, degree, mode))
}

/// Prime circulant table with erratum notes.
#[wasm_bindgen]
pub fn circulant(prime: u32, max_degree: u32) -> Result<String, JsError> {
    js(api::circulant(prime as u64, max_degree as u64))
}

/// One drawable Cayley graph per class.
#[wasm_bindgen]
pub fn classes(spec: &str, degree: usize, mode: &str) -> Result<String, JsError> {
    js(api::classes(spec, degree, mode))
}
