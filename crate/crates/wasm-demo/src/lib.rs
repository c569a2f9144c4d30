//! Browser bindings. Each exported function returns a JSON string so the
//! page can stay plain JavaScript; the `*_json` functions do the work and
//! are what the native tests exercise.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use eigenperiod::boundary::{enumerate_pure_locus, MAX_ENUMERATION_N};
use eigenperiod::cover::{affine_model_genus, eigen_hodge_numbers, CoverData, Regime};
use eigenperiod::dmtable;
use eigenperiod::git::codim_h_closed;
use eigenperiod::spectra::{eigenspectra_curve, grw_top_dim};

/// Largest `d` the page may request; keeps the per-`k` table readable.
pub const MAX_DEGREE: u64 = 60;

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("library types serialize to JSON")
}

/// Signature, `H` and table membership for every character `k` of the
/// degree-`d` cover branched at `n` points.
pub fn cover_summary_json(n: u64, d: u64) -> Result<String, String> {
    if d > MAX_DEGREE {
        return Err(format!("d is capped at {MAX_DEGREE} in the demo"));
    }
    let regime = Regime::of(n.max(1), d.max(1));
    let genus = affine_model_genus(n, d).map_err(|e| e.to_string())?;
    let mut rows = Vec::new();
    for k in 1..d {
        let c = CoverData::new(n, d, k as i64).map_err(|e| e.to_string())?;
        let h = eigen_hodge_numbers(&c);
        let codim = if n >= 5 {
            to_value(&codim_h_closed(n, d, k).map_err(|e| e.to_string())?)
        } else {
            Value::Null
        };
        rows.push(json!({
            "k": k,
            "h10": h.h10,
            "h01": h.h01,
            "H": codim,
            "discrete": dmtable::is_discrete(n, k, d),
        }));
    }
    Ok(json!({
        "n": n,
        "d": d,
        "regime": regime.to_string(),
        "genus": genus,
        "characters": rows,
    })
    .to_string())
}

/// Eigenspectra of `x^l + y^d` as a list of `{alpha, eta, weight, mult}`.
pub fn spectrum_json(d: u64, l: u64) -> Result<String, String> {
    if d > MAX_DEGREE || l > MAX_DEGREE {
        return Err(format!("d and l are capped at {MAX_DEGREE} in the demo"));
    }
    let sp = eigenspectra_curve(d, l).map_err(|e| e.to_string())?;
    let top = grw_top_dim(d, l).map_err(|e| e.to_string())?;
    Ok(json!({
        "d": d,
        "l": l,
        "milnor": sp.total_multiplicity(),
        "grw_top_dim": top,
        "entries": to_value(&sp.entries()),
    })
    .to_string())
}

/// Pure and non-pure divisor counts per collision size.
pub fn pure_locus_json(n: u64, d: u64, k: u64) -> Result<String, String> {
    if n > MAX_ENUMERATION_N.min(16) {
        return Err("n is capped at 16 in the demo".to_string());
    }
    let r = enumerate_pure_locus(n, d, k).map_err(|e| e.to_string())?;
    let sizes: Vec<Value> = r
        .counts_by_size
        .iter()
        .map(|(size, c)| json!({ "size": size, "pure": c.pure, "non_pure": c.non_pure }))
        .collect();
    Ok(json!({
        "n": n,
        "d": d,
        "k": k,
        "regime": r.regime.to_string(),
        "total": r.total(),
        "non_pure_total": r.non_pure_total(),
        "sizes": sizes,
    })
    .to_string())
}

#[wasm_bindgen]
pub fn cover_summary(n: u32, d: u32) -> Result<String, JsError> {
    cover_summary_json(n.into(), d.into()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn spectrum(d: u32, l: u32) -> Result<String, JsError> {
    spectrum_json(d.into(), l.into()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn pure_locus(n: u32, d: u32, k: u32) -> Result<String, JsError> {
    pure_locus_json(n.into(), d.into(), k.into()).map_err(|e| JsError::new(&e))
}
