//! wasm-bindgen entry points for the browser page in `www/`.
//!
//! Every function takes plain strings and numbers and returns a JSON string;
//! errors come back as a message string, which JavaScript sees as a thrown value.

use serde::Serialize;
use symchar::{
    character_table, enumerate_rim_hooks, rim_sequence, CharValue, Evaluator,
    ExtremalSpec, Partition,
};
use wasm_bindgen::prelude::*;

/// Largest n for which the page will build a character table.
pub const TABLE_LIMIT: usize = 10;

/// Largest witness size the page will evaluate.
pub const WITNESS_LIMIT: usize = 60;

#[derive(Serialize)]
struct HookView {
    cells: Vec<[usize; 2]>,
    leg_length: usize,
    sign: i8,
    class: String,
    remainder: String,
}

#[derive(Serialize)]
struct RimView {
    partition: String,
    parts: Vec<usize>,
    rim: Vec<[usize; 2]>,
    hooks: Vec<HookView>,
}

fn parse_partition(text: &str) -> Result<Partition, String> {
    text.parse().map_err(|e: symchar::Error| e.to_string())
}

fn to_json<T: Serialize>(v: &T) -> Result<String, String> {
    serde_json::to_string(v).map_err(|e| e.to_string())
}

/// The diagram of `lambda`, its rim, and every rim hook of length `r`.
/// Cells are `[row, col]`, 1-indexed.
#[wasm_bindgen]
pub fn rim_hooks(lambda: &str, r: usize) -> Result<String, String> {
    let lam = parse_partition(lambda)?;
    let rim: Vec<[usize; 2]> = match rim_sequence(&lam) {
        Ok(seq) => seq.cells().iter().map(|c| [c.row, c.col]).collect(),
        Err(_) => Vec::new(),
    };
    let hooks = enumerate_rim_hooks(&lam, r)
        .into_iter()
        .map(|h| HookView {
            cells: rim[h.start..=h.end].to_vec(),
            leg_length: h.leg_length,
            sign: h.sign(),
            class: h.class.to_string(),
            remainder: h.remainder.to_string(),
        })
        .collect();
    to_json(&RimView {
        partition: lam.to_string(),
        parts: lam.parts().to_vec(),
        rim,
        hooks,
    })
}

/// The character table of S_n, rows and columns in ascending lexicographic order.
#[wasm_bindgen]
pub fn char_table(n: usize) -> Result<String, String> {
    let table = character_table(n, TABLE_LIMIT).map_err(|e| e.to_string())?;
    to_json(&table)
}

#[derive(Serialize)]
struct WitnessView {
    lambda: String,
    parts: Vec<usize>,
    mu: String,
    frobenius: String,
    k: usize,
    value: CharValue,
    predicted: Option<CharValue>,
    printed_sign: Option<i8>,
    factorial: String,
    matches: Option<bool>,
}

/// Builds the witness with the given arms (comma separated) and hook length
/// `r`, evaluates it, and compares with the predicted value.
#[wasm_bindgen]
pub fn extremal_witness(arms: &str, r: usize, fixed_point: bool) -> Result<String, String> {
    let arms: Vec<usize> = arms
        .split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| format!("bad arm {t:?}")))
        .collect::<Result<_, _>>()?;
    let spec = if fixed_point {
        ExtremalSpec::with_fixed_point(arms, r)
    } else {
        ExtremalSpec::symmetric(arms, r)
    };
    spec.validate().map_err(|e| e.to_string())?;
    let lambda = spec.partition().map_err(|e| e.to_string())?;
    let mu = spec.cycle_type();
    if mu.n() > WITNESS_LIMIT {
        return Err(format!("n = {} is above the demo limit of {WITNESS_LIMIT}", mu.n()));
    }
    let value = Evaluator::new()
        .evaluate(&lambda, &mu)
        .map_err(|e| e.to_string())?;
    let prediction = spec.predicted().ok();
    let k = spec.k();
    let factorial = symchar::verify::factorial(spec.arms.len()).to_string();
    to_json(&WitnessView {
        parts: lambda.parts().to_vec(),
        lambda: lambda.to_string(),
        mu: mu.to_string(),
        frobenius: lambda.to_frobenius().to_string(),
        k,
        matches: prediction.as_ref().map(|p| p.value() == value),
        predicted: prediction.as_ref().map(|p| p.value()),
        printed_sign: prediction.as_ref().map(|p| p.printed_sign),
        factorial,
        value,
    })
}
