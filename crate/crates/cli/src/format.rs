//! Twelve-significant-digit output for text, CSV and JSON.

use serde::Serialize;
use serde_json::Value;

pub const SIG_DIGITS: usize = 12;

/// `x` rounded to twelve significant digits.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{:.*e}", SIG_DIGITS - 1, x).parse().unwrap_or(x)
}

/// Shortest text for `round_sig(x)`, switching to exponent form for very
/// small or large magnitudes.
pub fn num(x: f64) -> String {
    let r = round_sig(x);
    if r == 0.0 {
        return "0".into();
    }
    if !r.is_finite() {
        return r.to_string();
    }
    let e = r.abs().log10().floor() as i32;
    if (-5..15).contains(&e) {
        r.to_string()
    } else {
        format!("{r:e}")
    }
}

/// Serializes `value` and rounds every float in the tree.
pub fn rounded_json<T: Serialize>(value: &T) -> serde_json::Result<Value> {
    let mut v = serde_json::to_value(value)?;
    round_tree(&mut v);
    Ok(v)
}

fn round_tree(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            if let Some(x) = n.as_f64() {
                if let Some(r) = serde_json::Number::from_f64(round_sig(x)) {
                    *n = r;
                }
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_tree),
        Value::Object(map) => map.values_mut().for_each(round_tree),
        _ => {}
    }
}

/// Pretty JSON with rounded floats.
pub fn to_json<T: Serialize>(value: &T) -> serde_json::Result<String> {
    serde_json::to_string_pretty(&rounded_json(value)?)
}
