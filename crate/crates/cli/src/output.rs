//! Rendering helpers. JSON goes through serde_json, whose maps iterate in
//! key order, so equal inputs print byte-identical reports.

use chevwidth_core::rings::{grammar, json as ring_json, RingElement};
use chevwidth_core::steinberg::{Letter, Word};
use serde_json::{json, Value};
use std::io::Write;

/// Print a line, swallowing broken-pipe errors so that piping into
/// `head` truncates output without disturbing the exit code.
fn emit(line: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{line}");
}

pub fn print_json(v: &Value) {
    emit(&serde_json::to_string_pretty(v).expect("serializable report"));
}

pub fn print_csv(header: &str, rows: &[String]) {
    emit(header);
    for r in rows {
        emit(r);
    }
}

pub fn element_str(e: &RingElement) -> String {
    grammar::element_to_string(e)
}

pub fn letter_json(l: &Letter) -> Value {
    json!({
        "root": l.root,
        "param": ring_json::element_to_json(&l.param),
    })
}

pub fn word_json(w: &Word) -> Value {
    Value::Array(w.letters().iter().map(letter_json).collect())
}
