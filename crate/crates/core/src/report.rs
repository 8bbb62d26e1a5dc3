//! Machine-readable run reports.
//!
//! Every CLI invocation emits one [`Report`]: the echoed command, the parsed
//! inputs, per-operation results, a list of [`Discrepancy`] records for any
//! audited claim whose computed value differs from the stated one, and the
//! elapsed time. JSON is the contract (stable key order, byte-identical
//! across runs apart from `elapsed_ms`); the text rendering is for humans.

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// An audited claim that did not compute as stated. Findings are data, not
/// errors: a run that records discrepancies still exits 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    /// Where the claim is stated, e.g. a lemma number or table row.
    pub paper_location: String,
    /// The claim as stated.
    pub expected_per_paper: String,
    /// What this toolkit computed.
    pub computed: String,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub discrepancies: Vec<Discrepancy>,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Indented human-readable rendering of the same data.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        out.push_str("inputs:\n");
        render_value(&self.inputs, 1, &mut out);
        out.push_str("results:\n");
        render_value(&self.results, 1, &mut out);
        if self.discrepancies.is_empty() {
            out.push_str("discrepancies: none\n");
        } else {
            out.push_str("discrepancies:\n");
            for d in &self.discrepancies {
                out.push_str(&format!(
                    "  - at {}: expected {}, computed {} ({})\n",
                    d.paper_location, d.expected_per_paper, d.computed, d.note
                ));
            }
        }
        out.push_str(&format!("elapsed_ms: {}\n", self.elapsed_ms));
        out
    }
}

fn render_value(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match val {
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_value(val, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}{k}: {val}\n")),
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match item {
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{pad}-\n"));
                        render_value(item, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}- {item}\n")),
                }
            }
        }
        _ => out.push_str(&format!("{pad}{v}\n")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn json_round_trip() {
        let report = Report {
            command: "ds verify".into(),
            inputs: json!({"v": 7, "set": [0, 1, 2, 5]}),
            results: json!({"params": {"v": 7, "k": 4, "lambda": 2, "n": 2}}),
            discrepancies: vec![Discrepancy {
                paper_location: "example".into(),
                expected_per_paper: "x".into(),
                computed: "y".into(),
                note: "n".into(),
            }],
            elapsed_ms: 12,
        };
        let text = report.to_json();
        let back: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report);
    }

    #[test]
    fn text_rendering_mentions_discrepancies() {
        let report = Report {
            command: "x".into(),
            inputs: json!({}),
            results: json!({"ok": true}),
            discrepancies: vec![],
            elapsed_ms: 0,
        };
        assert!(report.to_text().contains("discrepancies: none"));
    }
}
