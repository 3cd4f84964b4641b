//! Rendering of tables and reports in the three output formats.
//!
//! CSV columns are fixed per command:
//! - `eval`: `element,value`
//! - `verify`: `check,law,instance,seed,pairs,violations,passed,witness`
//! - `pims`: `index,pim,truncated`

use clap::ValueEnum;
use quasival::report::Report;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

fn csv_table(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

/// `(element text, value display, value json)` triples.
pub fn eval_table(rows: &[(String, String, Value)], format: Format) -> String {
    match format {
        Format::Json => pretty(&Value::Array(
            rows.iter().map(|(x, _, v)| json!({"element": x, "value": v})).collect(),
        )),
        Format::Csv => csv_table(&["element", "value"], rows.iter().map(|(x, v, _)| vec![x.clone(), v.clone()])),
        Format::Text => rows.iter().map(|(x, v, _)| format!("{x} ↦ {v}\n")).collect(),
    }
}

pub fn reports(reports: &[Report], format: Format) -> String {
    match format {
        Format::Json => pretty(&Value::Array(reports.iter().map(Report::to_json).collect())),
        Format::Csv => csv_table(
            &["check", "law", "instance", "seed", "pairs", "violations", "passed", "witness"],
            reports.iter().map(|r| {
                vec![
                    r.check.clone(),
                    r.law.clone(),
                    r.instance.clone(),
                    r.seed.to_string(),
                    r.pairs.to_string(),
                    r.violations.to_string(),
                    r.passed.to_string(),
                    r.witness.clone().or(r.precondition.clone()).unwrap_or_default(),
                ]
            }),
        ),
        Format::Text => {
            let mut out = String::new();
            for r in reports {
                let verdict = if r.passed { "PASS" } else { "FAIL" };
                out += &format!(
                    "{verdict} {} [{}] {} (seed {}, {} cases, {} violations)\n",
                    r.check, r.law, r.instance, r.seed, r.pairs, r.violations
                );
                if let Some(p) = &r.precondition {
                    out += &format!("  precondition: {p}\n");
                }
                if let Some(w) = &r.witness {
                    out += &format!("  witness: {w}\n");
                }
                for n in &r.notes {
                    out += &format!("  note: {n}\n");
                }
            }
            let failed = reports.iter().filter(|r| !r.passed).count();
            out += &format!("{} checks, {failed} failed\n", reports.len());
            out
        }
    }
}

pub fn pims(monoid: &str, h_level: usize, names: &[String], truncated: bool, format: Format) -> String {
    match format {
        Format::Json => pretty(&json!({
            "monoid": monoid,
            "h_level": h_level,
            "count": names.len(),
            "truncated": truncated,
            "pims": names,
        })),
        Format::Csv => csv_table(
            &["index", "pim", "truncated"],
            names.iter().enumerate().map(|(i, n)| vec![i.to_string(), n.clone(), truncated.to_string()]),
        ),
        Format::Text => {
            let mut out = format!("{} PIMs of {monoid} over H level {h_level}", names.len());
            out += if truncated { " (truncated listing)\n" } else { "\n" };
            for n in names {
                out += &format!("  {n}\n");
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_quotes_when_needed() {
        let mut r = Report::new("axioms", "a, b", "x", 3);
        r.record(false, || "w(\"1\")".into());
        let text = reports(&[r], Format::Csv);
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("check,law,instance,seed,pairs,violations,passed,witness"));
        assert_eq!(lines.next(), Some("axioms,\"a, b\",x,3,1,1,false,\"w(\"\"1\"\")\""));
    }

    #[test]
    fn text_summary_counts_failures() {
        let ok = Report::new("pims", "l", "i", 1);
        let mut bad = Report::new("pims", "l", "j", 1);
        bad.record(false, || "boom".into());
        let text = reports(&[ok, bad], Format::Text);
        assert!(text.starts_with("PASS pims"));
        assert!(text.contains("FAIL pims [l] j"));
        assert!(text.contains("  witness: boom"));
        assert!(text.ends_with("2 checks, 1 failed\n"));
    }

    #[test]
    fn eval_formats() {
        let rows = vec![("3/2".to_string(), "-1".to_string(), json!(-1))];
        assert_eq!(eval_table(&rows, Format::Text), "3/2 ↦ -1\n");
        assert_eq!(eval_table(&rows, Format::Csv), "element,value\n3/2,-1\n");
        let v: Value = serde_json::from_str(&eval_table(&rows, Format::Json)).unwrap();
        assert_eq!(v, json!([{"element": "3/2", "value": -1}]));
    }
}
