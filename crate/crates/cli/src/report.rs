//! Report model shared by every subcommand, rendered to markdown, JSON, or
//! CSV. Rendering is deterministic: row order is whatever the command built,
//! numbers are exact strings, and decimal approximations only appear when
//! requested — appended, never replacing the exact value.

use gsp4kit_core::exactnum::{format_rational, BigRational, PiQuantity};
use num_traits::ToPrimitive;

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum Format {
    Markdown,
    Json,
    Csv,
}

#[derive(Clone, Debug)]
pub enum Exact {
    Rational(BigRational),
    Pi(PiQuantity),
    Count(u64),
    Text(String),
    Status(bool),
    /// Primes render as strings in JSON; u64 keeps them exact everywhere.
    Primes(Vec<u64>),
}

impl Exact {
    fn display(&self) -> String {
        match self {
            Exact::Rational(x) => format_rational(x),
            Exact::Pi(x) => x.to_string(),
            Exact::Count(n) => n.to_string(),
            Exact::Text(s) => s.clone(),
            Exact::Status(true) => "PASS".into(),
            Exact::Status(false) => "FAIL".into(),
            Exact::Primes(ps) => {
                if ps.is_empty() {
                    "none".into()
                } else {
                    let items: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
                    format!("[{}]", items.join(", "))
                }
            }
        }
    }

    fn approx(&self) -> Option<String> {
        let v = match self {
            Exact::Rational(x) => x.to_f64()?,
            Exact::Pi(x) => x.approx(),
            _ => return None,
        };
        Some(format!("{v:.6e}"))
    }

    fn json(&self) -> serde_json::Value {
        use serde_json::Value;
        match self {
            Exact::Rational(x) => Value::String(format_rational(x)),
            Exact::Pi(x) => serde_json::json!({
                "coeff": format_rational(&x.coeff),
                "pi_exp": x.pi_exp,
            }),
            Exact::Count(n) => Value::from(*n),
            Exact::Text(s) => Value::String(s.clone()),
            Exact::Status(ok) => Value::String(if *ok { "PASS" } else { "FAIL" }.into()),
            Exact::Primes(ps) => {
                Value::Array(ps.iter().map(|p| Value::String(p.to_string())).collect())
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct Row {
    pub label: String,
    pub value: Exact,
}

#[derive(Clone, Debug, Default)]
pub struct Section {
    pub heading: String,
    pub rows: Vec<Row>,
}

impl Section {
    pub fn new(heading: impl Into<String>) -> Self {
        Section { heading: heading.into(), rows: Vec::new() }
    }

    pub fn push(&mut self, label: impl Into<String>, value: Exact) {
        self.rows.push(Row { label: label.into(), value });
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub title: String,
    pub sections: Vec<Section>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report { title: title.into(), sections: Vec::new() }
    }

    /// True when no Status row says FAIL.
    pub fn all_pass(&self) -> bool {
        self.sections
            .iter()
            .flat_map(|s| &s.rows)
            .all(|r| !matches!(r.value, Exact::Status(false)))
    }

    pub fn render(&self, format: Format, approx: bool) -> String {
        match format {
            Format::Markdown => self.render_markdown(approx),
            Format::Json => self.render_json(approx),
            Format::Csv => self.render_csv(approx),
        }
    }

    fn render_markdown(&self, approx: bool) -> String {
        let mut out = format!("# {}\n", self.title);
        for section in &self.sections {
            out.push_str(&format!("\n## {}\n\n", section.heading));
            for row in &section.rows {
                out.push_str(&format!("- {}: {}", row.label, row.value.display()));
                if approx {
                    if let Some(a) = row.value.approx() {
                        out.push_str(&format!(" ≈ {a}"));
                    }
                }
                out.push('\n');
            }
        }
        out
    }

    fn render_json(&self, approx: bool) -> String {
        use serde_json::{json, Value};
        let sections: Vec<Value> = self
            .sections
            .iter()
            .map(|s| {
                let rows: Vec<Value> = s
                    .rows
                    .iter()
                    .map(|r| {
                        let mut row = json!({ "label": r.label, "value": r.value.json() });
                        if approx {
                            if let Some(a) = r.value.approx() {
                                row["approx"] = Value::String(a);
                            }
                        }
                        row
                    })
                    .collect();
                json!({ "heading": s.heading, "rows": rows })
            })
            .collect();
        let doc = json!({ "title": self.title, "sections": sections });
        let mut text = serde_json::to_string_pretty(&doc).expect("report serializes");
        text.push('\n');
        text
    }

    fn render_csv(&self, approx: bool) -> String {
        let mut out = String::from(if approx {
            "section,label,value,approx\n"
        } else {
            "section,label,value\n"
        });
        for section in &self.sections {
            for row in &section.rows {
                out.push_str(&csv_field(&section.heading));
                out.push(',');
                out.push_str(&csv_field(&row.label));
                out.push(',');
                out.push_str(&csv_field(&row.value.display()));
                if approx {
                    out.push(',');
                    out.push_str(&csv_field(&row.value.approx().unwrap_or_default()));
                }
                out.push('\n');
            }
        }
        out
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use gsp4kit_core::exactnum::{ratio, PiQuantity};

    fn sample() -> Report {
        let mut r = Report::new("sample");
        let mut s = Section::new("values");
        s.push("ratio", Exact::Rational(ratio(64, 3)));
        s.push("pi", Exact::Pi(PiQuantity::new(ratio(1, 270), 3)));
        s.push("verdict", Exact::Status(true));
        s.push("primes", Exact::Primes(vec![691]));
        r.sections.push(s);
        r
    }

    #[test]
    fn markdown_layout() {
        let text = sample().render(Format::Markdown, false);
        assert!(text.starts_with("# sample\n\n## values\n"));
        assert!(text.contains("- ratio: 64/3\n"));
        assert!(text.contains("- verdict: PASS\n"));
        assert!(text.contains("- primes: [691]\n"));
        // byte stability
        assert_eq!(text, sample().render(Format::Markdown, false));
    }

    #[test]
    fn json_uses_exact_strings() {
        let text = sample().render(Format::Json, false);
        let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
        let rows = &doc["sections"][0]["rows"];
        assert_eq!(rows[0]["value"], "64/3");
        assert_eq!(rows[1]["value"]["coeff"], "1/270");
        assert_eq!(rows[1]["value"]["pi_exp"], 3);
        assert_eq!(rows[3]["value"][0], "691");
    }

    #[test]
    fn approx_appends_decimals() {
        let text = sample().render(Format::Markdown, true);
        assert!(text.contains("- ratio: 64/3 ≈ 2.133333e1"));
        let csv = sample().render(Format::Csv, true);
        assert!(csv.starts_with("section,label,value,approx\n"));
        assert!(csv.contains("values,verdict,PASS,\n"));
    }

    #[test]
    fn csv_quotes_embedded_commas() {
        let mut r = Report::new("q");
        let mut s = Section::new("s");
        s.push("primes", Exact::Primes(vec![3, 5]));
        r.sections.push(s);
        let csv = r.render(Format::Csv, false);
        assert!(csv.contains("s,primes,\"[3, 5]\"\n"));
    }

    #[test]
    fn failing_status_flips_all_pass() {
        let mut r = sample();
        assert!(r.all_pass());
        r.sections[0].push("bad", Exact::Status(false));
        assert!(!r.all_pass());
    }
}
