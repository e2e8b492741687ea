//! Report records: named field comparisons with provenance tags, rendered
//! as JSON (default) or plain text. Exact values are serialized as strings
//! ("p" or "p/q") so nothing is lost in transit.

use std::io::Write;

use serde_json::{json, Map, Value};

/// Write one line to stdout. A closed pipe (the consumer stopped reading,
/// e.g. `cherncalc suite | head -1`) terminates the process quietly instead
/// of panicking; any other write failure still panics.
pub fn print_line(s: &str) {
    let mut out = std::io::stdout().lock();
    if let Err(e) = writeln!(out, "{s}") {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        panic!("failed printing to stdout: {e}");
    }
}

#[derive(Clone, Debug)]
pub struct Field {
    pub name: String,
    pub expected: String,
    pub got: String,
    pub provenance: &'static str,
    pub pass: bool,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub example: String,
    pub module: &'static str,
    pub operation: String,
    pub fields: Vec<Field>,
}

impl Report {
    pub fn new(example: &str, module: &'static str, operation: &str) -> Report {
        Report {
            example: example.to_string(),
            module,
            operation: operation.to_string(),
            fields: Vec::new(),
        }
    }

    /// Record one comparison; it passes iff the two renderings agree
    /// exactly (all values are exact, so string equality is equality).
    pub fn push(
        &mut self,
        name: &str,
        expected: impl ToString,
        got: impl ToString,
        provenance: &'static str,
    ) {
        let expected = expected.to_string();
        let got = got.to_string();
        let pass = expected == got;
        self.fields.push(Field {
            name: name.to_string(),
            expected,
            got,
            provenance,
            pass,
        });
    }

    pub fn pass(&self) -> bool {
        self.fields.iter().all(|f| f.pass)
    }

    pub fn to_json(&self) -> Value {
        let mut fields = Map::new();
        for f in &self.fields {
            fields.insert(
                f.name.clone(),
                json!({
                    "expected": f.expected,
                    "got": f.got,
                    "provenance": f.provenance,
                    "pass": f.pass,
                }),
            );
        }
        json!({
            "example": self.example,
            "module": self.module,
            "fields": fields,
            "pass": self.pass(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{} [{}] {}\n",
            if self.pass() { "PASS" } else { "FAIL" },
            self.module,
            self.example
        );
        for f in &self.fields {
            out.push_str(&format!(
                "  {} {}: expected {}, got {} [{}]\n",
                if f.pass { "ok  " } else { "FAIL" },
                f.name,
                f.expected,
                f.got,
                f.provenance
            ));
        }
        out.pop();
        out
    }

    /// Print the record on stdout; every mismatch additionally goes to
    /// stderr with the module, operation, values and provenance tag.
    pub fn emit(&self, json: bool) {
        if json {
            print_line(&self.to_json().to_string());
        } else {
            print_line(&self.to_text());
        }
        for f in &self.fields {
            if !f.pass {
                eprintln!(
                    "mismatch in {}.{}: field {} expected {}, got {} [provenance: {}]",
                    self.module, self.operation, f.name, f.expected, f.got, f.provenance
                );
            }
        }
    }
}

/// Emit a free-form record (used by the plethysm, restriction and
/// Riemann-Roch subcommands whose schemas are their own).
pub fn emit_value(v: &Value, json: bool) {
    if json {
        print_line(&v.to_string());
    } else {
        print_line(&text_of_value(v));
    }
}

fn text_of_value(v: &Value) -> String {
    match v {
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| format!("{k}: {}", text_of_value(v)))
            .collect::<Vec<_>>()
            .join("\n"),
        Value::Array(items) => format!(
            "[{}]",
            items
                .iter()
                .map(text_of_value)
                .collect::<Vec<_>>()
                .join(", ")
        ),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
