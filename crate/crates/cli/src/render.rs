//! Output assembly. Every command builds one serializable value; json mode
//! prints it as is and text mode lays the same value out for reading.

use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    schema_version: u32,
    command: &'a str,
    #[serde(flatten)]
    body: &'a T,
}

pub fn emit<T: Serialize>(format: Format, command: &str, body: &T) -> String {
    let value = serde_json::to_value(Envelope { schema_version: SCHEMA_VERSION, command, body })
        .expect("output is plain data");
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&value).expect("output is plain data");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut out = String::new();
            if let Value::Object(map) = &value {
                // the envelope is for machines
                let body: serde_json::Map<String, Value> =
                    map.iter().filter(|(k, _)| k.as_str() != "schema_version").map(|(k, v)| (k.clone(), v.clone())).collect();
                object(&mut out, &body, 0);
            }
            out
        }
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(if *b { "yes" } else { "no" }.into()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        // short tokens inline, prose one per line
        Value::Array(items) if items.iter().all(|i| matches!(i, Value::String(s) if !s.contains(' ')) || i.is_number()) => {
            if items.is_empty() {
                Some("(none)".into())
            } else {
                Some(items.iter().map(|i| scalar(i).unwrap_or_default()).collect::<Vec<_>>().join("  "))
            }
        }
        _ => None,
    }
}

fn is_flat_row(v: &Value) -> bool {
    matches!(v, Value::Object(m) if m.values().all(|x| !x.is_object() && !x.is_array()))
}

fn object(out: &mut String, map: &serde_json::Map<String, Value>, indent: usize) {
    let width = map.keys().map(|k| k.chars().count()).max().unwrap_or(0);
    let pad = " ".repeat(indent);
    for (k, v) in map {
        if let Some(s) = scalar(v) {
            out.push_str(&format!("{pad}{k:<width$}  {s}\n"));
            continue;
        }
        out.push_str(&format!("{pad}{k}\n"));
        match v {
            Value::Object(m) => object(out, m, indent + 2),
            Value::Array(items) if items.iter().all(is_flat_row) => table(out, items, indent + 2),
            Value::Array(items) => {
                for item in items {
                    match item {
                        Value::Object(m) => {
                            out.push_str(&format!("{pad}  -\n"));
                            object(out, m, indent + 4);
                        }
                        other => out.push_str(&format!("{pad}  - {}\n", scalar(other).unwrap_or_default())),
                    }
                }
            }
            _ => unreachable!("scalars handled above"),
        }
    }
}

fn table(out: &mut String, rows: &[Value], indent: usize) {
    let pad = " ".repeat(indent);
    let Some(Value::Object(first)) = rows.first() else { return };
    let keys: Vec<&String> = first.keys().collect();
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| keys.iter().map(|k| r.get(k.as_str()).and_then(scalar).unwrap_or_default()).collect())
        .collect();
    let widths: Vec<usize> = keys
        .iter()
        .enumerate()
        .map(|(i, k)| cells.iter().map(|c| c[i].chars().count()).chain([k.chars().count()]).max().unwrap_or(0))
        .collect();
    let line = |items: Vec<&str>| {
        let parts: Vec<String> = items.iter().zip(&widths).map(|(s, w)| format!("{s:<w$}")).collect();
        format!("{pad}{}\n", parts.join("  ").trim_end())
    };
    out.push_str(&line(keys.iter().map(|k| k.as_str()).collect()));
    for c in &cells {
        out.push_str(&line(c.iter().map(String::as_str).collect()));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Serialize)]
    struct Row {
        g: &'static str,
        ok: bool,
    }

    #[derive(Serialize)]
    struct Body {
        set: &'static str,
        rows: Vec<Row>,
        items: Vec<u32>,
    }

    #[test]
    fn text_and_json_carry_the_same_fields() {
        let body = Body { set: "{a}", rows: vec![Row { g: "e", ok: true }, Row { g: "abc", ok: false }], items: vec![] };
        let json = emit(Format::Json, "demo", &body);
        assert!(json.starts_with("{\n  \"schema_version\": 1,\n  \"command\": \"demo\""));
        let text = emit(Format::Text, "demo", &body);
        assert_eq!(text, "command  demo\nset      {a}\nrows\n  g    ok\n  e    yes\n  abc  no\nitems    (none)\n");
    }
}
