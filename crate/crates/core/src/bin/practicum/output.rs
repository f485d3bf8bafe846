//! Rendering of command results. Results are built as JSON values with
//! insertion-ordered keys; csv and plain are flattened views of the same.

use std::io::{self, Write};

use serde_json::Value;

use crate::args::Format;

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn rows_of(v: &Value) -> Option<(Vec<String>, Vec<&serde_json::Map<String, Value>>)> {
    let items = v.as_array()?;
    let objs: Vec<_> = items.iter().map(Value::as_object).collect::<Option<_>>()?;
    let mut header: Vec<String> = Vec::new();
    for o in &objs {
        for k in o.keys() {
            if !header.contains(k) {
                header.push(k.clone());
            }
        }
    }
    Some((header, objs))
}

fn write_csv(out: &mut dyn Write, v: &Value) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let result = match v {
        Value::Object(o) => w
            .write_record(o.keys())
            .and_then(|_| w.write_record(o.values().map(scalar))),
        Value::Array(items) => match rows_of(v) {
            Some((header, objs)) => w.write_record(&header).and_then(|_| {
                objs.iter().try_for_each(|o| {
                    w.write_record(header.iter().map(|k| o.get(k).map(scalar).unwrap_or_default()))
                })
            }),
            None => w
                .write_record(["value"])
                .and_then(|_| items.iter().try_for_each(|x| w.write_record([scalar(x)]))),
        },
        other => w.write_record([scalar(other)]),
    };
    result.map_err(io::Error::other)?;
    w.flush()
}

fn write_plain(out: &mut dyn Write, v: &Value) -> io::Result<()> {
    match v {
        Value::Object(o) => {
            for (k, x) in o {
                writeln!(out, "{k}: {}", scalar(x))?;
            }
        }
        Value::Array(items) => {
            for x in items {
                match x {
                    Value::Object(o) => {
                        let line: Vec<String> =
                            o.iter().map(|(k, x)| format!("{k}={}", scalar(x))).collect();
                        writeln!(out, "{}", line.join(" "))?;
                    }
                    other => writeln!(out, "{}", scalar(other))?,
                }
            }
        }
        other => writeln!(out, "{}", scalar(other))?,
    }
    Ok(())
}

pub fn emit(format: Format, v: &Value) -> io::Result<()> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match format {
        Format::Json => writeln!(out, "{v}")?,
        Format::Csv => write_csv(&mut out, v)?,
        Format::Plain => write_plain(&mut out, v)?,
    }
    out.flush()
}
