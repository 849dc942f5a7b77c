use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use algcomb_core::Rational;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// A float rounded to 12 significant digits, or null when not finite.
pub fn num(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    let r: f64 = format!("{x:.11e}").parse().expect("formatted float");
    serde_json::Number::from_f64(r).map_or(Value::Null, Value::Number)
}

/// Integers that fit in 64 bits become numbers, larger ones strings.
pub fn big(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(x.to_string()),
    }
}

pub fn rational(x: &Rational) -> Value {
    if x.is_integer() {
        big(&x.to_integer())
    } else {
        Value::String(x.to_string())
    }
}

pub fn bidegree_key(k: (u32, u32)) -> String {
    format!("{},{}", k.0, k.1)
}

pub struct Emitter {
    pub command: String,
    pub params: Map<String, Value>,
    pub output: Option<PathBuf>,
}

impl Emitter {
    fn meta(&self) -> Value {
        let mut m = Map::new();
        m.insert("command".into(), Value::String(self.command.clone()));
        m.insert("params".into(), Value::Object(self.params.clone()));
        m.insert("version".into(), Value::String(env!("CARGO_PKG_VERSION").into()));
        Value::Object(m)
    }

    fn write(&self, text: &str) -> std::io::Result<()> {
        match &self.output {
            Some(p) => std::fs::write(p, text),
            None => std::io::stdout().lock().write_all(text.as_bytes()),
        }
    }

    pub fn json(&self, mut body: Map<String, Value>) -> std::io::Result<()> {
        body.insert("meta".into(), self.meta());
        let mut s = serde_json::to_string_pretty(&Value::Object(body)).expect("serialisable");
        s.push('\n');
        self.write(&s)
    }

    pub fn csv(&self, header: &[&str], rows: impl IntoIterator<Item = Vec<Value>>) -> std::io::Result<()> {
        let mut s = format!("# meta {}\n", serde_json::to_string(&self.meta()).expect("serialisable"));
        s.push_str(&header.join(","));
        s.push('\n');
        for row in rows {
            let cells: Vec<String> = row
                .iter()
                .map(|v| match v {
                    Value::String(t) => t.clone(),
                    Value::Null => String::new(),
                    other => other.to_string(),
                })
                .collect();
            let _ = writeln!(s, "{}", cells.join(","));
        }
        self.write(&s)
    }
}

/// Reads the first numeric column (or the named one) of a CSV file,
/// skipping `#` comment lines and a header row.
pub fn read_csv_column(path: &PathBuf, column: Option<&str>) -> Result<Vec<f64>, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let mut lines = text.lines().filter(|l| !l.trim().is_empty() && !l.starts_with('#'));
    let mut idx = 0;
    let mut values = Vec::new();
    let first = lines.next().ok_or("CSV file has no data")?;
    let first_cells: Vec<&str> = first.split(',').map(str::trim).collect();
    if first_cells.iter().any(|c| c.parse::<f64>().is_err()) {
        if let Some(name) = column {
            idx = first_cells.iter().position(|c| *c == name).ok_or(format!("no column named {name}"))?;
        }
    } else {
        values.push(first_cells[idx].parse::<f64>().map_err(|e| e.to_string())?);
    }
    for (n, line) in lines.enumerate() {
        let cell = line.split(',').nth(idx).ok_or(format!("row {} has no column {idx}", n + 2))?;
        values.push(cell.trim().parse::<f64>().map_err(|e| format!("row {}: {e}", n + 2))?);
    }
    Ok(values)
}
