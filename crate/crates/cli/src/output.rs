//! The single JSON document every command emits, and its CSV counterpart
//! for sequence-shaped results.

use std::io::Write;
use std::str::FromStr;

use lattice_solids::{Int, IntVector3, Rational};
use serde::{Deserialize, Serialize};
use serde_json::{Number, Value};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub schema_version: u32,
    pub command: String,
    pub params: Value,
    pub payload: Value,
}

impl OutputRecord {
    pub fn new(command: &str, params: Value, payload: Value) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            params,
            payload,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("values are always serialisable");
        s.push('\n');
        s
    }
}

/// Rows for `--format csv`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: Vec<&'static str>) -> Self {
        Self { header, rows: Vec::new() }
    }

    pub fn write_to(&self, out: impl Write) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(&self.header)?;
        for row in &self.rows {
            w.write_record(row)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_to(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("csv output is utf-8")
    }
}

/// An integer as a JSON number, every digit kept.
pub fn int(i: &Int) -> Value {
    Value::Number(Number::from_str(&i.to_string()).expect("integer literal"))
}

pub fn ints(xs: &[Int]) -> Value {
    Value::Array(xs.iter().map(int).collect())
}

pub fn vector(v: &IntVector3) -> Value {
    Value::Array(v.components().into_iter().map(int).collect())
}

pub fn vectors<'a>(vs: impl IntoIterator<Item = &'a IntVector3>) -> Value {
    Value::Array(vs.into_iter().map(vector).collect())
}

/// `num/den` in lowest terms, `den >= 1`.
pub fn rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Reads back a number written by [`int`].
pub fn parse_int(v: &Value) -> Option<Int> {
    match v {
        Value::Number(n) => n.to_string().parse().ok(),
        _ => None,
    }
}
