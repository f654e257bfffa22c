//! Output record and its JSON / CSV renderings.

use std::fmt;

use progdisc::{QuadSurd, Rational, Value};
use serde::Serialize;
use serde_json::Value as Json;

pub const SCHEMA_VERSION: &str = "1.0";

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
        }
    }
}

/// A number as emitted: the float always, the fraction when rational, and
/// the surd form when exact but irrational.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Number {
    pub exact: Option<String>,
    pub float: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub surd: Option<String>,
}

impl Number {
    pub fn float(x: f64) -> Self {
        Self {
            exact: None,
            float: x,
            surd: None,
        }
    }

    pub fn rational(q: &Rational) -> Self {
        Self {
            exact: Some(q.to_string()),
            float: progdisc::exactnum::to_f64(q),
            surd: None,
        }
    }

    pub fn surd(s: &QuadSurd) -> Self {
        match s.as_rational() {
            Some(q) => Self::rational(&q),
            None => Self {
                exact: None,
                float: s.to_f64(),
                surd: Some(s.to_string()),
            },
        }
    }

    pub fn value(v: &Value) -> Self {
        match &v.surd {
            Some(s) => Self::surd(s),
            None => Self::float(v.float),
        }
    }

    pub fn exact_cell(&self) -> String {
        self.exact.clone().unwrap_or_default()
    }

    pub fn float_cell(&self) -> String {
        float_cell(self.float)
    }
}

pub fn float_cell(x: f64) -> String {
    // serde_json and Display agree on the shortest round-trip digits
    serde_json::to_string(&x).expect("finite float")
}

#[derive(Debug, Clone, Serialize)]
pub struct OutputRecord {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub parameters: Json,
    pub results: Json,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Json>,
}

/// Flat table used for CSV output.
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

/// Everything a command produces; rendered in the requested format.
#[derive(Debug, Clone)]
pub struct Emission {
    pub record: OutputRecord,
    pub table: Table,
}

impl Emission {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s =
                    serde_json::to_string_pretty(&self.record).expect("serializable record");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.table.header).expect("in-memory write");
                for row in &self.table.rows {
                    w.write_record(row).expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 cells")
            }
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.extension())
    }
}
