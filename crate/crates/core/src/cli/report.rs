//! Table-shaped reports rendered as JSON or CSV.
//!
//! Reals are written with 17 significant digits so that every value
//! re-parses to the same binary64 number; complex values become `{re, im}`
//! objects in JSON and `<name>_re`, `<name>_im` column pairs in CSV.

use num_complex::Complex64;
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Null,
    Bool(bool),
    Int(i128),
    Num(f64),
    Complex(Complex64),
    Str(String),
    /// Nested list; rendered inline in JSON and as `;`-joined text in CSV.
    List(Vec<Cell>),
    Obj(Record),
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
    }
}

impl From<Complex64> for Cell {
    fn from(v: Complex64) -> Self {
        Cell::Complex(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Str(v.to_string())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Str(v)
    }
}

macro_rules! int_cell {
    ($($t:ty),*) => {$(
        impl From<$t> for Cell {
            fn from(v: $t) -> Self {
                Cell::Int(v as i128)
            }
        }
    )*};
}
int_cell!(i64, i128, u32, u64, usize);

impl<T: Into<Cell>> From<Option<T>> for Cell {
    fn from(v: Option<T>) -> Self {
        v.map_or(Cell::Null, Into::into)
    }
}

/// 17 significant digits; non-finite values as strings.
pub fn format_real(x: f64) -> String {
    if x.is_nan() {
        "NaN".into()
    } else if x.is_infinite() {
        if x > 0.0 { "Infinity".into() } else { "-Infinity".into() }
    } else {
        format!("{x:.16e}")
    }
}

struct Real(f64);

impl Serialize for Real {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.0.is_finite() {
            RawValue::from_string(format_real(self.0))
                .map_err(serde::ser::Error::custom)?
                .serialize(s)
        } else {
            s.serialize_str(&format_real(self.0))
        }
    }
}

impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Cell::Null => s.serialize_unit(),
            Cell::Bool(b) => s.serialize_bool(*b),
            Cell::Int(i) => s.serialize_i128(*i),
            Cell::Num(x) => Real(*x).serialize(s),
            Cell::Complex(z) => {
                let mut map = s.serialize_map(Some(2))?;
                map.serialize_entry("re", &Real(z.re))?;
                map.serialize_entry("im", &Real(z.im))?;
                map.end()
            }
            Cell::Str(t) => s.serialize_str(t),
            Cell::List(items) => {
                let mut seq = s.serialize_seq(Some(items.len()))?;
                for item in items {
                    seq.serialize_element(item)?;
                }
                seq.end()
            }
            Cell::Obj(rec) => rec.serialize(s),
        }
    }
}

/// Ordered list of named cells.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Record(pub Vec<(String, Cell)>);

impl Record {
    pub fn new() -> Self {
        Record(Vec::new())
    }

    pub fn with(mut self, key: &str, value: impl Into<Cell>) -> Self {
        self.0.push((key.to_string(), value.into()));
        self
    }

    pub fn push(&mut self, key: &str, value: impl Into<Cell>) {
        self.0.push((key.to_string(), value.into()));
    }
}

impl Serialize for Record {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

/// A summary record plus an optional table of rows.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub summary: Record,
    pub rows_key: &'static str,
    pub rows: Vec<Record>,
    /// CSV output is the row table (otherwise the single summary row).
    pub csv_rows: bool,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(&JsonReport(self)).expect("report serializes");
        out.push('\n');
        out
    }

    pub fn to_csv(&self) -> String {
        let records: Vec<&Record> = if self.csv_rows {
            self.rows.iter().collect()
        } else {
            vec![&self.summary]
        };
        let mut writer = csv::WriterBuilder::new().from_writer(Vec::new());
        if let Some(first) = records.first() {
            // a column is split into re/im when any row holds a complex value there
            let complex: Vec<bool> = (0..first.0.len())
                .map(|j| records.iter().any(|r| matches!(r.0.get(j), Some((_, Cell::Complex(_))))))
                .collect();
            let header: Vec<String> = first
                .0
                .iter()
                .zip(&complex)
                .flat_map(|((k, _), &cx)| if cx { vec![format!("{k}_re"), format!("{k}_im")] } else { vec![k.clone()] })
                .collect();
            writer.write_record(&header).expect("in-memory write");
            for rec in records {
                let fields: Vec<String> = rec
                    .0
                    .iter()
                    .zip(&complex)
                    .flat_map(|((_, v), &cx)| match v {
                        Cell::Complex(z) => vec![format_real(z.re), format_real(z.im)],
                        other if cx => vec![csv_text(other), String::new()],
                        other => vec![csv_text(other)],
                    })
                    .collect();
                writer.write_record(&fields).expect("in-memory write");
            }
        }
        String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8 csv")
    }
}

struct JsonReport<'a>(&'a Report);

impl Serialize for JsonReport<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let r = self.0;
        let with_rows = !r.rows.is_empty() || r.csv_rows;
        let mut map = s.serialize_map(Some(r.summary.0.len() + usize::from(with_rows)))?;
        for (k, v) in &r.summary.0 {
            map.serialize_entry(k, v)?;
        }
        if with_rows {
            map.serialize_entry(r.rows_key, &r.rows)?;
        }
        map.end()
    }
}

fn csv_text(c: &Cell) -> String {
    match c {
        Cell::Null => String::new(),
        Cell::Bool(b) => b.to_string(),
        Cell::Int(i) => i.to_string(),
        Cell::Num(x) => format_real(*x),
        Cell::Complex(z) => format!("{}{}{}i", format_real(z.re), if z.im < 0.0 { "" } else { "+" }, format_real(z.im)),
        Cell::Str(t) => t.clone(),
        Cell::List(items) => items.iter().map(csv_text).collect::<Vec<_>>().join(";"),
        Cell::Obj(rec) => rec.0.iter().map(|(k, v)| format!("{k}={}", csv_text(v))).collect::<Vec<_>>().join(";"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reals_round_trip() {
        for x in [0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 0.0, -0.0] {
            let s = format_real(x);
            assert_eq!(s.parse::<f64>().unwrap().to_bits(), x.to_bits(), "{s}");
        }
        assert_eq!(format_real(f64::INFINITY), "Infinity");
    }

    #[test]
    fn json_shape() {
        let report = Report {
            summary: Record::new().with("m", 3i64).with("value", Complex64::new(0.5, -1.0)),
            rows_key: "rows",
            rows: vec![Record::new().with("ok", true)],
            csv_rows: false,
        };
        let v: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(v["m"], 3);
        assert_eq!(v["value"]["re"].as_f64(), Some(0.5));
        assert_eq!(v["value"]["im"].as_f64(), Some(-1.0));
        assert_eq!(v["rows"][0]["ok"], true);
        let csv = report.to_csv();
        assert_eq!(csv.lines().next(), Some("m,value_re,value_im"));
    }
}
