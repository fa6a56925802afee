use std::fmt;
use std::io::Write;
use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{Map, Number, Value};

use super::config::{ExperimentConfig, Format};
use crate::error::{Error, Result};
use crate::matcore::RNG_ALGORITHM;

/// One report value.
///
/// Text cells must not look like another kind (an integer, `a/b`, a float,
/// `true`/`false`), since the parsers infer the kind from the text.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(BigInt),
    Rational(BigRational),
    Float(f64),
    Bool(bool),
    Text(String),
}

impl Cell {
    pub fn int(v: impl Into<BigInt>) -> Self {
        Cell::Int(v.into())
    }

    pub fn text(v: impl ToString) -> Self {
        Cell::Text(v.to_string())
    }

    fn from_text(s: &str) -> Self {
        if s == "true" || s == "false" {
            return Cell::Bool(s == "true");
        }
        if let Ok(i) = s.parse::<BigInt>() {
            return Cell::Int(i);
        }
        if let Some((n, d)) = s.split_once('/') {
            if let (Ok(n), Ok(d)) = (n.parse::<BigInt>(), d.parse::<BigInt>()) {
                if d > BigInt::from(0) {
                    return Cell::Rational(BigRational::new(n, d));
                }
            }
        }
        let floaty = s.contains(['.', 'e']) || matches!(s, "inf" | "-inf" | "NaN");
        match s.parse::<f64>() {
            Ok(f) if floaty => Cell::Float(f),
            _ => Cell::Text(s.to_string()),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Int(i) => Value::Number(i.to_string().parse::<Number>().expect("integer literal")),
            Cell::Float(f) if f.is_finite() => Value::Number(format!("{f:?}").parse::<Number>().expect("float literal")),
            Cell::Bool(b) => Value::Bool(*b),
            other => Value::String(other.to_string()),
        }
    }

    fn from_json(v: &Value) -> Result<Self> {
        Ok(match v {
            Value::Bool(b) => Cell::Bool(*b),
            Value::Number(n) => Cell::from_text(&n.to_string()),
            Value::String(s) => Cell::from_text(s),
            other => return Err(Error::ReportParse(format!("unexpected JSON value {other}"))),
        })
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Int(i) => write!(f, "{i}"),
            Cell::Rational(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Cell::Float(x) => write!(f, "{x:?}"),
            Cell::Bool(b) => write!(f, "{b}"),
            Cell::Text(s) => f.write_str(s),
        }
    }
}

/// First row of every report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Meta {
    pub version: String,
    pub seed: u64,
    pub config_sha256: String,
    pub rng: String,
}

impl Meta {
    pub fn for_config(cfg: &ExperimentConfig) -> Result<Self> {
        Ok(Meta {
            version: env!("CARGO_PKG_VERSION").to_string(),
            seed: cfg.seed()?,
            config_sha256: cfg.hash(),
            rng: RNG_ALGORITHM.to_string(),
        })
    }

    fn pairs(&self) -> [(&'static str, String); 4] {
        [
            ("version", self.version.clone()),
            ("seed", self.seed.to_string()),
            ("config_sha256", self.config_sha256.clone()),
            ("rng", self.rng.clone()),
        ]
    }

    fn from_pairs(pairs: &[(String, String)]) -> Result<Self> {
        let get = |k: &str| {
            pairs
                .iter()
                .find(|(key, _)| key == k)
                .map(|(_, v)| v.clone())
                .ok_or_else(|| Error::ReportParse(format!("metadata lacks '{k}'")))
        };
        Ok(Meta {
            version: get("version")?,
            seed: get("seed")?.parse().map_err(|_| Error::ReportParse("metadata seed is not an integer".into()))?,
            config_sha256: get("config_sha256")?,
            rng: get("rng")?,
        })
    }
}

/// A table of rows keyed by instance. `instance` and `seed` are the first two columns.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub meta: Meta,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

const META_TAG: &str = "#meta";

impl Report {
    pub fn new(meta: Meta, columns: &[&str]) -> Self {
        let columns = ["instance", "seed"].iter().chain(columns).map(|c| c.to_string()).collect();
        Report { meta, columns, rows: Vec::new() }
    }

    /// Appends a row; `cells` follow the columns given to [`Report::new`].
    pub fn push(&mut self, instance: u64, cells: Vec<Cell>) -> Result<()> {
        if cells.len() + 2 != self.columns.len() {
            return Err(Error::DimensionMismatch(format!(
                "row with {} cells for {} columns",
                cells.len(),
                self.columns.len() - 2
            )));
        }
        let mut row = vec![Cell::int(instance), Cell::int(self.meta.seed)];
        row.extend(cells);
        self.rows.push(row);
        Ok(())
    }

    pub fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }

    /// Every `ok` cell is `true` (vacuously true without an `ok` column).
    pub fn all_ok(&self) -> bool {
        match self.column("ok") {
            Some(i) => self.rows.iter().all(|r| r[i] == Cell::Bool(true)),
            None => true,
        }
    }

    fn sorted_rows(&self) -> Vec<&Vec<Cell>> {
        let mut rows: Vec<&Vec<Cell>> = self.rows.iter().collect();
        rows.sort_by(|a, b| match (&a[0], &b[0]) {
            (Cell::Int(x), Cell::Int(y)) => x.cmp(y),
            _ => std::cmp::Ordering::Equal,
        });
        rows
    }

    /// Rows are sorted by instance before rendering.
    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Csv => {
                let mut w = csv::WriterBuilder::new().flexible(true).terminator(csv::Terminator::Any(b'\n')).from_writer(vec![]);
                let meta: Vec<String> =
                    std::iter::once(META_TAG.to_string()).chain(self.meta.pairs().iter().map(|(k, v)| format!("{k}={v}"))).collect();
                let csv_err = |e: csv::Error| Error::ReportParse(e.to_string());
                w.write_record(&meta).map_err(csv_err)?;
                w.write_record(&self.columns).map_err(csv_err)?;
                for row in self.sorted_rows() {
                    w.write_record(row.iter().map(Cell::to_string)).map_err(csv_err)?;
                }
                let bytes = w.into_inner().map_err(|e| Error::ReportParse(e.to_string()))?;
                Ok(String::from_utf8(bytes).expect("cells are UTF-8"))
            }
            Format::JsonLines => {
                let mut out = String::new();
                let meta: Map<String, Value> =
                    self.meta.pairs().into_iter().map(|(k, v)| (k.to_string(), Value::String(v))).collect();
                out += &Value::Object(Map::from_iter([("meta".to_string(), Value::Object(meta))])).to_string();
                out.push('\n');
                let cols = Value::Array(self.columns.iter().cloned().map(Value::String).collect());
                out += &Value::Object(Map::from_iter([("columns".to_string(), cols)])).to_string();
                out.push('\n');
                for row in self.sorted_rows() {
                    let obj: Map<String, Value> = self.columns.iter().cloned().zip(row.iter().map(Cell::to_json)).collect();
                    out += &Value::Object(obj).to_string();
                    out.push('\n');
                }
                Ok(out)
            }
        }
    }

    /// Reads back a rendered report.
    pub fn parse(text: &str, format: Format) -> Result<Self> {
        match format {
            Format::Csv => {
                let mut r = csv::ReaderBuilder::new().has_headers(false).flexible(true).from_reader(text.as_bytes());
                let mut records = r.records();
                let mut next = || -> Result<Option<csv::StringRecord>> {
                    records.next().transpose().map_err(|e| Error::ReportParse(e.to_string()))
                };
                let meta_rec = next()?.ok_or_else(|| Error::ReportParse("empty report".into()))?;
                if meta_rec.get(0) != Some(META_TAG) {
                    return Err(Error::ReportParse("first row is not metadata".into()));
                }
                let pairs: Vec<(String, String)> = meta_rec
                    .iter()
                    .skip(1)
                    .map(|f| f.split_once('=').map(|(k, v)| (k.to_string(), v.to_string())))
                    .collect::<Option<_>>()
                    .ok_or_else(|| Error::ReportParse("malformed metadata field".into()))?;
                let meta = Meta::from_pairs(&pairs)?;
                let columns: Vec<String> =
                    next()?.ok_or_else(|| Error::ReportParse("missing header".into()))?.iter().map(String::from).collect();
                let mut rows = Vec::new();
                while let Some(rec) = next()? {
                    if rec.len() != columns.len() {
                        return Err(Error::ReportParse(format!("row of {} fields under {} columns", rec.len(), columns.len())));
                    }
                    rows.push(rec.iter().map(Cell::from_text).collect());
                }
                Ok(Report { meta, columns, rows })
            }
            Format::JsonLines => {
                let mut lines = text.lines().map(|l| serde_json::from_str::<Value>(l).map_err(|e| Error::ReportParse(e.to_string())));
                let meta_v = lines.next().ok_or_else(|| Error::ReportParse("empty report".into()))??;
                let pairs: Vec<(String, String)> = meta_v
                    .get("meta")
                    .and_then(Value::as_object)
                    .ok_or_else(|| Error::ReportParse("first line is not metadata".into()))?
                    .iter()
                    .map(|(k, v)| (k.clone(), v.as_str().unwrap_or_default().to_string()))
                    .collect();
                let meta = Meta::from_pairs(&pairs)?;
                let cols_v = lines.next().ok_or_else(|| Error::ReportParse("missing columns".into()))??;
                let columns: Vec<String> = cols_v
                    .get("columns")
                    .and_then(Value::as_array)
                    .ok_or_else(|| Error::ReportParse("second line is not the column list".into()))?
                    .iter()
                    .map(|c| c.as_str().map(String::from).ok_or_else(|| Error::ReportParse("column name is not a string".into())))
                    .collect::<Result<_>>()?;
                let mut rows = Vec::new();
                for line in lines {
                    let obj = line?;
                    let row = columns
                        .iter()
                        .map(|c| obj.get(c).ok_or_else(|| Error::ReportParse(format!("row lacks '{c}'"))).and_then(Cell::from_json))
                        .collect::<Result<Vec<_>>>()?;
                    rows.push(row);
                }
                Ok(Report { meta, columns, rows })
            }
        }
    }
}

/// Writes the rendered report to `path`, or to stdout when `path` is `None`.
pub fn emit_report(report: &Report, format: Format, path: Option<&Path>) -> Result<()> {
    let text = report.render(format)?;
    match path {
        Some(p) => std::fs::write(p, text).map_err(|source| Error::Io { path: p.to_path_buf(), source }),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|source| Error::Io { path: "<stdout>".into(), source }),
    }
}
