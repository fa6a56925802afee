use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_rational::BigRational;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

/// Report encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    JsonLines,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json-lines" | "jsonl" => Ok(Format::JsonLines),
            other => Err(Error::Param { key: "format".into(), reason: format!("expected csv or json-lines, got '{other}'") }),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Csv => "csv",
            Format::JsonLines => "json-lines",
        })
    }
}

/// Flat `key = value` experiment description.
///
/// Keys are kept sorted, so the text form is canonical. A missing `seed`
/// reads as 0.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ExperimentConfig {
    entries: BTreeMap<String, String>,
}

fn valid_key(k: &str) -> bool {
    !k.is_empty() && k.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-' || c == '.')
}

impl ExperimentConfig {
    pub fn new() -> Self {
        Self::default()
    }

    /// Parses `key = value` lines; `#` starts a comment, blank lines are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = Self::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("line {}: expected 'key = value', got '{raw}'", lineno + 1)))?;
            cfg.set(k.trim(), v.trim()).map_err(|e| Error::Config(format!("line {}: {e}", lineno + 1)))?;
        }
        Ok(cfg)
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
        Self::parse(&text)
    }

    /// Sets one key. Values may not contain `#`, newlines or surrounding spaces,
    /// so that `parse(to_text())` gives back the same config.
    pub fn set(&mut self, key: &str, value: impl Into<String>) -> Result<()> {
        let value = value.into();
        if !valid_key(key) {
            return Err(Error::Config(format!("invalid key '{key}'")));
        }
        if value.is_empty() || value.contains(['#', '\n', '\r']) || value.trim() != value {
            return Err(Error::Config(format!("invalid value '{value}' for key '{key}'")));
        }
        self.entries.insert(key.to_string(), value);
        Ok(())
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Result<Self> {
        self.set(key, value.to_string())?;
        Ok(self)
    }

    /// Applies every entry of `flags` on top of `self`.
    pub fn merge(&mut self, flags: &ExperimentConfig) {
        for (k, v) in &flags.entries {
            self.entries.insert(k.clone(), v.clone());
        }
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(String::as_str)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&str, &str)> {
        self.entries.iter().map(|(k, v)| (k.as_str(), v.as_str()))
    }

    fn parsed<T: FromStr>(&self, key: &str) -> Result<Option<T>>
    where
        T::Err: fmt::Display,
    {
        self.get(key)
            .map(|v| v.parse::<T>().map_err(|e| Error::Param { key: key.into(), reason: format!("'{v}': {e}") }))
            .transpose()
    }

    pub fn u64_opt(&self, key: &str) -> Result<Option<u64>> {
        self.parsed(key)
    }

    pub fn u64_or(&self, key: &str, default: u64) -> Result<u64> {
        Ok(self.u64_opt(key)?.unwrap_or(default))
    }

    pub fn usize_or(&self, key: &str, default: usize) -> Result<usize> {
        Ok(self.parsed(key)?.unwrap_or(default))
    }

    /// Rational value written as `a/b` or as an integer.
    pub fn rational_or(&self, key: &str, default: BigRational) -> Result<BigRational> {
        Ok(self.parsed(key)?.unwrap_or(default))
    }

    pub fn f64_or(&self, key: &str, default: f64) -> Result<f64> {
        Ok(self.parsed(key)?.unwrap_or(default))
    }

    pub fn require(&self, key: &str) -> Result<&str> {
        self.get(key).ok_or_else(|| Error::Param { key: key.into(), reason: "missing".into() })
    }

    pub fn seed(&self) -> Result<u64> {
        self.u64_or("seed", 0)
    }

    pub fn format(&self) -> Result<Format> {
        self.get("format").map_or(Ok(Format::Csv), str::parse)
    }

    pub fn out(&self) -> Option<PathBuf> {
        self.get("out").map(PathBuf::from)
    }

    /// Canonical text, one sorted `key = value` line per entry.
    pub fn to_text(&self) -> String {
        self.entries.iter().map(|(k, v)| format!("{k} = {v}\n")).collect()
    }

    /// SHA-256 of the canonical text without the `out` entry, so the same
    /// experiment written to two files hashes the same.
    pub fn hash(&self) -> String {
        let mut h = Sha256::new();
        for (k, v) in self.entries.iter().filter(|(k, _)| k.as_str() != "out") {
            h.update(format!("{k} = {v}\n"));
        }
        h.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }
}
