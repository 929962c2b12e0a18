//! JSON interchange for rings and modular data, plus a deterministic
//! writer: keys in sorted order, floats with 17 significant digits, so
//! identical inputs produce byte-identical output.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Error;
use crate::modular::ModularData;
use crate::ring::FusionRing;

pub const SCHEMA_VERSION: u32 = 1;

/// On-disk form of a fusion ring: sparse structure constants as
/// `[i, j, k, value]` quadruples. Unknown fields are rejected.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingFile {
    pub schema_version: u32,
    pub rank: usize,
    pub labels: Vec<String>,
    pub dual: Vec<usize>,
    pub n: Vec<(usize, usize, usize, u64)>,
}

impl RingFile {
    pub fn from_ring(ring: &FusionRing) -> RingFile {
        RingFile {
            schema_version: SCHEMA_VERSION,
            rank: ring.rank(),
            labels: ring.labels().to_vec(),
            dual: ring.dual_permutation().to_vec(),
            n: ring.entries().map(|((i, j, k), v)| (i, j, k, v)).collect(),
        }
    }

    pub fn into_ring(self) -> Result<FusionRing, Error> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(Error::Parse(format!(
                "unsupported schema_version {}",
                self.schema_version
            )));
        }
        if self.labels.len() != self.rank {
            return Err(Error::structural(format!(
                "field `labels` has {} entries but rank is {}",
                self.labels.len(),
                self.rank
            )));
        }
        FusionRing::new(self.labels, self.dual, self.n)
    }
}

/// On-disk form of modular data: complex entries as `[re, im]` pairs.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModularFile {
    pub schema_version: u32,
    pub rank: usize,
    pub dual: Vec<usize>,
    pub s: Vec<Vec<(f64, f64)>>,
    pub t: Vec<(f64, f64)>,
}

impl ModularFile {
    pub fn from_modular(md: &ModularData) -> ModularFile {
        let r = md.rank();
        ModularFile {
            schema_version: SCHEMA_VERSION,
            rank: r,
            dual: md.dual_permutation().to_vec(),
            s: (0..r)
                .map(|i| (0..r).map(|j| (md.s(i, j).re, md.s(i, j).im)).collect())
                .collect(),
            t: (0..r).map(|i| (md.theta(i).re, md.theta(i).im)).collect(),
        }
    }

    pub fn into_modular(self, tolerance: f64) -> Result<ModularData, Error> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(Error::Parse(format!(
                "unsupported schema_version {}",
                self.schema_version
            )));
        }
        if self.s.len() != self.rank || self.s.iter().any(|row| row.len() != self.rank) {
            return Err(Error::structural("field `s` must be a square rank x rank matrix"));
        }
        let s = self
            .s
            .iter()
            .map(|row| row.iter().map(|&(re, im)| Complex64::new(re, im)).collect())
            .collect();
        let t = self.t.iter().map(|&(re, im)| Complex64::new(re, im)).collect();
        ModularData::new(s, t, self.dual, tolerance)
    }
}

pub fn parse_ring(text: &str) -> Result<FusionRing, Error> {
    let file: RingFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("ring file: {e}")))?;
    file.into_ring()
}

pub fn parse_modular(text: &str, tolerance: f64) -> Result<ModularData, Error> {
    let file: ModularFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("modular file: {e}")))?;
    file.into_modular(tolerance)
}

pub fn emit_ring(ring: &FusionRing) -> String {
    let value = serde_json::to_value(RingFile::from_ring(ring)).expect("ring file serializes");
    write_json(&value)
}

pub fn emit_modular(md: &ModularData) -> String {
    let value =
        serde_json::to_value(ModularFile::from_modular(md)).expect("modular file serializes");
    write_json(&value)
}

/// Render a JSON value deterministically: object keys in sorted order
/// (the default map is ordered), two-space indentation, and every
/// non-integer number in exponent form with 17 significant digits so
/// values round-trip exactly.
pub fn write_json(value: &Value) -> String {
    let mut out = String::new();
    write_value(value, 0, &mut out);
    out.push('\n');
    out
}

fn write_value(value: &Value, indent: usize, out: &mut String) {
    match value {
        Value::Null => out.push_str("null"),
        Value::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                out.push_str(&i.to_string());
            } else if let Some(u) = n.as_u64() {
                out.push_str(&u.to_string());
            } else {
                out.push_str(&format_float(n.as_f64().expect("number is f64")));
            }
        }
        Value::String(s) => {
            out.push_str(&serde_json::to_string(s).expect("string serializes"));
        }
        Value::Array(items) => {
            if items.is_empty() {
                out.push_str("[]");
                return;
            }
            out.push('[');
            for (idx, item) in items.iter().enumerate() {
                if idx > 0 {
                    out.push(',');
                }
                out.push('\n');
                push_indent(indent + 1, out);
                write_value(item, indent + 1, out);
            }
            out.push('\n');
            push_indent(indent, out);
            out.push(']');
        }
        Value::Object(map) => {
            if map.is_empty() {
                out.push_str("{}");
                return;
            }
            out.push('{');
            for (idx, (key, item)) in map.iter().enumerate() {
                if idx > 0 {
                    out.push(',');
                }
                out.push('\n');
                push_indent(indent + 1, out);
                out.push_str(&serde_json::to_string(key).expect("key serializes"));
                out.push_str(": ");
                write_value(item, indent + 1, out);
            }
            out.push('\n');
            push_indent(indent, out);
            out.push('}');
        }
    }
}

fn push_indent(indent: usize, out: &mut String) {
    for _ in 0..indent {
        out.push_str("  ");
    }
}

/// 17 significant digits in exponent form; enough to reproduce any f64
/// bit pattern on re-parse.
pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}
