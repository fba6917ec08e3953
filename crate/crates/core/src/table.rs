//! Structure-constant tables: every product of two PBW monomials up to a
//! degree bound, with deterministic JSON and CSV serialization.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::closed_form::{self, AlgebraId};
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::oracle::oracle_product;
use crate::poly::{Monomial, Polynomial, TermRecord};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Engine {
    ClosedForm,
    Oracle,
    CrossChecked,
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Engine::ClosedForm => "closed_form",
            Engine::Oracle => "oracle",
            Engine::CrossChecked => "cross_checked",
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Engine {
    type Err = Error;

    /// Accepts the canonical names and the short forms `closed` and `both`.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "closed_form" | "closed" => Ok(Engine::ClosedForm),
            "oracle" => Ok(Engine::Oracle),
            "cross_checked" | "both" => Ok(Engine::CrossChecked),
            other => Err(Error::Unsupported(format!("engine `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(Error::UnsupportedFormat(other.to_string())),
        }
    }
}

/// What a table is computed over: a catalog algebra, which both engines
/// support, or a user spec, which only the oracle supports.
#[derive(Clone, Debug)]
pub enum TableSource {
    Catalog(AlgebraId),
    Custom(LieAlgebra),
}

impl TableSource {
    /// `n5_2` for catalog algebras, `custom:<name>:<fnv hash of spec json>`
    /// otherwise.
    pub fn label(&self) -> String {
        match self {
            TableSource::Catalog(id) => id.name().to_string(),
            TableSource::Custom(alg) => {
                let json = alg.spec().to_json();
                let hash = json.bytes().fold(0xcbf29ce484222325u64, |h, b| {
                    (h ^ b as u64).wrapping_mul(0x100000001b3)
                });
                format!("custom:{}:{hash:016x}", alg.name())
            }
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            TableSource::Catalog(id) => id.dim(),
            TableSource::Custom(alg) => alg.dim(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableManifest {
    pub algebra: String,
    pub max_degree: u32,
    pub engine: Engine,
    pub record_count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRecord {
    pub left: Monomial,
    pub right: Monomial,
    pub result: Polynomial,
}

pub type ClosedFn = fn(AlgebraId, &Monomial, &Monomial) -> Result<Polynomial>;

pub fn generate_table(
    source: &TableSource,
    max_degree: u32,
    engine: Engine,
) -> Result<(TableManifest, Vec<TableRecord>)> {
    generate_table_with(source, max_degree, engine, closed_form::product)
}

/// [`generate_table`] with a substitute closed-form engine.
pub fn generate_table_with(
    source: &TableSource,
    max_degree: u32,
    engine: Engine,
    closed: ClosedFn,
) -> Result<(TableManifest, Vec<TableRecord>)> {
    let (id, alg) = match source {
        TableSource::Catalog(id) => (Some(*id), id.algebra()),
        TableSource::Custom(alg) => (None, alg.clone()),
    };
    if engine != Engine::Oracle && id.is_none() {
        return Err(Error::Unsupported(format!(
            "{} (closed form needs a catalog algebra)",
            alg.name()
        )));
    }
    let monos = Monomial::enumerate(alg.dim(), max_degree);
    let pairs: Vec<(&Monomial, &Monomial)> = monos
        .iter()
        .flat_map(|l| monos.iter().map(move |r| (l, r)))
        .collect();

    let records = pairs
        .par_iter()
        .map(|&(l, r)| {
            let result = match engine {
                Engine::ClosedForm => closed(id.unwrap(), l, r)?,
                Engine::Oracle => oracle_product(&alg, l, r)?,
                Engine::CrossChecked => {
                    let c = closed(id.unwrap(), l, r)?;
                    let o = oracle_product(&alg, l, r)?;
                    if c != o {
                        return Err(Error::Divergence {
                            left: l.clone(),
                            right: r.clone(),
                            closed: c,
                            oracle: o,
                        });
                    }
                    c
                }
            };
            Ok(TableRecord {
                left: l.clone(),
                right: r.clone(),
                result,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let manifest = TableManifest {
        algebra: source.label(),
        max_degree,
        engine,
        record_count: records.len(),
    };
    Ok((manifest, records))
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    algebra: String,
    max_degree: u32,
    engine: String,
    entries: Vec<EntryJson>,
}

#[derive(Serialize, Deserialize)]
struct EntryJson {
    left: Vec<u32>,
    right: Vec<u32>,
    result: Vec<TermRecord>,
}

pub fn export(manifest: &TableManifest, records: &[TableRecord], format: Format) -> Result<Vec<u8>> {
    let mut out = Vec::new();
    match format {
        Format::Json => {
            let doc = TableJson {
                algebra: manifest.algebra.clone(),
                max_degree: manifest.max_degree,
                engine: manifest.engine.name().to_string(),
                entries: records
                    .iter()
                    .map(|r| EntryJson {
                        left: r.left.exps().to_vec(),
                        right: r.right.exps().to_vec(),
                        result: r.result.to_records(),
                    })
                    .collect(),
            };
            serde_json::to_writer_pretty(&mut out, &doc)?;
            out.push(b'\n');
        }
        Format::Csv => {
            writeln!(out, "left;right;coeff;mono")?;
            for r in records {
                let (l, rt) = (join(r.left.exps()), join(r.right.exps()));
                if r.result.is_zero() {
                    writeln!(out, "{l};{rt};;")?;
                }
                for t in r.result.to_records() {
                    writeln!(out, "{l};{rt};{};{}", t.coeff, join(&t.mono))?;
                }
            }
        }
    }
    Ok(out)
}

fn join(e: &[u32]) -> String {
    e.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

fn split(field: &str, line: usize) -> Result<Vec<u32>> {
    if field.is_empty() {
        return Ok(Vec::new());
    }
    field
        .split(',')
        .map(|x| {
            x.parse().map_err(|_| Error::Parse {
                offset: line,
                message: format!("bad exponent `{x}` on line {line}"),
            })
        })
        .collect()
}

/// Inverse of [`export`] with [`Format::Json`].
pub fn import_json(bytes: &[u8]) -> Result<(TableManifest, Vec<TableRecord>)> {
    let doc: TableJson = serde_json::from_slice(bytes)?;
    let engine: Engine = doc.engine.parse()?;
    let records = doc
        .entries
        .into_iter()
        .map(|e| {
            let dim = e.left.len();
            Ok(TableRecord {
                result: Polynomial::from_records(dim, &e.result)?,
                left: Monomial::new(e.left),
                right: Monomial::new(e.right),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let manifest = TableManifest {
        algebra: doc.algebra,
        max_degree: doc.max_degree,
        engine,
        record_count: records.len(),
    };
    Ok((manifest, records))
}

/// Inverse of [`export`] with [`Format::Csv`]; the CSV carries no manifest.
/// Consecutive rows with the same `(left, right)` form one record.
pub fn import_csv(bytes: &[u8]) -> Result<Vec<TableRecord>> {
    let text = std::str::from_utf8(bytes).map_err(|e| Error::Parse {
        offset: e.valid_up_to(),
        message: "table is not UTF-8".into(),
    })?;
    let mut records: Vec<TableRecord> = Vec::new();
    for (n, line) in text.lines().enumerate().skip(1) {
        let cols: Vec<&str> = line.split(';').collect();
        let [l, r, coeff, mono] = cols[..] else {
            return Err(Error::Parse {
                offset: n + 1,
                message: format!("expected 4 columns on line {}", n + 1),
            });
        };
        let (l, r) = (Monomial::new(split(l, n + 1)?), Monomial::new(split(r, n + 1)?));
        let fresh = !matches!(records.last(), Some(last) if last.left == l && last.right == r);
        if fresh {
            records.push(TableRecord {
                result: Polynomial::zero(l.dim()),
                left: l,
                right: r,
            });
        }
        if coeff.is_empty() {
            continue;
        }
        let rec = TermRecord {
            coeff: coeff.to_string(),
            mono: split(mono, n + 1)?,
        };
        let last = records.last_mut().unwrap();
        let term = Polynomial::from_records(last.left.dim(), &[rec])?;
        last.result.add_scaled(&crate::poly::rational(1), &term)?;
    }
    Ok(records)
}
