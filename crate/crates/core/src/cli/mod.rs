//! The `uea` command line.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 validation failure,
//! 3 engine mismatch.

pub mod expr;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};

pub use expr::{parse_expr, ExprAst, ExprTerm};

use crate::closed_form::{self, AlgebraId};
use crate::error::{Error, Result};
use crate::lie::{builtin, engel_check, lower_central_series, validate, LieAlgebra, LieAlgebraSpec};
use crate::oracle::oracle_multiply;
use crate::poly::Polynomial;
use crate::table::{export, generate_table, Engine, Format, TableSource};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "uea", version, about = "Exact products in enveloping algebras of nilpotent Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ProductEngine {
    Closed,
    Oracle,
    Both,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableEngine {
    #[value(name = "closed_form", alias = "closed")]
    ClosedForm,
    Oracle,
    #[value(name = "cross_checked", alias = "both")]
    CrossChecked,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutFormat {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Multiply two expressions and print the PBW normal form.
    Product {
        /// Catalog name (n3_1 ... n5_6, abelian_k) or path to a spec JSON file.
        #[arg(long)]
        algebra: String,
        #[arg(long, allow_hyphen_values = true)]
        left: String,
        #[arg(long, allow_hyphen_values = true)]
        right: String,
        #[arg(long, value_enum, default_value = "closed")]
        engine: ProductEngine,
    },
    /// Straighten a single expression with the rewriting engine.
    Oracle {
        #[arg(long)]
        algebra: String,
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
    },
    /// Write the table of all monomial products up to a degree.
    Table {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        max_degree: u32,
        #[arg(long, value_enum, default_value = "closed_form")]
        engine: TableEngine,
        #[arg(long, value_enum, default_value = "json")]
        format: OutFormat,
        /// Output path, `-` for standard output.
        #[arg(long, default_value = "-")]
        out: PathBuf,
    },
    /// Check a spec file for the Lie algebra axioms and report nilpotency.
    Validate {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Time both engines over the full pair grid.
    Bench {
        #[arg(long)]
        algebra: String,
        #[arg(long, default_value_t = 3)]
        max_degree: u32,
        /// Timed passes per engine; the fastest is reported.
        #[arg(long, default_value_t = 5)]
        reps: usize,
    },
    /// Print a catalog algebra as spec JSON.
    Spec {
        #[arg(long)]
        algebra: String,
    },
}

/// Runs the CLI on `args` (including the program name), writing normal
/// output to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

enum Algebra {
    Catalog(AlgebraId, LieAlgebra),
    Other(LieAlgebra),
}

impl Algebra {
    fn lie(&self) -> &LieAlgebra {
        match self {
            Algebra::Catalog(_, a) | Algebra::Other(a) => a,
        }
    }
}

fn load_spec(path: &Path) -> Result<LieAlgebraSpec> {
    LieAlgebraSpec::from_json(&std::fs::read_to_string(path)?)
}

fn resolve(name: &str) -> Result<Algebra> {
    if let Ok(id) = name.parse::<AlgebraId>() {
        return Ok(Algebra::Catalog(id, id.algebra()));
    }
    match builtin(name) {
        Ok(alg) => Ok(Algebra::Other(alg)),
        Err(e) if !Path::new(name).exists() => Err(e),
        Err(_) => Ok(Algebra::Other(LieAlgebra::new(load_spec(Path::new(name))?)?)),
    }
}

fn closed_multiply(id: AlgebraId, p: &Polynomial, q: &Polynomial) -> Result<Polynomial> {
    let mut acc = Polynomial::zero(id.dim());
    for (a, ca) in p.terms() {
        for (b, cb) in q.terms() {
            acc.add_scaled(&(ca * cb), &closed_form::product(id, a, b)?)?;
        }
    }
    Ok(acc)
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Product {
            algebra,
            left,
            right,
            engine,
        } => {
            let alg = resolve(&algebra)?;
            let lie = alg.lie();
            let l = parse_expr(&left, lie.dim())?.normalize(lie)?;
            let r = parse_expr(&right, lie.dim())?.normalize(lie)?;
            let closed = |alg: &Algebra| match alg {
                Algebra::Catalog(id, _) => closed_multiply(*id, &l, &r),
                Algebra::Other(a) => Err(Error::Unsupported(a.name().to_string())),
            };
            match engine {
                ProductEngine::Closed => writeln!(out, "{}", closed(&alg)?)?,
                ProductEngine::Oracle => writeln!(out, "{}", oracle_multiply(lie, &l, &r)?)?,
                ProductEngine::Both => {
                    let c = closed(&alg)?;
                    let o = oracle_multiply(lie, &l, &r)?;
                    writeln!(out, "{c}")?;
                    if c != o {
                        writeln!(out, "MISMATCH (oracle: {o})")?;
                        return Ok(EXIT_MISMATCH);
                    }
                    writeln!(out, "MATCH")?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Oracle { algebra, expr } => {
            let alg = resolve(&algebra)?;
            let lie = alg.lie();
            writeln!(out, "{}", parse_expr(&expr, lie.dim())?.normalize(lie)?)?;
            Ok(EXIT_OK)
        }
        Command::Table {
            algebra,
            max_degree,
            engine,
            format,
            out: path,
        } => {
            let source = match resolve(&algebra)? {
                Algebra::Catalog(id, _) => TableSource::Catalog(id),
                Algebra::Other(a) => TableSource::Custom(a),
            };
            let engine = match engine {
                TableEngine::ClosedForm => Engine::ClosedForm,
                TableEngine::Oracle => Engine::Oracle,
                TableEngine::CrossChecked => Engine::CrossChecked,
            };
            let format = match format {
                OutFormat::Json => Format::Json,
                OutFormat::Csv => Format::Csv,
            };
            let (manifest, records) = match generate_table(&source, max_degree, engine) {
                Err(e @ Error::Divergence { .. }) => {
                    writeln!(out, "{e}")?;
                    return Ok(EXIT_MISMATCH);
                }
                other => other?,
            };
            let bytes = export(&manifest, &records, format)?;
            if path.as_os_str() == "-" {
                out.write_all(&bytes)?;
            } else {
                std::fs::write(&path, bytes)?;
            }
            Ok(EXIT_OK)
        }
        Command::Validate { spec } => {
            let spec = load_spec(&spec)?;
            let report = validate(&spec);
            writeln!(out, "{}: {report}", spec.name)?;
            if !report.ok {
                return Ok(EXIT_INVALID);
            }
            let alg = LieAlgebra::new(spec)?;
            let profile = lower_central_series(&alg);
            writeln!(out, "lower central series dims: {:?}", profile.series_dims)?;
            match profile.class {
                Some(c) => writeln!(out, "nilpotent of class {c}")?,
                None => writeln!(out, "not nilpotent")?,
            }
            match engel_check(&alg) {
                Ok(idx) => {
                    let parts: Vec<String> = idx.iter().map(|(g, k)| format!("x{g}:{k}")).collect();
                    writeln!(out, "ad-nilpotency indices: {}", parts.join(" "))?;
                }
                Err(e) => writeln!(out, "{e}")?,
            }
            Ok(EXIT_OK)
        }
        Command::Bench {
            algebra,
            max_degree,
            reps,
        } => {
            let id: AlgebraId = algebra.parse()?;
            let r = bench(id, max_degree, reps)?;
            writeln!(out, "{r}")?;
            Ok(EXIT_OK)
        }
        Command::Spec { algebra } => {
            let alg = resolve(&algebra)?;
            writeln!(out, "{}", alg.lie().spec().to_json())?;
            Ok(EXIT_OK)
        }
    }
}

/// Wall-clock timing of both engines over every monomial pair up to a degree.
#[derive(Clone, Debug)]
pub struct BenchReport {
    pub algebra: AlgebraId,
    pub max_degree: u32,
    pub pairs: usize,
    pub closed: Duration,
    pub oracle: Duration,
}

impl BenchReport {
    pub fn speedup(&self) -> f64 {
        self.oracle.as_secs_f64() / self.closed.as_secs_f64().max(1e-9)
    }
}

impl std::fmt::Display for BenchReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "algebra {} degree <= {}: {} pairs", self.algebra, self.max_degree, self.pairs)?;
        writeln!(f, "closed form: {:.3} ms", self.closed.as_secs_f64() * 1e3)?;
        writeln!(f, "oracle:      {:.3} ms", self.oracle.as_secs_f64() * 1e3)?;
        write!(f, "speedup:     {:.1}x", self.speedup())
    }
}

/// Best of `reps` single-threaded passes per engine; the oracle results are
/// compared against the closed form outside the timed region.
pub fn bench(id: AlgebraId, max_degree: u32, reps: usize) -> Result<BenchReport> {
    let alg = id.algebra();
    let monos = crate::poly::Monomial::enumerate(id.dim(), max_degree);
    let pairs: Vec<_> = monos
        .iter()
        .flat_map(|l| monos.iter().map(move |r| (l, r)))
        .collect();

    let mut closed = Duration::MAX;
    let mut oracle = Duration::MAX;
    let mut closed_results = Vec::new();
    let mut oracle_results = Vec::new();
    for _ in 0..reps.max(1) {
        drop(std::mem::take(&mut closed_results));
        drop(std::mem::take(&mut oracle_results));
        let start = Instant::now();
        closed_results = pairs
            .iter()
            .map(|(l, r)| closed_form::product(id, l, r))
            .collect::<Result<Vec<_>>>()?;
        closed = closed.min(start.elapsed());

        let start = Instant::now();
        oracle_results = pairs
            .iter()
            .map(|(l, r)| crate::oracle::oracle_product(&alg, l, r))
            .collect::<Result<Vec<_>>>()?;
        oracle = oracle.min(start.elapsed());
    }
    for ((l, r), (c, o)) in pairs.iter().zip(closed_results.into_iter().zip(oracle_results)) {
        if c != o {
            return Err(Error::Divergence {
                left: (*l).clone(),
                right: (*r).clone(),
                closed: c,
                oracle: o,
            });
        }
    }
    Ok(BenchReport {
        algebra: id,
        max_degree,
        pairs: pairs.len(),
        closed,
        oracle,
    })
}
