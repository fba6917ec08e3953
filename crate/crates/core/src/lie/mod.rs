//! Lie algebra specifications given by a bracket table on an ordered basis
//! `x_1, ..., x_n`.
//!
//! A [`LieAlgebraSpec`] is the raw, possibly malformed description as read
//! from JSON or built by hand. [`validate`] checks it; a spec that passes
//! becomes an immutable [`LieAlgebra`], which is what every product engine
//! consumes. Generator indices are 1-based throughout.

mod catalog;
mod json;
mod nilpotency;
mod validate;

pub use catalog::{builtin, catalog_names, CATALOG};
pub use json::{SpecJson, TermJson, BracketJson};
pub use nilpotency::{engel_check, lower_central_series, NilpotencyProfile};
pub use validate::{validate, ValidationReport, Violation};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Rational};

/// A linear combination `sum c * x_gen` of generators.
pub type LinearForm = Vec<(usize, Rational)>;

/// One stored bracket `[x_i, x_j] = value`. Well-formed tables only carry
/// entries with `i > j`; the opposite order is implied by skew-symmetry.
#[derive(Clone, Debug, PartialEq)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub value: LinearForm,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct BracketTable {
    pub entries: Vec<BracketEntry>,
}

impl BracketTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, i: usize, j: usize, value: LinearForm) -> Self {
        self.entries.push(BracketEntry { i, j, value });
        self
    }

    pub fn set(&mut self, i: usize, j: usize, value: LinearForm) {
        match self.entries.iter_mut().find(|e| e.i == i && e.j == j) {
            Some(e) => e.value = value,
            None => self.entries.push(BracketEntry { i, j, value }),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&LinearForm> {
        self.entries
            .iter()
            .find(|e| e.i == i && e.j == j)
            .map(|e| &e.value)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebraSpec {
    pub name: String,
    pub dim: usize,
    pub brackets: BracketTable,
}

impl LieAlgebraSpec {
    pub fn new(name: impl Into<String>, dim: usize, brackets: BracketTable) -> Self {
        LieAlgebraSpec {
            name: name.into(),
            dim,
            brackets,
        }
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

/// A validated Lie algebra with a dense, skew-symmetric bracket table.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    spec: LieAlgebraSpec,
    // table[i][j] = [x_{i+1}, x_{j+1}], zero coefficients dropped
    table: Vec<Vec<LinearForm>>,
}

impl LieAlgebra {
    pub fn new(spec: LieAlgebraSpec) -> Result<Self> {
        let report = validate(&spec);
        if !report.ok {
            return Err(Error::InvalidSpec(report.to_string()));
        }
        let table = dense_table(&spec);
        Ok(LieAlgebra { spec, table })
    }

    pub fn name(&self) -> &str {
        &self.spec.name
    }

    pub fn dim(&self) -> usize {
        self.spec.dim
    }

    pub fn spec(&self) -> &LieAlgebraSpec {
        &self.spec
    }

    /// `[x_i, x_j]` as a degree-1 polynomial.
    pub fn bracket(&self, i: usize, j: usize) -> Result<Polynomial> {
        self.check_index(i)?;
        self.check_index(j)?;
        Ok(Polynomial::linear(
            self.dim(),
            self.bracket_form(i, j).iter().cloned(),
        ))
    }

    /// Sparse `[x_i, x_j]` without range checks; indices must be valid.
    pub fn bracket_form(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.table[i - 1][j - 1]
    }

    /// `[u, v]` for linear forms, expanded bilinearly.
    pub fn bracket_forms(&self, u: &[(usize, Rational)], v: &[(usize, Rational)]) -> LinearForm {
        let mut acc = vec![Rational::zero(); self.dim()];
        for (i, a) in u {
            for (j, b) in v {
                for (k, c) in self.bracket_form(*i, *j) {
                    acc[k - 1] += a * b * c;
                }
            }
        }
        sparse(acc)
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().flatten().all(|f| f.is_empty())
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.dim() {
            return Err(Error::IndexOutOfRange {
                index: i,
                dim: self.dim(),
            });
        }
        Ok(())
    }
}

pub(crate) fn sparse(dense: Vec<Rational>) -> LinearForm {
    dense
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k + 1, c))
        .collect()
}

/// Dense skew-symmetric table built from the well-formed entries of `spec`.
/// Malformed entries are skipped; [`validate`] reports them.
pub(crate) fn dense_table(spec: &LieAlgebraSpec) -> Vec<Vec<LinearForm>> {
    let n = spec.dim;
    let mut table = vec![vec![Vec::new(); n]; n];
    for e in &spec.brackets.entries {
        if e.i <= e.j || e.i > n || e.j == 0 {
            continue;
        }
        if e.value.iter().any(|(g, _)| *g == 0 || *g > n) {
            continue;
        }
        let mut dense = vec![Rational::zero(); n];
        for (g, c) in &e.value {
            dense[g - 1] += c;
        }
        let neg: Vec<Rational> = dense.iter().map(|c| -c).collect();
        table[e.i - 1][e.j - 1] = sparse(dense);
        table[e.j - 1][e.i - 1] = sparse(neg);
    }
    table
}
