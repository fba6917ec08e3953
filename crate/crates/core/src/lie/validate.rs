use std::collections::BTreeSet;
use std::fmt;

use num_traits::Zero;

use super::{dense_table, LieAlgebraSpec, LinearForm};
use crate::poly::{Polynomial, Rational};

#[derive(Clone, Debug, PartialEq)]
pub enum Violation {
    /// Nonzero `[x_i,[x_j,x_k]] + [x_j,[x_k,x_i]] + [x_k,[x_i,x_j]]`.
    Jacobi {
        triple: (usize, usize, usize),
        residual: Polynomial,
    },
    Shape(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn jacobi_violations(&self) -> impl Iterator<Item = (&(usize, usize, usize), &Polynomial)> {
        self.violations.iter().filter_map(|v| match v {
            Violation::Jacobi { triple, residual } => Some((triple, residual)),
            Violation::Shape(_) => None,
        })
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Jacobi {
                triple: (i, j, k),
                residual,
            } => write!(f, "Jacobi fails on (x{i}, x{j}, x{k}): residual {residual}"),
            Violation::Shape(msg) => f.write_str(msg),
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok {
            return f.write_str("ok");
        }
        write!(f, "{} violation(s)", self.violations.len())?;
        for v in &self.violations {
            write!(f, "\n  {v}")?;
        }
        Ok(())
    }
}

/// Checks table shape and the Jacobi identity on every basis triple.
/// Never fails; problems are collected in the report.
pub fn validate(spec: &LieAlgebraSpec) -> ValidationReport {
    let n = spec.dim;
    let mut violations = Vec::new();
    if n == 0 {
        violations.push(Violation::Shape("dimension must be at least 1".into()));
    }

    let mut seen = BTreeSet::new();
    for e in &spec.brackets.entries {
        let (i, j) = (e.i, e.j);
        if i <= j {
            violations.push(Violation::Shape(format!(
                "illegal key ({i}, {j}): stored brackets need i > j"
            )));
        }
        if i == 0 || i > n || j == 0 || j > n {
            violations.push(Violation::Shape(format!(
                "key ({i}, {j}) out of range 1..={n}"
            )));
        }
        if !seen.insert((i, j)) {
            violations.push(Violation::Shape(format!("duplicate key ({i}, {j})")));
        }
        for (g, _) in &e.value {
            if *g == 0 || *g > n {
                violations.push(Violation::Shape(format!(
                    "bracket ({i}, {j}) uses generator x{g} out of range 1..={n}"
                )));
            }
        }
    }

    let table = dense_table(spec);
    let br = |u: &LinearForm, v: &LinearForm| -> Vec<Rational> {
        let mut acc = vec![Rational::zero(); n];
        for (a, ca) in u {
            for (b, cb) in v {
                for (k, ck) in &table[a - 1][b - 1] {
                    acc[k - 1] += ca * cb * ck;
                }
            }
        }
        acc
    };
    let unit = |i: usize| -> LinearForm { vec![(i, Rational::from_integer(1.into()))] };

    // bilinearity reduces the identity to basis triples, and the cyclic sum
    // is alternating, so distinct triples in one order suffice
    for i in (1..=n).rev() {
        for j in (1..i).rev() {
            for k in (1..j).rev() {
                let (xi, xj, xk) = (unit(i), unit(j), unit(k));
                let mut residual = vec![Rational::zero(); n];
                for (p, q, r) in [(&xi, &xj, &xk), (&xj, &xk, &xi), (&xk, &xi, &xj)] {
                    let inner = &table[q[0].0 - 1][r[0].0 - 1];
                    for (g, c) in br(p, inner).into_iter().enumerate() {
                        residual[g] += c;
                    }
                }
                if residual.iter().any(|c| !c.is_zero()) {
                    violations.push(Violation::Jacobi {
                        triple: (i, j, k),
                        residual: Polynomial::linear(n, super::sparse(residual)),
                    });
                }
            }
        }
    }

    ValidationReport {
        ok: violations.is_empty(),
        violations,
    }
}
