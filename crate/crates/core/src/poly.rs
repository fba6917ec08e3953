//! Sparse polynomials over the ordered PBW basis with exact rational
//! coefficients.
//!
//! A [`Monomial`] is a dense exponent vector: `exps[i]` is the power of
//! generator `x_{i+1}`, so the monomial always denotes the ordered product
//! `x_1^{e_1} x_2^{e_2} ... x_n^{e_n}`. A [`Polynomial`] maps monomials to
//! nonzero coefficients. Nothing here multiplies polynomials; the
//! noncommutative product lives in [`crate::oracle`] and
//! [`crate::closed_form`].

use std::cmp::Ordering;
use std::collections::btree_map::{self, BTreeMap, Entry};
use std::fmt;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact rational coefficient. Always kept in lowest terms with a positive
/// denominator by `num-rational`.
pub type Rational = BigRational;

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"` or `"p"` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::BadRational(s.to_string());
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// An ordered PBW monomial `x_1^{e_1} ... x_n^{e_n}`.
///
/// Ordering is graded lexicographic: total degree first, then the exponent
/// vectors compared lexicographically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(dim: usize) -> Self {
        Monomial(vec![0; dim])
    }

    /// The single generator `x_index` (1-based).
    pub fn generator(dim: usize, index: usize) -> Self {
        let mut exps = vec![0; dim];
        exps[index - 1] = 1;
        Monomial(exps)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    /// Exponent of `x_index` (1-based).
    pub fn exp(&self, index: usize) -> u32 {
        self.0[index - 1]
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Exponent-wise sum, the leading term of a product under the PBW
    /// filtration.
    pub fn mul_commutative(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.dim(), other.dim());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// The generator letters of this monomial in PBW order, 1-based.
    pub fn letters(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &e)| std::iter::repeat(i + 1).take(e as usize))
    }

    /// All monomials in `dim` variables of total degree at most `max_degree`,
    /// in ascending graded-lex order.
    pub fn enumerate(dim: usize, max_degree: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        for degree in 0..=max_degree {
            let mut exps = vec![0; dim];
            compositions(&mut exps, 0, degree, &mut out);
        }
        // compositions() yields each degree in descending lex order
        out.sort();
        out
    }
}

fn compositions(exps: &mut [u32], pos: usize, remaining: u32, out: &mut Vec<Monomial>) {
    if pos + 1 >= exps.len() {
        if let Some(last) = exps.last_mut() {
            *last = remaining;
            out.push(Monomial(exps.to_vec()));
        } else if remaining == 0 {
            out.push(Monomial(Vec::new()));
        }
        return;
    }
    for e in (0..=remaining).rev() {
        exps[pos] = e;
        compositions(exps, pos + 1, remaining - e, out);
    }
    exps[pos] = 0;
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// A canonical linear combination of PBW monomials.
///
/// Zero coefficients are never stored, so structural equality is equality
/// of polynomials.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    dim: usize,
    terms: BTreeMap<Monomial, Rational>,
}

/// One serialized term: `{"coeff": "p/q", "mono": [e1, ..., en]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub coeff: String,
    pub mono: Vec<u32>,
}

impl Polynomial {
    pub fn zero(dim: usize) -> Self {
        Polynomial {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(dim: usize) -> Self {
        Self::from_monomial(Monomial::one(dim))
    }

    pub fn from_monomial(m: Monomial) -> Self {
        Self::term(Rational::one(), m)
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut p = Self::zero(m.dim());
        p.add_term(m, c);
        p
    }

    /// The degree-1 polynomial `sum c_i x_i` from `(index, coeff)` pairs.
    pub fn linear(dim: usize, coeffs: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        let mut p = Self::zero(dim);
        for (i, c) in coeffs {
            p.add_term(Monomial::generator(dim, i), c);
        }
        p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&Rational> {
        self.terms.get(m)
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> btree_map::Iter<'_, Monomial, Rational> {
        self.terms.iter()
    }

    /// Terms in display order: leading (highest graded-lex) term first.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, Rational> {
        self.terms
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    /// Adds `c * m` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        debug_assert_eq!(m.dim(), self.dim);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &Rational, other: &Polynomial) -> Result<()> {
        self.check_dim(other.dim)?;
        if c.is_zero() {
            return Ok(());
        }
        for (m, d) in &other.terms {
            self.add_term(m.clone(), c * d);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        let mut out = self.clone();
        out.add_scaled(&Rational::one(), other)?;
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        let mut out = self.clone();
        out.add_scaled(&-Rational::one(), other)?;
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.dim);
        }
        Polynomial {
            dim: self.dim,
            terms: self.terms.iter().map(|(m, d)| (m.clone(), c * d)).collect(),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn to_records(&self) -> Vec<TermRecord> {
        self.terms_desc()
            .map(|(m, c)| TermRecord {
                coeff: c.to_string(),
                mono: m.exps().to_vec(),
            })
            .collect()
    }

    pub fn from_records(dim: usize, records: &[TermRecord]) -> Result<Polynomial> {
        let mut p = Polynomial::zero(dim);
        for r in records {
            if r.mono.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: r.mono.len(),
                });
            }
            p.add_term(Monomial::new(r.mono.clone()), parse_rational(&r.coeff)?);
        }
        Ok(p)
    }

    fn check_dim(&self, other: usize) -> Result<()> {
        if self.dim != other {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other,
            });
        }
        Ok(())
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            dim: self.dim,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms_desc().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({self})", self.dim)
    }
}
