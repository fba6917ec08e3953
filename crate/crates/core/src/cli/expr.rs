//! Surface syntax for elements of the enveloping algebra.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := rational ['*'] factor* | factor+
//! factor := 'x' INT ['^' INT]
//! ```
//!
//! Factors are separated by `*` or whitespace and multiply left to right
//! without reordering, so `x3 x2` and `x2 x3` are different elements.

use std::fmt;

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::oracle::{straighten_sum, Strategy};
use crate::poly::{parse_rational, Polynomial, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExprTerm {
    pub coeff: Rational,
    /// `(generator, exponent)` in written order.
    pub factors: Vec<(usize, u32)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExprAst {
    pub terms: Vec<ExprTerm>,
}

impl ExprAst {
    /// The letters of each term, expanded, with its coefficient.
    pub fn words(&self) -> Vec<(Vec<usize>, Rational)> {
        self.terms
            .iter()
            .map(|t| {
                let word = t
                    .factors
                    .iter()
                    .flat_map(|&(g, e)| std::iter::repeat(g).take(e as usize))
                    .collect();
                (word, t.coeff.clone())
            })
            .collect()
    }

    /// PBW normal form of the expression.
    pub fn normalize(&self, alg: &LieAlgebra) -> Result<Polynomial> {
        straighten_sum(alg, self.words(), Strategy::Leftmost)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    dim: usize,
}

impl Parser<'_> {
    fn err<T>(&self, at: usize, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            offset: at,
            message: message.into(),
        })
    }

    fn peek(&self) -> Option<u8> {
        self.src.as_bytes().get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b) if b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn digits(&mut self) -> Option<&str> {
        let start = self.pos;
        while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }

    fn integer(&mut self, what: &str) -> Result<u64> {
        let at = self.pos;
        let Some(d) = self.digits().map(str::to_owned) else {
            return self.err(at, format!("expected {what}"));
        };
        d.parse()
            .or_else(|_| self.err(at, format!("{what} `{d}` is too large")))
    }

    fn rational(&mut self) -> Result<Rational> {
        let at = self.pos;
        let num = self.digits().unwrap_or_default().to_string();
        let mut text = num;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            match self.digits() {
                Some(d) => {
                    text.push('/');
                    text.push_str(d);
                }
                None => return self.err(self.pos, "expected denominator"),
            }
        }
        parse_rational(&text).or_else(|_| self.err(at, format!("bad coefficient `{text}`")))
    }

    fn factor(&mut self) -> Result<(usize, u32)> {
        let at = self.pos;
        if self.peek() != Some(b'x') {
            return self.err(at, "expected generator `x<index>`");
        }
        self.pos += 1;
        let idx_at = self.pos;
        let idx = self.integer("generator index")? as usize;
        if idx == 0 || idx > self.dim {
            return self.err(
                idx_at,
                format!("generator x{idx} out of range x1..x{}", self.dim),
            );
        }
        let mut exp = 1;
        self.skip_ws();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e_at = self.pos;
            exp = u32::try_from(self.integer("exponent")?)
                .or_else(|_| self.err(e_at, "exponent too large"))?;
        }
        Ok((idx, exp))
    }

    fn term(&mut self, sign: bool) -> Result<ExprTerm> {
        self.skip_ws();
        let mut coeff = Rational::one();
        let mut factors = Vec::new();
        if matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            coeff = self.rational()?;
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                self.skip_ws();
                if self.peek() != Some(b'x') {
                    return self.err(self.pos, "expected generator after `*`");
                }
            }
        } else if self.peek() != Some(b'x') {
            return self.err(self.pos, "expected coefficient or generator");
        }
        while self.peek() == Some(b'x') {
            factors.push(self.factor()?);
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                self.skip_ws();
                if self.peek() != Some(b'x') {
                    return self.err(self.pos, "expected generator after `*`");
                }
            }
        }
        if sign {
            coeff = -coeff;
        }
        Ok(ExprTerm { coeff, factors })
    }

    fn expr(&mut self) -> Result<ExprAst> {
        self.skip_ws();
        let mut neg = false;
        match self.peek() {
            Some(b'-') => {
                neg = true;
                self.pos += 1;
            }
            Some(b'+') => self.pos += 1,
            None => return self.err(self.pos, "empty expression"),
            _ => {}
        }
        let mut terms = vec![self.term(neg)?];
        loop {
            self.skip_ws();
            match self.peek() {
                None => break,
                Some(b'+') => {
                    self.pos += 1;
                    terms.push(self.term(false)?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    terms.push(self.term(true)?);
                }
                Some(b) => {
                    return self.err(self.pos, format!("unexpected `{}`", b as char));
                }
            }
        }
        Ok(ExprAst { terms })
    }
}

/// Parses `text` for an algebra of dimension `dim`. Errors carry the byte
/// offset of the problem.
pub fn parse_expr(text: &str, dim: usize) -> Result<ExprAst> {
    Parser {
        src: text,
        pos: 0,
        dim,
    }
    .expr()
}

impl fmt::Display for ExprTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let abs = self.coeff.abs();
        let mut parts = Vec::new();
        if !abs.is_one() || self.factors.is_empty() {
            parts.push(abs.to_string());
        }
        for &(g, e) in &self.factors {
            parts.push(if e == 1 { format!("x{g}") } else { format!("x{g}^{e}") });
        }
        f.write_str(&parts.join("*"))
    }
}

impl fmt::Display for ExprAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, t) in self.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            match (n, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            write!(f, "{t}")?;
        }
        if self.terms.is_empty() {
            f.write_str("0")?;
        }
        Ok(())
    }
}
