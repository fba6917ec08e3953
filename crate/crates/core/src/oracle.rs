//! PBW straightening by rewriting, driven only by the bracket table.
//!
//! A word `w = u x_i x_j v` with `i > j` is rewritten to
//! `u x_j x_i v + sum_k c_ij^k u x_k v`. Swaps keep the length and remove one
//! inversion; bracket terms shorten the word. Pending words are kept in a
//! map ordered by `(length, inversions)` and always processed largest first,
//! so every word reachable from the input is expanded exactly once, with
//! all of its contributions already merged.
//!
//! This engine is the reference against which the closed-form products are
//! checked. It works for any validated [`LieAlgebra`].

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::poly::{Monomial, Polynomial, Rational};

/// Which out-of-order adjacent pair to rewrite first. The normal form does
/// not depend on the choice.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    #[default]
    Leftmost,
    Rightmost,
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Key {
    len: usize,
    inversions: usize,
    letters: Vec<u16>,
}

impl Key {
    fn new(letters: Vec<u16>) -> Self {
        let mut inversions = 0;
        for (a, x) in letters.iter().enumerate() {
            inversions += letters[a + 1..].iter().filter(|y| x > y).count();
        }
        Key {
            len: letters.len(),
            inversions,
            letters,
        }
    }
}

fn out_of_order(letters: &[u16], strategy: Strategy) -> Option<usize> {
    let mut pairs = letters.windows(2).enumerate().filter(|(_, w)| w[0] > w[1]);
    match strategy {
        Strategy::Leftmost => pairs.next().map(|(p, _)| p),
        Strategy::Rightmost => pairs.last().map(|(p, _)| p),
    }
}

fn check_letters(alg: &LieAlgebra, word: &[usize]) -> Result<Vec<u16>> {
    word.iter()
        .map(|&g| {
            alg.check_index(g)?;
            Ok(g as u16)
        })
        .collect()
}

/// Straightens a linear combination of words into PBW normal form.
pub fn straighten_sum(
    alg: &LieAlgebra,
    words: impl IntoIterator<Item = (Vec<usize>, Rational)>,
    strategy: Strategy,
) -> Result<Polynomial> {
    let dim = alg.dim();
    let mut pending: BTreeMap<Key, Rational> = BTreeMap::new();
    for (w, c) in words {
        let key = Key::new(check_letters(alg, &w)?);
        *pending.entry(key).or_insert_with(Rational::zero) += c;
    }

    let mut out = Polynomial::zero(dim);
    while let Some((key, coeff)) = pending.pop_last() {
        if coeff.is_zero() {
            continue;
        }
        let letters = key.letters;
        let Some(p) = out_of_order(&letters, strategy) else {
            let mut exps = vec![0u32; dim];
            for &g in &letters {
                exps[g as usize - 1] += 1;
            }
            out.add_term(Monomial::new(exps), coeff);
            continue;
        };

        let (i, j) = (letters[p] as usize, letters[p + 1] as usize);
        let mut swapped = letters.clone();
        swapped.swap(p, p + 1);
        *pending.entry(Key::new(swapped)).or_insert_with(Rational::zero) += &coeff;

        for (k, c) in alg.bracket_form(i, j) {
            let mut shorter = Vec::with_capacity(letters.len() - 1);
            shorter.extend_from_slice(&letters[..p]);
            shorter.push(*k as u16);
            shorter.extend_from_slice(&letters[p + 2..]);
            *pending.entry(Key::new(shorter)).or_insert_with(Rational::zero) += &coeff * c;
        }
    }
    Ok(out)
}

/// PBW normal form of the product of generators `word` (1-based letters,
/// empty word is the unit).
pub fn straighten_word(alg: &LieAlgebra, word: &[usize]) -> Result<Polynomial> {
    straighten_word_with(alg, word, Strategy::Leftmost)
}

pub fn straighten_word_with(
    alg: &LieAlgebra,
    word: &[usize],
    strategy: Strategy,
) -> Result<Polynomial> {
    straighten_sum(alg, [(word.to_vec(), Rational::one())], strategy)
}

/// Structure constants of `left * right` for PBW monomials.
pub fn oracle_product(alg: &LieAlgebra, left: &Monomial, right: &Monomial) -> Result<Polynomial> {
    for m in [left, right] {
        if m.dim() != alg.dim() {
            return Err(Error::DimensionMismatch {
                expected: alg.dim(),
                found: m.dim(),
            });
        }
    }
    let word: Vec<usize> = left.letters().chain(right.letters()).collect();
    straighten_word(alg, &word)
}

/// Bilinear extension of [`oracle_product`].
pub fn oracle_multiply(alg: &LieAlgebra, p: &Polynomial, q: &Polynomial) -> Result<Polynomial> {
    let mut out = Polynomial::zero(alg.dim());
    for (a, ca) in p.terms() {
        for (b, cb) in q.terms() {
            out.add_scaled(&(ca * cb), &oracle_product(alg, a, b)?)?;
        }
    }
    Ok(out)
}
