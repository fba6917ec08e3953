//! Products computed by chaining the straightening lemmas.
//!
//! A word is split into runs of equal letters. The leftmost out-of-order pair
//! of adjacent runs `x_a^t x_b^u` (`a > b`) is replaced in one step: swapped
//! outright when the generators commute, otherwise expanded by whichever
//! lemma the brackets of `x_a, x_b` satisfy. This mirrors the structure of the
//! hand proofs and is independent of the per-algebra multi-sums.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use super::lemmas::Lemma;
use super::roles::{apply_roles, infer_binding, RoleBinding};
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::poly::{Monomial, Polynomial, Rational};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Key {
    len: usize,
    inversions: usize,
    letters: Vec<u16>,
}

impl Key {
    fn new(letters: Vec<u16>) -> Self {
        let mut inversions = 0;
        for (p, x) in letters.iter().enumerate() {
            inversions += letters[p + 1..].iter().filter(|y| x > y).count();
        }
        Key {
            len: letters.len(),
            inversions,
            letters,
        }
    }
}

/// Run boundaries of the first pair of adjacent runs out of order:
/// `(start of left run, start of right run, end of right run)`.
fn first_unordered_runs(letters: &[u16]) -> Option<(usize, usize, usize)> {
    let mut start = 0;
    while start < letters.len() {
        let mid = run_end(letters, start);
        if mid < letters.len() && letters[start] > letters[mid] {
            return Some((start, mid, run_end(letters, mid)));
        }
        start = mid;
    }
    None
}

fn run_end(letters: &[u16], start: usize) -> usize {
    let x = letters[start];
    start + letters[start..].iter().take_while(|&&y| y == x).count()
}

struct Composer<'a> {
    alg: &'a LieAlgebra,
    bindings: HashMap<(usize, usize), Option<RoleBinding<'a>>>,
    expansions: HashMap<(usize, usize, u32, u32), Vec<(Vec<u16>, Rational)>>,
}

impl<'a> Composer<'a> {
    /// `x_a^t x_b^u` in PBW order, as ordered letter blocks.
    fn expand(&mut self, a: usize, b: usize, t: u32, u: u32) -> Result<&[(Vec<u16>, Rational)]> {
        let alg = self.alg;
        if !self.expansions.contains_key(&(a, b, t, u)) {
            let binding = self
                .bindings
                .entry((a, b))
                .or_insert_with(|| infer_binding(alg, a, b))
                .as_ref()
                .ok_or_else(|| {
                    Error::Unsupported(format!(
                        "{}: no straightening lemma applies to x{a}, x{b}",
                        alg.name()
                    ))
                })?;
            let poly = apply_roles(binding, &binding.lemma().terms(t, u))?;
            let blocks = poly
                .into_terms()
                .into_iter()
                .map(|(m, c)| (m.letters().map(|g| g as u16).collect(), c))
                .collect();
            self.expansions.insert((a, b, t, u), blocks);
        }
        Ok(&self.expansions[&(a, b, t, u)])
    }
}

/// Which lemma straightens `x_a^t x_b^u` for `a > b`, or `None` when the
/// generators commute.
pub fn lemma_for(alg: &LieAlgebra, a: usize, b: usize) -> Result<Option<Lemma>> {
    if alg.bracket_form(a, b).is_empty() {
        return Ok(None);
    }
    infer_binding(alg, a, b)
        .map(|binding| Some(binding.lemma()))
        .ok_or_else(|| {
            Error::Unsupported(format!(
                "{}: no straightening lemma applies to x{a}, x{b}",
                alg.name()
            ))
        })
}

/// `left * right` by repeated lemma application.
pub fn compose_product(alg: &LieAlgebra, left: &Monomial, right: &Monomial) -> Result<Polynomial> {
    for m in [left, right] {
        if m.dim() != alg.dim() {
            return Err(Error::DimensionMismatch {
                expected: alg.dim(),
                found: m.dim(),
            });
        }
    }
    let mut composer = Composer {
        alg,
        bindings: HashMap::new(),
        expansions: HashMap::new(),
    };
    let word: Vec<u16> = left.letters().chain(right.letters()).map(|g| g as u16).collect();
    let mut pending: BTreeMap<Key, Rational> = BTreeMap::new();
    pending.insert(Key::new(word), Rational::from_integer(1.into()));

    let mut out = Polynomial::zero(alg.dim());
    while let Some((key, coeff)) = pending.pop_last() {
        if coeff.is_zero() {
            continue;
        }
        let letters = key.letters;
        let Some((s, mid, e)) = first_unordered_runs(&letters) else {
            let mut exps = vec![0u32; alg.dim()];
            for &g in &letters {
                exps[g as usize - 1] += 1;
            }
            out.add_term(Monomial::new(exps), coeff);
            continue;
        };
        let (a, b) = (letters[s] as usize, letters[mid] as usize);
        let (t, u) = ((mid - s) as u32, (e - mid) as u32);

        let mut push = |middle: &[u16], c: Rational| {
            let mut w = Vec::with_capacity(letters.len());
            w.extend_from_slice(&letters[..s]);
            w.extend_from_slice(middle);
            w.extend_from_slice(&letters[e..]);
            *pending.entry(Key::new(w)).or_insert_with(Rational::zero) += c;
        };
        if alg.bracket_form(a, b).is_empty() {
            let mut middle = letters[mid..e].to_vec();
            middle.extend_from_slice(&letters[s..mid]);
            push(&middle, coeff);
        } else {
            for (block, c) in composer.expand(a, b, t, u)? {
                push(block, &coeff * c);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{builtin, CATALOG};
    use crate::oracle::oracle_product;

    #[test]
    fn runs() {
        assert_eq!(first_unordered_runs(&[1, 2, 2, 3]), None);
        assert_eq!(first_unordered_runs(&[1, 3, 3, 2, 2, 2, 1]), Some((1, 3, 6)));
        assert_eq!(first_unordered_runs(&[]), None);
    }

    #[test]
    fn matches_oracle_on_small_grid() {
        for name in CATALOG {
            let alg = builtin(name).unwrap();
            let monos = Monomial::enumerate(alg.dim(), 2);
            for l in &monos {
                for r in &monos {
                    assert_eq!(
                        compose_product(&alg, l, r).unwrap(),
                        oracle_product(&alg, l, r).unwrap(),
                        "{name} {l} * {r}"
                    );
                }
            }
        }
    }

    #[test]
    fn lemma_choice_follows_brackets() {
        let n56 = builtin("n5_6").unwrap();
        assert_eq!(lemma_for(&n56, 5, 4).unwrap(), Some(Lemma::ChainBc));
        assert_eq!(lemma_for(&n56, 5, 3).unwrap(), Some(Lemma::Acd));
        assert_eq!(lemma_for(&n56, 5, 2).unwrap(), Some(Lemma::Cpr));
        assert_eq!(lemma_for(&n56, 4, 2).unwrap(), None);
    }
}
