use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{LieAlgebra, LinearForm};
use crate::error::{Error, Result};
use crate::poly::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilpotencyProfile {
    /// `dim L_1, dim L_2, ...`, ending at 0 or at the first repeated value.
    pub series_dims: Vec<usize>,
    pub nilpotent: bool,
    pub class: Option<usize>,
}

/// Integer row echelon basis, built one vector at a time by cross
/// multiplication. Each row is zero at the pivots of all earlier rows; rows
/// are kept primitive (content 1).
#[derive(Default)]
struct Echelon {
    rows: Vec<(usize, Vec<BigInt>)>,
}

impl Echelon {
    fn insert(&mut self, v: &[Rational]) -> bool {
        let lcm = v
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut w: Vec<BigInt> = v
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        for (pivot, row) in &self.rows {
            let a = w[*pivot].clone();
            if a.is_zero() {
                continue;
            }
            let p = row[*pivot].clone();
            for (x, r) in w.iter_mut().zip(row) {
                *x = &*x * &p - &a * r;
            }
        }
        let Some(pivot) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let content = w.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        let sign = if w[pivot].is_negative() { -BigInt::one() } else { BigInt::one() };
        let w: Vec<BigInt> = w.iter().map(|x| x / &content * &sign).collect();
        self.rows.push((pivot, w));
        true
    }

    fn basis(&self) -> Vec<LinearForm> {
        self.rows
            .iter()
            .map(|(_, row)| {
                row.iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(k, x)| (k + 1, Rational::from_integer(x.clone())))
                    .collect()
            })
            .collect()
    }
}

fn dense(alg: &LieAlgebra, f: &LinearForm) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); alg.dim()];
    for (k, c) in f {
        v[k - 1] += c;
    }
    v
}

/// `L_1 = L`, `L_k = [L, L_{k-1}]`, computed as spans over the rationals.
pub fn lower_central_series(alg: &LieAlgebra) -> NilpotencyProfile {
    let n = alg.dim();
    let one = Rational::one();
    let mut basis: Vec<LinearForm> = (1..=n).map(|i| vec![(i, one.clone())]).collect();
    let mut dims = vec![n];
    loop {
        let mut ech = Echelon::default();
        for i in 1..=n {
            for v in &basis {
                let b = alg.bracket_forms(&[(i, one.clone())], v);
                if !b.is_empty() {
                    ech.insert(&dense(alg, &b));
                }
            }
        }
        let next = ech.basis();
        let d = next.len();
        let prev = *dims.last().unwrap();
        dims.push(d);
        if d == 0 || d == prev {
            break;
        }
        basis = next;
    }
    let nilpotent = *dims.last().unwrap() == 0;
    NilpotencyProfile {
        class: nilpotent.then(|| dims.len() - 1),
        series_dims: dims,
        nilpotent,
    }
}

/// Least `k` with `ad(x_i)^k = 0` on every generator, per generator.
pub fn engel_check(alg: &LieAlgebra) -> Result<BTreeMap<usize, usize>> {
    let n = alg.dim();
    let one = Rational::one();
    let mut out = BTreeMap::new();
    for i in 1..=n {
        let x = vec![(i, one.clone())];
        let mut images: Vec<LinearForm> = (1..=n).map(|j| vec![(j, one.clone())]).collect();
        let mut found = None;
        for k in 1..=n.max(1) {
            images = images.iter().map(|v| alg.bracket_forms(&x, v)).collect();
            if images.iter().all(|v| v.is_empty()) {
                found = Some(k);
                break;
            }
        }
        match found {
            Some(k) => {
                out.insert(i, k);
            }
            None => return Err(Error::NotNilpotent { generator: i, bound: n }),
        }
    }
    Ok(out)
}
