//! Explicit structure constants, one multi-sum per catalog algebra.
//!
//! Left factor exponents are named `j, k, l, ...` and right factor exponents
//! continue the alphabet, so for dimension 5 the product is
//! `x1^j x2^k x3^l x4^m x5^n * x1^p x2^q x3^r x4^s x5^t`. Summation indices
//! are `alpha`, `beta*`, `gamma*`, `delta`. Each branch is written out
//! literally rather than assembled from the lemmas.

use std::collections::BTreeMap;

use super::int::{binomial as c, exact_div, factorial as f, pow, Int};
use crate::poly::{Monomial, Polynomial, Rational};

struct Acc {
    dim: usize,
    terms: BTreeMap<Vec<u32>, Int>,
}

impl Acc {
    fn new(dim: usize) -> Self {
        Acc {
            dim,
            terms: BTreeMap::new(),
        }
    }

    fn add(&mut self, coeff: Int, sign_exp: i64, exps: &[i64]) {
        debug_assert_eq!(exps.len(), self.dim);
        let exps: Vec<u32> = exps
            .iter()
            .map(|&e| u32::try_from(e).expect("negative exponent in summation region"))
            .collect();
        let coeff = if sign_exp % 2 == 0 { coeff } else { -coeff };
        *self.terms.entry(exps).or_insert(Int::Small(0)) += coeff;
    }

    fn finish(self) -> Polynomial {
        let mut p = Polynomial::zero(self.dim);
        for (e, c) in self.terms {
            if c.is_zero() {
                continue;
            }
            p.add_term(Monomial::new(e), Rational::from_integer(c.to_bigint()));
        }
        p
    }
}

fn exps<const N: usize>(m: &Monomial) -> [i64; N] {
    let mut out = [0i64; N];
    for (o, e) in out.iter_mut().zip(m.exps()) {
        *o = *e as i64;
    }
    out
}

pub(super) fn n3_1(left: &Monomial, right: &Monomial) -> Polynomial {
    let [j, k, l] = exps::<3>(left);
    let [m, n, p] = exps::<3>(right);
    let mut acc = Acc::new(3);
    for alpha in 0..=l.min(n) {
        let coeff = c(l, alpha) * c(n, alpha) * f(alpha);
        acc.add(coeff, alpha, &[j + m + alpha, k + n - alpha, l + p - alpha]);
    }
    acc.finish()
}

pub(super) fn n4_1(left: &Monomial, right: &Monomial) -> Polynomial {
    let [j, k, l, m] = exps::<4>(left);
    let [n, p, q, r] = exps::<4>(right);
    let mut acc = Acc::new(4);
    for alpha in 0..=m.min(p) {
        let ma = m - alpha;
        for b1 in 0..=q.min(ma) {
            for b2 in 0..=(q - b1).min((ma - b1) / 2) {
                let coeff = c(m, alpha)
                    * c(p, alpha)
                    * c(q, b1 + b2)
                    * c(ma, b1 + 2 * b2)
                    * c(b1 + b2, b1)
                    * f(alpha)
                    * exact_div(f(b1 + 2 * b2), &pow(2, b2));
                acc.add(
                    coeff,
                    alpha + b1,
                    &[
                        j + n + alpha + b2,
                        k + p - alpha + b1,
                        l + q - b1 - b2,
                        m + r - alpha - b1 - 2 * b2,
                    ],
                );
            }
        }
    }
    acc.finish()
}

pub(super) fn n5_1(left: &Monomial, right: &Monomial) -> Polynomial {
    let [j, k, l, m, n] = exps::<5>(left);
    let [p, q, r, s, t] = exps::<5>(right);
    let mut acc = Acc::new(5);
    for alpha in 0..=n.min(r) {
        for beta in 0..=(n - alpha).min(s) {
            let coeff = c(n, alpha)
                * c(r, alpha)
                * c(n - alpha, beta)
                * c(s, beta)
                * f(alpha)
                * f(beta);
            acc.add(
                coeff,
                alpha + beta,
                &[
                    j + p + alpha,
                    k + q + beta,
                    l + r - alpha,
                    m + s - beta,
                    n + t - alpha - beta,
                ],
            );
        }
    }
    acc.finish()
}

pub(super) fn n5_2(left: &Monomial, right: &Monomial) -> Polynomial {
    let [j, k, l, m, n] = exps::<5>(left);
    let [p, q, r, s, t] = exps::<5>(right);
    let mut acc = Acc::new(5);
    for alpha in 0..=n.min(r) {
        let na = n - alpha;
        for b1 in 0..=s.min(na) {
            for b2 in 0..=((s - b1) / 2).min(na - b1) {
                for b3 in 0..=(s - b1 - 2 * b2).min((na - b1 - b2) / 2) {
                    let from_s = b1 + 2 * b2 + b3;
                    let from_n = b1 + b2 + 2 * b3;
                    let lemma = exact_div(
                        f(from_s) * f(from_n),
                        &(pow(2, b2 + b3) * f(b3) * f(b2) * f(b1)),
                    );
                    let r2 = r - alpha + b1;
                    for gamma in 0..=m.min(r2) {
                        let coeff = c(n, alpha)
                            * c(r, alpha)
                            * c(s, from_s)
                            * c(na, from_n)
                            * c(m, gamma)
                            * c(r2, gamma)
                            * &lemma
                            * f(alpha)
                            * f(gamma);
                        acc.add(
                            coeff,
                            alpha + b1 + gamma,
                            &[
                                j + p + alpha + b3,
                                k + q + b2 + gamma,
                                l + r - alpha + b1 - gamma,
                                m + s - gamma - b1 - 2 * b2 - b3,
                                n + t - alpha - b1 - b2 - 2 * b3,
                            ],
                        );
                    }
                }
            }
        }
    }
    acc.finish()
}

pub(super) fn n5_3(left: &Monomial, right: &Monomial) -> Polynomial {
    let [j, k, l, m, n] = exps::<5>(left);
    let [p, q, r, s, t] = exps::<5>(right);
    let mut acc = Acc::new(5);
    for alpha in 0..=n.min(r) {
        for beta in 0..=m.min(q) {
            let coeff = c(n, alpha) * c(r, alpha) * c(m, beta) * c(q, beta) * f(alpha) * f(beta);
            acc.add(
                coeff,
                alpha + beta,
                &[
                    j + p + alpha + beta,
                    k + q - beta,
                    l + r - alpha,
                    m + s - beta,
                    n + t - alpha,
                ],
            );
        }
    }
    acc.finish()
}

pub(super) fn n5_4(left: &Monomial, right: &Monomial) -> Polynomial {
    let [j, k, l, m, n] = exps::<5>(left);
    let [p, q, r, s, t] = exps::<5>(right);
    let mut acc = Acc::new(5);
    for alpha in 0..=n.min(q) {
        let na = n - alpha;
        for b1 in 0..=s.min(na) {
            for b2 in 0..=(s - b1).min((na - b1) / 2) {
                for gamma in 0..=m.min(r) {
                    let coeff = c(n, alpha)
                        * c(q, alpha)
                        * c(s, b1 + b2)
                        * c(na, b1 + 2 * b2)
                        * c(b1 + b2, b1)
                        * c(m, gamma)
                        * c(r, gamma)
                        * f(alpha)
                        * exact_div(f(b1 + 2 * b2), &pow(2, b2))
                        * f(gamma);
                    acc.add(
                        coeff,
                        alpha + b1 + gamma,
                        &[
                            j + p + alpha + b2 + gamma,
                            k + q - alpha + b1,
                            l + r - gamma,
                            m + s - gamma - b1 - b2,
                            n + t - alpha - b1 - 2 * b2,
                        ],
                    );
                }
            }
        }
    }
    acc.finish()
}

pub(super) fn n5_5(left: &Monomial, right: &Monomial) -> Polynomial {
    let [j, k, l, m, n] = exps::<5>(left);
    let [p, q, r, s, t] = exps::<5>(right);
    let mut acc = Acc::new(5);
    for alpha in 0..=n.min(q) {
        let na = n - alpha;
        for b1 in 0..=r.min(na) {
            for b2 in 0..=(r - b1).min((na - b1) / 2) {
                let beta = c(r, b1 + b2)
                    * c(na, b1 + 2 * b2)
                    * c(b1 + b2, b1)
                    * exact_div(f(b1 + 2 * b2), &pow(2, b2));
                let nb = na - b1 - 2 * b2;
                for g1 in 0..=s.min(nb) {
                    for g2 in 0..=(s - g1).min((nb - g1) / 2) {
                        for g3 in 0..=(s - g1 - g2).min((nb - g1 - 2 * g2) / 3) {
                            let from_s = g1 + g2 + g3;
                            let from_n = g1 + 2 * g2 + 3 * g3;
                            let gamma = c(s, from_s)
                                * c(nb, from_n)
                                * exact_div(
                                    f(from_s) * f(from_n),
                                    &(pow(2, g2) * pow(6, g3) * f(g3) * f(g2) * f(g1)),
                                );
                            let coeff = c(n, alpha) * c(q, alpha) * f(alpha) * &beta * gamma;
                            acc.add(
                                coeff,
                                alpha + b1 + g1 + g3,
                                &[
                                    j + p + alpha + b2 + g3,
                                    k + q - alpha + b1 + g2,
                                    l + r - b1 - b2 + g1,
                                    m + s - from_s,
                                    n + t - alpha - b1 - 2 * b2 - from_n,
                                ],
                            );
                        }
                    }
                }
            }
        }
    }
    acc.finish()
}

pub(super) fn n5_6(left: &Monomial, right: &Monomial) -> Polynomial {
    let [j, k, l, m, n] = exps::<5>(left);
    let [p, q, r, s, t] = exps::<5>(right);
    let mut acc = Acc::new(5);
    for alpha in 0..=n.min(q) {
        let na = n - alpha;
        for b1 in 0..=r.min(na) {
            for b2 in 0..=(r - b1).min((na - b1) / 2) {
                let beta = c(r, b1 + b2)
                    * c(na, b1 + 2 * b2)
                    * c(b1 + b2, b1)
                    * exact_div(f(b1 + 2 * b2), &pow(2, b2));
                let nb = na - b1 - 2 * b2;
                for g1 in 0..=s.min(nb) {
                    for g2 in 0..=(s - g1).min((nb - g1) / 2) {
                        for g3 in 0..=(s - g1 - g2).min((nb - g1 - 2 * g2) / 3) {
                            let g4_max = ((s - g1 - g2 - g3) / 2).min(nb - g1 - 2 * g2 - 3 * g3);
                            for g4 in 0..=g4_max {
                                let from_s = g1 + g2 + g3 + 2 * g4;
                                let from_n = g1 + 2 * g2 + 3 * g3 + g4;
                                let gamma = c(s, from_s)
                                    * c(nb, from_n)
                                    * exact_div(
                                        f(from_s) * f(from_n),
                                        &(pow(2, g2 + g4)
                                            * pow(6, g3)
                                            * f(g4)
                                            * f(g3)
                                            * f(g2)
                                            * f(g1)),
                                    );
                                let r2 = r - b1 - b2 + g1;
                                for delta in 0..=m.min(r2) {
                                    let coeff = c(n, alpha)
                                        * c(q, alpha)
                                        * f(alpha)
                                        * &beta
                                        * &gamma
                                        * c(m, delta)
                                        * c(r2, delta)
                                        * f(delta);
                                    acc.add(
                                        coeff,
                                        alpha + b1 + g1 + g3 + delta,
                                        &[
                                            j + p + alpha + b2 + g4 + g3 + delta,
                                            k + q - alpha + b1 + g2,
                                            l + r - b1 - b2 + g1 - delta,
                                            m + s - delta - g1 - g2 - g3 - 2 * g4,
                                            n + t - alpha - b1 - 2 * b2 - from_n,
                                        ],
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    acc.finish()
}
