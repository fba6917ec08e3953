//! Straightening identities for `a^t b^u` in an enveloping algebra, stated
//! abstractly over role symbols `a, b, c, d, g` and later bound to concrete
//! generators by [`super::roles`].
//!
//! Each identity has two forms. [`Lemma::terms`] gives the ordinary
//! coefficients with integer arithmetic; [`Lemma::divided_terms`] gives the
//! divided-power weights `1/(2!^i 3!^j)`. The two are related by factorial
//! renormalization and are computed independently.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::combinatorics::{binomial, exact_div, factorial, pow};
use crate::poly::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Role {
    A,
    B,
    C,
    D,
    G,
}

impl Role {
    pub const ALL: [Role; 5] = [Role::A, Role::B, Role::C, Role::D, Role::G];

    fn slot(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Role::A => "a",
            Role::B => "b",
            Role::C => "c",
            Role::D => "d",
            Role::G => "g",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct RoleExponents([u32; 5]);

impl Index<Role> for RoleExponents {
    type Output = u32;

    fn index(&self, r: Role) -> &u32 {
        &self.0[r.slot()]
    }
}

impl IndexMut<Role> for RoleExponents {
    fn index_mut(&mut self, r: Role) -> &mut u32 {
        &mut self.0[r.slot()]
    }
}

/// One summand `coeff * (-g)^neg_g g^.. d^.. c^.. b^.. a^..` of a
/// straightening identity. `role_exponents[G]` already includes `neg_g`;
/// the sign `(-1)^neg_g` is not folded into `coeff`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StraighteningTerm {
    pub multi_index: Vec<u32>,
    pub coeff: Rational,
    pub role_exponents: RoleExponents,
    pub neg_g: u32,
}

impl StraighteningTerm {
    pub fn signed_coeff(&self) -> Rational {
        if self.neg_g % 2 == 1 {
            -&self.coeff
        } else {
            self.coeff.clone()
        }
    }
}

/// Divided-power summand `weight * (-g)^(neg_g) g^(..) d^(..) ... a^(..)`.
/// Here `exponents[G]` counts only the `+g` factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DividedTerm {
    pub multi_index: Vec<u32>,
    pub weight: Rational,
    pub exponents: RoleExponents,
    pub neg_g: u32,
}

/// `1/k!` for `k >= 0`; `None` marks a negative divided power, which
/// annihilates its term.
pub fn divided_power_coeff(k: i64) -> Option<Rational> {
    (k >= 0).then(|| Rational::new(BigInt::one(), factorial(k)))
}

/// The five straightening identities, named by their bracket hypotheses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Lemma {
    /// `[a,b] = c`, `c` central.
    Cpr,
    /// `[a,b] = c`, `[a,c] = d`.
    Acd,
    /// `[a,b] = c`, `[b,c] = d`, `[a,c] = g`.
    BcdAcg,
    /// `[a,b] = c`, `[a,c] = d`, `[a,d] = g`.
    Chain,
    /// `[a,b] = c`, `[a,c] = d`, `[a,d] = g`, `[b,c] = -g`.
    ChainBc,
}

/// Summation index `k`: each unit contributes one `role` factor and
/// consumes `from_b` copies of `b` and `from_a` copies of `a`, with
/// divided-power weight `1/weight_den`.
struct IndexKind {
    role: Role,
    negated: bool,
    from_b: i64,
    from_a: i64,
    weight_den: i64,
}

const fn kind(role: Role, from_b: i64, from_a: i64, weight_den: i64) -> IndexKind {
    IndexKind {
        role,
        negated: false,
        from_b,
        from_a,
        weight_den,
    }
}

const CPR_KINDS: &[IndexKind] = &[kind(Role::C, 1, 1, 1)];
const ACD_KINDS: &[IndexKind] = &[kind(Role::C, 1, 1, 1), kind(Role::D, 1, 2, 2)];
const BCD_ACG_KINDS: &[IndexKind] = &[
    kind(Role::C, 1, 1, 1),
    kind(Role::D, 2, 1, 2),
    kind(Role::G, 1, 2, 2),
];
const CHAIN_KINDS: &[IndexKind] = &[
    kind(Role::C, 1, 1, 1),
    kind(Role::D, 1, 2, 2),
    kind(Role::G, 1, 3, 6),
];
const CHAIN_BC_KINDS: &[IndexKind] = &[
    kind(Role::C, 1, 1, 1),
    kind(Role::D, 1, 2, 2),
    kind(Role::G, 1, 3, 6),
    IndexKind {
        role: Role::G,
        negated: true,
        from_b: 2,
        from_a: 1,
        weight_den: 2,
    },
];

impl Lemma {
    pub const ALL: [Lemma; 5] = [
        Lemma::Cpr,
        Lemma::Acd,
        Lemma::BcdAcg,
        Lemma::Chain,
        Lemma::ChainBc,
    ];

    pub fn roles(self) -> &'static [Role] {
        match self {
            Lemma::Cpr => &[Role::A, Role::B, Role::C],
            Lemma::Acd => &[Role::A, Role::B, Role::C, Role::D],
            _ => &Role::ALL,
        }
    }

    /// Nonzero brackets `[p, q] = sign * r`; every other bracket among the
    /// roles must vanish.
    pub fn relations(self) -> &'static [(Role, Role, Role, i64)] {
        use Role::*;
        match self {
            Lemma::Cpr => &[(A, B, C, 1)],
            Lemma::Acd => &[(A, B, C, 1), (A, C, D, 1)],
            Lemma::BcdAcg => &[(A, B, C, 1), (B, C, D, 1), (A, C, G, 1)],
            Lemma::Chain => &[(A, B, C, 1), (A, C, D, 1), (A, D, G, 1)],
            Lemma::ChainBc => &[(A, B, C, 1), (A, C, D, 1), (A, D, G, 1), (B, C, G, -1)],
        }
    }

    fn kinds(self) -> &'static [IndexKind] {
        match self {
            Lemma::Cpr => CPR_KINDS,
            Lemma::Acd => ACD_KINDS,
            Lemma::BcdAcg => BCD_ACG_KINDS,
            Lemma::Chain => CHAIN_KINDS,
            Lemma::ChainBc => CHAIN_BC_KINDS,
        }
    }

    /// All multi-indices in the summation region, lexicographically.
    pub fn region(self, t: u32, u: u32) -> Vec<Vec<i64>> {
        let kinds = self.kinds();
        let mut out = Vec::new();
        let mut k = vec![0i64; kinds.len()];
        region_rec(kinds, 0, u as i64, t as i64, &mut k, &mut out);
        out
    }

    /// Ordinary coefficient of the summand at multi-index `k`.
    fn standard_coeff(self, k: &[i64], t: i64, u: i64) -> BigInt {
        match self {
            Lemma::Cpr => {
                let j = k[0];
                binomial(t, j) * binomial(u, j) * factorial(j)
            }
            Lemma::Acd => {
                let (k1, k2) = (k[0], k[1]);
                binomial(u, k1 + k2)
                    * binomial(t, k1 + 2 * k2)
                    * binomial(k1 + k2, k1)
                    * exact_div(factorial(k1 + 2 * k2), &pow(2, k2))
            }
            Lemma::BcdAcg => {
                let (k1, k2, k3) = (k[0], k[1], k[2]);
                let from_b = k1 + 2 * k2 + k3;
                let from_a = k1 + k2 + 2 * k3;
                let den = pow(2, k2 + k3) * factorial(k3) * factorial(k2) * factorial(k1);
                binomial(u, from_b)
                    * binomial(t, from_a)
                    * exact_div(factorial(from_b) * factorial(from_a), &den)
            }
            Lemma::Chain => {
                let (k1, k2, k3) = (k[0], k[1], k[2]);
                let from_b = k1 + k2 + k3;
                let from_a = k1 + 2 * k2 + 3 * k3;
                let den = pow(2, k2) * pow(6, k3) * factorial(k3) * factorial(k2) * factorial(k1);
                binomial(u, from_b)
                    * binomial(t, from_a)
                    * exact_div(factorial(from_b) * factorial(from_a), &den)
            }
            Lemma::ChainBc => {
                let (k1, k2, k3, k4) = (k[0], k[1], k[2], k[3]);
                let from_b = k1 + k2 + k3 + 2 * k4;
                let from_a = k1 + 2 * k2 + 3 * k3 + k4;
                let den = pow(2, k2 + k4)
                    * pow(6, k3)
                    * factorial(k4)
                    * factorial(k3)
                    * factorial(k2)
                    * factorial(k1);
                binomial(u, from_b)
                    * binomial(t, from_a)
                    * exact_div(factorial(from_b) * factorial(from_a), &den)
            }
        }
    }

    /// `a^t b^u` as a sum of ordered terms `(-g)^. g^. d^. c^. b^. a^.`.
    pub fn terms(self, t: u32, u: u32) -> Vec<StraighteningTerm> {
        let kinds = self.kinds();
        self.region(t, u)
            .into_iter()
            .map(|k| {
                let coeff = self.standard_coeff(&k, t as i64, u as i64);
                let (exps, neg_g) = consumed(kinds, &k, t, u);
                let mut role_exponents = exps;
                role_exponents[Role::G] += neg_g;
                StraighteningTerm {
                    multi_index: k.iter().map(|&x| x as u32).collect(),
                    coeff: Rational::from_integer(coeff),
                    role_exponents,
                    neg_g,
                }
            })
            .collect()
    }

    /// `a^(t) b^(u)` in divided powers.
    pub fn divided_terms(self, t: u32, u: u32) -> Vec<DividedTerm> {
        let kinds = self.kinds();
        self.region(t, u)
            .into_iter()
            .map(|k| {
                let den = kinds
                    .iter()
                    .zip(&k)
                    .fold(BigInt::one(), |acc, (kd, &x)| acc * pow(kd.weight_den, x));
                let (exponents, neg_g) = consumed(kinds, &k, t, u);
                DividedTerm {
                    multi_index: k.iter().map(|&x| x as u32).collect(),
                    weight: Rational::new(BigInt::one(), den),
                    exponents,
                    neg_g,
                }
            })
            .collect()
    }
}

fn region_rec(
    kinds: &[IndexKind],
    pos: usize,
    budget_b: i64,
    budget_a: i64,
    k: &mut Vec<i64>,
    out: &mut Vec<Vec<i64>>,
) {
    if pos == kinds.len() {
        out.push(k.clone());
        return;
    }
    let kd = &kinds[pos];
    let mut x = 0;
    while x * kd.from_b <= budget_b && x * kd.from_a <= budget_a {
        k[pos] = x;
        region_rec(
            kinds,
            pos + 1,
            budget_b - x * kd.from_b,
            budget_a - x * kd.from_a,
            k,
            out,
        );
        x += 1;
    }
    k[pos] = 0;
}

/// Role exponents left after the indices `k` consume copies of `a` and `b`;
/// the `-g` count is returned separately.
fn consumed(kinds: &[IndexKind], k: &[i64], t: u32, u: u32) -> (RoleExponents, u32) {
    let mut exps = RoleExponents::default();
    let mut neg_g = 0;
    let (mut a, mut b) = (t as i64, u as i64);
    for (kd, &x) in kinds.iter().zip(k) {
        if kd.negated {
            neg_g += x as u32;
        } else {
            exps[kd.role] += x as u32;
        }
        b -= kd.from_b * x;
        a -= kd.from_a * x;
    }
    debug_assert!(a >= 0 && b >= 0);
    exps[Role::A] = a as u32;
    exps[Role::B] = b as u32;
    (exps, neg_g)
}

pub fn cpr_terms(r: u32, s: u32) -> Vec<StraighteningTerm> {
    Lemma::Cpr.terms(r, s)
}

pub fn lemma_acd_terms(t: u32, u: u32) -> Vec<StraighteningTerm> {
    Lemma::Acd.terms(t, u)
}

pub fn lemma_bcd_acg_terms(t: u32, u: u32) -> Vec<StraighteningTerm> {
    Lemma::BcdAcg.terms(t, u)
}

pub fn lemma_chain_terms(t: u32, u: u32) -> Vec<StraighteningTerm> {
    Lemma::Chain.terms(t, u)
}

pub fn lemma_chain_bc_terms(t: u32, u: u32) -> Vec<StraighteningTerm> {
    Lemma::ChainBc.terms(t, u)
}

impl fmt::Display for StraighteningTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.signed_coeff();
        let mut factors = Vec::new();
        for role in [Role::G, Role::D, Role::C, Role::B, Role::A] {
            match self.role_exponents[role] {
                0 => {}
                1 => factors.push(role.to_string()),
                e => factors.push(format!("{role}^{e}")),
            }
        }
        if factors.is_empty() {
            return write!(f, "{c}");
        }
        if c.is_one() {
            write!(f, "{}", factors.join(""))
        } else if c == -Rational::one() {
            write!(f, "-{}", factors.join(""))
        } else {
            write!(f, "{c}*{}", factors.join(""))
        }
    }
}

/// Sum of terms as text such as `ba^2 + 2*ca + d`, longest words first.
pub fn render(terms: &[StraighteningTerm]) -> String {
    let mut sorted: Vec<&StraighteningTerm> =
        terms.iter().filter(|t| !t.coeff.is_zero()).collect();
    sorted.sort_by_key(|t| std::cmp::Reverse(t.role_exponents.0.iter().sum::<u32>()));
    let parts: Vec<String> = sorted.iter().map(|t| t.to_string()).collect();
    parts.join(" + ").replace("+ -", "- ")
}
