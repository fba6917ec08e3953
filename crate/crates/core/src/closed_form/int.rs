//! Integers that stay in `i128` until an operation overflows, then promote to
//! `BigInt`. The theorem sums multiply many small binomials and factorials;
//! this keeps them off the heap at ordinary degrees.

use std::ops::{AddAssign, Mul, Neg};

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::combinatorics;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Int {
    Small(i128),
    Big(BigInt),
}

impl Int {
    fn norm(b: BigInt) -> Int {
        match b.to_i128() {
            Some(x) => Int::Small(x),
            None => Int::Big(b),
        }
    }

    pub fn to_bigint(&self) -> BigInt {
        match self {
            Int::Small(x) => BigInt::from(*x),
            Int::Big(b) => b.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Int::Small(0))
    }
}

impl From<i128> for Int {
    fn from(x: i128) -> Self {
        Int::Small(x)
    }
}

impl Mul<&Int> for Int {
    type Output = Int;

    fn mul(self, rhs: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (&self, rhs) {
            if let Some(p) = a.checked_mul(*b) {
                return Int::Small(p);
            }
        }
        Int::norm(self.to_bigint() * rhs.to_bigint())
    }
}

impl Mul for Int {
    type Output = Int;

    fn mul(self, rhs: Int) -> Int {
        self * &rhs
    }
}

impl AddAssign for Int {
    fn add_assign(&mut self, rhs: Int) {
        if let (Int::Small(a), Int::Small(b)) = (&*self, &rhs) {
            if let Some(s) = a.checked_add(*b) {
                *self = Int::Small(s);
                return;
            }
        }
        *self = Int::norm(self.to_bigint() + rhs.to_bigint());
    }
}

impl Neg for Int {
    type Output = Int;

    fn neg(self) -> Int {
        match self {
            Int::Small(x) if x != i128::MIN => Int::Small(-x),
            other => Int::norm(-other.to_bigint()),
        }
    }
}

const FACT_TABLE_LEN: usize = 34;

const FACTORIALS: [i128; FACT_TABLE_LEN] = {
    let mut t = [1i128; FACT_TABLE_LEN];
    let mut i = 1;
    while i < FACT_TABLE_LEN {
        t[i] = t[i - 1] * i as i128;
        i += 1;
    }
    t
};

pub fn factorial(n: i64) -> Int {
    assert!(n >= 0, "factorial of negative {n}");
    match FACTORIALS.get(n as usize) {
        Some(&x) => Int::Small(x),
        None => Int::Big(combinatorics::factorial(n)),
    }
}

pub fn binomial(n: i64, k: i64) -> Int {
    if k < 0 || n < 0 || k > n {
        return Int::Small(0);
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        match acc.checked_mul((n - i) as i128) {
            Some(x) => acc = x / (i + 1) as i128,
            None => return Int::Big(combinatorics::binomial(n, k)),
        }
    }
    Int::Small(acc)
}

pub fn pow(base: i64, exp: i64) -> Int {
    match (base as i128).checked_pow(exp as u32) {
        Some(x) => Int::Small(x),
        None => Int::Big(combinatorics::pow(base, exp)),
    }
}

/// Exact quotient; panics on a remainder like [`combinatorics::exact_div`].
pub fn exact_div(num: Int, den: &Int) -> Int {
    if let (Int::Small(a), Int::Small(b)) = (&num, den) {
        assert!(a % b == 0, "non-integral coefficient {a}/{b}");
        return Int::Small(a / b);
    }
    Int::norm(combinatorics::exact_div(num.to_bigint(), &den.to_bigint()))
}
