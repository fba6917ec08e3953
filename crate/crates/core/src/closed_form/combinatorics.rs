use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// `C(n, k)` by the multiplicative formula; zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: i64) -> BigInt {
    assert!(n >= 0, "factorial of negative {n}");
    (2..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub fn pow(base: i64, exp: i64) -> BigInt {
    num_traits::pow(BigInt::from(base), exp as usize)
}

/// `num / den`, panicking if the division is not exact. Every straightening
/// coefficient is an integer, so a remainder here is a formula bug.
pub fn exact_div(num: BigInt, den: &BigInt) -> BigInt {
    let (q, r) = num.div_rem(den);
    assert!(r.is_zero(), "non-integral coefficient {num}/{den}");
    q
}

pub fn sign(exp: i64) -> i64 {
    if exp % 2 == 0 {
        1
    } else {
        -1
    }
}
