//! Exact integer helpers: binomials, powers, power sums.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Int;

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
///
/// Multiplicative form with an exact division at every step, so no
/// intermediate factorial is ever formed.
pub fn binomial(n: u64, k: i64) -> Int {
    if k < 0 || k as u64 > n {
        return Int::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = Int::one();
    for j in 1..=k {
        // acc is C(n-k+j-1, j-1); the division is exact.
        acc = acc * Int::from(n - k + j) / Int::from(j);
    }
    acc
}

/// base^exp by binary exponentiation.
pub fn int_pow(base: &Int, mut exp: u64) -> Int {
    let mut acc = Int::one();
    let mut sq = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            acc = &acc * &sq;
        }
        exp >>= 1;
        if exp > 0 {
            sq = &sq * &sq;
        }
    }
    acc
}

/// n! as an exact integer.
pub fn factorial(n: u64) -> Int {
    let mut acc = Int::one();
    for j in 2..=n {
        acc *= Int::from(j);
    }
    acc
}

/// Sum of the m-th powers of 1..k-1; the empty sum (k <= 1) is 0.
pub fn power_sum(m: u64, k: u64) -> Int {
    let mut acc = Int::zero();
    for i in 1..k {
        acc += int_pow(&Int::from(i), m);
    }
    acc
}

/// Sum of i^a (k-i)^(m-a) over i = 1..k-1. Requires a <= m; the empty sum
/// (k <= 1) is 0. Both bases stay >= 1, so only exponents can be zero and
/// x^0 = 1 applies as usual.
pub fn weighted_power_sum(a: u64, m: u64, k: u64) -> Result<Int> {
    if a > m {
        return Err(Error::domain("a <= m"));
    }
    let mut acc = Int::zero();
    for i in 1..k {
        acc += int_pow(&Int::from(i), a) * int_pow(&Int::from(k - i), m - a);
    }
    Ok(acc)
}
