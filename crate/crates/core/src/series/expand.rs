//! Two-variable expansions of the integral quotient whose coefficients
//! reproduce the Bernoulli closed formulas.
//!
//! With E(n) = (e^t - 1)^{n+1}, the objects are
//!
//!   f(X, Y) = integral of E(n) from X to Y,
//!   g(X, Y) = f / (e^{Y-X} - 1),
//!
//! both expanded exactly modulo total degree `trunc`. Every coefficient of
//! g with total degree <= n vanishes, and the coefficient of X^a Y^{m-a}
//! is a fixed prefactor times the residual of the two-parameter closed
//! form; [`g_coefficient`] evaluates that scalar expression directly.

use num_traits::{One, Zero};

use crate::arith::{binomial, factorial, int_pow, weighted_power_sum};
use crate::bernoulli::bernoulli_number;
use crate::error::{Error, Result};
use crate::rational::{Int, Rational};
use crate::series::bi::{divide_by_linear, BiSeries, LinearForm};

type QBi = BiSeries<Rational>;

/// The Bernoulli generating series in the difference variable:
/// sum_i B_i/i! (Y-X)^i, the exact inverse of (e^{Y-X} - 1)/(Y-X).
pub fn phi(trunc: usize) -> QBi {
    assert!(trunc >= 1);
    let mut acc = QBi::zero(trunc);
    let mut pow = QBi::one(trunc);
    let mut fact = Int::one();
    for i in 0..trunc {
        if i > 0 {
            fact *= Int::from(i);
            pow = &pow * &QBi::y_minus_x(trunc);
        }
        let b = bernoulli_number(i as u64);
        if !b.is_zero() {
            let coef = b / Rational::from_integer(fact.clone());
            acc = &acc + &pow.scale(&coef);
        }
    }
    acc
}

/// Runs `body(k, (-1)^k C(n+1,k) / k)` for k = 1..=n+1, with the binomial
/// updated incrementally.
fn alternating_terms(n: u64, mut body: impl FnMut(u64, Rational)) {
    let mut binom = Int::from(n + 1); // C(n+1, 1)
    for k in 1..=n + 1 {
        if k > 1 {
            binom = binom * Int::from(n + 2 - k) / Int::from(k);
        }
        let signed = if k % 2 == 0 {
            binom.clone()
        } else {
            -binom.clone()
        };
        body(k, Rational::new(signed, Int::from(k)));
    }
}

/// The integral of (e^t - 1)^{n+1} from X to Y, via the closed form
///
///   (-1)^{n+1} [ sum_k ((-1)^k/k) C(n+1,k) (e^{kY} - e^{kX}) + (Y - X) ].
///
/// Every term of total degree <= n vanishes, since the integrand starts
/// at degree n+1.
pub fn expand_f(n: u64, trunc: usize) -> QBi {
    assert!(trunc >= 1);
    let mut acc = QBi::zero(trunc);
    alternating_terms(n, |k, coef| {
        let diff = &QBi::exp_monomial(0, k as i64, trunc) - &QBi::exp_monomial(k as i64, 0, trunc);
        acc = &acc + &diff.scale(&coef);
    });
    if trunc >= 2 {
        acc = &acc + &QBi::y_minus_x(trunc);
    }
    if n.is_multiple_of(2) {
        acc = -&acc;
    }
    acc
}

/// f / (e^{Y-X} - 1) assembled directly from exponential monomials plus the
/// Bernoulli tail:
///
///   (-1)^{n+1} [ sum_k ((-1)^k/k) C(n+1,k)
///                (sum_{i=1}^{k-1} e^{iX} e^{(k-i)Y} + e^{kX})  +  phi ].
pub fn expand_g_closed(n: u64, trunc: usize) -> QBi {
    assert!(trunc >= 1);
    let mut acc = QBi::zero(trunc);
    alternating_terms(n, |k, coef| {
        let mut bracket = QBi::exp_monomial(k as i64, 0, trunc);
        for i in 1..k {
            bracket = &bracket + &QBi::exp_monomial(i as i64, (k - i) as i64, trunc);
        }
        acc = &acc + &bracket.scale(&coef);
    });
    acc = &acc + &phi(trunc);
    if n.is_multiple_of(2) {
        acc = -&acc;
    }
    acc
}

/// f / (Y - X), by exact division. The division cannot fail for the f
/// produced here (its diagonal is identically zero); a failure would mean
/// the closed form for f is broken.
pub fn expand_g1(n: u64, trunc: usize) -> Result<QBi> {
    divide_by_linear(&expand_f(n, trunc + 1), LinearForm::YMinusX)
}

/// The alternate route to g: divide f exactly by Y - X, then multiply by
/// the Bernoulli series. Agrees with [`expand_g_closed`] coefficient for
/// coefficient.
pub fn expand_g_alt(n: u64, trunc: usize) -> Result<QBi> {
    let g1 = expand_g1(n, trunc)?;
    Ok(&g1 * &phi(trunc))
}

/// Closed form for the coefficient of X^a Y^{m-a} in `expand_g_closed(n, _)`:
///
///   ((-1)^{n+1}/m!) [ sum_k ((-1)^k/k) C(n+1,k)
///                     (C(m,a) wps(a,m,k) + delta_{a,m} k^m)
///                     + (-1)^a C(m,a) B_m ].
///
/// Defined for any a <= m, including m > n where it is generally nonzero.
pub fn g_coefficient(m: u64, a: u64, n: u64) -> Result<Rational> {
    if a > m {
        return Err(Error::domain("a <= m"));
    }
    let choose = binomial(m, a as i64);
    let mut acc = Rational::zero();
    alternating_terms(n, |k, coef| {
        let mut bracket = weighted_power_sum(a, m, k).expect("a <= m checked") * &choose;
        if a == m {
            bracket += int_pow(&Int::from(k), m);
        }
        acc += coef * Rational::from_integer(bracket);
    });
    let tail = bernoulli_number(m)
        * Rational::from_integer(&choose * Int::from(if a.is_multiple_of(2) { 1 } else { -1 }));
    let mut value = (acc + tail) / Rational::from_integer(factorial(m));
    if n.is_multiple_of(2) {
        value = -value;
    }
    Ok(value)
}
