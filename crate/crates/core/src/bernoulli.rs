//! Bernoulli numbers by four interchangeable methods.
//!
//! The defining recurrence is the oracle: it follows directly from the
//! generating function x/(e^x - 1) and is independent of every closed
//! formula checked against it. The other three methods evaluate direct
//! (non-recursive) double sums over binomials and power sums.

use std::fmt;
use std::sync::{LazyLock, RwLock};

use num_traits::{One, Zero};

use crate::arith::{binomial, int_pow, power_sum, weighted_power_sum};
use crate::error::{Error, Result};
use crate::rational::{Int, Rational};

/// Values B_0..B_{len-1} computed by the defining recurrence, grown on
/// demand. Reads are concurrent; growth is append-only under the write lock.
pub struct BernoulliCache {
    values: RwLock<Vec<Rational>>,
}

impl BernoulliCache {
    pub fn new() -> Self {
        BernoulliCache {
            values: RwLock::new(vec![Rational::one()]),
        }
    }

    /// Number of values currently cached.
    pub fn len(&self) -> usize {
        self.values.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        false // B_0 is always present
    }

    /// B_m, extending the cache as needed.
    pub fn get(&self, m: u64) -> Rational {
        let m = m as usize;
        {
            let values = self.values.read().unwrap();
            if let Some(v) = values.get(m) {
                return v.clone();
            }
        }
        let mut values = self.values.write().unwrap();
        while values.len() <= m {
            let j = values.len() as u64;
            // Sum_{k=0}^{j} C(j+1, k) B_k = 0, solved for B_j.
            let mut acc = Rational::zero();
            for k in 0..j as usize {
                acc += Rational::from_integer(binomial(j + 1, k as i64)) * &values[k];
            }
            let b = -acc / Rational::from_integer(Int::from(j + 1));
            values.push(b);
        }
        values[m].clone()
    }
}

impl Default for BernoulliCache {
    fn default() -> Self {
        Self::new()
    }
}

static SHARED_CACHE: LazyLock<BernoulliCache> = LazyLock::new(BernoulliCache::new);

/// B_m from the generating-function recurrence, through the given cache.
pub fn bernoulli_recurrence(m: u64, cache: &BernoulliCache) -> Rational {
    cache.get(m)
}

/// B_m from the shared process-wide cache. This is the oracle value used
/// by every cross-check in the crate.
pub fn bernoulli_number(m: u64) -> Rational {
    SHARED_CACHE.get(m)
}

/// Sum_{k=1}^{n+1} ((-1)^{k+1}/k) C(n+1,k) bracket(k), the alternating
/// shape shared by all three closed formulas. The binomial is updated
/// incrementally along ascending k, and each term costs one rational
/// reduction: the integer bracket is scaled by sign * C / k in one step.
fn alternating_formula_sum(n: u64, mut bracket: impl FnMut(u64) -> Int) -> Rational {
    let mut acc = Rational::zero();
    let mut binom = Int::from(n + 1); // C(n+1, 1)
    for k in 1..=n + 1 {
        if k > 1 {
            binom = binom * Int::from(n + 2 - k) / Int::from(k);
        }
        let numer = &binom * bracket(k);
        let signed = if k % 2 == 1 { numer } else { -numer };
        acc += Rational::new(signed, Int::from(k));
    }
    acc
}

/// B_m as the classical double sum over power sums; defined for m >= 2.
pub fn bernoulli_kronecker(m: u64) -> Result<Rational> {
    if m < 2 {
        return Err(Error::domain("2 <= m"));
    }
    Ok(alternating_formula_sum(m, |k| power_sum(m, k)))
}

/// B_m from the two-parameter closed form with weighted power sums and the
/// Kronecker-delta correction. Requires 0 <= a <= m <= n.
pub fn bernoulli_generalized(m: u64, a: u64, n: u64) -> Result<Rational> {
    if a > m {
        return Err(Error::domain("a <= m"));
    }
    if m > n {
        return Err(Error::domain("m <= n"));
    }
    let sum = alternating_formula_sum(n, |k| {
        let mut b = weighted_power_sum(a, m, k).expect("a <= m checked");
        if a == m {
            b += int_pow(&Int::from(k), m);
        }
        b
    });
    Ok(if a % 2 == 1 { -sum } else { sum })
}

/// The two-parameter closed form with the delta term dropped; valid only
/// for m >= 2 (in addition to 0 <= a <= m <= n), because removing the term
/// needs the alternating power-sum identity, which covers k^m only when the
/// whole sum vanishes.
pub fn bernoulli_generalized_simple(m: u64, a: u64, n: u64) -> Result<Rational> {
    if m < 2 {
        return Err(Error::domain("2 <= m"));
    }
    if a > m {
        return Err(Error::domain("a <= m"));
    }
    if m > n {
        return Err(Error::domain("m <= n"));
    }
    let sum = alternating_formula_sum(n, |k| weighted_power_sum(a, m, k).expect("a <= m checked"));
    Ok(if a % 2 == 1 { -sum } else { sum })
}

/// Sum_{k=1}^{n+1} (-1)^k C(n+1,k) k^m for 0 <= m <= n: equals 0 for m >= 1
/// and -1 for m = 0, because it reads off a low-order coefficient of
/// (e^x - 1)^{n+1}, whose expansion starts at degree n+1.
pub fn alternating_power_sum(m: u64, n: u64) -> Result<Rational> {
    if m > n {
        return Err(Error::domain("m <= n"));
    }
    let mut acc = Int::zero();
    let mut binom = Int::from(n + 1); // C(n+1, 1)
    for k in 1..=n + 1 {
        if k > 1 {
            binom = binom * Int::from(n + 2 - k) / Int::from(k);
        }
        let term = &binom * int_pow(&Int::from(k), m);
        if k % 2 == 1 {
            acc -= term;
        } else {
            acc += term;
        }
    }
    Ok(Rational::from_integer(acc))
}

/// Residual of the two-parameter closed form against the recurrence oracle:
///
///   (-1)^a Sum_k ((-1)^k/k) C(n+1,k) [wps(a,m,k) + delta_{a,m} k^m]  +  B_m
///
/// which is zero exactly when the closed form reproduces B_m. Unlike
/// [`bernoulli_generalized`], `m` may exceed `n`; the residual is then
/// generally nonzero, and it is what the coefficients of the two-variable
/// quotient expansion are proportional to.
pub fn generalized_residual(m: u64, a: u64, n: u64) -> Result<Rational> {
    if a > m {
        return Err(Error::domain("a <= m"));
    }
    let sum = alternating_formula_sum(n, |k| {
        let mut b = weighted_power_sum(a, m, k).expect("a <= m checked");
        if a == m {
            b += int_pow(&Int::from(k), m);
        }
        b
    });
    // alternating_formula_sum carries (-1)^{k+1}; the residual wants (-1)^k.
    let signed = if a % 2 == 1 { sum } else { -sum };
    Ok(signed + bernoulli_number(m))
}

/// Selects one of the four computation paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Recurrence,
    Kronecker,
    Generalized { a: u64, n: u64 },
    GeneralizedSimple { a: u64, n: u64 },
}

impl Method {
    /// Computes B_m by this method. `Recurrence` uses a fresh cache so the
    /// cost measured by callers is the cost of the method itself.
    pub fn compute(&self, m: u64) -> Result<Rational> {
        match *self {
            Method::Recurrence => Ok(BernoulliCache::new().get(m)),
            Method::Kronecker => bernoulli_kronecker(m),
            Method::Generalized { a, n } => bernoulli_generalized(m, a, n),
            Method::GeneralizedSimple { a, n } => bernoulli_generalized_simple(m, a, n),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Method::Recurrence => "recurrence",
            Method::Kronecker => "kronecker",
            Method::Generalized { .. } => "generalized",
            Method::GeneralizedSimple { .. } => "generalized-simple",
        }
    }

    /// The (a, n) parameters, when the method has them.
    pub fn params(&self) -> Option<(u64, u64)> {
        match *self {
            Method::Generalized { a, n } | Method::GeneralizedSimple { a, n } => Some((a, n)),
            _ => None,
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    #[test]
    fn recurrence_known_values() {
        let cache = BernoulliCache::new();
        assert_eq!(bernoulli_recurrence(0, &cache), rat_int(1));
        assert_eq!(bernoulli_recurrence(1, &cache), rat(-1, 2));
        assert_eq!(bernoulli_recurrence(2, &cache), rat(1, 6));
        assert_eq!(bernoulli_recurrence(4, &cache), rat(-1, 30));
        assert_eq!(bernoulli_recurrence(6, &cache), rat(1, 42));
        assert_eq!(bernoulli_recurrence(7, &cache), rat_int(0));
    }

    #[test]
    fn recurrence_odd_values_vanish() {
        let cache = BernoulliCache::new();
        for m in (3..=39u64).step_by(2) {
            assert_eq!(cache.get(m), rat_int(0), "B_{m}");
        }
    }

    #[test]
    fn cache_grows_monotonically() {
        let cache = BernoulliCache::new();
        assert_eq!(cache.len(), 1);
        cache.get(6);
        assert_eq!(cache.len(), 7);
        cache.get(2); // no shrink, no regrowth
        assert_eq!(cache.len(), 7);
    }

    #[test]
    fn cache_is_consistent_under_concurrent_access() {
        let cache = BernoulliCache::new();
        let reference = BernoulliCache::new();
        reference.get(40);
        std::thread::scope(|scope| {
            for offset in 0..8u64 {
                let cache = &cache;
                let reference = &reference;
                scope.spawn(move || {
                    for m in 0..=40 {
                        let m = (m + offset * 5) % 41;
                        assert_eq!(cache.get(m), reference.get(m), "B_{m}");
                    }
                });
            }
        });
        assert_eq!(cache.len(), 41);
    }

    #[test]
    fn kronecker_examples() {
        assert_eq!(bernoulli_kronecker(2).unwrap(), rat(1, 6));
        assert_eq!(bernoulli_kronecker(4).unwrap(), rat(-1, 30));
        assert_eq!(bernoulli_kronecker(3).unwrap(), rat_int(0));
    }

    #[test]
    fn kronecker_rejects_small_m() {
        assert_eq!(
            bernoulli_kronecker(1).unwrap_err(),
            Error::Domain {
                requirement: "2 <= m"
            },
        );
    }

    #[test]
    fn generalized_examples() {
        assert_eq!(bernoulli_generalized(1, 0, 1).unwrap(), rat(-1, 2));
        assert_eq!(bernoulli_generalized(2, 1, 3).unwrap(), rat(1, 6));
        assert_eq!(bernoulli_generalized(0, 0, 0).unwrap(), rat_int(1));
    }

    #[test]
    fn generalized_rejects_each_violated_inequality() {
        assert_eq!(
            bernoulli_generalized(2, 3, 5).unwrap_err(),
            Error::Domain {
                requirement: "a <= m"
            },
        );
        assert_eq!(
            bernoulli_generalized(4, 0, 3).unwrap_err(),
            Error::Domain {
                requirement: "m <= n"
            },
        );
    }

    #[test]
    fn generalized_simple_examples() {
        assert_eq!(bernoulli_generalized_simple(2, 0, 2).unwrap(), rat(1, 6));
        assert_eq!(bernoulli_generalized_simple(2, 2, 5).unwrap(), rat(1, 6));
        assert_eq!(bernoulli_generalized_simple(6, 3, 9).unwrap(), rat(1, 42));
    }

    #[test]
    fn generalized_simple_rejects_m_below_two() {
        for m in 0..2u64 {
            assert_eq!(
                bernoulli_generalized_simple(m, 0, 5).unwrap_err(),
                Error::Domain {
                    requirement: "2 <= m"
                },
            );
        }
    }

    #[test]
    fn generalized_matches_oracle_small_sweep() {
        let cache = BernoulliCache::new();
        for n in 0..=10u64 {
            for m in 0..=n {
                for a in 0..=m {
                    assert_eq!(
                        bernoulli_generalized(m, a, n).unwrap(),
                        cache.get(m),
                        "(m, a, n) = ({m}, {a}, {n})"
                    );
                }
            }
        }
    }

    #[test]
    fn simple_variant_agrees_with_full_form() {
        for n in 2..=10u64 {
            for m in 2..=n {
                for a in 0..=m {
                    assert_eq!(
                        bernoulli_generalized_simple(m, a, n).unwrap(),
                        bernoulli_generalized(m, a, n).unwrap(),
                    );
                }
            }
        }
    }

    #[test]
    fn kronecker_is_the_a0_nm_specialization() {
        for m in 2..=20u64 {
            assert_eq!(
                bernoulli_kronecker(m).unwrap(),
                bernoulli_generalized_simple(m, 0, m).unwrap(),
            );
        }
    }

    #[test]
    fn alternating_power_sum_examples() {
        assert_eq!(alternating_power_sum(0, 4).unwrap(), rat_int(-1));
        assert_eq!(alternating_power_sum(3, 5).unwrap(), rat_int(0));
        assert_eq!(alternating_power_sum(1, 1).unwrap(), rat_int(0));
        assert_eq!(
            alternating_power_sum(3, 2).unwrap_err(),
            Error::Domain {
                requirement: "m <= n"
            },
        );
    }

    #[test]
    fn residual_vanishes_in_range_and_not_beyond() {
        for n in 0..=8u64 {
            for m in 0..=n {
                for a in 0..=m {
                    assert_eq!(generalized_residual(m, a, n).unwrap(), rat_int(0));
                }
            }
        }
        // beyond the valid range the residual picks up the uncancelled tail
        assert_eq!(generalized_residual(2, 0, 1).unwrap(), rat(2, 3));
    }

    #[test]
    fn method_dispatch() {
        assert_eq!(Method::Recurrence.compute(4).unwrap(), rat(-1, 30));
        assert_eq!(Method::Kronecker.compute(4).unwrap(), rat(-1, 30));
        assert_eq!(
            Method::Generalized { a: 1, n: 5 }.compute(4).unwrap(),
            rat(-1, 30)
        );
        assert_eq!(
            Method::GeneralizedSimple { a: 4, n: 6 }.compute(4).unwrap(),
            rat(-1, 30),
        );
        assert_eq!(Method::Kronecker.to_string(), "kronecker");
    }
}
