//! Sparse Laurent polynomials: finite combinations of integer powers of z.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::Scalar;

/// Finite map from exponent (possibly negative) to nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly<T> {
    terms: BTreeMap<i64, T>,
}

impl<T: Scalar> LaurentPoly<T> {
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    /// coeff * z^exp (dropped immediately if coeff is zero).
    pub fn monomial(exp: i64, coeff: T) -> Self {
        let mut p = Self::zero();
        p.insert_add(exp, coeff);
        p
    }

    /// Sums an arbitrary term list; duplicate exponents accumulate and
    /// zero coefficients are dropped.
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, T)>) -> Self {
        let mut p = Self::zero();
        for (exp, coeff) in terms {
            p.insert_add(exp, coeff);
        }
        p
    }

    fn insert_add(&mut self, exp: i64, coeff: T) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.remove(&exp) {
            None => {
                self.terms.insert(exp, coeff);
            }
            Some(old) => {
                let sum = old + coeff;
                if !sum.is_zero() {
                    self.terms.insert(exp, sum);
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &T)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coefficient(&self, exp: i64) -> Option<&T> {
        self.terms.get(&exp)
    }

    /// Sum of all coefficients: the augmentation map. The ideal of
    /// polynomials with zero augmentation is generated by z - 1.
    pub fn coefficient_sum(&self) -> T {
        self.terms
            .values()
            .fold(T::zero(), |acc, c| acc + c.clone())
    }

    pub fn scale(&self, factor: &T) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e, c.clone() * factor.clone()))
                .collect(),
        }
    }

    /// Small-exponent power by repeated multiplication.
    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::monomial(0, T::one());
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }
}

impl<T: Scalar> Add for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;

    fn add(self, rhs: Self) -> LaurentPoly<T> {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.insert_add(e, c.clone());
        }
        out
    }
}

impl<T: Scalar> Sub for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;

    fn sub(self, rhs: Self) -> LaurentPoly<T> {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.insert_add(e, -c.clone());
        }
        out
    }
}

impl<T: Scalar> Neg for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;

    fn neg(self) -> LaurentPoly<T> {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

impl<T: Scalar> Mul for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;

    fn mul(self, rhs: Self) -> LaurentPoly<T> {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.insert_add(e1 + e2, c1.clone() * c2.clone());
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat_int, Rational};

    type L = LaurentPoly<Rational>;

    fn z_minus_one() -> L {
        L::from_terms([(1, rat_int(1)), (0, rat_int(-1))])
    }

    #[test]
    fn zero_coefficients_never_stored() {
        let p = L::from_terms([(3, rat_int(2)), (3, rat_int(-2)), (0, rat_int(1))]);
        assert_eq!(p.term_count(), 1);
        assert_eq!(p.coefficient(3), None);
    }

    #[test]
    fn multiplication_convolves_exponents() {
        // (z - 1)(z^{-1} - 1) = -z + 2 - z^{-1}
        let p = &z_minus_one() * &L::from_terms([(-1, rat_int(1)), (0, rat_int(-1))]);
        assert_eq!(
            p,
            L::from_terms([(1, rat_int(-1)), (0, rat_int(2)), (-1, rat_int(-1))]),
        );
    }

    #[test]
    fn augmentation_is_a_ring_map() {
        let p = L::from_terms([(2, rat_int(3)), (-1, rat_int(4))]);
        let q = L::from_terms([(5, rat_int(-2)), (0, rat_int(1))]);
        assert_eq!(
            (&p * &q).coefficient_sum(),
            p.coefficient_sum() * q.coefficient_sum(),
        );
        assert_eq!(z_minus_one().coefficient_sum(), rat_int(0));
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let p = z_minus_one();
        assert_eq!(p.pow(0), L::monomial(0, rat_int(1)));
        assert_eq!(p.pow(3), &(&p * &p) * &p);
    }
}
