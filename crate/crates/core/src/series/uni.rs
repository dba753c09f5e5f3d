//! Truncated formal power series in one indeterminate.

use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::Scalar;

/// Series modulo Z^trunc: a dense coefficient vector for degrees
/// 0..trunc-1. Binary operations truncate to the smaller operand, so the
/// truncation metadata can only tighten.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniSeries<T> {
    trunc: usize,
    coeffs: Vec<T>,
}

impl<T: Scalar> UniSeries<T> {
    /// The zero series at the given truncation.
    pub fn zero(trunc: usize) -> Self {
        UniSeries {
            trunc,
            coeffs: vec![T::zero(); trunc],
        }
    }

    /// The constant series 1; requires trunc >= 1 to hold the constant term.
    pub fn one(trunc: usize) -> Self {
        assert!(
            trunc >= 1,
            "truncation must leave room for the constant term"
        );
        let mut s = Self::zero(trunc);
        s.coeffs[0] = T::one();
        s
    }

    /// Series with the given coefficients; the truncation is their count.
    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        UniSeries {
            trunc: coeffs.len(),
            coeffs,
        }
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    /// Coefficient of Z^degree; panics if the degree is not represented.
    pub fn coeff(&self, degree: usize) -> &T {
        assert!(
            degree < self.trunc,
            "degree {degree} >= trunc {}",
            self.trunc
        );
        &self.coeffs[degree]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Mutable coefficient access; panics if the degree is not represented.
    pub fn coeff_mut(&mut self, degree: usize) -> &mut T {
        assert!(degree < self.trunc);
        &mut self.coeffs[degree]
    }

    pub fn is_zero_series(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Copy of the series cut down to a smaller truncation.
    pub fn truncate(&self, trunc: usize) -> Self {
        assert!(trunc <= self.trunc, "cannot extend a truncated series");
        UniSeries {
            trunc,
            coeffs: self.coeffs[..trunc].to_vec(),
        }
    }

    pub fn scale(&self, factor: &T) -> Self {
        UniSeries {
            trunc: self.trunc,
            coeffs: self
                .coeffs
                .iter()
                .map(|c| c.clone() * factor.clone())
                .collect(),
        }
    }

    /// e^{scalar Z}: coefficient of Z^i is scalar^i / i!, built by the
    /// recurrence c_i = c_{i-1} * scalar / i so only small integers are
    /// ever lifted into the scalar type.
    pub fn exp_scalar(scalar: &T, trunc: usize) -> Self {
        assert!(trunc >= 1);
        let mut s = Self::zero(trunc);
        let mut c = T::one();
        s.coeffs[0] = c.clone();
        for i in 1..trunc {
            let denom = T::from_usize(i).expect("small integer fits the scalar");
            c = c * scalar.clone() / denom;
            s.coeffs[i] = c.clone();
        }
        s
    }

    /// Series logarithm of a series with constant term 1:
    /// log(1 + w) = sum_{i>=1} (-1)^{i+1} w^i / i.
    pub fn log(&self) -> Self {
        assert!(
            self.trunc >= 1 && self.coeffs[0].is_one(),
            "series logarithm needs constant term 1"
        );
        let mut w = self.clone();
        w.coeffs[0] = T::zero();
        let mut acc = Self::zero(self.trunc);
        let mut pow = Self::one(self.trunc);
        for i in 1..self.trunc {
            pow = &pow * &w;
            let denom = T::from_usize(i).expect("small integer fits the scalar");
            let coef = if i % 2 == 1 {
                T::one() / denom
            } else {
                -(T::one() / denom)
            };
            acc = &acc + &pow.scale(&coef);
        }
        acc
    }
}

impl<T: Scalar> Add for &UniSeries<T> {
    type Output = UniSeries<T>;

    fn add(self, rhs: Self) -> UniSeries<T> {
        let trunc = self.trunc.min(rhs.trunc);
        let mut out = UniSeries::zero(trunc);
        for i in 0..trunc {
            out.coeffs[i] = self.coeffs[i].clone() + rhs.coeffs[i].clone();
        }
        out
    }
}

impl<T: Scalar> Sub for &UniSeries<T> {
    type Output = UniSeries<T>;

    fn sub(self, rhs: Self) -> UniSeries<T> {
        let trunc = self.trunc.min(rhs.trunc);
        let mut out = UniSeries::zero(trunc);
        for i in 0..trunc {
            out.coeffs[i] = self.coeffs[i].clone() - rhs.coeffs[i].clone();
        }
        out
    }
}

impl<T: Scalar> Neg for &UniSeries<T> {
    type Output = UniSeries<T>;

    fn neg(self) -> UniSeries<T> {
        UniSeries {
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<T: Scalar> Mul for &UniSeries<T> {
    type Output = UniSeries<T>;

    fn mul(self, rhs: Self) -> UniSeries<T> {
        let trunc = self.trunc.min(rhs.trunc);
        let mut out: UniSeries<T> = UniSeries::zero(trunc);
        for (i, a) in self.coeffs.iter().enumerate().take(trunc) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(trunc - i) {
                if b.is_zero() {
                    continue;
                }
                let prod = a.clone() * b.clone();
                let slot = &mut out.coeffs[i + j];
                *slot = slot.clone() + prod;
            }
        }
        out
    }
}
