//! Truncated formal power series in two indeterminates X and Y.
//!
//! Truncation is by total degree: a series "mod F_p" keeps exactly the
//! terms X^a Y^b with a + b < p. Storage is triangular-dense, one slice per
//! total degree, which keeps products cache-friendly and exact.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::series::uni::UniSeries;

/// Offset of the start of the total-degree-d slice.
fn slice_start(d: usize) -> usize {
    d * (d + 1) / 2
}

/// Position of X^a Y^b: slice a+b, entries ordered by ascending X-degree.
fn position(a: usize, b: usize) -> usize {
    slice_start(a + b) + a
}

/// Two-variable series modulo F_trunc.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiSeries<T> {
    trunc: usize,
    coeffs: Vec<T>,
}

impl<T: Scalar> BiSeries<T> {
    pub fn zero(trunc: usize) -> Self {
        BiSeries {
            trunc,
            coeffs: vec![T::zero(); slice_start(trunc)],
        }
    }

    pub fn one(trunc: usize) -> Self {
        Self::monomial(0, 0, T::one(), trunc)
    }

    /// coeff * X^a Y^b; requires a + b < trunc.
    pub fn monomial(a: usize, b: usize, coeff: T, trunc: usize) -> Self {
        assert!(a + b < trunc, "monomial degree {} >= trunc {trunc}", a + b);
        let mut s = Self::zero(trunc);
        s.coeffs[position(a, b)] = coeff;
        s
    }

    /// Y - X at the given truncation (requires trunc >= 2).
    pub fn y_minus_x(trunc: usize) -> Self {
        assert!(trunc >= 2, "a linear form needs trunc >= 2");
        let mut s = Self::zero(trunc);
        s.coeffs[position(0, 1)] = T::one();
        s.coeffs[position(1, 0)] = -T::one();
        s
    }

    /// X^k - Y^k truncated; degrees >= trunc simply vanish.
    pub fn x_pow_minus_y_pow(k: usize, trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        if k < trunc {
            s.coeffs[position(k, 0)] = T::one();
            s.coeffs[position(0, k)] = -T::one();
        }
        s
    }

    /// e^{iX} e^{jY}: coefficient of X^a Y^b is i^a j^b / (a! b!), with
    /// 0^0 = 1 so that e^{0X} = 1. Built from the two one-variable Taylor
    /// rows, lifting only small integers into the scalar type.
    pub fn exp_monomial(i: i64, j: i64, trunc: usize) -> Self {
        assert!(trunc >= 1);
        let lift = |v: i64| T::from_i64(v).expect("small integer fits the scalar");
        let taylor_row = |base: i64| -> Vec<T> {
            let mut row = Vec::with_capacity(trunc);
            row.push(T::one());
            for deg in 1..trunc {
                let denom = T::from_usize(deg).expect("small integer fits the scalar");
                let prev = row[deg - 1].clone();
                row.push(prev * lift(base) / denom);
            }
            row
        };
        let xs = taylor_row(i);
        let ys = taylor_row(j);
        let mut s = Self::zero(trunc);
        for (a, xa) in xs.iter().enumerate() {
            for (b, yb) in ys.iter().take(trunc - a).enumerate() {
                s.coeffs[position(a, b)] = xa.clone() * yb.clone();
            }
        }
        s
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    /// Coefficient of X^a Y^b; panics if a + b is not represented.
    pub fn coeff(&self, a: usize, b: usize) -> &T {
        assert!(
            a + b < self.trunc,
            "degree {} >= trunc {}",
            a + b,
            self.trunc
        );
        &self.coeffs[position(a, b)]
    }

    /// Mutable coefficient access; panics if a + b is not represented.
    pub fn coeff_mut(&mut self, a: usize, b: usize) -> &mut T {
        assert!(a + b < self.trunc);
        &mut self.coeffs[position(a, b)]
    }

    pub fn is_zero_series(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// True when every coefficient of total degree < bound vanishes,
    /// i.e. the series lies in F_bound.
    pub fn vanishes_below_degree(&self, bound: usize) -> bool {
        let cut = slice_start(bound.min(self.trunc));
        self.coeffs[..cut].iter().all(|c| c.is_zero())
    }

    /// Copy of the series cut down to a smaller truncation.
    pub fn truncate(&self, trunc: usize) -> Self {
        assert!(trunc <= self.trunc, "cannot extend a truncated series");
        BiSeries {
            trunc,
            coeffs: self.coeffs[..slice_start(trunc)].to_vec(),
        }
    }

    /// Structural equality of all terms of total degree < p; both operands
    /// must carry at least that much precision.
    pub fn agrees_mod(&self, other: &Self, p: usize) -> bool {
        assert!(
            self.trunc >= p && other.trunc >= p,
            "operands carry less precision than the comparison degree"
        );
        self.coeffs[..slice_start(p)] == other.coeffs[..slice_start(p)]
    }

    pub fn scale(&self, factor: &T) -> Self {
        BiSeries {
            trunc: self.trunc,
            coeffs: self
                .coeffs
                .iter()
                .map(|c| c.clone() * factor.clone())
                .collect(),
        }
    }

    /// Substitutes X = Y = Z: the coefficient of Z^d is the sum of the
    /// degree-d slice. Divisibility by Y - X is exactly the vanishing of
    /// this diagonal.
    pub fn diagonal(&self) -> UniSeries<T> {
        let mut out = vec![T::zero(); self.trunc];
        for (d, slot) in out.iter_mut().enumerate() {
            let mut acc = T::zero();
            for a in 0..=d {
                acc = acc + self.coeffs[slice_start(d) + a].clone();
            }
            *slot = acc;
        }
        UniSeries::from_coeffs(out)
    }

    /// Swaps the roles of X and Y.
    pub fn swap_vars(&self) -> Self {
        let mut out = Self::zero(self.trunc);
        for d in 0..self.trunc {
            for a in 0..=d {
                out.coeffs[position(d - a, a)] = self.coeffs[position(a, d - a)].clone();
            }
        }
        out
    }

    /// Iterates (a, b, coeff) over nonzero terms: total degree ascending,
    /// X-degree descending within a degree (the emission order of the
    /// text format).
    pub fn nonzero_terms(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        (0..self.trunc).flat_map(move |d| {
            (0..=d).rev().filter_map(move |a| {
                let c = &self.coeffs[position(a, d - a)];
                (!c.is_zero()).then_some((a, d - a, c))
            })
        })
    }
}

impl<T: Scalar> Add for &BiSeries<T> {
    type Output = BiSeries<T>;

    fn add(self, rhs: Self) -> BiSeries<T> {
        let trunc = self.trunc.min(rhs.trunc);
        let mut out = BiSeries::zero(trunc);
        for (i, slot) in out.coeffs.iter_mut().enumerate() {
            *slot = self.coeffs[i].clone() + rhs.coeffs[i].clone();
        }
        out
    }
}

impl<T: Scalar> Sub for &BiSeries<T> {
    type Output = BiSeries<T>;

    fn sub(self, rhs: Self) -> BiSeries<T> {
        let trunc = self.trunc.min(rhs.trunc);
        let mut out = BiSeries::zero(trunc);
        for (i, slot) in out.coeffs.iter_mut().enumerate() {
            *slot = self.coeffs[i].clone() - rhs.coeffs[i].clone();
        }
        out
    }
}

impl<T: Scalar> Neg for &BiSeries<T> {
    type Output = BiSeries<T>;

    fn neg(self) -> BiSeries<T> {
        BiSeries {
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<T: Scalar> Mul for &BiSeries<T> {
    type Output = BiSeries<T>;

    /// Full convolution with an early cutoff at total degree >= trunc.
    fn mul(self, rhs: Self) -> BiSeries<T> {
        let trunc = self.trunc.min(rhs.trunc);
        let mut out: BiSeries<T> = BiSeries::zero(trunc);
        for d1 in 0..self.trunc.min(trunc) {
            for a1 in 0..=d1 {
                let lhs_c = &self.coeffs[slice_start(d1) + a1];
                if lhs_c.is_zero() {
                    continue;
                }
                let d2_max = (trunc - d1).min(rhs.trunc);
                for d2 in 0..d2_max {
                    for a2 in 0..=d2 {
                        let rhs_c = &rhs.coeffs[slice_start(d2) + a2];
                        if rhs_c.is_zero() {
                            continue;
                        }
                        let slot = &mut out.coeffs[position(a1 + a2, d1 + d2 - a1 - a2)];
                        *slot = slot.clone() + lhs_c.clone() * rhs_c.clone();
                    }
                }
            }
        }
        out
    }
}

/// Which linear form to divide by.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinearForm {
    /// Y - X (equivalently -X + Y).
    YMinusX,
    /// X - Y.
    XMinusY,
}

/// Exact division of a series by a degree-one form.
///
/// The quotient q satisfies q * form = s mod F_{trunc(s)} and carries one
/// degree less certainty than the input. Divisibility is exactly the
/// vanishing of the diagonal substitution X = Y; a nonzero diagonal means
/// the identity that produced `s` is broken upstream, and is reported as
/// [`Error::NotDivisible`].
pub fn divide_by_linear<T: Scalar>(s: &BiSeries<T>, form: LinearForm) -> Result<BiSeries<T>> {
    assert!(s.trunc >= 1, "cannot divide a series with no terms at all");
    if !s.diagonal().is_zero_series() {
        return Err(Error::NotDivisible);
    }
    let out_trunc = s.trunc - 1;
    let mut q: BiSeries<T> = BiSeries::zero(out_trunc);
    // Solve s_{a,b} = q_{a,b-1} - q_{a-1,b} slice by slice: within the
    // degree-d slice of q, q_{a,b} = s_{a,b+1} + q_{a-1,b+1}.
    for d in 0..out_trunc {
        for a in 0..=d {
            let b = d - a;
            let mut v = s.coeffs[position(a, b + 1)].clone();
            if a > 0 {
                v = v + q.coeffs[position(a - 1, b + 1)].clone();
            }
            q.coeffs[position(a, b)] = v;
        }
    }
    Ok(match form {
        LinearForm::YMinusX => q,
        LinearForm::XMinusY => -&q,
    })
}
