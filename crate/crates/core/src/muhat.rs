//! The linear map sending powers of z to signed sums of two-variable
//! exponentials, its continuous extension to log-coordinates, and the
//! sparse tensor model of loop powers it encodes.
//!
//! Writing z = e^Z, the map sends z^k to a branch-dependent sum of
//! e^{iX} e^{jY} terms. It satisfies, exactly at every truncation,
//!
//!   (e^{-X} e^{Y} - 1) * image(f) = f(e^X) - f(e^Y)
//!
//! for every Laurent polynomial f, and extends continuously along the
//! augmentation filtration. On log-coordinates the image of Z is -phi,
//! which is where the Bernoulli numbers enter; recovering that image from
//! z-power images through an exact matrix inversion reproduces the
//! two-parameter Bernoulli formula coefficient by coefficient.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::arith::{binomial, factorial};
use crate::bernoulli::bernoulli_number;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rational::{rat, Int, Rational};
use crate::rng::SplitMix64;
use crate::series::{divide_by_linear, phi, BiSeries, LaurentPoly, LinearForm};

type QBi = BiSeries<Rational>;
type QLaurent = LaurentPoly<Rational>;
type QMatrix = Matrix<Rational>;

/// Which variable an exponential substitution lands in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
}

/// Image of z^k:
///
///   k > 0:  -sum_{i=1}^{k}     e^{iX}  e^{(k-i)Y}
///   k = 0:   0
///   k < 0:   sum_{i=0}^{|k|-1} e^{-iX} e^{(k+i)Y}
pub fn z_power_image(k: i64, trunc: usize) -> QBi {
    assert!(trunc >= 1);
    let mut acc = QBi::zero(trunc);
    if k > 0 {
        for i in 1..=k {
            acc = &acc - &QBi::exp_monomial(i, k - i, trunc);
        }
    } else {
        for i in 0..-k {
            acc = &acc + &QBi::exp_monomial(-i, k + i, trunc);
        }
    }
    acc
}

/// Linear extension of [`z_power_image`] to Laurent polynomials.
pub fn laurent_image(f: &QLaurent, trunc: usize) -> QBi {
    let mut acc = QBi::zero(trunc);
    for (exp, coeff) in f.terms() {
        acc = &acc + &z_power_image(exp, trunc).scale(coeff);
    }
    acc
}

/// Substitutes z by e^X or e^Y termwise: z^j becomes e^{jX} (or e^{jY}),
/// negative exponents included.
pub fn exp_substitution(f: &QLaurent, axis: Axis, trunc: usize) -> QBi {
    let mut acc = QBi::zero(trunc);
    for (exp, coeff) in f.terms() {
        let e = match axis {
            Axis::X => QBi::exp_monomial(exp, 0, trunc),
            Axis::Y => QBi::exp_monomial(0, exp, trunc),
        };
        acc = &acc + &e.scale(coeff);
    }
    acc
}

/// Checks (e^{-X} e^{Y} - 1) * image(f) = f(e^X) - f(e^Y) at the given
/// truncation. This is the defining identity of the map; it holds for
/// every Laurent polynomial.
pub fn fundamental_identity_check(f: &QLaurent, trunc: usize) -> bool {
    let lhs = &(&QBi::exp_monomial(-1, 1, trunc) - &QBi::one(trunc)) * &laurent_image(f, trunc);
    let rhs = &exp_substitution(f, Axis::X, trunc) - &exp_substitution(f, Axis::Y, trunc);
    lhs == rhs
}

/// Checks the scaled variant (Y - X) * image(f) = (f(e^X) - f(e^Y)) * phi,
/// obtained by multiplying the defining identity by the Bernoulli series.
pub fn linear_form_identity_check(f: &QLaurent, trunc: usize) -> bool {
    assert!(trunc >= 2);
    let lhs = &QBi::y_minus_x(trunc) * &laurent_image(f, trunc);
    let rhs = &(&exp_substitution(f, Axis::X, trunc) - &exp_substitution(f, Axis::Y, trunc))
        * &phi(trunc);
    lhs == rhs
}

/// Image of Z^k (Z = log z) for k >= 1, computed by exact division:
/// (Y - X) * image(Z^k) = (X^k - Y^k) * phi, so the image is the quotient.
///
/// The result carries trunc one less than the argument, and lies in
/// F_{k-1}: all its coefficients of total degree < k-1 vanish. A
/// `NotDivisible` error cannot occur unless the phi identity itself is
/// broken.
pub fn log_power_image(k: u64, trunc: usize) -> Result<QBi> {
    if k < 1 {
        return Err(Error::domain("1 <= k"));
    }
    assert!(trunc >= 2);
    let numerator = &QBi::x_pow_minus_y_pow(k as usize, trunc) * &phi(trunc);
    divide_by_linear(&numerator, LinearForm::YMinusX)
}

/// Square matrix of order n+1 with entries k^i/i! (both indices 1-based):
/// the coordinates of the z-power images in terms of log-power images,
/// truncated at total degree n+1.
pub fn power_coeff_matrix(n: u64) -> QMatrix {
    let order = (n + 1) as usize;
    QMatrix::from_fn(order, |r, c| {
        let k = Int::from(r as u64 + 1);
        let i = c as u64 + 1;
        Rational::new(crate::arith::int_pow(&k, i), factorial(i))
    })
}

/// First row of the inverse of [`power_coeff_matrix`], which recovers the
/// image of Z from the z-power images.
pub fn inversion_first_row(n: u64) -> Result<Vec<Rational>> {
    let inverse = power_coeff_matrix(n).invert()?;
    Ok(inverse.row(0).to_vec())
}

/// Image of Z reconstructed as sum_k a_k * image(z^k), with a_k the first
/// row of the inverted coefficient matrix. The reconstruction is exact
/// only modulo total degree n+1, so trunc must not exceed n+1; the result
/// equals -phi at that truncation.
pub fn log_image_via_inversion(n: u64, trunc: usize) -> Result<QBi> {
    if trunc > (n + 1) as usize {
        return Err(Error::domain("trunc <= n + 1"));
    }
    assert!(trunc >= 1);
    let row = inversion_first_row(n)?;
    let mut acc = QBi::zero(trunc);
    for (idx, a_k) in row.iter().enumerate() {
        let k = idx as i64 + 1;
        acc = &acc + &z_power_image(k, trunc).scale(a_k);
    }
    Ok(acc)
}

/// Sparse rational combination of pairs (i, j) with j != 0, modeling
/// loop-power tensors gamma^i (x) |gamma^j|. Pairs with j = 0 stand for
/// the class of a constant loop, which is zero by convention, so they are
/// dropped on insertion rather than stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorElem {
    terms: BTreeMap<(i64, i64), Rational>,
}

impl TensorElem {
    pub fn zero() -> Self {
        TensorElem {
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((i64, i64), Rational)>) -> Self {
        let mut t = Self::zero();
        for (pair, coeff) in terms {
            t.insert_add(pair, coeff);
        }
        t
    }

    fn insert_add(&mut self, pair: (i64, i64), coeff: Rational) {
        if pair.1 == 0 || coeff.is_zero() {
            return; // constant loop class, or nothing to add
        }
        match self.terms.remove(&pair) {
            None => {
                self.terms.insert(pair, coeff);
            }
            Some(old) => {
                let sum = old + coeff;
                if !sum.is_zero() {
                    self.terms.insert(pair, sum);
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

    /// Terms in lexicographic pair order.
    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), &Rational)> {
        self.terms.iter().map(|(&p, c)| (p, c))
    }

    /// Embeds the tensor into the two-variable series ring by
    /// (i, j) -> e^{iX} e^{jY}.
    pub fn to_biseries(&self, trunc: usize) -> QBi {
        let mut acc = QBi::zero(trunc);
        for ((i, j), coeff) in self.terms() {
            acc = &acc + &QBi::exp_monomial(i, j, trunc).scale(coeff);
        }
        acc
    }
}

/// Tensor model of the loop operation on the k-th power of a single
/// simple loop:
///
///   k > 0:  -sum_{i=1}^{k-1}   (i, k-i)
///   k = 0:   0
///   k < 0:   sum_{i=0}^{|k|-1} (-i, k+i)
///
/// For k > 0 the i = k summand of [`z_power_image`] would carry j = 0;
/// it is the constant-class term and is absent here, so the two agree up
/// to an explicit -e^{kX} correction. For k <= 0 no j = 0 pair arises and
/// the embedding matches the z-power image exactly.
pub fn simple_loop_power(k: i64) -> TensorElem {
    let mut t = TensorElem::zero();
    if k > 0 {
        for i in 1..k {
            t.insert_add((i, k - i), rat(-1, 1));
        }
    } else {
        for i in 0..-k {
            t.insert_add((-i, k + i), rat(1, 1));
        }
    }
    t
}

/// Closed-form expansion of the image of log z:
///
///   -1 - X/2 + Y/2 - sum_{k>=1} B_{2k}/(2k)! sum_{j=0}^{2k} (-1)^j C(2k,j) X^j Y^{2k-j}
///
/// Equals [`log_power_image`]`(1, trunc + 1)`, the quotient route to the
/// same series.
pub fn mu_log_closed_form(trunc: usize) -> QBi {
    assert!(trunc >= 1);
    let mut acc = QBi::zero(trunc);
    *acc.coeff_mut(0, 0) = rat(-1, 1);
    if trunc >= 2 {
        *acc.coeff_mut(1, 0) = rat(-1, 2);
        *acc.coeff_mut(0, 1) = rat(1, 2);
    }
    let mut even = 2;
    while even < trunc {
        let scale = bernoulli_number(even as u64) / Rational::from_integer(factorial(even as u64));
        for j in 0..=even {
            let mut term = scale.clone() * Rational::from_integer(binomial(even as u64, j as i64));
            if j % 2 == 1 {
                term = -term;
            }
            let slot = acc.coeff_mut(j, even - j);
            *slot = slot.clone() - term;
        }
        even += 2;
    }
    acc
}

/// Deterministic corpus of pseudo-random Laurent polynomials for identity
/// sweeps: up to `max_terms` terms, exponents in [-exp_bound, exp_bound],
/// small rational coefficients.
pub fn laurent_corpus(seed: u64, cases: usize, max_terms: usize, exp_bound: i64) -> Vec<QLaurent> {
    let mut rng = SplitMix64::new(seed);
    (0..cases)
        .map(|_| {
            let terms = rng.next_in(1, max_terms as i64) as usize;
            QLaurent::from_terms((0..terms).map(|_| {
                let exp = rng.next_in(-exp_bound, exp_bound);
                let mut numer = rng.next_in(-9, 9);
                if numer == 0 {
                    numer = 1;
                }
                let denom = rng.next_in(1, 4);
                (exp, rat(numer, denom))
            }))
        })
        .collect()
}
