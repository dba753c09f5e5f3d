//! Randomized algebraic properties of the exact kernels.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::collection::vec;
use proptest::prelude::*;

use bkron::arith::weighted_power_sum;
use bkron::bernoulli::{bernoulli_generalized, bernoulli_number};
use bkron::muhat::{fundamental_identity_check, laurent_image, linear_form_identity_check};
use bkron::rational::{rat, rat_int};
use bkron::series::{divide_by_linear, LinearForm};
use bkron::{QBiSeries, QLaurent, QMatrix, QSeries, Rational};

fn triangle(trunc: usize) -> usize {
    trunc * (trunc + 1) / 2
}

/// A dense random series with small integer coefficients.
fn bi_series(max_trunc: usize) -> impl Strategy<Value = QBiSeries> {
    (1..=max_trunc).prop_flat_map(|trunc| {
        vec(-9i64..=9, triangle(trunc)).prop_map(move |coeffs| {
            let mut s = QBiSeries::zero(trunc);
            let mut index = 0;
            for d in 0..trunc {
                for a in 0..=d {
                    *s.coeff_mut(a, d - a) = rat_int(coeffs[index]);
                    index += 1;
                }
            }
            s
        })
    })
}

fn laurent_poly() -> impl Strategy<Value = QLaurent> {
    vec((-8i64..=8, -9i64..=9, 1i64..=4), 1..=5).prop_map(|terms| {
        QLaurent::from_terms(
            terms
                .into_iter()
                .map(|(exp, numer, denom)| (exp, rat(numer, denom))),
        )
    })
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=20).prop_map(|(n, d)| rat(n, d))
}

fn square_matrix(max_order: usize) -> impl Strategy<Value = QMatrix> {
    (1..=max_order).prop_flat_map(|order| {
        vec(-9i64..=9, order * order).prop_map(move |entries| {
            let mut index = 0;
            QMatrix::from_fn(order, |_, _| {
                let v = rat_int(entries[index]);
                index += 1;
                v
            })
        })
    })
}

proptest! {
    #[test]
    fn bi_product_is_associative(
        u in bi_series(8),
        v in bi_series(8),
        w in bi_series(8),
    ) {
        prop_assert_eq!(&(&u * &v) * &w, &u * &(&v * &w));
    }

    #[test]
    fn bi_product_distributes(
        u in bi_series(8),
        v in bi_series(8),
        w in bi_series(8),
    ) {
        let lhs = &u * &(&v + &w);
        let rhs = &(&u * &v) + &(&u * &w);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bi_product_commutes(u in bi_series(7), v in bi_series(7)) {
        prop_assert_eq!(&u * &v, &v * &u);
    }

    #[test]
    fn linear_division_round_trips(q in bi_series(10)) {
        let trunc = q.trunc();
        let product = &q * &QBiSeries::y_minus_x(trunc + 1);
        let back = divide_by_linear(&product, LinearForm::YMinusX).unwrap();
        prop_assert_eq!(back, q.truncate(trunc.min(product.trunc() - 1)));
    }

    #[test]
    fn series_log_inverts_exp(numer in -6i64..=6, denom in 1i64..=4, trunc in 1usize..=12) {
        let c = rat(numer, denom);
        let log = QSeries::exp_scalar(&c, trunc).log();
        let mut expected = QSeries::zero(trunc);
        if trunc > 1 {
            *expected.coeff_mut(1) = c;
        }
        prop_assert_eq!(log, expected);
    }

    #[test]
    fn weighted_power_sum_symmetric(m in 0u64..=8, a_seed in 0u64..=8, k in 1u64..=15) {
        let a = a_seed.min(m);
        prop_assert_eq!(
            weighted_power_sum(a, m, k).unwrap(),
            weighted_power_sum(m - a, m, k).unwrap(),
        );
    }

    #[test]
    fn rational_arithmetic_stays_canonical(
        x in small_rational(),
        y in small_rational(),
        z in small_rational(),
    ) {
        // re-normalizing must not change the representation
        let value = (x + y * z.clone()) - z;
        let renormalized = Rational::new(value.numer().clone(), value.denom().clone());
        prop_assert_eq!(value.numer(), renormalized.numer());
        prop_assert_eq!(value.denom(), renormalized.denom());
        prop_assert!(value.denom().is_positive());
        prop_assert!(value.numer().gcd(value.denom()).is_one()
            || value.numer().is_zero() && value.denom().is_one());
    }

    #[test]
    fn inverse_really_inverts(m in square_matrix(6)) {
        // random integer matrices are nearly always invertible; when one
        // is singular the error itself is the contract being exercised
        match m.invert() {
            Ok(inverse) => {
                let order = m.order();
                prop_assert_eq!(m.mul(&inverse), QMatrix::identity(order));
                prop_assert_eq!(inverse.mul(&m), QMatrix::identity(order));
            }
            Err(e) => prop_assert_eq!(e, bkron::Error::Singular),
        }
    }

    #[test]
    fn generalized_formula_independent_of_a(m in 0u64..=12, extra in 0u64..=8, a1 in 0u64..=12, a2 in 0u64..=12) {
        let n = m + extra;
        let a1 = a1.min(m);
        let a2 = a2.min(m);
        prop_assert_eq!(
            bernoulli_generalized(m, a1, n).unwrap(),
            bernoulli_generalized(m, a2, n).unwrap(),
        );
        prop_assert_eq!(
            bernoulli_generalized(m, a1, n).unwrap(),
            bernoulli_number(m),
        );
    }
}

proptest! {
    // heavier series identities: fewer cases, still fresh inputs every run
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn defining_identity_holds_on_random_laurents(f in laurent_poly()) {
        prop_assert!(fundamental_identity_check(&f, 8));
    }

    #[test]
    fn linear_form_identity_holds_on_random_laurents(f in laurent_poly()) {
        prop_assert!(linear_form_identity_check(&f, 8));
    }

    #[test]
    fn image_of_augmentation_powers_deepens(
        multiplier in laurent_poly(),
        p in 1usize..=5,
    ) {
        let z_minus_one = QLaurent::from_terms([(1, rat_int(1)), (0, rat_int(-1))]);
        let f = &z_minus_one.pow(p as u32) * &multiplier;
        let image = laurent_image(&f, p + 3);
        prop_assert!(image.vanishes_below_degree(p - 1));
    }
}
