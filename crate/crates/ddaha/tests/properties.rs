//! Property tests for the structural invariants.

use ddaha::dunkl::{divided_difference, LaurentPolynomial};
use ddaha::linalg::{rank_of_vectors, RationalMatrix};
use ddaha::rational::{rat, Rational};
use ddaha::roots::{AffineRoot, Weight};
use ddaha::weyl::{min_coset_rep, is_min_rep, AffineWeylElement};
use ddaha::roots::OrderedPartition;
use num::Zero;
use proptest::prelude::*;

fn word_strategy(n: usize) -> impl Strategy<Value = AffineWeylElement> {
    prop::collection::vec(0..(n + 2), 0..10).prop_map(move |letters| {
        let mut x = AffineWeylElement::identity(n);
        for pick in letters {
            let g = if pick < n {
                AffineWeylElement::simple_reflection(n, pick)
            } else if pick == n {
                AffineWeylElement::pi(n)
            } else {
                AffineWeylElement::pi(n).inverse()
            };
            x = x.compose(&g);
        }
        x
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn length_equals_inversions_equals_word_length(x in word_strategy(3)) {
        let (k, letters) = x.reduced_word();
        prop_assert_eq!(x.length(), x.inversion_set().len());
        prop_assert_eq!(x.length(), letters.len());
        prop_assert_eq!(AffineWeylElement::from_word(3, k, &letters), x);
    }

    #[test]
    fn group_inverse_and_root_action(x in word_strategy(3), y in word_strategy(3)) {
        prop_assert!(x.compose(&x.inverse()).is_identity());
        // action is a homomorphism on roots
        let alpha = AffineRoot::new(0, 2, 1);
        let via_product = x.compose(&y).act_root(&alpha);
        let via_steps = x.act_root(&y.act_root(&alpha));
        prop_assert_eq!(via_product, via_steps);
    }

    #[test]
    fn affine_action_is_a_group_action(
        x in word_strategy(3),
        y in word_strategy(3),
        coords in prop::collection::vec(-6i64..=6, 3),
        level in 1i64..=4,
    ) {
        let zeta = Weight::new(
            coords.iter().map(|&c| Rational::from_integer(c.into())).collect(),
            Rational::from_integer(level.into()),
        );
        let via_product = x.compose(&y).act_weight(&zeta);
        let via_steps = x.act_weight(&y.act_weight(&zeta));
        prop_assert_eq!(via_product, via_steps);
    }

    #[test]
    fn coset_factorization_is_exact(x in word_strategy(4), split in 1usize..4) {
        let beta = OrderedPartition::new(vec![split, 4 - split]);
        let (w, u) = min_coset_rep(&x, &beta);
        prop_assert!(is_min_rep(&w, &beta));
        prop_assert!(u.is_finite());
        prop_assert_eq!(w.compose(&u), x.clone());
        prop_assert_eq!(w.length() + u.length(), x.length());
    }

    #[test]
    fn kernel_satisfies_rank_nullity(
        entries in prop::collection::vec((-5i64..=5, 1i64..=3), 12)
    ) {
        let rows: Vec<Vec<Rational>> = entries
            .chunks(4)
            .map(|row| row.iter().map(|&(p, q)| rat(p, q)).collect())
            .collect();
        let m = RationalMatrix::from_rows(rows);
        let kernel = m.kernel();
        prop_assert_eq!(m.rank() + kernel.len(), 4);
        prop_assert_eq!(rank_of_vectors(&kernel), kernel.len());
        for v in &kernel {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(Rational::is_zero));
        }
    }

    #[test]
    fn divided_difference_certifies_by_multiplication(
        exps in prop::collection::vec((-3i64..=3, -3i64..=3, (-2i64..=2, 1i64..=2)), 1..4)
    ) {
        // dd(f) * (1 - z^{-alpha}) = f - s_alpha(f), exactly
        let mut f = LaurentPolynomial::zero();
        for (a, b, (p, q)) in exps {
            f.add_term(vec![a, b], rat(p, q));
        }
        let dd = divided_difference(0, 1, &f);
        let one_minus = LaurentPolynomial::one(2)
            .sub(&LaurentPolynomial::monomial(vec![-1, 1], Rational::from_integer(1.into())));
        prop_assert_eq!(dd.mul(&one_minus), f.sub(&f.swap_slots(0, 1)));
    }
}
