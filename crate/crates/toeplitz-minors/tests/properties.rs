//! Cross-module invariants: randomized algebraic laws on the polynomial
//! ring, and brute-force oracles for the class-sum and determinant
//! formulas that stay independent of the implementation paths they
//! check.

mod common;

use std::collections::BTreeMap;

use common::{all_perms, cycle_type};
use num::rational::BigRational;
use num::{BigInt, One};
use proptest::prelude::*;
use toeplitz_minors::{
    bd_poly, character, delta, f_factor, inner_product, partitions_of, perp, schur, skew_schur,
    tw_poly, tw_poly_auto, Partition, SymPoly,
};

fn arb_sympoly() -> impl Strategy<Value = SymPoly> {
    prop::collection::vec(
        (
            prop::collection::btree_map(1u32..=3, 1u32..=2, 0..=2usize),
            prop::collection::btree_map(1u32..=3, 1u32..=2, 0..=2usize),
            -4i64..=4,
        ),
        0..=3,
    )
    .prop_map(|descriptors| {
        let mut out = SymPoly::zero();
        for (plain, tilde, c) in descriptors {
            let mut term = SymPoly::constant(BigRational::from(BigInt::from(c)));
            for (k, e) in plain {
                term = &term * &SymPoly::p(k).pow(e);
            }
            for (k, e) in tilde {
                term = &term * &SymPoly::p_tilde(k).pow(e);
            }
            out = &out + &term;
        }
        out
    })
}

fn arb_small_partition() -> impl Strategy<Value = Partition> {
    (0u32..=4).prop_flat_map(|w| {
        let shapes = partitions_of(w);
        (0..shapes.len()).prop_map(move |i| shapes[i].clone())
    })
}

proptest! {
    #[test]
    fn addition_commutes(f in arb_sympoly(), g in arb_sympoly()) {
        prop_assert_eq!(&f + &g, &g + &f);
    }

    #[test]
    fn multiplication_commutes_and_associates(
        f in arb_sympoly(),
        g in arb_sympoly(),
        h in arb_sympoly(),
    ) {
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
    }

    #[test]
    fn multiplication_distributes(f in arb_sympoly(), g in arb_sympoly(), h in arb_sympoly()) {
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
    }

    #[test]
    fn additive_inverse_and_identities(f in arb_sympoly()) {
        prop_assert!((&f - &f).is_zero());
        prop_assert_eq!(&f + &SymPoly::zero(), f.clone());
        prop_assert_eq!(&f * &SymPoly::one(), f.clone());
        prop_assert!((&f * &SymPoly::zero()).is_zero());
    }

    #[test]
    fn swap_families_is_an_involutive_ring_map(f in arb_sympoly(), g in arb_sympoly()) {
        prop_assert_eq!(f.swap_families().swap_families(), f.clone());
        prop_assert_eq!(
            (&f * &g).swap_families(),
            &f.swap_families() * &g.swap_families()
        );
    }

    #[test]
    fn inner_product_is_symmetric_and_bilinear(
        f in arb_sympoly(),
        g in arb_sympoly(),
        h in arb_sympoly(),
    ) {
        prop_assert_eq!(inner_product(&f, &g), inner_product(&g, &f));
        prop_assert_eq!(
            inner_product(&(&f + &g), &h),
            inner_product(&f, &h) + inner_product(&g, &h)
        );
    }

    #[test]
    fn perp_is_adjoint_to_multiplication(
        f in arb_sympoly(),
        g in arb_sympoly(),
        u in arb_sympoly(),
    ) {
        prop_assert_eq!(
            inner_product(&perp(&f, &u), &g),
            inner_product(&u, &(&f * &g))
        );
    }

    #[test]
    fn power_sum_perp_is_a_derivation(u in arb_sympoly(), v in arb_sympoly(), n in 1u32..=3) {
        let pn = SymPoly::p(n);
        prop_assert_eq!(
            perp(&pn, &(&u * &v)),
            &(&perp(&pn, &u) * &v) + &(&u * &perp(&pn, &v))
        );
    }

    #[test]
    fn delta_matches_its_perp_expansion(raw in arb_sympoly()) {
        // the cross operator equals perp of sum_nu s_nu st_nu, truncated
        // at the degree of the input; checked on inputs of degree <= 4
        let mut f = SymPoly::zero();
        for (m, c) in raw.terms() {
            if m.degree() <= 4 {
                f.add_term(m.clone(), c.clone());
            }
        }
        let bound = f.degree() as u32;
        let mut expansion = SymPoly::zero();
        for weight in 0..=bound {
            for nu in partitions_of(weight) {
                let pair = &schur(&nu, false) * &schur(&nu, true);
                expansion = &expansion + &perp(&pair, &f);
            }
        }
        prop_assert_eq!(delta(&f), expansion);
    }

    #[test]
    fn sympoly_serialization_round_trips(f in arb_sympoly()) {
        let json = serde_json::to_string(&f).unwrap();
        let back: SymPoly = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn partition_serialization_round_trips(lam in arb_small_partition()) {
        let json = serde_json::to_string(&lam).unwrap();
        let back: Partition = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, lam);
    }

    #[test]
    fn skew_of_contained_partition_has_complementary_degree(
        lam in arb_small_partition(),
        nu in arb_small_partition(),
    ) {
        let skew = skew_schur(&lam, &nu, false);
        if lam.contains(&nu) {
            prop_assert!(!skew.is_zero());
            prop_assert_eq!(skew.degree(), (lam.weight() - nu.weight()) as u64);
        } else {
            prop_assert!(skew.is_zero());
        }
    }
}

/// The raw double sum over both symmetric groups, weighted 1/(m! p!).
/// Exponential in the weights, so only run at tiny sizes; this is the
/// oracle showing the class-sum form of `bd_poly` loses nothing.
fn bd_by_permutation_sums(lambda: &Partition, mu: &Partition) -> SymPoly {
    let m = lambda.weight() as usize;
    let p = mu.weight() as usize;
    let mut total = SymPoly::zero();
    for pi in all_perms(m) {
        let alpha = cycle_type(&pi);
        let chi_l = character(lambda, &alpha).unwrap();
        for rho in all_perms(p) {
            let beta = cycle_type(&rho);
            let chi_m = character(mu, &beta).unwrap();
            let mut product = SymPoly::one();
            for k in 1..=(m.max(p) as u32) {
                let a = if k <= m as u32 {
                    alpha.multiplicity(k)
                } else {
                    0
                };
                let b = if k <= p as u32 {
                    beta.multiplicity(k)
                } else {
                    0
                };
                if a > 0 || b > 0 {
                    product = &product * &f_factor(k, a, b);
                }
            }
            total = &total + &product.scale(&BigRational::from(BigInt::from(chi_l * chi_m)));
        }
    }
    let mut group_orders = BigInt::one();
    for i in 1..=m.max(1) {
        group_orders *= BigInt::from(i);
    }
    for i in 1..=p.max(1) {
        group_orders *= BigInt::from(i);
    }
    total.scale(&BigRational::new(BigInt::one(), group_orders))
}

#[test]
fn class_sum_matches_raw_permutation_sums() {
    for lambda in (0..=3).flat_map(partitions_of) {
        for mu in (0..=3).flat_map(partitions_of) {
            assert_eq!(
                bd_poly(&lambda, &mu),
                bd_by_permutation_sums(&lambda, &mu),
                "lambda={} mu={}",
                lambda,
                mu
            );
        }
    }
    // a taste of weight four on one side
    for lambda in partitions_of(4) {
        let mu = Partition::new(vec![2]);
        assert_eq!(bd_poly(&lambda, &mu), bd_by_permutation_sums(&lambda, &mu));
    }
}

#[test]
fn tw_determinant_is_dimension_independent() {
    let shapes: Vec<Partition> = (0..=4).flat_map(partitions_of).collect();
    for lambda in &shapes {
        for mu in &shapes {
            let base = lambda.length().max(mu.length());
            let reference = tw_poly(lambda, mu, base).unwrap();
            for d in base + 1..=base + 2 {
                assert_eq!(
                    tw_poly(lambda, mu, d).unwrap(),
                    reference,
                    "lambda={} mu={} d={}",
                    lambda,
                    mu,
                    d
                );
            }
        }
    }
}

#[test]
fn tw_determinant_equals_skew_pair_expansion() {
    for lambda in (0..=3).flat_map(partitions_of) {
        for mu in (0..=3).flat_map(partitions_of) {
            let mut expansion = SymPoly::zero();
            for weight in 0..=lambda.weight().min(mu.weight()) {
                for nu in partitions_of(weight) {
                    expansion = &expansion
                        + &(&skew_schur(&lambda, &nu, false) * &skew_schur(&mu, &nu, true));
                }
            }
            assert_eq!(
                tw_poly_auto(&lambda, &mu),
                expansion,
                "lambda={} mu={}",
                lambda,
                mu
            );
        }
    }
}

#[test]
fn schur_expansion_coefficients_recover_characters() {
    // reading the p_alpha coefficient of z_alpha * s_lambda gives chi back
    for n in 1..=5u32 {
        for lambda in partitions_of(n) {
            let s = schur(&lambda, false);
            for alpha in partitions_of(n) {
                let mono = toeplitz_minors::Monomial::from_partition(&alpha, false);
                let coeff = s.coefficient(&mono) * BigRational::from(alpha.z_value());
                assert_eq!(
                    coeff,
                    BigRational::from(BigInt::from(character(&lambda, &alpha).unwrap()))
                );
            }
        }
    }
}

#[test]
fn canonical_term_maps_are_deduplicated() {
    // folding the same terms in different groupings yields one map
    let a = &(&SymPoly::p(1) * &SymPoly::p(2)) + &SymPoly::p(2);
    let b = &(&SymPoly::p(2) * &(&SymPoly::p(1) + &SymPoly::one()));
    assert_eq!(a, *b);
    let counts: BTreeMap<String, usize> = a.terms().map(|(m, _)| (m.to_string(), 1)).collect();
    assert_eq!(counts.len(), a.num_terms());
}
