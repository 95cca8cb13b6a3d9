//! The cross differential operator exp(sum_k k d/dp_k d/dpt_k): what it
//! does to small elements, and the derivative identities that rebuild
//! the two-partition polynomials from their one-sided halves.
//!
//! Run with: cargo run --example delta_identities

use toeplitz_minors::{
    bd_poly, delta, partitions_of, schur, skew_schur, tw_poly_auto, Partition, SymPoly,
};

fn main() {
    println!("the operator on small elements:");
    for f in [
        SymPoly::one(),
        &SymPoly::p(1) * &SymPoly::p_tilde(1),
        &SymPoly::p(2) * &SymPoly::p_tilde(2),
        &SymPoly::p(1).pow(2) * &SymPoly::p_tilde(1),
    ] {
        println!("  delta({}) = {}", f, delta(&f));
    }

    let lambda = Partition::new(vec![2, 1]);
    let mu = Partition::new(vec![2]);
    let empty = Partition::empty();

    // applying delta to a product of one-sided values restores the full
    // two-partition polynomial, on both routes
    let bd_split = delta(&(&bd_poly(&lambda, &empty) * &bd_poly(&empty, &mu)));
    assert_eq!(bd_split, bd_poly(&lambda, &mu));
    println!(
        "\ndelta(B[{},()] * B[(),{}]) = B[{},{}]",
        lambda, mu, lambda, mu
    );

    let tw_split = delta(&(&tw_poly_auto(&lambda, &empty) * &tw_poly_auto(&empty, &mu)));
    assert_eq!(tw_split, tw_poly_auto(&lambda, &mu));
    println!(
        "delta(T[{},()] * T[(),{}]) = T[{},{}]",
        lambda, mu, lambda, mu
    );

    // underneath both sits one identity about Schur functions: delta of
    // a product of Schur functions expands in skew pairs
    let left = delta(&(&schur(&lambda, false) * &schur(&mu, true)));
    let mut right = SymPoly::zero();
    for weight in 0..=lambda.weight().min(mu.weight()) {
        for nu in partitions_of(weight) {
            right = &right + &(&skew_schur(&lambda, &nu, false) * &skew_schur(&mu, &nu, true));
        }
    }
    assert_eq!(left, right);
    println!(
        "delta(s_{} * st_{}) = sum over nu of s_{}/nu * st_{}/nu",
        lambda, mu, lambda, mu
    );
    println!("  = {}", left);
}
