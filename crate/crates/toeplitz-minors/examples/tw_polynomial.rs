//! The half-strip determinant formula: a finite matrix of truncated
//! products of complete functions whose determinant is independent of
//! the chosen dimension, plus the one-part minor relations it satisfies.
//!
//! Run with: cargo run --example tw_polynomial

use toeplitz_minors::symfunc::determinant;
use toeplitz_minors::{
    bd_poly, default_dim, tw_entry, tw_poly, tw_relation_check, Partition, TwMatrix,
};

fn main() {
    println!("half-strip entries T^(r)(s):");
    for (r, s) in [(0, 0), (1, 0), (1, 1), (2, 1)] {
        println!("  T^({})({}) = {}", r, s, tw_entry(r, s));
    }

    // the entries obey T^(r)(s) = h_r ht_s + T^(r-1)(s-1)
    for r in 1..=4 {
        for s in 1..=4 {
            assert!(tw_relation_check(r, s));
        }
    }
    println!("\nentry recursion T^(r)(s) = h_r*ht_s + T^(r-1)(s-1) verified for r,s <= 4");

    let lambda = Partition::new(vec![2, 1]);
    let mu = Partition::new(vec![1]);
    let d = default_dim(&lambda, &mu);
    let matrix = TwMatrix::build(&lambda, &mu, d).unwrap();
    println!("\nmatrix for ({}, {}) at d = {}:", lambda, mu, d);
    for row in &matrix.entries {
        for entry in row {
            println!("  [{}]", entry);
        }
        println!();
    }

    let t = tw_poly(&lambda, &mu, d).unwrap();
    println!("determinant = {}", t);

    // taking the matrix larger changes nothing
    for bigger in d + 1..=d + 2 {
        assert_eq!(tw_poly(&lambda, &mu, bigger).unwrap(), t);
    }
    println!("same value at d = {} and d = {}", d + 1, d + 2);

    // the determinant of one-part values reproduces the general case
    let giambelli: Vec<Vec<_>> = (1..=d)
        .map(|i| {
            (1..=d)
                .map(|j| tw_entry(lambda[i - 1] + (d - i) as u32, mu[j - 1] + (d - j) as u32))
                .collect()
        })
        .collect();
    assert_eq!(determinant(&giambelli), t);
    println!("and so does the determinant built from one-part values only");

    // the class-sum route lands on the same polynomial
    assert_eq!(bd_poly(&lambda, &mu), t);
    println!("\nbd and tw agree on ({}, {})", lambda, mu);
}
