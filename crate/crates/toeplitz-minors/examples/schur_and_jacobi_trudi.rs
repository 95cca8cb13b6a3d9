//! Schur functions in the power-sum basis, the Jacobi-Trudi determinant
//! that reproduces them, and skew functions with their expansion into
//! Littlewood-Richardson pieces.
//!
//! Run with: cargo run --example schur_and_jacobi_trudi

use num::Zero;
use toeplitz_minors::{
    complete_h, inner_product, jacobi_trudi, partitions_of, schur, skew_schur, Partition,
};

fn main() {
    println!("complete homogeneous functions:");
    for k in 0..=4 {
        println!("  h_{} = {}", k, complete_h(k, false));
    }

    println!("\nSchur functions of weight 3:");
    for lam in partitions_of(3) {
        println!("  s_{} = {}", lam, schur(&lam, false));
    }

    // the determinant route gives the same elements, for any admissible
    // matrix size
    let lam = Partition::new(vec![3, 2, 1]);
    let s = schur(&lam, false);
    for d in [3, 4, 5] {
        assert_eq!(jacobi_trudi(&lam, d, false).unwrap(), s);
    }
    println!(
        "\nJacobi-Trudi determinant equals s_{} for d = 3, 4, 5 ({} terms)",
        lam,
        s.num_terms()
    );

    // skew function and its Schur expansion; the coefficients are the
    // Littlewood-Richardson numbers
    let nu = Partition::new(vec![1]);
    let skew = skew_schur(&lam, &nu, false);
    println!("\ns_{}/{} = {}", lam, nu, skew);
    println!("expanded in Schur functions:");
    for mu in partitions_of(lam.weight() - nu.weight()) {
        let coefficient = inner_product(&skew, &schur(&mu, false));
        if !coefficient.is_zero() {
            println!("  {} * s_{}", coefficient, mu);
        }
    }
}
