//! The class-sum formula: character-weighted sums over conjugacy classes
//! of two symmetric groups, with a Laguerre-type closed form for each
//! cycle length.
//!
//! Run with: cargo run --example bd_polynomial

use toeplitz_minors::{bd_poly, f_factor, laguerre, schur, Partition, SymPoly, SymbolSpec};

fn main() {
    // the cycle factors that the class sum multiplies together
    println!("cycle factors F_k(a, b):");
    for (k, a, b) in [(1, 1, 0), (1, 1, 1), (2, 2, 1), (3, 1, 1)] {
        println!("  F_{}({},{}) = {}", k, a, b, f_factor(k, a, b));
    }

    // the same factor comes from a Laguerre polynomial at -p_k pt_k / k
    println!("\nLaguerre polynomials at a symbolic argument:");
    let t = SymPoly::p(1);
    for n in 0..=2 {
        println!("  L_{}^(1)(p1) = {}", n, laguerre(n, 1, &t));
    }

    let lambda = Partition::new(vec![2, 1]);
    let mu = Partition::new(vec![1]);
    let b = bd_poly(&lambda, &mu);
    println!("\nB[{} , {}] = {}", lambda, mu, b);

    // with one side empty the class sum collapses to a Schur function
    assert_eq!(bd_poly(&lambda, &Partition::empty()), schur(&lambda, false));
    println!(
        "B[{} , ()] = s_{} = {}",
        lambda,
        lambda,
        schur(&lambda, false)
    );

    // specializing the variables at a concrete symbol gives a number
    let spec = SymbolSpec::from_real(&[0.6, 0.2], &[0.6, 0.2]);
    println!(
        "\nat p = pt = (0.6, 0.2): B[{} , {}] = {}",
        lambda,
        mu,
        b.evaluate(&spec)
    );
}
