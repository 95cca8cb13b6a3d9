//! Partitions and symmetric-group characters: enumeration, centralizer
//! orders, and a full character table with its orthogonality relations.
//!
//! Run with: cargo run --example partitions_and_characters

use num::rational::BigRational;
use num::{BigInt, Zero};
use toeplitz_minors::{character, partitions_of, Partition};

fn main() {
    let n = 4;
    let shapes = partitions_of(n);
    println!("partitions of {} (reverse-lexicographic):", n);
    for lam in &shapes {
        println!("  {}  length={} z={}", lam, lam.length(), lam.z_value());
    }

    println!("\ncharacter table of the symmetric group on {} points:", n);
    print!("{:>12}", "");
    for alpha in &shapes {
        print!("{:>10}", alpha.to_string());
    }
    println!();
    for lam in &shapes {
        print!("{:>12}", lam.to_string());
        for alpha in &shapes {
            print!("{:>10}", character(lam, alpha).unwrap());
        }
        println!();
    }

    // first orthogonality: rows are orthonormal against 1/z weights
    for a in &shapes {
        for b in &shapes {
            let mut total = BigRational::zero();
            for alpha in &shapes {
                let prod = character(a, alpha).unwrap() * character(b, alpha).unwrap();
                total += BigRational::new(BigInt::from(prod), alpha.z_value());
            }
            let expected = BigRational::from(BigInt::from(if a == b { 1 } else { 0 }));
            assert_eq!(total, expected);
        }
    }
    println!("\nrow orthogonality holds for every pair of shapes");

    let lam = Partition::new(vec![2, 1, 1]);
    println!(
        "\ncontainment: {} contains (1,1) = {}, contains (3) = {}",
        lam,
        lam.contains(&Partition::new(vec![1, 1])),
        lam.contains(&Partition::new(vec![3])),
    );
}
