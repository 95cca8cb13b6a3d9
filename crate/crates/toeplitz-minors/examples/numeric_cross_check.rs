//! The numeric channel end to end: Fourier coefficients of a concrete
//! symbol, the convergence of finite determinant ratios, and the
//! three-way agreement with both exact formulas.
//!
//! Run with: cargo run --example numeric_cross_check

use toeplitz_minors::{bd_poly, cross_check, d_coeffs, ratio_sequence, Partition, SymbolSpec};

fn main() {
    let spec = SymbolSpec::from_real(&[0.6, 0.2], &[0.6, 0.2]);
    let lambda = Partition::new(vec![2, 1]);
    let mu = Partition::new(vec![1]);

    let fd = d_coeffs(&spec, 12);
    println!("Fourier coefficients of the symbol (truncated at 12):");
    for m in -3i64..=3 {
        println!("  d_{:>2} = {}", m, fd.d(m).unwrap());
    }
    println!("  truncation hint: {:.3e}", fd.truncation_hint());

    let exact = bd_poly(&lambda, &mu).evaluate(&spec);
    println!("\nexact limit value for ({}, {}): {}", lambda, mu, exact);

    println!("\nfinite determinant ratios approaching it:");
    let sizes = [2usize, 4, 8, 16, 32, 64];
    let ratios = ratio_sequence(&spec, &lambda, &mu, &sizes).unwrap();
    for (n, ratio) in sizes.iter().zip(&ratios) {
        println!(
            "  n={:>3}  ratio={:.15}  |gap|={:.3e}",
            n,
            ratio.re,
            (ratio - exact).norm()
        );
    }

    let report = cross_check(&spec, &lambda, &mu, 64, 1e-6).unwrap();
    println!("\ncross-check at n = 64:");
    println!("  ratio_numeric   = {}", report.ratio_numeric);
    println!("  bd_value        = {}", report.bd_value);
    println!("  tw_value        = {}", report.tw_value);
    println!("  max_discrepancy = {:.3e}", report.max_discrepancy);
    println!("  converged       = {}", report.converged);
    assert!(report.converged);
}
