//! The character/Laguerre expression for the minor ratio: a double class
//! sum over the symmetric groups indexed by the two partitions, with a
//! closed-form cycle factor per cycle length.

use num::rational::BigRational;
use num::{BigInt, One};

use crate::character::character;
use crate::partition::{partitions_of, Partition};
use crate::symfunc::SymPoly;

/// Cycle counts of a cycle type: how many cycles of each length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleCounts {
    counts: Vec<(u32, u32)>,
}

impl CycleCounts {
    pub fn from_partition(alpha: &Partition) -> Self {
        let mut counts: Vec<(u32, u32)> = Vec::new();
        for &part in alpha.parts().iter().rev() {
            match counts.last_mut() {
                Some((k, c)) if *k == part => *c += 1,
                _ => counts.push((part, 1)),
            }
        }
        CycleCounts { counts }
    }

    /// Number of cycles of length `k`.
    pub fn count(&self, k: u32) -> u32 {
        self.counts
            .iter()
            .find(|&&(len, _)| len == k)
            .map_or(0, |&(_, c)| c)
    }

    /// Cycle lengths present, ascending.
    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        self.counts.iter().map(|&(k, _)| k)
    }
}

/// Generalized binomial coefficient over the integers: top may be
/// negative, giving the usual falling-factorial extension.
fn binomial(top: i64, k: u32) -> BigRational {
    let mut num = BigInt::one();
    for step in 0..k as i64 {
        num *= BigInt::from(top - step);
    }
    let mut den = BigInt::one();
    for step in 1..=k as i64 {
        den *= BigInt::from(step);
    }
    BigRational::new(num, den)
}

/// The Laguerre polynomial L_n^(alpha) evaluated at a polynomial
/// argument: sum over k of C(n + alpha, n - k) (-t)^k / k!.
pub fn laguerre(n: u32, alpha: i64, t: &SymPoly) -> SymPoly {
    let mut out = SymPoly::zero();
    let minus_t = -t;
    let mut power = SymPoly::one();
    let mut k_factorial = BigInt::one();
    for k in 0..=n {
        if k > 0 {
            power = &power * &minus_t;
            k_factorial *= BigInt::from(k);
        }
        let coeff = binomial(n as i64 + alpha, n - k) / BigRational::from(k_factorial.clone());
        out = &out + &power.scale(&coeff);
    }
    out
}

/// The cycle factor for cycle length `k` with `a` cycles on the plain
/// side and `b` on the tilde side:
///
/// sum over i of k^i i! C(max(a,b), i) C(min(a,b), i) p_k^(a-i) pt_k^(b-i).
///
/// This closed form is what the class sum multiplies together; the
/// Laguerre route above reproduces it and serves as a test oracle.
pub fn f_factor(k: u32, a: u32, b: u32) -> SymPoly {
    assert!(k >= 1);
    let (hi, lo) = (a.max(b), a.min(b));
    let mut out = SymPoly::zero();
    for i in 0..=lo {
        let mut coeff = BigInt::one();
        for _ in 0..i {
            coeff *= BigInt::from(k);
        }
        for step in 1..=i {
            coeff *= BigInt::from(step);
        }
        let weight = BigRational::from(coeff) * binomial(hi as i64, i) * binomial(lo as i64, i);
        let term = &SymPoly::p(k).pow(a - i) * &SymPoly::p_tilde(k).pow(b - i);
        out = &out + &term.scale(&weight);
    }
    out
}

/// The full expression for the pair (lambda, mu), as an exact polynomial:
///
/// sum over class pairs (alpha |- |lambda|, beta |- |mu|) of
/// chi^lambda(alpha) chi^mu(beta) / (z_alpha z_beta) * prod_k F_k(alpha, beta),
///
/// the product running over cycle lengths present in either class. The
/// class-sum form replaces the raw double sum over both symmetric groups,
/// which is valid because every factor depends only on cycle counts.
pub fn bd_poly(lambda: &Partition, mu: &Partition) -> SymPoly {
    let mut out = SymPoly::zero();
    for alpha in partitions_of(lambda.weight()) {
        let chi_l = character(lambda, &alpha).expect("weights match");
        if chi_l == 0 {
            continue;
        }
        let alpha_counts = CycleCounts::from_partition(&alpha);
        for beta in partitions_of(mu.weight()) {
            let chi_m = character(mu, &beta).expect("weights match");
            if chi_m == 0 {
                continue;
            }
            let beta_counts = CycleCounts::from_partition(&beta);
            let weight = BigRational::new(
                BigInt::from(chi_l * chi_m),
                alpha.z_value() * beta.z_value(),
            );
            let mut product = SymPoly::one();
            let mut lengths: Vec<u32> = alpha_counts
                .support()
                .chain(beta_counts.support())
                .collect();
            lengths.sort_unstable();
            lengths.dedup();
            for k in lengths {
                product = &product * &f_factor(k, alpha_counts.count(k), beta_counts.count(k));
            }
            out = &out + &product.scale(&weight);
        }
    }
    out
}
