//! Brute-force oracles and generators shared by the integration suites.
//! Everything here is deliberately independent of the library's own
//! computation paths.

#![allow(dead_code)]

use num::rational::BigRational;
use num::BigInt;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use toeplitz_minors::{Partition, SymPoly};

/// All permutations of 0..n as images, in a deterministic order.
pub fn all_perms(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    permute(&mut items, 0, &mut out);
    out
}

fn permute(items: &mut Vec<usize>, start: usize, out: &mut Vec<Vec<usize>>) {
    if start == items.len() {
        out.push(items.clone());
        return;
    }
    for i in start..items.len() {
        items.swap(start, i);
        permute(items, start + 1, out);
        items.swap(start, i);
    }
}

/// Cycle type of a permutation given as images of 0..n.
pub fn cycle_type(perm: &[usize]) -> Partition {
    let mut seen = vec![false; perm.len()];
    let mut lengths = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0u32;
        let mut at = start;
        while !seen[at] {
            seen[at] = true;
            at = perm[at];
            len += 1;
        }
        lengths.push(len);
    }
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(lengths)
}

/// Deterministic generator of small random polynomials in both variable
/// families. Term count, variable indices, exponents and coefficients
/// are all bounded so products and inner products stay cheap.
pub struct PolyGen {
    rng: ChaCha8Rng,
    pub max_var: u32,
    pub max_exp: u32,
    pub max_terms: usize,
}

impl PolyGen {
    pub fn new(seed: u64) -> Self {
        PolyGen {
            rng: ChaCha8Rng::seed_from_u64(seed),
            max_var: 3,
            max_exp: 2,
            max_terms: 3,
        }
    }

    pub fn poly(&mut self) -> SymPoly {
        let terms = self.rng.gen_range(1..=self.max_terms);
        let mut out = SymPoly::zero();
        for _ in 0..terms {
            let mut term = SymPoly::constant(BigRational::from(BigInt::from(
                self.rng.gen_range(-3i64..=3),
            )));
            for _ in 0..self.rng.gen_range(0..=2) {
                let k = self.rng.gen_range(1..=self.max_var);
                let e = self.rng.gen_range(1..=self.max_exp);
                let var = if self.rng.gen_bool(0.5) {
                    SymPoly::p(k)
                } else {
                    SymPoly::p_tilde(k)
                };
                term = &term * &var.pow(e);
            }
            out = &out + &term;
        }
        out
    }

    /// A polynomial whose graded degree stays at or below `bound`.
    pub fn poly_of_degree_at_most(&mut self, bound: u64) -> SymPoly {
        loop {
            let candidate = self.poly();
            if candidate.degree() <= bound {
                return candidate;
            }
        }
    }
}
