//! Distinguished elements of the ring: complete homogeneous functions,
//! Schur and skew Schur functions, and the Jacobi-Trudi determinant.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num::rational::BigRational;
use num::BigInt;

use crate::character::character;
use crate::error::Error;
use crate::partition::{partitions_of, Partition};
use crate::symfunc::det::determinant;
use crate::symfunc::poly::{perp, SymPoly};

/// The complete homogeneous function h_k in power sums:
/// h_k = sum over alpha |- k of p_alpha / z_alpha. Memoized.
pub fn complete_h(k: u32, tilde: bool) -> SymPoly {
    static CACHE: OnceLock<RwLock<HashMap<(u32, bool), SymPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(poly) = cache.read().unwrap().get(&(k, tilde)) {
        return poly.clone();
    }
    let mut h = SymPoly::zero();
    for alpha in partitions_of(k) {
        let z = alpha.z_value();
        h = &h + &SymPoly::power_sum(&alpha, tilde).scale(&BigRational::new(BigInt::from(1), z));
    }
    cache.write().unwrap().insert((k, tilde), h.clone());
    h
}

/// The Schur function s_lambda expanded in power sums:
/// s_lambda = sum over alpha |- |lambda| of chi^lambda(alpha) p_alpha / z_alpha.
///
/// Expansions are memoized process-wide; the cache uses the same
/// interior-locking contract as the character cache.
pub fn schur(lambda: &Partition, tilde: bool) -> SymPoly {
    static CACHE: OnceLock<RwLock<HashMap<(Partition, bool), SymPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(poly) = cache.read().unwrap().get(&(lambda.clone(), tilde)) {
        return poly.clone();
    }
    let mut s = SymPoly::zero();
    for alpha in partitions_of(lambda.weight()) {
        let chi = character(lambda, &alpha).expect("weights match by construction");
        if chi == 0 {
            continue;
        }
        let coeff = BigRational::new(BigInt::from(chi), alpha.z_value());
        s = &s + &SymPoly::power_sum(&alpha, tilde).scale(&coeff);
    }
    cache
        .write()
        .unwrap()
        .insert((lambda.clone(), tilde), s.clone());
    s
}

/// The skew Schur function s_{lambda/nu}, computed by applying the perp
/// of s_nu to s_lambda. Zero when nu is not contained in lambda.
pub fn skew_schur(lambda: &Partition, nu: &Partition, tilde: bool) -> SymPoly {
    perp(&schur(nu, tilde), &schur(lambda, tilde))
}

/// The d x d Jacobi-Trudi determinant det(h_{lambda_i - i + j}) with
/// h_0 = 1 and h with negative index = 0. Independent of d as long as
/// d >= length(lambda); equals [`schur`] of lambda.
pub fn jacobi_trudi(lambda: &Partition, d: usize, tilde: bool) -> Result<SymPoly, Error> {
    if d < lambda.length() {
        return Err(Error::DimensionTooSmall {
            d,
            required: lambda.length(),
        });
    }
    let matrix: Vec<Vec<SymPoly>> = (1..=d)
        .map(|i| {
            (1..=d)
                .map(|j| {
                    let index = lambda[i - 1] as i64 - i as i64 + j as i64;
                    if index < 0 {
                        SymPoly::zero()
                    } else {
                        complete_h(index as u32, tilde)
                    }
                })
                .collect()
        })
        .collect();
    Ok(determinant(&matrix))
}
