//! The half-strip determinant expression for the minor ratio: a finite
//! d x d matrix whose entries are truncated products of complete
//! functions from the two alphabets.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::error::Error;
use crate::partition::Partition;
use crate::symfunc::{complete_h, determinant, SymPoly};

/// One matrix entry: the finite sum over k of h_(r-k) * ht_(s-k).
/// Terms with a negative index vanish, so the sum stops at min(r, s).
/// Memoized: the same entries recur across matrices.
pub fn tw_entry(r: u32, s: u32) -> SymPoly {
    static CACHE: OnceLock<RwLock<HashMap<(u32, u32), SymPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(poly) = cache.read().unwrap().get(&(r, s)) {
        return poly.clone();
    }
    let mut out = SymPoly::zero();
    for k in 0..=r.min(s) {
        out = &out + &(&complete_h(r - k, false) * &complete_h(s - k, true));
    }
    cache.write().unwrap().insert((r, s), out.clone());
    out
}

/// The d x d matrix of half-strip inner products for (lambda, mu). Entry
/// (i, j), 1-based, is tw_entry(j - 1 + lambda_(d+1-j), i - 1 + mu_(d+1-i)).
pub struct TwMatrix {
    pub d: usize,
    pub entries: Vec<Vec<SymPoly>>,
}

impl TwMatrix {
    pub fn build(lambda: &Partition, mu: &Partition, d: usize) -> Result<Self, Error> {
        let required = lambda.length().max(mu.length());
        if d < required {
            return Err(Error::DimensionTooSmall { d, required });
        }
        let entries = (1..=d)
            .map(|i| {
                let s = (i - 1) as u32 + mu[d - i];
                (1..=d)
                    .map(|j| {
                        let r = (j - 1) as u32 + lambda[d - j];
                        tw_entry(r, s)
                    })
                    .collect()
            })
            .collect();
        Ok(TwMatrix { d, entries })
    }
}

/// Smallest admissible matrix dimension for the pair; at least 1 so the
/// empty pair avoids a 0 x 0 determinant.
pub fn default_dim(lambda: &Partition, mu: &Partition) -> usize {
    lambda.length().max(mu.length()).max(1)
}

/// The half-strip determinant for (lambda, mu) at dimension d. The value
/// is independent of d for any d >= max(length(lambda), length(mu)).
pub fn tw_poly(lambda: &Partition, mu: &Partition, d: usize) -> Result<SymPoly, Error> {
    let matrix = TwMatrix::build(lambda, mu, d)?;
    Ok(determinant(&matrix.entries))
}

/// [`tw_poly`] at the default dimension.
pub fn tw_poly_auto(lambda: &Partition, mu: &Partition) -> SymPoly {
    tw_poly(lambda, mu, default_dim(lambda, mu)).expect("default dimension is admissible")
}

/// Verifies the entry recursion
/// tw_entry(r, s) = h_r * ht_s + tw_entry(r - 1, s - 1)
/// as an exact polynomial identity.
pub fn tw_relation_check(r: u32, s: u32) -> bool {
    assert!(r >= 1 && s >= 1);
    let rhs = &(&complete_h(r, false) * &complete_h(s, true)) + &tw_entry(r - 1, s - 1);
    tw_entry(r, s) == rhs
}
