//! Irreducible symmetric-group characters via the Murnaghan-Nakayama
//! rule, with a thread-safe memo table.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::error::Error;
use crate::partition::Partition;

/// Memoized character values. Entries are keyed by (shape, cycle type)
/// with equal weights; a cached value always equals recomputation from
/// scratch. The table uses interior locking so one cache can be shared
/// across threads.
#[derive(Default)]
pub struct CharacterCache {
    table: RwLock<HashMap<(Partition, Partition), i64>>,
}

impl CharacterCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of memoized (shape, cycle type) pairs.
    pub fn len(&self) -> usize {
        self.table.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The character of the irreducible representation indexed by `lambda`,
    /// evaluated on the conjugacy class of cycle type `alpha`.
    ///
    /// Requires |lambda| = |alpha|.
    pub fn character(&self, lambda: &Partition, alpha: &Partition) -> Result<i64, Error> {
        if lambda.weight() != alpha.weight() {
            return Err(Error::WeightMismatch {
                lambda_weight: lambda.weight(),
                alpha_weight: alpha.weight(),
            });
        }
        Ok(self.recurse(lambda, alpha))
    }

    // Murnaghan-Nakayama: strip a border strip of the largest remaining
    // cycle length, recurse on what is left.
    fn recurse(&self, lambda: &Partition, alpha: &Partition) -> i64 {
        if alpha.is_empty() {
            return 1;
        }
        let key = (lambda.clone(), alpha.clone());
        if let Some(&v) = self.table.read().unwrap().get(&key) {
            return v;
        }
        let strip_len = alpha.parts()[0];
        let rest = Partition::new(alpha.parts()[1..].to_vec());
        let value = border_strip_removals(lambda, strip_len)
            .into_iter()
            .map(|(shape, sign)| sign * self.recurse(&shape, &rest))
            .sum();
        self.table.write().unwrap().insert(key, value);
        value
    }
}

/// All ways to remove a border strip of `len` cells from `shape`, as
/// (remaining shape, (-1)^height) pairs.
///
/// Works on the beta-set {shape_i + l - i}: removing a strip of length
/// `len` replaces a beta number b by b - len (valid when b - len is
/// nonnegative and not already in the set), and the strip height equals
/// the count of beta numbers strictly between b - len and b.
fn border_strip_removals(shape: &Partition, len: u32) -> Vec<(Partition, i64)> {
    let l = shape.length();
    let beta: Vec<i64> = (0..l)
        .map(|i| shape.parts()[i] as i64 + (l - 1 - i) as i64)
        .collect();
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        let target = b - len as i64;
        if target < 0 || beta.contains(&target) {
            continue;
        }
        let height = beta.iter().filter(|&&x| target < x && x < b).count();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        let mut new_beta = beta.clone();
        new_beta[idx] = target;
        new_beta.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<u32> = new_beta
            .iter()
            .enumerate()
            .map(|(i, &x)| (x - (l - 1 - i) as i64) as u32)
            .collect();
        out.push((Partition::new(parts), sign));
    }
    out
}

fn global_cache() -> &'static CharacterCache {
    static CACHE: OnceLock<CharacterCache> = OnceLock::new();
    CACHE.get_or_init(CharacterCache::new)
}

/// Character value from a process-wide cache; see
/// [`CharacterCache::character`].
pub fn character(lambda: &Partition, alpha: &Partition) -> Result<i64, Error> {
    global_cache().character(lambda, alpha)
}
