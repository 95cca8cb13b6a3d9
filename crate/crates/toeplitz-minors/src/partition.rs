//! Integer partitions: construction, enumeration, multiplicities,
//! containment and centralizer orders.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Index;

use num::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A partition: a weakly decreasing sequence of positive integers.
///
/// Trailing zeros are stripped on construction, so the empty partition is
/// represented by an empty part list. Partitions are immutable values with
/// structural equality and a total order (weight first, then
/// reverse-lexicographic) so they can serve as map keys.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Creates a partition from a weakly decreasing list of parts.
    /// Zeros are allowed and stripped.
    ///
    /// Panics if the parts are not weakly decreasing.
    pub fn new(parts: impl Into<Vec<u32>>) -> Self {
        let mut parts = parts.into();
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing, got {:?}",
            parts
        );
        parts.retain(|&p| p > 0);
        Partition { parts }
    }

    /// The empty partition ∅.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Counts the parts equal to `i`.
    pub fn multiplicity(&self, i: u32) -> u32 {
        assert!(i >= 1, "multiplicity is defined for part sizes >= 1");
        self.parts.iter().filter(|&&p| p == i).count() as u32
    }

    /// Order of the centralizer of a permutation with this cycle type:
    /// the product over part sizes i of i^(m_i) * m_i!, where m_i is the
    /// multiplicity of i.
    pub fn z_value(&self) -> BigInt {
        let mut z = BigInt::from(1u32);
        let mut i = 0;
        while i < self.parts.len() {
            let part = self.parts[i];
            let mut mult = 0u32;
            while i < self.parts.len() && self.parts[i] == part {
                mult += 1;
                i += 1;
            }
            for m in 1..=mult {
                z *= BigInt::from(part) * BigInt::from(m);
            }
        }
        z
    }

    /// True iff `inner` fits inside `self` part by part
    /// (parts beyond the stored length count as zero).
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.parts.len() <= self.parts.len()
            && inner
                .parts
                .iter()
                .zip(&self.parts)
                .all(|(&nu, &lam)| nu <= lam)
    }
}

/// Indexing past the stored parts yields 0.
impl Index<usize> for Partition {
    type Output = u32;

    fn index(&self, index: usize) -> &u32 {
        self.parts.get(index).unwrap_or(&0)
    }
}

/// Weight first, then reverse-lexicographic within a weight, matching the
/// enumeration order of [`partitions_of`].
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", part)?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{}", self)
    }
}

impl From<Vec<u32>> for Partition {
    fn from(parts: Vec<u32>) -> Self {
        Partition::new(parts)
    }
}

/// Partitions serialize as plain JSON arrays, `[2,1]`; ∅ is `[]`.
impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(D::Error::custom(format!(
                "partition parts must be weakly decreasing, got {:?}",
                parts
            )));
        }
        Ok(Partition::new(parts))
    }
}

/// All partitions of `n` in reverse-lexicographic order: largest first
/// part first, so `partitions_of(4)` starts with `(4)` and ends with
/// `(1,1,1,1)`.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out
}

fn fill(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}
