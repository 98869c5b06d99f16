//! Integer partitions: canonical arithmetic and the partition families the
//! identity engine sums over.
//!
//! A [`Partition`] is a weakly decreasing list of positive parts. Partitions
//! of `n` index both the conjugacy classes and the irreducible characters of
//! the symmetric group on `n` letters, and the monomial/power-sum/Schur bases
//! of the degree-`n` homogeneous symmetric functions.
//!
//! The canonical total order used everywhere (enumeration, matrix indexing,
//! serialized term order) is lexicographic on the part vectors. It refines
//! dominance: if `lambda` dominates `mu` then `lambda > mu`, which is exactly
//! what the unitriangular solves in [`crate::kostka`] need.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{DegreeGuard, Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from already weakly decreasing positive parts.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "zero part in {:?}",
                parts
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts not weakly decreasing: {:?}",
                parts
            )));
        }
        Ok(Self { parts })
    }

    /// Builds a partition from arbitrary nonnegative values: zeros are
    /// dropped and the rest sorted decreasingly.
    pub fn from_unsorted(parts: impl IntoIterator<Item = u32>) -> Self {
        let mut parts: Vec<u32> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn degree(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Zero-padded part access: `part(i) == 0` for `i >= len()`.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Largest part, or 0 for the empty partition.
    pub fn first(&self) -> u32 {
        self.part(0)
    }

    /// Transpose of the Young diagram: the i-th conjugate part counts the
    /// parts that are `>= i+1`.
    pub fn conjugate(&self) -> Partition {
        let Some(&first) = self.parts.first() else {
            return Partition::empty();
        };
        let mut cols = vec![0u32; first as usize];
        for &p in &self.parts {
            for c in cols.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition { parts: cols }
    }

    /// Dominance order: every prefix sum of `self` weakly exceeds the
    /// corresponding prefix sum of `other`. Only defined for equal degrees.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        let (d1, d2) = (self.degree(), other.degree());
        if d1 != d2 {
            return Err(Error::DegreeMismatch { left: d1, right: d2 });
        }
        Ok(self.dominates_unchecked(other))
    }

    pub(crate) fn dominates_unchecked(&self, other: &Partition) -> bool {
        let (mut a, mut b) = (0u64, 0u64);
        for i in 0..self.len().max(other.len()) {
            a += u64::from(self.part(i));
            b += u64::from(other.part(i));
            if a < b {
                return false;
            }
        }
        true
    }

    /// Distinct part values with their repetition counts, largest value first.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Centralizer order of a permutation of this cycle type:
    /// `prod k^{m_k} * m_k!` over distinct part values.
    pub fn z_value(&self) -> BigInt {
        let mut z = BigInt::one();
        for (value, mult) in self.multiplicities() {
            for _ in 0..mult {
                z *= value;
            }
            for f in 2..=u64::from(mult) {
                z *= f;
            }
        }
        z
    }

    /// Bracket notation with explicit exponents, e.g. `[4^2 2^1]`.
    pub fn bracket(&self) -> String {
        let inner: Vec<String> = self
            .multiplicities()
            .iter()
            .map(|(v, m)| format!("{v}^{m}"))
            .collect();
        format!("[{}]", inner.join(" "))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    /// Plain comma form, e.g. `4,2,2,1`; the empty partition prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({})", self)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts the plain form `4,2,2,1` and the exponent form `4,2^2,1`;
    /// parts are canonicalized to decreasing order. `()` (or an empty/blank
    /// string) is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() || trimmed == "()" {
            return Ok(Partition::empty());
        }
        let err = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let mut parts = Vec::new();
        for token in trimmed.split(',') {
            let token = token.trim();
            let (value_str, count) = match token.split_once('^') {
                Some((v, e)) => {
                    let count: u32 = e
                        .trim()
                        .parse()
                        .map_err(|_| err("exponent is not a number"))?;
                    if count == 0 {
                        return Err(err("exponent must be positive"));
                    }
                    (v.trim(), count)
                }
                None => (token, 1),
            };
            let value: u32 = value_str
                .parse()
                .map_err(|_| err("part is not a number"))?;
            if value == 0 {
                return Err(err("parts must be positive"));
            }
            for _ in 0..count {
                parts.push(value);
            }
        }
        Ok(Partition::from_unsorted(parts))
    }
}

impl Serialize for Partition {
    /// JSON form: array of integers, e.g. `[4,2,2,1]`.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        Partition::new(parts).map_err(|e| D::Error::custom(e.to_string()))
    }
}

/// All partitions of `n`, largest-first in the canonical order:
/// `(n)` first, `(1^n)` last. The count is `p(n)`.
pub fn partitions_of(n: u32, guard: DegreeGuard) -> Result<Vec<Partition>> {
    guard.check(n)?;
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    descend(n, n, &mut prefix, &mut out);
    Ok(out)
}

fn descend(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: prefix.clone(),
        });
        return;
    }
    for first in (1..=remaining.min(max_part)).rev() {
        prefix.push(first);
        descend(remaining - first, first, prefix, out);
        prefix.pop();
    }
}

/// The family `R_N(m)`: partitions of `m` with at most `N` parts, every part
/// even. Odd `m` yields an empty list (no error: no such partition exists).
pub fn restricted_even_rows(m: u32, max_len: u32, guard: DegreeGuard) -> Result<Vec<Partition>> {
    if !m.is_multiple_of(2) {
        guard.check(m)?;
        return Ok(Vec::new());
    }
    Ok(partitions_of(m, guard)?
        .into_iter()
        .filter(|p| p.len() as u32 <= max_len && p.parts().iter().all(|&x| x % 2 == 0))
        .collect())
}

/// The family `R^c_N(m)`: partitions of `m` with at most `N` parts whose
/// conjugate has all parts even; equivalently every distinct part value
/// occurs an even number of times.
pub fn restricted_even_cols(m: u32, max_len: u32, guard: DegreeGuard) -> Result<Vec<Partition>> {
    if !m.is_multiple_of(2) {
        guard.check(m)?;
        return Ok(Vec::new());
    }
    Ok(partitions_of(m, guard)?
        .into_iter()
        .filter(|p| {
            p.len() as u32 <= max_len && p.multiplicities().iter().all(|&(_, m)| m % 2 == 0)
        })
        .collect())
}
