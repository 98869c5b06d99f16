//! Murnaghan-Nakayama border-strip recursion: the independent character
//! route, used to cross-validate the Schur route and to serve isolated
//! queries without building a transition system.
//!
//! `chi^mu_lambda` is computed by removing a border strip of `lambda_1`
//! cells from `mu` in every possible way, recursing on the remaining
//! partitions with the remaining cycle type, and weighting each branch by
//! `(-1)^height`. Parts are peeled largest-first: larger strips prune
//! harder.

use dashmap::DashMap;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::cache::{load_checksummed, save_checksummed};
use crate::{Error, Partition, Result};

/// One way of removing a border strip: what is left, and the number of rows
/// the strip spanned minus one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RimHookRemoval {
    pub remaining: Partition,
    pub height: u32,
}

impl RimHookRemoval {
    pub fn sign(&self) -> i32 {
        if self.height.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

/// All ways of removing a connected border strip of `size` cells from the
/// diagram of `mu`, leaving a valid partition. Deterministic order: largest
/// remaining partition first. Possibly empty.
///
/// A strip spanning rows `i..=j` forces the intermediate rows down to one
/// less than the row below (`remaining[t] = mu[t+1] - 1` for `i <= t < j`),
/// so each `(i, j)` pair yields at most one removal.
pub fn rim_hooks(mu: &Partition, size: u32) -> Result<Vec<RimHookRemoval>> {
    if size == 0 || size > mu.degree() {
        return Err(Error::InvalidHookSize {
            size,
            degree: mu.degree(),
        });
    }
    let parts = mu.parts();
    let rows = parts.len();
    let mut out = Vec::new();
    for i in 0..rows {
        for j in i..rows {
            // Cells removed: mu[i] - new[j] + (j - i) where the middle rows
            // telescope; solve for the bottom row's new length.
            let span = (j - i) as u32;
            let keep = parts[i] as i64 + i64::from(span) - i64::from(size);
            let below = parts.get(j + 1).copied().unwrap_or(0) as i64;
            if keep < below || keep > parts[j] as i64 - 1 {
                continue;
            }
            let mut new_parts = parts.to_vec();
            for t in i..j {
                new_parts[t] = parts[t + 1] - 1;
            }
            new_parts[j] = keep as u32;
            out.push(RimHookRemoval {
                remaining: Partition::from_unsorted(new_parts),
                height: span,
            });
        }
    }
    // Distinct removals leave distinct partitions, so this is a total order.
    out.sort_by(|a, b| b.remaining.cmp(&a.remaining));
    Ok(out)
}

/// Process-wide memo for the recursion; concurrent inserts are idempotent.
#[derive(Default)]
pub struct CharacterCache {
    map: DashMap<(Partition, Partition), BigInt>,
}

#[derive(Serialize, Deserialize)]
struct CharacterCacheBody {
    entries: Vec<(Partition, Partition, String)>,
}

impl CharacterCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Optional persistence, same checksummed-envelope conventions as the
    /// transition-system cache.
    pub fn save(&self, path: &std::path::Path) -> Result<()> {
        let mut entries: Vec<(Partition, Partition, String)> = self
            .map
            .iter()
            .map(|e| (e.key().0.clone(), e.key().1.clone(), e.value().to_string()))
            .collect();
        entries.sort();
        save_checksummed(path, &CharacterCacheBody { entries })
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        let body: CharacterCacheBody = load_checksummed(path)?;
        let cache = Self::new();
        for (mu, lam, value) in body.entries {
            let v: BigInt = value
                .parse()
                .map_err(|_| Error::Cache(format!("bad integer {value:?}")))?;
            cache.map.insert((mu, lam), v);
        }
        Ok(cache)
    }
}

/// `chi^mu_lambda` by the border-strip recursion, memoized in `cache`.
pub fn mn_character(mu: &Partition, lambda: &Partition, cache: &CharacterCache) -> Result<BigInt> {
    let (dm, dl) = (mu.degree(), lambda.degree());
    if dm != dl {
        return Err(Error::DegreeMismatch {
            left: dm,
            right: dl,
        });
    }
    Ok(mn_rec(mu, lambda.parts(), cache))
}

fn mn_rec(mu: &Partition, cycle_parts: &[u32], cache: &CharacterCache) -> BigInt {
    let Some(&strip) = cycle_parts.first() else {
        // chi of the empty diagram on the empty cycle type.
        return if mu.is_empty() {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    };
    // Keyed by the remaining cycle type as a multiset; callers may peel in
    // any fixed order.
    let key = (mu.clone(), Partition::from_unsorted(cycle_parts.iter().copied()));
    if let Some(hit) = cache.map.get(&key) {
        return hit.clone();
    }
    let mut total = BigInt::zero();
    for removal in rim_hooks(mu, strip).expect("strip size within degree") {
        let sub = mn_rec(&removal.remaining, &cycle_parts[1..], cache);
        if removal.sign() > 0 {
            total += sub;
        } else {
            total -= sub;
        }
    }
    cache.map.insert(key, total.clone());
    total
}
