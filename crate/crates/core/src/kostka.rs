//! Kostka numbers, the unitriangular monomial-to-Schur transition, and
//! character values as Schur coefficients of power sums.
//!
//! A semistandard Young tableau of shape `lambda` and content `mu` is built
//! by inserting the cells of each content value as a horizontal strip, so
//! Kostka numbers satisfy a strip recursion; [`kostka`] runs it top-down with
//! a process-wide memo, and [`KostkaSystem::build`] runs it bottom-up one
//! content column at a time, producing for each degree the full matrix
//! `K[lambda][mu]`, dominance-triangular with unit diagonal.
//!
//! Writing `p_lambda = sum_mu chi^mu_lambda s_mu`, character values fall out
//! of one unitriangular solve per conjugacy class
//! ([`KostkaSystem::monomial_to_schur`], [`character_via_schur`]).

use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::OnceLock;

use dashmap::DashMap;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cache::{load_checksummed, save_checksummed, CacheConfig};
use crate::monomial::{power_to_monomial, MonomialExpansion};
use crate::partition::partitions_of;
use crate::{DegreeGuard, Error, Partition, Result};

/// A homogeneous symmetric function expressed over Schur functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurCoeffs {
    degree: u32,
    terms: std::collections::BTreeMap<Partition, BigInt>,
}

impl SchurCoeffs {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mu: &Partition) -> BigInt {
        self.terms.get(mu).cloned().unwrap_or_else(BigInt::zero)
    }
}

/// All partitions reachable from `shape` by removing a horizontal strip of
/// `size` cells (no two removed cells in the same column).
fn strip_removals(shape: &Partition, size: u32) -> Vec<Partition> {
    let parts = shape.parts();
    let mut out = Vec::new();
    let mut current: Vec<u32> = parts.to_vec();
    fn rec(
        row: usize,
        remaining: u32,
        parts: &[u32],
        current: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if row == parts.len() {
            if remaining == 0 {
                out.push(Partition::from_unsorted(current.iter().copied()));
            }
            return;
        }
        let lower = parts.get(row + 1).copied().unwrap_or(0);
        let max_remove = (parts[row] - lower).min(remaining);
        for remove in 0..=max_remove {
            current[row] = parts[row] - remove;
            rec(row + 1, remaining - remove, parts, current, out);
        }
        current[row] = parts[row];
    }
    rec(0, size, parts, &mut current, &mut out);
    out
}

/// All partitions reachable from `shape` by adding a horizontal strip of
/// `size` cells.
fn strip_additions(shape: &Partition, size: u32) -> Vec<Partition> {
    let parts = shape.parts();
    let rows = parts.len() + 1; // may open one new bottom row
    let mut current: Vec<u32> = parts.to_vec();
    current.push(0);
    let mut out = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn rec(
        row: usize,
        remaining: u32,
        rows: usize,
        parts: &[u32],
        current: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if row == rows {
            if remaining == 0 {
                out.push(Partition::from_unsorted(current.iter().copied()));
            }
            return;
        }
        let base = parts.get(row).copied().unwrap_or(0);
        // Strip condition: the new row length may not pass the old length of
        // the row above.
        let cap = if row == 0 {
            base + remaining
        } else {
            parts[row - 1].min(base + remaining)
        };
        for new_len in base..=cap {
            current[row] = new_len;
            rec(row + 1, remaining - (new_len - base), rows, parts, current, out);
        }
        current[row] = base;
        // Skipping leading rows would only re-enumerate shorter strips.
    }
    rec(0, size, rows, parts, &mut current, &mut out);
    out
}

fn kostka_memo() -> &'static DashMap<(Partition, Partition), BigInt> {
    static MEMO: OnceLock<DashMap<(Partition, Partition), BigInt>> = OnceLock::new();
    MEMO.get_or_init(DashMap::new)
}

/// The Kostka number `K[lambda][mu]`: semistandard Young tableaux of shape
/// `lambda` and content `mu`. Memoized per (shape, content); the memo is
/// write-once idempotent and shared across threads.
pub fn kostka(shape: &Partition, content: &Partition) -> Result<BigInt> {
    let (ds, dc) = (shape.degree(), content.degree());
    if ds != dc {
        return Err(Error::DegreeMismatch {
            left: ds,
            right: dc,
        });
    }
    Ok(kostka_rec(shape, content))
}

fn kostka_rec(shape: &Partition, content: &Partition) -> BigInt {
    if content.is_empty() {
        return if shape.is_empty() {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    if !shape.dominates_unchecked(content) {
        return BigInt::zero();
    }
    let key = (shape.clone(), content.clone());
    if let Some(hit) = kostka_memo().get(&key) {
        return hit.clone();
    }
    // Cells holding the largest content value form a horizontal strip.
    let last = *content.parts().last().expect("nonempty");
    let rest = Partition::new(content.parts()[..content.len() - 1].to_vec()).expect("prefix");
    let mut total = BigInt::zero();
    for smaller in strip_removals(shape, last) {
        total += kostka_rec(&smaller, &rest);
    }
    kostka_memo().insert(key, total.clone());
    total
}

#[derive(Serialize, Deserialize)]
struct KostkaCacheBody {
    degree: u32,
    order: Vec<Partition>,
    k_columns: Vec<Vec<(usize, String)>>,
    k_inverse_columns: Option<Vec<Vec<(usize, String)>>>,
}

/// The full monomial/Schur transition data for one degree: a total order on
/// partitions refining dominance, the Kostka matrix over it, and (lazily)
/// its exact integer inverse.
pub struct KostkaSystem {
    degree: u32,
    guard: DegreeGuard,
    order: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// `cols[j]` holds the nonzero `K[order[i]][order[j]]` sorted by `i`;
    /// every entry satisfies `i <= j` (dominance triangularity).
    cols: Vec<Vec<(usize, BigInt)>>,
    inverse: OnceLock<Vec<Vec<(usize, BigInt)>>>,
}

impl KostkaSystem {
    /// Fills the matrix one content column at a time (columns are
    /// independent, so this parallelizes) and verifies unitriangularity.
    pub fn build(degree: u32, guard: DegreeGuard) -> Result<Self> {
        guard.check(degree)?;
        let order = partitions_of(degree, guard)?;
        let index: HashMap<Partition, usize> = order
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let cols: Vec<Vec<(usize, BigInt)>> = order
            .par_iter()
            .map(|content| {
                let mut level: HashMap<Partition, BigInt> = HashMap::new();
                level.insert(Partition::empty(), BigInt::one());
                for &part in content.parts() {
                    let mut next: HashMap<Partition, BigInt> = HashMap::new();
                    for (shape, count) in &level {
                        for bigger in strip_additions(shape, part) {
                            *next.entry(bigger).or_insert_with(BigInt::zero) += count;
                        }
                    }
                    level = next;
                }
                let mut col: Vec<(usize, BigInt)> = level
                    .into_iter()
                    .map(|(shape, count)| (index[&shape], count))
                    .collect();
                col.sort_by_key(|&(i, _)| i);
                col
            })
            .collect();

        let system = Self {
            degree,
            guard,
            order,
            index,
            cols,
            inverse: OnceLock::new(),
        };
        system.assert_unitriangular();
        Ok(system)
    }

    /// Loads a cached system if the cache holds a verified copy for this
    /// degree, otherwise builds and (best effort) persists one.
    pub fn load_or_build(degree: u32, guard: DegreeGuard, cache: &CacheConfig) -> Result<Self> {
        guard.check(degree)?;
        if let Some(path) = Self::cache_path(degree, cache) {
            if let Ok(body) = load_checksummed::<KostkaCacheBody>(&path) {
                if let Ok(system) = Self::from_cache_body(body, degree, guard) {
                    return Ok(system);
                }
            }
            let system = Self::build(degree, guard)?;
            let _ = system.save_to(cache); // re-buildable; losing the write costs time only
            return Ok(system);
        }
        Self::build(degree, guard)
    }

    fn cache_path(degree: u32, cache: &CacheConfig) -> Option<PathBuf> {
        cache.dir().map(|d| d.join(format!("kostka-deg{degree}.json")))
    }

    fn from_cache_body(body: KostkaCacheBody, degree: u32, guard: DegreeGuard) -> Result<Self> {
        if body.degree != degree {
            return Err(Error::Cache(format!(
                "cached degree {} != requested {}",
                body.degree, degree
            )));
        }
        let order = partitions_of(degree, guard)?;
        if body.order != order || body.k_columns.len() != order.len() {
            return Err(Error::Cache("cached order is stale".to_string()));
        }
        let parse_cols = |raw: Vec<Vec<(usize, String)>>| -> Result<Vec<Vec<(usize, BigInt)>>> {
            raw.into_iter()
                .map(|col| {
                    col.into_iter()
                        .map(|(i, s)| {
                            let v: BigInt = s
                                .parse()
                                .map_err(|_| Error::Cache(format!("bad integer {s:?}")))?;
                            Ok((i, v))
                        })
                        .collect()
                })
                .collect()
        };
        let cols = parse_cols(body.k_columns)?;
        let index: HashMap<Partition, usize> = order
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let system = Self {
            degree,
            guard,
            order,
            index,
            cols,
            inverse: OnceLock::new(),
        };
        system.assert_unitriangular();
        if let Some(raw_inv) = body.k_inverse_columns {
            let inv = parse_cols(raw_inv)?;
            if inv.len() == system.order.len() {
                let _ = system.inverse.set(inv);
            }
        }
        Ok(system)
    }

    /// Persists the system (including the inverse, if materialized).
    pub fn save_to(&self, cache: &CacheConfig) -> Result<()> {
        let Some(path) = Self::cache_path(self.degree, cache) else {
            return Ok(());
        };
        let to_strings = |cols: &[Vec<(usize, BigInt)>]| -> Vec<Vec<(usize, String)>> {
            cols.iter()
                .map(|col| col.iter().map(|(i, v)| (*i, v.to_string())).collect())
                .collect()
        };
        let body = KostkaCacheBody {
            degree: self.degree,
            order: self.order.clone(),
            k_columns: to_strings(&self.cols),
            k_inverse_columns: self.inverse.get().map(|inv| to_strings(inv)),
        };
        save_checksummed(&path, &body)
    }

    fn assert_unitriangular(&self) {
        for (j, col) in self.cols.iter().enumerate() {
            let mut saw_diagonal = false;
            for (i, value) in col {
                assert!(
                    *i <= j,
                    "K[{}][{}] = {} below the diagonal",
                    self.order[*i],
                    self.order[j],
                    value
                );
                assert!(
                    self.order[*i].dominates_unchecked(&self.order[j]),
                    "nonzero K at non-dominating pair ({}, {})",
                    self.order[*i],
                    self.order[j]
                );
                if *i == j {
                    saw_diagonal = true;
                    assert!(value.is_one(), "K[{0}][{0}] != 1", self.order[j]);
                }
            }
            assert!(saw_diagonal, "missing diagonal at {}", self.order[j]);
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// The total order on partitions of the degree, most dominant first.
    pub fn order(&self) -> &[Partition] {
        &self.order
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// `K[shape][content]`, zero outside the stored support.
    pub fn entry(&self, shape: &Partition, content: &Partition) -> BigInt {
        let (Some(i), Some(j)) = (self.index_of(shape), self.index_of(content)) else {
            return BigInt::zero();
        };
        self.cols[j]
            .binary_search_by_key(&i, |&(r, _)| r)
            .map(|pos| self.cols[j][pos].1.clone())
            .unwrap_or_else(|_| BigInt::zero())
    }

    /// Row `mu` of the Kostka matrix as a monomial expansion:
    /// `s_mu = sum_tau K[mu][tau] m_tau`; all coefficients nonnegative.
    pub fn schur_to_monomial(&self, mu: &Partition) -> Result<MonomialExpansion> {
        let Some(i) = self.index_of(mu) else {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: mu.degree(),
            });
        };
        let mut out = MonomialExpansion::zero(self.degree);
        for (j, col) in self.cols.iter().enumerate() {
            if let Ok(pos) = col.binary_search_by_key(&i, |&(r, _)| r) {
                out.add_term(self.order[j].clone(), col[pos].1.clone());
            }
        }
        Ok(out)
    }

    /// Solves the unitriangular system: finds `d` with
    /// `f = sum_nu d_nu s_nu` by back-substitution over exact integers.
    pub fn monomial_to_schur(&self, f: &MonomialExpansion) -> Result<SchurCoeffs> {
        if f.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: f.degree(),
            });
        }
        let n = self.order.len();
        let mut c: Vec<BigInt> = vec![BigInt::zero(); n];
        for (lam, coeff) in f.terms() {
            c[self.index[lam]] = coeff.clone();
        }
        // c_j = sum_{i <= j} K[i][j] d_i with K[j][j] = 1.
        let mut d: Vec<BigInt> = Vec::with_capacity(n);
        for (j, col) in self.cols.iter().enumerate() {
            let mut value = std::mem::take(&mut c[j]);
            for (i, k) in col {
                if *i < j {
                    value -= k * &d[*i];
                }
            }
            d.push(value);
        }
        let terms = self
            .order
            .iter()
            .zip(d)
            .filter(|(_, v)| !v.is_zero())
            .map(|(p, v)| (p.clone(), v))
            .collect();
        Ok(SchurCoeffs {
            degree: self.degree,
            terms,
        })
    }

    /// The character value `chi^mu_lambda` as the `mu` Schur coefficient of
    /// the power sum `p_lambda`.
    pub fn character_value(&self, mu: &Partition, lambda: &Partition) -> Result<BigInt> {
        if mu.degree() != lambda.degree() {
            return Err(Error::DegreeMismatch {
                left: mu.degree(),
                right: lambda.degree(),
            });
        }
        if mu.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: mu.degree(),
            });
        }
        let p = power_to_monomial(lambda, DegreeGuard::new(self.guard.max_degree().max(self.degree)))?;
        Ok(self.monomial_to_schur(&p)?.coefficient(mu))
    }

    /// The exact inverse matrix, materialized on first use and verified
    /// (`K * K_inv = I`) before being handed out.
    pub fn inverse(&self) -> &[Vec<(usize, BigInt)>] {
        self.inverse.get_or_init(|| {
            // Row view of K for the back-substitutions.
            let mut rows: Vec<Vec<(usize, BigInt)>> = vec![Vec::new(); self.order.len()];
            for (j, col) in self.cols.iter().enumerate() {
                for (i, v) in col {
                    rows[*i].push((j, v.clone()));
                }
            }
            let n = self.order.len();
            let inv: Vec<Vec<(usize, BigInt)>> = (0..n)
                .into_par_iter()
                .map(|j| {
                    // Solve K x = e_j; x vanishes beyond j.
                    let mut x: Vec<BigInt> = vec![BigInt::zero(); j + 1];
                    x[j] = BigInt::one();
                    for i in (0..j).rev() {
                        let mut acc = BigInt::zero();
                        for (k, v) in &rows[i] {
                            if *k > i && *k <= j {
                                acc += v * &x[*k];
                            }
                        }
                        x[i] = -acc;
                    }
                    x.into_iter()
                        .enumerate()
                        .filter(|(_, v)| !v.is_zero())
                        .collect()
                })
                .collect();

            // Self-check: exact identity, and the inverse inherits
            // dominance triangularity.
            for (j, xcol) in inv.iter().enumerate() {
                let mut dense: Vec<BigInt> = vec![BigInt::zero(); n];
                for (k, v) in xcol {
                    assert!(
                        self.order[*k].dominates_unchecked(&self.order[j]),
                        "inverse entry at non-dominating pair ({}, {})",
                        self.order[*k],
                        self.order[j]
                    );
                    dense[*k] = v.clone();
                }
                for (i, row) in rows.iter().enumerate() {
                    let mut acc = BigInt::zero();
                    for (k, v) in row {
                        acc += v * &dense[*k];
                    }
                    let expected = if i == j { BigInt::one() } else { BigInt::zero() };
                    assert!(
                        acc == expected,
                        "K * K_inv != I at ({}, {})",
                        self.order[i],
                        self.order[j]
                    );
                }
            }
            inv
        })
    }

    pub fn inverse_entry(&self, tau: &Partition, mu: &Partition) -> BigInt {
        let (Some(i), Some(j)) = (self.index_of(tau), self.index_of(mu)) else {
            return BigInt::zero();
        };
        self.inverse()[j]
            .iter()
            .find(|(r, _)| *r == i)
            .map(|(_, v)| v.clone())
            .unwrap_or_else(BigInt::zero)
    }

    pub fn has_inverse(&self) -> bool {
        self.inverse.get().is_some()
    }

    /// Sparse columns of `K` in order-index space (for export).
    pub fn columns(&self) -> &[Vec<(usize, BigInt)>] {
        &self.cols
    }
}

/// Convenience wrapper around [`KostkaSystem::build`].
pub fn build_kostka_system(degree: u32, guard: DegreeGuard) -> Result<KostkaSystem> {
    KostkaSystem::build(degree, guard)
}

/// `chi^mu_lambda` through the Schur route.
pub fn character_via_schur(
    system: &KostkaSystem,
    mu: &Partition,
    lambda: &Partition,
) -> Result<BigInt> {
    system.character_value(mu, lambda)
}
