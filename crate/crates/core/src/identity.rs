//! The verifiable claims, assembled: the alternating-sum identity, the
//! vanishing of signed row sums past the degree bound, the two-sided
//! conjecture sums, and character-table slices.
//!
//! [`Engine`] owns every cache (transition systems per degree, Schur
//! coefficient vectors per conjugacy class, the border-strip memo) behind
//! shared immutable state, so row sums over distinct rows can run
//! concurrently. The default character backend is the Schur route (one
//! triangular solve serves a whole degree) with an always-on deterministic
//! sample of queries re-checked against the border-strip route; any
//! disagreement surfaces as a hard error, never a warning.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::cache::CacheConfig;
use crate::ev::ev_multiset;
use crate::kostka::{KostkaSystem, SchurCoeffs};
use crate::mn::{mn_character, CharacterCache};
use crate::monomial::{alternating_ev_sum, theorem_rhs, MonomialExpansion};
use crate::partition::{partitions_of, restricted_even_cols, restricted_even_rows};
use crate::{DegreeGuard, Error, Partition, Result};

/// Which character route answers queries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CharacterBackend {
    /// Schur-coefficient extraction; amortizes over a whole degree.
    #[default]
    Schur,
    /// Border-strip recursion; no transition system required.
    Mn,
    /// Compute both and insist they agree.
    Both,
}

/// Outcome of checking the alternating-sum identity for one `lambda`.
#[derive(Clone, Debug)]
pub struct TheoremReport {
    pub lambda: Partition,
    pub lhs: MonomialExpansion,
    pub rhs: MonomialExpansion,
    pub equal: bool,
    /// Largest part in the support of either side; bounded by `|lambda|`
    /// whenever the sides agree.
    pub max_part_in_support: u32,
}

/// The two sides of the conjectural character-sum equality at one `N`.
#[derive(Clone, Debug)]
pub struct ConjectureReport {
    pub lambda: Partition,
    pub n: u32,
    pub lhs: BigInt,
    pub rhs: BigInt,
    /// Signed row sums, one per `mu` in `R_{2N+1}(2|lambda|)`.
    pub lhs_rows: Vec<(Partition, BigInt)>,
    /// Unsigned row sums, one per `mu` in `R^c_{2N}(2|lambda|)`.
    pub rhs_rows: Vec<(Partition, BigInt)>,
    pub equal: bool,
}

/// Shared computation context: guard, backend, caches.
pub struct Engine {
    guard: DegreeGuard,
    backend: CharacterBackend,
    cross_check: bool,
    cache_cfg: CacheConfig,
    systems: RwLock<HashMap<u32, Arc<KostkaSystem>>>,
    class_coeffs: RwLock<HashMap<Partition, Arc<SchurCoeffs>>>,
    rhs_coeffs: RwLock<HashMap<Partition, Arc<SchurCoeffs>>>,
    mn_cache: CharacterCache,
}

impl Default for Engine {
    fn default() -> Self {
        Self::new(
            DegreeGuard::default(),
            CharacterBackend::default(),
            CacheConfig::disabled(),
        )
    }
}

impl Engine {
    pub fn new(guard: DegreeGuard, backend: CharacterBackend, cache_cfg: CacheConfig) -> Self {
        Self {
            guard,
            backend,
            // The sampling cross-check only makes sense when one backend is
            // authoritative.
            cross_check: backend == CharacterBackend::Schur,
            cache_cfg,
            systems: RwLock::new(HashMap::new()),
            class_coeffs: RwLock::new(HashMap::new()),
            rhs_coeffs: RwLock::new(HashMap::new()),
            mn_cache: CharacterCache::new(),
        }
    }

    /// Disables the sampled schur-vs-mn comparison (used by benchmarks and
    /// by tests that measure one route in isolation).
    pub fn without_cross_check(mut self) -> Self {
        self.cross_check = false;
        self
    }

    pub fn guard(&self) -> DegreeGuard {
        self.guard
    }

    pub fn backend(&self) -> CharacterBackend {
        self.backend
    }

    /// The transition system for one degree, built (or loaded) once and
    /// shared.
    pub fn system(&self, degree: u32) -> Result<Arc<KostkaSystem>> {
        if let Some(sys) = self.systems.read().expect("lock").get(&degree) {
            return Ok(Arc::clone(sys));
        }
        let built = Arc::new(KostkaSystem::load_or_build(
            degree,
            self.guard,
            &self.cache_cfg,
        )?);
        let mut write = self.systems.write().expect("lock");
        Ok(Arc::clone(
            write.entry(degree).or_insert_with(|| built),
        ))
    }

    /// Schur coefficients of `p_lambda`: the full character column for the
    /// class `lambda`, one triangular solve, cached.
    pub fn class_schur_coeffs(&self, lambda: &Partition) -> Result<Arc<SchurCoeffs>> {
        if let Some(hit) = self.class_coeffs.read().expect("lock").get(lambda) {
            return Ok(Arc::clone(hit));
        }
        let system = self.system(lambda.degree())?;
        let p = crate::monomial::power_to_monomial(lambda, self.guard)?;
        let coeffs = Arc::new(system.monomial_to_schur(&p)?);
        let mut write = self.class_coeffs.write().expect("lock");
        Ok(Arc::clone(
            write.entry(lambda.clone()).or_insert_with(|| coeffs),
        ))
    }

    /// `chi^mu_lambda` via the configured backend.
    pub fn character(&self, mu: &Partition, lambda: &Partition) -> Result<BigInt> {
        if mu.degree() != lambda.degree() {
            return Err(Error::DegreeMismatch {
                left: mu.degree(),
                right: lambda.degree(),
            });
        }
        match self.backend {
            CharacterBackend::Schur => {
                let value = self.class_schur_coeffs(lambda)?.coefficient(mu);
                if self.cross_check && selected_for_cross_check(mu, lambda) {
                    let via_mn = mn_character(mu, lambda, &self.mn_cache)?;
                    if via_mn != value {
                        return Err(Error::BackendDisagreement {
                            mu: mu.to_string(),
                            lambda: lambda.to_string(),
                            schur: value,
                            mn: via_mn,
                        });
                    }
                }
                Ok(value)
            }
            CharacterBackend::Mn => mn_character(mu, lambda, &self.mn_cache),
            CharacterBackend::Both => {
                let schur = self.class_schur_coeffs(lambda)?.coefficient(mu);
                let mn = mn_character(mu, lambda, &self.mn_cache)?;
                if schur != mn {
                    return Err(Error::BackendDisagreement {
                        mu: mu.to_string(),
                        lambda: lambda.to_string(),
                        schur,
                        mn,
                    });
                }
                Ok(schur)
            }
        }
    }

    /// Checks `alternating_ev_sum(lambda) == theorem_rhs(lambda)` exactly.
    pub fn verify_theorem(&self, lambda: &Partition) -> Result<TheoremReport> {
        let lhs = alternating_ev_sum(lambda, self.guard)?;
        let rhs = theorem_rhs(lambda, self.guard)?;
        let equal = lhs == rhs;
        let max_part_in_support = lhs.max_part().max(rhs.max_part());
        Ok(TheoremReport {
            lambda: lambda.clone(),
            lhs,
            rhs,
            equal,
            max_part_in_support,
        })
    }

    /// Character sum over `Ev(lambda)` (with multiplicities) at row `mu`,
    /// weighted by `(-1)^len` when `signed`.
    pub fn row_sum(&self, lambda: &Partition, mu: &Partition, signed: bool) -> Result<BigInt> {
        let two_n = 2 * lambda.degree();
        if mu.degree() != two_n {
            return Err(Error::DegreeMismatch {
                left: mu.degree(),
                right: two_n,
            });
        }
        let mut total = BigInt::zero();
        for entry in ev_multiset(lambda).entries() {
            let chi = self.character(mu, &entry.partition)?;
            let mut weight = BigInt::from(entry.multiplicity);
            if signed && entry.sign() < 0 {
                weight = -weight;
            }
            total += weight * chi;
        }
        Ok(total)
    }

    /// The signed row sum computed without any characters: `2^r` times the
    /// `mu` Schur coefficient of `prod m_(k,k)`. One solve serves every `mu`
    /// of the degree.
    pub fn row_sum_via_identity(&self, lambda: &Partition, mu: &Partition) -> Result<BigInt> {
        let two_n = 2 * lambda.degree();
        if mu.degree() != two_n {
            return Err(Error::DegreeMismatch {
                left: mu.degree(),
                right: two_n,
            });
        }
        Ok(self.rhs_schur_coeffs(lambda)?.coefficient(mu))
    }

    fn rhs_schur_coeffs(&self, lambda: &Partition) -> Result<Arc<SchurCoeffs>> {
        if let Some(hit) = self.rhs_coeffs.read().expect("lock").get(lambda) {
            return Ok(Arc::clone(hit));
        }
        let rhs = theorem_rhs(lambda, self.guard)?;
        let system = self.system(rhs.degree())?;
        let coeffs = Arc::new(system.monomial_to_schur(&rhs)?);
        let mut write = self.rhs_coeffs.write().expect("lock");
        Ok(Arc::clone(
            write.entry(lambda.clone()).or_insert_with(|| coeffs),
        ))
    }

    /// For every `mu` of degree `2|lambda|` with `mu_1 > |lambda|`, checks
    /// that the signed row sum vanishes. Returns the checked pairs; any
    /// nonzero value is an error naming the offending pair.
    pub fn verify_corollary(&self, lambda: &Partition) -> Result<Vec<(Partition, BigInt)>> {
        let n = lambda.degree();
        self.guard.check(2 * n)?;
        let mut checked = Vec::new();
        for mu in partitions_of(2 * n, self.guard)? {
            if mu.first() <= n {
                continue;
            }
            let value = self.row_sum_via_identity(lambda, &mu)?;
            if !value.is_zero() {
                return Err(Error::VanishingViolation {
                    lambda: lambda.to_string(),
                    mu: mu.to_string(),
                    value,
                });
            }
            checked.push((mu, value));
        }
        Ok(checked)
    }

    /// Evaluates both sides of the conjectural equality at one `N`:
    /// signed sums over `R_{2N+1}(2n)` against unsigned sums over
    /// `R^c_{2N}(2n)`. Row sums run in parallel; equality is reported,
    /// never assumed.
    pub fn conjecture_report(&self, lambda: &Partition, n: u32) -> Result<ConjectureReport> {
        let two_n = 2 * lambda.degree();
        self.guard.check(two_n)?;
        let lhs_family = restricted_even_rows(two_n, 2 * n + 1, self.guard)?;
        let rhs_family = restricted_even_cols(two_n, 2 * n, self.guard)?;
        let lhs_rows: Vec<(Partition, BigInt)> = lhs_family
            .into_par_iter()
            .map(|mu| {
                let sum = self.row_sum(lambda, &mu, true)?;
                Ok((mu, sum))
            })
            .collect::<Result<_>>()?;
        let rhs_rows: Vec<(Partition, BigInt)> = rhs_family
            .into_par_iter()
            .map(|mu| {
                let sum = self.row_sum(lambda, &mu, false)?;
                Ok((mu, sum))
            })
            .collect::<Result<_>>()?;
        let lhs: BigInt = lhs_rows.iter().map(|(_, v)| v).sum();
        let rhs: BigInt = rhs_rows.iter().map(|(_, v)| v).sum();
        let equal = lhs == rhs;
        Ok(ConjectureReport {
            lambda: lambda.clone(),
            n,
            lhs,
            rhs,
            lhs_rows,
            rhs_rows,
            equal,
        })
    }

    /// Smallest `N` at which both index families stop growing.
    pub fn saturation_n(&self, lambda: &Partition) -> Result<u32> {
        let two_n = 2 * lambda.degree();
        self.guard.check(two_n)?;
        let full_rows = restricted_even_rows(two_n, two_n, self.guard)?;
        let full_cols = restricted_even_cols(two_n, two_n, self.guard)?;
        let max_row_len = full_rows.iter().map(|p| p.len() as u32).max().unwrap_or(0);
        let max_col_len = full_cols.iter().map(|p| p.len() as u32).max().unwrap_or(0);
        // lhs saturates once 2N+1 >= max length; rhs once 2N >= max length.
        let n_rows = max_row_len.saturating_sub(1).div_ceil(2);
        let n_cols = max_col_len.div_ceil(2);
        Ok(n_rows.max(n_cols).max(1))
    }

    /// `chi^mu_lambda` for each row `mu` and column `lambda`.
    pub fn character_table_slice(
        &self,
        degree: u32,
        rows: &[Partition],
        cols: &[Partition],
    ) -> Result<Vec<Vec<BigInt>>> {
        self.guard.check(degree)?;
        for p in rows.iter().chain(cols) {
            if p.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: p.degree(),
                });
            }
        }
        rows.par_iter()
            .map(|mu| cols.iter().map(|lam| self.character(mu, lam)).collect())
            .collect()
    }
}

/// Deterministic ~5% sample of character queries to re-check against the
/// independent route. FNV-1a over the two part lists; stable across runs
/// and thread counts.
fn selected_for_cross_check(mu: &Partition, lambda: &Partition) -> bool {
    let mut hash: u64 = 0xcbf29ce484222325;
    let mut eat = |byte: u64| {
        hash ^= byte;
        hash = hash.wrapping_mul(0x100000001b3);
    };
    for &p in mu.parts() {
        eat(u64::from(p));
    }
    eat(u64::MAX);
    for &p in lambda.parts() {
        eat(u64::from(p));
    }
    hash.is_multiple_of(20)
}
