//! The multiset `Ev(lambda)`: every way of replacing each part of `lambda`
//! by either its double or two copies of itself.
//!
//! For `lambda` of length `r` there are `2^r` replacement choices, each a
//! partition of `2|lambda|`; equal outcomes collapse into one entry with a
//! multiplicity, and the multiplicities are products of binomial coefficients
//! over the repeated part values of `lambda`.

use num_integer::binomial;

use crate::Partition;

/// Bit-mask enumeration is used up to this source length; beyond it the
/// binomial-product route is used (which only scales with the number of
/// distinct part values).
const BITMASK_LIMIT: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvEntry {
    pub partition: Partition,
    pub multiplicity: u64,
}

impl EvEntry {
    /// The sign `(-1)^len` attached to this entry in alternating sums.
    pub fn sign(&self) -> i32 {
        if self.partition.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvMultiset {
    source: Partition,
    entries: Vec<EvEntry>,
}

impl EvMultiset {
    pub fn source(&self) -> &Partition {
        &self.source
    }

    /// Distinct outcomes with multiplicities, largest outcome first.
    pub fn entries(&self) -> &[EvEntry] {
        &self.entries
    }

    /// Always `2^len(source)`.
    pub fn total_multiplicity(&self) -> u64 {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }
}

/// Materializes `Ev(lambda)` by direct enumeration of the `2^r` doubling /
/// copying choices (the definition). `lambda` may be empty, giving the single
/// empty outcome with multiplicity 1.
pub fn ev_multiset(lambda: &Partition) -> EvMultiset {
    if lambda.len() > BITMASK_LIMIT {
        return ev_multiset_by_formula(lambda);
    }
    ev_multiset_by_bitmask(lambda)
}

fn ev_multiset_by_bitmask(lambda: &Partition) -> EvMultiset {
    let r = lambda.len();
    let mut counts: std::collections::BTreeMap<Partition, u64> = Default::default();
    for mask in 0u64..(1u64 << r) {
        let mut parts = Vec::with_capacity(2 * r);
        for (idx, &p) in lambda.parts().iter().enumerate() {
            if mask >> idx & 1 == 1 {
                parts.push(2 * p);
            } else {
                parts.push(p);
                parts.push(p);
            }
        }
        *counts.entry(Partition::from_unsorted(parts)).or_insert(0) += 1;
    }
    assemble(lambda.clone(), counts)
}

/// The binomial-product route: for each distinct part value `k` with
/// repetition count `m_k`, choose how many of the `m_k` copies to double;
/// a choice vector `(j_k)` contributes multiplicity `prod C(m_k, j_k)`.
/// Used as an independent cross-check of [`ev_multiset`] (and as the
/// enumeration route for very long sources).
pub fn ev_multiset_by_formula(lambda: &Partition) -> EvMultiset {
    let mults = lambda.multiplicities();
    let mut counts: std::collections::BTreeMap<Partition, u64> = Default::default();
    let mut choice = vec![0u32; mults.len()];
    loop {
        let mut parts = Vec::new();
        let mut weight = 1u64;
        for (i, &(value, count)) in mults.iter().enumerate() {
            let doubled = choice[i];
            weight *= binomial(u64::from(count), u64::from(doubled));
            for _ in 0..doubled {
                parts.push(2 * value);
            }
            for _ in 0..(count - doubled) {
                parts.push(value);
                parts.push(value);
            }
        }
        *counts.entry(Partition::from_unsorted(parts)).or_insert(0) += weight;

        // Odometer over 0..=m_k per distinct value.
        let mut pos = 0;
        loop {
            if pos == mults.len() {
                return assemble(lambda.clone(), counts);
            }
            if choice[pos] < mults[pos].1 {
                choice[pos] += 1;
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

fn assemble(
    source: Partition,
    counts: std::collections::BTreeMap<Partition, u64>,
) -> EvMultiset {
    let entries = counts
        .into_iter()
        .rev()
        .map(|(partition, multiplicity)| EvEntry {
            partition,
            multiplicity,
        })
        .collect();
    EvMultiset { source, entries }
}
