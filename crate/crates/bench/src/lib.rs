//! Shared fixtures for the criterion benches.

use evsym_core::Partition;

pub fn partition(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).expect("bench fixture partition")
}

/// The degree-10 class the worked conjecture example sums over.
pub fn example_lambda() -> Partition {
    partition(&[2, 2, 1])
}
