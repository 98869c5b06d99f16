//! Exact computations with integer partitions, symmetric functions in the
//! monomial basis, and symmetric group characters.
//!
//! The centerpiece is the multiset `Ev(lambda)`, obtained by replacing each
//! part of a partition by either its double or two copies of itself. The crate
//! verifies, with exact integer arithmetic throughout:
//!
//! - the identity `sum over Ev(lambda) of (-1)^len * p = 2^r * prod m_{(k,k)}`
//!   between an alternating power-sum expansion and a product of two-row
//!   monomial symmetric functions ([`monomial::alternating_ev_sum`] vs
//!   [`monomial::theorem_rhs`]);
//! - character values of the symmetric group by two independent routes: the
//!   Murnaghan-Nakayama border-strip recursion ([`mn`]) and Schur-coefficient
//!   extraction through the unitriangular Kostka transition ([`kostka`]);
//! - a conjectural equality of signed and unsigned character sums over
//!   `Ev(lambda)` against row/column-restricted partition families
//!   ([`identity::Engine::conjecture_report`]), plus the proved vanishing of
//!   signed row sums when the first part of the row index exceeds `|lambda|`.

pub mod cache;
pub mod dense;
pub mod error;
pub mod ev;
pub mod guard;
pub mod identity;
pub mod kostka;
pub mod mn;
pub mod monomial;
pub mod partition;

pub use cache::CacheConfig;
pub use dense::{to_dense, DensePolynomial};
pub use error::{Error, Result};
pub use ev::{ev_multiset, ev_multiset_by_formula, EvEntry, EvMultiset};
pub use guard::DegreeGuard;
pub use identity::{CharacterBackend, ConjectureReport, Engine, TheoremReport};
pub use kostka::{build_kostka_system, character_via_schur, kostka, KostkaSystem, SchurCoeffs};
pub use mn::{mn_character, rim_hooks, CharacterCache, RimHookRemoval};
pub use monomial::{
    alternating_ev_sum, monomial_product, power_to_monomial, theorem_rhs, MonomialExpansion,
};
pub use partition::{partitions_of, restricted_even_cols, restricted_even_rows, Partition};
