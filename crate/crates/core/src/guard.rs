//! Resource guard against accidental exponential blowups.

use crate::{Error, Result};

/// Upper bound on the symmetric-function degree an operation may touch.
///
/// The default of 24 keeps every built-in computation comfortably exact and
/// fast (identity checks go through degree `2|lambda|`, so the default admits
/// `|lambda| <= 12`). The guard is a safety rail, not a correctness bound:
/// callers may raise it explicitly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeGuard {
    max_degree: u32,
}

pub const DEFAULT_MAX_DEGREE: u32 = 24;

impl Default for DegreeGuard {
    fn default() -> Self {
        Self {
            max_degree: DEFAULT_MAX_DEGREE,
        }
    }
}

impl DegreeGuard {
    pub fn new(max_degree: u32) -> Self {
        Self { max_degree }
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn check(&self, degree: u32) -> Result<()> {
        if degree > self.max_degree {
            Err(Error::DegreeGuardExceeded {
                degree,
                limit: self.max_degree,
            })
        } else {
            Ok(())
        }
    }
}
