use crate::error::{Error, Result};

/// Environment variable overriding the default object cap.
pub const CAP_ENV: &str = "SPANFORGE_CAP";

/// Enumeration budget carried by every enumerative operation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_objects: usize,
    pub max_morphisms: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_objects: 10_000,
            max_morphisms: 100_000,
        }
    }
}

impl Budget {
    /// Object cap `n`, morphism cap `10·n`.
    pub fn with_cap(n: usize) -> Self {
        Budget {
            max_objects: n,
            max_morphisms: n.saturating_mul(10),
        }
    }

    /// Default budget, or `with_cap(SPANFORGE_CAP)` when the variable parses.
    pub fn from_env() -> Self {
        std::env::var(CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .map(Budget::with_cap)
            .unwrap_or_default()
    }

    pub fn check_objects(&self, what: &str, estimate: u128) -> Result<()> {
        if estimate > self.max_objects as u128 {
            return Err(Error::Budget {
                what: format!("{what} (objects)"),
                estimate,
                cap: self.max_objects,
            });
        }
        Ok(())
    }

    pub fn check_morphisms(&self, what: &str, estimate: u128) -> Result<()> {
        if estimate > self.max_morphisms as u128 {
            return Err(Error::Budget {
                what: format!("{what} (morphisms)"),
                estimate,
                cap: self.max_morphisms,
            });
        }
        Ok(())
    }
}
