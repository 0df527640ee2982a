//! Size caps for the exponential solvers.

use crate::error::{Error, Result};

/// Environment variable that overrides the default solver caps.
pub const MAX_N_ENV: &str = "DOMCHAIN_MAX_N";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Subset-enumeration solvers (γ, i, Γ, ir, IR, optimal-set families).
    pub enumeration_max_n: usize,
    /// Branch-and-bound independence number.
    pub alpha_max_n: usize,
    /// Grundy domination search and achievable-set enumeration.
    pub grundy_max_n: usize,
    pub isomorphism_max_n: usize,
    /// Longest sequence whose permutations are checked exhaustively.
    pub commutativity_max_len: usize,
    /// Entries in the Grundy memo table before it stops growing.
    pub memo_budget: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enumeration_max_n: 24,
            alpha_max_n: 40,
            grundy_max_n: 24,
            isomorphism_max_n: 12,
            commutativity_max_len: 8,
            memo_budget: 1 << 22,
        }
    }
}

impl Limits {
    /// Defaults, with the solver caps replaced by `DOMCHAIN_MAX_N` when set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(MAX_N_ENV) {
            Ok(v) => {
                let n = v
                    .trim()
                    .parse()
                    .map_err(|_| Error::input(format!("{MAX_N_ENV} must be a natural number, got {v:?}")))?;
                Ok(Limits::default().with_max_n(n))
            }
            Err(_) => Ok(Limits::default()),
        }
    }

    pub fn with_max_n(mut self, n: usize) -> Self {
        self.enumeration_max_n = n;
        self.alpha_max_n = n;
        self.grundy_max_n = n;
        self
    }

    pub(crate) fn check(what: &'static str, n: usize, limit: usize) -> Result<()> {
        if n > limit {
            Err(Error::Capacity { what, n, limit })
        } else {
            Ok(())
        }
    }
}
