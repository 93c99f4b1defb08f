use crate::error::{Error, Result};

/// Default cap on candidate assignments per enumeration.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "WCOLIM_BUDGET";

/// Cap on the number of candidates an enumeration may inspect.
///
/// Exceeding it is an error, never a silent truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub limit: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            limit: DEFAULT_BUDGET,
        }
    }
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit }
    }

    /// Reads [`BUDGET_ENV`], falling back to the default.
    pub fn from_env() -> Self {
        std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(Budget::new)
            .unwrap_or_default()
    }

    pub fn meter(&self, what: &str) -> Meter {
        Meter {
            what: what.to_string(),
            limit: self.limit,
            used: 0,
        }
    }
}

/// Running counter against a [`Budget`].
#[derive(Debug)]
pub struct Meter {
    what: String,
    limit: u64,
    used: u64,
}

impl Meter {
    pub fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::Budget {
                what: self.what.clone(),
                limit: self.limit,
            })
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }
}
