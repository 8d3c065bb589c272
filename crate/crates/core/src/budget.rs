use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// Optional wall-clock deadline for the exact searches.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Budget {
    deadline: Option<Instant>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { deadline: None }
    }

    pub fn with_timeout(limit: Duration) -> Self {
        Budget { deadline: Some(Instant::now() + limit) }
    }

    pub fn expired(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }

    pub(crate) fn check(&self) -> Result<()> {
        if self.expired() {
            Err(Error::BudgetExhausted)
        } else {
            Ok(())
        }
    }

    /// Checks the clock on the first and then every 4096th tick of `counter`.
    #[inline]
    pub(crate) fn tick(&self, counter: u64) -> Result<()> {
        if self.deadline.is_some() && counter & 0xfff == 1 {
            self.check()
        } else {
            Ok(())
        }
    }
}
