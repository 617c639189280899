//! Budgeted search outcomes.

use serde::Serialize;

/// Result of a bounded search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Search<T> {
    Found(T),
    NotFound,
    BudgetExceeded,
}

impl<T> Search<T> {
    pub fn found(self) -> Option<T> {
        match self {
            Search::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, Search::Found(_))
    }
}

/// Counts search expansions against a limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Budget {
    pub limit: u64,
    pub used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    pub fn unlimited() -> Self {
        Budget::new(u64::MAX)
    }

    /// Charges one expansion; `false` once the limit is passed.
    pub fn tick(&mut self) -> bool {
        self.used = self.used.saturating_add(1);
        self.used <= self.limit
    }

    pub fn exhausted(&self) -> bool {
        self.used > self.limit
    }

    pub fn remaining(&self) -> u64 {
        self.limit.saturating_sub(self.used)
    }
}

/// Internal early-exit signal for recursive searches.
pub(crate) enum Stop<T> {
    Found(T),
    Budget,
}

impl<T> Stop<T> {
    pub(crate) fn into_search(r: Result<(), Stop<T>>) -> Search<T> {
        match r {
            Ok(()) => Search::NotFound,
            Err(Stop::Found(t)) => Search::Found(t),
            Err(Stop::Budget) => Search::BudgetExceeded,
        }
    }
}
