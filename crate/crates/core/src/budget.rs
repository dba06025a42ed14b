//! Work and memory limits for the enumeration-based operations.
//!
//! Every potentially explosive routine checks its cost against a budget
//! before doing any work and refuses with a structured error instead of
//! thrashing. Costs are computed exactly (no float estimates), so refusal
//! thresholds are reproducible.

/// Enumeration limits. All comparisons are exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of ordered tuple pairs a naive double enumeration may
    /// visit (the naive counter visits X^2k of them).
    pub max_pairs: u128,
    /// Maximum number of multisets, and hence map entries, the
    /// signature-histogram counter may materialize.
    pub max_map_entries: u128,
    /// Maximum number of completions the distinct-value-tuple counter may
    /// enumerate (X^(k-r) of them).
    pub max_completions: u128,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_pairs: 1_000_000_000,
            max_map_entries: 10_000_000,
            max_completions: 100_000_000,
        }
    }
}
