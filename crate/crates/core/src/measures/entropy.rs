//! Shannon entropy of a symbol distribution.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// A multiset of symbols with their observation counts.
///
/// Counts are kept in a sorted map so iteration (and therefore any derived
/// serialization) is deterministic.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SymbolDistribution {
    counts: BTreeMap<String, u64>,
    total: u64,
}

impl SymbolDistribution {
    pub fn new() -> Self {
        Self::default()
    }

    /// Build from (symbol, count) pairs. Zero counts are dropped; repeated
    /// symbols accumulate.
    pub fn from_counts<I, S>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (S, u64)>,
        S: Into<String>,
    {
        let mut dist = Self::new();
        for (symbol, count) in pairs {
            dist.add_count(symbol.into(), count);
        }
        dist
    }

    /// Tally whitespace-delimited tokens; `lowercase` folds case first.
    pub fn from_text(text: &str, lowercase: bool) -> Self {
        let mut dist = Self::new();
        for token in text.split_whitespace() {
            if lowercase {
                dist.add_count(token.to_lowercase(), 1);
            } else {
                dist.add_count(token.to_string(), 1);
            }
        }
        dist
    }

    pub fn add_count(&mut self, symbol: String, count: u64) {
        if count == 0 {
            return;
        }
        *self.counts.entry(symbol).or_insert(0) += count;
        self.total += count;
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn symbol_count(&self) -> usize {
        self.counts.len()
    }

    pub fn counts(&self) -> impl Iterator<Item = (&str, u64)> {
        self.counts.iter().map(|(s, &c)| (s.as_str(), c))
    }
}

/// Shannon entropy in bits: `-Σ pᵢ log₂ pᵢ` over symbols with `pᵢ > 0`.
///
/// The result lies in `[0, log₂ S]` for `S` distinct symbols, reaching the
/// upper bound exactly when all counts are equal.
pub fn shannon_entropy(dist: &SymbolDistribution) -> Result<f64> {
    if dist.total == 0 {
        return Err(Error::domain("entropy of an empty distribution"));
    }
    let total = dist.total as f64;
    let mut entropy = 0.0;
    for (_, count) in dist.counts() {
        let p = count as f64 / total;
        entropy -= p * p.log2();
    }
    // Guard against -0.0 from the single-symbol case.
    Ok(if entropy == 0.0 { 0.0 } else { entropy })
}
