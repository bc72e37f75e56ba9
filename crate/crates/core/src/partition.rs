//! Partitions, Young diagrams and hook lengths.
//!
//! Rows and columns are numbered from 1, so the box `(i, j)` sits in row `i`
//! and column `j` of the Young diagram. The empty partition is the unique
//! partition of 0 and is an ordinary value of [`Partition`].

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive parts.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates `parts` and returns the partition in canonical form.
    ///
    /// Trailing zeros are stripped. A zero followed by a positive part, or a
    /// part larger than its predecessor, is rejected; the error carries the
    /// 1-based position of the offending entry.
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let mut parts = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        for (idx, &part) in parts.iter().enumerate() {
            if part == 0 {
                return Err(Error::NonPositivePart { position: idx + 1 });
            }
            if idx > 0 && part > parts[idx - 1] {
                return Err(Error::IncreasingStep {
                    position: idx + 1,
                    previous: parts[idx - 1],
                    part,
                });
            }
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// Builds a partition from parts already known to be canonical.
    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    /// Number of (positive) parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The number being partitioned, i.e. the number of boxes.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part `i` (1-based), or 0 past the last part.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Transposes the Young diagram: part `j` of the result counts the parts
    /// that are at least `j`.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        let mut conj = vec![0usize; width];
        for &p in &self.parts {
            for c in conj.iter_mut().take(p) {
                *c += 1;
            }
        }
        Partition { parts: conj }
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.conjugate() == *self
    }

    /// Side of the Durfee square: the largest `i` with `λ_i >= i`. This is
    /// also the number of boxes on the main diagonal.
    pub fn durfee_side(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|&(idx, &p)| p > idx)
            .count()
    }

    pub fn contains_box(&self, row: usize, column: usize) -> bool {
        row >= 1 && column >= 1 && column <= self.part(row)
    }

    /// Hook length of the box `(row, column)`: `λ_i + λ'_j - i - j + 1`.
    pub fn hook_length(&self, row: usize, column: usize) -> Result<usize> {
        if !self.contains_box(row, column) {
            return Err(Error::OutOfDiagram { row, column });
        }
        let conj = self.conjugate();
        Ok(self.part(row) + conj.part(column) + 1 - row - column)
    }

    /// Rows of hook lengths, one row per part.
    pub fn hook_table(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(idx, &p)| {
                let row = idx + 1;
                (1..=p)
                    .map(|column| p + conj.part(column) + 1 - row - column)
                    .collect()
            })
            .collect()
    }

    /// Calls `f` with every hook length, stopping early when `f` returns
    /// `false`. Returns whether the walk ran to completion.
    fn for_each_hook(&self, mut f: impl FnMut(usize) -> bool) -> bool {
        let conj = self.conjugate();
        for (idx, &p) in self.parts.iter().enumerate() {
            let row = idx + 1;
            for column in 1..=p {
                if !f(p + conj.parts[column - 1] + 1 - row - column) {
                    return false;
                }
            }
        }
        true
    }

    pub fn hook_multiset(&self) -> HookMultiset {
        let mut counts = BTreeMap::new();
        self.for_each_hook(|h| {
            *counts.entry(h).or_insert(0) += 1;
            true
        });
        HookMultiset { counts }
    }

    /// First-column hook lengths.
    pub fn beta_set(&self) -> BetaSet {
        let ell = self.len();
        BetaSet {
            values: self
                .parts
                .iter()
                .enumerate()
                .map(|(idx, &p)| p + ell - idx - 1)
                .collect(),
        }
    }

    /// Number of boxes with odd hook length minus the number with even hook
    /// length.
    pub fn disparity(&self) -> i64 {
        let mut dp = 0i64;
        self.for_each_hook(|h| {
            dp += if h % 2 == 1 { 1 } else { -1 };
            true
        });
        dp
    }

    /// True when no hook length is divisible by `t`.
    pub fn is_t_core(&self, t: usize) -> Result<bool> {
        if t == 0 {
            return Err(Error::ZeroModulus);
        }
        Ok(self.for_each_hook(|h| h % t != 0))
    }

    /// True when the partition is a `t`-core for every `t` in `moduli`.
    pub fn is_simultaneous_core(&self, moduli: &[usize]) -> Result<bool> {
        if moduli.is_empty() {
            return Err(Error::EmptyModuli);
        }
        if moduli.contains(&0) {
            return Err(Error::ZeroModulus);
        }
        Ok(self.for_each_hook(|h| moduli.iter().all(|&t| h % t != 0)))
    }

    /// ASCII picture of the Young diagram, one line per row.
    pub fn diagram(&self) -> String {
        let mut out = String::new();
        for &p in &self.parts {
            out.push_str(&"[]".repeat(p));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, p) in self.parts.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Parses the comma-separated text form, e.g. `"4,4,4,3"`. The empty string
/// is the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_list(s).and_then(Partition::new)
    }
}

/// Parses a comma-separated list of non-negative integers.
pub(crate) fn parse_list(s: &str) -> Result<Vec<usize>> {
    let text = s.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|tok| {
            tok.trim().parse::<usize>().map_err(|e| Error::Parse {
                text: s.to_string(),
                reason: format!("{:?}: {e}", tok.trim()),
            })
        })
        .collect()
}

impl serde::Serialize for Partition {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Multiset of the hook lengths of a partition.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct HookMultiset {
    counts: BTreeMap<usize, usize>,
}

impl HookMultiset {
    /// Multiplicity of hook length `h`.
    pub fn count(&self, h: usize) -> usize {
        self.counts.get(&h).copied().unwrap_or(0)
    }

    /// Total number of hooks, which is the weight of the partition.
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn odd_count(&self) -> usize {
        self.counts
            .iter()
            .filter(|(h, _)| *h % 2 == 1)
            .map(|(_, c)| c)
            .sum()
    }

    pub fn even_count(&self) -> usize {
        self.counts
            .iter()
            .filter(|(h, _)| *h % 2 == 0)
            .map(|(_, c)| c)
            .sum()
    }

    /// `(hook length, multiplicity)` pairs in increasing order of length.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.counts.iter().map(|(&h, &c)| (h, c))
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }
}

impl FromIterator<(usize, usize)> for HookMultiset {
    fn from_iter<I: IntoIterator<Item = (usize, usize)>>(iter: I) -> Self {
        let mut counts = BTreeMap::new();
        for (h, c) in iter {
            if c > 0 {
                *counts.entry(h).or_insert(0) += c;
            }
        }
        HookMultiset { counts }
    }
}

/// Strictly decreasing set of first-column hook lengths.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BetaSet {
    values: Vec<usize>,
}

impl BetaSet {
    /// Collects `values` into a beta-set, sorting them in decreasing order.
    /// Zero and repeated values are rejected.
    pub fn from_values(values: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut values: Vec<usize> = values.into_iter().collect();
        values.sort_unstable_by(|a, b| b.cmp(a));
        if values.last() == Some(&0) {
            return Err(Error::Parse {
                text: format!("{values:?}"),
                reason: "beta-set entries must be positive".into(),
            });
        }
        if values.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Parse {
                text: format!("{values:?}"),
                reason: "beta-set entries must be distinct".into(),
            });
        }
        Ok(BetaSet { values })
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.values.binary_search_by(|x| v.cmp(x)).is_ok()
    }

    pub fn max(&self) -> Option<usize> {
        self.values.first().copied()
    }
}
