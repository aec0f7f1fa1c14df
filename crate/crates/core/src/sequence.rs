//! Degree sequences and the bound pairs that cut out a poset.

use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// A strictly increasing tuple of integers of length `p + 1 >= 1`.
///
/// The derived `Ord` is the left-to-right lexicographic order, which is the
/// only tie-breaking rule used anywhere in the crate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct DegreeSequence(Vec<i64>);

impl DegreeSequence {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return invalid("degree sequence must have at least one entry");
        }
        if let Some(w) = entries.windows(2).find(|w| w[0] >= w[1]) {
            return invalid(format!(
                "degree sequence {} is not strictly increasing ({} >= {})",
                join_entries(&entries),
                w[0],
                w[1]
            ));
        }
        Ok(DegreeSequence(entries))
    }

    /// Wraps entries already known to be strictly increasing.
    pub(crate) fn from_trusted(entries: Vec<i64>) -> Self {
        debug_assert!(!entries.is_empty() && entries.windows(2).all(|w| w[0] < w[1]));
        DegreeSequence(entries)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; kept for clippy's `len_without_is_empty`.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The index `p`, one less than the length.
    pub fn p(&self) -> usize {
        self.0.len() - 1
    }

    /// Returns `self + e_i` when that is still strictly increasing.
    pub fn step_up(&self, i: usize) -> Option<DegreeSequence> {
        let mut e = self.0.clone();
        e[i] += 1;
        if i + 1 < e.len() && e[i] >= e[i + 1] {
            return None;
        }
        Some(DegreeSequence(e))
    }

    /// Adds `shift` to every entry.
    pub fn translate(&self, shift: i64) -> DegreeSequence {
        DegreeSequence(self.0.iter().map(|x| x + shift).collect())
    }

    /// Vertex label used by order complexes and DOT output: comma-joined entries.
    pub fn label(&self) -> String {
        join_entries(&self.0)
    }
}

impl TryFrom<Vec<i64>> for DegreeSequence {
    type Error = Error;

    fn try_from(v: Vec<i64>) -> Result<Self> {
        DegreeSequence::new(v)
    }
}

impl From<DegreeSequence> for Vec<i64> {
    fn from(d: DegreeSequence) -> Self {
        d.0
    }
}

impl Index<usize> for DegreeSequence {
    type Output = i64;

    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl FromStr for DegreeSequence {
    type Err = Error;

    /// Parses a comma-separated literal such as `"1,3"` or `"-2, 0, 5"`.
    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Invalid(format!("cannot parse {t:?} in sequence literal {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        DegreeSequence::new(entries)
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(&self.label())
    }
}

impl fmt::Debug for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.label())
    }
}

pub(crate) fn join_entries(entries: &[i64]) -> String {
    entries.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

/// The pair `(lower, upper)` defining a Boij-Soderberg poset.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawBounds", into = "RawBounds")]
pub struct BSBounds {
    lower: DegreeSequence,
    upper: DegreeSequence,
}

#[derive(Serialize, Deserialize)]
struct RawBounds {
    lower: DegreeSequence,
    upper: DegreeSequence,
}

impl TryFrom<RawBounds> for BSBounds {
    type Error = Error;

    fn try_from(r: RawBounds) -> Result<Self> {
        BSBounds::new(r.lower, r.upper)
    }
}

impl From<BSBounds> for RawBounds {
    fn from(b: BSBounds) -> Self {
        RawBounds { lower: b.lower, upper: b.upper }
    }
}

impl BSBounds {
    pub fn new(lower: DegreeSequence, upper: DegreeSequence) -> Result<Self> {
        if lower.len() != upper.len() {
            return invalid(format!(
                "bounds {lower:?} and {upper:?} have different lengths"
            ));
        }
        if let Some(i) = (0..lower.len()).find(|&i| lower[i] > upper[i]) {
            return invalid(format!(
                "lower bound exceeds upper bound in coordinate {i}: {lower:?} vs {upper:?}"
            ));
        }
        Ok(BSBounds { lower, upper })
    }

    /// Convenience constructor from raw entry vectors.
    pub fn from_vecs(lower: Vec<i64>, upper: Vec<i64>) -> Result<Self> {
        BSBounds::new(DegreeSequence::new(lower)?, DegreeSequence::new(upper)?)
    }

    /// Parses two comma-separated literals.
    pub fn parse(lower: &str, upper: &str) -> Result<Self> {
        BSBounds::new(lower.parse()?, upper.parse()?)
    }

    pub fn lower(&self) -> &DegreeSequence {
        &self.lower
    }

    pub fn upper(&self) -> &DegreeSequence {
        &self.upper
    }

    /// Sequence length `p + 1`.
    pub fn len(&self) -> usize {
        self.lower.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn p(&self) -> usize {
        self.lower.p()
    }

    /// `L = sum_i (upper[i] - lower[i])`, the length of every maximal chain.
    pub fn step_budget(&self) -> u64 {
        (0..self.len())
            .map(|i| (self.upper[i] - self.lower[i]) as u64)
            .sum()
    }

    /// Membership test: strictly increasing, same length, inside the box.
    pub fn contains(&self, d: &DegreeSequence) -> bool {
        d.len() == self.len() && (0..d.len()).all(|i| self.lower[i] <= d[i] && d[i] <= self.upper[i])
    }

    /// Shifts both bounds so that `lower[0] == 0`.
    pub fn normalized(&self) -> BSBounds {
        let shift = -self.lower[0];
        BSBounds {
            lower: self.lower.translate(shift),
            upper: self.upper.translate(shift),
        }
    }

    /// True when the two bounds differ only by a common translation.
    pub fn translation_equivalent(&self, other: &BSBounds) -> bool {
        self.normalized() == other.normalized()
    }
}

impl fmt::Debug for BSBounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}, {:?}]", self.lower, self.upper)
    }
}

impl fmt::Display for BSBounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) .. ({})", self.lower, self.upper)
    }
}

/// Enumeration guards. Formulas in [`crate::analysis`] are not subject to them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_elements: usize,
    pub max_chains: usize,
    pub max_step_budget: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_elements: 1_000_000,
            max_chains: 1_000_000,
            max_step_budget: 64,
        }
    }
}
