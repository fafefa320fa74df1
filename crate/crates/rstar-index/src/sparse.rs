//! Rank/select over a sparse set of marked positions.

use crate::error::{Error, Result};
use crate::rlbwt::SaInterval;

/// Sorted marked positions in a universe `1..=n`, queried by binary search.
/// Space is one word per mark; rank and select are O(log marks).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseBits {
    universe: usize,
    marks: Vec<usize>,
}

impl SparseBits {
    pub fn build(positions: Vec<usize>, universe: usize) -> Result<Self> {
        for w in positions.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::MalformedIndex(
                    "sparse bitvector positions not strictly increasing".into(),
                ));
            }
        }
        if let Some(&last) = positions.last() {
            if last > universe || positions[0] == 0 {
                return Err(Error::MalformedIndex(
                    "sparse bitvector position out of range".into(),
                ));
            }
        }
        Ok(SparseBits {
            universe,
            marks: positions,
        })
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn count(&self) -> usize {
        self.marks.len()
    }

    pub fn marks(&self) -> &[usize] {
        &self.marks
    }

    /// Number of marks at positions `≤ i`.
    pub fn rank1(&self, i: usize) -> usize {
        debug_assert!(i <= self.universe);
        self.marks.partition_point(|&p| p <= i)
    }

    /// Position of the `k`th mark, 1-based `k`.
    pub fn select1(&self, k: usize) -> Option<usize> {
        self.marks.get(k - 1).copied()
    }

    /// Maps an SA interval to the interval of mark ranks falling inside it.
    pub fn project_interval(&self, iv: SaInterval) -> SaInterval {
        if iv.is_empty() {
            return SaInterval::empty();
        }
        SaInterval {
            lo: self.rank1(iv.lo - 1) + 1,
            hi: self.rank1(iv.hi),
        }
    }
}
