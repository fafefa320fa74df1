//! Run-length compressed BWT with symbol rank and backward search steps.

use crate::error::{Error, Result};

/// Inclusive 1-based interval into suffix-array order. Empty iff `lo > hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SaInterval {
    pub lo: usize,
    pub hi: usize,
}

impl SaInterval {
    pub fn new(lo: usize, hi: usize) -> Self {
        SaInterval { lo, hi }
    }

    pub fn empty() -> Self {
        SaInterval { lo: 1, hi: 0 }
    }

    pub fn full(n: usize) -> Self {
        SaInterval { lo: 1, hi: n }
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    pub fn len(&self) -> usize {
        if self.is_empty() {
            0
        } else {
            self.hi - self.lo + 1
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct SymbolRun {
    /// 1-based BWT position where the run starts.
    start: usize,
    len: usize,
    /// Occurrences of this symbol in earlier runs.
    cum_before: usize,
}

/// BWT stored as maximal equal-symbol runs, with per-symbol run indices for
/// O(log r) rank queries.
#[derive(Debug, Clone)]
pub struct RunLengthBwt {
    n: usize,
    run_heads: Vec<u8>,
    run_starts: Vec<usize>,
    /// `count_before[c]` = number of BWT symbols strictly smaller than `c`.
    count_before: Vec<usize>,
    per_symbol: Vec<Vec<SymbolRun>>,
}

impl RunLengthBwt {
    /// Decomposes `bwt` into maximal runs and builds the rank indices.
    pub fn build(bwt: &[u8]) -> Result<Self> {
        if bwt.is_empty() {
            return Err(Error::EmptyText);
        }
        let n = bwt.len();
        let mut run_heads = Vec::new();
        let mut run_starts = Vec::new();
        for (i, &b) in bwt.iter().enumerate() {
            if i == 0 || b != bwt[i - 1] {
                run_heads.push(b);
                run_starts.push(i + 1);
            }
        }

        let mut totals = vec![0usize; 256];
        let mut per_symbol: Vec<Vec<SymbolRun>> = vec![Vec::new(); 256];
        for (k, (&head, &start)) in run_heads.iter().zip(&run_starts).enumerate() {
            let end = if k + 1 < run_starts.len() {
                run_starts[k + 1]
            } else {
                n + 1
            };
            let len = end - start;
            let sym = head as usize;
            per_symbol[sym].push(SymbolRun {
                start,
                len,
                cum_before: totals[sym],
            });
            totals[sym] += len;
        }

        let mut count_before = vec![0usize; 256];
        let mut acc = 0;
        for c in 0..256 {
            count_before[c] = acc;
            acc += totals[c];
        }

        Ok(RunLengthBwt {
            n,
            run_heads,
            run_starts,
            count_before,
            per_symbol,
        })
    }

    /// Rebuilds the derived indices from a stored run list.
    pub fn from_runs(run_heads: Vec<u8>, run_starts: Vec<usize>, n: usize) -> Result<Self> {
        if run_heads.is_empty() || run_heads.len() != run_starts.len() {
            return Err(Error::MalformedIndex("inconsistent run list".into()));
        }
        let mut bwt = Vec::with_capacity(n);
        for (k, (&head, &start)) in run_heads.iter().zip(&run_starts).enumerate() {
            let end = if k + 1 < run_starts.len() {
                run_starts[k + 1]
            } else {
                n + 1
            };
            if start >= end || end > n + 1 || start != bwt.len() + 1 {
                return Err(Error::MalformedIndex("bad run boundaries".into()));
            }
            bwt.extend(std::iter::repeat_n(head, end - start));
        }
        if bwt.len() != n {
            return Err(Error::MalformedIndex("run lengths do not sum to n".into()));
        }
        Self::build(&bwt)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Number of maximal runs.
    pub fn run_count(&self) -> usize {
        self.run_heads.len()
    }

    pub fn run_heads(&self) -> &[u8] {
        &self.run_heads
    }

    pub fn run_starts(&self) -> &[usize] {
        &self.run_starts
    }

    /// Occurrences of `c` among BWT positions `1..=i`. `i = 0` gives 0.
    pub fn symbol_rank(&self, c: u8, i: usize) -> usize {
        debug_assert!(i <= self.n);
        if i == 0 {
            return 0;
        }
        let runs = &self.per_symbol[c as usize];
        let k = runs.partition_point(|r| r.start <= i);
        if k == 0 {
            return 0;
        }
        let run = &runs[k - 1];
        run.cum_before + (i - run.start + 1).min(run.len)
    }

    /// One LF step: narrows `iv` to the suffixes preceded by `c`.
    pub fn backward_step(&self, iv: SaInterval, c: u8) -> SaInterval {
        if iv.is_empty() {
            return SaInterval::empty();
        }
        let base = self.count_before[c as usize];
        SaInterval {
            lo: base + self.symbol_rank(c, iv.lo - 1) + 1,
            hi: base + self.symbol_rank(c, iv.hi),
        }
    }

    /// Runs the full backward search for `pattern` fed right to left,
    /// starting from the full interval.
    pub fn backward_search(&self, pattern: &[u8]) -> SaInterval {
        let mut iv = SaInterval::full(self.n);
        for &c in pattern.iter().rev() {
            iv = self.backward_step(iv, c);
            if iv.is_empty() {
                return SaInterval::empty();
            }
        }
        iv
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::suffix::{build_suffix_array, bwt_from_sa};
    use crate::text::Text;

    fn example_bwt() -> Vec<u8> {
        // BWT of "abracadabra$"
        b"ard\0rcaaaabb".to_vec()
    }

    #[test]
    fn run_decomposition() {
        let r = RunLengthBwt::build(&example_bwt()).unwrap();
        assert_eq!(r.run_count(), 8);
        assert_eq!(r.run_heads(), b"ard\0rcab");

        assert_eq!(RunLengthBwt::build(b"aaaa").unwrap().run_count(), 1);
        assert_eq!(RunLengthBwt::build(b"ab\0a").unwrap().run_count(), 4);
        assert!(RunLengthBwt::build(b"").is_err());
    }

    #[test]
    fn rank_examples() {
        let r = RunLengthBwt::build(&example_bwt()).unwrap();
        assert_eq!(r.symbol_rank(b'a', 0), 0);
        assert_eq!(r.symbol_rank(b'a', 12), 5);
        assert_eq!(r.symbol_rank(b'r', 6), 2);
    }

    #[test]
    fn rank_matches_naive_scan() {
        let bwt = example_bwt();
        let r = RunLengthBwt::build(&bwt).unwrap();
        for c in [b'a', b'b', b'c', b'd', b'r', 0u8, b'z'] {
            for i in 0..=bwt.len() {
                let naive = bwt[..i].iter().filter(|&&b| b == c).count();
                assert_eq!(r.symbol_rank(c, i), naive, "c={c} i={i}");
            }
        }
    }

    #[test]
    fn backward_step_examples() {
        let r = RunLengthBwt::build(&example_bwt()).unwrap();
        let iv = r.backward_step(SaInterval::full(12), b'a');
        assert_eq!(iv, SaInterval::new(2, 6));
        let iv = r.backward_step(iv, b'r');
        assert_eq!(iv, SaInterval::new(11, 12));
        assert!(r.backward_step(SaInterval::empty(), b'a').is_empty());
        assert!(r.backward_step(SaInterval::full(12), b'z').is_empty());
    }

    #[test]
    fn backward_search_counts_occurrences() {
        let t = Text::from_content(b"abracadabra").unwrap();
        let bwt = bwt_from_sa(&t, &build_suffix_array(&t));
        let r = RunLengthBwt::build(&bwt).unwrap();
        assert_eq!(r.backward_search(b"abra").len(), 2);
        assert_eq!(r.backward_search(b"a").len(), 5);
        assert_eq!(r.backward_search(b"zz").len(), 0);
        // zero steps leave the full interval
        assert_eq!(r.backward_search(b"").len(), 12);
    }

    #[test]
    fn from_runs_round_trip() {
        let bwt = example_bwt();
        let r = RunLengthBwt::build(&bwt).unwrap();
        let r2 = RunLengthBwt::from_runs(
            r.run_heads().to_vec(),
            r.run_starts().to_vec(),
            r.len(),
        )
        .unwrap();
        for i in 0..=bwt.len() {
            assert_eq!(r.symbol_rank(b'a', i), r2.symbol_rank(b'a', i));
        }
    }
}
