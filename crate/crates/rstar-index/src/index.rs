//! The assembled index: two run-length BWTs, phrase-boundary marks, the
//! boundary grid and the source grid, with count, locate, leftmost and
//! rightmost queries.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::grid::{DominanceGrid, GridPoint, ReportGrid};
use crate::lz77::{parse_with_sa, PhraseList};
use crate::rlbwt::{RunLengthBwt, SaInterval};
use crate::sparse::SparseBits;
use crate::suffix::{build_suffix_array, bwt_from_sa, SuffixArray};
use crate::text::{Pattern, Text};

#[derive(Debug, Clone, Copy)]
pub struct BuildOptions {
    /// Also build the phrase structures of the reversed text, enabling
    /// rightmost queries. Roughly doubles the phrase-derived sections.
    pub with_rightmost: bool,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            with_rightmost: true,
        }
    }
}

/// Structure sizes and counts exposed by the stats command.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndexStats {
    /// Text length including the sentinel.
    pub n: usize,
    /// Distinct symbols, sentinel included.
    pub sigma: usize,
    /// BWT runs of the text.
    pub r: usize,
    /// BWT runs of the reversed text.
    pub r_rev: usize,
    /// LZ77 phrases of the text.
    pub z: usize,
    /// LZ77 phrases of the reversed text, when the reverse half is present.
    pub z_rev: Option<usize>,
}

impl IndexStats {
    pub fn r_star(&self) -> usize {
        self.r + self.r_rev
    }
}

/// Phrase-derived structures for one direction of the text.
pub(crate) struct PhraseHalf {
    /// Over SA(other direction) order: positions whose suffix spells a
    /// reversed boundary prefix. Projection gives co-lexicographic ranks.
    pub(crate) mark_prefix: SparseBits,
    /// Over SA(this direction) order: positions of suffixes that start right
    /// after a boundary.
    pub(crate) mark_suffix: SparseBits,
    pub(crate) boundary_grid: ReportGrid,
    pub(crate) source_grid: Option<DominanceGrid>,
    pub(crate) z: usize,
}

impl PhraseHalf {
    fn build(dir_text: &Text, dir_sa: &SuffixArray, other_sa: &SuffixArray, with_sources: bool) -> Self {
        let pl = parse_with_sa(dir_text, dir_sa);
        Self::from_parse(&pl, dir_sa, other_sa, with_sources)
    }

    fn from_parse(pl: &PhraseList, dir_sa: &SuffixArray, other_sa: &SuffixArray, with_sources: bool) -> Self {
        let n = dir_sa.len();
        let nc = n - 1;
        let boundaries = pl.boundaries();

        let rank_of = |sa: &SuffixArray| {
            let mut inv = vec![0usize; n + 1];
            for k in 1..=n {
                inv[sa.at(k)] = k;
            }
            inv
        };
        let dir_rank = rank_of(dir_sa);
        let other_rank = rank_of(other_sa);

        // suffix side: SA position of T[b+1..], one per boundary
        let mut suffix_marks: Vec<usize> = boundaries.iter().map(|&b| dir_rank[b + 1]).collect();
        suffix_marks.sort_unstable();
        // prefix side: SA position, in the other direction, of the suffix
        // spelling T[1..b] reversed
        let mut prefix_marks: Vec<usize> = boundaries.iter().map(|&b| other_rank[nc - b + 1]).collect();
        prefix_marks.sort_unstable();

        let mark_suffix = SparseBits::build(suffix_marks, n).expect("sorted by construction");
        let mark_prefix = SparseBits::build(prefix_marks, n).expect("sorted by construction");

        let boundary_points: Vec<GridPoint> = boundaries
            .iter()
            .map(|&b| GridPoint {
                x: mark_prefix.rank1(other_rank[nc - b + 1]),
                y: mark_suffix.rank1(dir_rank[b + 1]),
                sat: b,
            })
            .collect();

        let source_grid = with_sources.then(|| {
            let pts: Vec<GridPoint> = pl
                .phrases()
                .iter()
                .filter(|p| p.copy_len > 0)
                .map(|p| GridPoint {
                    x: p.source_start,
                    y: p.source_start + p.copy_len - 1,
                    sat: p.start,
                })
                .collect();
            DominanceGrid::build(pts)
        });

        PhraseHalf {
            mark_prefix,
            mark_suffix,
            boundary_grid: ReportGrid::build(boundary_points),
            source_grid,
            z: pl.phrase_count(),
        }
    }

    pub(crate) fn from_stored(
        n: usize,
        prefix_marks: Vec<usize>,
        suffix_marks: Vec<usize>,
        boundary_points: Vec<GridPoint>,
        source_points: Option<Vec<GridPoint>>,
        z: usize,
    ) -> Result<Self> {
        Ok(PhraseHalf {
            mark_prefix: SparseBits::build(prefix_marks, n)?,
            mark_suffix: SparseBits::build(suffix_marks, n)?,
            boundary_grid: ReportGrid::build(boundary_points),
            source_grid: source_points.map(DominanceGrid::build),
            z,
        })
    }
}

/// Result of expanding primary occurrences through phrase sources.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Closure {
    /// Sorted union of the primaries and every spawned occurrence.
    pub occurrences: Vec<usize>,
    /// Number of spawn events; with deduplicated primaries each occurrence
    /// is spawned at most once, so
    /// `occurrences.len() = primaries + spawned`.
    pub spawned: usize,
}

pub struct RStarIndex {
    pub(crate) fwd: RunLengthBwt,
    pub(crate) rev: RunLengthBwt,
    pub(crate) fwd_half: PhraseHalf,
    pub(crate) rev_half: Option<PhraseHalf>,
    pub(crate) n: usize,
    pub(crate) sigma: usize,
}

impl RStarIndex {
    /// Builds the index over `content` (sentinel-free, non-empty).
    pub fn build(content: &[u8], options: BuildOptions) -> Result<Self> {
        if content.is_empty() {
            return Err(Error::EmptyText);
        }
        let text = Text::from_content(content)?;
        let rtext = text.reversed();

        let sa = build_suffix_array(&text);
        let rsa = build_suffix_array(&rtext);

        let fwd = RunLengthBwt::build(&bwt_from_sa(&text, &sa))?;
        let rev = RunLengthBwt::build(&bwt_from_sa(&rtext, &rsa))?;

        let fwd_half = PhraseHalf::build(&text, &sa, &rsa, true);
        let rev_half = options
            .with_rightmost
            .then(|| PhraseHalf::build(&rtext, &rsa, &sa, false));

        Ok(RStarIndex {
            fwd,
            rev,
            fwd_half,
            rev_half,
            n: text.len(),
            sigma: text.alphabet_size(),
        })
    }

    /// Text length including the sentinel.
    pub fn text_len(&self) -> usize {
        self.n
    }

    pub fn has_rightmost(&self) -> bool {
        self.rev_half.is_some()
    }

    pub fn stats(&self) -> IndexStats {
        IndexStats {
            n: self.n,
            sigma: self.sigma,
            r: self.fwd.run_count(),
            r_rev: self.rev.run_count(),
            z: self.fwd_half.z,
            z_rev: self.rev_half.as_ref().map(|h| h.z),
        }
    }

    /// Boundary grid points as (co-lex rank, lex rank, boundary position),
    /// sorted by x rank.
    pub fn boundary_points(&self) -> &[GridPoint] {
        self.fwd_half.boundary_grid.points()
    }

    /// Source grid points as (source start, source end, phrase start),
    /// sorted by source start.
    pub fn source_points(&self) -> &[GridPoint] {
        self.fwd_half
            .source_grid
            .as_ref()
            .expect("forward half always carries the source grid")
            .points()
    }

    /// Number of occurrences of `pattern`, by backward search alone.
    pub fn count(&self, pattern: &Pattern) -> usize {
        self.fwd.backward_search(pattern.bytes()).len()
    }

    /// Interval over SA(reverse(T)), per prefix length `i = 1..=m`, of the
    /// suffixes of reverse(T) spelling `P[1..i]` reversed.
    pub fn prefix_intervals(&self, pattern: &Pattern) -> Vec<SaInterval> {
        Self::prefix_intervals_on(&self.rev, pattern.bytes())
    }

    /// Interval over SA(T), per split `i = 1..=m`, of the suffixes starting
    /// `P[i+1..m]`; the `i = m` entry is the full interval (empty suffix).
    pub fn suffix_intervals(&self, pattern: &Pattern) -> Vec<SaInterval> {
        Self::suffix_intervals_on(&self.fwd, pattern.bytes())
    }

    fn prefix_intervals_on(rev_bwt: &RunLengthBwt, pattern: &[u8]) -> Vec<SaInterval> {
        let mut iv = SaInterval::full(rev_bwt.len());
        pattern
            .iter()
            .map(|&c| {
                iv = rev_bwt.backward_step(iv, c);
                iv
            })
            .collect()
    }

    fn suffix_intervals_on(fwd_bwt: &RunLengthBwt, pattern: &[u8]) -> Vec<SaInterval> {
        let m = pattern.len();
        let mut out = vec![SaInterval::empty(); m];
        out[m - 1] = SaInterval::full(fwd_bwt.len());
        let mut iv = out[m - 1];
        for i in (1..m).rev() {
            iv = fwd_bwt.backward_step(iv, pattern[i]);
            out[i - 1] = iv;
        }
        out
    }

    /// Occurrences that touch a phrase boundary, found split by split on the
    /// boundary grid. Sorted and deduplicated.
    pub fn primary_occurrences(&self, pattern: &Pattern) -> Vec<usize> {
        self.primaries_on(&self.fwd, &self.rev, &self.fwd_half, pattern.bytes())
            .into_iter()
            .collect()
    }

    fn primaries_on(
        &self,
        fwd_bwt: &RunLengthBwt,
        rev_bwt: &RunLengthBwt,
        half: &PhraseHalf,
        pattern: &[u8],
    ) -> BTreeSet<usize> {
        let pre = Self::prefix_intervals_on(rev_bwt, pattern);
        let suf = Self::suffix_intervals_on(fwd_bwt, pattern);
        let mut starts = BTreeSet::new();
        for i in 1..=pattern.len() {
            let xiv = half.mark_prefix.project_interval(pre[i - 1]);
            let yiv = half.mark_suffix.project_interval(suf[i - 1]);
            if xiv.is_empty() || yiv.is_empty() {
                continue;
            }
            for p in half
                .boundary_grid
                .report_rect(xiv.lo, xiv.hi, yiv.lo, yiv.hi)
            {
                starts.insert(p.sat - i + 1);
            }
        }
        starts
    }

    /// Expands deduplicated primary starts through the source grid until no
    /// new occurrence appears.
    pub fn secondary_closure(&self, primaries: &[usize], pattern_len: usize) -> Closure {
        let source_grid = self
            .fwd_half
            .source_grid
            .as_ref()
            .expect("forward half always carries the source grid");
        let mut all: BTreeSet<usize> = primaries.iter().copied().collect();
        let mut work: Vec<usize> = all.iter().copied().collect();
        let mut spawned = 0;
        while let Some(s) = work.pop() {
            let e = s + pattern_len - 1;
            for p in source_grid.report_dominating(s, e) {
                let s2 = p.sat + (s - p.x);
                spawned += 1;
                if all.insert(s2) {
                    work.push(s2);
                }
            }
        }
        Closure {
            occurrences: all.into_iter().collect(),
            spawned,
        }
    }

    /// All occurrence starts, sorted and duplicate-free.
    pub fn locate(&self, pattern: &Pattern) -> Vec<usize> {
        let primaries: Vec<usize> = self.primary_occurrences(pattern);
        self.secondary_closure(&primaries, pattern.len()).occurrences
    }

    /// Start of the leftmost occurrence, via range minima on the boundary
    /// grid only; the source grid is never consulted.
    pub fn leftmost(&self, pattern: &Pattern) -> Option<usize> {
        self.leftmost_on(&self.fwd, &self.rev, &self.fwd_half, pattern.bytes())
    }

    /// Start of the rightmost occurrence: the leftmost algorithm on the
    /// reversed direction, with the result mapped back.
    pub fn rightmost(&self, pattern: &Pattern) -> Result<Option<usize>> {
        let half = self.rev_half.as_ref().ok_or(Error::RightmostUnavailable)?;
        let reversed: Vec<u8> = pattern.bytes().iter().rev().copied().collect();
        let in_rev = self.leftmost_on(&self.rev, &self.fwd, half, &reversed);
        let nc = self.n - 1;
        Ok(in_rev.map(|p| nc - (p + pattern.len() - 1) + 1))
    }

    fn leftmost_on(
        &self,
        fwd_bwt: &RunLengthBwt,
        rev_bwt: &RunLengthBwt,
        half: &PhraseHalf,
        pattern: &[u8],
    ) -> Option<usize> {
        let pre = Self::prefix_intervals_on(rev_bwt, pattern);
        let suf = Self::suffix_intervals_on(fwd_bwt, pattern);
        let mut best: Option<usize> = None;
        for i in 1..=pattern.len() {
            let xiv = half.mark_prefix.project_interval(pre[i - 1]);
            let yiv = half.mark_suffix.project_interval(suf[i - 1]);
            if xiv.is_empty() || yiv.is_empty() {
                continue;
            }
            if let Some(b) = half
                .boundary_grid
                .range_min_rect(xiv.lo, xiv.hi, yiv.lo, yiv.hi)
            {
                let start = b - i + 1;
                best = Some(best.map_or(start, |v| v.min(start)));
            }
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> RStarIndex {
        RStarIndex::build(b"abracadabra", BuildOptions::default()).unwrap()
    }

    fn pat(p: &[u8]) -> Pattern {
        Pattern::new(p).unwrap()
    }

    #[test]
    fn build_metadata() {
        let idx = example();
        let s = idx.stats();
        assert_eq!(s.n, 12);
        assert_eq!(s.r, 8);
        assert_eq!(s.z, 6);
        assert_eq!(s.r_star(), s.r + s.r_rev);
    }

    #[test]
    fn build_grid_points() {
        let idx = example();
        let mut boundary: Vec<GridPoint> = idx.fwd_half.boundary_grid.points().to_vec();
        boundary.sort_by_key(|p| p.sat);
        assert_eq!(
            boundary,
            vec![
                GridPoint { x: 1, y: 4, sat: 1 },
                GridPoint { x: 2, y: 5, sat: 2 },
                GridPoint { x: 5, y: 2, sat: 3 },
                GridPoint { x: 3, y: 3, sat: 5 },
                GridPoint { x: 4, y: 1, sat: 7 },
            ]
        );
        let sources = idx.fwd_half.source_grid.as_ref().unwrap().points().to_vec();
        assert_eq!(
            sources,
            vec![
                GridPoint { x: 1, y: 1, sat: 4 },
                GridPoint { x: 1, y: 1, sat: 6 },
                GridPoint { x: 1, y: 4, sat: 8 },
            ]
        );
    }

    #[test]
    fn build_tiny_and_errors() {
        let idx = RStarIndex::build(b"a", BuildOptions::default()).unwrap();
        assert_eq!(idx.stats().n, 2);
        assert_eq!(idx.stats().z, 2);
        assert!(matches!(
            RStarIndex::build(b"", BuildOptions::default()),
            Err(Error::EmptyText)
        ));
    }

    #[test]
    fn count_examples() {
        let idx = example();
        assert_eq!(idx.count(&pat(b"abra")), 2);
        assert_eq!(idx.count(&pat(b"a")), 5);
        assert_eq!(idx.count(&pat(b"zz")), 0);
    }

    #[test]
    fn interval_examples() {
        let idx = example();
        let pre = idx.prefix_intervals(&pat(b"abra"));
        assert_eq!(pre[0].len(), 5); // five prefixes end with 'a'
        let suf = idx.suffix_intervals(&pat(b"abra"));
        assert_eq!(suf[1].len(), 2); // "bra" occurs twice
        assert_eq!(suf[3], SaInterval::full(12));
        let suf = idx.suffix_intervals(&pat(b"zq"));
        assert!(suf[0].is_empty());
    }

    #[test]
    fn primary_examples() {
        let idx = example();
        assert_eq!(idx.primary_occurrences(&pat(b"abra")), vec![1]);
        assert_eq!(idx.primary_occurrences(&pat(b"a")), vec![1]);
        assert!(idx.primary_occurrences(&pat(b"zz")).is_empty());
    }

    #[test]
    fn closure_examples() {
        let idx = example();
        assert_eq!(idx.secondary_closure(&[1], 4).occurrences, vec![1, 8]);
        let c = idx.secondary_closure(&[1], 1);
        assert_eq!(c.occurrences, vec![1, 4, 6, 8, 11]);
        assert_eq!(c.spawned, 4);
        assert!(idx.secondary_closure(&[], 3).occurrences.is_empty());
    }

    #[test]
    fn locate_examples() {
        let idx = example();
        assert_eq!(idx.locate(&pat(b"abra")), vec![1, 8]);
        assert_eq!(idx.locate(&pat(b"a")), vec![1, 4, 6, 8, 11]);
        assert!(idx.locate(&pat(b"abracadabraX")).is_empty());
    }

    #[test]
    fn leftmost_rightmost_examples() {
        let idx = example();
        assert_eq!(idx.leftmost(&pat(b"abra")), Some(1));
        assert_eq!(idx.leftmost(&pat(b"d")), Some(7));
        assert_eq!(idx.leftmost(&pat(b"zz")), None);
        assert_eq!(idx.rightmost(&pat(b"abra")).unwrap(), Some(8));
        assert_eq!(idx.rightmost(&pat(b"a")).unwrap(), Some(11));
        assert_eq!(idx.rightmost(&pat(b"zz")).unwrap(), None);
    }

    #[test]
    fn rightmost_without_reverse_half() {
        let idx = RStarIndex::build(
            b"abracadabra",
            BuildOptions {
                with_rightmost: false,
            },
        )
        .unwrap();
        assert!(matches!(
            idx.rightmost(&pat(b"abra")),
            Err(Error::RightmostUnavailable)
        ));
        // everything else still works
        assert_eq!(idx.locate(&pat(b"abra")), vec![1, 8]);
        assert_eq!(idx.leftmost(&pat(b"abra")), Some(1));
    }
}
