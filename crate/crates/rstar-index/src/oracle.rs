//! Brute-force reference implementations. These are the ground truth for the
//! test suites and back the CLI's `--verify` mode; they are deliberately
//! single loop nests with no shortcuts.

use crate::grid::GridPoint;
use crate::lz77::{Phrase, PhraseList};
use crate::text::Text;

/// All 1-based starts `s` with `text[s..s+m−1] = pattern`, by direct
/// comparison over the content (the sentinel never matches).
pub fn naive_locate(content: &[u8], pattern: &[u8]) -> Vec<usize> {
    if pattern.is_empty() || pattern.len() > content.len() {
        return Vec::new();
    }
    (0..=content.len() - pattern.len())
        .filter(|&i| &content[i..i + pattern.len()] == pattern)
        .map(|i| i + 1)
        .collect()
}

/// Direct filter for 4-sided rectangle queries.
pub fn naive_rect_filter(
    points: &[GridPoint],
    x1: usize,
    x2: usize,
    y1: usize,
    y2: usize,
) -> Vec<GridPoint> {
    let mut out: Vec<GridPoint> = points
        .iter()
        .filter(|p| x1 <= p.x && p.x <= x2 && y1 <= p.y && p.y <= y2)
        .copied()
        .collect();
    out.sort_unstable();
    out
}

/// Direct filter for 2-sided dominance queries: `x ≤ s` and `y ≥ e`.
pub fn naive_dominance_filter(points: &[GridPoint], s: usize, e: usize) -> Vec<GridPoint> {
    let mut out: Vec<GridPoint> = points
        .iter()
        .filter(|p| p.x <= s && p.y >= e)
        .copied()
        .collect();
    out.sort_unstable();
    out
}

/// Quadratic greedy factorization: at each position, scan every earlier
/// start for the longest match whose source ends no later than the current
/// position; leftmost source on ties.
pub fn naive_parse(text: &Text) -> PhraseList {
    let bytes = text.bytes();
    let n = bytes.len();
    let mut phrases = Vec::new();
    let mut i = 1usize;
    while i <= n {
        let mut copy_len = 0usize;
        let mut source_start = 0usize;
        for j in 1..i {
            let mut l = 0;
            while i + l < n && j + l <= i && bytes[j + l - 1] == bytes[i + l - 1] {
                l += 1;
            }
            if l > copy_len {
                copy_len = l;
                source_start = j;
            }
        }
        phrases.push(Phrase {
            start: i,
            copy_len,
            source_start,
            explicit_char: bytes[i + copy_len - 1],
        });
        i += copy_len + 1;
    }
    PhraseList::from_parts(phrases, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn locate_examples() {
        assert_eq!(naive_locate(b"abracadabra", b"abra"), vec![1, 8]);
        assert_eq!(naive_locate(b"ab", b"abc"), Vec::<usize>::new());
        assert_eq!(naive_locate(b"aaaa", b"aa"), vec![1, 2, 3]);
    }

    #[test]
    fn parse_matches_fast_parser() {
        for content in [&b"abracadabra"[..], b"aaaa", b"a", b"mississippi"] {
            let t = Text::from_content(content).unwrap();
            assert_eq!(naive_parse(&t), crate::lz77::parse(&t));
        }
    }

    #[test]
    fn filters_on_empty_sets() {
        assert!(naive_rect_filter(&[], 1, 10, 1, 10).is_empty());
        assert!(naive_dominance_filter(&[], 5, 5).is_empty());
    }
}
