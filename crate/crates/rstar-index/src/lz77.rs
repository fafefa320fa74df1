//! Greedy LZ77 factorization: each phrase is the longest prefix of the
//! remaining text with an occurrence starting strictly earlier and ending
//! no later than the phrase start (so source and copy may share the start
//! position), extended by one explicit symbol. Among maximal matches the
//! leftmost source is chosen.

use crate::error::{Error, Result};
use crate::suffix::{build_suffix_array, SuffixArray};
use crate::text::Text;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Phrase {
    /// 1-based start of the phrase in the text.
    pub start: usize,
    /// Length of the copied part, ≥ 0.
    pub copy_len: usize,
    /// Start of the copy's source; meaningful iff `copy_len > 0`.
    pub source_start: usize,
    /// The final literal symbol of the phrase.
    pub explicit_char: u8,
}

impl Phrase {
    /// Position of the phrase's last symbol.
    pub fn end(&self) -> usize {
        self.start + self.copy_len
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhraseList {
    phrases: Vec<Phrase>,
    n: usize,
}

impl PhraseList {
    /// Assembles a phrase list from raw parts; structural validity is
    /// checked by `decode`.
    pub fn from_parts(phrases: Vec<Phrase>, n: usize) -> Self {
        PhraseList { phrases, n }
    }

    pub fn phrases(&self) -> &[Phrase] {
        &self.phrases
    }

    pub fn phrase_count(&self) -> usize {
        self.phrases.len()
    }

    pub fn text_len(&self) -> usize {
        self.n
    }

    /// Phrase end positions `b` with `1 ≤ b < n`. The final boundary at `n`
    /// is excluded: no non-empty suffix follows it.
    pub fn boundaries(&self) -> Vec<usize> {
        self.phrases
            .iter()
            .map(Phrase::end)
            .filter(|&b| b < self.n)
            .collect()
    }

    /// Left-to-right reconstruction, resolving overlapping copies symbol by
    /// symbol.
    pub fn decode(&self) -> Result<Text> {
        let mut bytes: Vec<u8> = Vec::with_capacity(self.n);
        for p in &self.phrases {
            if p.start != bytes.len() + 1 {
                return Err(Error::MalformedIndex("phrases do not tile the text".into()));
            }
            if p.copy_len > 0 {
                if p.source_start == 0 || p.source_start >= p.start {
                    return Err(Error::MalformedIndex("phrase source not earlier".into()));
                }
                for k in 0..p.copy_len {
                    bytes.push(bytes[p.source_start - 1 + k]);
                }
            }
            bytes.push(p.explicit_char);
        }
        if bytes.len() != self.n || bytes.pop() != Some(crate::text::SENTINEL) {
            return Err(Error::MalformedIndex("decoded length mismatch".into()));
        }
        Text::from_content(&bytes)
    }
}

/// Sparse table over SA positions: minimum text position in an SA rank range.
struct PosRmq {
    levels: Vec<Vec<usize>>,
}

impl PosRmq {
    fn build(positions: &[usize]) -> Self {
        let n = positions.len();
        let mut levels = vec![positions.to_vec()];
        let mut span = 1;
        while span * 2 <= n {
            let prev = levels.last().unwrap();
            let row: Vec<usize> = (0..=n - span * 2)
                .map(|i| prev[i].min(prev[i + span]))
                .collect();
            levels.push(row);
            span *= 2;
        }
        PosRmq { levels }
    }

    /// Min over 0-based inclusive range `[lo, hi]`.
    fn min(&self, lo: usize, hi: usize) -> usize {
        let k = (usize::BITS - 1 - (hi - lo + 1).leading_zeros()) as usize;
        self.levels[k][lo].min(self.levels[k][hi + 1 - (1 << k)])
    }
}

/// Parses `text`, building the suffix array internally.
pub fn parse(text: &Text) -> PhraseList {
    parse_with_sa(text, &build_suffix_array(text))
}

/// Parses `text` reusing a precomputed suffix array.
///
/// A phrase starting at `i` copies the longest `text[i..i+L−1]` that also
/// occurs as `text[j..j+L−1]` with `j < i` and `j + L − 1 ≤ i`, then adds
/// one explicit symbol. Found by binary search on `L`: the leftmost
/// occurrence of each candidate prefix comes from the SA range of that
/// prefix and a position RMQ over the suffix array.
pub fn parse_with_sa(text: &Text, sa: &SuffixArray) -> PhraseList {
    let n = text.len();
    let bytes = text.bytes();
    let rmq = PosRmq::build(sa.positions());

    // leftmost start of `needle`, or 0 if absent
    let leftmost = |needle: &[u8]| -> usize {
        let suffix = |k: usize| &bytes[sa.at(k + 1) - 1..];
        let mut lo = 0;
        let mut hi = n;
        while lo < hi {
            let mid = (lo + hi) / 2;
            if suffix(mid) < needle {
                lo = mid + 1;
            } else {
                hi = mid;
            }
        }
        let first = lo;
        let mut hi = n;
        while lo < hi {
            let mid = (lo + hi) / 2;
            if suffix(mid).starts_with(needle) {
                lo = mid + 1;
            } else {
                hi = mid;
            }
        }
        if first == lo {
            0
        } else {
            rmq.min(first, lo - 1)
        }
    };

    // admissible source for a copy of length l at position i
    let source_for = |i: usize, l: usize| -> Option<usize> {
        let j = leftmost(&bytes[i - 1..i - 1 + l]);
        (j > 0 && j < i && j + l - 1 <= i).then_some(j)
    };

    let mut phrases = Vec::new();
    let mut i = 1;
    while i <= n {
        let mut lo = 0;
        let mut hi = n - i; // leave room for the explicit symbol
        while lo < hi {
            let mid = (lo + hi).div_ceil(2);
            if source_for(i, mid).is_some() {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        let copy_len = lo;
        let source_start = if copy_len > 0 {
            source_for(i, copy_len).expect("binary search established a source")
        } else {
            0
        };
        phrases.push(Phrase {
            start: i,
            copy_len,
            source_start,
            explicit_char: bytes[i + copy_len - 1],
        });
        i += copy_len + 1;
    }

    PhraseList { phrases, n }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse_str(content: &[u8]) -> PhraseList {
        parse(&Text::from_content(content).unwrap())
    }

    #[test]
    fn abracadabra_parse() {
        let pl = parse_str(b"abracadabra");
        let p = pl.phrases();
        assert_eq!(pl.phrase_count(), 6);
        assert_eq!(p[0], Phrase { start: 1, copy_len: 0, source_start: 0, explicit_char: b'a' });
        assert_eq!(p[1], Phrase { start: 2, copy_len: 0, source_start: 0, explicit_char: b'b' });
        assert_eq!(p[2], Phrase { start: 3, copy_len: 0, source_start: 0, explicit_char: b'r' });
        assert_eq!(p[3], Phrase { start: 4, copy_len: 1, source_start: 1, explicit_char: b'c' });
        assert_eq!(p[4], Phrase { start: 6, copy_len: 1, source_start: 1, explicit_char: b'd' });
        assert_eq!(p[5], Phrase { start: 8, copy_len: 4, source_start: 1, explicit_char: 0 });
    }

    #[test]
    fn single_symbol() {
        let pl = parse_str(b"a");
        assert_eq!(pl.phrase_count(), 2);
        assert_eq!(pl.boundaries(), vec![1]);
    }

    #[test]
    fn overlapping_source() {
        let pl = parse_str(b"aaaa");
        let p = pl.phrases();
        assert_eq!(pl.phrase_count(), 3);
        assert_eq!(p[1], Phrase { start: 2, copy_len: 2, source_start: 1, explicit_char: b'a' });
        assert_eq!(pl.boundaries(), vec![1, 4]);
    }

    #[test]
    fn boundaries_exclude_final() {
        assert_eq!(parse_str(b"abracadabra").boundaries(), vec![1, 2, 3, 5, 7]);
    }

    #[test]
    fn decode_round_trips() {
        for content in [&b"abracadabra"[..], b"aaaa", b"a", b"mississippi", b"abababab"] {
            let t = Text::from_content(content).unwrap();
            assert_eq!(parse(&t).decode().unwrap(), t);
        }
    }
}
