//! Suffix array and BWT construction for the text and its reverse.

use crate::text::Text;

/// Lexicographic ordering of all suffixes, 1-based start positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuffixArray {
    sa: Vec<usize>,
}

impl SuffixArray {
    pub fn len(&self) -> usize {
        self.sa.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sa.is_empty()
    }

    /// Start position of the `k`th suffix in lexicographic order, 1-based `k`.
    #[inline]
    pub fn at(&self, k: usize) -> usize {
        self.sa[k - 1]
    }

    pub fn positions(&self) -> &[usize] {
        &self.sa
    }
}

/// Builds the suffix array by prefix doubling, O(n log^2 n).
pub fn build_suffix_array(text: &Text) -> SuffixArray {
    let bytes = text.bytes();
    let n = bytes.len();
    let mut rank: Vec<u32> = bytes.iter().map(|&b| b as u32).collect();
    let mut order: Vec<usize> = (0..n).collect();
    let mut next_rank = vec![0u32; n];

    let mut k = 1;
    loop {
        let key = |i: usize| {
            let second = if i + k < n { rank[i + k] + 1 } else { 0 };
            (rank[i], second)
        };
        order.sort_unstable_by_key(|&i| key(i));

        next_rank[order[0]] = 0;
        for w in 1..n {
            let bump = (key(order[w]) != key(order[w - 1])) as u32;
            next_rank[order[w]] = next_rank[order[w - 1]] + bump;
        }
        std::mem::swap(&mut rank, &mut next_rank);

        if rank[order[n - 1]] as usize == n - 1 {
            break;
        }
        k *= 2;
    }

    SuffixArray {
        sa: order.into_iter().map(|i| i + 1).collect(),
    }
}

/// BWT from the suffix array: `out[k] = text[sa[k] − 1]`, wrapping position 0
/// to the sentinel at position n.
pub fn bwt_from_sa(text: &Text, sa: &SuffixArray) -> Vec<u8> {
    let n = text.len();
    (1..=n)
        .map(|k| {
            let p = sa.at(k);
            if p == 1 {
                text.at(n)
            } else {
                text.at(p - 1)
            }
        })
        .collect()
}
