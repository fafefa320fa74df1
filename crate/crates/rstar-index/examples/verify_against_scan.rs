//! Cross-check index answers against the brute-force scan that ships with
//! the library, the same machinery behind `rstar query --verify`.
//!
//! ```sh
//! cargo run --example verify_against_scan
//! ```

use rstar_index::{oracle, BuildOptions, Pattern, RStarIndex};

fn main() {
    let text: Vec<u8> = b"abcab".iter().copied().cycle().take(400).collect();
    let idx = RStarIndex::build(&text, BuildOptions::default()).unwrap();

    let mut checked = 0;
    for needle in [&b"ab"[..], b"cab", b"abcabc", b"bb", b"abca"] {
        let pattern = Pattern::new(needle).unwrap();
        let expected = oracle::naive_locate(&text, needle);
        assert_eq!(idx.locate(&pattern), expected);
        assert_eq!(idx.leftmost(&pattern), expected.first().copied());
        assert_eq!(idx.rightmost(&pattern).unwrap(), expected.last().copied());
        checked += 1;
    }
    println!("{checked} patterns verified against the naive scan");
}
