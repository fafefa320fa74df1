//! Find only the first and last occurrence of a pattern, without
//! enumerating the ones in between. Useful when a text is a concatenation
//! of documents and only the extremes matter.
//!
//! ```sh
//! cargo run --example leftmost_rightmost
//! ```

use rstar_index::{BuildOptions, Pattern, RStarIndex};

fn main() {
    // a repetitive text: the same phrase with small edits
    let text = b"the cat sat on the mat; the cat sat on the hat; the cat lay on the mat";
    let idx = RStarIndex::build(text, BuildOptions::default()).unwrap();

    for needle in ["the cat", "mat", "hat", "dog"] {
        let pattern = Pattern::new(needle.as_bytes()).unwrap();
        let first = idx.leftmost(&pattern);
        let last = idx.rightmost(&pattern).unwrap();
        println!("{needle:>8}: leftmost={first:?} rightmost={last:?}");
    }

    // an index built without the reverse half refuses rightmost queries
    let slim = RStarIndex::build(
        text,
        rstar_index::BuildOptions {
            with_rightmost: false,
        },
    )
    .unwrap();
    let pattern = Pattern::new(b"cat").unwrap();
    println!("without reverse half: {:?}", slim.rightmost(&pattern));
}
