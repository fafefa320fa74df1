//! Build an index in memory and report every occurrence of a pattern.
//!
//! ```sh
//! cargo run --example locate
//! ```

use rstar_index::{BuildOptions, Pattern, RStarIndex};

fn main() {
    let text = b"how much wood would a woodchuck chuck if a woodchuck could chuck wood";
    let idx = RStarIndex::build(text, BuildOptions::default()).unwrap();

    for needle in ["wood", "chuck", "ould", "beaver"] {
        let pattern = Pattern::new(needle.as_bytes()).unwrap();
        let hits = idx.locate(&pattern);
        println!("{needle:>8}: count={} at {:?}", idx.count(&pattern), hits);
    }
}
