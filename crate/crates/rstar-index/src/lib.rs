//! A compressed full-text index for repetitive texts.
//!
//! The index combines run-length compressed BWTs of the text and its
//! reverse with two geometric structures derived from the LZ77 parse: a
//! grid of phrase boundaries for finding occurrences that touch a boundary,
//! and a grid of phrase sources for copying the remaining occurrences out
//! of earlier ones. It answers four queries over a pattern `P`:
//!
//! - [`RStarIndex::count`] — number of occurrences, by backward search
//! - [`RStarIndex::locate`] — all occurrence starts, sorted
//! - [`RStarIndex::leftmost`] — first occurrence, via range minima only
//! - [`RStarIndex::rightmost`] — last occurrence, via the reversed text
//!
//! ```
//! use rstar_index::{BuildOptions, Pattern, RStarIndex};
//!
//! let idx = RStarIndex::build(b"abracadabra", BuildOptions::default()).unwrap();
//! let p = Pattern::new(b"abra").unwrap();
//! assert_eq!(idx.count(&p), 2);
//! assert_eq!(idx.locate(&p), vec![1, 8]);
//! assert_eq!(idx.leftmost(&p), Some(1));
//! assert_eq!(idx.rightmost(&p).unwrap(), Some(8));
//! ```
//!
//! Indexes serialize to a tagged-section container (see [`io`]) behind the
//! `rstar` command-line tool. All positions are 1-based.

pub mod error;
pub mod grid;
pub mod io;
pub mod lz77;
pub mod oracle;
pub mod rlbwt;
pub mod sparse;
pub mod suffix;
pub mod text;

mod index;

pub use error::{Error, Result};
pub use index::{BuildOptions, Closure, IndexStats, RStarIndex};
pub use text::{Pattern, Text, SENTINEL};
