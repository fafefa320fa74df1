//! Show how the index size tracks repetitiveness: the same seed repeated
//! many times costs little more than the seed itself.
//!
//! ```sh
//! cargo run --example stats
//! ```

use rstar_index::{io, BuildOptions, RStarIndex};

fn main() {
    let seed = b"abracadabra hocus pocus alakazam ";
    for copies in [1usize, 10, 100] {
        let text: Vec<u8> = seed.iter().copied().cycle().take(seed.len() * copies).collect();
        let idx = RStarIndex::build(&text, BuildOptions::default()).unwrap();
        let s = idx.stats();
        let mut buf = Vec::new();
        io::write_index(&idx, &mut buf).unwrap();
        println!(
            "copies={copies:>3}  n={:>5}  r*={:>3}  z={:>3}  index_bytes={:>5}  input_bytes={}",
            s.n,
            s.r_star(),
            s.z,
            buf.len(),
            text.len()
        );
    }
}
