//! Serialize an index to its file container and load it back; the loaded
//! index answers queries identically.
//!
//! ```sh
//! cargo run --example save_and_load
//! ```

use rstar_index::{io, BuildOptions, Pattern, RStarIndex};

fn main() {
    let text = b"singing in the rain, just singing in the rain";
    let idx = RStarIndex::build(text, BuildOptions::default()).unwrap();

    let path = std::env::temp_dir().join("singing.rsx");
    io::save_to_path(&idx, &path).unwrap();
    println!(
        "wrote {} bytes to {}",
        std::fs::metadata(&path).unwrap().len(),
        path.display()
    );

    let loaded = io::load_from_path(&path).unwrap();
    let pattern = Pattern::new(b"singing").unwrap();
    assert_eq!(idx.locate(&pattern), loaded.locate(&pattern));
    println!("loaded index locates \"singing\" at {:?}", loaded.locate(&pattern));

    std::fs::remove_file(&path).unwrap();
}
