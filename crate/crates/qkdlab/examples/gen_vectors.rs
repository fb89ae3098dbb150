//! Regenerates `testdata/vectors.json`.
//!
//! cargo run -p qkdlab --example gen_vectors

use std::path::Path;

use qkdlab::vectors::{generate, save};

fn main() -> anyhow::Result<()> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("testdata/vectors.json");
    let vectors = generate(0x5EED);
    save(&path, &vectors)?;
    println!("wrote {} vectors to {}", vectors.len(), path.display());
    Ok(())
}
