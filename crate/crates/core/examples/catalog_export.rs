//! Lists the thirty basic blocks and writes them as JSON and DOT.
//!
//! ```text
//! cargo run --example catalog_export -- /tmp/blocks
//! ```

use std::path::PathBuf;

use rclattice::{catalog, catalog_dot};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for e in catalog() {
        println!(
            "{:>3}  height {}  {} elements  dual {:>3}  {}",
            e.id.to_string(),
            e.height,
            e.lattice.size(),
            e.dual_of.to_string(),
            e.rep.to_json()
        );
    }

    if let Some(dir) = std::env::args().nth(1).map(PathBuf::from) {
        std::fs::create_dir_all(&dir)?;
        let lattices: Vec<String> = catalog().iter().map(|e| e.lattice.to_json()).collect();
        std::fs::write(dir.join("blocks.json"), format!("[{}]\n", lattices.join(",\n")))?;
        std::fs::write(dir.join("blocks.dot"), catalog_dot())?;
        println!("wrote {}", dir.display());
    }
    Ok(())
}
