//! Enumerates maximal blocks with five reducibles and nullity three and
//! tallies them by catalog class, next to the closed-form counts.

use std::collections::BTreeMap;

use rclattice::census::count_class_b;
use rclattice::{BasicBlockId, Oracle};

fn main() -> rclattice::Result<()> {
    let oracle = Oracle::from_env()?;
    for j in 8..=11 {
        let blocks = oracle.enumerate_blocks(j, 5, 3)?;
        let mut by_class = BTreeMap::new();
        for b in &blocks {
            *by_class.entry(b.block_id.expect("every such block has a class")).or_insert(0u64) += 1;
        }
        println!("j={j}: {} blocks", blocks.len());
        for id in BasicBlockId::all() {
            let found = by_class.get(&id).copied().unwrap_or(0);
            if found > 0 {
                println!("  {id:>4}: {found:>4} enumerated, {:>4} by formula", count_class_b(id, j).to_string());
            }
        }
    }
    Ok(())
}
