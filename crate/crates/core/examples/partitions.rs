//! Partitions of m into exactly k parts, exact at any size.

use num_bigint::BigUint;
use rclattice::census::partitions_exact;

fn main() {
    println!("{:>3} | {}", "m", (1..=8).map(|k| format!("{k:>5}")).collect::<String>());
    for m in 1..=16 {
        let row: String = (1..=8).map(|k| format!("{:>5}", partitions_exact(m, k).to_string())).collect();
        println!("{m:>3} | {row}");
    }
    let total: BigUint = (0..=500).map(|k| partitions_exact(500, k)).sum();
    println!("\np(500) = {total}");
}
