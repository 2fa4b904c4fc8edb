//! Every lattice up to eight elements from the levelwise generator, tallied
//! against the adjunct enumeration of RC-lattices.

use std::collections::BTreeMap;

use rclattice::oracle::levelwise;
use rclattice::{EnumerationTask, Oracle};

fn main() -> rclattice::Result<()> {
    let oracle = Oracle::default();
    for n in 1..=8 {
        let all = levelwise::all_lattices(n)?;
        let mut rc: BTreeMap<(usize, usize), u64> = BTreeMap::new();
        for c in all.iter().filter(|c| c.rc) {
            *rc.entry((c.r, c.k)).or_insert(0) += 1;
        }
        let adjunct: usize = (0..n).map(|k| oracle.count(&EnumerationTask::new(n, k)).map(|c| c as usize)).sum::<rclattice::Result<_>>()?;
        let rc_total: u64 = rc.values().sum();
        println!("n={n}: {:>4} lattices, {rc_total:>3} RC (adjunct enumeration {adjunct:>3})", all.len());
        assert_eq!(rc_total as usize, adjunct);
    }
    Ok(())
}
