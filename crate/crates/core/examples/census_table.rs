//! Closed-form counts of RC-lattices for each supported class.

use rclattice::CensusQuery;

fn main() -> rclattice::Result<()> {
    let classes = [(2, 1), (2, 2), (3, 2), (3, 3), (4, 2), (4, 3), (5, 3)];
    print!("{:>4}", "n");
    for (r, k) in classes {
        print!("{:>12}", format!("r={r},k={k}"));
    }
    println!();
    for n in 4..=20 {
        print!("{n:>4}");
        for (r, k) in classes {
            let q = CensusQuery::new(n, r, k);
            if q.in_domain() {
                print!("{:>12}", q.formula()?);
            } else {
                print!("{:>12}", "");
            }
        }
        println!();
    }

    // Lattices of nullity three with five reducibles, split by block height.
    let n = 30;
    let by_height: Vec<String> = (4..=7)
        .map(|h| Ok(format!("h={h}: {}", CensusQuery::new(n, 5, 3).with_height(h).formula()?)))
        .collect::<rclattice::Result<_>>()?;
    println!("\nn={n}, r=5, k=3: {}", by_height.join(", "));
    println!("n=60, r=5, k=3: {}", CensusQuery::new(60, 5, 3).formula()?);
    Ok(())
}
