//! Canonical keys identify lattices up to relabeling; JSON and DOT round
//! trip through them.

use rclattice::order::{parse_dot, to_dot};
use rclattice::{AdjunctRep, Lattice};

fn main() -> rclattice::Result<()> {
    let l = AdjunctRep::chain(5).attach(0, 2, 1).attach(1, 4, 2).build()?;
    let reversed: Vec<usize> = (0..l.size()).rev().collect();
    let shuffled = l.relabel(&reversed)?;

    println!("original  {}", l.to_json());
    println!("relabeled {}", shuffled.to_json());
    println!("key       {}", l.canonical_key().to_hex());
    assert_eq!(l.canonical_key(), shuffled.canonical_key());

    let from_json = Lattice::from_json(&shuffled.to_json())?;
    let from_dot = parse_dot(&to_dot(&shuffled, "shuffled"))?;
    assert!(from_json.is_isomorphic(&l) && from_dot.is_isomorphic(&l));

    let dual = l.dual();
    println!("self-dual {}", dual.is_isomorphic(&l));
    print!("{}", to_dot(&l, "example"));
    Ok(())
}
