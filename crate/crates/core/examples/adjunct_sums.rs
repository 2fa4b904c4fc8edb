//! Linear and vertical sums, duals, and the adjunct representation wire form.

use rclattice::adjunct::dual;
use rclattice::{linear_sum, vertical_sum, AdjunctRep, Lattice};

fn describe(name: &str, l: &Lattice) -> rclattice::Result<()> {
    println!(
        "{name:<14} n={:<2} height={} nullity={} reducibles={:?}",
        l.size(),
        l.height(),
        l.nullity()?,
        l.reducible_elements()?
    );
    Ok(())
}

fn main() -> rclattice::Result<()> {
    let diamond = AdjunctRep::chain(3).attach(0, 2, 1);
    let pentagon = AdjunctRep::from_json(r#"{"base": 4, "attach": [{"a": 0, "b": 3, "len": 1}]}"#)?;
    let (d, p) = (diamond.build()?, pentagon.build()?);

    describe("diamond", &d)?;
    describe("pentagon", &p)?;
    describe("diamond ⊕ pent", &linear_sum(&d, &p)?)?;
    describe("diamond ∘ pent", &vertical_sum(&d, &p)?)?;

    let skew = AdjunctRep::chain(5).attach(0, 2, 1).attach(1, 4, 1);
    let mirrored = skew.dual().expect("base form");
    println!("\n{}\n{}", skew.to_json(), mirrored.to_json());
    assert!(mirrored.build()?.is_isomorphic(&dual(&skew.build()?)));
    Ok(())
}
