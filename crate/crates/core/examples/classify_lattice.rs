//! Builds a lattice from an adjunct representation and reports its
//! invariants, basic block and catalog class.

use rclattice::{basic_block_of, identify, maximal_chain_rep, AdjunctRep};

fn main() -> rclattice::Result<()> {
    // A block of height seven with its attached chains stretched.
    let rep = AdjunctRep::chain(10).attach(0, 2, 2).attach(4, 6, 1).attach(6, 9, 3);
    let l = rep.build()?;

    println!("elements   {}", l.size());
    println!("height     {}", l.height());
    println!("nullity    {}", l.nullity()?);
    println!("reducible  {:?}", l.reducible_elements()?);
    println!("RC         {}", l.is_rc()?);

    let basic = basic_block_of(&l)?;
    println!("basic block: {} elements, height {}", basic.block.size(), basic.block.height());
    println!("kept elements {:?}", basic.witness);
    match identify(&l)? {
        Some(id) => println!("class {id}"),
        None => println!("no catalog class"),
    }

    let normal = maximal_chain_rep(&l)?;
    println!("normal form {}", normal.to_json());
    assert!(normal.build()?.is_isomorphic(&l));
    Ok(())
}
