//! Reduces lattices to their basic blocks: pendant chains are stripped and
//! attached chains shortened, keeping the reducibles and the nullity.

use rclattice::{basic_block_of, identify, linear_sum, AdjunctRep, Lattice};

fn main() -> rclattice::Result<()> {
    let hexagon = AdjunctRep::chain(4).attach(0, 3, 2).build()?;
    let reduced = basic_block_of(&hexagon)?.block;
    println!("hexagon ({} elements) reduces to {} elements", hexagon.size(), reduced.size());

    // A catalog block with a longer chain, hung between two tails.
    let block = AdjunctRep::chain(6).attach(0, 2, 3).attach(1, 3, 1).attach(3, 5, 1).build()?;
    let tailed = linear_sum(&linear_sum(&Lattice::chain(3)?, &block)?, &Lattice::chain(2)?)?;
    let result = basic_block_of(&tailed)?;
    println!(
        "{} elements -> {} elements, nullity {} -> {}",
        tailed.size(),
        result.block.size(),
        tailed.nullity()?,
        result.block.nullity()?
    );
    println!("kept {:?}", result.witness);
    println!("class {:?}", identify(&tailed)?.map(|id| id.to_string()));
    Ok(())
}
