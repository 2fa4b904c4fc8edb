//! Counts of maximal blocks: the small shapes the five-reducible formulas are
//! assembled from, each of the thirty block classes, the per-height totals,
//! and the resulting lattice count `|L(n;5,3)|`.

use num_bigint::BigUint;
use num_traits::Zero;

use super::arith::{partitions_table, Acc, Partitions, F};
use super::Count;
use crate::catalog::BasicBlockId;
use crate::error::{domain, Result};

/// Block shapes `(r, k, h)` with a known count, and their smallest size.
pub const PRIOR_SHAPES: [((usize, usize, usize), usize); 6] = [
    ((2, 1, 2), 4),
    ((4, 2, 3), 6),
    ((4, 2, 4), 7),
    ((4, 2, 5), 8),
    ((3, 2, 3), 6),
    ((3, 2, 4), 7),
];

/// `|B(j; r, k, h)|` for the shapes in [`PRIOR_SHAPES`]; zero below the
/// smallest size.
pub fn count_block_prior(j: usize, r: usize, k: usize, h: usize) -> Result<Count> {
    if !PRIOR_SHAPES.iter().any(|&(shape, _)| shape == (r, k, h)) {
        return Err(domain(format!("no block count for shape (r={r}, k={k}, h={h})")));
    }
    let t = partitions_table(j);
    let i = j as i64;
    let mut acc = Acc::new(&t);
    match (r, k, h) {
        (2, 1, 2) => acc.term(1, &[F::P(i - 2, 2)]),
        (4, 2, 3) => acc.term(1, &[F::C(i - 2, 4)]),
        (4, 2, 4) => {
            for p in 1..=i - 6 {
                for l in 2..=i - p - 4 {
                    acc.term(l - 1, &[F::P(i - p - l - 2, 2)]);
                }
            }
        }
        (4, 2, 5) => {
            for m in 0..=i - 8 {
                for p in 4..=i - m - 4 {
                    acc.term(1, &[F::P(p - 2, 2), F::P(i - m - p - 2, 2)]);
                }
            }
        }
        (3, 2, 3) => {
            for l in 1..=i - 5 {
                for p in 1..=i - l - 4 {
                    acc.term(1, &[F::P(i - l - p - 2, 2)]);
                }
            }
        }
        (3, 2, 4) => {
            for l in 4..=i - 3 {
                acc.term(1, &[F::P(l - 2, 2), F::P(i - l - 1, 2)]);
            }
        }
        _ => unreachable!(),
    }
    Ok(acc.finish())
}

/// Formula family shared by a block and its dual partner(s).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Family {
    B1,
    B6,
    B8,
    B10,
    B12,
    B18,
    B20,
    B24,
    B26,
    B28,
    B29,
}

fn family(id: BasicBlockId) -> Family {
    match id.index() {
        1..=5 => Family::B1,
        6 | 7 => Family::B6,
        8 | 9 => Family::B8,
        10 | 11 => Family::B10,
        12..=17 => Family::B12,
        18 | 19 => Family::B18,
        20..=23 => Family::B20,
        24 | 25 => Family::B24,
        26 | 27 => Family::B26,
        28 => Family::B28,
        _ => Family::B29,
    }
}

fn family_count(t: &Partitions, f: Family, j: i64) -> Count {
    let mut acc = Acc::new(t);
    match f {
        Family::B1 => {
            for s in 1..=j - 7 {
                for tt in 1..=j - s - 6 {
                    acc.term(1, &[F::C(j - tt - s - 2, 4)]);
                }
            }
        }
        Family::B6 => acc.term(1, &[F::C(j - 2, 6)]),
        Family::B8 => {
            for p in 6..=j - 3 {
                acc.term(1, &[F::C(p - 2, 4), F::P(j - p - 1, 2)]);
            }
        }
        Family::B10 => {
            for p in 0..=j - 9 {
                for q in 0..=j - p - 9 {
                    for r in 0..=j - p - q - 9 {
                        for s in 1..=j - p - q - r - 8 {
                            for tt in 1..=j - p - q - r - s - 7 {
                                acc.term(1, &[F::P(j - p - q - r - s - tt - 5, 2)]);
                            }
                        }
                    }
                }
            }
        }
        Family::B12 => {
            for tt in 1..=j - 8 {
                for k in 1..=j - tt - 7 {
                    for p in 1..=j - tt - k - 6 {
                        for l in 2..=j - tt - k - p - 4 {
                            acc.term(l - 1, &[F::P(j - tt - k - p - l - 2, 2)]);
                        }
                    }
                }
            }
        }
        Family::B18 => {
            for tt in 1..=j - 8 {
                for h in 2..=j - tt - 6 {
                    for l in 1..=j - h - tt - 5 {
                        for p in 1..=j - h - tt - l - 4 {
                            acc.term(h - 1, &[F::P(j - h - tt - l - p - 2, 2)]);
                        }
                    }
                }
            }
        }
        Family::B20 => {
            for u in 4..=j - 6 {
                for r in 0..=u - 4 {
                    for l in 1..=j - u - 5 {
                        for s in 1..=j - u - l - 4 {
                            acc.term(1, &[F::P(u - r - 2, 2), F::P(j - u - l - s - 2, 2)]);
                        }
                    }
                }
            }
        }
        Family::B24 => {
            for p in B24_FIRST_P..=j - 3 {
                for q in 1..=p - 6 {
                    for l in 2..=p - q - 4 {
                        acc.term(l - 1, &[F::P(p - q - l - 2, 2), F::P(j - p - 1, 2)]);
                    }
                }
            }
        }
        Family::B26 => {
            for s in 1..=j - 9 {
                for tt in 1..=j - s - 8 {
                    for m in 0..=j - tt - s - 8 {
                        for p in 4..=j - tt - s - m - 4 {
                            acc.term(1, &[F::P(p - 2, 2), F::P(j - tt - s - m - p - 2, 2)]);
                        }
                    }
                }
            }
        }
        Family::B28 => {
            for tt in 1..=j - 9 {
                for k in 2..=j - tt - 7 {
                    for l in 4..=j - k - tt - 3 {
                        acc.term(k - 1, &[F::P(l - 2, 2), F::P(j - k - tt - l - 1, 2)]);
                    }
                }
            }
        }
        Family::B29 => {
            // Two-chain block of size u - r below a chain of r elements,
            // then a three-reducible block on the remaining j - u elements.
            for u in 4..=j - 7 {
                for r in 0..=u - 4 {
                    for l in 4..=j - u - 3 {
                        acc.term(1, &[F::P(u - r - 2, 2), F::P(l - 2, 2), F::P(j - u - l - 1, 2)]);
                    }
                }
            }
        }
    }
    acc.finish()
}

/// Lower end of the outer sum for blocks 24 and 25. One of the two published
/// statements starts a step earlier; that term is always empty.
const B24_FIRST_P: i64 = 7;

/// `|𝔹_i(j;5,3)|`: maximal blocks on `j` elements whose basic block is `B_i`.
/// Zero below the block's own size.
pub fn count_class_b(id: BasicBlockId, j: usize) -> Count {
    if j < id.min_size() {
        return Count::zero();
    }
    let t = partitions_table(j);
    family_count(&t, family(id), j as i64)
}

/// The height-seven class count exactly as its statement is printed: the
/// inner sum is bounded by `u - r - 3` and the last factor is
/// `P(u - r - l - 1, 2)`. It vanishes at `j = 11`, where the class contains
/// the block itself, and disagrees with the derivation that precedes it.
pub fn count_class_b29_as_printed(j: usize) -> Count {
    let t = partitions_table(j);
    let j = j as i64;
    let mut acc = Acc::new(&t);
    for u in 4..=j - 7 {
        for r in 0..=u - 4 {
            for l in 4..=u - r - 3 {
                acc.term(1, &[F::P(u - r - 2, 2), F::P(l - 2, 2), F::P(u - r - l - 1, 2)]);
            }
        }
    }
    acc.finish()
}

pub const HEIGHTS: [usize; 4] = [4, 5, 6, 7];

/// `|B(j;5,3,h)|`, from the aggregate sums (each family weighted by the
/// number of blocks sharing it).
pub fn count_b_5_3_h(j: usize, h: usize) -> Result<Count> {
    let weights: &[(Family, u32)] = match h {
        4 => &[(Family::B6, 2), (Family::B1, 5)],
        5 => &[(Family::B8, 2), (Family::B10, 2), (Family::B12, 6), (Family::B18, 2)],
        6 => &[(Family::B20, 4), (Family::B24, 2), (Family::B28, 1), (Family::B26, 2)],
        7 => &[(Family::B29, 2)],
        _ => return Err(domain(format!("block height must be 4, 5, 6 or 7, got {h}"))),
    };
    if j < h + 4 {
        return Ok(Count::zero());
    }
    let t = partitions_table(j);
    Ok(weights
        .iter()
        .map(|&(f, w)| family_count(&t, f, j as i64) * w)
        .sum())
}

/// `|B(j;5,3)|`, all heights.
pub fn count_b_5_3(j: usize) -> Result<Count> {
    if j < 8 {
        return Err(domain(format!("|B(j;5,3)| requires j ≥ 8, got {j}")));
    }
    HEIGHTS.iter().map(|&h| count_b_5_3_h(j, h)).sum()
}

/// `|L(n;5,3)|`: a maximal block on `n - i` elements with `i` further elements
/// split between a chain below and a chain above it, in `i + 1` ways.
pub fn count_l_5_3(n: usize) -> Result<Count> {
    if n < 8 {
        return Err(domain(format!("|L(n;5,3)| requires n ≥ 8, got {n}")));
    }
    with_chains(n, 8, count_b_5_3)
}

/// `|L(n;5,3)|` restricted to lattices whose basic block has height `h`.
pub fn count_l_5_3_h(n: usize, h: usize) -> Result<Count> {
    if n < 8 {
        return Err(domain(format!("|L(n;5,3)| requires n ≥ 8, got {n}")));
    }
    with_chains(n, 8, |j| count_b_5_3_h(j, h))
}

/// Lattices of `n` elements built from a block class by adding a chain
/// below and above: `Σ_{i=0}^{n-min} (i+1)·blocks(n-i)`.
pub(crate) fn with_chains(n: usize, min: usize, blocks: impl Fn(usize) -> Result<Count>) -> Result<Count> {
    let mut total = BigUint::zero();
    for i in 0..=n.saturating_sub(min) {
        if n - i < min {
            break;
        }
        total += blocks(n - i)? * (i as u64 + 1);
    }
    Ok(total)
}
