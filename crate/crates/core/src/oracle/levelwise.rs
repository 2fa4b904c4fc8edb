//! A second, independent generator: every lattice on at most eleven elements.
//!
//! Elements are added one at a time, each new element maximal among those
//! present, so the labels form a linear extension. In a lattice every initial
//! segment of a linear extension is a down-set and hence a meet-semilattice
//! with a least element; prefixes that are not are discarded. The last element
//! must lie above all others. Isomorphic copies are removed by brute force
//! over invariant-respecting relabelings of the strict order matrix.
//!
//! Nothing here is shared with the adjunct enumerator or with
//! [`crate::Lattice`]; the two agree only if both are right.

use std::collections::{BTreeMap, HashSet};

use crate::error::{domain, Result};

pub const MAX_SIZE: usize = 11;

/// Invariants of one lattice found by the levelwise generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LevelClass {
    /// Reducible elements are pairwise comparable.
    pub rc: bool,
    pub r: usize,
    pub k: usize,
    /// Least and greatest elements are both reducible.
    pub maximal_block: bool,
}

/// Every lattice on `n` elements, one entry per isomorphism class.
pub fn all_lattices(n: usize) -> Result<Vec<LevelClass>> {
    if n == 0 || n > MAX_SIZE {
        return Err(domain(format!("levelwise generator handles 1..={MAX_SIZE} elements, got {n}")));
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut below = vec![0u16; n];
    grow(n, 1, &mut below, &mut |below: &[u16]| {
        if seen.insert(canonical_code(below)) {
            out.push(invariants(below));
        }
    });
    out.sort();
    Ok(out)
}

/// Tally of [`all_lattices`] by `(rc, r, k, maximal_block)`.
pub fn census(n: usize) -> Result<BTreeMap<LevelClass, u64>> {
    let mut tally = BTreeMap::new();
    for c in all_lattices(n)? {
        *tally.entry(c).or_insert(0) += 1;
    }
    Ok(tally)
}

/// `below[x]` is the strict down-set of `x`; element 0 is the bottom.
fn grow(n: usize, next: usize, below: &mut [u16], emit: &mut dyn FnMut(&[u16])) {
    if next == n {
        emit(below);
        return;
    }
    let present: u16 = (1 << next) - 1;
    let candidates: Vec<u16> = if next == n - 1 {
        vec![present]
    } else {
        (1..=present).filter(|&d| d & 1 != 0).collect()
    };
    for down in candidates {
        let closed = (0..next).filter(|&x| down & (1 << x) != 0).all(|x| below[x] & !down == 0);
        if !closed {
            continue;
        }
        below[next] = down;
        if meets_exist(below, next) {
            grow(n, next + 1, below, emit);
        }
    }
    below[next] = 0;
}

/// Every earlier element has a greatest common lower bound with `new`.
fn meets_exist(below: &[u16], new: usize) -> bool {
    let with_new = below[new] | (1 << new);
    (0..new).all(|x| {
        let common = with_new & (below[x] | (1 << x));
        // The common lower bounds form a down-set; it needs a unique maximum.
        let in_common = |z: usize| common & (1 << z) != 0;
        let maxima = (0..new).filter(|&z| in_common(z) && !(0..new).any(|w| in_common(w) && below[w] & (1 << z) != 0));
        maxima.count() == 1
    })
}

fn covers(below: &[u16]) -> Vec<u16> {
    // lower[y]: elements x with x ⋖ y.
    below
        .iter()
        .map(|&down| {
            let mut lower = 0u16;
            for x in 0..below.len() {
                if down & (1 << x) != 0 {
                    let between = (0..below.len()).any(|z| down & (1 << z) != 0 && below[z] & (1 << x) != 0);
                    if !between {
                        lower |= 1 << x;
                    }
                }
            }
            lower
        })
        .collect()
}

fn invariants(below: &[u16]) -> LevelClass {
    let n = below.len();
    let lower = covers(below);
    let upper_count = |x: usize| lower.iter().filter(|&&m| m & (1 << x) != 0).count();
    let reducible: Vec<usize> = (0..n).filter(|&x| lower[x].count_ones() >= 2 || upper_count(x) >= 2).collect();
    let rc = reducible
        .iter()
        .all(|&x| reducible.iter().all(|&y| x == y || below[x] & (1 << y) != 0 || below[y] & (1 << x) != 0));
    let edges: usize = lower.iter().map(|m| m.count_ones() as usize).sum();
    LevelClass {
        rc,
        r: reducible.len(),
        k: edges + 1 - n,
        maximal_block: n > 1 && reducible.contains(&0) && reducible.contains(&(n - 1)),
    }
}

/// Least relabeled strict-order matrix over relabelings that respect
/// (down-set size, up-set size, lower covers, upper covers).
fn canonical_code(below: &[u16]) -> u128 {
    let n = below.len();
    let lower = covers(below);
    let signature = |x: usize| {
        let ups = below.iter().filter(|&&d| d & (1 << x) != 0).count();
        let upper_covers = lower.iter().filter(|&&m| m & (1 << x) != 0).count();
        (below[x].count_ones(), ups, lower[x].count_ones(), upper_covers)
    };
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| signature(x));
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for x in order {
        match cells.last_mut() {
            Some(c) if signature(c[0]) == signature(x) => c.push(x),
            _ => cells.push(vec![x]),
        }
    }

    let mut best = u128::MAX;
    let mut position = vec![0usize; n];
    assign(&cells, 0, 0, &mut position, &mut |pos: &[usize]| {
        let mut code = 0u128;
        for (y, &down) in below.iter().enumerate() {
            for x in 0..n {
                if down & (1 << x) != 0 {
                    code |= 1 << (pos[x] * MAX_SIZE + pos[y]);
                }
            }
        }
        best = best.min(code);
    });
    best
}

/// Visits every bijection that sends cell `i` onto its block of positions.
fn assign(cells: &[Vec<usize>], cell: usize, offset: usize, position: &mut [usize], visit: &mut dyn FnMut(&[usize])) {
    let Some(members) = cells.get(cell) else {
        visit(position);
        return;
    };
    let mut perm = members.clone();
    permute(&mut perm, 0, &mut |p: &[usize]| {
        for (i, &x) in p.iter().enumerate() {
            position[x] = offset + i;
        }
        assign(cells, cell + 1, offset + p.len(), position, visit);
    });
}

fn permute(items: &mut Vec<usize>, start: usize, visit: &mut dyn FnMut(&[usize])) {
    if start == items.len() {
        visit(items);
        return;
    }
    for i in start..items.len() {
        items.swap(start, i);
        permute(items, start + 1, visit);
        items.swap(start, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_counts_match_the_known_sequence() {
        // Unlabeled lattices on n = 1..=7 elements.
        let expected = [1, 1, 1, 2, 5, 15, 53];
        for (n, &want) in (1..=7).zip(&expected) {
            assert_eq!(all_lattices(n).unwrap().len(), want, "n={n}");
        }
    }

    #[test]
    fn small_classes() {
        let four = census(4).unwrap();
        let diamond = LevelClass { rc: true, r: 2, k: 1, maximal_block: true };
        assert_eq!(four.get(&diamond), Some(&1));
        // The cube 2³: twelve covers on eight elements, not RC.
        let eight = all_lattices(8).unwrap();
        assert!(eight.iter().any(|c| !c.rc && c.k == 5));
    }

    #[test]
    fn rejects_sizes_out_of_range() {
        assert!(all_lattices(0).is_err());
        assert!(all_lattices(12).is_err());
    }
}
