//! Adjunct-of-chains construction, linear and vertical sums, and reduction of
//! a lattice to its associated basic block.
//!
//! A lattice `C₀ ]a₁,b₁ C₁ ]a₂,b₂ C₂ …` starts from a chain `C₀` and attaches
//! chain `Cᵢ` between `aᵢ < bᵢ` so that `aᵢ ⋖ min Cᵢ` and `max Cᵢ ⋖ bᵢ`. Every
//! attachment raises the nullity of the cover graph by exactly one.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::order::{bits, Lattice, MAX_ELEMENTS};

/// One attached chain: `len` new elements strictly between `a` and `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Attachment {
    pub a: usize,
    pub b: usize,
    pub len: usize,
}

/// Constructive normal form of a dismantlable lattice.
///
/// Elements `0..base` form the base chain in increasing order. Each
/// attachment appends `len` fresh elements, numbered consecutively after
/// everything built so far; its pair indexes any element that exists at the
/// time it is attached.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct AdjunctRep {
    pub base: usize,
    #[serde(rename = "attach", default)]
    pub attachments: Vec<Attachment>,
}

impl AdjunctRep {
    pub fn chain(base: usize) -> Self {
        AdjunctRep { base, attachments: Vec::new() }
    }

    /// Builder-style helper: attach a chain of `len` elements between `a` and `b`.
    pub fn attach(mut self, a: usize, b: usize, len: usize) -> Self {
        self.attachments.push(Attachment { a, b, len });
        self
    }

    /// Number of elements of the built lattice.
    pub fn size(&self) -> usize {
        self.base + self.attachments.iter().map(|t| t.len).sum::<usize>()
    }

    /// True when every pair indexes the base chain.
    pub fn is_base_form(&self) -> bool {
        self.attachments.iter().all(|t| t.a < self.base && t.b < self.base)
    }

    /// The representation of the dual lattice, for base-chain reps: the base
    /// is read top-down and every pair is mirrored.
    pub fn dual(&self) -> Option<Self> {
        if !self.is_base_form() {
            return None;
        }
        let last = self.base - 1;
        Some(AdjunctRep {
            base: self.base,
            attachments: self
                .attachments
                .iter()
                .map(|t| Attachment { a: last - t.b, b: last - t.a, len: t.len })
                .collect(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("rep JSON serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Builds the lattice.
    ///
    /// Fails with [`Error::InvalidPair`] if some `a` is not strictly below `b`
    /// at attachment time, or if `b` covers `a` (the attached chain would then
    /// leave the nullity unchanged).
    pub fn build(&self) -> Result<Lattice> {
        if self.base == 0 {
            return Err(domain("base chain must have at least one element"));
        }
        let size = self.size();
        if size > MAX_ELEMENTS {
            return Err(Error::TooLarge(size));
        }
        let mut below = vec![0u64; size];
        let mut upper = vec![0u64; size];
        let mut covers = Vec::with_capacity(size + self.attachments.len());
        for i in 1..self.base {
            covers.push((i - 1, i));
            upper[i - 1] |= 1 << i;
            below[i] = below[i - 1] | (1 << (i - 1));
        }
        let mut next = self.base;
        for &Attachment { a, b, len } in &self.attachments {
            if len == 0 {
                return Err(domain("attached chains must be non-empty"));
            }
            for index in [a, b] {
                if index >= next {
                    return Err(Error::IndexOutOfRange { index, size: next });
                }
            }
            if below[b] & (1 << a) == 0 {
                return Err(Error::InvalidPair { a, b, reason: "a is not below b" });
            }
            if upper[a] & (1 << b) != 0 {
                return Err(Error::InvalidPair { a, b, reason: "b covers a" });
            }
            let mut prev = a;
            for c in next..next + len {
                covers.push((prev, c));
                upper[prev] |= 1 << c;
                below[c] = below[prev] | (1 << prev);
                prev = c;
            }
            covers.push((prev, b));
            upper[prev] |= 1 << b;
            // b and everything above it gain the new chain below them.
            let fresh = below[prev] | (1 << prev);
            for x in 0..next + len {
                if x == b || below[x] & (1 << b) != 0 {
                    below[x] |= fresh;
                }
            }
            next += len;
        }

        let l = Lattice::from_covers(size, &covers)?;
        if !l.is_lattice() {
            return Err(Error::Invariant(format!(
                "adjunct construction produced a non-lattice from {}",
                self.to_json()
            )));
        }
        Ok(l)
    }
}

fn bounds(l: &Lattice) -> Result<(usize, usize)> {
    match (l.bottom(), l.top()) {
        (Some(lo), Some(hi)) => Ok((lo, hi)),
        _ => Err(Error::NotLattice),
    }
}

/// `a ⊕ b`: every element of `a` below every element of `b`, joined by the
/// single cover `max a ⋖ min b`. Elements of `b` are shifted by `|a|`.
pub fn linear_sum(a: &Lattice, b: &Lattice) -> Result<Lattice> {
    let (_, top_a) = bounds(a)?;
    let (bottom_b, _) = bounds(b)?;
    let shift = a.size();
    let mut covers: Vec<_> = a.covers().to_vec();
    covers.extend(b.covers().iter().map(|&(x, y)| (x + shift, y + shift)));
    covers.push((top_a, bottom_b + shift));
    Lattice::from_covers(a.size() + b.size(), &covers)
}

/// `a ∘ b`: the linear sum with `max a` and `min b` identified.
pub fn vertical_sum(a: &Lattice, b: &Lattice) -> Result<Lattice> {
    let (_, top_a) = bounds(a)?;
    let (bottom_b, _) = bounds(b)?;
    let shift = a.size();
    let map = |x: usize| -> usize {
        match x.cmp(&bottom_b) {
            std::cmp::Ordering::Equal => top_a,
            std::cmp::Ordering::Less => x + shift,
            std::cmp::Ordering::Greater => x + shift - 1,
        }
    };
    let mut covers: Vec<_> = a.covers().to_vec();
    covers.extend(b.covers().iter().map(|&(x, y)| (map(x), map(y))));
    Lattice::from_covers(a.size() + b.size() - 1, &covers)
}

pub fn dual(l: &Lattice) -> Lattice {
    l.dual()
}

/// Base-chain normal form of an RC-lattice.
///
/// The base is a maximal chain through every reducible element; every other
/// element lies on exactly one attached chain. Attachments are sorted.
pub fn maximal_chain_rep(l: &Lattice) -> Result<AdjunctRep> {
    if !l.is_rc()? {
        return Err(domain("lattice is not an RC-lattice"));
    }
    let (bottom, top) = bounds(l)?;
    let red = l.reducible_mask();

    let mut chain = vec![bottom];
    let mut current = bottom;
    while current != top {
        // Smallest reducible strictly above `current`, else the top.
        let target = bits(red & l.above_mask(current))
            .min_by_key(|&x| l.below_mask(x).count_ones())
            .unwrap_or(top);
        current = l
            .upper_covers(current)
            .find(|&z| l.leq(z, target))
            .expect("some upper cover lies below any strict upper bound");
        chain.push(current);
    }

    let mut position = vec![usize::MAX; l.size()];
    for (i, &x) in chain.iter().enumerate() {
        position[x] = i;
    }
    let mut attachments = Vec::new();
    for &a in &chain {
        for start in l.upper_covers(a) {
            if position[start] != usize::MAX {
                continue;
            }
            let mut len = 1;
            let mut x = start;
            loop {
                let up = l.upper_mask(x);
                debug_assert_eq!(up.count_ones(), 1);
                let y = up.trailing_zeros() as usize;
                if position[y] != usize::MAX {
                    attachments.push(Attachment { a: position[a], b: position[y], len });
                    break;
                }
                x = y;
                len += 1;
            }
        }
    }
    attachments.sort();
    let rep = AdjunctRep { base: chain.len(), attachments };
    if rep.size() != l.size() {
        return Err(Error::Invariant("chain decomposition lost elements".into()));
    }
    Ok(rep)
}

/// The basic block associated to a lattice, with the map from block elements
/// back to the elements of the input.
#[derive(Clone, Debug)]
pub struct BasicBlockResult {
    pub block: Lattice,
    pub witness: Vec<usize>,
}

/// Reduces a lattice to its basic block.
///
/// Each round first strips pendant elements (exactly one cover relation in
/// total) until none remain, then removes the lowest-indexed doubly
/// irreducible element whose removal leaves the nullity unchanged, i.e. one
/// whose lower and upper cover become a covering pair. Rounds repeat until
/// neither step applies. The reducible elements and the nullity are
/// preserved.
pub fn basic_block_of(l: &Lattice) -> Result<BasicBlockResult> {
    if !l.is_lattice() {
        return Err(Error::NotLattice);
    }
    l.nullity()?;
    let n = l.size();
    let mut up: Vec<u64> = (0..n).map(|x| l.upper_mask(x)).collect();
    let mut down: Vec<u64> = (0..n).map(|x| l.lower_mask(x)).collect();
    let mut alive: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };

    let remove = |x: usize, alive: &mut u64, up: &mut [u64], down: &mut [u64]| {
        for y in bits(up[x]) {
            down[y] &= !(1 << x);
        }
        for y in bits(down[x]) {
            up[y] &= !(1 << x);
        }
        up[x] = 0;
        down[x] = 0;
        *alive &= !(1 << x);
    };

    loop {
        while alive.count_ones() > 1 {
            match bits(alive).find(|&x| (up[x] | down[x]).count_ones() == 1) {
                Some(x) => remove(x, &mut alive, &mut up, &mut down),
                None => break,
            }
        }

        let contractible = bits(alive).find(|&x| {
            if up[x].count_ones() != 1 || down[x].count_ones() != 1 {
                return false;
            }
            let (u, v) = (down[x].trailing_zeros() as usize, up[x].trailing_zeros() as usize);
            !reaches(&up, alive & !(1 << x), u, v)
        });
        match contractible {
            Some(x) => {
                let (u, v) = (down[x].trailing_zeros() as usize, up[x].trailing_zeros() as usize);
                remove(x, &mut alive, &mut up, &mut down);
                up[u] |= 1 << v;
                down[v] |= 1 << u;
            }
            None => break,
        }
    }

    let (block, witness) = l.induced(alive);
    Ok(BasicBlockResult { block, witness })
}

/// Directed reachability from `from` to `to` through elements of `within`.
fn reaches(up: &[u64], within: u64, from: usize, to: usize) -> bool {
    let mut seen = 1u64 << from;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for x in bits(frontier) {
            next |= up[x];
        }
        next &= within & !seen;
        if next & (1 << to) != 0 {
            return true;
        }
        seen |= next;
        frontier = next;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> Lattice {
        AdjunctRep::chain(3).attach(0, 2, 1).build().unwrap()
    }

    #[test]
    fn single_attachment_gives_diamond() {
        let d = diamond();
        assert_eq!(d.size(), 4);
        assert_eq!(d.nullity().unwrap(), 1);
        assert_eq!(d.reducible_elements().unwrap(), vec![0, 2]);
    }

    #[test]
    fn covering_pair_is_rejected() {
        let err = AdjunctRep::chain(2).attach(0, 1, 1).build().unwrap_err();
        assert!(matches!(err, Error::InvalidPair { a: 0, b: 1, .. }));
        let err = AdjunctRep::chain(3).attach(2, 0, 1).build().unwrap_err();
        assert!(matches!(err, Error::InvalidPair { a: 2, b: 0, .. }));
        assert!(AdjunctRep::chain(3).attach(0, 2, 0).build().is_err());
        assert!(AdjunctRep::chain(3).attach(0, 7, 1).build().is_err());
    }

    #[test]
    fn b1_from_its_adjunct_string() {
        let l = AdjunctRep::chain(5).attach(0, 2, 1).attach(1, 3, 1).attach(1, 4, 1).build().unwrap();
        assert_eq!(l.size(), 8);
        assert_eq!(l.nullity().unwrap(), 3);
        assert_eq!(l.reducible_elements().unwrap(), vec![0, 1, 2, 3, 4]);
        assert_eq!(l.height(), 4);
    }

    #[test]
    fn attachments_may_use_non_base_elements() {
        // Chain attached between 0 and an element of the first attached chain.
        let l = AdjunctRep::chain(3).attach(0, 2, 2).attach(0, 4, 1).build().unwrap();
        assert_eq!(l.nullity().unwrap(), 2);
        assert!(l.is_lattice());
        assert!(!AdjunctRep::chain(3).attach(0, 2, 2).attach(0, 4, 1).is_base_form());
    }

    #[test]
    fn plain_chain() {
        let l = AdjunctRep::chain(6).build().unwrap();
        assert_eq!(l, Lattice::chain(6).unwrap());
        assert_eq!(l.nullity().unwrap(), 0);
    }

    #[test]
    fn sums() {
        let c5 = linear_sum(&Lattice::chain(2).unwrap(), &Lattice::chain(3).unwrap()).unwrap();
        assert!(c5.is_isomorphic(&Lattice::chain(5).unwrap()));
        let pendant = linear_sum(&diamond(), &Lattice::chain(1).unwrap()).unwrap();
        assert_eq!(pendant.size(), 5);
        assert_eq!(pendant.reducible_elements().unwrap(), vec![0, 2]);
        assert_eq!(pendant.height(), diamond().height() + 1);

        let c = vertical_sum(&Lattice::chain(3).unwrap(), &Lattice::chain(3).unwrap()).unwrap();
        assert!(c.is_isomorphic(&Lattice::chain(5).unwrap()));
        let dd = vertical_sum(&diamond(), &diamond()).unwrap();
        assert_eq!(dd.size(), 7);
        assert_eq!(dd.nullity().unwrap(), 2);
    }

    #[test]
    fn dual_rep_matches_lattice_dual() {
        let rep = AdjunctRep::chain(5).attach(0, 2, 1).attach(1, 3, 2).attach(1, 4, 1);
        let via_rep = rep.dual().unwrap().build().unwrap();
        assert!(via_rep.is_isomorphic(&rep.build().unwrap().dual()));
    }

    #[test]
    fn hexagon_reduces_to_diamond() {
        let hexagon = AdjunctRep::chain(4).attach(0, 3, 2).build().unwrap();
        let bb = basic_block_of(&hexagon).unwrap();
        assert!(bb.block.is_isomorphic(&diamond()));
        assert_eq!(bb.block.nullity().unwrap(), 1);
        assert_eq!(bb.witness.len(), 4);
    }

    #[test]
    fn chain_reduces_to_point() {
        for n in 1..6 {
            let bb = basic_block_of(&Lattice::chain(n).unwrap()).unwrap();
            assert_eq!(bb.block.size(), 1);
        }
    }

    #[test]
    fn pendant_chains_are_stripped() {
        let l = linear_sum(&Lattice::chain(2).unwrap(), &linear_sum(&diamond(), &Lattice::chain(3).unwrap()).unwrap())
            .unwrap();
        let bb = basic_block_of(&l).unwrap();
        assert!(bb.block.is_isomorphic(&diamond()));
        // Witness maps back onto the original reducible elements.
        let red = l.reducible_elements().unwrap();
        let mapped: Vec<usize> = bb.block.reducible_elements().unwrap().iter().map(|&x| bb.witness[x]).collect();
        assert_eq!(mapped, red);
    }

    #[test]
    fn decomposition_round_trip() {
        let rep = AdjunctRep::chain(6).attach(0, 2, 2).attach(1, 3, 1).attach(3, 5, 3);
        let l = rep.build().unwrap();
        let back = maximal_chain_rep(&l).unwrap();
        assert_eq!(back.attachments.len(), 3);
        assert!(back.build().unwrap().is_isomorphic(&l));
    }
}
