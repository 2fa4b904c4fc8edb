//! Finite posets given by their cover relation, and the structural predicates
//! used throughout the crate: lattice-ness, reducibility, comparability of the
//! reducible elements, nullity, height and isomorphism.
//!
//! Elements are dense indices `0..size`. The order relation is materialized
//! once, at construction, as one bitmask per element, so every predicate here
//! is a handful of word operations.

mod canon;
mod io;

pub use canon::CanonicalKey;
pub use io::{parse_dot, to_dot, LatticeJson};

use crate::error::{Error, Result};

/// Largest supported carrier; one `u64` row per element.
pub const MAX_ELEMENTS: usize = 64;

#[inline]
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

/// A finite poset described by its covering pairs.
///
/// Values are immutable once built. The type may hold a poset that is not a
/// lattice; [`Lattice::is_lattice`] tells them apart and the lattice-only
/// predicates return [`Error::NotLattice`] on such input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    size: usize,
    covers: Vec<(usize, usize)>,
    upper: Vec<u64>,
    lower: Vec<u64>,
    /// `above[x]` holds every `y` with `x < y`.
    above: Vec<u64>,
    /// `below[x]` holds every `y` with `y < x`.
    below: Vec<u64>,
    topo: Vec<usize>,
}

impl Lattice {
    /// Builds a poset from its cover relation.
    ///
    /// Rejects out-of-range indices, reflexive pairs, cycles and pairs that are
    /// implied by transitivity. Duplicate pairs are collapsed.
    pub fn from_covers(size: usize, covers: &[(usize, usize)]) -> Result<Self> {
        if size == 0 {
            return Err(Error::Empty);
        }
        if size > MAX_ELEMENTS {
            return Err(Error::TooLarge(size));
        }
        let mut upper = vec![0u64; size];
        let mut lower = vec![0u64; size];
        for &(lo, hi) in covers {
            for index in [lo, hi] {
                if index >= size {
                    return Err(Error::IndexOutOfRange { index, size });
                }
            }
            if lo == hi {
                return Err(Error::SelfCover(lo));
            }
            upper[lo] |= 1 << hi;
            lower[hi] |= 1 << lo;
        }

        // Kahn's algorithm; ties broken by index so `topo` is deterministic.
        let mut indegree: Vec<u32> = lower.iter().map(|m| m.count_ones()).collect();
        let mut ready: u64 = 0;
        for (x, &d) in indegree.iter().enumerate() {
            if d == 0 {
                ready |= 1 << x;
            }
        }
        let mut topo = Vec::with_capacity(size);
        while ready != 0 {
            let x = ready.trailing_zeros() as usize;
            ready &= ready - 1;
            topo.push(x);
            for y in bits(upper[x]) {
                indegree[y] -= 1;
                if indegree[y] == 0 {
                    ready |= 1 << y;
                }
            }
        }
        if topo.len() != size {
            return Err(Error::Cycle);
        }

        let mut below = vec![0u64; size];
        for &x in &topo {
            let mut acc = 0;
            for z in bits(lower[x]) {
                acc |= below[z] | (1 << z);
            }
            below[x] = acc;
        }
        let mut above = vec![0u64; size];
        for &x in topo.iter().rev() {
            let mut acc = 0;
            for z in bits(upper[x]) {
                acc |= above[z] | (1 << z);
            }
            above[x] = acc;
        }

        let mut pairs = Vec::new();
        for x in 0..size {
            for y in bits(upper[x]) {
                // x ⋖ y fails when some z sits strictly between them.
                if above[x] & below[y] != 0 {
                    return Err(Error::RedundantCover(x, y));
                }
                pairs.push((x, y));
            }
        }

        Ok(Self {
            size,
            covers: pairs,
            upper,
            lower,
            above,
            below,
            topo,
        })
    }

    /// The `n`-element chain `0 ⋖ 1 ⋖ … ⋖ n-1`.
    pub fn chain(n: usize) -> Result<Self> {
        let covers: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_covers(n, &covers)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Covering pairs `(lower, upper)`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn upper_covers(&self, x: usize) -> impl Iterator<Item = usize> {
        bits(self.upper[x])
    }

    pub fn lower_covers(&self, x: usize) -> impl Iterator<Item = usize> {
        bits(self.lower[x])
    }

    pub(crate) fn upper_mask(&self, x: usize) -> u64 {
        self.upper[x]
    }

    pub(crate) fn lower_mask(&self, x: usize) -> u64 {
        self.lower[x]
    }

    pub(crate) fn above_mask(&self, x: usize) -> u64 {
        self.above[x]
    }

    pub(crate) fn below_mask(&self, x: usize) -> u64 {
        self.below[x]
    }

    pub(crate) fn topological(&self) -> &[usize] {
        &self.topo
    }

    pub fn upper_degree(&self, x: usize) -> usize {
        self.upper[x].count_ones() as usize
    }

    pub fn lower_degree(&self, x: usize) -> usize {
        self.lower[x].count_ones() as usize
    }

    /// `x ≤ y`.
    pub fn leq(&self, x: usize, y: usize) -> bool {
        x == y || self.above[x] & (1 << y) != 0
    }

    /// `x < y`.
    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.above[x] & (1 << y) != 0
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// `x ⋖ y`.
    pub fn covered_by(&self, x: usize, y: usize) -> bool {
        self.upper[x] & (1 << y) != 0
    }

    /// The least element, if there is exactly one minimal element.
    pub fn bottom(&self) -> Option<usize> {
        let mut minimal = (0..self.size).filter(|&x| self.lower[x] == 0);
        match (minimal.next(), minimal.next()) {
            (Some(x), None) => Some(x),
            _ => None,
        }
    }

    /// The greatest element, if there is exactly one maximal element.
    pub fn top(&self) -> Option<usize> {
        let mut maximal = (0..self.size).filter(|&x| self.upper[x] == 0);
        match (maximal.next(), maximal.next()) {
            (Some(x), None) => Some(x),
            _ => None,
        }
    }

    fn all(&self) -> u64 {
        if self.size == 64 {
            u64::MAX
        } else {
            (1u64 << self.size) - 1
        }
    }

    /// Least upper bound of `x` and `y`, if it exists.
    pub fn join(&self, x: usize, y: usize) -> Option<usize> {
        let common = (self.above[x] | (1 << x)) & (self.above[y] | (1 << y));
        self.unique_minimal(common)
    }

    /// Greatest lower bound of `x` and `y`, if it exists.
    pub fn meet(&self, x: usize, y: usize) -> Option<usize> {
        let common = (self.below[x] | (1 << x)) & (self.below[y] | (1 << y));
        self.unique_maximal(common)
    }

    fn unique_minimal(&self, set: u64) -> Option<usize> {
        let mut found = None;
        for z in bits(set) {
            if self.below[z] & set == 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(z);
            }
        }
        found
    }

    fn unique_maximal(&self, set: u64) -> Option<usize> {
        let mut found = None;
        for z in bits(set) {
            if self.above[z] & set == 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(z);
            }
        }
        found
    }

    /// True iff every pair of elements has a join and a meet.
    pub fn is_lattice(&self) -> bool {
        if self.bottom().is_none() || self.top().is_none() {
            return false;
        }
        for x in 0..self.size {
            for y in x + 1..self.size {
                if self.comparable(x, y) {
                    continue;
                }
                if self.join(x, y).is_none() || self.meet(x, y).is_none() {
                    return false;
                }
            }
        }
        true
    }

    fn require_lattice(&self) -> Result<()> {
        if self.is_lattice() {
            Ok(())
        } else {
            Err(Error::NotLattice)
        }
    }

    /// Elements with at least two lower covers or at least two upper covers.
    ///
    /// In a finite lattice these are exactly the join- or meet-reducible
    /// elements.
    pub fn reducible_elements(&self) -> Result<Vec<usize>> {
        self.require_lattice()?;
        Ok(bits(self.reducible_mask()).collect())
    }

    pub(crate) fn reducible_mask(&self) -> u64 {
        let mut mask = 0;
        for x in 0..self.size {
            if self.upper[x].count_ones() >= 2 || self.lower[x].count_ones() >= 2 {
                mask |= 1 << x;
            }
        }
        mask
    }

    /// Doubly irreducible elements: at most one lower and one upper cover.
    pub fn irreducible_elements(&self) -> Vec<usize> {
        bits(self.all() & !self.reducible_mask()).collect()
    }

    /// True iff the reducible elements are pairwise comparable.
    pub fn is_rc(&self) -> Result<bool> {
        self.require_lattice()?;
        Ok(self.reducibles_form_chain())
    }

    pub(crate) fn reducibles_form_chain(&self) -> bool {
        let red = self.reducible_mask();
        bits(red).all(|x| red & !(self.above[x] | self.below[x] | (1 << x)) == 0)
    }

    fn is_connected(&self) -> bool {
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0;
            for x in bits(frontier) {
                next |= self.upper[x] | self.lower[x];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == self.all()
    }

    /// Cycle rank of the cover graph, `|covers| − size + 1`.
    pub fn nullity(&self) -> Result<usize> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(self.covers.len() + 1 - self.size)
    }

    /// Number of covering pairs in a longest chain.
    pub fn height(&self) -> usize {
        let mut depth = vec![0usize; self.size];
        for &x in &self.topo {
            for y in bits(self.upper[x]) {
                depth[y] = depth[y].max(depth[x] + 1);
            }
        }
        depth.into_iter().max().unwrap_or(0)
    }

    /// The order dual.
    pub fn dual(&self) -> Self {
        let flipped: Vec<_> = self.covers.iter().map(|&(lo, hi)| (hi, lo)).collect();
        Self::from_covers(self.size, &flipped).expect("dual of a valid poset is valid")
    }

    /// Relabels element `x` as `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.size {
            return Err(crate::error::domain("permutation length differs from poset size"));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.size || seen & (1 << p) != 0 {
                return Err(crate::error::domain("not a permutation"));
            }
            seen |= 1 << p;
        }
        let covers: Vec<_> = self.covers.iter().map(|&(a, b)| (perm[a], perm[b])).collect();
        Self::from_covers(self.size, &covers)
    }

    /// Order-isomorphism invariant fingerprint.
    pub fn canonical_key(&self) -> CanonicalKey {
        canon::canonical_key(self)
    }

    pub fn is_isomorphic(&self, other: &Lattice) -> bool {
        self.size == other.size
            && self.covers.len() == other.covers.len()
            && self.canonical_key() == other.canonical_key()
    }

    /// Subposet induced on the elements of `keep`, relabeled in increasing
    /// index order. Returns the poset and the map new index → old index.
    pub(crate) fn induced(&self, keep: u64) -> (Self, Vec<usize>) {
        let witness: Vec<usize> = bits(keep).collect();
        let mut index = vec![usize::MAX; self.size];
        for (new, &old) in witness.iter().enumerate() {
            index[old] = new;
        }
        let mut covers = Vec::new();
        for &x in &witness {
            let up = self.above[x] & keep;
            for y in bits(up) {
                // y covers x in the subposet when nothing kept lies between.
                if self.above[x] & self.below[y] & keep == 0 {
                    covers.push((index[x], index[y]));
                }
            }
        }
        let poset = Self::from_covers(witness.len(), &covers).expect("induced subposet is valid");
        (poset, witness)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> Lattice {
        Lattice::from_covers(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn boolean3() -> Lattice {
        // 0; atoms 1,2,3; coatoms 4=1∨2, 5=1∨3, 6=2∨3; top 7
        Lattice::from_covers(
            8,
            &[
                (0, 1), (0, 2), (0, 3),
                (1, 4), (2, 4), (1, 5), (3, 5), (2, 6), (3, 6),
                (4, 7), (5, 7), (6, 7),
            ],
        )
        .unwrap()
    }

    #[test]
    fn chains_and_diamonds_are_lattices() {
        assert!(Lattice::chain(3).unwrap().is_lattice());
        assert!(diamond().is_lattice());
    }

    #[test]
    fn bowtie_is_not_a_lattice() {
        let bowtie = Lattice::from_covers(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert!(!bowtie.is_lattice());
        // With a bottom and top added, x ∨ y still has two minimal upper bounds.
        let bounded = Lattice::from_covers(
            6,
            &[(4, 0), (4, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 5), (3, 5)],
        )
        .unwrap();
        assert!(!bounded.is_lattice());
        assert!(matches!(bounded.reducible_elements(), Err(Error::NotLattice)));
    }

    #[test]
    fn malformed_covers_are_rejected() {
        assert!(matches!(Lattice::from_covers(2, &[(0, 1), (1, 0)]), Err(Error::Cycle)));
        assert!(matches!(Lattice::from_covers(2, &[(1, 1)]), Err(Error::SelfCover(1))));
        assert!(matches!(
            Lattice::from_covers(3, &[(0, 1), (1, 2), (0, 2)]),
            Err(Error::RedundantCover(0, 2))
        ));
        assert!(matches!(
            Lattice::from_covers(2, &[(0, 5)]),
            Err(Error::IndexOutOfRange { index: 5, size: 2 })
        ));
        assert!(matches!(Lattice::from_covers(0, &[]), Err(Error::Empty)));
    }

    #[test]
    fn reducibles() {
        assert!(Lattice::chain(6).unwrap().reducible_elements().unwrap().is_empty());
        assert_eq!(diamond().reducible_elements().unwrap(), vec![0, 3]);
    }

    #[test]
    fn rc_predicate() {
        assert!(Lattice::chain(4).unwrap().is_rc().unwrap());
        assert!(diamond().is_rc().unwrap());
        assert!(!boolean3().is_rc().unwrap());
    }

    #[test]
    fn nullity_and_height() {
        let c = Lattice::chain(5).unwrap();
        assert_eq!(c.nullity().unwrap(), 0);
        assert_eq!(c.height(), 4);
        assert_eq!(diamond().nullity().unwrap(), 1);
        assert_eq!(diamond().height(), 2);
        let split = Lattice::from_covers(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(split.nullity(), Err(Error::Disconnected)));
    }

    #[test]
    fn joins_and_meets() {
        let d = diamond();
        assert_eq!(d.join(1, 2), Some(3));
        assert_eq!(d.meet(1, 2), Some(0));
        assert_eq!(d.join(0, 1), Some(1));
    }

    #[test]
    fn dual_swaps_covers() {
        let d = Lattice::from_covers(3, &[(0, 1), (0, 2)]).unwrap();
        let dd = d.dual();
        assert_eq!(dd.covers(), &[(1, 0), (2, 0)]);
        assert_eq!(dd.dual(), d);
    }

    #[test]
    fn induced_subposet_recomputes_covers() {
        // Removing the middle of 0<1<2 yields the cover 0⋖2.
        let c = Lattice::chain(3).unwrap();
        let (sub, witness) = c.induced(0b101);
        assert_eq!(witness, vec![0, 2]);
        assert_eq!(sub.covers(), &[(0, 1)]);
    }

    #[test]
    fn isomorphism_basics() {
        assert!(Lattice::chain(3).unwrap().is_isomorphic(&Lattice::chain(3).unwrap()));
        assert!(!Lattice::chain(3).unwrap().is_isomorphic(&diamond()));
        let relabeled = diamond().relabel(&[3, 1, 0, 2]).unwrap();
        assert_eq!(relabeled.canonical_key(), diamond().canonical_key());
    }
}
