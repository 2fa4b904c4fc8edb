//! Exact closed-form counts of RC-lattices and maximal blocks.
//!
//! Every count is a [`Count`] (arbitrary precision). Sums with an empty range
//! are zero, `C(n, k) = 0` for `n < k`, and `P(m, k)` is the number of
//! partitions of `m` into exactly `k` positive parts.

mod arith;
mod blocks;
mod lattices;

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

pub use blocks::{
    count_b_5_3, count_b_5_3_h, count_block_prior, count_class_b, count_class_b29_as_printed, count_l_5_3,
    count_l_5_3_h, HEIGHTS, PRIOR_SHAPES,
};
pub use lattices::{
    count_b_4_3, count_l_2_1_closed, count_l_2_k, count_l_3_2, count_l_3_3, count_l_3_k, count_l_4_2,
    count_l_4_2_amended, count_l_4_3, count_l_4_3_amended,
};

use crate::error::{domain, Result};

pub type Count = BigUint;

/// Number of partitions of `m` into exactly `k` positive parts.
pub fn partitions_exact(m: usize, k: usize) -> Count {
    arith::partitions_table(m).big(m as i64, k as i64)
}

/// `Σ_{p=r}^{n-s} a(p)·b(n-p)`: lattices `L₁ ⊕ L₂` on `n` elements with
/// `|L₁| ≥ r` and `|L₂| ≥ s`.
pub fn compose_linear(a: impl Fn(usize) -> Count, b: impl Fn(usize) -> Count, n: usize, r: usize, s: usize) -> Count {
    if n < s {
        return Count::zero();
    }
    (r..=n - s).map(|p| a(p) * b(n - p)).sum()
}

/// `Σ_{p=r}^{n-s+1} a(p)·b(n-p+1)`: the same for `L₁ ∘ L₂`, which shares one
/// element between the summands.
pub fn compose_vertical(a: impl Fn(usize) -> Count, b: impl Fn(usize) -> Count, n: usize, r: usize, s: usize) -> Count {
    if n + 1 < s {
        return Count::zero();
    }
    (r..=n + 1 - s).map(|p| a(p) * b(n + 1 - p)).sum()
}

/// The `(r, k)` classes with a formula, for error messages.
pub const SUPPORTED: &str = "(r=2, k≥1), (r=3, k≥2), (r=4, k=2), (r=4, k=3), (r=5, k=3)";

/// A request for `|L(n; r, k)|`, optionally restricted to lattices whose
/// basic block has height `h` (only for `r = 5, k = 3`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CensusQuery {
    pub n: usize,
    pub r: usize,
    pub k: usize,
    pub h: Option<usize>,
}

impl CensusQuery {
    pub fn new(n: usize, r: usize, k: usize) -> Self {
        CensusQuery { n, r, k, h: None }
    }

    pub fn with_height(self, h: usize) -> Self {
        CensusQuery { h: Some(h), ..self }
    }

    /// Checks that `(r, k, h)` names a supported class, independent of `n`.
    pub fn check_class(r: usize, k: usize, h: Option<usize>) -> Result<()> {
        let ok = match (r, k) {
            (2, k) => k >= 1,
            (3, k) => k >= 2,
            (4, 2) | (4, 3) | (5, 3) => true,
            _ => false,
        };
        if !ok {
            return Err(domain(format!("unsupported class r={r}, k={k}; supported: {SUPPORTED}")));
        }
        match h {
            Some(h) if (r, k) != (5, 3) => Err(domain(format!("height filter h={h} only applies to r=5, k=3"))),
            Some(h) if !HEIGHTS.contains(&h) => Err(domain(format!("block height must be 4..=7, got {h}"))),
            _ => Ok(()),
        }
    }

    /// Smallest `n` at which the formula is defined.
    pub fn min_n(r: usize, k: usize) -> usize {
        match (r, k) {
            (2, k) => (k + 3).max(4),
            (3, _) | (4, 2) => 6,
            (4, 3) => 7,
            _ => 8,
        }
    }

    /// True when the formula is defined at this `n`.
    pub fn in_domain(&self) -> bool {
        Self::check_class(self.r, self.k, self.h).is_ok() && self.n >= Self::min_n(self.r, self.k)
    }

    /// Evaluates the closed form.
    pub fn formula(&self) -> Result<Count> {
        Self::check_class(self.r, self.k, self.h)?;
        let n = self.n;
        match (self.r, self.k, self.h) {
            (2, 1, _) => count_l_2_1_closed(n),
            (2, k, _) => count_l_2_k(n, k),
            (3, 2, _) => count_l_3_2(n),
            (3, 3, _) => count_l_3_3(n),
            (3, k, _) => count_l_3_k(n, k),
            (4, 2, _) => count_l_4_2(n),
            (4, 3, _) => count_l_4_3(n),
            (5, 3, Some(h)) => count_l_5_3_h(n, h),
            (5, 3, None) => count_l_5_3(n),
            _ => unreachable!("class checked above"),
        }
    }
}

impl fmt::Display for CensusQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L(n={}; r={}, k={}", self.n, self.r, self.k)?;
        if let Some(h) = self.h {
            write!(f, ", h={h}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: u64) -> Count {
        Count::from(v)
    }

    #[test]
    fn partitions_small_values() {
        assert_eq!(partitions_exact(2, 2), c(1));
        assert_eq!(partitions_exact(5, 2), c(2));
        assert_eq!(partitions_exact(6, 3), c(3));
        assert_eq!(partitions_exact(0, 0), c(1));
        assert_eq!(partitions_exact(4, 0), c(0));
        let p1000: Count = (0..=1000).map(|k| partitions_exact(1000, k)).sum();
        assert_eq!(p1000.to_string(), "24061467864032622473692149727991");
    }

    #[test]
    fn composition_helpers() {
        let one = |_| c(1);
        assert_eq!(compose_linear(one, one, 2, 1, 1), c(1));
        assert_eq!(compose_linear(one, |_| c(0), 10, 1, 1), c(0));
        assert_eq!(compose_linear(one, one, 1, 1, 1), c(0));
        // Diamond glued on top of a four-reducible block.
        for j in 9..=20 {
            let glued = compose_vertical(
                |p| count_block_prior(p, 4, 2, 3).unwrap(),
                |q| count_block_prior(q, 2, 1, 2).unwrap(),
                j,
                6,
                4,
            );
            let b8 = crate::catalog::BasicBlockId::new(8).unwrap();
            assert_eq!(glued, count_class_b(b8, j), "j={j}");
        }
    }

    #[test]
    fn query_dispatch() {
        assert_eq!(CensusQuery::new(8, 5, 3).formula().unwrap(), c(7));
        assert_eq!(CensusQuery::new(4, 2, 1).formula().unwrap(), c(1));
        assert!(CensusQuery::new(9, 5, 2).formula().is_err());
        assert!(CensusQuery::new(9, 4, 3).with_height(4).formula().is_err());
        assert!(CensusQuery::new(9, 5, 3).with_height(3).formula().is_err());
        assert!(!CensusQuery::new(3, 2, 1).in_domain());
        assert_eq!(CensusQuery::min_n(2, 5), 8);
    }
}
