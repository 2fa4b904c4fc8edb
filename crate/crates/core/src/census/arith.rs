//! Exact arithmetic for the counting formulas: a shared table of restricted
//! partition numbers and an accumulator that stays in `u128` until a value
//! no longer fits.

use std::sync::{Arc, RwLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// `P^k_m` for `0 ≤ k ≤ m ≤ max_m`, with a `u128` shadow of each entry that fits.
pub(crate) struct Partitions {
    max_m: usize,
    big: Vec<Vec<BigUint>>,
    small: Vec<Vec<Option<u128>>>,
}

impl Partitions {
    fn build(max_m: usize) -> Self {
        // P(m,k) = P(m-1,k-1) + P(m-k,k); row m holds k = 0..=m.
        let mut big: Vec<Vec<BigUint>> = Vec::with_capacity(max_m + 1);
        for m in 0..=max_m {
            let mut row = vec![BigUint::zero(); m + 1];
            if m == 0 {
                row[0] = BigUint::one();
            }
            for k in 1..=m {
                let mut v = big[m - 1].get(k - 1).cloned().unwrap_or_default();
                if let Some(x) = big[m - k].get(k) {
                    v += x;
                }
                row[k] = v;
            }
            big.push(row);
        }
        let small = big
            .iter()
            .map(|row| row.iter().map(|v| u128::try_from(v).ok()).collect())
            .collect();
        Partitions { max_m, big, small }
    }

    pub(crate) fn big(&self, m: i64, k: i64) -> BigUint {
        if m < 0 || k < 0 || k > m {
            return BigUint::zero();
        }
        self.big[m as usize][k as usize].clone()
    }

    /// `None` when the value exceeds `u128`.
    #[inline]
    pub(crate) fn small(&self, m: i64, k: i64) -> Option<u128> {
        if m < 0 || k < 0 || k > m {
            return Some(0);
        }
        self.small[m as usize][k as usize]
    }
}

static TABLE: RwLock<Option<Arc<Partitions>>> = RwLock::new(None);

/// A table covering at least `0..=max_m`. Readers share one snapshot; a
/// larger request replaces it with a table at least twice as large.
pub(crate) fn partitions_table(max_m: usize) -> Arc<Partitions> {
    if let Some(t) = TABLE.read().expect("partition table lock").as_ref() {
        if t.max_m >= max_m {
            return Arc::clone(t);
        }
    }
    let mut slot = TABLE.write().expect("partition table lock");
    match slot.as_ref() {
        Some(t) if t.max_m >= max_m => Arc::clone(t),
        current => {
            let size = max_m.max(current.map_or(0, |t| t.max_m * 2)).max(64);
            let t = Arc::new(Partitions::build(size));
            *slot = Some(Arc::clone(&t));
            t
        }
    }
}

pub(crate) fn binomial_small(n: i64, k: i64) -> Option<u128> {
    if k < 0 || n < k {
        return Some(0);
    }
    let k = k.min(n - k) as u128;
    let n = n as u128;
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step.
        acc = acc.checked_mul(n - i)? / (i + 1);
    }
    Some(acc)
}

pub(crate) fn binomial_big(n: i64, k: i64) -> BigUint {
    if k < 0 || n < k {
        return BigUint::zero();
    }
    let k = k.min(n - k) as u64;
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n as u64 - i;
        acc /= i + 1;
    }
    acc
}

/// A factor of a summand.
#[derive(Clone, Copy, Debug)]
pub(crate) enum F {
    /// `P^k_m`, written `P(m, k)`.
    P(i64, i64),
    /// `C(n, k)`.
    C(i64, i64),
}

/// Running total of non-negative terms.
pub(crate) struct Acc<'t> {
    table: &'t Partitions,
    small: u128,
    big: BigUint,
}

impl<'t> Acc<'t> {
    pub(crate) fn new(table: &'t Partitions) -> Self {
        Acc { table, small: 0, big: BigUint::zero() }
    }

    /// Adds `coeff · Π factors`.
    #[inline]
    pub(crate) fn term(&mut self, coeff: i64, factors: &[F]) {
        debug_assert!(coeff >= 0, "negative coefficient {coeff}");
        if coeff <= 0 {
            return;
        }
        let mut product = coeff as u128;
        for &f in factors {
            let v = match f {
                F::P(m, k) => self.table.small(m, k),
                F::C(n, k) => binomial_small(n, k),
            };
            match v.map(|v| product.checked_mul(v)) {
                Some(Some(0)) => return,
                Some(Some(p)) => product = p,
                _ => return self.term_big(coeff, factors),
            }
        }
        match self.small.checked_add(product) {
            Some(s) => self.small = s,
            None => {
                self.big += self.small;
                self.small = product;
            }
        }
    }

    fn term_big(&mut self, coeff: i64, factors: &[F]) {
        let mut product = BigUint::from(coeff as u64);
        for &f in factors {
            product *= match f {
                F::P(m, k) => self.table.big(m, k),
                F::C(n, k) => binomial_big(n, k),
            };
        }
        self.big += product;
    }

    pub(crate) fn add(&mut self, value: &BigUint) {
        self.big += value;
    }

    pub(crate) fn finish(self) -> BigUint {
        self.big + self.small
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recurrence_table() {
        let t = partitions_table(40);
        assert_eq!(t.small(2, 2), Some(1));
        assert_eq!(t.small(5, 2), Some(2));
        assert_eq!(t.small(6, 3), Some(3));
        assert_eq!(t.small(0, 0), Some(1));
        assert_eq!(t.small(3, 0), Some(0));
        assert_eq!(t.small(2, 3), Some(0));
        assert_eq!(t.small(-1, 1), Some(0));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial_small(4, 4), Some(1));
        assert_eq!(binomial_small(10, 4), Some(210));
        assert_eq!(binomial_small(3, 4), Some(0));
        assert_eq!(binomial_big(200, 100).to_string(), "90548514656103281165404177077484163874504589675413336841320");
        assert_eq!(binomial_small(200, 100), None);
    }

    #[test]
    fn accumulator_spills_past_u128() {
        let t = partitions_table(10);
        let mut acc = Acc::new(&t);
        for _ in 0..4 {
            acc.term(i64::MAX, &[F::C(200, 20)]);
        }
        let expected = binomial_big(200, 20) * BigUint::from(i64::MAX as u64) * 4u32;
        assert_eq!(acc.finish(), expected);

        let mut acc = Acc::new(&t);
        acc.term(1, &[F::C(200, 100), F::P(2, 2)]);
        acc.term(3, &[F::P(6, 3)]);
        assert_eq!(acc.finish(), binomial_big(200, 100) + 9u32);
    }
}
