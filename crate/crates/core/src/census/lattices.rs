//! Counts of RC-lattices `|L(n; r, k)|` on `n` elements with `r` reducible
//! elements and nullity `k`, for `r ≤ 4`.

use num_bigint::BigUint;

use super::arith::{partitions_table, Acc, F};
use super::Count;
use crate::error::{domain, Result};

fn at_least(n: usize, min: usize, what: &str) -> Result<()> {
    if n < min {
        Err(domain(format!("{what} requires n ≥ {min}, got {n}")))
    } else {
        Ok(())
    }
}

/// Nullity one, by parity of `n`.
pub fn count_l_2_1_closed(n: usize) -> Result<Count> {
    at_least(n, 4, "|L(n;2,1)|")?;
    let m = BigUint::from(n / 2);
    let one = BigUint::from(1u32);
    let last = if n % 2 == 1 { 4u32 * &m + 1u32 } else { 4u32 * &m - 5u32 };
    Ok(&m * (&m - &one) * last / 6u32)
}

/// Two reducible elements, any nullity `1 ≤ k ≤ n - 3`.
pub fn count_l_2_k(n: usize, k: usize) -> Result<Count> {
    at_least(n, 4, "|L(n;2,k)|")?;
    if k == 0 || k + 3 > n {
        return Err(domain(format!("|L(n;2,k)| requires 1 ≤ k ≤ n-3, got n={n}, k={k}")));
    }
    let t = partitions_table(n);
    let (n, k) = (n as i64, k as i64);
    let mut acc = Acc::new(&t);
    for j in 1..=n - k - 2 {
        acc.term(j, &[F::P(n - j - 1, k + 1)]);
    }
    Ok(acc.finish())
}

/// Three reducible elements, nullity `k ≥ 2`.
///
/// Each of the five families carries its own admissible range for `k`; a
/// family contributes only at those `j` whose range contains the requested `k`.
pub fn count_l_3_k(n: usize, k: usize) -> Result<Count> {
    at_least(n, 6, "|L(n;3,k)|")?;
    if k < 2 {
        return Err(domain(format!("|L(n;3,k)| requires k ≥ 2, got {k}")));
    }
    let t = partitions_table(n);
    let (n, k) = (n as i64, k as i64);
    let mut acc = Acc::new(&t);

    for j in 0..=n - 6 {
        if (2..=n - j - 4).contains(&k) {
            for l in 1..=n - j - 5 {
                for i in 1..=n - j - l - 4 {
                    acc.term(2 * (j + 1), &[F::P(n - j - l - i - 2, k)]);
                }
            }
        }
        if (3..=n - j - 4).contains(&k) {
            for r in 5..=n - j - 2 {
                for s in 1..=k - 2 {
                    for i in 1..=r - 4 {
                        acc.term(2 * (j + 1), &[F::P(r - i - 2, s + 1), F::P(n - j - r, k - s)]);
                    }
                }
            }
        }
    }
    for j in 0..=n - 7 {
        if (2..=n - j - 5).contains(&k) {
            for l in 4..=n - j - 3 {
                for t in 1..=k - 1 {
                    acc.term(j + 1, &[F::P(l - 2, t + 1), F::P(n - j - l - 1, k - t + 1)]);
                }
            }
        }
    }
    for j in 0..=n - 8 {
        if (3..=n - j - 5).contains(&k) {
            for r in 1..=n - j - 7 {
                for l in 4..=n - j - r - 3 {
                    for t in 1..=k - 2 {
                        acc.term(j + 1, &[F::P(l - 2, t + 1), F::P(n - j - r - l - 1, k - t)]);
                    }
                }
            }
        }
        if (4..=n - j - 5).contains(&k) {
            for r in 2..=n - j - 7 {
                for s in 2..=k - 2 {
                    for l in 4..=n - j - r - 3 {
                        for t in 1..=k - s - 1 {
                            acc.term(
                                j + 1,
                                &[F::P(l - 2, t + 1), F::P(n - j - r - l - 1, k - s - t + 1), F::P(r, s)],
                            );
                        }
                    }
                }
            }
        }
    }
    Ok(acc.finish())
}

pub fn count_l_3_2(n: usize) -> Result<Count> {
    at_least(n, 6, "|L(n;3,2)|")?;
    let t = partitions_table(n);
    let n = n as i64;
    let mut acc = Acc::new(&t);
    for j in 0..=n - 6 {
        for l in 1..=n - j - 5 {
            for i in 1..=n - j - l - 4 {
                acc.term(2 * (j + 1), &[F::P(n - j - l - i - 2, 2)]);
            }
        }
    }
    for j in 0..=n - 7 {
        for l in 4..=n - j - 3 {
            acc.term(j + 1, &[F::P(l - 2, 2), F::P(n - j - l - 1, 2)]);
        }
    }
    Ok(acc.finish())
}

pub fn count_l_3_3(n: usize) -> Result<Count> {
    at_least(n, 6, "|L(n;3,3)|")?;
    let t = partitions_table(n);
    let n = n as i64;
    let mut acc = Acc::new(&t);
    for j in 0..=n - 6 {
        for l in 1..=n - j - 5 {
            for i in 1..=n - j - l - 4 {
                acc.term(2 * (j + 1), &[F::P(n - j - l - i - 2, 3)]);
            }
        }
        for r in 5..=n - j - 2 {
            for i in 1..=r - 4 {
                acc.term(2 * (j + 1), &[F::P(r - i - 2, 2), F::P(n - j - r, 2)]);
            }
        }
    }
    for j in 0..=n - 7 {
        for l in 4..=n - j - 3 {
            for t in 1..=2 {
                acc.term(j + 1, &[F::P(l - 2, t + 1), F::P(n - j - l - 1, 4 - t)]);
            }
        }
    }
    for j in 0..=n - 8 {
        for r in 1..=n - j - 7 {
            for l in 4..=n - j - r - 3 {
                acc.term(j + 1, &[F::P(l - 2, 2), F::P(n - j - r - l - 1, 2)]);
            }
        }
    }
    Ok(acc.finish())
}

/// Four reducible elements, nullity two, as published.
///
/// The third family weights each term by `n - i - m - 7`; from `n = 9` on
/// this exceeds the exhaustive count. See [`count_l_4_2_amended`].
pub fn count_l_4_2(n: usize) -> Result<Count> {
    l_4_2(n, false)
}

/// [`count_l_4_2`] with the third family unweighted, i.e. the sum over
/// `i` of `(i + 1)` times the number of blocks on `n - i` elements.
pub fn count_l_4_2_amended(n: usize) -> Result<Count> {
    l_4_2(n, true)
}

fn l_4_2(n: usize, amended: bool) -> Result<Count> {
    at_least(n, 6, "|L(n;4,2)|")?;
    let t = partitions_table(n);
    let n = n as i64;
    let mut acc = Acc::new(&t);
    for i in 0..=n - 6 {
        acc.term(i + 1, &[F::C(n - i - 2, 4)]);
    }
    for i in 0..=n - 7 {
        for p in 1..=n - i - 6 {
            for l in 2..=n - i - p - 4 {
                acc.term((i + 1) * (l - 1), &[F::P(n - i - p - l - 2, 2)]);
            }
        }
    }
    for i in 0..=n - 8 {
        for m in 0..=n - i - 8 {
            for s in 4..=n - i - m - 4 {
                let weight = if amended { 1 } else { n - i - m - 7 };
                acc.term((i + 1) * weight, &[F::P(s - 2, 2), F::P(n - i - m - s - 2, 2)]);
            }
        }
    }
    Ok(acc.finish())
}

/// Four reducible elements, nullity three, as published.
///
/// `q` counts the elements outside the maximal block; `N = n - q` is the block
/// size. One family sums over a second index that the published statement
/// also calls `q`; here it is the independent index `q2`. The last family
/// weights each term by `N - t - m - 7`, which overcounts from `n = 10` on.
/// See [`count_l_4_3_amended`].
pub fn count_l_4_3(n: usize) -> Result<Count> {
    l_4_3(n, false)
}

/// [`count_l_4_3`] with the last family unweighted.
pub fn count_l_4_3_amended(n: usize) -> Result<Count> {
    l_4_3(n, true)
}

/// Maximal blocks on `j` elements with four reducibles and nullity three:
/// the bracketed sum of [`count_l_4_3`] at `N = j`.
pub fn count_b_4_3(j: usize, amended: bool) -> Count {
    let t = partitions_table(j);
    blocks_4_3(&t, j as i64, amended)
}

fn l_4_3(n: usize, amended: bool) -> Result<Count> {
    at_least(n, 7, "|L(n;4,3)|")?;
    let t = partitions_table(n);
    let n = n as i64;
    let mut total = Acc::new(&t);
    for q in 0..=n - 7 {
        let block = blocks_4_3(&t, n - q, amended);
        total.add(&(block * BigUint::from((q + 1) as u64)));
    }
    Ok(total.finish())
}

fn blocks_4_3(t: &super::arith::Partitions, nn: i64, amended: bool) -> Count {
    let mut acc = Acc::new(t);
    for s in 1..=nn - 6 {
        for r in 1..=nn - s - 5 {
            for l in 2..=nn - s - r - 3 {
                acc.term(2 * (nn - s - r - l - 2), &[F::P(l, 2)]);
            }
        }
    }
    for p in 4..=nn - 4 {
        for tt in 1..=nn - p - 3 {
            acc.term(tt, &[F::P(nn - p - tt - 1, 2), F::P(p - 2, 2)]);
        }
    }
    for tt in 1..=nn - 7 {
        for i in 2..=nn - tt - 5 {
            acc.term(i - 1, &[F::P(nn - tt - i - 2, 3)]);
        }
    }
    for p in 1..=nn - 6 {
        acc.term(1, &[F::C(nn - p - 2, 4)]);
    }
    for tt in 1..=nn - 7 {
        for r in 1..=nn - tt - 6 {
            for l in 1..=nn - tt - r - 5 {
                for i in 1..=nn - tt - r - l - 4 {
                    acc.term(7, &[F::P(nn - tt - r - l - i - 2, 2)]);
                }
            }
        }
    }
    for r in 0..=nn - 9 {
        for p in 5..=nn - r - 4 {
            acc.term(2, &[F::P(p - 2, 3), F::P(nn - p - r - 2, 2)]);
        }
    }
    for p in 4..=nn - 5 {
        for l in 1..=nn - p - 4 {
            for i in 1..=nn - p - l - 3 {
                acc.term(4, &[F::P(p - 2, 2), F::P(nn - p - l - i - 1, 2)]);
            }
        }
    }
    for r in 1..=nn - 8 {
        for q2 in 1..=nn - r - 7 {
            for l in 4..=nn - q2 - r - 3 {
                acc.term(2, &[F::P(l - 2, 2), F::P(nn - q2 - r - l - 1, 2)]);
            }
        }
    }
    for p in 7..=nn - 3 {
        for l in 4..=p - 3 {
            acc.term(1, &[F::P(nn - p - 1, 2), F::P(l - 2, 2), F::P(p - l - 1, 2)]);
        }
    }
    for tt in 1..=nn - 8 {
        for m in 0..=nn - tt - 8 {
            for s in 4..=nn - tt - m - 4 {
                let weight = if amended { 1 } else { nn - tt - m - 7 };
                acc.term(weight, &[F::P(s - 2, 2), F::P(nn - tt - m - s - 2, 2)]);
            }
        }
    }
    acc.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: u64) -> Count {
        Count::from(v)
    }

    #[test]
    fn nullity_one_small_values() {
        assert_eq!(count_l_2_1_closed(4).unwrap(), c(1));
        assert_eq!(count_l_2_1_closed(5).unwrap(), c(3));
        assert_eq!(count_l_2_1_closed(6).unwrap(), c(7));
        assert!(count_l_2_1_closed(3).is_err());
    }

    #[test]
    fn two_reducibles() {
        assert_eq!(count_l_2_k(4, 1).unwrap(), c(1));
        assert_eq!(count_l_2_k(6, 3).unwrap(), c(1));
        for n in 4..=60 {
            assert_eq!(count_l_2_k(n, 1).unwrap(), count_l_2_1_closed(n).unwrap(), "n={n}");
        }
        assert!(count_l_2_k(6, 4).is_err());
        assert!(count_l_2_k(6, 0).is_err());
    }

    #[test]
    fn three_reducibles_specializations() {
        for n in 6..=30 {
            assert_eq!(count_l_3_k(n, 2).unwrap(), count_l_3_2(n).unwrap(), "n={n}");
            assert_eq!(count_l_3_k(n, 3).unwrap(), count_l_3_3(n).unwrap(), "n={n}");
        }
        // Smallest case: the j=0, l=1, i=1 term alone, 2·P(2,2).
        assert_eq!(count_l_3_2(6).unwrap(), c(2));
        assert!(count_l_3_3(5).is_err());
        assert!(count_l_3_k(8, 1).is_err());
    }

    #[test]
    fn four_reducibles() {
        assert_eq!(count_l_4_2(6).unwrap(), c(1));
        assert!(count_l_4_2(5).is_err());
        assert!(count_l_4_3(6).is_err());
        // The two readings of each formula agree below the first affected size.
        for n in 6..=8 {
            assert_eq!(count_l_4_2(n).unwrap(), count_l_4_2_amended(n).unwrap());
        }
        assert_ne!(count_l_4_2(9).unwrap(), count_l_4_2_amended(9).unwrap());
        for n in 7..=9 {
            assert_eq!(count_l_4_3(n).unwrap(), count_l_4_3_amended(n).unwrap());
        }
        assert_eq!(count_l_4_3(7).unwrap(), c(3));
        assert_eq!(count_b_4_3(10, false), c(308));
        assert_eq!(count_b_4_3(10, true), c(306));
    }
}
