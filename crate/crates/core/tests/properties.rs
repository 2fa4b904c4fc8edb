use proptest::prelude::*;

use rclattice::census::partitions_exact;
use rclattice::{basic_block_of, linear_sum, maximal_chain_rep, vertical_sum, AdjunctRep, Count, Lattice};

/// A base-chain representation: each pair is non-adjacent on the base.
fn base_form() -> impl Strategy<Value = AdjunctRep> {
    (3usize..=8, prop::collection::vec((0usize..8, 0usize..6, 1usize..=2), 0..=3)).prop_map(|(base, raw)| {
        let mut rep = AdjunctRep::chain(base);
        for (a, gap, len) in raw {
            let a = a % (base - 2);
            let b = (a + 2 + gap).min(base - 1);
            rep = rep.attach(a, b, len);
        }
        rep
    })
}

fn lattice() -> impl Strategy<Value = Lattice> {
    base_form().prop_map(|rep| rep.build().unwrap())
}

fn shuffled(l: Lattice) -> impl Strategy<Value = (Lattice, Vec<usize>)> {
    let n = l.size();
    (Just(l), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
}

fn brute_partitions(m: usize, max_part: usize, parts: usize, k: usize) -> u64 {
    if m == 0 {
        return u64::from(parts == k);
    }
    if parts == k {
        return 0;
    }
    (1..=max_part.min(m)).map(|p| brute_partitions(m - p, p, parts + 1, k)).sum()
}

proptest! {
    #[test]
    fn build_counts_elements_and_cycles(rep in base_form()) {
        let l = rep.build().unwrap();
        prop_assert_eq!(l.size(), rep.size());
        prop_assert_eq!(l.nullity().unwrap(), rep.attachments.len());
        prop_assert!(l.is_lattice());
        prop_assert!(l.is_rc().unwrap());
        let endpoints: std::collections::BTreeSet<usize> =
            rep.attachments.iter().flat_map(|p| [p.a, p.b]).collect();
        prop_assert_eq!(l.reducible_elements().unwrap().len(), endpoints.len());
    }

    #[test]
    fn key_ignores_labels((l, perm) in lattice().prop_flat_map(shuffled)) {
        let moved = l.relabel(&perm).unwrap();
        prop_assert_eq!(moved.canonical_key(), l.canonical_key());
        prop_assert!(moved.is_isomorphic(&l));
    }

    #[test]
    fn dual_preserves_invariants(rep in base_form()) {
        let l = rep.build().unwrap();
        let d = l.dual();
        prop_assert_eq!(d.dual().canonical_key(), l.canonical_key());
        prop_assert_eq!(d.nullity().unwrap(), l.nullity().unwrap());
        prop_assert_eq!(d.height(), l.height());
        prop_assert_eq!(d.reducible_elements().unwrap().len(), l.reducible_elements().unwrap().len());
        let mirrored = rep.dual().unwrap().build().unwrap();
        prop_assert!(mirrored.is_isomorphic(&d));
    }

    #[test]
    fn maximal_chain_rep_rebuilds(l in lattice()) {
        let rep = maximal_chain_rep(&l).unwrap();
        prop_assert!(rep.build().unwrap().is_isomorphic(&l));
    }

    #[test]
    fn basic_block_is_idempotent(l in lattice()) {
        let once = basic_block_of(&l).unwrap().block;
        let twice = basic_block_of(&once).unwrap().block;
        prop_assert!(twice.is_isomorphic(&once));
        prop_assert_eq!(once.nullity().unwrap(), l.nullity().unwrap());
        prop_assert_eq!(once.reducible_elements().unwrap().len(), l.reducible_elements().unwrap().len());
    }

    #[test]
    fn sums_are_associative(a in lattice(), b in lattice(), c in lattice()) {
        let left = linear_sum(&linear_sum(&a, &b).unwrap(), &c).unwrap();
        let right = linear_sum(&a, &linear_sum(&b, &c).unwrap()).unwrap();
        prop_assert!(left.is_isomorphic(&right));
        let left = vertical_sum(&vertical_sum(&a, &b).unwrap(), &c).unwrap();
        let right = vertical_sum(&a, &vertical_sum(&b, &c).unwrap()).unwrap();
        prop_assert!(left.is_isomorphic(&right));
        prop_assert_eq!(left.size(), a.size() + b.size() + c.size() - 2);
        prop_assert_eq!(left.nullity().unwrap(), a.nullity().unwrap() + b.nullity().unwrap() + c.nullity().unwrap());
    }

    #[test]
    fn partition_recurrence(m in 1usize..300, k in 1usize..40) {
        let lhs = partitions_exact(m, k);
        let rhs = partitions_exact(m - 1, k - 1) + if m >= k { partitions_exact(m - k, k) } else { Count::from(0u8) };
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn partitions_match_enumeration(m in 0usize..=30, k in 0usize..=10) {
        prop_assert_eq!(partitions_exact(m, k), Count::from(brute_partitions(m, m, 0, k)));
    }
}
