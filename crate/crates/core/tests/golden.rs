//! Fixed tables, each confirmed by exhaustive enumeration.

use rclattice::census::{self, Count};
use rclattice::oracle::levelwise;
use rclattice::{BasicBlockId, EnumerationTask, Oracle};

fn column(values: impl IntoIterator<Item = Count>) -> Vec<String> {
    values.into_iter().map(|v| v.to_string()).collect()
}

fn expect(values: &[u64]) -> Vec<String> {
    values.iter().map(u64::to_string).collect()
}

#[test]
fn five_reducibles_nullity_three() {
    let got = column((8..=13).map(|n| census::count_l_5_3(n).unwrap()));
    assert_eq!(got, expect(&[7, 75, 420, 1664, 5283, 14343]));
    let blocks = column((8..=12).map(|j| census::count_b_5_3(j).unwrap()));
    let enumerated: Vec<u64> = (8..=12).map(|j| Oracle::default().enumerate_blocks(j, 5, 3).unwrap().len() as u64).collect();
    assert_eq!(blocks, expect(&enumerated));
}

#[test]
fn four_reducibles_from_enumeration() {
    let oracle = Oracle::default();
    let k2: Vec<u64> = (6..=13).map(|n| oracle.count(&EnumerationTask::new(n, 2).reducibles(4)).unwrap()).collect();
    assert_eq!(k2, [1, 8, 35, 111, 289, 655, 1341, 2537]);
    let k3: Vec<u64> = (7..=13).map(|n| oracle.count(&EnumerationTask::new(n, 3).reducibles(4)).unwrap()).collect();
    assert_eq!(k3, [3, 31, 164, 603, 1776, 4482, 10094]);

    assert_eq!(column((6..=13).map(|n| census::count_l_4_2_amended(n).unwrap())), expect(&k2));
    assert_eq!(column((7..=13).map(|n| census::count_l_4_3_amended(n).unwrap())), expect(&k3));
    // The stated forms, kept for comparison.
    assert_eq!(column((6..=13).map(|n| census::count_l_4_2(n).unwrap())), expect(&[1, 8, 35, 113, 305, 721, 1549, 3079]));
    assert_eq!(column((7..=13).map(|n| census::count_l_4_3(n).unwrap())), expect(&[3, 31, 164, 605, 1794, 4566, 10386]));
}

#[test]
fn two_and_three_reducibles() {
    assert_eq!(column((6..=12).map(|n| census::count_l_2_k(n, 3).unwrap())), expect(&[1, 3, 7, 14, 26, 44, 71]));
    assert_eq!(column((6..=10).map(|n| census::count_l_3_2(n).unwrap())), expect(&[2, 11, 36, 92, 200]));
    assert_eq!(column((6..=10).map(|n| census::count_l_3_3(n).unwrap())), expect(&[0, 4, 23, 79, 213]));
    assert_eq!(column((7..=12).map(|n| census::count_l_3_k(n, 4).unwrap())), expect(&[0, 6, 36, 127, 354, 846]));
}

#[test]
fn block_classes() {
    let b12 = BasicBlockId::new(12).unwrap();
    assert_eq!(column((9..=14).map(|j| census::count_class_b(b12, j))), expect(&[1, 6, 22, 62, 148, 314]));
    let b29 = BasicBlockId::new(29).unwrap();
    assert_eq!(column((11..=13).map(|j| census::count_class_b(b29, j))), expect(&[1, 4, 13]));
    assert_eq!(column((11..=13).map(census::count_class_b29_as_printed)), expect(&[0, 0, 0]));
    let enumerated = Oracle::default().enumerate(&EnumerationTask::new(13, 3).reducibles(5).blocks_only().block(b29)).unwrap();
    assert_eq!(enumerated.len(), 13);
}

#[test]
fn all_lattices_up_to_nine() {
    let totals: Vec<usize> = (1..=9).map(|n| levelwise::all_lattices(n).unwrap().len()).collect();
    assert_eq!(totals, [1, 1, 1, 2, 5, 15, 53, 222, 1078]);
}
