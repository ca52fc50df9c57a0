mod common;

use std::collections::HashSet;

use common::{involution, perm, reverse_complement};
use inv3412::enumerate::{enumerate_involutions, for_each_involution, involution_count};
use inv3412::perm::{
    count_3412, count_3412_ranked, count_3412_raw, count_pattern_21, occurrences_3412, reduce_to_pattern,
};
use inv3412::Perm;
use proptest::prelude::*;

fn two_cycles(values: &[u8]) -> usize {
    values.iter().enumerate().filter(|&(i, &v)| (v as usize) > i).count()
}

#[test]
fn enumeration_is_complete_and_duplicate_free() {
    for n in 0..=10 {
        let mut seen = HashSet::new();
        for p in enumerate_involutions(n).unwrap() {
            assert!(p.is_involution());
            assert!(seen.insert(p.one_line()), "duplicate {p} at n={n}");
        }
        assert_eq!(seen.len() as u64, involution_count(n), "n={n}");
    }
}

#[test]
fn both_counters_agree_on_all_small_involutions() {
    for n in 0..=8 {
        for_each_involution(n, |v| {
            assert_eq!(count_3412_raw(v), count_3412_ranked(v), "{v:?}");
            assert_eq!(two_cycles(v) % 2, inversions(v) % 2, "{v:?}");
        });
    }
}

fn inversions(v: &[u8]) -> usize {
    let p = Perm::new(&v.iter().map(|&x| x as usize + 1).collect::<Vec<_>>()).unwrap();
    count_pattern_21(&p)
}

#[test]
fn spec_examples() {
    let pi: Perm = "8 2 3 13 7 6 5 1 11 12 9 10 4 14".parse().unwrap();
    assert_eq!(occurrences_3412(&pi).len(), 2);
    let mut positions: Vec<usize> = [8, 13, 1, 4]
        .iter()
        .map(|&v| (1..=14).find(|&i| pi.at(i) == v).unwrap())
        .collect();
    positions.sort_unstable();
    assert_eq!(reduce_to_pattern(&pi, &positions).unwrap().to_string(), "3412");

    let p: Perm = "456123".parse().unwrap();
    assert_eq!(count_3412(&p), 9);
    assert_eq!(count_pattern_21(&"3412".parse().unwrap()), 4);
    assert!(!"2341".parse::<Perm>().unwrap().is_involution());
    assert!(Perm::new(&[]).unwrap().is_involution());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn counters_agree(p in perm(12)) {
        prop_assert_eq!(count_3412_raw(p.raw()), count_3412_ranked(p.raw()));
    }

    #[test]
    fn occurrences_are_valid_sorted_and_counted(p in perm(10)) {
        let occ = occurrences_3412(&p);
        prop_assert_eq!(occ.len(), count_3412(&p));
        prop_assert!(occ.windows(2).all(|w| w[0] < w[1]));
        for o in &occ {
            let [a, b, c, d] = o.positions;
            prop_assert!(a < b && b < c && c < d);
            prop_assert!(p.at(c) < p.at(d) && p.at(d) < p.at(a) && p.at(a) < p.at(b));
        }
    }

    // 3412 is fixed by inversion and by reverse-complement.
    #[test]
    fn count_is_symmetric(p in perm(11)) {
        let c = count_3412(&p);
        prop_assert_eq!(count_3412(&p.inverse()), c);
        prop_assert_eq!(count_3412(&reverse_complement(&p)), c);
    }

    #[test]
    fn involution_parity_is_two_cycles(p in involution(0, 14)) {
        prop_assert_eq!(count_pattern_21(&p) % 2, two_cycles(p.raw()) % 2);
    }

    #[test]
    fn reduce_all_positions_is_identity_map(p in perm(9)) {
        let all: Vec<usize> = (1..=p.len()).collect();
        prop_assert_eq!(reduce_to_pattern(&p, &all).unwrap(), p);
    }
}
