mod common;

use common::*;
use weylhom::shapes::{compositions_of, dominates, partitions_of, Composition};
use weylhom::tableaux::{count_standard, enumerate_standard};

#[test]
fn kostka_numbers_match_cell_filling() {
    for r in 0..=7u32 {
        for mu in partitions(r) {
            for alpha in compositions(r, 4) {
                let got = count_standard(&part(&mu), &Composition::new(alpha.clone())).unwrap();
                assert_eq!(got as u64, kostka_bruteforce(&mu, &alpha), "{mu:?} {alpha:?}");
            }
        }
    }
}

#[test]
fn enumeration_is_sorted_and_standard() {
    let mu = part(&[4, 2, 1]);
    let alpha = Composition::new(vec![2, 2, 2, 1]);
    let ts = enumerate_standard(&mu, &alpha).unwrap();
    assert!(ts.windows(2).all(|w| w[0] < w[1]));
    assert!(ts.iter().all(|t| t.is_standard() && t.weight() == alpha));
}

#[test]
fn weyl_dimension_formula() {
    for r in 1..=6u32 {
        for mu in partitions(r) {
            for n in mu.len()..=4.max(mu.len()) {
                let total: usize = compositions_of(r, n)
                    .iter()
                    .map(|a| count_standard(&part(&mu), a).unwrap())
                    .sum();
                assert_eq!(total as u128, weyl_dimension(&mu, n), "{mu:?}, n = {n}");
            }
        }
    }
}

#[test]
fn kostka_positivity_is_dominance() {
    for r in 1..=6u32 {
        for mu in partitions_of(r) {
            for alpha in compositions_of(r, 3) {
                let nonempty = count_standard(&mu, &alpha).unwrap() > 0;
                assert_eq!(nonempty, dominates(&mu, &alpha).unwrap(), "{mu} {alpha}");
            }
        }
    }
}

#[test]
fn plus_and_minus_are_inverse_bijections() {
    for r in 1..=6u32 {
        for lambda in partitions_of(r) {
            for mu in partitions_of(r) {
                if mu.part(1) > lambda.part(0) {
                    continue;
                }
                for m in [1u32, 3, 9] {
                    let base = enumerate_standard(&mu, &lambda.as_composition()).unwrap();
                    let plus = enumerate_standard(
                        &mu.add_to_first_row(m),
                        &lambda.add_to_first_row(m).as_composition(),
                    )
                    .unwrap();
                    assert_eq!(base.len(), plus.len(), "{lambda} {mu} {m}");
                    let mapped: Vec<_> = base.iter().map(|t| t.plus(m)).collect();
                    assert_eq!(mapped, plus, "order preserved for {lambda} {mu}");
                    for (t, tp) in base.iter().zip(&plus) {
                        assert_eq!(&tp.minus(m).unwrap(), t);
                    }
                }
            }
        }
    }
}

#[test]
fn partition_counts() {
    let counts: Vec<usize> = (0..=10).map(|r| partitions_of(r).len()).collect();
    assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    for r in 0..=9 {
        let ours: Vec<Vec<u32>> = partitions_of(r).iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(ours, partitions(r));
    }
}
