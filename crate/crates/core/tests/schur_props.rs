mod common;

use common::{brute_product, kronecker};
use num_bigint::BigInt;
use proptest::prelude::*;
use schurpos::part;
use schurpos::partition::{partitions_of, Partition};
use schurpos::schur::{
    assemble_lambda, check_stability, decompose_lambda, check_symmetry, difference, difference_exact,
    kronecker_hook_square, omega, product_conj_comp, product_exact, stable_bound, LambdaIndex,
    SchurExpansion,
};

fn upto(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

fn bound(mu: &Partition) -> usize {
    stable_bound(mu).max(1)
}

#[test]
fn product_matches_brute_force_multiplication() {
    for mu in upto(5) {
        for m in [bound(&mu), bound(&mu) + 1] {
            let fast = product_conj_comp(&mu, m).unwrap();
            let slow = brute_product(&mu.complement(m).unwrap(), &mu.conjugate());
            let slow = SchurExpansion::from_terms(slow.into_iter().map(|(p, c)| (p, BigInt::from(c))));
            assert_eq!(fast, slow, "mu={} m={}", mu, m);
        }
    }
}

#[test]
fn products_are_homogeneous_of_degree_m_squared() {
    for mu in upto(5) {
        let m = bound(&mu);
        for (lambda, _) in product_conj_comp(&mu, m).unwrap().terms() {
            assert_eq!(lambda.weight(), m * m, "{} in product for {}", lambda, mu);
        }
    }
}

#[test]
fn symmetry_in_gamma_and_sigma() {
    for mu in upto(5) {
        assert!(check_symmetry(&mu, bound(&mu)).unwrap(), "{}", mu);
    }
    let m = 6;
    let e = product_conj_comp(&part![3, 2, 1], m).unwrap();
    let idx = LambdaIndex::new(part![2, 2, 1], part![1, 1, 1], part![1, 1]);
    let a = assemble_lambda(&idx, m).unwrap();
    let b = assemble_lambda(&idx.swapped(), m).unwrap();
    assert_eq!(e.coefficient(&a), e.coefficient(&b));
}

#[test]
fn stability_for_all_small_pairs() {
    for mu in upto(5).into_iter().filter(|p| !p.is_empty()) {
        for nu in mu.subpartitions().into_iter().filter(|p| p.weight() + 1 == mu.weight()) {
            assert!(check_stability(&mu, &nu).unwrap(), "{} / {}", mu, nu);
        }
    }
}

#[test]
fn omega_swaps_mu_and_its_conjugate() {
    for mu in upto(5) {
        let m = bound(&mu);
        let a = omega(&product_conj_comp(&mu, m).unwrap());
        let b = product_conj_comp(&mu.conjugate(), m).unwrap();
        assert_eq!(a, b, "{}", mu);
    }
}

#[test]
fn stability_example_and_the_value_below_the_bound() {
    let (mu, nu) = (part![3, 2, 1], part![3, 2]);
    let idx = LambdaIndex::new(part![2, 2, 1], part![1, 1, 1], part![1, 1]);
    for (m, want) in [(6, 1), (7, 1)] {
        let lambda = assemble_lambda(&idx, m).unwrap();
        assert_eq!(difference(&mu, &nu, m).unwrap().coefficient(&lambda), BigInt::from(want));
    }
    // at m = 5 the assembly is still a partition and the coefficient moves
    let lambda = assemble_lambda(&idx, 5).unwrap();
    assert_eq!(lambda, part![6, 6, 5, 3, 3, 1, 1]);
    assert!(difference(&mu, &nu, 5).is_err());
    let d = difference_exact(&mu, &nu, 5).unwrap();
    assert_eq!(d.coefficient(&lambda), BigInt::from(2));
    assert_eq!(product_exact(&mu, 5).unwrap().coefficient(&lambda), BigInt::from(4));
    assert_eq!(product_exact(&nu, 5).unwrap().coefficient(&lambda), BigInt::from(2));
}

#[test]
fn exact_route_agrees_with_stable_route_at_the_bound() {
    for mu in upto(4) {
        let m = bound(&mu);
        assert_eq!(product_exact(&mu, m).unwrap(), product_conj_comp(&mu, m).unwrap());
    }
}

fn hook(n: usize, k: usize) -> Partition {
    let mut parts = vec![n - k];
    parts.extend(std::iter::repeat_n(1, k));
    Partition::new(parts).unwrap()
}

#[test]
fn kronecker_matches_character_computation() {
    for (m, ks) in [(2usize, 0..=3usize), (3, 0..=3)] {
        let n = m * m;
        let square = Partition::rectangle(m, m);
        for k in ks {
            let e = kronecker_hook_square(m, k).unwrap();
            for lambda in partitions_of(n) {
                let want = kronecker(&hook(n, k), &square, &lambda);
                assert_eq!(e.coefficient(&lambda), BigInt::from(want), "m={} k={} {}", m, k, lambda);
            }
        }
    }
    let e = kronecker_hook_square(2, 0).unwrap();
    assert_eq!(e.to_string(), "1\t[2,2]\n");
}

#[test]
fn character_oracle_sanity() {
    // dimensions and the sign character
    assert_eq!(common::mn_character(&part![2, 1], &[1, 1, 1]), 2);
    assert_eq!(common::mn_character(&part![1, 1, 1], &[2, 1]), -1);
    assert_eq!(common::mn_character(&part![3, 2, 1], &[1; 6]), 16);
    assert_eq!(kronecker(&part![2, 1], &part![2, 1], &part![3]), 1);
    assert_eq!(kronecker(&part![2, 1], &part![2, 1], &part![1, 1, 1]), 1);
    assert_eq!(kronecker(&part![2, 1], &part![2, 1], &part![2, 1]), 1);
}

fn small_partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=3usize, 0..=3).prop_map(Partition::from_unsorted)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn serialization_round_trips(mu in small_partition(), extra in 0..2usize) {
        let m = bound(&mu) + extra;
        let e = product_conj_comp(&mu, m).unwrap();
        let back: SchurExpansion = e.to_string().parse().unwrap();
        prop_assert_eq!(back, e);
    }

    #[test]
    fn omega_is_an_involution(mu in small_partition()) {
        let e = product_conj_comp(&mu, bound(&mu)).unwrap();
        prop_assert_eq!(omega(&omega(&e)), e);
    }

    #[test]
    fn coefficients_do_not_depend_on_m_above_the_bound(mu in small_partition(), extra in 1..3usize) {
        let m = bound(&mu);
        let a = product_conj_comp(&mu, m).unwrap();
        let b = product_conj_comp(&mu, m + extra).unwrap();
        prop_assert_eq!(a.len(), b.len());
        for (lambda, c) in a.terms() {
            let idx = decompose_lambda(lambda, &mu, m).unwrap();
            let moved = assemble_lambda(&idx, m + extra).unwrap();
            prop_assert_eq!(&b.coefficient(&moved), c);
        }
    }
}
