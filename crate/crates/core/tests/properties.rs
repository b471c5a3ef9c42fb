//! Cross-module invariants: the transport group action, variety closure
//! under direct sums, and incidence membership of cocycle pairs.

mod common;

use algvar::algebra::{self, idx3, MulTable};
use algvar::cohomology;
use algvar::identities;
use algvar::incidence;
use algvar::sample;

#[test]
fn transport_is_a_group_action() {
    let mut rng = sample::rng_from_seed(42);
    for x in [algebra::sl2(), algebra::dual_numbers(), algebra::leibniz2()] {
        let n = x.dim();
        let id = algvar::Matrix::identity(n);
        assert_eq!(x.transport(&id).unwrap(), x);
        for _ in 0..5 {
            let g = sample::random_invertible(&mut rng, n);
            let h = sample::random_invertible(&mut rng, n);
            let gh = g.mul(&h).unwrap();
            assert_eq!(
                x.transport(&h).unwrap().transport(&g).unwrap(),
                x.transport(&gh).unwrap()
            );
        }
    }
    // Random tables too, not only variety points.
    for n in [2usize, 3] {
        let x = sample::random_table(&mut rng, n);
        let g = sample::random_invertible(&mut rng, n);
        let h = sample::random_invertible(&mut rng, n);
        assert_eq!(
            x.transport(&h).unwrap().transport(&g).unwrap(),
            x.transport(&g.mul(&h).unwrap()).unwrap()
        );
    }
}

#[test]
fn direct_sum_stays_in_variety() {
    let assoc = algebra::matrix_algebra(1).direct_sum(&algebra::matrix_algebra(2));
    assert_eq!(assoc.dim(), 5);
    assert!(identities::is_associative(&assoc));
    assert!(!identities::is_commutative(&assoc));

    let comm = algebra::split_etale(2).direct_sum(&algebra::dual_numbers());
    assert!(identities::is_commutative(&comm));

    let lie = algebra::sl2().direct_sum(&algebra::sl2());
    assert!(identities::is_lie(&lie));

    let leib = algebra::leibniz2().direct_sum(&algebra::leibniz2());
    assert!(identities::is_leibniz(&leib));
    assert!(!identities::is_lie(&leib));

    let mixed = algebra::sl2().direct_sum(&algebra::leibniz2());
    assert!(identities::is_leibniz(&mixed));
}

#[test]
fn hochschild_cocycles_pair_with_the_point() {
    // (x, y) lies in the associative incidence locus for every 2-cocycle y.
    let x = algebra::matrix_algebra(2);
    let kernel = cohomology::hochschild_slice(&x).unwrap().d2.kernel_basis();
    assert_eq!(kernel.len(), 13);
    for v in &kernel {
        let y = MulTable::from_flat(4, v.clone()).unwrap();
        assert!(incidence::incidence_member_as(&x, &y).unwrap());
    }
    // A non-cocycle direction fails the pairing.
    let mut y = MulTable::zero(4);
    y.set_c(0, 0, 0, algvar::Rat::one());
    let flat = y.flatten().to_vec();
    let in_kernel = algvar::matrix::span_contains(&kernel, &[flat]);
    assert!(!in_kernel);
    assert!(!incidence::incidence_member_as(&x, &y).unwrap());
}

#[test]
fn flatten_respects_canonical_index() {
    let x = algebra::sl2();
    let n = x.dim();
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                assert_eq!(&x.flatten()[idx3(n, i, j, l)], x.c(i, j, l));
            }
        }
    }
}

#[test]
fn variety_membership_of_transports_off_the_point() {
    // Transported builders stay on-variety; the common fixtures stay off.
    let mut rng = sample::rng_from_seed(43);
    for x in common::transports(&mut rng, &common::leibniz_points_n3(), 6) {
        assert!(identities::is_leibniz(&x));
    }
    let g = sample::random_invertible(&mut rng, 2);
    let off = sample::non_associative2().transport(&g).unwrap();
    assert!(!identities::is_associative(&off));
    assert!(!identities::is_leibniz(&off));
}
