//! Shared fixtures for the integration suites.
#![allow(dead_code)] // each test binary uses its own subset

use algvar::algebra::{self, MulTable};
use algvar::sample;
use rand_chacha::ChaCha8Rng;

/// Builder points on the associative variety with dimension at most 3.
pub fn assoc_points_n3() -> Vec<MulTable> {
    vec![
        algebra::split_etale(1),
        algebra::split_etale(2),
        algebra::split_etale(3),
        algebra::dual_numbers(),
        algebra::leibniz2(),
        algebra::abelian(2),
        algebra::abelian(3),
        algebra::matrix_algebra(1),
    ]
}

/// Builder points on the Leibniz variety with dimension at most 3.
pub fn leibniz_points_n3() -> Vec<MulTable> {
    vec![
        algebra::sl2(),
        algebra::leibniz2(),
        algebra::abelian(2),
        algebra::abelian(3),
    ]
}

/// All Leibniz test points used by the operator-identity criteria.
pub fn leibniz_points_all() -> Vec<MulTable> {
    let mut points = leibniz_points_n3();
    points.push(algebra::abelian(1));
    points.push(algebra::sl2().direct_sum(&algebra::sl2()));
    points.push(algebra::sl2().direct_sum(&algebra::abelian(1)));
    points
}

/// Round-robin random transports of the given points, `count` in total.
pub fn transports(rng: &mut ChaCha8Rng, points: &[MulTable], count: usize) -> Vec<MulTable> {
    (0..count)
        .map(|k| {
            let x = &points[k % points.len()];
            let g = sample::random_invertible(rng, x.dim());
            x.transport(&g).expect("invertible")
        })
        .collect()
}
