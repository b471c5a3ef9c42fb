//! Randomized equivariance batteries: exact checks that the constructions
//! transform correctly under transport of structure. Everything is seeded,
//! so a report is reproducible from (seed, dims).

use serde::Serialize;

use crate::algebra::{self, MulTable};
use crate::cohomology::{self, TheoryKind};
use crate::forms;
use crate::identities;
use crate::incidence::{self, QFamily};
use crate::moduli::{self, Theory};
use crate::sample;
use crate::scalar::Rat;

/// Outcome of one law at one dimension.
#[derive(Debug, Clone, Serialize)]
pub struct LawResult {
    pub law: String,
    pub dim: usize,
    pub trials: usize,
    pub failures: usize,
    pub passed: bool,
}

fn law(name: &str, dim: usize, trials: usize, failures: usize) -> LawResult {
    LawResult {
        law: name.to_string(),
        dim,
        trials,
        failures,
        passed: failures == 0,
    }
}

/// On-variety builder points available at a given dimension.
fn variety_points(n: usize) -> Vec<(MulTable, Vec<TheoryKind>)> {
    let mut points = Vec::new();
    match n {
        2 => {
            points.push((
                algebra::split_etale(2),
                vec![TheoryKind::Hochschild, TheoryKind::Harrison],
            ));
            points.push((
                algebra::dual_numbers(),
                vec![TheoryKind::Hochschild, TheoryKind::Harrison],
            ));
            points.push((
                algebra::leibniz2(),
                vec![TheoryKind::Hochschild, TheoryKind::Leibniz],
            ));
            points.push((
                algebra::abelian(2),
                vec![
                    TheoryKind::Hochschild,
                    TheoryKind::Harrison,
                    TheoryKind::Leibniz,
                    TheoryKind::ChevalleyEilenberg,
                ],
            ));
        }
        3 => {
            points.push((
                algebra::sl2(),
                vec![TheoryKind::Leibniz, TheoryKind::ChevalleyEilenberg],
            ));
            points.push((
                algebra::split_etale(3),
                vec![TheoryKind::Hochschild, TheoryKind::Harrison],
            ));
        }
        _ => {
            points.push((algebra::split_etale(n), vec![TheoryKind::Hochschild]));
        }
    }
    points
}

/// Runs the full battery at the given dimensions with `trials` random group
/// elements per law and dimension.
pub fn run_battery(seed: u64, dims: &[usize], trials: usize) -> Vec<LawResult> {
    let mut rng = sample::rng_from_seed(seed);
    let mut results = Vec::new();
    for &n in dims {
        // beta equivariance: beta(g.x, g.y) = g.beta(x, y), exactly.
        let mut failures = 0;
        for _ in 0..trials {
            let g = sample::random_invertible(&mut rng, n);
            let x = sample::random_table(&mut rng, n);
            let y = sample::random_sparse_table(&mut rng, n);
            let lhs = incidence::beta(&x.transport(&g).unwrap(), &y.transport(&g).unwrap())
                .unwrap();
            let rhs = incidence::beta(&x, &y).unwrap().transport(&g).unwrap();
            if lhs != rhs {
                failures += 1;
            }
        }
        results.push(law("beta_equivariance", n, trials, failures));

        // q congruence: <g.phi, beta(x,y)> computed two ways on sampled phi.
        let fam = QFamily::new(n);
        let mut failures = 0;
        for _ in 0..trials {
            let g = sample::random_invertible(&mut rng, n);
            let g_inv = g.inverse().unwrap();
            let x = sample::random_table(&mut rng, n);
            let y = sample::random_table(&mut rng, n);
            let b = incidence::beta(&x, &y).unwrap().transport(&g_inv).unwrap();
            let xi = x.transport(&g_inv).unwrap();
            let yi = y.transport(&g_inv).unwrap();
            let sampled: Vec<(usize, usize, usize, usize)> = if n <= 2 {
                fam.functionals().collect()
            } else {
                fam.functionals().step_by(7).collect()
            };
            for phi in sampled {
                let (i, j, k, m) = phi;
                let lhs = b.entry(i, j, k, m).clone();
                let rhs = fam.pairing(phi, xi.flatten(), yi.flatten());
                if lhs != rhs {
                    failures += 1;
                }
            }
        }
        results.push(law("q_congruence", n, trials, failures));

        // Killing covariance: D_{g.x} = g^-t D_x g^-1 and the det exponent.
        let mut failures = 0;
        for _ in 0..trials {
            let g = sample::random_invertible(&mut rng, n);
            let x = sample::random_table(&mut rng, n);
            let base = forms::killing_gram(&x).unwrap();
            let moved = forms::killing_gram(&x.transport(&g).unwrap()).unwrap();
            let g_inv = g.inverse().unwrap();
            let expected = g_inv
                .transpose()
                .mul(&base.gram)
                .unwrap()
                .mul(&g_inv)
                .unwrap();
            let det_g = g.determinant().unwrap();
            let factor = (&det_g * &det_g).inv().unwrap();
            if moved.gram != expected || moved.discriminant != &base.discriminant * &factor {
                failures += 1;
            }
        }
        results.push(law("killing_covariance", n, trials, failures));

        // Membership invariance on builders and random tables.
        let mut failures = 0;
        let mut membership_cases = Vec::new();
        for (x, _) in variety_points(n) {
            membership_cases.push(x);
        }
        if n == 2 {
            membership_cases.push(sample::non_associative2());
        }
        for _ in 0..trials.min(8) {
            membership_cases.push(sample::random_sparse_table(&mut rng, n));
        }
        for _ in 0..trials {
            let g = sample::random_invertible(&mut rng, n);
            for x in &membership_cases {
                let moved = x.transport(&g).unwrap();
                let same = identities::is_associative(x) == identities::is_associative(&moved)
                    && identities::is_commutative(x) == identities::is_commutative(&moved)
                    && identities::is_leibniz(x) == identities::is_leibniz(&moved)
                    && identities::is_lie(x) == identities::is_lie(&moved);
                if !same {
                    failures += 1;
                }
            }
        }
        results.push(law("membership_invariance", n, trials, failures));

        // Cohomology dimensions and stratum ranks are orbit invariants.
        let mut dim_failures = 0;
        let mut rank_failures = 0;
        for _ in 0..trials {
            let g = sample::random_invertible(&mut rng, n);
            for (x, theories) in variety_points(n) {
                let moved = x.transport(&g).unwrap();
                for theory in theories {
                    let a = cohomology::summary(&x, theory).unwrap();
                    let b = cohomology::summary(&moved, theory).unwrap();
                    if a != b {
                        dim_failures += 1;
                    }
                    if a.rank_d2 != b.rank_d2 {
                        rank_failures += 1;
                    }
                }
            }
        }
        results.push(law("cohomology_dim_invariance", n, trials, dim_failures));
        results.push(law("stratum_rank_invariance", n, trials, rank_failures));
    }
    results
}

/// Diagonal-slice sweep used by the acceptance suite: incidence membership of
/// `(x, x)` must coincide with vanishing of the associativity residual.
pub fn diagonal_slice_sweep(seed: u64, n: usize, samples: usize) -> usize {
    let mut rng = sample::rng_from_seed(seed);
    let mut failures = 0;
    let mut check = |x: &MulTable| {
        let member = incidence::incidence_member_as(x, x).unwrap();
        if member != identities::assoc_residual(x).is_zero() {
            failures += 1;
        }
    };
    for x in [
        algebra::split_etale(n),
        algebra::abelian(n),
        sample::non_associative2(),
    ] {
        if x.dim() == n {
            check(&x);
        }
    }
    for _ in 0..samples {
        let x = if rng_bool(&mut rng) {
            sample::random_table(&mut rng, n)
        } else {
            sample::random_sparse_table(&mut rng, n)
        };
        check(&x);
    }
    failures
}

fn rng_bool(rng: &mut rand_chacha::ChaCha8Rng) -> bool {
    use rand::Rng;
    rng.random_range(0..2) == 0
}

/// Transport invariance of separability on associative points; part of the
/// forms invariants rather than the six-law battery.
pub fn separability_invariance(seed: u64, trials: usize) -> usize {
    let mut rng = sample::rng_from_seed(seed);
    let mut failures = 0;
    for x in [
        algebra::split_etale(2),
        algebra::dual_numbers(),
        algebra::matrix_algebra(2),
    ] {
        let n = x.dim();
        for _ in 0..trials {
            let g = sample::random_invertible(&mut rng, n);
            let moved = x.transport(&g).unwrap();
            if forms::is_separable(&x).unwrap() != forms::is_separable(&moved).unwrap() {
                failures += 1;
            }
        }
    }
    failures
}

/// Orbit-tangent identity sweep: the exact first-order transport derivative
/// matches `-d1 f` for random f at each on-variety builder point.
pub fn transport_derivative_sweep(seed: u64, trials: usize) -> usize {
    let mut rng = sample::rng_from_seed(seed);
    let mut failures = 0;
    for x in [
        algebra::sl2(),
        algebra::matrix_algebra(2),
        algebra::leibniz2(),
        algebra::split_etale(3),
    ] {
        let n = x.dim();
        let theory = if identities::is_leibniz(&x) {
            TheoryKind::Leibniz
        } else {
            TheoryKind::Hochschild
        };
        let slice = cohomology::slice(&x, theory).unwrap();
        for _ in 0..trials {
            let f = sample::random_endo(&mut rng, n);
            let derivative = sample::first_order_transport(&x, &f);
            let d1f = slice.d1.mul_vec(&moduli::flatten_endo(&f)).unwrap();
            let expected: Vec<Rat> = d1f.iter().map(|v| -v).collect();
            if derivative.flatten() != &expected[..] {
                failures += 1;
            }
        }
    }
    failures
}

/// Orbit invariance of the four verdict dimensions for a single theory;
/// used by the moduli test suite.
pub fn verdict_invariance(seed: u64, x: &MulTable, theory: Theory, trials: usize) -> usize {
    let mut rng = sample::rng_from_seed(seed);
    let base = moduli::rigidity_verdict(x, theory).unwrap();
    let mut failures = 0;
    for _ in 0..trials {
        let g = sample::random_invertible(&mut rng, x.dim());
        let moved = x.transport(&g).unwrap();
        let v = moduli::rigidity_verdict(&moved, theory).unwrap();
        if v.variety_tangent_dim != base.variety_tangent_dim
            || v.orbit_tangent_dim != base.orbit_tangent_dim
            || v.stack_tangent_dim != base.stack_tangent_dim
        {
            failures += 1;
        }
    }
    failures
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn battery_passes_at_dim_2() {
        let results = run_battery(sample::DEFAULT_SEED, &[2], 4);
        for r in &results {
            assert!(r.passed, "{} failed {} of {}", r.law, r.failures, r.trials);
        }
        assert_eq!(results.len(), 6);
    }

    #[test]
    fn battery_is_deterministic() {
        let a = run_battery(99, &[2], 2);
        let b = run_battery(99, &[2], 2);
        let fmt = |rs: &[LawResult]| {
            rs.iter()
                .map(|r| format!("{}:{}:{}", r.law, r.trials, r.failures))
                .collect::<Vec<_>>()
                .join(",")
        };
        assert_eq!(fmt(&a), fmt(&b));
    }

    #[test]
    fn sweeps_pass() {
        assert_eq!(diagonal_slice_sweep(5, 2, 25), 0);
        assert_eq!(separability_invariance(6, 3), 0);
        assert_eq!(transport_derivative_sweep(7, 3), 0);
        assert_eq!(
            verdict_invariance(8, &algebra::sl2(), Theory::Lie, 3),
            0
        );
    }
}
