//! Tangent spaces to the four varieties, orbit tangents, stack-tangent
//! dimensions, rigidity verdicts, and the determinantal stratum invariant.
//!
//! All verdicts are tangent-level: "orbit open" means the orbit tangent
//! exhausts the variety tangent, and "rigid in moduli" means the stack
//! tangent (degree-2 cohomology) vanishes. No scheme-theoretic openness is
//! claimed beyond that.

use serde::Serialize;

use crate::algebra::MulTable;
use crate::cohomology::{self, TheoryKind};
use crate::forms;
use crate::matrix::Matrix;
use crate::scalar::Rat;
use crate::{Error, Result};

/// The four variety-level deformation theories.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Theory {
    Alg,
    Comm,
    Leib,
    Lie,
}

impl Theory {
    pub fn cohomology(self) -> TheoryKind {
        match self {
            Theory::Alg => TheoryKind::Hochschild,
            Theory::Comm => TheoryKind::Harrison,
            Theory::Leib => TheoryKind::Leibniz,
            Theory::Lie => TheoryKind::ChevalleyEilenberg,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Theory::Alg => "alg",
            Theory::Comm => "comm",
            Theory::Leib => "leib",
            Theory::Lie => "lie",
        }
    }
}

/// Tangent-level rigidity verdict at a point of one of the varieties.
#[derive(Debug, Clone, Serialize)]
pub struct RigidityVerdict {
    pub theory: Theory,
    pub variety_tangent_dim: usize,
    pub orbit_tangent_dim: usize,
    pub stack_tangent_dim: usize,
    pub orbit_open: bool,
    pub rigid_in_moduli: bool,
    /// Closed-form prediction, attached only on the loci where it is proved:
    /// `n^2 - n + dim Z` on the separable associative locus, `n^2` on the
    /// etale commutative locus, `n^2 - n` on the semisimple Leibniz/Lie locus.
    pub predicted_dim: Option<usize>,
}

/// Rank of the theory's degree-2 differential; constant on orbits.
#[derive(Debug, Clone, Serialize)]
pub struct StratumInvariant {
    pub theory: Theory,
    pub rank_d2: usize,
    pub c2_dim: usize,
}

/// Basis of the variety tangent at `x`, as flattened full 2-cochains.
pub fn variety_tangent(x: &MulTable, theory: Theory) -> Result<(usize, Vec<Vec<Rat>>)> {
    let slice = cohomology::slice(x, theory.cohomology())?;
    let kernel = slice.d2.kernel_basis();
    let vectors: Vec<Vec<Rat>> = match &slice.inclusion {
        None => kernel,
        Some(inc) => kernel
            .iter()
            .map(|v| inc.mul_vec(v).expect("inclusion applies"))
            .collect(),
    };
    Ok((vectors.len(), vectors))
}

/// Basis of the orbit tangent at `x`: the image of the degree-1 coboundary,
/// in full 2-cochain coordinates. At commutative points this image is
/// symmetric and at Lie points skew, so no projection is needed.
pub fn orbit_tangent(x: &MulTable, theory: Theory) -> Result<(usize, Vec<Vec<Rat>>)> {
    let slice = cohomology::slice(x, theory.cohomology())?;
    let full_d1 = match &slice.inclusion {
        None => slice.d1.clone(),
        Some(inc) => inc.mul(&slice.d1).expect("compatible shapes"),
    };
    let basis = full_d1.column_space_basis();
    Ok((basis.len(), basis))
}

/// Full verdict at `x`. When a closed-form dimension applies, equality with
/// the computed variety tangent is asserted; a mismatch is an internal
/// inconsistency, not a report.
pub fn rigidity_verdict(x: &MulTable, theory: Theory) -> Result<RigidityVerdict> {
    let n = x.dim();
    let summary = cohomology::summary(x, theory.cohomology())?;
    let variety_tangent_dim = summary.z2;
    let orbit_tangent_dim = summary.b2;
    let stack_tangent_dim = summary.h2;
    let predicted_dim = match theory {
        Theory::Alg => {
            if forms::is_separable(x)? {
                Some(n * n - n + summary.center_dim)
            } else {
                None
            }
        }
        Theory::Comm => {
            if forms::is_separable(x)? {
                Some(n * n)
            } else {
                None
            }
        }
        Theory::Leib | Theory::Lie => {
            if forms::killing_gram(x)?.is_nondegenerate() {
                Some(n * n - n)
            } else {
                None
            }
        }
    };
    if let Some(p) = predicted_dim {
        if p != variety_tangent_dim {
            return Err(Error::InternalInconsistency(format!(
                "predicted tangent dimension {p} != computed {variety_tangent_dim} \
                 for {} at dim {n}",
                theory.name()
            )));
        }
    }
    Ok(RigidityVerdict {
        theory,
        variety_tangent_dim,
        orbit_tangent_dim,
        stack_tangent_dim,
        orbit_open: variety_tangent_dim == orbit_tangent_dim,
        rigid_in_moduli: stack_tangent_dim == 0,
        predicted_dim,
    })
}

/// The determinantal stratum invariant: exact rank of the degree-2
/// differential of the matching theory.
pub fn stratum_invariant(x: &MulTable, theory: Theory) -> Result<StratumInvariant> {
    let summary = cohomology::summary(x, theory.cohomology())?;
    Ok(StratumInvariant {
        theory,
        rank_d2: summary.rank_d2,
        c2_dim: summary.c2_dim,
    })
}

/// Nondegeneracy of the Killing form at a Leibniz point (the semisimple Lie
/// locus). When true, the Lie verdict at the same point must report an open
/// orbit and rigidity; that implication is exercised in the test suites.
pub fn semisimple_locus_check(x: &MulTable) -> Result<bool> {
    forms::is_semisimple_lie_point(x)
}

/// Flattens an endomorphism into 1-cochain coordinates, `(p, q)` meaning the
/// coefficient of `e_q` in `f(e_p)`.
pub fn flatten_endo(f: &Matrix) -> Vec<Rat> {
    let n = f.nrows();
    let mut out = Vec::with_capacity(n * n);
    for p in 0..n {
        for q in 0..n {
            out.push(f[(q, p)].clone());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{abelian, dual_numbers, leibniz2, matrix_algebra, sl2, split_etale};
    use crate::matrix::{span_contains, span_dim};
    use crate::sample;

    #[test]
    fn variety_tangent_dims() {
        assert_eq!(variety_tangent(&matrix_algebra(2), Theory::Alg).unwrap().0, 13);
        assert_eq!(variety_tangent(&split_etale(2), Theory::Comm).unwrap().0, 4);
        assert_eq!(variety_tangent(&sl2(), Theory::Lie).unwrap().0, 6);
        assert!(variety_tangent(&leibniz2(), Theory::Lie).is_err());
    }

    #[test]
    fn orbit_tangent_dims() {
        assert_eq!(orbit_tangent(&matrix_algebra(2), Theory::Alg).unwrap().0, 13);
        assert_eq!(orbit_tangent(&sl2(), Theory::Lie).unwrap().0, 6);
        assert_eq!(orbit_tangent(&abelian(2), Theory::Leib).unwrap().0, 0);
    }

    #[test]
    fn chain_inclusion_orbit_in_variety() {
        let points: Vec<(MulTable, Theory)> = vec![
            (matrix_algebra(2), Theory::Alg),
            (split_etale(3), Theory::Comm),
            (sl2(), Theory::Lie),
            (sl2(), Theory::Leib),
            (leibniz2(), Theory::Leib),
            (dual_numbers(), Theory::Comm),
        ];
        for (x, theory) in points {
            let (_, variety) = variety_tangent(&x, theory).unwrap();
            let (dim_orbit, orbit) = orbit_tangent(&x, theory).unwrap();
            assert!(span_contains(&variety, &orbit), "{} orbit not inside", theory.name());
            assert_eq!(span_dim(&orbit), dim_orbit);
        }
    }

    #[test]
    fn transport_derivative_equals_minus_d1() {
        // The first-order transport derivative (computed in dual-number
        // arithmetic, an independent route) must equal -d1 f.
        let mut rng = sample::rng_from_seed(11);
        for x in [sl2(), matrix_algebra(2), leibniz2(), dual_numbers()] {
            let n = x.dim();
            let slice = cohomology::slice(
                &x,
                if crate::identities::is_leibniz(&x) {
                    TheoryKind::Leibniz
                } else {
                    TheoryKind::Hochschild
                },
            )
            .unwrap();
            for _ in 0..5 {
                let f = sample::random_endo(&mut rng, n);
                let derivative = sample::first_order_transport(&x, &f);
                let d1f = slice.d1.mul_vec(&flatten_endo(&f)).unwrap();
                let expected: Vec<Rat> = d1f.iter().map(|v| -v).collect();
                assert_eq!(derivative.flatten(), &expected[..]);
            }
        }
    }

    #[test]
    fn rigidity_verdicts_on_nice_loci() {
        let v = rigidity_verdict(&matrix_algebra(2), Theory::Alg).unwrap();
        assert!(v.orbit_open && v.rigid_in_moduli);
        assert_eq!(v.predicted_dim, Some(13));
        assert_eq!(v.variety_tangent_dim, 13);
        assert_eq!(v.stack_tangent_dim, 0);

        let v = rigidity_verdict(&sl2(), Theory::Lie).unwrap();
        assert!(v.orbit_open && v.rigid_in_moduli);
        assert_eq!(v.predicted_dim, Some(6));

        let v = rigidity_verdict(&dual_numbers(), Theory::Comm).unwrap();
        assert!(!v.rigid_in_moduli);
        assert_eq!(v.predicted_dim, None);
    }

    #[test]
    fn predicted_dims_on_separable_points() {
        // n^2 - n + (number of blocks) across small direct sums of matrix
        // algebras, total dimension at most 5.
        let cases: Vec<(MulTable, usize)> = vec![
            (matrix_algebra(1), 1),
            (matrix_algebra(2), 1),
            (matrix_algebra(1).direct_sum(&matrix_algebra(1)), 2),
            (matrix_algebra(1).direct_sum(&matrix_algebra(2)), 2),
            (split_etale(5), 5),
        ];
        for (x, blocks) in cases {
            let n = x.dim();
            let v = rigidity_verdict(&x, Theory::Alg).unwrap();
            assert_eq!(v.predicted_dim, Some(n * n - n + blocks));
            assert!(v.orbit_open && v.rigid_in_moduli);
        }
    }

    #[test]
    fn etale_points_rigid_in_comm() {
        for n in 2..=4 {
            let v = rigidity_verdict(&split_etale(n), Theory::Comm).unwrap();
            assert!(v.orbit_open && v.rigid_in_moduli, "split_etale({n})");
            assert_eq!(v.variety_tangent_dim, n * n);
            assert_eq!(v.predicted_dim, Some(n * n));
        }
    }

    #[test]
    fn stratum_invariants() {
        let s = stratum_invariant(&matrix_algebra(2), Theory::Alg).unwrap();
        assert_eq!(s.rank_d2, 64 - 13);
        let s = stratum_invariant(&split_etale(2), Theory::Alg).unwrap();
        assert_eq!(s.rank_d2, 8 - 4);
        // Rank is constant along the orbit.
        let mut rng = sample::rng_from_seed(3);
        let g = sample::random_invertible(&mut rng, 4);
        let moved = matrix_algebra(2).transport(&g).unwrap();
        let s2 = stratum_invariant(&moved, Theory::Alg).unwrap();
        assert_eq!(s2.rank_d2, 51);
    }

    #[test]
    fn semisimple_locus() {
        assert!(semisimple_locus_check(&sl2()).unwrap());
        assert!(!semisimple_locus_check(&abelian(3)).unwrap());
        assert!(!semisimple_locus_check(&leibniz2()).unwrap());
        // Killing nondegeneracy forces the Lie verdict to be rigid.
        if semisimple_locus_check(&sl2()).unwrap() {
            let v = rigidity_verdict(&sl2(), Theory::Lie).unwrap();
            assert!(v.orbit_open && v.rigid_in_moduli);
        }
    }

    #[test]
    fn off_variety_rejected() {
        let x = sample::non_associative2();
        assert!(rigidity_verdict(&x, Theory::Alg).is_err());
        assert!(stratum_invariant(&x, Theory::Leib).is_err());
        assert!(semisimple_locus_check(&x).is_err());
        assert!(rigidity_verdict(&matrix_algebra(2), Theory::Comm).is_err());
    }

    #[test]
    fn comm_orbit_tangent_is_symmetric() {
        // At commutative points every orbit-tangent vector is a symmetric
        // cochain; verified rather than assumed.
        let x = split_etale(3);
        let n = x.dim();
        let (_, basis) = orbit_tangent(&x, Theory::Comm).unwrap();
        for v in &basis {
            for i in 0..n {
                for j in 0..n {
                    for m in 0..n {
                        assert_eq!(
                            v[crate::algebra::idx3(n, i, j, m)],
                            v[crate::algebra::idx3(n, j, i, m)]
                        );
                    }
                }
            }
        }
    }
}
