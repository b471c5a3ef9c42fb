//! Cochain complexes in degrees <= 2 for the four deformation theories:
//! Hochschild (associative), Harrison degree 2 (commutative, realized as
//! symmetric Hochschild cocycles), Leibniz, and Chevalley-Eilenberg (Lie,
//! realized as the Leibniz coboundary restricted to skew cochains).
//!
//! Cochain coordinates follow the canonical flat indexing of
//! [`crate::algebra`]: a 1-cochain f has coordinate `(p, q)` meaning
//! `f(e_p) = e_q`, a 2-cochain is a [`MulTable`], a 3-cochain a
//! [`crate::algebra::Tensor3`].
//!
//! Degree-1 coboundaries agree across all four theories:
//! `(d1 f)(a,b) = mu(f(a),b) + mu(a,f(b)) - f(mu(a,b))`, whose kernel is the
//! derivation algebra and whose sign is pinned by the orbit-tangent identity
//! (the first-order transport derivative equals `-d1 f`). Degree-0 maps are
//! `v -> (a -> mu(a,v) - mu(v,a))` for the associative theories (kernel =
//! center, image = inner derivations) and `v -> R_v` for Leibniz/CE (kernel =
//! right annihilator, which is the center on Lie points).

use serde::Serialize;

use crate::algebra::{idx2, idx3, MulTable};
use crate::identities::{self, ResidualKind};
use crate::matrix::Matrix;
use crate::scalar::Rat;
use crate::{Error, Result};

/// The four implemented cohomology theories.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoryKind {
    Hochschild,
    Harrison,
    Leibniz,
    ChevalleyEilenberg,
}

impl TheoryKind {
    pub fn name(&self) -> &'static str {
        match self {
            TheoryKind::Hochschild => "hochschild",
            TheoryKind::Harrison => "harrison",
            TheoryKind::Leibniz => "leibniz",
            TheoryKind::ChevalleyEilenberg => "ce",
        }
    }
}

/// The degree <= 2 slice of a cochain complex at a fixed point.
///
/// `d2 . d1 = 0` and `d1 . d0 = 0` hold exactly whenever the point lies on
/// the theory's variety. For Harrison and CE the domain of `d1`'s codomain and
/// `d2`'s domain is the symmetric (resp. skew) subspace of the 2-cochains,
/// and `inclusion` maps its coordinates into full 2-cochain coordinates.
#[derive(Debug, Clone)]
pub struct ComplexSlice {
    pub theory: TheoryKind,
    pub dim: usize,
    pub d0: Matrix,
    pub d1: Matrix,
    pub d2: Matrix,
    pub inclusion: Option<Matrix>,
}

/// Dimension counts extracted from a slice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CohomologySummary {
    pub theory: TheoryKind,
    pub c2_dim: usize,
    pub z1: usize,
    pub b1: usize,
    pub h1: usize,
    pub z2: usize,
    pub b2: usize,
    pub h2: usize,
    pub rank_d2: usize,
    pub derivations_dim: usize,
    pub inner_dim: usize,
    pub center_dim: usize,
}

fn off_variety(x: &MulTable, kind: ResidualKind, variety: &'static str) -> Error {
    let report = identities::residual_report(x, kind);
    Error::OffVariety {
        variety,
        witness: report.witness.unwrap_or_default(),
    }
}

/// Degree-0 map of the associative theories: `v -> (a -> mu(a,v) - mu(v,a))`.
fn d0_commutator(x: &MulTable) -> Matrix {
    let n = x.dim();
    Matrix::from_fn(n * n, n, |row, p| {
        let m = row % n;
        let i = row / n;
        x.c(i, p, m) - x.c(p, i, m)
    })
}

/// Degree-0 map of the Leibniz/CE theories: `v -> R_v`.
fn d0_right(x: &MulTable) -> Matrix {
    let n = x.dim();
    Matrix::from_fn(n * n, n, |row, p| {
        let m = row % n;
        let i = row / n;
        x.c(i, p, m).clone()
    })
}

/// Shared degree-1 coboundary `(d1 f)(a,b) = mu(f(a),b) + mu(a,f(b)) - f(mu(a,b))`.
fn d1_matrix(x: &MulTable) -> Matrix {
    let n = x.dim();
    let mut d = Matrix::zeros(n * n * n, n * n);
    for p in 0..n {
        for q in 0..n {
            let col = idx2(n, p, q);
            for i in 0..n {
                for m in 0..n {
                    // mu(a, f(b)) with b = e_p: row (i, p, m) += c(i, q, m)
                    d[(idx3(n, i, p, m), col)] += x.c(i, q, m);
                    // mu(f(a), b) with a = e_p: row (p, i, m) += c(q, i, m)
                    d[(idx3(n, p, i, m), col)] += x.c(q, i, m);
                }
                for j in 0..n {
                    // -f(mu(a,b)): row (i, j, q) -= c(i, j, p)
                    d[(idx3(n, i, j, q), col)] -= x.c(i, j, p);
                }
            }
        }
    }
    d
}

/// Hochschild degree-2 coboundary as the bracket expansion
/// `[mu, y](a,b,c) = mu(y(a,b),c) - mu(a,y(b,c)) + y(mu(a,b),c) - y(a,mu(b,c))`.
fn d2_hochschild(x: &MulTable) -> Matrix {
    let n = x.dim();
    let n4 = n * n * n * n;
    let mut d = Matrix::zeros(n4, n * n * n);
    let q4 = |i: usize, j: usize, k: usize, m: usize| ((i * n + j) * n + k) * n + m;
    for p in 0..n {
        for q in 0..n {
            for r in 0..n {
                let col = idx3(n, p, q, r);
                for a in 0..n {
                    for m in 0..n {
                        // mu(y(a,b),c): (a,b) = (p,q), free (k = a here, m)
                        d[(q4(p, q, a, m), col)] += x.c(r, a, m);
                        // -mu(a, y(b,c)): (b,c) = (p,q), free (i = a, m)
                        d[(q4(a, p, q, m), col)] -= x.c(a, r, m);
                    }
                    for b in 0..n {
                        // y(mu(a,b),c): c = e_q, output e_r, free (i = a, j = b)
                        d[(q4(a, b, q, r), col)] += x.c(a, b, p);
                        // -y(a, mu(b,c)): a = e_p, output e_r, free (j = a, k = b)
                        d[(q4(p, a, b, r), col)] -= x.c(a, b, q);
                    }
                }
            }
        }
    }
    d
}

/// Leibniz degree-2 coboundary, six terms:
/// `(d2 y)(a,b,c) = mu(y(a,b),c) - mu(y(a,c),b) - mu(a,y(b,c))
///                + y(mu(a,b),c) - y(mu(a,c),b) - y(a,mu(b,c))`.
fn d2_leibniz(x: &MulTable) -> Matrix {
    let n = x.dim();
    let n4 = n * n * n * n;
    let mut d = Matrix::zeros(n4, n * n * n);
    let q4 = |i: usize, j: usize, k: usize, m: usize| ((i * n + j) * n + k) * n + m;
    for p in 0..n {
        for q in 0..n {
            for r in 0..n {
                let col = idx3(n, p, q, r);
                for a in 0..n {
                    for m in 0..n {
                        // mu(y(a,b),c): (a,b) = (p,q), free (k = a, m)
                        d[(q4(p, q, a, m), col)] += x.c(r, a, m);
                        // -mu(y(a,c),b): (a,c) = (p,q), free (j = a, m)
                        d[(q4(p, a, q, m), col)] -= x.c(r, a, m);
                        // -mu(a, y(b,c)): (b,c) = (p,q), free (i = a, m)
                        d[(q4(a, p, q, m), col)] -= x.c(a, r, m);
                    }
                    for b in 0..n {
                        // y(mu(a,b),c): c = e_q, free (i = a, j = b)
                        d[(q4(a, b, q, r), col)] += x.c(a, b, p);
                        // -y(mu(a,c),b): b = e_q, free (i = a, k = b)
                        d[(q4(a, q, b, r), col)] -= x.c(a, b, p);
                        // -y(a, mu(b,c)): a = e_p, free (j = a, k = b)
                        d[(q4(p, a, b, r), col)] -= x.c(a, b, q);
                    }
                }
            }
        }
    }
    d
}

/// Pairs `(i, j)` with i < j in lexicographic order, then the diagonal.
fn sym_pair_order(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * (n + 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            pairs.push((i, j));
        }
    }
    for i in 0..n {
        pairs.push((i, i));
    }
    pairs
}

fn skew_pair_order(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            pairs.push((i, j));
        }
    }
    pairs
}

/// Inclusion of symmetric 2-cochains into full 2-cochain coordinates.
/// Columns are ordered by [`sym_pair_order`] with the output index innermost.
pub fn sym_inclusion(n: usize) -> Matrix {
    let pairs = sym_pair_order(n);
    let mut s = Matrix::zeros(n * n * n, pairs.len() * n);
    for (pi, &(i, j)) in pairs.iter().enumerate() {
        for m in 0..n {
            let col = pi * n + m;
            s[(idx3(n, i, j, m), col)] += &Rat::one();
            if i != j {
                s[(idx3(n, j, i, m), col)] += &Rat::one();
            }
        }
    }
    s
}

/// Inclusion of skew 2-cochains into full 2-cochain coordinates.
pub fn skew_inclusion(n: usize) -> Matrix {
    let pairs = skew_pair_order(n);
    let mut s = Matrix::zeros(n * n * n, pairs.len() * n);
    for (pi, &(i, j)) in pairs.iter().enumerate() {
        for m in 0..n {
            let col = pi * n + m;
            s[(idx3(n, i, j, m), col)] = Rat::one();
            s[(idx3(n, j, i, m), col)] = Rat::from_int(-1);
        }
    }
    s
}

/// Projects full-coordinate columns of `d1` onto subspace coordinates by
/// reading representatives; callers guarantee the image lies in the subspace
/// (symmetric at commutative points, skew at Lie points), and the read-back
/// is verified in debug builds.
fn restrict_d1(d1: &Matrix, n: usize, pairs: &[(usize, usize)], skew: bool) -> Matrix {
    let out = Matrix::from_fn(pairs.len() * n, d1.ncols(), |row, col| {
        let m = row % n;
        let (i, j) = pairs[row / n];
        d1[(idx3(n, i, j, m), col)].clone()
    });
    if cfg!(debug_assertions) {
        for col in 0..d1.ncols() {
            for &(i, j) in pairs {
                for m in 0..n {
                    let a = &d1[(idx3(n, i, j, m), col)];
                    let b = &d1[(idx3(n, j, i, m), col)];
                    let ok = if skew {
                        (a + b).is_zero()
                    } else {
                        a == b
                    };
                    debug_assert!(ok, "d1 image not in the subspace at ({i},{j},{m})");
                }
            }
        }
    }
    out
}

/// Column combination `d2 . inclusion` exploiting the sparse inclusion.
fn combine_d2(d2: &Matrix, n: usize, pairs: &[(usize, usize)], skew: bool) -> Matrix {
    Matrix::from_fn(d2.nrows(), pairs.len() * n, |row, col| {
        let m = col % n;
        let (i, j) = pairs[col / n];
        let a = &d2[(row, idx3(n, i, j, m))];
        if i == j {
            return a.clone();
        }
        let b = &d2[(row, idx3(n, j, i, m))];
        if skew {
            a - b
        } else {
            a + b
        }
    })
}

/// Hochschild slice at an associative point.
pub fn hochschild_slice(x: &MulTable) -> Result<ComplexSlice> {
    if !identities::is_associative(x) {
        return Err(off_variety(x, ResidualKind::Associative, "associative"));
    }
    Ok(ComplexSlice {
        theory: TheoryKind::Hochschild,
        dim: x.dim(),
        d0: d0_commutator(x),
        d1: d1_matrix(x),
        d2: d2_hochschild(x),
        inclusion: None,
    })
}

/// Harrison slice at a commutative point: the Hochschild complex restricted
/// along the symmetric inclusion in degree 2.
pub fn harrison_slice(x: &MulTable) -> Result<ComplexSlice> {
    if !identities::is_symmetric(x) {
        return Err(off_variety(x, ResidualKind::Commutative, "commutative"));
    }
    if !identities::is_associative(x) {
        return Err(off_variety(x, ResidualKind::Associative, "commutative"));
    }
    let n = x.dim();
    let pairs = sym_pair_order(n);
    let d1 = d1_matrix(x);
    let d2 = d2_hochschild(x);
    Ok(ComplexSlice {
        theory: TheoryKind::Harrison,
        dim: n,
        d0: d0_commutator(x),
        d1: restrict_d1(&d1, n, &pairs, false),
        d2: combine_d2(&d2, n, &pairs, false),
        inclusion: Some(sym_inclusion(n)),
    })
}

/// Leibniz slice at a Leibniz point. The degree-2 matrix is the cochain-level
/// coboundary; it coincides entry by entry with the incidence module's
/// `y -> B(x,y) + B(y,x)` matrix.
pub fn leibniz_slice(x: &MulTable) -> Result<ComplexSlice> {
    if !identities::is_leibniz(x) {
        return Err(off_variety(x, ResidualKind::Leibniz, "leibniz"));
    }
    Ok(ComplexSlice {
        theory: TheoryKind::Leibniz,
        dim: x.dim(),
        d0: d0_right(x),
        d1: d1_matrix(x),
        d2: d2_leibniz(x),
        inclusion: None,
    })
}

/// Chevalley-Eilenberg slice at a Lie point: the Leibniz coboundary
/// conjugated by the skew inclusion.
pub fn ce_slice(x: &MulTable) -> Result<ComplexSlice> {
    if !identities::is_skew(x) {
        return Err(off_variety(x, ResidualKind::Skew, "lie"));
    }
    if !identities::is_leibniz(x) {
        return Err(off_variety(x, ResidualKind::Leibniz, "lie"));
    }
    let n = x.dim();
    let pairs = skew_pair_order(n);
    let d1 = d1_matrix(x);
    let d2 = d2_leibniz(x);
    Ok(ComplexSlice {
        theory: TheoryKind::ChevalleyEilenberg,
        dim: n,
        d0: d0_right(x),
        d1: restrict_d1(&d1, n, &pairs, true),
        d2: combine_d2(&d2, n, &pairs, true),
        inclusion: Some(skew_inclusion(n)),
    })
}

/// Builds the slice of the requested theory, checking membership first.
pub fn slice(x: &MulTable, theory: TheoryKind) -> Result<ComplexSlice> {
    match theory {
        TheoryKind::Hochschild => hochschild_slice(x),
        TheoryKind::Harrison => harrison_slice(x),
        TheoryKind::Leibniz => leibniz_slice(x),
        TheoryKind::ChevalleyEilenberg => ce_slice(x),
    }
}

/// Kernel of the degree-2 Harrison coboundary: symmetric Hochschild
/// 2-cocycles, returned in full 2-cochain coordinates.
pub fn harrison_z2(x: &MulTable) -> Result<(usize, Vec<Vec<Rat>>)> {
    let s = harrison_slice(x)?;
    let inc = s.inclusion.as_ref().expect("harrison has an inclusion");
    let kernel = s.d2.kernel_basis();
    let vecs: Vec<Vec<Rat>> = kernel
        .iter()
        .map(|v| inc.mul_vec(v).expect("inclusion applies"))
        .collect();
    Ok((vecs.len(), vecs))
}

/// Ranks and dimensions of a slice.
pub fn summarize(slice: &ComplexSlice) -> CohomologySummary {
    let n = slice.dim;
    let c2_dim = slice.d2.ncols();
    let rank_d2 = slice.d2.rank();
    let z2 = c2_dim - rank_d2;
    let b2 = slice.d1.rank();
    let z1 = slice.d1.ncols() - b2;
    let b1 = slice.d0.rank();
    let center_dim = n - b1;
    CohomologySummary {
        theory: slice.theory,
        c2_dim,
        z1,
        b1,
        h1: z1 - b1,
        z2,
        b2,
        h2: z2 - b2,
        rank_d2,
        derivations_dim: z1,
        inner_dim: b1,
        center_dim,
    }
}

/// Convenience: slice + summary.
pub fn summary(x: &MulTable, theory: TheoryKind) -> Result<CohomologySummary> {
    Ok(summarize(&slice(x, theory)?))
}
