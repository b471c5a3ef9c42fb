//! Bilinearizations of the associativity and Leibniz residuals, the family of
//! q-matrices representing them, incidence-pair membership, and fibers.
//!
//! For the associative side, `beta(x,y)(a,b,c) = mu_x(mu_y(a,b),c) -
//! mu_x(a,mu_y(b,c))` satisfies `beta(x,x) = assoc_residual(x)`, and each dual
//! basis functional phi = (i,j,k,m) of the 3-cochain space is represented by a
//! matrix `q_phi` with `<phi, beta(x,y)> = x^t q_phi y` on flattened tables.
//! The fiber at `x` is the joint kernel of the symmetrized family; when `x` is
//! associative it coincides with the Hochschild 2-cocycle space.
//!
//! The full family is n^4 matrices of size n^3 x n^3, far too big to hold at
//! once, so `q_phi` is materialized one functional at a time and the fiber
//! system is assembled directly as the n^4 x n^3 matrix whose phi-row is
//! `x^t q_phi^sym`.

use crate::algebra::{idx3, MulTable, Tensor3};
use crate::matrix::Matrix;
use crate::scalar::Rat;
use crate::{Error, Result};

fn check_same_dim(x: &MulTable, y: &MulTable) -> Result<usize> {
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch {
            expected: x.dim(),
            got: y.dim(),
        });
    }
    Ok(x.dim())
}

/// The bilinearization of the associativity residual, in the coordinate
/// normalization `beta^m_{ijk}(x,y) = sum_l x^l_{ij} y^m_{lk} - sum_l y^m_{il}
/// x^l_{jk}`, so that `beta(x,x) = assoc_residual(x)` and the pairing with
/// [`QFamily::q_phi`] is `<phi, beta(x,y)> = x^t q_phi y`.
pub fn beta(x: &MulTable, y: &MulTable) -> Result<Tensor3> {
    let n = check_same_dim(x, y)?;
    let mut t = Tensor3::zero(n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for m in 0..n {
                    let mut acc = Rat::zero();
                    for l in 0..n {
                        let a = x.c(i, j, l);
                        if !a.is_zero() {
                            let term = a * y.c(l, k, m);
                            acc += &term;
                        }
                        let b = x.c(j, k, l);
                        if !b.is_zero() {
                            let term = y.c(i, l, m) * b;
                            acc -= &term;
                        }
                    }
                    *t.entry_mut(i, j, k, m) = acc;
                }
            }
        }
    }
    Ok(t)
}

/// The bilinearization of the Leibniz residual, in the coordinate
/// normalization `B^m_{ijk}(x,y) = sum_l (x^l_{ij} y^m_{lk} - x^l_{ik}
/// y^m_{lj} - x^m_{il} y^l_{jk})`, so that `B(x,x) = leibniz_residual(x)`.
pub fn b_bilinear(x: &MulTable, y: &MulTable) -> Result<Tensor3> {
    let n = check_same_dim(x, y)?;
    let mut t = Tensor3::zero(n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for m in 0..n {
                    let mut acc = Rat::zero();
                    for l in 0..n {
                        let a = x.c(i, j, l);
                        if !a.is_zero() {
                            let term = a * y.c(l, k, m);
                            acc += &term;
                        }
                        let b = x.c(i, k, l);
                        if !b.is_zero() {
                            let term = b * y.c(l, j, m);
                            acc -= &term;
                        }
                        let d = y.c(j, k, l);
                        if !d.is_zero() {
                            let term = x.c(i, l, m) * d;
                            acc -= &term;
                        }
                    }
                    *t.entry_mut(i, j, k, m) = acc;
                }
            }
        }
    }
    Ok(t)
}

/// The q-matrix family, materialized lazily per dual-basis functional.
#[derive(Debug, Clone, Copy)]
pub struct QFamily {
    dim: usize,
}

impl QFamily {
    pub fn new(dim: usize) -> Self {
        assert!(dim >= 1);
        QFamily { dim }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The matrix of phi = (i,j,k,m): `q[idx(i,j,l)][idx(l,k,m)] += 1` and
    /// `q[idx(j,k,l)][idx(i,l,m)] -= 1` over l. At most 2n nonzero entries.
    pub fn q_phi(&self, phi: (usize, usize, usize, usize)) -> Matrix {
        let n = self.dim;
        let (i, j, k, m) = phi;
        let mut q = Matrix::zeros(n * n * n, n * n * n);
        for l in 0..n {
            q[(idx3(n, i, j, l), idx3(n, l, k, m))] += &Rat::one();
            q[(idx3(n, j, k, l), idx3(n, i, l, m))] -= &Rat::one();
        }
        q
    }

    /// Symmetrization `(q_phi + q_phi^t)/2`.
    pub fn q_phi_sym(&self, phi: (usize, usize, usize, usize)) -> Matrix {
        self.q_phi(phi).symmetrize().expect("q_phi is square")
    }

    /// `x^t q_phi y` without materializing the matrix.
    pub fn pairing(&self, phi: (usize, usize, usize, usize), x: &[Rat], y: &[Rat]) -> Rat {
        let n = self.dim;
        let (i, j, k, m) = phi;
        let mut acc = Rat::zero();
        for l in 0..n {
            let a = &x[idx3(n, i, j, l)];
            if !a.is_zero() {
                let term = a * &y[idx3(n, l, k, m)];
                acc += &term;
            }
            let b = &x[idx3(n, j, k, l)];
            if !b.is_zero() {
                let term = b * &y[idx3(n, i, l, m)];
                acc -= &term;
            }
        }
        acc
    }

    /// Iterator over the dual basis in lexicographic order.
    pub fn functionals(&self) -> impl Iterator<Item = (usize, usize, usize, usize)> {
        let n = self.dim;
        (0..n).flat_map(move |i| {
            (0..n).flat_map(move |j| {
                (0..n).flat_map(move |k| (0..n).map(move |m| (i, j, k, m)))
            })
        })
    }
}

/// The n^4 x n^3 system whose phi-row is `x^t q_phi^sym`; its kernel is the
/// associative incidence fiber at x.
pub fn assembled_as_matrix(x: &MulTable) -> Matrix {
    let n = x.dim();
    let half = Rat::new(1, 2);
    let mut m = Matrix::zeros(n * n * n * n, n * n * n);
    let mut row = 0;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for mm in 0..n {
                    for l in 0..n {
                        // x^t q contributes the beta(x, .) coefficients...
                        let a = x.c(i, j, l);
                        if !a.is_zero() {
                            m[(row, idx3(n, l, k, mm))] += &(a * &half);
                        }
                        let b = x.c(j, k, l);
                        if !b.is_zero() {
                            m[(row, idx3(n, i, l, mm))] -= &(b * &half);
                        }
                        // ...and q x the beta(., x) ones.
                        let c = x.c(l, k, mm);
                        if !c.is_zero() {
                            m[(row, idx3(n, i, j, l))] += &(c * &half);
                        }
                        let d = x.c(i, l, mm);
                        if !d.is_zero() {
                            m[(row, idx3(n, j, k, l))] -= &(d * &half);
                        }
                    }
                    row += 1;
                }
            }
        }
    }
    m
}

/// Rows of the map `y -> B(x,y) + B(y,x)` in the canonical bases. For Leibniz
/// `x` this is exactly the degree-2 Leibniz coboundary matrix.
pub fn assembled_leib_matrix(x: &MulTable) -> Matrix {
    let n = x.dim();
    let mut m = Matrix::zeros(n * n * n * n, n * n * n);
    let mut row = 0;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for mm in 0..n {
                    for l in 0..n {
                        // B(x,y): y appears in the inner slot.
                        let a = x.c(i, j, l);
                        if !a.is_zero() {
                            m[(row, idx3(n, l, k, mm))] += a;
                        }
                        let b = x.c(i, k, l);
                        if !b.is_zero() {
                            m[(row, idx3(n, l, j, mm))] -= b;
                        }
                        let d = x.c(j, k, l);
                        if !d.is_zero() {
                            m[(row, idx3(n, i, l, mm))] -= d;
                        }
                        // B(y,x): y appears in the outer slot.
                        let p = x.c(l, k, mm);
                        if !p.is_zero() {
                            m[(row, idx3(n, i, j, l))] += p;
                        }
                        let q = x.c(l, j, mm);
                        if !q.is_zero() {
                            m[(row, idx3(n, i, k, l))] -= q;
                        }
                        let r = x.c(i, l, mm);
                        if !r.is_zero() {
                            m[(row, idx3(n, j, k, l))] -= r;
                        }
                    }
                    row += 1;
                }
            }
        }
    }
    m
}

/// Membership of the pair `(x, y)` in the associative incidence locus:
/// `x^t q y = 0` for every symmetrized q, i.e. every assembled row kills y.
pub fn incidence_member_as(x: &MulTable, y: &MulTable) -> Result<bool> {
    check_same_dim(x, y)?;
    let m = assembled_as_matrix(x);
    Ok(m.mul_vec(y.flatten())?.iter().all(Rat::is_zero))
}

/// `B(x,y) + B(y,x)`; for Leibniz x this is the value of the degree-2
/// coboundary on y.
pub fn leib_pair_residual(x: &MulTable, y: &MulTable) -> Result<Tensor3> {
    b_bilinear(x, y)?.add(&b_bilinear(y, x)?)
}

/// A fiber of an incidence system: the point and a canonical kernel basis of
/// flattened 2-cochains.
#[derive(Debug, Clone)]
pub struct FiberBasis {
    pub point: MulTable,
    pub vectors: Vec<Vec<Rat>>,
}

impl FiberBasis {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }
}

/// Fiber of the associative incidence at x: all y with `x^t q_phi^sym y = 0`.
/// For associative x this equals the Hochschild 2-cocycle space.
pub fn fiber_as(x: &MulTable) -> FiberBasis {
    let vectors = assembled_as_matrix(x).kernel_basis();
    FiberBasis {
        point: x.clone(),
        vectors,
    }
}

/// Kernel of `y -> B(x,y) + B(y,x)`; for Leibniz x this equals the Leibniz
/// 2-cocycle space.
pub fn fiber_leib(x: &MulTable) -> FiberBasis {
    let vectors = assembled_leib_matrix(x).kernel_basis();
    FiberBasis {
        point: x.clone(),
        vectors,
    }
}
