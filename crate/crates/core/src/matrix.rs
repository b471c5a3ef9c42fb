//! Dense matrices over the exact rationals.
//!
//! Rank, kernel and determinant run fraction-free: each row is scaled to
//! integers and eliminated Bareiss-style, so intermediate entries stay minors
//! of the input instead of exploding as free-form fractions. Kernel bases come
//! from the (unique) reduced row echelon form, which makes them deterministic.
//!
//! Large systems are pre-screened modulo [`crate::scalar::PRIME`]: the mod-p
//! echelon selects a candidate set of independent rows, the rational kernel of
//! that row subset is computed exactly, and every kernel vector is then
//! verified against the full matrix. Verification failure falls back to the
//! plain rational path, so the prime field never decides a result by itself.

use std::ops::{Index, IndexMut};

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};

use crate::scalar::{Fp, Rat};
use crate::{Error, Result};

/// Row-major dense matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

/// Strategy for rank/kernel elimination.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Elimination {
    /// Pre-screen mod p when the matrix is large, rational otherwise.
    Auto,
    /// Fraction-free rational elimination only.
    Rational,
    /// Force the mod-p pre-screen (still rationally confirmed).
    Prescreened,
}

/// Entry-count threshold above which `Auto` switches to the pre-screen.
const PRESCREEN_MIN_ENTRIES: usize = 60_000;

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Matrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Matrix::from_fn(rows.len(), rows.first().map_or(0, |r| r.len()), |i, j| {
            Rat::from_int(rows[i][j])
        })
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// `(M + M^t)/2`. Requires a square input.
    pub fn symmetrize(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let half = Rat::new(1, 2);
        Ok(Matrix::from_fn(self.rows, self.cols, |i, j| {
            &(&self[(i, j)] + &self[(j, i)]) * &half
        }))
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let prod = a * b;
                        out[(i, j)] += &prod;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Result<Vec<Rat>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = Rat::zero();
                for j in 0..self.cols {
                    let a = &self[(i, j)];
                    if !a.is_zero() && !v[j].is_zero() {
                        let prod = a * &v[j];
                        acc += &prod;
                    }
                }
                acc
            })
            .collect())
    }

    pub fn trace(&self) -> Rat {
        let mut acc = Rat::zero();
        for i in 0..self.rows.min(self.cols) {
            acc += &self[(i, i)];
        }
        acc
    }

    pub fn scale(&self, s: &Rat) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] * s)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                got: other.rows * other.cols,
            });
        }
        Ok(Matrix::from_fn(self.rows, self.cols, |i, j| {
            &self[(i, j)] + &other[(i, j)]
        }))
    }

    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        self.rank_with(Elimination::Auto)
    }

    pub fn rank_with(&self, mode: Elimination) -> usize {
        self.solve(mode, false).rank
    }

    /// Canonical basis of the right kernel (empty when the kernel is trivial).
    ///
    /// Vectors come from the unique reduced row echelon form: each has a 1 at
    /// its own free column and 0 at every other free column, so the basis is
    /// in echelon-normal form and deterministic.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        self.kernel_basis_with(Elimination::Auto)
    }

    pub fn kernel_basis_with(&self, mode: Elimination) -> Vec<Vec<Rat>> {
        self.solve(mode, true).kernel
    }

    /// Rank and kernel in one elimination.
    pub fn rank_and_kernel(&self) -> (usize, Vec<Vec<Rat>>) {
        let s = self.solve(Elimination::Auto, true);
        (s.rank, s.kernel)
    }

    /// Unique reduced row echelon form, as (rank, pivot columns, nonzero rows).
    pub fn rref(&self) -> (usize, Vec<usize>, Vec<Vec<Rat>>) {
        let rows: Vec<Vec<Rat>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let ech = rational_rref(rows, self.cols);
        (ech.pivot_cols.len(), ech.pivot_cols, ech.rows)
    }

    /// Canonical basis of the column space (RREF rows of the transpose).
    pub fn column_space_basis(&self) -> Vec<Vec<Rat>> {
        let (_, _, rows) = self.transpose().rref();
        rows
    }

    /// Exact determinant. Non-square input is rejected.
    pub fn determinant(&self) -> Result<Rat> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Rat::one());
        }
        let (mut int_rows, scales) = self.integerized_rows();
        let ech = bareiss_forward(&mut int_rows, n);
        if ech.pivot_cols.len() < n {
            return Ok(Rat::zero());
        }
        // Bareiss leaves the full-size minor as the last pivot.
        let mut det = Rat::from_big(ech.last_pivot, BigInt::one());
        if ech.swaps % 2 == 1 {
            det = -det;
        }
        let mut scale = Rat::one();
        for s in scales {
            scale *= &Rat::from_big(s, BigInt::one());
        }
        Ok(det / scale)
    }

    /// Inverse of a square matrix; singular input is rejected.
    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut aug: Vec<Vec<Rat>> = (0..n)
            .map(|i| {
                let mut row = self.row(i).to_vec();
                row.extend((0..n).map(|j| {
                    if i == j {
                        Rat::one()
                    } else {
                        Rat::zero()
                    }
                }));
                row
            })
            .collect();
        // Plain rational Gauss-Jordan; inverses stay small at the sizes we use.
        let mut pivot_row = 0;
        for col in 0..n {
            let Some(p) = (pivot_row..n).find(|&r| !aug[r][col].is_zero()) else {
                return Err(Error::Singular);
            };
            aug.swap(pivot_row, p);
            let inv = aug[pivot_row][col].inv().expect("nonzero pivot");
            for v in aug[pivot_row].iter_mut() {
                *v *= &inv;
            }
            for r in 0..n {
                if r != pivot_row && !aug[r][col].is_zero() {
                    let f = aug[r][col].clone();
                    for c in 0..2 * n {
                        let sub = &f * &aug[pivot_row][c];
                        aug[r][c] -= &sub;
                    }
                }
            }
            pivot_row += 1;
        }
        Ok(Matrix::from_fn(n, n, |i, j| aug[i][n + j].clone()))
    }

    /// Rows scaled to integers (each row by the lcm of its denominators).
    fn integerized_rows(&self) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
        let mut rows = Vec::with_capacity(self.rows);
        let mut scales = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut lcm = BigInt::one();
            for v in self.row(i) {
                lcm = lcm.lcm(v.denom());
            }
            let row: Vec<BigInt> = self
                .row(i)
                .iter()
                .map(|v| v.numer() * (&lcm / v.denom()))
                .collect();
            rows.push(row);
            scales.push(lcm);
        }
        (rows, scales)
    }

    fn solve(&self, mode: Elimination, want_kernel: bool) -> Solved {
        let use_prescreen = match mode {
            Elimination::Rational => false,
            Elimination::Prescreened => true,
            Elimination::Auto => self.rows * self.cols >= PRESCREEN_MIN_ENTRIES,
        };
        if use_prescreen {
            if let Some(s) = self.solve_prescreened() {
                return s;
            }
        }
        self.solve_rational(want_kernel)
    }

    fn solve_rational(&self, want_kernel: bool) -> Solved {
        let (mut int_rows, _) = self.integerized_rows();
        let ech = bareiss_forward(&mut int_rows, self.cols);
        let rank = ech.pivot_cols.len();
        if !want_kernel {
            return Solved {
                rank,
                kernel: Vec::new(),
            };
        }
        let rref = back_substitute(ech, self.cols);
        let kernel = kernel_from_rref(self.cols, &rref.pivot_cols, &rref.rows);
        Solved { rank, kernel }
    }

    /// Mod-p row selection followed by exact confirmation; `None` on fallback.
    fn solve_prescreened(&self) -> Option<Solved> {
        let mut basis: Vec<Vec<Fp>> = Vec::new();
        let mut basis_pivot: Vec<usize> = Vec::new();
        let mut independent_rows: Vec<usize> = Vec::new();
        for i in 0..self.rows {
            let mut row: Vec<Fp> = Vec::with_capacity(self.cols);
            for v in self.row(i) {
                row.push(v.to_fp()?);
            }
            for (b, &p) in basis.iter().zip(&basis_pivot) {
                if !row[p].is_zero() {
                    let f = row[p];
                    for (rv, bv) in row.iter_mut().zip(b) {
                        *rv = *rv - f * *bv;
                    }
                }
            }
            if let Some(p) = row.iter().position(|v| !v.is_zero()) {
                let inv = row[p].inv().expect("nonzero leading entry");
                for v in row.iter_mut() {
                    *v = *v * inv;
                }
                // Insert keeping pivots ordered so later rows reduce fully.
                let at = basis_pivot.partition_point(|&q| q < p);
                basis.insert(at, row);
                basis_pivot.insert(at, p);
                independent_rows.push(i);
            }
        }
        let sub = Matrix::from_rows(
            independent_rows
                .iter()
                .map(|&i| self.row(i).to_vec())
                .collect(),
        );
        let solved = sub.solve_rational(true);
        if solved.rank != independent_rows.len() {
            return None;
        }
        // Confirm each candidate kernel vector against every original row.
        for v in &solved.kernel {
            for i in 0..self.rows {
                let mut acc = Rat::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        let prod = a * b;
                        acc += &prod;
                    }
                }
                if !acc.is_zero() {
                    return None;
                }
            }
        }
        Some(solved)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rat;
    fn index(&self, (r, c): (usize, usize)) -> &Rat {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rat {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

struct Solved {
    rank: usize,
    kernel: Vec<Vec<Rat>>,
}

struct IntEchelon {
    rows: Vec<Vec<BigInt>>,
    pivot_cols: Vec<usize>,
    swaps: usize,
    last_pivot: BigInt,
}

/// One-step Bareiss elimination to row echelon form. Entries stay minors of
/// the input, so the divisions below are exact.
fn bareiss_forward(rows: &mut Vec<Vec<BigInt>>, cols: usize) -> IntEchelon {
    let nrows = rows.len();
    let mut pivot_cols = Vec::new();
    let mut swaps = 0usize;
    let mut prev = BigInt::one();
    let mut pr = 0usize;
    for pc in 0..cols {
        if pr >= nrows {
            break;
        }
        // Smallest nonzero pivot keeps the integer growth down.
        let pivot = (pr..nrows)
            .filter(|&r| !rows[r][pc].is_zero())
            .min_by_key(|&r| rows[r][pc].abs());
        let Some(p) = pivot else { continue };
        if p != pr {
            rows.swap(p, pr);
            swaps += 1;
        }
        for r in pr + 1..nrows {
            if rows[r].iter().skip(pc).all(Zero::is_zero) {
                continue;
            }
            for c in pc + 1..cols {
                let num = &rows[pr][pc] * &rows[r][c] - &rows[r][pc] * &rows[pr][c];
                rows[r][c] = num / &prev;
            }
            rows[r][pc] = BigInt::zero();
        }
        prev = rows[pr][pc].clone();
        pivot_cols.push(pc);
        pr += 1;
    }
    let last_pivot = prev;
    IntEchelon {
        rows: std::mem::take(rows),
        pivot_cols,
        swaps,
        last_pivot,
    }
}

struct RatEchelon {
    rows: Vec<Vec<Rat>>,
    pivot_cols: Vec<usize>,
}

/// Back-substitution taking integer echelon rows to the unique RREF.
fn back_substitute(ech: IntEchelon, cols: usize) -> RatEchelon {
    let r = ech.pivot_cols.len();
    let mut rows: Vec<Vec<Rat>> = ech.rows[..r]
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| Rat::from_big(v.clone(), BigInt::one()))
                .collect()
        })
        .collect();
    for i in (0..r).rev() {
        let pc = ech.pivot_cols[i];
        let inv = rows[i][pc].inv().expect("nonzero pivot");
        for c in pc..cols {
            rows[i][c] *= &inv;
        }
        for i2 in 0..i {
            if !rows[i2][pc].is_zero() {
                let f = rows[i2][pc].clone();
                for c in pc..cols {
                    let sub = &f * &rows[i][c];
                    rows[i2][c] -= &sub;
                }
            }
        }
    }
    RatEchelon {
        rows,
        pivot_cols: ech.pivot_cols,
    }
}

fn rational_rref(rows: Vec<Vec<Rat>>, cols: usize) -> RatEchelon {
    let m = Matrix::from_rows(rows);
    let (mut int_rows, _) = m.integerized_rows();
    let ech = bareiss_forward(&mut int_rows, cols);
    back_substitute(ech, cols)
}

fn kernel_from_rref(cols: usize, pivot_cols: &[usize], rref: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let mut is_pivot = vec![false; cols];
    for &c in pivot_cols {
        is_pivot[c] = true;
    }
    let mut basis = Vec::with_capacity(cols - pivot_cols.len());
    for free in 0..cols {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![Rat::zero(); cols];
        v[free] = Rat::one();
        for (i, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -&rref[i][free];
        }
        basis.push(v);
    }
    basis
}

/// Dimension of the span of a set of vectors.
pub fn span_dim(vecs: &[Vec<Rat>]) -> usize {
    if vecs.is_empty() {
        return 0;
    }
    Matrix::from_rows(vecs.to_vec()).rank()
}

/// Whether every vector of `inner` lies in the span of `outer`.
pub fn span_contains(outer: &[Vec<Rat>], inner: &[Vec<Rat>]) -> bool {
    if inner.is_empty() {
        return true;
    }
    if outer.is_empty() {
        return inner.iter().all(|v| v.iter().all(Rat::is_zero));
    }
    let mut stacked = outer.to_vec();
    stacked.extend(inner.iter().cloned());
    span_dim(&stacked) == span_dim(outer)
}

/// Subspace equality by mutual containment.
pub fn same_span(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> bool {
    span_contains(a, b) && span_contains(b, a)
}
