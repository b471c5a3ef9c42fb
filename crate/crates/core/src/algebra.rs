//! Structure constants of a bilinear product and the transport-of-structure
//! action.
//!
//! A product on an `n`-dimensional space with basis `e_0..e_{n-1}` is stored
//! as the table `c[i][j][l]` with `mu(e_i, e_j) = sum_l c[i][j][l] e_l`. The
//! same flat layout doubles as the coordinate vector of a 2-cochain, and
//! [`Tensor3`] plays the role of a 3-cochain.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::matrix::Matrix;
use crate::scalar::Rat;
use crate::{Error, Result};

/// Flat index of the pair `(i, m)` in the `n^2` coordinates of a 1-cochain.
#[inline]
pub fn idx2(n: usize, i: usize, m: usize) -> usize {
    i * n + m
}

/// Flat index of the triple `(i, j, l)` in the `n^3` coordinates of a table.
#[inline]
pub fn idx3(n: usize, i: usize, j: usize, l: usize) -> usize {
    (i * n + j) * n + l
}

/// Flat index of the quadruple `(i, j, k, m)` in `n^4` coordinates.
#[inline]
pub fn idx4(n: usize, i: usize, j: usize, k: usize, m: usize) -> usize {
    ((i * n + j) * n + k) * n + m
}

/// Structure constants of a bilinear product; also a 2-cochain container.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MulTable {
    dim: usize,
    coeffs: Vec<Rat>,
}

impl MulTable {
    pub fn zero(dim: usize) -> Self {
        assert!(dim >= 1, "dimension must be positive");
        MulTable {
            dim,
            coeffs: vec![Rat::zero(); dim * dim * dim],
        }
    }

    /// Builds a table from sparse `(i, j, l, coefficient)` entries.
    pub fn from_triples(dim: usize, triples: &[(usize, usize, usize, Rat)]) -> Result<Self> {
        let mut t = MulTable::zero(dim);
        for (i, j, l, c) in triples {
            if *i >= dim || *j >= dim || *l >= dim {
                return Err(Error::Parse(format!(
                    "table entry (i={i}, j={j}, l={l}) out of range for dim {dim}"
                )));
            }
            t.coeffs[idx3(dim, *i, *j, *l)] = c.clone();
        }
        Ok(t)
    }

    pub fn from_flat(dim: usize, coeffs: Vec<Rat>) -> Result<Self> {
        if coeffs.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim * dim,
                got: coeffs.len(),
            });
        }
        Ok(MulTable { dim, coeffs })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn c(&self, i: usize, j: usize, l: usize) -> &Rat {
        &self.coeffs[idx3(self.dim, i, j, l)]
    }

    pub fn set_c(&mut self, i: usize, j: usize, l: usize, v: Rat) {
        self.coeffs[idx3(self.dim, i, j, l)] = v;
    }

    /// The table as the flat `n^3` coordinate vector of the canonical basis.
    pub fn flatten(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    /// `mu(a, b)` by bilinear extension.
    pub fn multiply(&self, a: &[Rat], b: &[Rat]) -> Result<Vec<Rat>> {
        let n = self.dim;
        for v in [a, b] {
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: v.len(),
                });
            }
        }
        let mut out = vec![Rat::zero(); n];
        for i in 0..n {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if b[j].is_zero() {
                    continue;
                }
                let f = &a[i] * &b[j];
                for l in 0..n {
                    let c = self.c(i, j, l);
                    if !c.is_zero() {
                        let term = &f * c;
                        out[l] += &term;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Coefficient vector of `mu(e_i, e_j)`.
    pub fn basis_product(&self, i: usize, j: usize) -> Vec<Rat> {
        (0..self.dim).map(|l| self.c(i, j, l).clone()).collect()
    }

    /// Matrix of left multiplication `b -> mu(a, b)`.
    pub fn left_operator(&self, a: &[Rat]) -> Result<Matrix> {
        let n = self.dim;
        if a.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: a.len(),
            });
        }
        Ok(Matrix::from_fn(n, n, |l, j| {
            let mut acc = Rat::zero();
            for i in 0..n {
                if !a[i].is_zero() {
                    let term = &a[i] * self.c(i, j, l);
                    acc += &term;
                }
            }
            acc
        }))
    }

    /// Matrix of right multiplication `b -> mu(b, a)`.
    pub fn right_operator(&self, a: &[Rat]) -> Result<Matrix> {
        let n = self.dim;
        if a.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: a.len(),
            });
        }
        Ok(Matrix::from_fn(n, n, |l, j| {
            let mut acc = Rat::zero();
            for i in 0..n {
                if !a[i].is_zero() {
                    let term = &a[i] * self.c(j, i, l);
                    acc += &term;
                }
            }
            acc
        }))
    }

    /// Transport of structure `(g.mu)(a, b) = g mu(g^-1 a, g^-1 b)`.
    ///
    /// Rejects singular `g`. Identity and composition laws hold exactly:
    /// `transport(id) = id` and `transport(g) . transport(h) = transport(gh)`.
    pub fn transport(&self, g: &Matrix) -> Result<MulTable> {
        let n = self.dim;
        if g.nrows() != n || g.ncols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: g.nrows(),
            });
        }
        let h = g.inverse()?;
        // Contract one index at a time: c'[i][j][l] = sum h[p][i] h[q][j] c[p][q][r] g[l][r].
        let mut t1 = vec![Rat::zero(); n * n * n];
        for p in 0..n {
            for q in 0..n {
                for i in 0..n {
                    if h[(p, i)].is_zero() {
                        continue;
                    }
                    for r in 0..n {
                        let c = self.c(p, q, r);
                        if !c.is_zero() {
                            let term = &h[(p, i)] * c;
                            t1[idx3(n, i, q, r)] += &term;
                        }
                    }
                }
            }
        }
        let mut t2 = vec![Rat::zero(); n * n * n];
        for i in 0..n {
            for q in 0..n {
                for j in 0..n {
                    if h[(q, j)].is_zero() {
                        continue;
                    }
                    for r in 0..n {
                        let c = &t1[idx3(n, i, q, r)];
                        if !c.is_zero() {
                            let term = &h[(q, j)] * c;
                            t2[idx3(n, i, j, r)] += &term;
                        }
                    }
                }
            }
        }
        let mut out = MulTable::zero(n);
        for i in 0..n {
            for j in 0..n {
                for r in 0..n {
                    let c = &t2[idx3(n, i, j, r)];
                    if c.is_zero() {
                        continue;
                    }
                    for l in 0..n {
                        if !g[(l, r)].is_zero() {
                            let term = &g[(l, r)] * c;
                            out.coeffs[idx3(n, i, j, l)] += &term;
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Block-diagonal sum; cross products between the blocks vanish.
    pub fn direct_sum(&self, other: &MulTable) -> MulTable {
        let n1 = self.dim;
        let n = n1 + other.dim;
        let mut out = MulTable::zero(n);
        for i in 0..n1 {
            for j in 0..n1 {
                for l in 0..n1 {
                    out.coeffs[idx3(n, i, j, l)] = self.c(i, j, l).clone();
                }
            }
        }
        for i in 0..other.dim {
            for j in 0..other.dim {
                for l in 0..other.dim {
                    out.coeffs[idx3(n, n1 + i, n1 + j, n1 + l)] = other.c(i, j, l).clone();
                }
            }
        }
        out
    }
}

/// A 3-cochain: coordinates `t[i][j][k][m]` with `T(e_i,e_j,e_k) = sum_m t[i][j][k][m] e_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor3 {
    dim: usize,
    coeffs: Vec<Rat>,
}

impl Tensor3 {
    pub fn zero(dim: usize) -> Self {
        Tensor3 {
            dim,
            coeffs: vec![Rat::zero(); dim * dim * dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize, k: usize, m: usize) -> &Rat {
        &self.coeffs[idx4(self.dim, i, j, k, m)]
    }

    pub fn entry_mut(&mut self, i: usize, j: usize, k: usize, m: usize) -> &mut Rat {
        &mut self.coeffs[idx4(self.dim, i, j, k, m)]
    }

    pub fn flatten(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    pub fn nonzero_count(&self) -> usize {
        self.coeffs.iter().filter(|v| !v.is_zero()).count()
    }

    /// First nonzero coordinate `(i, j, k, m)` in lexicographic order.
    pub fn first_nonzero(&self) -> Option<(usize, usize, usize, usize)> {
        let n = self.dim;
        let pos = self.coeffs.iter().position(|v| !v.is_zero())?;
        let m = pos % n;
        let k = (pos / n) % n;
        let j = (pos / (n * n)) % n;
        let i = pos / (n * n * n);
        Some((i, j, k, m))
    }

    pub fn add(&self, other: &Tensor3) -> Result<Tensor3> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Rat) -> Tensor3 {
        Tensor3 {
            dim: self.dim,
            coeffs: self.coeffs.iter().map(|v| v * s).collect(),
        }
    }

    /// Transport of structure in arity 3: `(g.T)(a,b,c) = g T(g^-1 a, g^-1 b, g^-1 c)`.
    pub fn transport(&self, g: &Matrix) -> Result<Tensor3> {
        let n = self.dim;
        if g.nrows() != n || g.ncols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: g.nrows(),
            });
        }
        let h = g.inverse()?;
        let contract = |src: &[Rat], pos: usize, mat: &Matrix, transpose: bool| -> Vec<Rat> {
            // Replace index at `pos` (0..4): out[.., a, ..] = sum_b coeff(b->a) src[.., b, ..]
            let mut out = vec![Rat::zero(); n * n * n * n];
            let strides = [n * n * n, n * n, n, 1];
            for flat in 0..src.len() {
                if src[flat].is_zero() {
                    continue;
                }
                let b = (flat / strides[pos]) % n;
                let base = flat - b * strides[pos];
                for a in 0..n {
                    let f = if transpose { &mat[(b, a)] } else { &mat[(a, b)] };
                    if !f.is_zero() {
                        let term = f * &src[flat];
                        out[base + a * strides[pos]] += &term;
                    }
                }
            }
            out
        };
        // Arguments pick up h on each input slot, the output slot picks up g.
        let s = contract(&self.coeffs, 0, &h, true);
        let s = contract(&s, 1, &h, true);
        let s = contract(&s, 2, &h, true);
        let s = contract(&s, 3, g, false);
        Ok(Tensor3 { dim: n, coeffs: s })
    }
}

// ---------------------------------------------------------------------------
// Canonical builders
// ---------------------------------------------------------------------------

/// The full matrix algebra on r x r matrix units, `E_ab E_cd = delta_bc E_ad`.
/// Basis index of `E_ab` is `a*r + b`; the result has dimension `r^2`.
pub fn matrix_algebra(r: usize) -> MulTable {
    assert!(r >= 1);
    let n = r * r;
    let mut t = MulTable::zero(n);
    for a in 0..r {
        for b in 0..r {
            for d in 0..r {
                // E_ab * E_bd = E_ad
                t.set_c(a * r + b, b * r + d, a * r + d, Rat::one());
            }
        }
    }
    t
}

/// The split etale algebra `k^n` with coordinate-wise product.
pub fn split_etale(n: usize) -> MulTable {
    assert!(n >= 1);
    let mut t = MulTable::zero(n);
    for i in 0..n {
        t.set_c(i, i, i, Rat::one());
    }
    t
}

/// Dual numbers `k[eps]/(eps^2)` in the basis (1, eps).
pub fn dual_numbers() -> MulTable {
    let mut t = MulTable::zero(2);
    t.set_c(0, 0, 0, Rat::one());
    t.set_c(0, 1, 1, Rat::one());
    t.set_c(1, 0, 1, Rat::one());
    t
}

/// sl2 in the basis (h, e, f) with [h,e] = 2e, [h,f] = -2f, [e,f] = h.
pub fn sl2() -> MulTable {
    let mut t = MulTable::zero(3);
    t.set_c(0, 1, 1, Rat::from_int(2));
    t.set_c(1, 0, 1, Rat::from_int(-2));
    t.set_c(0, 2, 2, Rat::from_int(-2));
    t.set_c(2, 0, 2, Rat::from_int(2));
    t.set_c(1, 2, 0, Rat::one());
    t.set_c(2, 1, 0, Rat::from_int(-1));
    t
}

/// The zero product in dimension n.
pub fn abelian(n: usize) -> MulTable {
    MulTable::zero(n)
}

/// The 2-dimensional Leibniz law with the single product `mu(e1, e1) = e0`.
pub fn leibniz2() -> MulTable {
    let mut t = MulTable::zero(2);
    t.set_c(1, 1, 0, Rat::one());
    t
}

/// Builds one of the named canonical laws; `arg` feeds the parametric ones.
/// Accepted names: `matrix_algebra`/`m<r>`, `split_etale`, `dual_numbers`,
/// `sl2`, `abelian`, `leibniz2`.
pub fn builder_by_name(name: &str, arg: Option<usize>) -> Result<(String, MulTable)> {
    let need_arg =
        |what: &str| arg.ok_or_else(|| Error::Parse(format!("builder {what} requires --arg")));
    match name {
        "matrix_algebra" => {
            let r = need_arg("matrix_algebra")?;
            Ok((format!("matrix_algebra({r})"), matrix_algebra(r)))
        }
        "split_etale" => {
            let n = need_arg("split_etale")?;
            Ok((format!("split_etale({n})"), split_etale(n)))
        }
        "abelian" => {
            let n = need_arg("abelian")?;
            Ok((format!("abelian({n})"), abelian(n)))
        }
        "dual_numbers" => Ok(("dual_numbers".into(), dual_numbers())),
        "sl2" => Ok(("sl2".into(), sl2())),
        "leibniz2" => Ok(("leibniz2".into(), leibniz2())),
        other => {
            // m2, m3, ... shorthand for matrix_algebra(r).
            if let Some(r) = other.strip_prefix('m').and_then(|s| s.parse::<usize>().ok()) {
                if r >= 1 {
                    return Ok((format!("matrix_algebra({r})"), matrix_algebra(r)));
                }
            }
            Err(Error::Parse(format!("unknown builder {other:?}")))
        }
    }
}

// ---------------------------------------------------------------------------
// Serialization: self-describing line-oriented JSON
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct AlgebraFile {
    name: String,
    dim: usize,
    field: String,
    table: Vec<TableEntry>,
}

#[derive(Serialize, Deserialize)]
struct TableEntry {
    i: usize,
    j: usize,
    l: usize,
    c: String,
}

/// Serializes a table. Entries are emitted one per line in lexicographic
/// `(i, j, l)` order with zero coefficients omitted, so output is canonical.
pub fn to_json(name: &str, table: &MulTable) -> String {
    let n = table.dim();
    let mut out = String::new();
    out.push_str("{\n");
    out.push_str(&format!(
        "  \"name\": {},\n",
        serde_json::to_string(name).expect("string encodes")
    ));
    out.push_str(&format!("  \"dim\": {n},\n"));
    out.push_str("  \"field\": \"rational\",\n");
    out.push_str("  \"table\": [");
    let mut first = true;
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                let c = table.c(i, j, l);
                if c.is_zero() {
                    continue;
                }
                if !first {
                    out.push(',');
                }
                first = false;
                out.push_str(&format!(
                    "\n    {{\"i\": {i}, \"j\": {j}, \"l\": {l}, \"c\": \"{c}\"}}"
                ));
            }
        }
    }
    if !first {
        out.push('\n');
        out.push_str("  ");
    }
    out.push_str("]\n}\n");
    out
}

/// Parses the algebra file format. Errors name the offending field or triple.
pub fn from_json(text: &str) -> Result<(String, MulTable)> {
    let file: AlgebraFile = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("invalid algebra file: {e}")))?;
    if file.field != "rational" {
        return Err(Error::Parse(format!(
            "unsupported field {:?} (only \"rational\")",
            file.field
        )));
    }
    if file.dim == 0 {
        return Err(Error::Parse("dim must be at least 1".into()));
    }
    let mut triples = Vec::with_capacity(file.table.len());
    for e in &file.table {
        let c = Rat::from_str(&e.c).map_err(|err| {
            Error::Parse(format!("entry (i={}, j={}, l={}): {err}", e.i, e.j, e.l))
        })?;
        triples.push((e.i, e.j, e.l, c));
    }
    let table = MulTable::from_triples(file.dim, &triples)?;
    Ok((file.name, table))
}
