//! Invariant bilinear forms and canonical substructures: the principal trace
//! form, the Killing form of right multiplications, modular characters, the
//! Leibniz kernel, and annihilators.

use serde::Serialize;

use crate::algebra::MulTable;
use crate::identities::{self, ResidualKind};
use crate::matrix::Matrix;
use crate::scalar::Rat;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FormKind {
    Trace,
    Killing,
}

/// A bilinear form given by its Gram matrix in the fixed basis.
#[derive(Debug, Clone)]
pub struct GramForm {
    pub kind: FormKind,
    pub gram: Matrix,
    pub discriminant: Rat,
    /// Whether the form's theorem-level semantics apply at this point
    /// (associativity for the trace form, the Leibniz identity for Killing).
    pub on_variety: bool,
}

impl GramForm {
    pub fn is_nondegenerate(&self) -> bool {
        !self.discriminant.is_zero()
    }
}

/// Left and right modular characters, `sigma(e_i) = Tr(L_{e_i})` resp.
/// `Tr(R_{e_i})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterPair {
    pub sigma_l: Vec<Rat>,
    pub sigma_r: Vec<Rat>,
}

impl CharacterPair {
    /// Zero test for sigma_R: the point lies on the right unimodular locus.
    pub fn is_right_unimodular(&self) -> bool {
        self.sigma_r.iter().all(Rat::is_zero)
    }

    /// Zero test for sigma_L.
    pub fn is_left_unimodular(&self) -> bool {
        self.sigma_l.iter().all(Rat::is_zero)
    }
}

fn basis_vec(n: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); n];
    v[i] = Rat::one();
    v
}

/// Principal trace form `T(a,b) = Tr(L_{ab})`, with Gram `Tr(L_{e_i e_j})`.
///
/// Computed for any table; the separability reading (nondegenerate iff
/// semisimple) only applies on associative points, recorded in `on_variety`.
pub fn trace_gram(x: &MulTable) -> GramForm {
    let n = x.dim();
    let gram = Matrix::from_fn(n, n, |i, j| {
        let prod = x.basis_product(i, j);
        x.left_operator(&prod).expect("basis length").trace()
    });
    let discriminant = gram.determinant().expect("square gram");
    GramForm {
        kind: FormKind::Trace,
        gram,
        discriminant,
        on_variety: identities::is_associative(x),
    }
}

/// Separability predicate: nonzero trace-form discriminant at an associative
/// point. Non-associative input is rejected.
pub fn is_separable(x: &MulTable) -> Result<bool> {
    let form = trace_gram(x);
    if !form.on_variety {
        let report = identities::residual_report(x, ResidualKind::Associative);
        return Err(Error::OffVariety {
            variety: "associative",
            witness: report.witness.unwrap_or_default(),
        });
    }
    Ok(form.is_nondegenerate())
}

/// Killing form of right multiplications, `kappa(a,b) = Tr(R_a R_b)`.
///
/// Both the coordinate formula `D(i,j) = sum_{q,r} c(q,i,r) c(r,j,q)` and the
/// operator formula are evaluated; disagreement would mean the two routes
/// diverged and is reported as an internal inconsistency.
pub fn killing_gram(x: &MulTable) -> Result<GramForm> {
    let n = x.dim();
    let coordinate = Matrix::from_fn(n, n, |i, j| {
        let mut acc = Rat::zero();
        for q in 0..n {
            for r in 0..n {
                let a = x.c(q, i, r);
                if !a.is_zero() {
                    let term = a * x.c(r, j, q);
                    acc += &term;
                }
            }
        }
        acc
    });
    let right_ops: Vec<Matrix> = (0..n)
        .map(|i| x.right_operator(&basis_vec(n, i)).expect("basis length"))
        .collect();
    let operator = Matrix::from_fn(n, n, |i, j| {
        right_ops[i].mul(&right_ops[j]).expect("square").trace()
    });
    if coordinate != operator {
        return Err(Error::InternalInconsistency(
            "killing gram: coordinate and operator formulas disagree".into(),
        ));
    }
    let discriminant = coordinate.determinant().expect("square gram");
    Ok(GramForm {
        kind: FormKind::Killing,
        gram: coordinate,
        discriminant,
        on_variety: identities::is_leibniz(x),
    })
}

/// Nondegenerate Killing form at a Leibniz point means the law is a
/// semisimple Lie bracket; the Lie consequence is re-checked and any failure
/// is an internal inconsistency.
pub fn is_semisimple_lie_point(x: &MulTable) -> Result<bool> {
    if !identities::is_leibniz(x) {
        let report = identities::residual_report(x, ResidualKind::Leibniz);
        return Err(Error::OffVariety {
            variety: "leibniz",
            witness: report.witness.unwrap_or_default(),
        });
    }
    let form = killing_gram(x)?;
    let nondegenerate = form.is_nondegenerate();
    if nondegenerate && !identities::is_lie(x) {
        return Err(Error::InternalInconsistency(
            "nondegenerate Killing form at a non-Lie Leibniz point".into(),
        ));
    }
    Ok(nondegenerate)
}

/// Left and right modular characters.
pub fn modular_characters(x: &MulTable) -> CharacterPair {
    let n = x.dim();
    let sigma_l = (0..n)
        .map(|i| x.left_operator(&basis_vec(n, i)).expect("basis").trace())
        .collect();
    let sigma_r = (0..n)
        .map(|i| x.right_operator(&basis_vec(n, i)).expect("basis").trace())
        .collect();
    CharacterPair { sigma_l, sigma_r }
}

/// Canonical basis of the span of squares `mu(v, v)`.
///
/// Polarized over the basis: the squares `mu(e_i + e_j, e_i + e_j)` for
/// `i <= j` span the same space in characteristic 0 and give a deterministic
/// generating set, echelonized into a canonical basis.
pub fn leibniz_kernel(x: &MulTable) -> Vec<Vec<Rat>> {
    let n = x.dim();
    let mut gens = Vec::new();
    for i in 0..n {
        for j in i..n {
            let mut v = basis_vec(n, i);
            if j != i {
                v[j] = Rat::one();
            }
            gens.push(x.multiply(&v, &v).expect("basis length"));
        }
    }
    let (_, _, rows) = Matrix::from_rows(gens).rref();
    rows
}

/// Canonical basis of `{v : R_v = 0}`, the kernel of `v -> right_operator(v)`.
pub fn right_annihilator(x: &MulTable) -> Vec<Vec<Rat>> {
    let n = x.dim();
    // Column p holds the flattened matrix of R_{e_p}.
    let m = Matrix::from_fn(n * n, n, |row, p| {
        let q = row % n;
        let r = row / n;
        x.c(q, p, r).clone()
    });
    m.kernel_basis()
}

/// A violating basis pair found by [`operator_identities_check`].
#[derive(Debug, Clone, Serialize)]
pub struct OperatorIdentityViolation {
    pub identity: &'static str,
    pub pair: (usize, usize),
}

/// Verifies the operator identities `R_{mu(a,b)} = -[R_a, R_b]` and
/// `[R_b, L_a] = L_{mu(a,b)}` on all basis pairs; the error names the first
/// violating pair.
pub fn operator_identities_check(
    x: &MulTable,
) -> std::result::Result<(), OperatorIdentityViolation> {
    let n = x.dim();
    let left: Vec<Matrix> = (0..n)
        .map(|i| x.left_operator(&basis_vec(n, i)).expect("basis"))
        .collect();
    let right: Vec<Matrix> = (0..n)
        .map(|i| x.right_operator(&basis_vec(n, i)).expect("basis"))
        .collect();
    for a in 0..n {
        for b in 0..n {
            let prod = x.basis_product(a, b);
            let r_prod = x.right_operator(&prod).expect("basis");
            let commutator = right[a]
                .mul(&right[b])
                .expect("square")
                .add(&right[b].mul(&right[a]).expect("square").scale(&Rat::from_int(-1)))
                .expect("same shape");
            if r_prod != commutator.scale(&Rat::from_int(-1)) {
                return Err(OperatorIdentityViolation {
                    identity: "R_{mu(a,b)} = -[R_a,R_b]",
                    pair: (a, b),
                });
            }
            let l_prod = x.left_operator(&prod).expect("basis");
            let mixed = right[b]
                .mul(&left[a])
                .expect("square")
                .add(&left[a].mul(&right[b]).expect("square").scale(&Rat::from_int(-1)))
                .expect("same shape");
            if mixed != l_prod {
                return Err(OperatorIdentityViolation {
                    identity: "[R_b,L_a] = L_{mu(a,b)}",
                    pair: (a, b),
                });
            }
        }
    }
    Ok(())
}
