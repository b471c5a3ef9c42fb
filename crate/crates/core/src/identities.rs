//! Residual tensors and membership predicates for the four varieties of
//! bilinear laws: associative, commutative, (right) Leibniz, Lie.
//!
//! Residuals are kept as full coordinate tensors rather than early-exit
//! booleans so a report can name a violating coordinate.

use serde::Serialize;

use crate::algebra::{MulTable, Tensor3};
use crate::scalar::Rat;

/// Which residual a report refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ResidualKind {
    Associative,
    Commutative,
    Leibniz,
    Skew,
    Jacobi,
}

/// Outcome of one residual computation.
#[derive(Debug, Clone, Serialize)]
pub struct ResidualReport {
    pub kind: ResidualKind,
    /// Number of nonzero residual coordinates.
    pub violations: usize,
    /// First violating coordinate in lexicographic order, if any.
    pub witness: Option<Vec<usize>>,
    pub is_member: bool,
}

impl ResidualReport {
    fn from_tensor(kind: ResidualKind, t: &Tensor3) -> Self {
        let violations = t.nonzero_count();
        ResidualReport {
            kind,
            violations,
            witness: t.first_nonzero().map(|(i, j, k, m)| vec![i, j, k, m]),
            is_member: violations == 0,
        }
    }

    fn from_pairs(kind: ResidualKind, x: &MulTable, combine: impl Fn(&Rat, &Rat) -> Rat) -> Self {
        let n = x.dim();
        let mut violations = 0;
        let mut witness = None;
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    if !combine(x.c(i, j, l), x.c(j, i, l)).is_zero() {
                        violations += 1;
                        witness.get_or_insert_with(|| vec![i, j, l]);
                    }
                }
            }
        }
        ResidualReport {
            kind,
            violations,
            witness,
            is_member: violations == 0,
        }
    }
}

/// Associativity residual: coordinate `(i,j,k,m)` holds
/// `sum_l c(i,j,l) c(l,k,m) - sum_l c(i,l,m) c(j,k,l)`, which vanishes
/// exactly when the law is associative.
pub fn assoc_residual(x: &MulTable) -> Tensor3 {
    let n = x.dim();
    let mut t = Tensor3::zero(n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for m in 0..n {
                    let mut acc = Rat::zero();
                    for l in 0..n {
                        let a = x.c(i, j, l);
                        if !a.is_zero() {
                            let term = a * x.c(l, k, m);
                            acc += &term;
                        }
                        let b = x.c(j, k, l);
                        if !b.is_zero() {
                            let term = x.c(i, l, m) * b;
                            acc -= &term;
                        }
                    }
                    *t.entry_mut(i, j, k, m) = acc;
                }
            }
        }
    }
    t
}

/// Right Leibniz residual: coordinate `(i,j,k,m)` holds
/// `sum_l c(i,j,l) c(l,k,m) - sum_l c(i,k,l) c(l,j,m) - sum_l c(i,l,m) c(j,k,l)`.
pub fn leibniz_residual(x: &MulTable) -> Tensor3 {
    let n = x.dim();
    let mut t = Tensor3::zero(n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for m in 0..n {
                    let mut acc = Rat::zero();
                    for l in 0..n {
                        let a = x.c(i, j, l);
                        if !a.is_zero() {
                            let term = a * x.c(l, k, m);
                            acc += &term;
                        }
                        let b = x.c(i, k, l);
                        if !b.is_zero() {
                            let term = b * x.c(l, j, m);
                            acc -= &term;
                        }
                        let d = x.c(j, k, l);
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
    t
}

/// Jacobi residual `mu(mu(a,b),c) + mu(mu(b,c),a) + mu(mu(c,a),b)` on basis
/// triples. Zero together with skew-symmetry characterizes Lie laws.
pub fn jacobi_residual(x: &MulTable) -> Tensor3 {
    let n = x.dim();
    let mut t = Tensor3::zero(n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for m in 0..n {
                    let mut acc = Rat::zero();
                    for l in 0..n {
                        for (p, q, r) in [(i, j, k), (j, k, i), (k, i, j)] {
                            let a = x.c(p, q, l);
                            if !a.is_zero() {
                                let term = a * x.c(l, r, m);
                                acc += &term;
                            }
                        }
                    }
                    *t.entry_mut(i, j, k, m) = acc;
                }
            }
        }
    }
    t
}

pub fn is_associative(x: &MulTable) -> bool {
    assoc_residual(x).is_zero()
}

/// Symmetry of the table alone: `c(i,j,l) = c(j,i,l)` for all triples.
pub fn is_symmetric(x: &MulTable) -> bool {
    let n = x.dim();
    (0..n).all(|i| (0..n).all(|j| (0..n).all(|l| x.c(i, j, l) == x.c(j, i, l))))
}

pub fn is_skew(x: &MulTable) -> bool {
    let n = x.dim();
    (0..n).all(|i| (0..n).all(|j| (0..n).all(|l| (x.c(i, j, l) + x.c(j, i, l)).is_zero())))
}

/// Membership in the commutative variety: symmetric AND associative.
pub fn is_commutative(x: &MulTable) -> bool {
    is_symmetric(x) && is_associative(x)
}

pub fn is_leibniz(x: &MulTable) -> bool {
    leibniz_residual(x).is_zero()
}

/// Membership in the Lie variety: skew AND right Leibniz (equivalently,
/// skew plus Jacobi).
pub fn is_lie(x: &MulTable) -> bool {
    is_skew(x) && is_leibniz(x)
}

/// Report for one residual kind.
pub fn residual_report(x: &MulTable, kind: ResidualKind) -> ResidualReport {
    match kind {
        ResidualKind::Associative => ResidualReport::from_tensor(kind, &assoc_residual(x)),
        ResidualKind::Leibniz => ResidualReport::from_tensor(kind, &leibniz_residual(x)),
        ResidualKind::Jacobi => ResidualReport::from_tensor(kind, &jacobi_residual(x)),
        ResidualKind::Commutative => ResidualReport::from_pairs(kind, x, |a, b| a - b),
        ResidualKind::Skew => ResidualReport::from_pairs(kind, x, |a, b| a + b),
    }
}

/// All five residual reports, in a fixed order.
pub fn check_all(x: &MulTable) -> Vec<ResidualReport> {
    [
        ResidualKind::Associative,
        ResidualKind::Commutative,
        ResidualKind::Leibniz,
        ResidualKind::Skew,
        ResidualKind::Jacobi,
    ]
    .into_iter()
    .map(|k| residual_report(x, k))
    .collect()
}

/// Advisory membership flags computed modulo the fixed prime.
///
/// `None` when some coefficient fails to reduce. A `false` flag is definitive
/// (a residual nonzero mod p is nonzero over the rationals); a `true` flag is
/// only a pre-screen and must be confirmed rationally.
pub fn membership_mod_p(x: &MulTable) -> Option<ModPMembership> {
    use crate::scalar::Fp;
    let n = x.dim();
    let mut c = vec![Fp::zero(); n * n * n];
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                c[crate::algebra::idx3(n, i, j, l)] = x.c(i, j, l).to_fp()?;
            }
        }
    }
    let at = |i: usize, j: usize, l: usize| c[crate::algebra::idx3(n, i, j, l)];
    let mut assoc = true;
    let mut leib = true;
    let mut sym = true;
    let mut skew = true;
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                if at(i, j, l) != at(j, i, l) {
                    sym = false;
                }
                if !(at(i, j, l) + at(j, i, l)).is_zero() {
                    skew = false;
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for m in 0..n {
                    let mut f = Fp::zero();
                    let mut g = Fp::zero();
                    for l in 0..n {
                        f = f + at(i, j, l) * at(l, k, m) - at(i, l, m) * at(j, k, l);
                        g = g + at(i, j, l) * at(l, k, m)
                            - at(i, k, l) * at(l, j, m)
                            - at(i, l, m) * at(j, k, l);
                    }
                    if !f.is_zero() {
                        assoc = false;
                    }
                    if !g.is_zero() {
                        leib = false;
                    }
                }
            }
        }
    }
    Some(ModPMembership {
        associative: assoc,
        symmetric: sym,
        commutative: sym && assoc,
        leibniz: leib,
        skew,
        lie: skew && leib,
    })
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct ModPMembership {
    pub associative: bool,
    pub symmetric: bool,
    pub commutative: bool,
    pub leibniz: bool,
    pub skew: bool,
    pub lie: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{abelian, dual_numbers, leibniz2, matrix_algebra, sl2, split_etale};

    /// Brute-force oracle: compare mu(mu(a,b),c) and mu(a,mu(b,c)) on all
    /// basis triples via the multiply routine.
    fn assoc_oracle(x: &MulTable) -> Tensor3 {
        let n = x.dim();
        let e = |i: usize| {
            let mut v = vec![Rat::zero(); n];
            v[i] = Rat::one();
            v
        };
        let mut t = Tensor3::zero(n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let lhs = x
                        .multiply(&x.multiply(&e(i), &e(j)).unwrap(), &e(k))
                        .unwrap();
                    let rhs = x
                        .multiply(&e(i), &x.multiply(&e(j), &e(k)).unwrap())
                        .unwrap();
                    for m in 0..n {
                        *t.entry_mut(i, j, k, m) = &lhs[m] - &rhs[m];
                    }
                }
            }
        }
        t
    }

    fn leibniz_oracle(x: &MulTable) -> Tensor3 {
        let n = x.dim();
        let e = |i: usize| {
            let mut v = vec![Rat::zero(); n];
            v[i] = Rat::one();
            v
        };
        let mut t = Tensor3::zero(n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let ab_c = x
                        .multiply(&x.multiply(&e(i), &e(j)).unwrap(), &e(k))
                        .unwrap();
                    let ac_b = x
                        .multiply(&x.multiply(&e(i), &e(k)).unwrap(), &e(j))
                        .unwrap();
                    let a_bc = x
                        .multiply(&e(i), &x.multiply(&e(j), &e(k)).unwrap())
                        .unwrap();
                    for m in 0..n {
                        *t.entry_mut(i, j, k, m) = &(&ab_c[m] - &ac_b[m]) - &a_bc[m];
                    }
                }
            }
        }
        t
    }

    /// Two-dimensional non-associative fixture: e0*e0 = e1, e1*e0 = e0.
    fn non_associative2() -> MulTable {
        MulTable::from_triples(2, &[(0, 0, 1, Rat::one()), (1, 0, 0, Rat::one())]).unwrap()
    }

    #[test]
    fn assoc_residual_matches_oracle() {
        for x in [
            matrix_algebra(2),
            leibniz2(),
            abelian(3),
            dual_numbers(),
            sl2(),
            non_associative2(),
        ] {
            assert_eq!(assoc_residual(&x), assoc_oracle(&x));
        }
    }

    #[test]
    fn assoc_examples() {
        assert!(assoc_residual(&matrix_algebra(2)).is_zero());
        assert!(assoc_residual(&abelian(3)).is_zero());
        // leibniz2 happens to be associative: every iterated product of basis
        // elements dies, as the brute-force oracle confirms.
        assert!(assoc_residual(&leibniz2()).is_zero());
        // The dedicated 2-dim fixture is the nonzero witness.
        let t = assoc_residual(&non_associative2());
        assert!(!t.is_zero());
        assert_eq!(
            t.first_nonzero(),
            assoc_oracle(&non_associative2()).first_nonzero()
        );
    }

    #[test]
    fn leibniz_residual_matches_oracle() {
        for x in [
            matrix_algebra(2),
            leibniz2(),
            abelian(2),
            sl2(),
            non_associative2(),
        ] {
            assert_eq!(leibniz_residual(&x), leibniz_oracle(&x));
        }
    }

    #[test]
    fn leibniz_examples() {
        assert!(leibniz_residual(&leibniz2()).is_zero());
        assert!(leibniz_residual(&sl2()).is_zero());
        // The single-coefficient table c[0][0][1] = 1 satisfies the Leibniz
        // identity (every iterated basis product dies); the two-coefficient
        // fixture is a genuine witness, first violation at (0,1,0).
        let single = MulTable::from_triples(2, &[(0, 0, 1, Rat::one())]).unwrap();
        assert!(leibniz_residual(&single).is_zero());
        let t = leibniz_residual(&non_associative2());
        assert!(!t.is_zero());
        assert_eq!(t.first_nonzero(), Some((0, 1, 0, 1)));
    }

    #[test]
    fn membership_predicates() {
        assert!(is_commutative(&split_etale(3)));
        assert!(is_associative(&matrix_algebra(2)));
        assert!(!is_commutative(&matrix_algebra(2)));
        assert!(is_commutative(&dual_numbers()));
        assert!(is_lie(&sl2()));
        assert!(is_leibniz(&leibniz2()));
        assert!(!is_lie(&leibniz2()));
        assert!(is_lie(&abelian(4)));
    }

    #[test]
    fn lie_implies_leibniz() {
        for x in [sl2(), abelian(3), sl2().direct_sum(&sl2())] {
            if is_lie(&x) {
                assert!(is_leibniz(&x));
            }
        }
    }

    #[test]
    fn jacobi_on_skew_agrees_with_leibniz() {
        // On skew tables the Jacobi residual vanishes iff the Leibniz one does.
        let x = sl2();
        assert!(jacobi_residual(&x).is_zero());
        let mut bad = MulTable::zero(3);
        bad.set_c(0, 1, 2, Rat::one());
        bad.set_c(1, 0, 2, Rat::from_int(-1));
        bad.set_c(1, 2, 2, Rat::one());
        bad.set_c(2, 1, 2, Rat::from_int(-1));
        assert!(is_skew(&bad));
        assert_eq!(jacobi_residual(&bad).is_zero(), is_leibniz(&bad));
    }

    #[test]
    fn reports_name_witnesses() {
        let r = residual_report(&non_associative2(), ResidualKind::Associative);
        assert!(!r.is_member);
        assert!(r.violations > 0);
        assert!(r.witness.is_some());
        let r = residual_report(&leibniz2(), ResidualKind::Skew);
        assert_eq!(r.witness, Some(vec![1, 1, 0]));
        let ok = residual_report(&sl2(), ResidualKind::Jacobi);
        assert!(ok.is_member && ok.witness.is_none());
    }

    #[test]
    fn mod_p_membership_agrees_on_builders() {
        for x in [sl2(), leibniz2(), matrix_algebra(2), dual_numbers()] {
            let m = membership_mod_p(&x).unwrap();
            assert_eq!(m.associative, is_associative(&x));
            assert_eq!(m.leibniz, is_leibniz(&x));
            assert_eq!(m.lie, is_lie(&x));
            assert_eq!(m.commutative, is_commutative(&x));
        }
    }
}
