//! Seeded sampling helpers for the randomized property batteries, plus a
//! couple of deterministic fixtures shared by tests and the CLI.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::MulTable;
use crate::matrix::Matrix;
use crate::scalar::Rat;

/// The documented default seed for randomized checks.
pub const DEFAULT_SEED: u64 = 20240915;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small random rational with numerator in [-3, 3] and denominator in {1, 2}.
pub fn random_rat(rng: &mut ChaCha8Rng) -> Rat {
    let num = rng.random_range(-3i64..=3);
    let den = rng.random_range(1i64..=2);
    Rat::new(num, den)
}

/// Random structure-constant table with small rational entries.
pub fn random_table(rng: &mut ChaCha8Rng, n: usize) -> MulTable {
    let mut t = MulTable::zero(n);
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                t.set_c(i, j, l, random_rat(rng));
            }
        }
    }
    t
}

/// Random sparse table: roughly one nonzero coefficient in three.
pub fn random_sparse_table(rng: &mut ChaCha8Rng, n: usize) -> MulTable {
    let mut t = MulTable::zero(n);
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                if rng.random_range(0..3) == 0 {
                    t.set_c(i, j, l, random_rat(rng));
                }
            }
        }
    }
    t
}

/// Random invertible matrix with entries in [-2, 2]; retries until the
/// determinant is nonzero.
pub fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    loop {
        let m = Matrix::from_fn(n, n, |_, _| Rat::from_int(rng.random_range(-2i64..=2)));
        if !m.determinant().expect("square").is_zero() {
            return m;
        }
    }
}

/// Random 1-cochain (an arbitrary endomorphism) with small integer entries.
pub fn random_endo(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    Matrix::from_fn(n, n, |_, _| Rat::from_int(rng.random_range(-2i64..=2)))
}

/// Two-dimensional non-associative, non-Leibniz fixture:
/// `e0*e0 = e1`, `e1*e0 = e0`.
pub fn non_associative2() -> MulTable {
    MulTable::from_triples(2, &[(0, 0, 1, Rat::one()), (1, 0, 0, Rat::one())])
        .expect("indices in range")
}

/// Exact derivative at t = 0 of `t -> transport(I + t f, x)`.
///
/// Runs the transport contraction in the ring of dual numbers Q[t]/(t^2),
/// where `(I + t f)^-1 = I - t f` exactly, and returns the t-component. This
/// is an independent route against the degree-1 coboundary matrix: the
/// derivative equals `-d1 f`.
pub fn first_order_transport(x: &MulTable, f: &Matrix) -> MulTable {
    let n = x.dim();
    assert_eq!(f.nrows(), n);
    assert_eq!(f.ncols(), n);
    // Dual number (value, derivative): (a + bt)(c + dt) = ac + (ad + bc)t.
    #[derive(Clone)]
    struct Dual(Rat, Rat);
    impl Dual {
        fn mul(&self, other: &Dual) -> Dual {
            Dual(
                &self.0 * &other.0,
                &(&self.0 * &other.1) + &(&self.1 * &other.0),
            )
        }
        fn add_assign(&mut self, other: &Dual) {
            self.0 += &other.0;
            self.1 += &other.1;
        }
    }
    let g = |l: usize, r: usize| {
        Dual(
            if l == r { Rat::one() } else { Rat::zero() },
            f[(l, r)].clone(),
        )
    };
    let h = |l: usize, r: usize| {
        Dual(
            if l == r { Rat::one() } else { Rat::zero() },
            -&f[(l, r)],
        )
    };
    let mut out = MulTable::zero(n);
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                let mut acc = Dual(Rat::zero(), Rat::zero());
                for p in 0..n {
                    for q in 0..n {
                        for r in 0..n {
                            let c = x.c(p, q, r);
                            if c.is_zero() {
                                continue;
                            }
                            let term = h(p, i)
                                .mul(&h(q, j))
                                .mul(&Dual(c.clone(), Rat::zero()))
                                .mul(&g(l, r));
                            acc.add_assign(&term);
                        }
                    }
                }
                out.set_c(i, j, l, acc.1);
            }
        }
    }
    out
}
