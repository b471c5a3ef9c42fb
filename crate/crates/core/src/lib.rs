//! Exact-arithmetic tools for finite-dimensional algebras given by structure
//! constants.
//!
//! A bilinear product on an `n`-dimensional space is a point of the affine
//! space of structure constants ([`MulTable`]). This crate decides membership
//! in the associative / commutative / Leibniz / Lie varieties, computes the
//! matching deformation cohomology in degree <= 2 (Hochschild, Harrison,
//! Leibniz, Chevalley-Eilenberg), evaluates the principal trace form and the
//! Killing form of right multiplications, and derives rigidity verdicts at the
//! tangent level. Everything runs over exact rationals; a fixed prime field is
//! used internally to pre-screen large rank computations, never as the source
//! of a final verdict.

pub mod algebra;
pub mod cohomology;
pub mod counting;
pub mod equivariance;
pub mod forms;
pub mod identities;
pub mod incidence;
pub mod matrix;
pub mod moduli;
pub mod report;
pub mod sample;
pub mod scalar;

pub use algebra::{MulTable, Tensor3};
pub use matrix::Matrix;
pub use scalar::Rat;


/// Errors shared across the crate.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("input is not {variety}: residual nonzero at coordinate {witness:?}")]
    OffVariety {
        variety: &'static str,
        witness: Vec<usize>,
    },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
