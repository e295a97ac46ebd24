//! Exact construction and entanglement certification for the checkerboard
//! family of two-qutrit states.
//!
//! Every state is assembled from four vectors in `C³ ⊗ C³` whose supports
//! interleave in a checkerboard pattern. All arithmetic is carried out over
//! the Gaussian rationals, so determinants, inertias and Jacobian ranks are
//! exact.
//!
//! Basis convention: the two-qutrit basis vector with first-party index `a`
//! and second-party index `b` sits at position `3·a + b` (first party outer).
//! The partial transpose acts on the second party.

pub mod arith;
pub mod criteria;
pub mod family;
pub mod golden;
pub mod param_count;
pub mod ppt;
pub mod sampling;

pub use arith::{GMat, GaussRat, Inertia, Jet, Rat, RealPoly, Scalar};
pub use criteria::{ProductVector, RangeCertificate, WitnessVector};
pub use family::{CheckerParams, QuadForm, StateMatrix};
pub use ppt::{BrussPeresParams, SubfamilyParams};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is not Hermitian")]
    NotHermitian,
    #[error("matrix does not have the checkerboard pattern")]
    NotCheckerboard,
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("singular parameters: denominator {0} vanishes")]
    Singular(&'static str),
    #[error("parameter {0} must be real")]
    NotReal(&'static str),
}
