//! Separability tests: partial transpose, the reduction criterion, Schmidt
//! rank, the single-copy distillability witness and the range certificate.

mod numeric;

pub use numeric::{
    min_product_residual, search_product_vector_numeric, NumericProductVector, NumericSearch,
};

use crate::arith::{GMat, GaussRat, Inertia};
use crate::family::{position, theorem1_generic, CheckerParams, StateMatrix, DIM};
use crate::Error;

/// Transpose on the second party. Any 9×9 matrix is accepted.
pub fn partial_transpose(m: &GMat) -> GMat {
    assert_eq!((m.rows(), m.cols()), (DIM, DIM), "partial transpose needs a 9x9 matrix");
    let mut out = GMat::zeros(DIM, DIM);
    for a in 0..3 {
        for b in 0..3 {
            for a2 in 0..3 {
                for b2 in 0..3 {
                    out[(position(a, b), position(a2, b2))] =
                        m[(position(a, b2), position(a2, b))].clone();
                }
            }
        }
    }
    out
}

impl StateMatrix {
    /// ρ^Γ with unit trace.
    pub fn partial_transpose(&self) -> GMat {
        partial_transpose(&self.normalized())
    }

    /// Whether ρ^Γ = ρ exactly.
    pub fn is_gamma_fixed(&self) -> bool {
        partial_transpose(&self.unnormalized) == self.unnormalized
    }
}

/// PPT test with the inertia of ρ^Γ.
pub fn is_ppt(s: &StateMatrix) -> (bool, Inertia) {
    // N > 0, so N·ρ^Γ has the same inertia as ρ^Γ.
    let inertia = partial_transpose(&s.unnormalized)
        .inertia()
        .expect("partial transpose of a Hermitian matrix is Hermitian");
    (inertia.is_psd(), inertia)
}

/// Reduced density matrices `(ρ_A, ρ_B)`, each with unit trace.
pub fn reduced_states(s: &StateMatrix) -> (GMat, GMat) {
    let (ra, rb) = partial_traces(&s.unnormalized);
    let k = s.normalizer.recip();
    (ra.scale(&k), rb.scale(&k))
}

/// Traces over the second and over the first party, unscaled.
fn partial_traces(m: &GMat) -> (GMat, GMat) {
    let mut ra = GMat::zeros(3, 3);
    let mut rb = GMat::zeros(3, 3);
    for x in 0..3 {
        for y in 0..3 {
            for k in 0..3 {
                ra[(x, y)] += &m[(position(x, k), position(y, k))];
                rb[(x, y)] += &m[(position(k, x), position(k, y))];
            }
        }
    }
    (ra, rb)
}

/// The two operators `ρ_A⊗1 − ρ` and `1⊗ρ_B − ρ`, both scaled by N.
pub fn reduction_operators(s: &StateMatrix) -> (GMat, GMat) {
    let (ra, rb) = partial_traces(&s.unnormalized);
    let id = GMat::identity(3);
    (&ra.kron(&id) - &s.unnormalized, &id.kron(&rb) - &s.unnormalized)
}

/// `true` when the reduction criterion is violated, which certifies both
/// entanglement and distillability.
pub fn reduction_criterion(s: &StateMatrix) -> bool {
    let (left, right) = reduction_operators(s);
    [left, right]
        .iter()
        .any(|op| op.inertia().expect("Hermitian").n_neg > 0)
}

/// `α⊗δ` with α on the first party.
#[derive(Clone, Debug, PartialEq)]
pub struct ProductVector {
    pub factor_a: [GaussRat; 3],
    pub factor_b: [GaussRat; 3],
}

impl ProductVector {
    pub fn to_vector(&self) -> Vec<GaussRat> {
        let mut v = vec![GaussRat::zero(); DIM];
        for (x, alpha) in self.factor_a.iter().enumerate() {
            for (y, delta) in self.factor_b.iter().enumerate() {
                v[position(x, y)] = alpha * delta;
            }
        }
        v
    }
}

/// A two-qutrit vector used as a distillability witness.
#[derive(Clone, Debug, PartialEq)]
pub struct WitnessVector {
    pub components: Vec<GaussRat>,
}

impl WitnessVector {
    pub fn new(components: Vec<GaussRat>) -> Result<Self, Error> {
        if components.len() != DIM {
            return Err(Error::Dimension(format!(
                "witness needs {DIM} components, got {}",
                components.len()
            )));
        }
        Ok(WitnessVector { components })
    }

    /// `Σ φ_A ⊗ φ_B` over the given pairs.
    pub fn from_terms(terms: &[([GaussRat; 3], [GaussRat; 3])]) -> Self {
        let mut components = vec![GaussRat::zero(); DIM];
        for (fa, fb) in terms {
            let pv = ProductVector { factor_a: fa.clone(), factor_b: fb.clone() };
            for (acc, z) in components.iter_mut().zip(pv.to_vector()) {
                *acc += &z;
            }
        }
        WitnessVector { components }
    }

    /// 3×3 coefficient matrix, rows indexed by the first party.
    pub fn coefficient_matrix(&self) -> GMat {
        let mut m = GMat::zeros(3, 3);
        for x in 0..3 {
            for y in 0..3 {
                m[(x, y)] = self.components[position(x, y)].clone();
            }
        }
        m
    }
}

pub fn schmidt_rank(w: &WitnessVector) -> Result<usize, Error> {
    if w.components.iter().all(GaussRat::is_zero) {
        return Err(Error::Degenerate("zero witness vector".into()));
    }
    Ok(w.coefficient_matrix().rank())
}

/// `⟨w|ρ^Γ|w⟩` for the normalized ρ and `w` as given.
pub fn witness_expectation(s: &StateMatrix, w: &WitnessVector) -> GaussRat {
    partial_transpose(&s.unnormalized)
        .sandwich(&w.components, &w.components)
        .scale(&s.normalizer.recip())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RangeCertificate {
    /// The span of v₁..v₄ provably contains no product vector.
    NoProductVector,
    /// The algebraic condition fails; nothing is decided.
    Undecided,
}

pub fn range_product_vector_certificate(p: &CheckerParams) -> RangeCertificate {
    if theorem1_generic(p) {
        RangeCertificate::NoProductVector
    } else {
        RangeCertificate::Undecided
    }
}
