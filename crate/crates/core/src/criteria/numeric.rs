//! Floating-point search for a product vector in the span of v₁..v₄.
//!
//! This is an independent oracle for the exact certificate, never a
//! replacement for it. Each attempt starts from a random second-party factor
//! and alternates exact minimisations: for a fixed factor on one party the
//! squared distance of the unit product vector from the span is a 3×3
//! Hermitian quadratic form in the other factor, minimised by its lowest
//! eigenvector.

use nalgebra::{DMatrix, DVector, Matrix3, Vector3};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::family::{build_vectors, position, CheckerParams, DIM};

#[derive(Clone, Debug, PartialEq)]
pub struct NumericSearch {
    pub attempts: usize,
    /// Threshold on the squared residual.
    pub tolerance: f64,
    pub seed: u64,
    pub max_sweeps: usize,
}

impl Default for NumericSearch {
    fn default() -> Self {
        NumericSearch { attempts: 200, tolerance: 1e-8, seed: 0x5eed_c4ec, max_sweeps: 400 }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct NumericProductVector {
    pub factor_a: [Complex64; 3],
    pub factor_b: [Complex64; 3],
    /// Squared distance of the unit product vector from the span.
    pub residual: f64,
    pub attempt: usize,
}

/// Orthonormal basis of the span of v₁..v₄, as columns.
fn range_basis(p: &CheckerParams) -> DMatrix<Complex64> {
    let mut basis: Vec<DVector<Complex64>> = Vec::new();
    for v in build_vectors(p) {
        let mut w = DVector::from_iterator(
            DIM,
            v.iter().map(|z| {
                let (re, im) = z.to_f64_pair();
                Complex64::new(re, im)
            }),
        );
        // two passes of modified Gram–Schmidt
        for _ in 0..2 {
            for b in &basis {
                let c = b.dotc(&w);
                w -= b * c;
            }
        }
        let n = w.norm();
        if n > 1e-12 {
            basis.push(w / Complex64::new(n, 0.0));
        }
    }
    if basis.is_empty() {
        DMatrix::zeros(DIM, 0)
    } else {
        DMatrix::from_columns(&basis)
    }
}

fn kron(a: &Vector3<Complex64>, b: &Vector3<Complex64>) -> DVector<Complex64> {
    let mut v = DVector::zeros(DIM);
    for x in 0..3 {
        for y in 0..3 {
            v[position(x, y)] = a[x] * b[y];
        }
    }
    v
}

/// Lowest eigenpair of a 3×3 Hermitian matrix.
fn lowest(q: Matrix3<Complex64>) -> (f64, Vector3<Complex64>) {
    let eig = q.symmetric_eigen();
    let (k, lam) = eig
        .eigenvalues
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .map(|(k, &l)| (k, l))
        .expect("3 eigenvalues");
    (lam, eig.eigenvectors.column(k).into_owned())
}

fn random_unit(rng: &mut ChaCha8Rng) -> Vector3<Complex64> {
    let v = Vector3::from_fn(|_, _| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
    let n = v.norm();
    if n < 1e-6 {
        Vector3::new(Complex64::new(1.0, 0.0), Complex64::default(), Complex64::default())
    } else {
        v / Complex64::new(n, 0.0)
    }
}

/// Quadratic form of the squared residual restricted to one factor.
/// `fix_first` selects whether the first-party factor is held fixed.
fn restricted_form(
    proj: &DMatrix<Complex64>,
    fixed: &Vector3<Complex64>,
    fix_first: bool,
) -> Matrix3<Complex64> {
    // K maps the free factor into C⁹; columns are fixed ⊗ e_k or e_k ⊗ fixed.
    let mut k = DMatrix::<Complex64>::zeros(DIM, 3);
    for free in 0..3 {
        for other in 0..3 {
            let pos = if fix_first { position(other, free) } else { position(free, other) };
            k[(pos, free)] = fixed[other];
        }
    }
    let q = k.adjoint() * proj * &k;
    let q = (q.clone() + q.adjoint()) * Complex64::new(0.5, 0.0);
    Matrix3::from_fn(|r, c| q[(r, c)])
}

fn run_attempt(proj: &DMatrix<Complex64>, rng: &mut ChaCha8Rng, sweeps: usize) -> (f64, Vector3<Complex64>, Vector3<Complex64>) {
    let mut b = random_unit(rng);
    let mut a = b;
    let mut res = f64::INFINITY;
    for _ in 0..sweeps.max(1) {
        a = lowest(restricted_form(proj, &b, false)).1;
        let (r, nb) = lowest(restricted_form(proj, &a, true));
        b = nb;
        let improved = res - r;
        res = r;
        if r < 1e-15 || improved.abs() < 1e-16 {
            break;
        }
    }
    // recompute directly for a clean value
    let v = kron(&a, &b);
    let res = (v.adjoint() * proj * &v)[(0, 0)].re.max(0.0);
    (res, a, b)
}

/// Best product vector found over all attempts, whatever its residual.
pub fn min_product_residual(p: &CheckerParams, cfg: &NumericSearch) -> NumericProductVector {
    let basis = range_basis(p);
    let proj = DMatrix::<Complex64>::identity(DIM, DIM) - &basis * basis.adjoint();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut best: Option<NumericProductVector> = None;
    for attempt in 0..cfg.attempts.max(1) {
        let (residual, a, b) = run_attempt(&proj, &mut rng, cfg.max_sweeps);
        // strict comparison keeps the earliest attempt on ties
        if best.as_ref().is_none_or(|cur| residual < cur.residual) {
            best = Some(NumericProductVector {
                factor_a: [a[0], a[1], a[2]],
                factor_b: [b[0], b[1], b[2]],
                residual,
                attempt,
            });
        }
        if residual == 0.0 {
            break;
        }
    }
    best.expect("at least one attempt")
}

/// A product vector within `tolerance` of the span, if one is found.
pub fn search_product_vector_numeric(
    p: &CheckerParams,
    cfg: &NumericSearch,
) -> Option<NumericProductVector> {
    Some(min_product_residual(p, cfg)).filter(|v| v.residual < cfg.tolerance)
}
