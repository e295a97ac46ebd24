//! The 18-parameter checkerboard family: state construction and the
//! range-criterion certificate for entanglement.

use crate::arith::{GMat, GaussRat, Rat, Scalar};
use crate::Error;

/// Dimension of the two-qutrit space.
pub const DIM: usize = 9;

/// Position of the basis vector with first-party index `a` and second-party
/// index `b`. The first party is the outer (slow) index.
pub const fn position(a: usize, b: usize) -> usize {
    3 * a + b
}

/// Positions carrying the 4×4 block (supports of v₂ and v₄): g, f, i, h.
pub const ODD_BLOCK: [usize; 4] = [1, 3, 5, 7];
/// Positions carrying the 5×5 block (supports of v₁ and v₃): a, d, c, b, e.
pub const EVEN_BLOCK: [usize; 5] = [0, 2, 4, 6, 8];

/// The eighteen complex parameters. There is no `o`.
#[derive(Clone, Debug, PartialEq)]
pub struct CheckerParams<S = GaussRat> {
    pub a: S,
    pub b: S,
    pub c: S,
    pub d: S,
    pub e: S,
    pub f: S,
    pub g: S,
    pub h: S,
    pub i: S,
    pub j: S,
    pub k: S,
    pub l: S,
    pub m: S,
    pub n: S,
    pub p: S,
    pub q: S,
    pub r: S,
    pub s: S,
}

impl<S> CheckerParams<S> {
    pub const NAMES: [&'static str; 18] = [
        "a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l", "m", "n", "p", "q", "r", "s",
    ];

    pub fn from_array(v: [S; 18]) -> Self {
        let [a, b, c, d, e, f, g, h, i, j, k, l, m, n, p, q, r, s] = v;
        CheckerParams { a, b, c, d, e, f, g, h, i, j, k, l, m, n, p, q, r, s }
    }

    pub fn into_array(self) -> [S; 18] {
        let CheckerParams { a, b, c, d, e, f, g, h, i, j, k, l, m, n, p, q, r, s } = self;
        [a, b, c, d, e, f, g, h, i, j, k, l, m, n, p, q, r, s]
    }

    pub fn as_array(&self) -> [&S; 18] {
        let CheckerParams { a, b, c, d, e, f, g, h, i, j, k, l, m, n, p, q, r, s } = self;
        [a, b, c, d, e, f, g, h, i, j, k, l, m, n, p, q, r, s]
    }

    pub fn map<T>(&self, f: impl FnMut(&S) -> T) -> CheckerParams<T> {
        CheckerParams::from_array(self.as_array().map(f))
    }
}

impl CheckerParams<GaussRat> {
    pub fn zero() -> Self {
        CheckerParams::from_array(std::array::from_fn(|_| GaussRat::zero()))
    }

    /// Integer parameters given as `(re, im)` pairs in alphabetical order.
    pub fn from_int_pairs(v: [(i64, i64); 18]) -> Self {
        CheckerParams::from_array(v.map(|(re, im)| GaussRat::from_ints(re, im)))
    }

    pub fn is_zero(&self) -> bool {
        self.as_array().iter().all(|z| z.is_zero())
    }
}

/// The four spanning vectors v₁..v₄ in matrix order.
///
/// Components are listed with labels `00,10,20;01,11,21;02,12,22`, the label
/// `xy` meaning first-party index `x` and second-party index `y`; each is
/// placed at [`position`]`(x, y)`. So v₁ = (a,0,b;0,c,0;d,0,e) lands as
/// `[a,0,d,0,c,0,b,0,e]`.
pub fn build_vectors<S: Scalar>(p: &CheckerParams<S>) -> [[S; DIM]; 4] {
    let place = |listed: [&S; 9]| -> [S; DIM] {
        let zero = p.a.zero_like();
        let mut out: [S; DIM] = std::array::from_fn(|_| zero.clone());
        for (slot, z) in listed.into_iter().enumerate() {
            // slot = 3·y + x for label xy
            out[position(slot % 3, slot / 3)] = z.clone();
        }
        out
    };
    let z = p.a.zero_like();
    let z = &z;
    [
        place([&p.a, z, &p.b, z, &p.c, z, &p.d, z, &p.e]),
        place([z, &p.f, z, &p.g, z, &p.h, z, &p.i, z]),
        place([&p.j, z, &p.k, z, &p.l, z, &p.m, z, &p.n]),
        place([z, &p.p, z, &p.q, z, &p.r, z, &p.s, z]),
    ]
}

/// Row-major entries of `Σⱼ |vⱼ⟩⟨vⱼ|`, skipping the structurally zero
/// positions.
pub fn unnormalized_entries<S: Scalar>(p: &CheckerParams<S>) -> Vec<S> {
    let vs = build_vectors(p);
    let zero = p.a.zero_like();
    let mut out = Vec::with_capacity(DIM * DIM);
    for row in 0..DIM {
        for col in 0..DIM {
            if (row + col) % 2 == 1 {
                out.push(zero.clone());
                continue;
            }
            // Only two of the four vectors are supported on each parity class.
            let (u, w) = if row % 2 == 0 { (&vs[0], &vs[2]) } else { (&vs[1], &vs[3]) };
            out.push(u[row].clone() * u[col].conj() + w[row].clone() * w[col].conj());
        }
    }
    out
}

/// A checkerboard state stored as `N·ρ` together with `N`.
#[derive(Clone, Debug, PartialEq)]
pub struct StateMatrix {
    pub unnormalized: GMat,
    pub normalizer: Rat,
}

impl StateMatrix {
    /// Wraps a Hermitian matrix with positive real trace.
    pub fn from_unnormalized(m: GMat) -> Result<Self, Error> {
        if m.rows() != DIM || m.cols() != DIM {
            return Err(Error::Dimension(format!("expected 9x9, got {}x{}", m.rows(), m.cols())));
        }
        if !m.is_hermitian() {
            return Err(Error::NotHermitian);
        }
        let t = m.trace().re;
        if t <= Rat::from_integer(0.into()) {
            return Err(Error::Degenerate("trace must be positive".into()));
        }
        Ok(StateMatrix { unnormalized: m, normalizer: t })
    }

    /// ρ itself, with unit trace.
    pub fn normalized(&self) -> GMat {
        self.unnormalized.scale(&self.normalizer.recip())
    }

    pub fn rank(&self) -> usize {
        self.unnormalized.rank()
    }
}

pub fn build_state(p: &CheckerParams) -> Result<StateMatrix, Error> {
    if p.is_zero() {
        return Err(Error::Degenerate("all parameters are zero".into()));
    }
    let m = GMat::from_vec(DIM, DIM, unnormalized_entries(p))?;
    let normalizer = build_vectors(p)
        .iter()
        .flat_map(|v| v.iter().map(GaussRat::norm_sqr))
        .sum();
    Ok(StateMatrix { unnormalized: m, normalizer })
}

/// Whether every entry with odd index sum vanishes.
pub fn is_checkerboard(m: &GMat) -> bool {
    (0..m.rows()).all(|r| (0..m.cols()).all(|c| (r + c) % 2 == 0 || m[(r, c)].is_zero()))
}

/// Binary quadratic form `F(x, y) = c20·x² + c11·xy + c02·y²`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadForm {
    pub c20: GaussRat,
    pub c11: GaussRat,
    pub c02: GaussRat,
}

impl QuadForm {
    pub fn eval(&self, x: &GaussRat, y: &GaussRat) -> GaussRat {
        &(&(&self.c20 * &(x * x)) + &(&self.c11 * &(x * y))) + &(&self.c02 * &(y * y))
    }
}

/// The form whose vanishing is forced on (A₁, A₃) by a product vector in
/// the span of v₁ and v₃.
pub fn quad_form_f(p: &CheckerParams) -> QuadForm {
    QuadForm {
        c20: &p.a * &p.e - &p.b * &p.d,
        c11: &(&(&p.a * &p.n) + &(&p.e * &p.j)) - &(&(&p.b * &p.m) + &(&p.d * &p.k)),
        c02: &p.j * &p.n - &p.k * &p.m,
    }
}

/// The coefficients (λ, μ) of the second linear factor.
pub fn lambda_mu(p: &CheckerParams) -> (GaussRat, GaussRat) {
    let lam = &p.a * &(&p.h * &p.s - &p.i * &p.r)
        + &p.b * &(&p.i * &p.q - &p.g * &p.s)
        + &p.d * &(&p.f * &p.r - &p.h * &p.p)
        + &p.e * &(&p.g * &p.p - &p.f * &p.q);
    let mu = &p.f * &(&p.m * &p.r - &p.n * &p.q)
        + &p.g * &(&p.n * &p.p - &p.k * &p.s)
        + &p.h * &(&p.j * &p.s - &p.m * &p.p)
        + &p.i * &(&p.k * &p.q - &p.j * &p.r);
    (lam, mu)
}

/// The product `(fs−ip)(gr−hq)·F(l,−c)·F(μ,−λ)`.
pub fn theorem1_product(p: &CheckerParams) -> GaussRat {
    let form = quad_form_f(p);
    let (lam, mu) = lambda_mu(p);
    let fs_ip = &p.f * &p.s - &p.i * &p.p;
    let gr_hq = &p.g * &p.r - &p.h * &p.q;
    fs_ip * gr_hq * form.eval(&p.l, &-&p.c) * form.eval(&mu, &-&lam)
}

/// Sufficient condition for the span of v₁..v₄ to contain no product
/// vector; when it holds the state is entangled. Failure decides nothing.
pub fn theorem1_generic(p: &CheckerParams) -> bool {
    !theorem1_product(p).is_zero()
}

/// Splits a checkerboard matrix into its 4×4 and 5×5 diagonal blocks.
pub fn checkerboard_split(m: &GMat) -> Result<(GMat, GMat), Error> {
    if m.rows() != DIM || m.cols() != DIM {
        return Err(Error::Dimension(format!("expected 9x9, got {}x{}", m.rows(), m.cols())));
    }
    if !is_checkerboard(m) {
        return Err(Error::NotCheckerboard);
    }
    Ok((m.select(&ODD_BLOCK, &ODD_BLOCK), m.select(&EVEN_BLOCK, &EVEN_BLOCK)))
}

/// Inverse of [`checkerboard_split`].
pub fn checkerboard_assemble(odd: &GMat, even: &GMat) -> GMat {
    let mut m = GMat::zeros(DIM, DIM);
    for (blk, idx) in [(odd, &ODD_BLOCK[..]), (even, &EVEN_BLOCK[..])] {
        for (r, &pr) in idx.iter().enumerate() {
            for (c, &pc) in idx.iter().enumerate() {
                m[(pr, pc)] = blk[(r, c)].clone();
            }
        }
    }
    m
}

/// Closed-form kernel of the 4×4 block, one basis vector per column.
pub fn odd_block_kernel(p: &CheckerParams) -> GMat {
    let conj = |z: GaussRat| z.conj();
    let fs_ip = conj(&p.f * &p.s - &p.i * &p.p);
    let iq_sg = conj(&p.i * &p.q - &p.s * &p.g);
    let gp_fq = conj(&p.g * &p.p - &p.f * &p.q);
    let fr_hp = conj(&p.f * &p.r - &p.h * &p.p);
    let hq_gr = conj(&p.h * &p.q - &p.g * &p.r);
    GMat::from_rows(vec![
        vec![fs_ip, fr_hp],
        vec![iq_sg, hq_gr],
        vec![gp_fq.clone(), GaussRat::zero()],
        vec![GaussRat::zero(), gp_fq],
    ])
    .expect("4x2")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::golden;

    #[test]
    fn zero_params() {
        let p = CheckerParams::zero();
        for v in build_vectors(&p) {
            assert!(v.iter().all(GaussRat::is_zero));
        }
        assert!(matches!(build_state(&p), Err(Error::Degenerate(_))));
        let form = quad_form_f(&p);
        assert!(form.c20.is_zero() && form.c11.is_zero() && form.c02.is_zero());
        assert_eq!(lambda_mu(&p), (GaussRat::zero(), GaussRat::zero()));
        assert!(!theorem1_generic(&p));
    }

    #[test]
    fn first_vector_of_rho1() {
        let v = build_vectors(&golden::rho1_params());
        // b = d, so listing order and matrix order coincide here.
        let expect = [(0, 0), (0, 0), (-1, 1), (0, 0), (-1, -1), (0, 0), (-1, 1), (0, 0), (1, -1)];
        let expect: Vec<GaussRat> = expect.iter().map(|&(a, b)| GaussRat::from_ints(a, b)).collect();
        assert_eq!(v[0].to_vec(), expect);
    }

    #[test]
    fn elementary_state() {
        let mut p = CheckerParams::zero();
        p.a = GaussRat::one();
        let s = build_state(&p).unwrap();
        let mut e11 = GMat::zeros(DIM, DIM);
        e11[(0, 0)] = GaussRat::one();
        assert_eq!(s.unnormalized, e11);
        assert_eq!(s.normalizer, Rat::from_integer(1.into()));
    }

    #[test]
    fn quad_form_of_rho1() {
        let form = quad_form_f(&golden::rho1_params());
        assert_eq!(form.c20, GaussRat::from_ints(0, 2));
        assert!(form.eval(&GaussRat::zero(), &GaussRat::zero()).is_zero());
    }

    #[test]
    fn golden_examples_are_generic() {
        assert!(theorem1_generic(&golden::rho1_params()));
        assert!(theorem1_generic(&golden::rho2_params()));
        let (l, m) = lambda_mu(&golden::rho1_params());
        assert!(!l.is_zero() || !m.is_zero());
    }

    #[test]
    fn split_of_rho2() {
        let s = build_state(&golden::rho2_params()).unwrap();
        let (odd, even) = checkerboard_split(&s.unnormalized).unwrap();
        assert_eq!(odd[(0, 0)], GaussRat::from_ints(2, 0));
        assert_eq!(even[(0, 0)], GaussRat::from_ints(2, 0));
        assert_eq!(checkerboard_assemble(&odd, &even), s.unnormalized);
    }

    #[test]
    fn split_of_diagonal() {
        let d: Vec<GaussRat> = (1..=9).map(|k| GaussRat::from_ints(k, 0)).collect();
        let m = GMat::diagonal(&d);
        let (odd, even) = checkerboard_split(&m).unwrap();
        let pick = |idx: &[usize]| GMat::diagonal(&idx.iter().map(|&k| d[k].clone()).collect::<Vec<_>>());
        assert_eq!(odd, pick(&ODD_BLOCK));
        assert_eq!(even, pick(&EVEN_BLOCK));
    }

    #[test]
    fn split_rejects_non_checkerboard() {
        let mut m = GMat::identity(DIM);
        m[(0, 1)] = GaussRat::one();
        m[(1, 0)] = GaussRat::one();
        assert_eq!(checkerboard_split(&m), Err(Error::NotCheckerboard));
    }
}
