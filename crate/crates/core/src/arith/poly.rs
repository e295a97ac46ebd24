//! Characteristic polynomials and exact eigenvalue sign counts.
//!
//! A Hermitian matrix has only real eigenvalues, so its characteristic
//! polynomial splits over the reals and the inertia can be read off by
//! counting real roots on each side of zero. Root multiplicities are handled
//! by a square-free factorisation; each square-free factor is counted with a
//! Sturm chain and weighted by its multiplicity.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::matrix::GaussInt;
use super::{GMat, Rat};
use crate::Error;

/// Univariate polynomial with rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealPoly {
    coeffs: Vec<Rat>,
}

impl RealPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RealPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        RealPoly::new(coeffs.iter().map(|&c| Rat::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        RealPoly { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs.iter().rev().fold(Rat::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> RealPoly {
        RealPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rat::from_integer(k.into()))
                .collect(),
        )
    }

    /// Positive multiple with coprime integer coefficients. Signs, roots
    /// and Sturm sign patterns are unchanged.
    fn primitive(&self) -> RealPoly {
        use num_integer::Integer;
        if self.is_zero() {
            return RealPoly::zero();
        }
        let den = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c.numer()));
        let k = Rat::new(den, num);
        RealPoly::new(self.coeffs.iter().map(|c| c * &k).collect())
    }

    fn monic(&self) -> RealPoly {
        match self.leading() {
            Some(lc) => RealPoly::new(self.coeffs.iter().map(|c| c / lc).collect()),
            None => RealPoly::zero(),
        }
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &RealPoly) -> (RealPoly, RealPoly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lc = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let shift = rem.len() - 1 - dd;
            let f = rem.last().unwrap() / lc;
            for (k, c) in divisor.coeffs.iter().enumerate() {
                rem[shift + k] -= &f * c;
            }
            quot[shift] = f;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (RealPoly::new(quot), RealPoly::new(rem))
    }

    pub fn gcd(&self, other: &RealPoly) -> RealPoly {
        let (mut a, mut b) = (self.primitive(), other.primitive());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r.primitive();
        }
        a.monic()
    }

    /// Multiplicity of the root `0`.
    pub fn zero_root_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Square-free factorisation (Yun): returns `(factor, multiplicity)`
    /// pairs with non-constant, pairwise coprime, square-free factors.
    pub fn squarefree_factors(&self) -> Vec<(RealPoly, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let d = self.derivative();
        let a0 = self.gcd(&d);
        let mut b = self.div_rem(&a0).0;
        let mut c = d.div_rem(&a0).0;
        let mut dd = &c - &b.derivative();
        let mut k = 1;
        loop {
            let a = b.gcd(&dd);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), k));
            }
            b = b.div_rem(&a).0;
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            c = dd.div_rem(&a).0;
            dd = &c - &b.derivative();
            k += 1;
        }
        out
    }

    /// Sturm chain `p, p', -rem(p, p'), …`.
    pub fn sturm_chain(&self) -> Vec<RealPoly> {
        let mut chain = vec![self.clone()];
        if self.is_zero() {
            return chain;
        }
        let mut next = self.derivative().primitive();
        while !next.is_zero() {
            let r = chain.last().unwrap().div_rem(&next).1;
            chain.push(next);
            next = (-&r).primitive();
        }
        chain
    }

    /// Number of distinct real roots in the open interval `(lo, hi)`,
    /// with `None` standing for an infinite endpoint. Endpoints must not
    /// be roots.
    pub fn count_distinct_roots(&self, lo: Option<&Rat>, hi: Option<&Rat>) -> usize {
        let chain = self.sturm_chain();
        let at_lo = sign_changes(&chain, lo, false);
        let at_hi = sign_changes(&chain, hi, true);
        at_lo.saturating_sub(at_hi)
    }
}

fn sign_at(p: &RealPoly, x: Option<&Rat>, plus_infinity: bool) -> i8 {
    let s = match x {
        Some(x) => p.eval(x),
        None => {
            let lc = p.leading().cloned().unwrap_or_else(Rat::zero);
            let odd = p.degree().unwrap_or(0) % 2 == 1;
            if !plus_infinity && odd {
                -lc
            } else {
                lc
            }
        }
    };
    if s.is_positive() {
        1
    } else if s.is_negative() {
        -1
    } else {
        0
    }
}

fn sign_changes(chain: &[RealPoly], x: Option<&Rat>, plus_infinity: bool) -> usize {
    let signs: Vec<i8> = chain
        .iter()
        .map(|p| sign_at(p, x, plus_infinity))
        .filter(|&s| s != 0)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

impl std::ops::Sub for &RealPoly {
    type Output = RealPoly;
    fn sub(self, rhs: &RealPoly) -> RealPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let z = Rat::zero();
        RealPoly::new(
            (0..n)
                .map(|k| self.coeffs.get(k).unwrap_or(&z) - rhs.coeffs.get(k).unwrap_or(&z))
                .collect(),
        )
    }
}

impl std::ops::Neg for &RealPoly {
    type Output = RealPoly;
    fn neg(self) -> RealPoly {
        RealPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Eigenvalue sign counts of a Hermitian matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Inertia {
    pub n_neg: usize,
    pub n_zero: usize,
    pub n_pos: usize,
}

impl Inertia {
    pub fn dim(&self) -> usize {
        self.n_neg + self.n_zero + self.n_pos
    }

    pub fn is_psd(&self) -> bool {
        self.n_neg == 0
    }

    pub fn is_positive_definite(&self) -> bool {
        self.n_neg == 0 && self.n_zero == 0
    }
}

impl std::fmt::Display for Inertia {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.n_neg, self.n_zero, self.n_pos)
    }
}

impl GMat {
    fn require_hermitian(&self) -> Result<(), Error> {
        if !self.is_square() {
            return Err(Error::Dimension(format!(
                "expected a square matrix, got {}x{}",
                self.rows(),
                self.cols()
            )));
        }
        if !self.is_hermitian() {
            return Err(Error::NotHermitian);
        }
        Ok(())
    }

    /// Coefficients of `det(λI − M)`.
    pub fn char_poly(&self) -> Result<RealPoly, Error> {
        self.require_hermitian()?;
        let (lift, coeffs) = self.lifted_char_poly();
        // det(λI − D·M) = Dⁿ det((λ/D)I − M), so c_k(M) = c_k(D·M) / D^(n−k)
        let n = self.rows();
        let mut scale = BigInt::one();
        let mut out = vec![Rat::zero(); n + 1];
        for k in (0..=n).rev() {
            out[k] = Rat::new(coeffs[k].clone(), scale.clone());
            scale *= &lift;
        }
        Ok(RealPoly::new(out))
    }

    /// Faddeev–LeVerrier over Z[i] for `D·M`, with `D` the common
    /// denominator. Every division by `k` is exact for an integer matrix.
    fn lifted_char_poly(&self) -> (BigInt, Vec<BigInt>) {
        let n = self.rows();
        let (lift, a) = self.integer_lift();
        let mul = |x: &[GaussInt], y: &[GaussInt]| -> Vec<GaussInt> {
            (0..n * n)
                .map(|rc| {
                    let (r, c) = (rc / n, rc % n);
                    (0..n).fold(GaussInt::zero(), |acc, k| acc.add(&x[r * n + k].mul(&y[k * n + c])))
                })
                .collect()
        };
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        let mut m = vec![GaussInt::zero(); n * n];
        for k in 1..=n {
            // M_k = A M_{k-1} + c_{n-k+1} I ; c_{n-k} = -tr(A M_k) / k
            m = mul(&a, &m);
            for d in 0..n {
                m[d * n + d].re += &coeffs[n - k + 1];
            }
            let am = mul(&a, &m);
            let (tr_re, tr_im) = (0..n).fold((BigInt::zero(), BigInt::zero()), |(re, im), d| {
                (re + &am[d * n + d].re, im + &am[d * n + d].im)
            });
            debug_assert!(tr_im.is_zero(), "Hermitian characteristic polynomial must be real");
            let k = BigInt::from(k);
            debug_assert!((&tr_re % &k).is_zero());
            coeffs[n - k.to_usize().unwrap()] = -(tr_re / &k);
        }
        (lift, coeffs)
    }

    /// Exact inertia of a Hermitian matrix.
    pub fn inertia(&self) -> Result<Inertia, Error> {
        self.require_hermitian()?;
        // D·M has the same eigenvalue signs as M and an integer polynomial
        let p = RealPoly::new(self.lifted_char_poly().1.into_iter().map(Rat::from_integer).collect());
        let n_zero = p.zero_root_multiplicity();
        let q = RealPoly::new(p.coeffs()[n_zero..].to_vec());
        let zero = Rat::zero();
        let (mut n_neg, mut n_pos) = (0, 0);
        for (factor, mult) in q.squarefree_factors() {
            n_neg += mult * factor.count_distinct_roots(None, Some(&zero));
            n_pos += mult * factor.count_distinct_roots(Some(&zero), None);
        }
        let inertia = Inertia { n_neg, n_zero, n_pos };
        debug_assert_eq!(inertia.dim(), self.rows());
        Ok(inertia)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::GaussRat;

    fn r(n: i64) -> Rat {
        Rat::from_integer(n.into())
    }

    #[test]
    fn char_poly_small_cases() {
        let m = GMat::diagonal(&[GaussRat::from_ints(5, 0)]);
        assert_eq!(m.char_poly().unwrap(), RealPoly::from_ints(&[-5, 1]));
        assert_eq!(GMat::identity(3).char_poly().unwrap(), RealPoly::from_ints(&[-1, 3, -3, 1]));
    }

    #[test]
    fn non_hermitian_rejected() {
        let m = GMat::from_int_pairs(&[&[(0, 0), (1, 0)], &[(2, 0), (0, 0)]]).unwrap();
        assert!(matches!(m.char_poly(), Err(Error::NotHermitian)));
        assert!(matches!(m.inertia(), Err(Error::NotHermitian)));
    }

    #[test]
    fn inertia_of_diagonal() {
        let m = GMat::diagonal(&[GaussRat::from_ints(1, 0), GaussRat::from_ints(-1, 0), GaussRat::zero()]);
        assert_eq!(m.inertia().unwrap(), Inertia { n_neg: 1, n_zero: 1, n_pos: 1 });
    }

    #[test]
    fn inertia_with_repeated_eigenvalues() {
        let d: Vec<GaussRat> = [-2, -2, -2, 0, 0, 3, 3, 7, 7].iter().map(|&x| GaussRat::from_ints(x, 0)).collect();
        let m = GMat::diagonal(&d);
        assert_eq!(m.inertia().unwrap(), Inertia { n_neg: 3, n_zero: 2, n_pos: 4 });
    }

    #[test]
    fn squarefree_factorisation() {
        // (x-1)^2 (x+2)^3 (x-3)
        let p = RealPoly::from_ints(&[-1, 1]);
        let q = RealPoly::from_ints(&[2, 1]);
        let s = RealPoly::from_ints(&[-3, 1]);
        let mul = |a: &RealPoly, b: &RealPoly| {
            let mut c = vec![Rat::zero(); a.coeffs().len() + b.coeffs().len() - 1];
            for (i, x) in a.coeffs().iter().enumerate() {
                for (j, y) in b.coeffs().iter().enumerate() {
                    c[i + j] += x * y;
                }
            }
            RealPoly::new(c)
        };
        let f = mul(&mul(&mul(&p, &p), &mul(&mul(&q, &q), &q)), &s);
        let mut factors = f.squarefree_factors();
        factors.sort_by_key(|(_, k)| *k);
        assert_eq!(factors.len(), 3);
        assert_eq!(factors[0], (s.clone(), 1));
        assert_eq!(factors[1], (p.clone(), 2));
        assert_eq!(factors[2], (q.clone(), 3));
    }

    #[test]
    fn sturm_counts_distinct_roots() {
        // (x+1)(x-2)(x-5)
        let f = RealPoly::from_ints(&[10, 3, -6, 1]);
        assert_eq!(f.eval(&r(-1)), r(0));
        assert_eq!(f.count_distinct_roots(None, None), 3);
        assert_eq!(f.count_distinct_roots(None, Some(&r(0))), 1);
        assert_eq!(f.count_distinct_roots(Some(&r(0)), Some(&r(3))), 1);
    }
}
