//! Dense matrices over the Gaussian rationals.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};

use super::{GaussRat, Rat};
use crate::Error;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GMat {
    rows: usize,
    cols: usize,
    data: Vec<GaussRat>,
}

impl GMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        GMat { rows, cols, data: vec![GaussRat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = GMat::zeros(n, n);
        for k in 0..n {
            m[(k, k)] = GaussRat::one();
        }
        m
    }

    pub fn diagonal(entries: &[GaussRat]) -> Self {
        let mut m = GMat::zeros(entries.len(), entries.len());
        for (k, z) in entries.iter().enumerate() {
            m[(k, k)] = z.clone();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<GaussRat>) -> Result<Self, Error> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(GMat { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<GaussRat>>) -> Result<Self, Error> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        GMat::from_vec(r, c, rows.into_iter().flatten().collect())
    }

    /// Integer entries, real and imaginary parts given as pairs.
    pub fn from_int_pairs(rows: &[&[(i64, i64)]]) -> Result<Self, Error> {
        GMat::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&(re, im)| GaussRat::from_ints(re, im)).collect())
                .collect(),
        )
    }

    /// Outer product `u v†`.
    pub fn outer(u: &[GaussRat], v: &[GaussRat]) -> Self {
        let mut m = GMat::zeros(u.len(), v.len());
        for (r, ur) in u.iter().enumerate() {
            for (c, vc) in v.iter().enumerate() {
                m[(r, c)] = ur * &vc.conj();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[GaussRat] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[GaussRat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<GaussRat> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn map(&self, f: impl Fn(&GaussRat) -> GaussRat) -> Self {
        GMat { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn scale(&self, k: &Rat) -> Self {
        self.map(|z| z.scale(k))
    }

    pub fn transpose(&self) -> Self {
        let mut t = GMat::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        self.transpose().map(GaussRat::conj)
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square() && *self == self.adjoint()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(GaussRat::is_zero)
    }

    pub fn trace(&self) -> GaussRat {
        (0..self.rows.min(self.cols)).map(|k| self[(k, k)].clone()).sum()
    }

    /// Principal-style submatrix picking `rows` and `cols` in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut m = GMat::zeros(rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                m[(i, j)] = self[(r, c)].clone();
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[GaussRat]) -> Vec<GaussRat> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| self.row(r).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Bilinear form `u† M v`.
    pub fn sandwich(&self, u: &[GaussRat], v: &[GaussRat]) -> GaussRat {
        let mv = self.mul_vec(v);
        u.iter().zip(&mv).map(|(a, b)| &a.conj() * b).sum()
    }

    /// Standard Kronecker product, `self` on the outer (slow) index.
    pub fn kron(&self, rhs: &GMat) -> GMat {
        let mut m = GMat::zeros(self.rows * rhs.rows, self.cols * rhs.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let a = &self[(r, c)];
                if a.is_zero() {
                    continue;
                }
                for rr in 0..rhs.rows {
                    for cc in 0..rhs.cols {
                        m[(r * rhs.rows + rr, c * rhs.cols + cc)] = a * &rhs[(rr, cc)];
                    }
                }
            }
        }
        m
    }

    fn require_square(&self, what: &str) -> Result<(), Error> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::Dimension(format!(
                "{what} needs a square matrix, got {}x{}",
                self.rows, self.cols
            )))
        }
    }

    /// Exact determinant by Bareiss elimination over the Gaussian integers,
    /// after clearing denominators with their common multiple.
    pub fn det(&self) -> Result<GaussRat, Error> {
        self.require_square("determinant")?;
        let n = self.rows;
        if n == 0 {
            return Ok(GaussRat::one());
        }
        let (lift, lifted) = self.integer_lift();
        let d = bareiss_det(n, lifted);
        let scale = Rat::from_integer(Pow::pow(lift, n));
        Ok(GaussRat::new(Rat::from_integer(d.re) / &scale, Rat::from_integer(d.im) / &scale))
    }

    /// `(D, D·M)` with `D > 0` the least common denominator of all entries.
    pub(crate) fn integer_lift(&self) -> (BigInt, Vec<GaussInt>) {
        let lift = self.data.iter().fold(BigInt::one(), |acc, z| acc.lcm(&z.denom_lcm()));
        let lifted = self.data.iter().map(|z| GaussInt::from_scaled(z, &lift)).collect();
        (lift, lifted)
    }

    /// Determinant by plain pivoted elimination over the Gaussian rationals.
    /// Independent of the Bareiss route; used as a cross-check.
    pub fn det_by_elimination(&self) -> Result<GaussRat, Error> {
        self.require_square("determinant")?;
        let n = self.rows;
        let mut a = self.clone();
        let mut det = GaussRat::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| !a[(r, k)].is_zero()) else {
                return Ok(GaussRat::zero());
            };
            if p != k {
                a.swap_rows(p, k);
                det = -det;
            }
            let pivot = a[(k, k)].clone();
            det = &det * &pivot;
            let inv = pivot.inv().expect("nonzero pivot");
            for r in k + 1..n {
                let f = &a[(r, k)] * &inv;
                if f.is_zero() {
                    continue;
                }
                for c in k..n {
                    let t = &f * &a[(k, c)];
                    a[(r, c)] -= &t;
                }
            }
        }
        Ok(det)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (GMat, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..a.cols {
            if row == a.rows {
                break;
            }
            let Some(p) = (row..a.rows).find(|&r| !a[(r, col)].is_zero()) else {
                continue;
            };
            a.swap_rows(p, row);
            let inv = a[(row, col)].inv().expect("nonzero pivot");
            for c in col..a.cols {
                a[(row, c)] = &a[(row, c)] * &inv;
            }
            for r in 0..a.rows {
                if r == row || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                for c in col..a.cols {
                    let t = &f * &a[(row, c)];
                    a[(r, c)] -= &t;
                }
            }
            pivots.push(col);
            row += 1;
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Columns of the result form a basis of the kernel.
    pub fn nullspace_basis(&self) -> GMat {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = GMat::zeros(self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            basis[(fc, k)] = GaussRat::one();
            for (pr, &pc) in pivots.iter().enumerate() {
                basis[(pc, k)] = -&r[(pr, fc)];
            }
        }
        basis
    }
}

impl std::ops::Index<(usize, usize)> for GMat {
    type Output = GaussRat;
    fn index(&self, (r, c): (usize, usize)) -> &GaussRat {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of bounds");
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for GMat {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut GaussRat {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of bounds");
        &mut self.data[r * self.cols + c]
    }
}

impl Mul for &GMat {
    type Output = GMat;
    fn mul(self, rhs: &GMat) -> GMat {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut m = GMat::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let t = a * &rhs[(k, c)];
                    m[(r, c)] += &t;
                }
            }
        }
        m
    }
}

impl Add for &GMat {
    type Output = GMat;
    fn add(self, rhs: &GMat) -> GMat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect();
        GMat { rows: self.rows, cols: self.cols, data }
    }
}

impl Sub for &GMat {
    type Output = GMat;
    fn sub(self, rhs: &GMat) -> GMat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect();
        GMat { rows: self.rows, cols: self.cols, data }
    }
}

impl fmt::Display for GMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Gaussian integer, used only inside the fraction-free determinant.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct GaussInt {
    pub(crate) re: BigInt,
    pub(crate) im: BigInt,
}

impl GaussInt {
    fn from_scaled(z: &GaussRat, lift: &BigInt) -> Self {
        let k = Rat::from_integer(lift.clone());
        let (re, im) = (&z.re * &k, &z.im * &k);
        debug_assert!(re.is_integer() && im.is_integer());
        GaussInt { re: re.to_integer(), im: im.to_integer() }
    }

    pub(crate) fn zero() -> Self {
        GaussInt { re: BigInt::zero(), im: BigInt::zero() }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub(crate) fn add(&self, o: &GaussInt) -> GaussInt {
        GaussInt { re: &self.re + &o.re, im: &self.im + &o.im }
    }

    pub(crate) fn mul(&self, o: &GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    fn sub(&self, o: &GaussInt) -> GaussInt {
        GaussInt { re: &self.re - &o.re, im: &self.im - &o.im }
    }

    /// Division known to be exact in Z[i].
    fn div_exact(&self, o: &GaussInt) -> GaussInt {
        let n = &o.re * &o.re + &o.im * &o.im;
        let re = &self.re * &o.re + &self.im * &o.im;
        let im = &self.im * &o.re - &self.re * &o.im;
        debug_assert!((&re % &n).is_zero() && (&im % &n).is_zero(), "inexact Bareiss step");
        GaussInt { re: re / &n, im: im / &n }
    }

    fn neg(&self) -> GaussInt {
        GaussInt { re: -&self.re, im: -&self.im }
    }
}

fn bareiss_det(n: usize, mut a: Vec<GaussInt>) -> GaussInt {
    let idx = |r: usize, c: usize| r * n + c;
    let mut sign_flip = false;
    let mut prev = GaussInt { re: BigInt::one(), im: BigInt::zero() };
    for k in 0..n - 1 {
        if a[idx(k, k)].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[idx(r, k)].is_zero()) else {
                return GaussInt { re: BigInt::zero(), im: BigInt::zero() };
            };
            for c in 0..n {
                a.swap(idx(k, c), idx(p, c));
            }
            sign_flip = !sign_flip;
        }
        for r in k + 1..n {
            for c in k + 1..n {
                let num = a[idx(r, c)].mul(&a[idx(k, k)]).sub(&a[idx(r, k)].mul(&a[idx(k, c)]));
                a[idx(r, c)] = num.div_exact(&prev);
            }
        }
        prev = a[idx(k, k)].clone();
    }
    let d = a[idx(n - 1, n - 1)].clone();
    if sign_flip {
        d.neg()
    } else {
        d
    }
}
