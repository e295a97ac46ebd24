use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Rat;

/// Complex number with rational real and imaginary parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussRat {
    pub re: Rat,
    pub im: Rat,
}

impl GaussRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        GaussRat { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        GaussRat::new(Rat::from_integer(re.into()), Rat::from_integer(im.into()))
    }

    pub fn real(re: Rat) -> Self {
        GaussRat::new(re, Rat::zero())
    }

    pub fn zero() -> Self {
        GaussRat::new(Rat::zero(), Rat::zero())
    }

    pub fn one() -> Self {
        GaussRat::from_ints(1, 0)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussRat::from_ints(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRat::new(self.re.clone(), -&self.im)
    }

    /// |z|², always real.
    pub fn norm_sqr(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(GaussRat::new(&self.re / &n, -&self.im / &n))
    }

    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self * &r)
    }

    pub fn scale(&self, k: &Rat) -> Self {
        GaussRat::new(&self.re * k, &self.im * k)
    }

    /// Lowest common multiple of the denominators of both parts.
    pub(crate) fn denom_lcm(&self) -> BigInt {
        num_integer::Integer::lcm(self.re.denom(), self.im.denom())
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        (
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }
}

impl From<Rat> for GaussRat {
    fn from(re: Rat) -> Self {
        GaussRat::real(re)
    }
}

impl From<i64> for GaussRat {
    fn from(re: i64) -> Self {
        GaussRat::from_ints(re, 0)
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(f, "{}{}{}i", self.re, sign, self.im.abs())
            }
        }
    }
}

impl<'a> Add<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: &GaussRat) -> GaussRat {
        GaussRat::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: &GaussRat) -> GaussRat {
        GaussRat::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: &GaussRat) -> GaussRat {
        GaussRat::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

/// Panics on division by zero, like the integer types. Use
/// [`GaussRat::checked_div`] when the divisor may vanish.
impl<'a> Div<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn div(self, rhs: &GaussRat) -> GaussRat {
        self.checked_div(rhs).expect("division by zero Gaussian rational")
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat::new(-&self.re, -&self.im)
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat::new(-self.re, -self.im)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<GaussRat> for GaussRat {
            type Output = GaussRat;
            fn $m(self, rhs: GaussRat) -> GaussRat { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a GaussRat> for GaussRat {
            type Output = GaussRat;
            fn $m(self, rhs: &GaussRat) -> GaussRat { (&self).$m(rhs) }
        }
        impl<'a> $tr<GaussRat> for &'a GaussRat {
            type Output = GaussRat;
            fn $m(self, rhs: GaussRat) -> GaussRat { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&GaussRat> for GaussRat {
    fn add_assign(&mut self, rhs: &GaussRat) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussRat> for GaussRat {
    fn sub_assign(&mut self, rhs: &GaussRat) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl std::iter::Sum for GaussRat {
    fn sum<I: Iterator<Item = GaussRat>>(iter: I) -> Self {
        iter.fold(GaussRat::zero(), |acc, z| acc + z)
    }
}

impl Zero for GaussRat {
    fn zero() -> Self {
        GaussRat::zero()
    }
    fn is_zero(&self) -> bool {
        GaussRat::is_zero(self)
    }
}

impl One for GaussRat {
    fn one() -> Self {
        GaussRat::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rat {
        Rat::new(n.into(), d.into())
    }

    #[test]
    fn conj_is_involution_and_norm_is_real() {
        let z = GaussRat::new(q(3, 4), q(-5, 7));
        assert_eq!(z.conj().conj(), z);
        let n = &z * &z.conj();
        assert!(n.is_real());
        assert_eq!(n.re, z.norm_sqr());
    }

    #[test]
    fn division_roundtrip() {
        let a = GaussRat::new(q(1, 2), q(3, 1));
        let b = GaussRat::from_ints(-1, 1);
        assert_eq!(&(&a / &b) * &b, a);
        assert!(a.checked_div(&GaussRat::zero()).is_none());
    }

    #[test]
    fn canonical_zero_and_reduction() {
        let z = GaussRat::new(q(2, 4), q(0, 5));
        assert_eq!(z.re, q(1, 2));
        assert_eq!(*z.im.denom(), BigInt::from(1));
    }

    #[test]
    fn display() {
        assert_eq!(GaussRat::from_ints(-1, 1).to_string(), "-1+1i");
        assert_eq!(GaussRat::new(q(1, 2), q(-3, 4)).to_string(), "1/2-3/4i");
        assert_eq!(GaussRat::i().to_string(), "1i");
        assert_eq!(GaussRat::zero().to_string(), "0");
    }
}
