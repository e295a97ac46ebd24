use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use super::{GaussRat, Jet};

/// Field-like scalar the family formulas are written against.
///
/// Implemented for plain [`GaussRat`] values and for first-order [`Jet`]s,
/// so the same code path yields both a state and its exact Jacobian.
pub trait Scalar:
    Clone
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// A constant living in the same ambient space as `self`.
    fn lift(&self, value: GaussRat) -> Self;
    fn conj(&self) -> Self;
    fn value(&self) -> &GaussRat;
    /// `None` when the divisor's value is zero.
    fn try_div(&self, rhs: &Self) -> Option<Self>;

    fn zero_like(&self) -> Self {
        self.lift(GaussRat::zero())
    }

    /// z·z*, real-valued.
    fn abs_sqr(&self) -> Self {
        self.clone() * self.conj()
    }
}

impl Scalar for GaussRat {
    fn lift(&self, value: GaussRat) -> Self {
        value
    }

    fn conj(&self) -> Self {
        GaussRat::conj(self)
    }

    fn value(&self) -> &GaussRat {
        self
    }

    fn try_div(&self, rhs: &Self) -> Option<Self> {
        self.checked_div(rhs)
    }
}

impl Scalar for Jet {
    fn lift(&self, value: GaussRat) -> Self {
        Jet::constant(value, self.dim())
    }

    fn conj(&self) -> Self {
        Jet::conj(self)
    }

    fn value(&self) -> &GaussRat {
        &self.value
    }

    fn try_div(&self, rhs: &Self) -> Option<Self> {
        self.checked_div(rhs)
    }
}
