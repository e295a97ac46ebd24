//! First-order jets: a value together with its exact partial derivatives
//! with respect to a fixed list of real parameters.
//!
//! Complex parameters occupy two real slots. For a complex parameter
//! `z = u + iv` the seed jet has gradient `1` in the `u` slot and `i` in the
//! `v` slot. Because every slot is a real direction, `∂(z*) = (∂z)*`, which
//! is what makes conjugation a plain entrywise operation on the gradient.

use std::ops::{Add, Mul, Neg, Sub};

use super::{GMat, GaussRat, Rat};
use crate::Error;

#[derive(Clone, Debug, PartialEq)]
pub struct Jet {
    pub value: GaussRat,
    pub gradient: Vec<GaussRat>,
}

impl Jet {
    pub fn constant(value: GaussRat, dim: usize) -> Self {
        Jet { value, gradient: vec![GaussRat::zero(); dim] }
    }

    /// Seed for a real parameter occupying slot `slot`.
    pub fn real_param(value: Rat, slot: usize, dim: usize) -> Self {
        let mut j = Jet::constant(GaussRat::real(value), dim);
        j.gradient[slot] = GaussRat::one();
        j
    }

    /// Seed for a complex parameter occupying slots `re_slot` and `re_slot + 1`.
    pub fn complex_param(value: GaussRat, re_slot: usize, dim: usize) -> Self {
        let mut j = Jet::constant(value, dim);
        j.gradient[re_slot] = GaussRat::one();
        j.gradient[re_slot + 1] = GaussRat::i();
        j
    }

    pub fn dim(&self) -> usize {
        self.gradient.len()
    }

    pub fn conj(&self) -> Self {
        Jet {
            value: self.value.conj(),
            gradient: self.gradient.iter().map(GaussRat::conj).collect(),
        }
    }

    pub fn checked_div(&self, rhs: &Jet) -> Option<Jet> {
        let inv = rhs.value.inv()?;
        let value = &self.value * &inv;
        // (f/g)' = (f' - (f/g) g') / g
        let gradient = zip_with(&self.gradient, &rhs.gradient, |df, dg| {
            &(df - &(&value * dg)) * &inv
        });
        Some(Jet { value, gradient })
    }
}

fn zip_with(
    a: &[GaussRat],
    b: &[GaussRat],
    f: impl Fn(&GaussRat, &GaussRat) -> GaussRat,
) -> Vec<GaussRat> {
    assert_eq!(a.len(), b.len(), "jets from different parameter spaces");
    a.iter().zip(b).map(|(x, y)| f(x, y)).collect()
}

impl Add for Jet {
    type Output = Jet;
    fn add(self, rhs: Jet) -> Jet {
        Jet {
            value: &self.value + &rhs.value,
            gradient: zip_with(&self.gradient, &rhs.gradient, |x, y| x + y),
        }
    }
}

impl Sub for Jet {
    type Output = Jet;
    fn sub(self, rhs: Jet) -> Jet {
        Jet {
            value: &self.value - &rhs.value,
            gradient: zip_with(&self.gradient, &rhs.gradient, |x, y| x - y),
        }
    }
}

impl Mul for Jet {
    type Output = Jet;
    // product rule
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Jet) -> Jet {
        let gradient = zip_with(&self.gradient, &rhs.gradient, |df, dg| {
            &(&self.value * dg) + &(df * &rhs.value)
        });
        Jet { value: &self.value * &rhs.value, gradient }
    }
}

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        Jet {
            value: -self.value,
            gradient: self.gradient.into_iter().map(Neg::neg).collect(),
        }
    }
}

/// Real Jacobian of a list of complex-valued jets: each jet contributes its
/// real-part row and its imaginary-part row.
pub fn real_jacobian(functions: &[Jet], param_count: usize) -> Result<GMat, Error> {
    let mut rows = Vec::with_capacity(2 * functions.len());
    for (k, f) in functions.iter().enumerate() {
        if f.dim() != param_count {
            return Err(Error::Dimension(format!(
                "jet {k} has {} partials, expected {param_count}",
                f.dim()
            )));
        }
        rows.push(f.gradient.iter().map(|g| GaussRat::real(g.re.clone())).collect());
        rows.push(f.gradient.iter().map(|g| GaussRat::real(g.im.clone())).collect());
    }
    if rows.is_empty() {
        return Ok(GMat::zeros(0, param_count));
    }
    GMat::from_rows(rows)
}

/// Exact rank of the real Jacobian of `functions`.
///
/// A real-valued function contributes a zero imaginary row, so stacking
/// both parts unconditionally gives the same rank as dropping that row.
pub fn jet_rank(functions: &[Jet], param_count: usize) -> Result<usize, Error> {
    Ok(real_jacobian(functions, param_count)?.rank())
}
