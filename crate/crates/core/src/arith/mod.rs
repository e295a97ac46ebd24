//! Exact scalar and matrix arithmetic over the Gaussian rationals.

mod gauss;
mod jet;
mod matrix;
mod poly;
mod scalar;

pub use gauss::GaussRat;
pub use jet::{jet_rank, real_jacobian, Jet};
pub use matrix::GMat;
pub use poly::{Inertia, RealPoly};
pub use scalar::Scalar;

/// Arbitrary-precision rational, always kept in lowest terms.
pub type Rat = num_rational::BigRational;

/// Parses `"p/q"` or `"p"`; the result is reduced.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: num_bigint::BigInt = num.parse().ok()?;
    let den: num_bigint::BigInt = den.parse().ok()?;
    if num_traits::Zero::is_zero(&den) {
        return None;
    }
    Some(Rat::new(num, den))
}
