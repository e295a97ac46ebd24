//! Seeded random parameters with small rational parts.

use rand::Rng;

use crate::arith::{GaussRat, Rat};
use crate::family::CheckerParams;
use crate::ppt::{derive_full_params, BrussPeresParams, SubfamilyParams};

/// Numerators drawn from `[-max_abs_num, max_abs_num]`, denominators from
/// `[1, max_den]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RationalRange {
    pub max_abs_num: i64,
    pub max_den: i64,
}

impl Default for RationalRange {
    fn default() -> Self {
        RationalRange { max_abs_num: 4, max_den: 4 }
    }
}

pub fn rational<R: Rng + ?Sized>(rng: &mut R, range: RationalRange) -> Rat {
    let n = rng.gen_range(-range.max_abs_num..=range.max_abs_num);
    let d = rng.gen_range(1..=range.max_den.max(1));
    Rat::new(n.into(), d.into())
}

pub fn gauss<R: Rng + ?Sized>(rng: &mut R, range: RationalRange) -> GaussRat {
    GaussRat::new(rational(rng, range), rational(rng, range))
}

pub fn checker_params<R: Rng + ?Sized>(rng: &mut R, range: RationalRange) -> CheckerParams {
    CheckerParams::from_array(std::array::from_fn(|_| gauss(rng, range)))
}

/// Free subfamily parameters; no validity guarantee.
pub fn subfamily_params<R: Rng + ?Sized>(rng: &mut R, range: RationalRange) -> SubfamilyParams {
    SubfamilyParams {
        t: rational(rng, range),
        x: rational(rng, range),
        y: rational(rng, range),
        a: gauss(rng, range),
        b: gauss(rng, range),
        c: gauss(rng, range),
        f: gauss(rng, range),
        j: gauss(rng, range),
        k: gauss(rng, range),
        l: gauss(rng, range),
        m: gauss(rng, range),
        p: gauss(rng, range),
        s: gauss(rng, range),
    }
}

/// Redraws until every denominator of the completion is nonzero.
pub fn valid_subfamily_params<R: Rng + ?Sized>(
    rng: &mut R,
    range: RationalRange,
    max_tries: usize,
) -> Option<SubfamilyParams> {
    (0..max_tries)
        .map(|_| subfamily_params(rng, range))
        .find(|sp| derive_full_params(sp).is_ok())
}

/// Embedding inputs with `a, b, c, f, x` nonzero and `x|a|² ≠ t|f|²`.
pub fn bruss_peres_params<R: Rng + ?Sized>(
    rng: &mut R,
    range: RationalRange,
    real_only: bool,
) -> BrussPeresParams {
    loop {
        let mut z = || {
            if real_only {
                GaussRat::real(rational(rng, range))
            } else {
                gauss(rng, range)
            }
        };
        let (a, b, c, f) = (z(), z(), z(), z());
        let (t, x) = (rational(rng, range), rational(rng, range));
        let gap = &x * a.norm_sqr() - &t * f.norm_sqr();
        let nonzero = [&a, &b, &c, &f].iter().all(|w| !w.is_zero());
        if nonzero && !num_traits::Zero::is_zero(&x) && !num_traits::Zero::is_zero(&gap) {
            return BrussPeresParams { a, b, c, f, t, x, real_only };
        }
    }
}
