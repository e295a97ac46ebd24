//! Published reference points: the two example states, the distillability
//! witness, and the parameter point used for the subfamily rank count.

use crate::arith::{GMat, GaussRat, Rat};
use crate::criteria::WitnessVector;
use crate::family::CheckerParams;
use crate::ppt::SubfamilyParams;

const Z: (i64, i64) = (0, 0);
const ONE: (i64, i64) = (1, 0);
const I: (i64, i64) = (0, 1);

/// a=f=k=n=q=s=0, g=p=m=1, j=l=−1, h=i=𝐢, e=1−𝐢, b=d=−1+𝐢, c=r=−1−𝐢.
pub fn rho1_params() -> CheckerParams {
    CheckerParams::from_int_pairs([
        Z,       // a
        (-1, 1), // b
        (-1, -1), // c
        (-1, 1), // d
        (1, -1), // e
        Z,       // f
        ONE,     // g
        I,       // h
        I,       // i
        (-1, 0), // j
        Z,       // k
        (-1, 0), // l
        ONE,     // m
        Z,       // n
        ONE,     // p
        Z,       // q
        (-1, -1), // r
        Z,       // s
    ])
}

/// a=b=c=f=j=m=p=r=1, n=0, e=−1, q=s=𝐢, g=h=−𝐢, d=1+𝐢, i=−1−𝐢, k=l=−1+𝐢.
pub fn rho2_params() -> CheckerParams {
    CheckerParams::from_int_pairs([
        ONE,      // a
        ONE,      // b
        ONE,      // c
        (1, 1),   // d
        (-1, 0),  // e
        ONE,      // f
        (0, -1),  // g
        (0, -1),  // h
        (-1, -1), // i
        ONE,      // j
        (-1, 1),  // k
        (-1, 1),  // l
        ONE,      // m
        Z,        // n
        ONE,      // p
        I,        // q
        ONE,      // r
        I,        // s
    ])
}

/// 17·ρ₁ as printed.
pub fn rho1_printed() -> GMat {
    GMat::from_int_pairs(&[
        &[ONE, Z, (-1, 0), Z, ONE, Z, Z, Z, Z],
        &[Z, ONE, Z, Z, Z, (0, -1), Z, (0, -1), Z],
        &[(-1, 0), Z, (3, 0), Z, (-1, -2), Z, (2, 0), Z, (-2, 0)],
        &[Z, Z, Z, ONE, Z, Z, Z, (-1, 1), Z],
        &[ONE, Z, (-1, 2), Z, (3, 0), Z, (0, 2), Z, (0, -2)],
        &[Z, I, Z, Z, Z, ONE, Z, ONE, Z],
        &[Z, Z, (2, 0), Z, (0, -2), Z, (2, 0), Z, (-2, 0)],
        &[Z, I, Z, (-1, -1), Z, ONE, Z, (3, 0), Z],
        &[Z, Z, (-2, 0), Z, (0, 2), Z, (-2, 0), Z, (2, 0)],
    ])
    .expect("9x9")
}

/// 21·ρ₂ as printed.
pub fn rho2_printed() -> GMat {
    GMat::from_int_pairs(&[
        &[(2, 0), Z, (2, -1), Z, (0, -1), Z, (0, -1), Z, (-1, 0)],
        &[Z, (2, 0), Z, Z, Z, (2, 1), Z, (1, 1), Z],
        &[(2, 1), Z, (3, 0), Z, Z, Z, Z, Z, (-1, -1)],
        &[Z, Z, Z, (2, 0), Z, (-1, 0), Z, (1, 1), Z],
        &[I, Z, Z, Z, (3, 0), Z, (3, 0), Z, (-1, 0)],
        &[Z, (2, -1), Z, (-1, 0), Z, (3, 0), Z, ONE, Z],
        &[I, Z, Z, Z, (3, 0), Z, (3, 0), Z, (-1, 0)],
        &[Z, (1, -1), Z, (1, -1), Z, ONE, Z, (2, 0), Z],
        &[(-1, 0), Z, (-1, 1), Z, (-1, 0), Z, (-1, 0), Z, ONE],
    ])
    .expect("9x9")
}

fn gvec(v: [(i64, i64); 3]) -> [GaussRat; 3] {
    v.map(|(re, im)| GaussRat::from_ints(re, im))
}

/// ψ = φ₁⊗φ₂ + φ₃⊗φ₄, unnormalized.
pub fn rho2_witness() -> WitnessVector {
    let phi1 = gvec([(0, -1), (1, -1), (1, -1)]);
    let phi2 = gvec([(1, -1), (-1, 1), ONE]);
    let phi3 = gvec([(1, -1), I, Z]);
    let phi4 = gvec([(-1, 0), (0, -1), ONE]);
    WitnessVector::from_terms(&[(phi1, phi2), (phi3, phi4)])
}

/// t=1, x=l=0, y=−1, c=s=𝐢, a=j=−𝐢, b=f=1−𝐢, p=1+𝐢, k=m=−1+𝐢.
pub fn lambda_point() -> SubfamilyParams {
    let g = |re, im| GaussRat::from_ints(re, im);
    let q = |n: i64| Rat::from_integer(n.into());
    SubfamilyParams {
        t: q(1),
        x: q(0),
        y: q(-1),
        a: g(0, -1),
        b: g(1, -1),
        c: g(0, 1),
        f: g(1, -1),
        j: g(0, -1),
        k: g(-1, 1),
        l: g(0, 0),
        m: g(-1, 1),
        p: g(1, 1),
        s: g(0, 1),
    }
}

/// det(ρ₁^Γ) = 2⁶·7/17⁹.
pub fn rho1_gamma_det() -> Rat {
    Rat::new(448.into(), num_bigint::BigInt::from(17).pow(9))
}

/// det(ρ₂^Γ) = 2·11·19/(3⁷·7⁹).
pub fn rho2_gamma_det() -> Rat {
    use num_bigint::BigInt;
    Rat::new(418.into(), BigInt::from(3).pow(7) * BigInt::from(7).pow(9))
}

/// ⟨ψ|ρ₂^Γ|ψ⟩ = −5/21.
pub fn rho2_witness_value() -> Rat {
    Rat::new((-5).into(), 21.into())
}

pub const PSI_JACOBIAN_RANK: usize = 28;
pub const LAMBDA_JACOBIAN_RANK: usize = 12;
