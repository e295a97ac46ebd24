//! The subfamily of states fixed by partial transposition.
//!
//! Eight of the eighteen parameters are eliminated so that ρ^Γ = ρ holds
//! identically: three real parameters `t, x, y` and ten complex parameters
//! remain free.

use crate::arith::{GaussRat, Rat, Scalar};
use crate::family::{lambda_mu, quad_form_f, theorem1_generic, CheckerParams};
use crate::Error;

/// Free parameters of the Γ-fixed subfamily.
#[derive(Clone, Debug, PartialEq)]
pub struct SubfamilyParams {
    pub t: Rat,
    pub x: Rat,
    pub y: Rat,
    pub a: GaussRat,
    pub b: GaussRat,
    pub c: GaussRat,
    pub f: GaussRat,
    pub j: GaussRat,
    pub k: GaussRat,
    pub l: GaussRat,
    pub m: GaussRat,
    pub p: GaussRat,
    pub s: GaussRat,
}

impl SubfamilyParams {
    pub const REAL_NAMES: [&'static str; 3] = ["t", "x", "y"];
    pub const COMPLEX_NAMES: [&'static str; 10] = ["a", "b", "c", "f", "j", "k", "l", "m", "p", "s"];

    pub fn complex_array(&self) -> [&GaussRat; 10] {
        [&self.a, &self.b, &self.c, &self.f, &self.j, &self.k, &self.l, &self.m, &self.p, &self.s]
    }

    /// Lifts the parameters into any scalar type, given a constructor for
    /// the three real and ten complex entries (in declaration order).
    pub fn to_vars<S>(
        &self,
        mut real: impl FnMut(usize, &Rat) -> S,
        mut complex: impl FnMut(usize, &GaussRat) -> S,
    ) -> SubfamilyVars<S> {
        let [a, b, c, f, j, k, l, m, p, s] = self.complex_array();
        SubfamilyVars {
            t: real(0, &self.t),
            x: real(1, &self.x),
            y: real(2, &self.y),
            a: complex(0, a),
            b: complex(1, b),
            c: complex(2, c),
            f: complex(3, f),
            j: complex(4, j),
            k: complex(5, k),
            l: complex(6, l),
            m: complex(7, m),
            p: complex(8, p),
            s: complex(9, s),
        }
    }
}

/// [`SubfamilyParams`] over an arbitrary scalar; `t, x, y` are expected to
/// be real-valued.
#[derive(Clone, Debug)]
pub struct SubfamilyVars<S> {
    pub t: S,
    pub x: S,
    pub y: S,
    pub a: S,
    pub b: S,
    pub c: S,
    pub f: S,
    pub j: S,
    pub k: S,
    pub l: S,
    pub m: S,
    pub p: S,
    pub s: S,
}

fn nonzero<S: Scalar>(z: &S, name: &'static str) -> Result<(), Error> {
    if z.value().is_zero() {
        Err(Error::Singular(name))
    } else {
        Ok(())
    }
}

fn div<S: Scalar>(num: S, den: &S, name: &'static str) -> Result<S, Error> {
    num.try_div(den).ok_or(Error::Singular(name))
}

/// Completes the free parameters to all eighteen.
///
/// Order: `i` from `t`, then `d` from `x`, `n` from the fifth fixed-point
/// equation, `e` from `y` and `n`, and finally `g, q, h, r`, which need all
/// of the above.
pub fn derive_full_params_generic<S: Scalar>(v: &SubfamilyVars<S>) -> Result<CheckerParams<S>, Error> {
    nonzero(&v.a, "a*")?;
    nonzero(&v.b, "b*")?;
    nonzero(&v.f, "f*")?;
    let ak_bj = v.a.clone() * v.k.clone() - v.b.clone() * v.j.clone();
    nonzero(&ak_bj, "(ak-bj)*")?;

    let c = |z: &S| z.conj();
    let i = div(v.t.clone() - v.s.clone() * c(&v.p), &c(&v.f), "f*")?;
    let d = div(v.x.clone() - v.m.clone() * c(&v.j), &c(&v.a), "a*")?;
    let n_num = v.a.abs_sqr() * v.y.clone()
        - v.b.abs_sqr() * v.x.clone()
        - c(&v.m) * c(&v.b) * ak_bj.clone();
    let n = div(n_num, &(v.a.clone() * c(&ak_bj)), "a(ak-bj)*")?;
    let e = div(v.y.clone() - n.clone() * c(&v.k), &c(&v.b), "b*")?;

    let fs_ip = v.f.clone() * v.s.clone() - i.clone() * v.p.clone();
    nonzero(&fs_ip, "(fs-ip)*")?;
    let den = c(&fs_ip);
    let ac_jl = v.a.clone() * c(&v.c) + v.j.clone() * c(&v.l);
    let dc_ml = d.clone() * c(&v.c) + v.m.clone() * c(&v.l);
    let bc_kl = v.b.clone() * c(&v.c) + v.k.clone() * c(&v.l);
    let ec_nl = e.clone() * c(&v.c) + n.clone() * c(&v.l);
    let g = div(c(&v.s) * ac_jl.clone() - c(&v.p) * dc_ml.clone(), &den, "(fs-ip)*")?;
    let q = div(c(&v.f) * dc_ml - c(&i) * ac_jl, &den, "(fs-ip)*")?;
    let h = div(c(&v.s) * bc_kl.clone() - c(&v.p) * ec_nl.clone(), &den, "(fs-ip)*")?;
    let r = div(c(&v.f) * ec_nl - c(&i) * bc_kl, &den, "(fs-ip)*")?;

    Ok(CheckerParams {
        a: v.a.clone(),
        b: v.b.clone(),
        c: v.c.clone(),
        d,
        e,
        f: v.f.clone(),
        g,
        h,
        i,
        j: v.j.clone(),
        k: v.k.clone(),
        l: v.l.clone(),
        m: v.m.clone(),
        n,
        p: v.p.clone(),
        q,
        r,
        s: v.s.clone(),
    })
}

pub fn derive_full_params(sp: &SubfamilyParams) -> Result<CheckerParams, Error> {
    let vars = sp.to_vars(|_, r| GaussRat::real(r.clone()), |_, z| z.clone());
    derive_full_params_generic(&vars)
}

/// The five complex and three real conditions equivalent to ρ^Γ = ρ.
pub fn fixed_point_conditions(p: &CheckerParams) -> bool {
    let cj = |z: &GaussRat| z.conj();
    let pair = |u: &GaussRat, v: &GaussRat, w: &GaussRat, z: &GaussRat| u * &cj(v) + w * &cj(z);
    let complex = [
        (pair(&p.f, &p.g, &p.p, &p.q), pair(&p.c, &p.a, &p.l, &p.j)),
        (pair(&p.i, &p.g, &p.s, &p.q), pair(&p.c, &p.d, &p.l, &p.m)),
        (pair(&p.f, &p.h, &p.p, &p.r), pair(&p.c, &p.b, &p.l, &p.k)),
        (pair(&p.i, &p.h, &p.s, &p.r), pair(&p.c, &p.e, &p.l, &p.n)),
        (pair(&p.a, &p.e, &p.j, &p.n), pair(&p.d, &p.b, &p.m, &p.k)),
    ];
    let real = [
        pair(&p.a, &p.d, &p.j, &p.m),
        pair(&p.b, &p.e, &p.k, &p.n),
        pair(&p.f, &p.i, &p.p, &p.s),
    ];
    complex.iter().all(|(l, r)| l == r) && real.iter().all(GaussRat::is_real)
}

/// The product `abf(fs−ip)(gr−hq)(ak−bj)·F(l,−c)·F(μ,−λ)` on the completed
/// parameters.
pub fn theorem2_product(sp: &SubfamilyParams) -> Result<GaussRat, Error> {
    let p = derive_full_params(sp)?;
    let form = quad_form_f(&p);
    let (lam, mu) = lambda_mu(&p);
    let factors = [
        p.a.clone(),
        p.b.clone(),
        p.f.clone(),
        &p.f * &p.s - &p.i * &p.p,
        &p.g * &p.r - &p.h * &p.q,
        &p.a * &p.k - &p.b * &p.j,
        form.eval(&p.l, &-&p.c),
        form.eval(&mu, &-&lam),
    ];
    Ok(factors.into_iter().fold(GaussRat::one(), |acc, z| acc * z))
}

/// When true the state is entangled, PPT and fixed by Γ.
pub fn theorem2_generic(sp: &SubfamilyParams) -> Result<bool, Error> {
    let generic = !theorem2_product(sp)?.is_zero();
    debug_assert!(!generic || theorem1_generic(&derive_full_params(sp)?));
    Ok(generic)
}

/// Parameters of the embedded first Bruß–Peres family.
#[derive(Clone, Debug, PartialEq)]
pub struct BrussPeresParams {
    pub a: GaussRat,
    pub b: GaussRat,
    pub c: GaussRat,
    pub f: GaussRat,
    pub t: Rat,
    pub x: Rat,
    /// Restrict `a, b, c, f` to real values (the original five-parameter family).
    pub real_only: bool,
}

pub fn bruss_peres_embed(bp: &BrussPeresParams) -> Result<SubfamilyParams, Error> {
    if bp.real_only {
        for (z, name) in [(&bp.a, "a"), (&bp.b, "b"), (&bp.c, "c"), (&bp.f, "f")] {
            if !z.is_real() {
                return Err(Error::NotReal(name));
            }
        }
    }
    for (z, name) in [(&bp.a, "a"), (&bp.c, "c"), (&bp.f, "f")] {
        if z.is_zero() {
            return Err(Error::Singular(name));
        }
    }
    let x = GaussRat::real(bp.x.clone());
    let t = GaussRat::real(bp.t.clone());
    if x.is_zero() {
        return Err(Error::Singular("x"));
    }
    let (a, c, f) = (&bp.a, &bp.c, &bp.f);
    Ok(SubfamilyParams {
        t: bp.t.clone(),
        x: bp.x.clone(),
        y: Rat::from_integer(0.into()),
        a: a.clone(),
        b: bp.b.clone(),
        c: c.clone(),
        f: f.clone(),
        j: c.conj(),
        k: GaussRat::zero(),
        l: -a.conj(),
        m: &x / c,
        p: &(&(&t * c) * &f.conj()) / &(&x * a),
        s: &(&x * &a.conj()) / &(f * &c.conj()),
    })
}

/// Closed-form values the embedding is expected to produce.
#[derive(Clone, Debug, PartialEq)]
pub struct BrussPeresForms {
    pub g: GaussRat,
    pub q: GaussRat,
    pub h: GaussRat,
    /// F(l, −c)
    pub f_l_c: GaussRat,
    /// F(μ, −λ)
    pub f_mu_lambda: GaussRat,
}

/// g = tfc*, q = −f*, h = bc*/f*, F(l,−c) = −xba*,
/// F(μ,−λ) = x(bc*)³(x|a|²−t|f|²)²/|acf²|².
pub fn bruss_peres_forms(bp: &BrussPeresParams) -> BrussPeresForms {
    let (a, b, c, f) = (&bp.a, &bp.b, &bp.c, &bp.f);
    let x = GaussRat::real(bp.x.clone());
    let t = GaussRat::real(bp.t.clone());
    let bc = b * &c.conj();
    let gap = &(&x * &GaussRat::real(a.norm_sqr())) - &(&t * &GaussRat::real(f.norm_sqr()));
    let acf2 = GaussRat::real((&(a * c) * &(f * f)).norm_sqr());
    BrussPeresForms {
        g: &(&t * f) * &c.conj(),
        q: -f.conj(),
        h: &bc / &f.conj(),
        f_l_c: -(&(&x * b) * &a.conj()),
        f_mu_lambda: &(&(&x * &(&(&bc * &bc) * &bc)) * &(&gap * &gap)) / &acf2,
    }
}
