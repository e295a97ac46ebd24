//! Acceptance checks. Each test prints one `PASS`/`FAIL` line; run with
//! `cargo test -p checkerboard-core --test acceptance -- --nocapture`.

use checkerboard::arith::{GaussRat, Inertia, Rat};
use checkerboard::criteria::{
    is_ppt, range_product_vector_certificate, reduction_criterion, schmidt_rank,
    search_product_vector_numeric, witness_expectation, NumericSearch, RangeCertificate,
};
use checkerboard::family::{
    build_state, checkerboard_split, is_checkerboard, odd_block_kernel, theorem1_generic,
    CheckerParams,
};
use checkerboard::criteria::partial_transpose;
use checkerboard::param_count::{jacobian_rank_lambda, jacobian_rank_psi};
use checkerboard::ppt::{
    bruss_peres_embed, bruss_peres_forms, derive_full_params, theorem2_generic,
};
use checkerboard::sampling::{self, RationalRange};
use checkerboard::golden;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn report(id: u32, name: &str, failures: &[String]) {
    if failures.is_empty() {
        println!("PASS {id:>2} {name}");
    } else {
        println!("FAIL {id:>2} {name}: {}", failures.join("; "));
        panic!("criterion {id} failed: {}", failures.join("; "));
    }
}

fn check(failures: &mut Vec<String>, ok: bool, what: impl FnOnce() -> String) {
    if !ok {
        failures.push(what());
    }
}

fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

const INERTIA_2_0_7: Inertia = Inertia { n_neg: 2, n_zero: 0, n_pos: 7 };

fn golden_matrix(id: u32, name: &str, p: CheckerParams, printed: checkerboard::GMat, n: i64) {
    let s = build_state(&p).unwrap();
    let expected = printed.scale(&rat(1, n));
    let got = s.normalized();
    let mut failures = Vec::new();
    for r in 0..9 {
        for c in 0..9 {
            check(&mut failures, got[(r, c)] == expected[(r, c)], || {
                format!("entry ({r},{c}): expected {}, computed {}", expected[(r, c)], got[(r, c)])
            });
        }
    }
    check(&mut failures, s.normalizer == Rat::from_integer(n.into()), || {
        format!("N expected {n}, computed {}", s.normalizer)
    });
    report(id, name, &failures);
}

#[test]
fn criterion_01_rho1_matrix() {
    golden_matrix(1, "rho1 equals printed/17", golden::rho1_params(), golden::rho1_printed(), 17);
}

#[test]
fn criterion_02_rho2_matrix() {
    golden_matrix(2, "rho2 equals printed/21", golden::rho2_params(), golden::rho2_printed(), 21);
}

fn gamma_det_and_inertia(id: u32, name: &str, p: CheckerParams, det: Rat) {
    let s = build_state(&p).unwrap();
    let gamma = s.partial_transpose();
    let d = gamma.det().unwrap();
    let (_, inertia) = is_ppt(&s);
    let mut failures = Vec::new();
    check(&mut failures, d == GaussRat::real(det.clone()), || {
        format!("det expected {det}, computed {d}")
    });
    check(&mut failures, inertia == INERTIA_2_0_7, || {
        format!("inertia expected {INERTIA_2_0_7}, computed {inertia}")
    });
    report(id, name, &failures);
}

#[test]
fn criterion_03_rho1_gamma() {
    gamma_det_and_inertia(3, "det and inertia of rho1^G", golden::rho1_params(), golden::rho1_gamma_det());
}

#[test]
fn criterion_04_rho2_gamma() {
    gamma_det_and_inertia(4, "det and inertia of rho2^G", golden::rho2_params(), golden::rho2_gamma_det());
}

#[test]
fn criterion_05_witness() {
    let s = build_state(&golden::rho2_params()).unwrap();
    let w = golden::rho2_witness();
    let value = witness_expectation(&s, &w);
    let expected = GaussRat::real(golden::rho2_witness_value());
    let sr = schmidt_rank(&w).unwrap();
    let mut failures = Vec::new();
    check(&mut failures, value == expected, || format!("expected {expected}, computed {value}"));
    check(&mut failures, sr == 2, || format!("Schmidt rank expected 2, computed {sr}"));
    report(5, "witness value on rho2 and Schmidt rank", &failures);
}

#[test]
fn criterion_06_reduction() {
    let r1 = reduction_criterion(&build_state(&golden::rho1_params()).unwrap());
    let r2 = reduction_criterion(&build_state(&golden::rho2_params()).unwrap());
    let mut failures = Vec::new();
    check(&mut failures, r1, || "rho1 expected violated, computed satisfied".into());
    check(&mut failures, !r2, || "rho2 expected satisfied, computed violated".into());
    report(6, "reduction criterion on rho1, rho2", &failures);
}

#[test]
fn criterion_07_rank_and_genericity() {
    let mut failures = Vec::new();
    for (name, p) in [("rho1", golden::rho1_params()), ("rho2", golden::rho2_params())] {
        let rank = build_state(&p).unwrap().rank();
        check(&mut failures, rank == 4, || format!("{name} rank expected 4, computed {rank}"));
        check(&mut failures, theorem1_generic(&p), || format!("{name} not generic"));
    }
    report(7, "rank 4 and generic", &failures);
}

#[test]
fn criterion_08_psi_rank() {
    let rank = jacobian_rank_psi(&golden::rho2_params());
    let mut failures = Vec::new();
    check(&mut failures, rank == golden::PSI_JACOBIAN_RANK, || {
        format!("expected {}, computed {rank}", golden::PSI_JACOBIAN_RANK)
    });
    report(8, "Jacobian rank of Psi at rho2", &failures);
}

#[test]
fn criterion_09_lambda_rank() {
    let rank = jacobian_rank_lambda(&golden::lambda_point()).unwrap();
    let mut failures = Vec::new();
    check(&mut failures, rank == golden::LAMBDA_JACOBIAN_RANK, || {
        format!("expected {}, computed {rank}", golden::LAMBDA_JACOBIAN_RANK)
    });
    report(9, "Jacobian rank of Lambda at the reference point", &failures);
}

#[test]
fn criterion_10_subfamily_properties() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let range = RationalRange::default();
    let mut failures = Vec::new();
    for k in 0..100 {
        let sp = sampling::valid_subfamily_params(&mut rng, range, 1000).expect("valid sample");
        let s = build_state(&derive_full_params(&sp).unwrap()).unwrap();
        check(&mut failures, s.is_gamma_fixed(), || format!("sample {k}: not fixed by Gamma"));
        let (ppt, inertia) = is_ppt(&s);
        check(&mut failures, ppt, || format!("sample {k}: inertia {inertia}"));
        let p = derive_full_params(&sp).unwrap();
        check(&mut failures, !theorem2_generic(&sp).unwrap() || theorem1_generic(&p), || {
            format!("sample {k}: theorem 2 condition without theorem 1 condition")
        });
    }
    report(10, "100 subfamily samples: Gamma-fixed, PPT, genericity implication", &failures);
}

#[test]
fn criterion_11_bruss_peres() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let range = RationalRange::default();
    let mut failures = Vec::new();
    for k in 0..50 {
        let bp = sampling::bruss_peres_params(&mut rng, range, k % 2 == 0);
        let sp = bruss_peres_embed(&bp).unwrap();
        let p = derive_full_params(&sp).unwrap();
        let forms = bruss_peres_forms(&bp);
        let form_f = checkerboard::family::quad_form_f(&p);
        let (lam, mu) = checkerboard::family::lambda_mu(&p);
        let zeros = [&p.d, &p.e, &p.i, &p.n, &p.r];
        check(&mut failures, zeros.iter().all(|z| z.is_zero()), || {
            format!("sample {k}: d, e, i, n, r not all zero")
        });
        let pairs = [
            ("g", p.g.clone(), forms.g.clone()),
            ("q", p.q.clone(), forms.q.clone()),
            ("h", p.h.clone(), forms.h.clone()),
            ("F(l,-c)", form_f.eval(&p.l, &-&p.c), forms.f_l_c.clone()),
            ("F(mu,-lambda)", form_f.eval(&mu, &-&lam), forms.f_mu_lambda.clone()),
        ];
        for (name, got, want) in pairs {
            check(&mut failures, got == want, || {
                format!("sample {k}: {name} expected {want}, computed {got}")
            });
        }
    }
    // Keep the report readable: the first few mismatches are enough.
    let total = failures.len();
    failures.truncate(3);
    if total > 3 {
        failures.push(format!("... {total} mismatches in total"));
    }
    report(11, "Bruss-Peres embedding identities at 50 samples", &failures);
}

#[test]
fn criterion_12_structure() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let range = RationalRange::default();
    let mut failures = Vec::new();
    let mut generic = 0;
    for k in 0..100 {
        let p = sampling::checker_params(&mut rng, range);
        let s = build_state(&p).unwrap();
        let m = &s.unnormalized;
        check(&mut failures, is_checkerboard(m), || format!("sample {k}: not checkerboard"));
        check(&mut failures, partial_transpose(&partial_transpose(m)) == *m, || {
            format!("sample {k}: Gamma not an involution")
        });
        let (odd, even) = checkerboard_split(m).unwrap();
        check(&mut failures, (&odd * &odd_block_kernel(&p)).is_zero(), || {
            format!("sample {k}: kernel matrix not annihilated")
        });
        if theorem1_generic(&p) {
            generic += 1;
            let (r1, r2) = (odd.rank(), even.rank());
            check(&mut failures, r1 == 2 && r2 == 2, || {
                format!("sample {k}: block ranks ({r1}, {r2}), expected (2, 2)")
            });
        }
    }
    check(&mut failures, generic > 50, || format!("only {generic} generic samples"));
    report(12, "structure of 100 random family members", &failures);
}

#[test]
fn criterion_13_numeric_consistency() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let range = RationalRange::default();
    let cfg = NumericSearch { attempts: 200, tolerance: 1e-8, ..Default::default() };
    let mut failures = Vec::new();
    let mut generic = 0;
    while generic < 20 {
        let p = sampling::checker_params(&mut rng, range);
        if range_product_vector_certificate(&p) != RangeCertificate::NoProductVector {
            continue;
        }
        if let Some(hit) = search_product_vector_numeric(&p, &cfg) {
            failures.push(format!("generic sample {generic}: residual {:e}", hit.residual));
        }
        generic += 1;
    }
    for k in 0..20 {
        let mut entries: [GaussRat; 18] = std::array::from_fn(|_| GaussRat::zero());
        let slot = k % 18;
        entries[slot] = loop {
            let z = sampling::gauss(&mut rng, range);
            if !z.is_zero() {
                break z;
            }
        };
        let p = CheckerParams::from_array(entries);
        check(&mut failures, search_product_vector_numeric(&p, &cfg).is_some(), || {
            format!("degenerate sample {k} ({}): no product vector found", CheckerParams::<GaussRat>::NAMES[slot])
        });
    }
    report(13, "numeric search agrees with the exact certificate", &failures);
}
