use checkerboard::arith::{GaussRat, Rat};
use checkerboard::criteria::{
    is_ppt, min_product_residual, partial_transpose, range_product_vector_certificate,
    reduced_states, reduction_criterion, search_product_vector_numeric, witness_expectation,
    NumericSearch, RangeCertificate, WitnessVector,
};
use checkerboard::family::{
    build_state, checkerboard_assemble, checkerboard_split, is_checkerboard, lambda_mu,
    odd_block_kernel, quad_form_f, theorem1_generic, CheckerParams,
};
use checkerboard::ppt::{
    bruss_peres_embed, bruss_peres_forms, derive_full_params, fixed_point_conditions,
    theorem2_generic,
};
use checkerboard::sampling::{self, RationalRange};
use checkerboard::StateMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const RANGE: RationalRange = RationalRange { max_abs_num: 4, max_den: 4 };

fn samples(seed: u64, n: usize) -> Vec<CheckerParams> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| sampling::checker_params(&mut rng, RANGE)).collect()
}

#[test]
fn family_members_are_states_of_rank_at_most_four() {
    for (k, p) in samples(1, 40).iter().enumerate() {
        let s = build_state(p).unwrap();
        let m = &s.unnormalized;
        assert!(m.is_hermitian() && is_checkerboard(m), "sample {k}");
        assert_eq!(m.trace(), GaussRat::real(s.normalizer.clone()));
        assert_eq!(s.normalized().trace(), GaussRat::one());
        let inertia = m.inertia().unwrap();
        assert_eq!(inertia.n_neg, 0, "sample {k}");
        assert!(s.rank() <= 4 && inertia.n_zero == 9 - s.rank(), "sample {k}");
    }
}

#[test]
fn split_and_kernel() {
    for (k, p) in samples(2, 60).iter().enumerate() {
        let m = build_state(p).unwrap().unnormalized;
        let (odd, even) = checkerboard_split(&m).unwrap();
        assert_eq!(checkerboard_assemble(&odd, &even), m);
        assert!((&odd * &odd_block_kernel(p)).is_zero(), "sample {k}");
        assert!(odd.rank() <= 2 && even.rank() <= 2, "sample {k}");
    }
    let mut not_checker = build_state(&samples(3, 1)[0]).unwrap().unnormalized;
    not_checker[(0, 1)] = GaussRat::one();
    assert!(checkerboard_split(&not_checker).is_err());
}

#[test]
fn partial_transpose_properties() {
    for (k, p) in samples(4, 40).iter().enumerate() {
        let s = build_state(p).unwrap();
        let g = partial_transpose(&s.unnormalized);
        assert_eq!(partial_transpose(&g), s.unnormalized, "sample {k}");
        assert_eq!(g.trace(), s.unnormalized.trace());
        assert!(g.is_hermitian());
        // Γ keeps ρ_A and transposes ρ_B
        let (ra, rb) = reduced_states(&s);
        let (ga, gb) = reduced_states(&StateMatrix::from_unnormalized(g).unwrap());
        assert_eq!(ga, ra);
        assert_eq!(gb, rb.transpose());
    }
}

#[test]
fn fixed_point_conditions_match_gamma_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut members = 0;
    for k in 0..100 {
        let mut p = if k % 2 == 0 {
            let sp = sampling::valid_subfamily_params(&mut rng, RANGE, 1000).unwrap();
            derive_full_params(&sp).unwrap()
        } else {
            sampling::checker_params(&mut rng, RANGE)
        };
        if k % 4 == 2 {
            // perturb one parameter of a member
            let mut arr = p.into_array();
            let slot = rng.gen_range(0..18);
            arr[slot] = &arr[slot] + &GaussRat::from_ints(1, 0);
            p = CheckerParams::from_array(arr);
        }
        let fixed = build_state(&p).unwrap().is_gamma_fixed();
        assert_eq!(fixed_point_conditions(&p), fixed, "sample {k}");
        members += usize::from(fixed);
    }
    assert!(members >= 25, "only {members} fixed samples");
}

#[test]
fn theorem2_states_are_ppt_entangled_and_satisfy_reduction() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut generic = 0;
    for k in 0..100 {
        let sp = sampling::valid_subfamily_params(&mut rng, RANGE, 1000).unwrap();
        if !theorem2_generic(&sp).unwrap() {
            continue;
        }
        generic += 1;
        let p = derive_full_params(&sp).unwrap();
        let s = build_state(&p).unwrap();
        assert!(s.is_gamma_fixed(), "sample {k}");
        assert!(is_ppt(&s).0, "sample {k}");
        assert_eq!(range_product_vector_certificate(&p), RangeCertificate::NoProductVector);
        assert!(!reduction_criterion(&s), "sample {k}");
    }
    assert!(generic >= 80, "only {generic} generic samples");
}

#[test]
fn witness_expectation_is_real() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for p in samples(8, 20) {
        let s = build_state(&p).unwrap();
        let w = WitnessVector::new((0..9).map(|_| sampling::gauss(&mut rng, RANGE)).collect()).unwrap();
        assert!(witness_expectation(&s, &w).is_real());
    }
}

#[test]
fn generic_samples_have_no_numeric_product_vector() {
    let cfg = NumericSearch::default();
    let mut checked = 0;
    for p in samples(9, 120) {
        if !theorem1_generic(&p) {
            continue;
        }
        checked += 1;
        let best = min_product_residual(&p, &cfg);
        assert!(best.residual > cfg.tolerance, "residual {:e}", best.residual);
        if checked == 100 {
            break;
        }
    }
    assert_eq!(checked, 100);
}

#[test]
fn numeric_search_is_deterministic() {
    let p = samples(10, 1).remove(0);
    let cfg = NumericSearch { attempts: 20, ..Default::default() };
    assert_eq!(min_product_residual(&p, &cfg), min_product_residual(&p, &cfg));
    let mut only_q = CheckerParams::zero();
    only_q.q = GaussRat::from_ints(2, -1);
    assert!(search_product_vector_numeric(&only_q, &cfg).is_some());
}

#[test]
fn embedding_identities_with_derived_forms() {
    // The closed forms hold with g = tfc*/(xa*) and an extra factor a*/c*
    // in F(μ, −λ); everything else is as listed in `bruss_peres_forms`.
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for k in 0..50 {
        let bp = sampling::bruss_peres_params(&mut rng, RANGE, k % 2 == 0);
        let p = derive_full_params(&bruss_peres_embed(&bp).unwrap()).unwrap();
        let forms = bruss_peres_forms(&bp);
        for z in [&p.d, &p.e, &p.i, &p.n, &p.r] {
            assert!(z.is_zero(), "sample {k}");
        }
        let x = GaussRat::real(bp.x.clone());
        assert_eq!(p.g, &forms.g / &(&x * &bp.a.conj()), "sample {k}");
        assert_eq!(p.q, forms.q);
        assert_eq!(p.h, forms.h);
        let f = quad_form_f(&p);
        let (lam, mu) = lambda_mu(&p);
        assert_eq!(f.eval(&p.l, &-&p.c), forms.f_l_c);
        assert_eq!(
            f.eval(&mu, &-&lam),
            &(&forms.f_mu_lambda * &bp.a.conj()) / &bp.c.conj(),
            "sample {k}"
        );
    }
}

#[test]
fn embedding_rejects_bad_input() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut bp = sampling::bruss_peres_params(&mut rng, RANGE, true);
    bp.a = GaussRat::from_ints(1, 1);
    assert!(bruss_peres_embed(&bp).is_err());
    bp.real_only = false;
    assert!(bruss_peres_embed(&bp).is_ok());
    bp.x = Rat::from_integer(0.into());
    assert!(bruss_peres_embed(&bp).is_err());
}
