use checkerboard::arith::{GaussRat, Rat};
use checkerboard::param_count::{
    jacobian_rank_lambda, jacobian_rank_psi, lambda_jacobian, lambda_map, lambda_report,
    psi_jacobian, psi_report, FULL_PARAM_COUNT, SUBFAMILY_PARAM_COUNT,
};
use checkerboard::family::{EVEN_BLOCK, ODD_BLOCK};
use checkerboard::ppt::SubfamilyParams;
use checkerboard::sampling::{self, RationalRange};
use checkerboard::{golden, CheckerParams};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const RANGE: RationalRange = RationalRange { max_abs_num: 4, max_den: 4 };

/// Shift real slot `slot` (ordering t, x, y, Re a, Im a, …) by `h`.
fn shift(sp: &SubfamilyParams, slot: usize, h: &Rat) -> SubfamilyParams {
    let mut out = sp.clone();
    let bump = |z: &mut GaussRat, im: bool| {
        if im {
            z.im += h;
        } else {
            z.re += h;
        }
    };
    match slot {
        0 => out.t += h,
        1 => out.x += h,
        2 => out.y += h,
        _ => {
            let k = (slot - 3) / 2;
            let im = (slot - 3) % 2 == 1;
            let z = [
                &mut out.a, &mut out.b, &mut out.c, &mut out.f, &mut out.j,
                &mut out.k, &mut out.l, &mut out.m, &mut out.p, &mut out.s,
            ];
            bump(z.into_iter().nth(k).unwrap(), im);
        }
    }
    out
}

/// Real coordinate values in Jacobian row order.
fn real_values(sp: &SubfamilyParams) -> Vec<Rat> {
    let m = lambda_map(sp).unwrap().unnormalized;
    let mut out = Vec::new();
    for block in [&ODD_BLOCK[..], &EVEN_BLOCK[..]] {
        for c in 0..block.len() {
            for r in c..block.len() {
                let z = &m[(block[r], block[c])];
                out.push(z.re.clone());
                if r != c {
                    out.push(z.im.clone());
                }
            }
        }
    }
    out
}

fn to_f64(q: &Rat) -> f64 {
    num_traits::ToPrimitive::to_f64(q).unwrap()
}

#[test]
fn lambda_jacobian_matches_finite_differences() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let h = Rat::new(1.into(), 1_000_000.into());
    let two_h = &h + &h;
    for point in 0..10 {
        let sp = sampling::valid_subfamily_params(&mut rng, RANGE, 1000).unwrap();
        let j = lambda_jacobian(&sp).unwrap();
        assert_eq!((j.rows(), j.cols()), (41, SUBFAMILY_PARAM_COUNT));
        for slot in 0..SUBFAMILY_PARAM_COUNT {
            let up = real_values(&shift(&sp, slot, &h));
            let down = real_values(&shift(&sp, slot, &-&h));
            for row in 0..j.rows() {
                let exact = &j[(row, slot)];
                assert!(exact.is_real());
                let fd = to_f64(&((&up[row] - &down[row]) / &two_h));
                let e = to_f64(&exact.re);
                assert!(
                    (fd - e).abs() <= 1e-4 * e.abs().max(1.0),
                    "point {point} row {row} slot {slot}: jet {e}, fd {fd}"
                );
            }
        }
    }
}

#[test]
fn lambda_rank_bounded_by_parameter_count() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    let mut max_rank = 0;
    for _ in 0..20 {
        let sp = sampling::valid_subfamily_params(&mut rng, RANGE, 1000).unwrap();
        let report = lambda_report(&sp).unwrap();
        assert!(report.raw_rank <= SUBFAMILY_PARAM_COUNT);
        assert_eq!(report.coordinate_count, 41);
        assert_eq!(report.raw_rank, jacobian_rank_lambda(&sp).unwrap());
        max_rank = max_rank.max(report.raw_rank);
    }
    assert!(max_rank >= 12, "sampled maximum {max_rank}");
}

#[test]
fn psi_rank_bounds() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..20 {
        let p = sampling::checker_params(&mut rng, RANGE);
        let r = jacobian_rank_psi(&p);
        assert!(r <= 28);
        assert_eq!(psi_jacobian(&p).rows(), 28);
        assert_eq!(psi_jacobian(&p).cols(), FULL_PARAM_COUNT);
    }
    let report = psi_report(&golden::rho2_params());
    assert_eq!((report.raw_rank, report.normalized_dimension), (28, 27));
    assert_eq!(jacobian_rank_psi(&CheckerParams::zero()), 0);
}

#[test]
fn psi_jacobian_is_twice_linear_part() {
    // Ψ is quadratic, so Ψ(p + h e) − Ψ(p − h e) = 2h·∂Ψ exactly
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    let p = sampling::checker_params(&mut rng, RANGE);
    let j = psi_jacobian(&p);
    let h = Rat::new(1.into(), 7.into());
    for slot in 0..FULL_PARAM_COUNT {
        let bumped = |sign: i64| {
            let mut arr = p.clone().into_array();
            let d = &h * Rat::from_integer(sign.into());
            if slot % 2 == 0 {
                arr[slot / 2].re += &d;
            } else {
                arr[slot / 2].im += &d;
            }
            let (odd, even) = checkerboard::param_count::psi_map(&CheckerParams::from_array(arr));
            (odd, even)
        };
        let ((o1, e1), (o2, e2)) = (bumped(1), bumped(-1));
        let scale = (&h + &h).recip();
        let (d_odd, d_even) = ((&o1 - &o2).scale(&scale), (&e1 - &e2).scale(&scale));
        // first column of each block, lower triangle: rows follow psi_coordinates order
        let mut expected = Vec::new();
        for (blk, n) in [(&d_odd, 4), (&d_even, 5)] {
            for c in 0..2 {
                for r in c..n {
                    expected.push(blk[(r, c)].re.clone());
                    if r != c {
                        expected.push(blk[(r, c)].im.clone());
                    }
                }
            }
        }
        for (row, want) in expected.iter().enumerate() {
            assert_eq!(j[(row, slot)], GaussRat::real(want.clone()), "row {row} slot {slot}");
        }
    }
}
