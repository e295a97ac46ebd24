//! Golden run of every published number, with expected and computed values
//! side by side. Expected values can be overridden from a JSON file, which
//! is how a tampered golden is demonstrated.

use checkerboard::criteria::{
    is_ppt, partial_transpose, range_product_vector_certificate, reduction_criterion, schmidt_rank,
    search_product_vector_numeric, witness_expectation, NumericSearch, RangeCertificate,
};
use checkerboard::family::{
    build_state, checkerboard_split, is_checkerboard, lambda_mu, odd_block_kernel, quad_form_f,
    theorem1_generic,
};
use checkerboard::param_count::{jacobian_rank_lambda, jacobian_rank_psi};
use checkerboard::ppt::{bruss_peres_embed, bruss_peres_forms, derive_full_params, theorem2_generic};
use checkerboard::sampling::{self, RationalRange};
use checkerboard::{golden, CheckerParams, GMat, GaussRat};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;

/// Expected values as strings; each field may be overridden.
#[derive(Clone, Debug, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Expected {
    pub rho1_normalizer: String,
    pub rho2_normalizer: String,
    pub rho1_gamma_det: String,
    pub rho1_gamma_inertia: String,
    pub rho2_gamma_det: String,
    pub rho2_gamma_inertia: String,
    pub rho2_witness_value: String,
    pub rho2_witness_schmidt_rank: String,
    pub rho1_reduction: String,
    pub rho2_reduction: String,
    pub state_ranks: String,
    pub psi_rank: String,
    pub lambda_rank: String,
}

impl Default for Expected {
    fn default() -> Self {
        Expected {
            rho1_normalizer: "17".into(),
            rho2_normalizer: "21".into(),
            rho1_gamma_det: golden::rho1_gamma_det().to_string(),
            rho1_gamma_inertia: "(2, 0, 7)".into(),
            rho2_gamma_det: golden::rho2_gamma_det().to_string(),
            rho2_gamma_inertia: "(2, 0, 7)".into(),
            rho2_witness_value: golden::rho2_witness_value().to_string(),
            rho2_witness_schmidt_rank: "2".into(),
            rho1_reduction: "violated".into(),
            rho2_reduction: "satisfied".into(),
            state_ranks: "4, 4".into(),
            psi_rank: golden::PSI_JACOBIAN_RANK.to_string(),
            lambda_rank: golden::LAMBDA_JACOBIAN_RANK.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Item {
    pub id: u32,
    pub name: &'static str,
    pub expected: String,
    pub computed: String,
}

impl Item {
    pub fn pass(&self) -> bool {
        self.expected == self.computed
    }

    pub fn line(&self) -> String {
        let status = if self.pass() { "PASS" } else { "FAIL" };
        format!(
            "{status} {:>2} {}\n        expected: {}\n        computed: {}",
            self.id, self.name, self.expected, self.computed
        )
    }
}

fn item(id: u32, name: &'static str, expected: String, computed: String) -> Item {
    Item { id, name, expected, computed }
}

fn reduction_word(violated: bool) -> &'static str {
    if violated {
        "violated"
    } else {
        "satisfied"
    }
}

/// `N` and whether `N·ρ` equals the printed matrix.
fn matrix_item(id: u32, name: &'static str, p: CheckerParams, printed: GMat, n: &str) -> Item {
    let s = build_state(&p).expect("golden parameters are nonzero");
    let mut computed = s.normalizer.to_string();
    let diff: Vec<String> = (0..9)
        .flat_map(|r| (0..9).map(move |c| (r, c)))
        .filter(|&(r, c)| s.unnormalized[(r, c)] != printed[(r, c)])
        .map(|(r, c)| format!("({r},{c}): {} vs printed {}", s.unnormalized[(r, c)], printed[(r, c)]))
        .collect();
    computed += if diff.is_empty() { ", all 81 entries match" } else { ", entries differ: " };
    computed += &diff.join("; ");
    item(id, name, format!("{n}, all 81 entries match"), computed)
}

fn gamma_item(id: u32, name: &'static str, p: CheckerParams, det: &str, inertia: &str) -> Item {
    let s = build_state(&p).expect("golden parameters are nonzero");
    let d = s.partial_transpose().det().expect("square");
    let (_, i) = is_ppt(&s);
    item(id, name, format!("det {det}, inertia {inertia}"), format!("det {d}, inertia {i}"))
}

fn counted(ok: usize, total: usize) -> String {
    format!("{ok}/{total}")
}

pub fn run(exp: &Expected) -> Vec<Item> {
    let range = RationalRange::default();
    let rho1 = build_state(&golden::rho1_params()).expect("nonzero");
    let rho2 = build_state(&golden::rho2_params()).expect("nonzero");
    let mut items = vec![
        matrix_item(1, "N·rho1 equals the printed matrix", golden::rho1_params(), golden::rho1_printed(), &exp.rho1_normalizer),
        matrix_item(2, "N·rho2 equals the printed matrix", golden::rho2_params(), golden::rho2_printed(), &exp.rho2_normalizer),
        gamma_item(3, "partial transpose of rho1", golden::rho1_params(), &exp.rho1_gamma_det, &exp.rho1_gamma_inertia),
        gamma_item(4, "partial transpose of rho2", golden::rho2_params(), &exp.rho2_gamma_det, &exp.rho2_gamma_inertia),
    ];

    let w = golden::rho2_witness();
    let value = witness_expectation(&rho2, &w);
    items.push(item(
        5,
        "distillability witness on rho2",
        format!("value {}, Schmidt rank {}", exp.rho2_witness_value, exp.rho2_witness_schmidt_rank),
        format!("value {value}, Schmidt rank {}", schmidt_rank(&w).expect("nonzero witness")),
    ));
    items.push(item(
        6,
        "reduction criterion",
        format!("rho1 {}, rho2 {}", exp.rho1_reduction, exp.rho2_reduction),
        format!(
            "rho1 {}, rho2 {}",
            reduction_word(reduction_criterion(&rho1)),
            reduction_word(reduction_criterion(&rho2))
        ),
    ));
    items.push(item(
        7,
        "ranks of N·rho1, N·rho2 and genericity",
        format!("{}; generic true, true", exp.state_ranks),
        format!(
            "{}, {}; generic {}, {}",
            rho1.rank(),
            rho2.rank(),
            theorem1_generic(&golden::rho1_params()),
            theorem1_generic(&golden::rho2_params())
        ),
    ));
    items.push(item(
        8,
        "Jacobian rank of Psi at rho2",
        exp.psi_rank.clone(),
        jacobian_rank_psi(&golden::rho2_params()).to_string(),
    ));
    items.push(item(
        9,
        "Jacobian rank of Lambda at the reference point",
        exp.lambda_rank.clone(),
        jacobian_rank_lambda(&golden::lambda_point()).map_or_else(|e| e.to_string(), |r| r.to_string()),
    ));

    // 10: Γ-fixed subfamily samples
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let (mut fixed, mut ppt, mut implication) = (0, 0, 0);
    for _ in 0..100 {
        let sp = sampling::valid_subfamily_params(&mut rng, range, 1000).expect("valid sample");
        let p = derive_full_params(&sp).expect("validated");
        let s = build_state(&p).expect("nonzero");
        fixed += usize::from(s.is_gamma_fixed());
        ppt += usize::from(is_ppt(&s).0);
        implication += usize::from(!theorem2_generic(&sp).expect("validated") || theorem1_generic(&p));
    }
    items.push(item(
        10,
        "100 subfamily samples: Gamma-fixed, PPT, genericity implication",
        "100/100, 100/100, 100/100".into(),
        format!("{}, {}, {}", counted(fixed, 100), counted(ppt, 100), counted(implication, 100)),
    ));

    // 11: Bruß–Peres embedding identities, per identity
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut ok = [0usize; 6];
    for k in 0..50 {
        let bp = sampling::bruss_peres_params(&mut rng, range, k % 2 == 0);
        let p = derive_full_params(&bruss_peres_embed(&bp).expect("valid")).expect("valid");
        let forms = bruss_peres_forms(&bp);
        let f = quad_form_f(&p);
        let (lam, mu) = lambda_mu(&p);
        let checks = [
            [&p.d, &p.e, &p.i, &p.n, &p.r].iter().all(|z| z.is_zero()),
            p.g == forms.g,
            p.q == forms.q,
            p.h == forms.h,
            f.eval(&p.l, &-&p.c) == forms.f_l_c,
            f.eval(&mu, &-&lam) == forms.f_mu_lambda,
        ];
        for (n, c) in ok.iter_mut().zip(checks) {
            *n += usize::from(c);
        }
    }
    let names = ["d=e=i=n=r=0", "g=tfc*", "q=-f*", "h=bc*/f*", "F(l,-c)", "F(mu,-lambda)"];
    let fmt = |counts: [usize; 6]| {
        names.iter().zip(counts).map(|(n, c)| format!("{n} {c}/50")).collect::<Vec<_>>().join(", ")
    };
    items.push(item(11, "Bruss-Peres embedding identities at 50 samples", fmt([50; 6]), fmt(ok)));

    // 12: structure of random family members
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let (mut pattern, mut involution, mut kernel, mut ranks, mut generic) = (0, 0, 0, 0, 0);
    for _ in 0..100 {
        let p = sampling::checker_params(&mut rng, range);
        let m = build_state(&p).expect("nonzero").unnormalized;
        pattern += usize::from(is_checkerboard(&m));
        involution += usize::from(partial_transpose(&partial_transpose(&m)) == m);
        let (odd, even) = checkerboard_split(&m).expect("checkerboard");
        kernel += usize::from((&odd * &odd_block_kernel(&p)).is_zero());
        if theorem1_generic(&p) {
            generic += 1;
            ranks += usize::from(odd.rank() == 2 && even.rank() == 2);
        }
    }
    items.push(item(
        12,
        "structure of 100 random family members",
        format!("pattern 100/100, involution 100/100, kernel 100/100, block ranks 2 {generic}/{generic}"),
        format!(
            "pattern {pattern}/100, involution {involution}/100, kernel {kernel}/100, block ranks 2 {ranks}/{generic}"
        ),
    ));

    // 13: numeric oracle against the exact certificate
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let cfg = NumericSearch { attempts: 200, tolerance: 1e-8, ..Default::default() };
    let (mut generic_clear, mut seen) = (0, 0);
    while seen < 20 {
        let p = sampling::checker_params(&mut rng, range);
        if range_product_vector_certificate(&p) != RangeCertificate::NoProductVector {
            continue;
        }
        seen += 1;
        generic_clear += usize::from(search_product_vector_numeric(&p, &cfg).is_none());
    }
    let mut degenerate_found = 0;
    for k in 0..20 {
        let mut entries: [GaussRat; 18] = std::array::from_fn(|_| GaussRat::zero());
        entries[k % 18] = loop {
            let z = sampling::gauss(&mut rng, range);
            if !z.is_zero() {
                break z;
            }
        };
        let p = CheckerParams::from_array(entries);
        degenerate_found += usize::from(search_product_vector_numeric(&p, &cfg).is_some());
    }
    items.push(item(
        13,
        "numeric product-vector search vs exact certificate",
        "generic none found 20/20, degenerate found 20/20".into(),
        format!("generic none found {generic_clear}/20, degenerate found {degenerate_found}/20"),
    ));
    items
}

pub fn report(items: &[Item]) -> String {
    let mut out = String::new();
    for i in items {
        out += &i.line();
        out.push('\n');
    }
    let passed = items.iter().filter(|i| i.pass()).count();
    out += &format!("{passed}/{} items pass\n", items.len());
    out
}
