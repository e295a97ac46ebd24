//! Local dimension counts: exact Jacobian ranks of the map from parameters
//! to `N·ρ`, computed with jets.
//!
//! Real parameter order for the full family: `Re a, Im a, Re b, …, Im s`
//! (36 slots). For the Γ-fixed subfamily: `t, x, y`, then `Re/Im` of
//! `a, b, c, f, j, k, l, m, p, s` (23 slots).

use crate::arith::{jet_rank, real_jacobian, GMat, GaussRat, Jet, Rat};
use crate::family::{build_state, checkerboard_split, unnormalized_entries, CheckerParams, StateMatrix, DIM, EVEN_BLOCK, ODD_BLOCK};
use crate::ppt::{derive_full_params, derive_full_params_generic, SubfamilyParams};
use crate::Error;

pub const FULL_PARAM_COUNT: usize = 36;
pub const SUBFAMILY_PARAM_COUNT: usize = 23;

/// Independent real coordinates of Hermitian blocks: each diagonal entry
/// counts once, each strictly-lower entry contributes its real and
/// imaginary part.
#[derive(Clone, Debug)]
pub struct RealCoordinateList {
    pub entries: Vec<Jet>,
    pub diagonal: Vec<bool>,
}

impl RealCoordinateList {
    fn new() -> Self {
        RealCoordinateList { entries: Vec::new(), diagonal: Vec::new() }
    }

    /// Lower-triangular entries (row ≥ col) of the given columns of a block.
    fn push_block(&mut self, full: &[Jet], block: &[usize], cols: usize) {
        for c in 0..cols {
            for r in c..block.len() {
                self.entries.push(full[block[r] * DIM + block[c]].clone());
                self.diagonal.push(r == c);
            }
        }
    }

    pub fn real_count(&self) -> usize {
        self.diagonal.iter().map(|&d| if d { 1 } else { 2 }).sum()
    }

    pub fn rank(&self, param_count: usize) -> Result<usize, Error> {
        jet_rank(&self.entries, param_count)
    }

    pub fn jacobian(&self, param_count: usize) -> Result<GMat, Error> {
        // drop the identically-zero imaginary rows of diagonal entries
        let j = real_jacobian(&self.entries, param_count)?;
        let rows: Vec<Vec<GaussRat>> = (0..self.entries.len())
            .flat_map(|k| {
                let mut v = vec![j.row(2 * k).to_vec()];
                if !self.diagonal[k] {
                    v.push(j.row(2 * k + 1).to_vec());
                }
                v
            })
            .collect();
        GMat::from_rows(rows)
    }
}

/// σ′ and σ″: the first two columns of the two checkerboard blocks of `N·ρ`.
pub fn psi_map(p: &CheckerParams) -> (GMat, GMat) {
    let m = GMat::from_vec(DIM, DIM, unnormalized_entries(p)).expect("9x9");
    let (odd, even) = checkerboard_split(&m).expect("checkerboard by construction");
    (odd.select(&[0, 1, 2, 3], &[0, 1]), even.select(&[0, 1, 2, 3, 4], &[0, 1]))
}

fn full_param_jets(p: &CheckerParams) -> CheckerParams<Jet> {
    let mut slot = 0;
    p.map(|z| {
        let j = Jet::complex_param(z.clone(), slot, FULL_PARAM_COUNT);
        slot += 2;
        j
    })
}

/// The 28 real coordinates of σ′ ⊕ σ″ as jets over the 36 real parameters.
pub fn psi_coordinates(p: &CheckerParams) -> RealCoordinateList {
    let entries = unnormalized_entries(&full_param_jets(p));
    let mut list = RealCoordinateList::new();
    list.push_block(&entries, &ODD_BLOCK, 2);
    list.push_block(&entries, &EVEN_BLOCK, 2);
    list
}

pub fn psi_jacobian(p: &CheckerParams) -> GMat {
    psi_coordinates(p).jacobian(FULL_PARAM_COUNT).expect("consistent jets")
}

pub fn jacobian_rank_psi(p: &CheckerParams) -> usize {
    psi_coordinates(p).rank(FULL_PARAM_COUNT).expect("consistent jets")
}

/// `N·ρ` of the Γ-fixed state.
pub fn lambda_map(sp: &SubfamilyParams) -> Result<StateMatrix, Error> {
    build_state(&derive_full_params(sp)?)
}

/// The 41 real coordinates of `N·ρ` as jets over the 23 real parameters.
pub fn lambda_coordinates(sp: &SubfamilyParams) -> Result<RealCoordinateList, Error> {
    let n = SUBFAMILY_PARAM_COUNT;
    let vars = sp.to_vars(
        |k, r: &Rat| Jet::real_param(r.clone(), k, n),
        |k, z: &GaussRat| Jet::complex_param(z.clone(), 3 + 2 * k, n),
    );
    let full = derive_full_params_generic(&vars)?;
    let entries = unnormalized_entries(&full);
    let mut list = RealCoordinateList::new();
    list.push_block(&entries, &ODD_BLOCK, ODD_BLOCK.len());
    list.push_block(&entries, &EVEN_BLOCK, EVEN_BLOCK.len());
    Ok(list)
}

pub fn lambda_jacobian(sp: &SubfamilyParams) -> Result<GMat, Error> {
    lambda_coordinates(sp)?.jacobian(SUBFAMILY_PARAM_COUNT)
}

pub fn jacobian_rank_lambda(sp: &SubfamilyParams) -> Result<usize, Error> {
    lambda_coordinates(sp)?.rank(SUBFAMILY_PARAM_COUNT)
}

/// A rank observation alongside the dimension it suggests for the
/// normalized family (one less, for the overall scale N).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionReport {
    pub raw_rank: usize,
    pub coordinate_count: usize,
    pub parameter_count: usize,
    pub normalized_dimension: usize,
}

impl DimensionReport {
    fn new(raw_rank: usize, coordinate_count: usize, parameter_count: usize) -> Self {
        DimensionReport {
            raw_rank,
            coordinate_count,
            parameter_count,
            normalized_dimension: raw_rank.saturating_sub(1),
        }
    }
}

pub fn psi_report(p: &CheckerParams) -> DimensionReport {
    let coords = psi_coordinates(p);
    let rank = coords.rank(FULL_PARAM_COUNT).expect("consistent jets");
    DimensionReport::new(rank, coords.real_count(), FULL_PARAM_COUNT)
}

pub fn lambda_report(sp: &SubfamilyParams) -> Result<DimensionReport, Error> {
    let coords = lambda_coordinates(sp)?;
    let rank = coords.rank(SUBFAMILY_PARAM_COUNT)?;
    Ok(DimensionReport::new(rank, coords.real_count(), SUBFAMILY_PARAM_COUNT))
}
