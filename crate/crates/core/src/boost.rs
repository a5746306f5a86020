//! Lorentz boost along the field axis: maps p_z = 0 frame solutions to
//! the rest frame. Dirac-spinor boosts are not unitary; boosted states
//! are renormalized and the raw cosh(eta) norm is reported alongside.

use nalgebra::Matrix4;
use num_complex::Complex64 as C64;

use crate::error::Result;
use crate::hamiltonian::{landau_eigenstate, landau_energy, DiracState, EnergyBranch, ModelParams, Sign};

/// Rapidity eta with cached half-angle functions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoostParams {
    pub rapidity: f64,
    pub cosh_half: f64,
    pub tanh_half: f64,
}

impl BoostParams {
    pub fn from_rapidity(rapidity: f64) -> Self {
        Self {
            rapidity,
            cosh_half: (rapidity / 2.0).cosh(),
            tanh_half: (rapidity / 2.0).tanh(),
        }
    }

    pub fn inverse(&self) -> Self {
        Self::from_rapidity(-self.rapidity)
    }
}

/// Rest-frame level energy +-sqrt(1 + p_z^2 + 4 xi (n_r + 1)), obtained
/// from four-momentum invariance E^2 - p_z^2 = E'^2.
pub fn boosted_energy(params: &ModelParams, n_r: usize, sign: Sign) -> f64 {
    let moving = landau_energy(params, n_r, Sign::Plus);
    sign.signum() * (moving * moving + params.pz() * params.pz()).sqrt()
}

/// Rapidity connecting the moving-frame level E' to the rest-frame level E:
/// cosh(eta/2) = sqrt((E + E') / 2E') and tanh(eta/2) = p_z / (E + E'),
/// which satisfy cosh^2 - sinh^2 = 1 identically. The sign of eta follows
/// the sign of p_z.
pub fn rapidity(params: &ModelParams, n_r: usize) -> BoostParams {
    let moving = landau_energy(params, n_r, Sign::Plus);
    let rest = boosted_energy(params, n_r, Sign::Plus);
    let cosh_half = ((rest + moving) / (2.0 * moving)).sqrt();
    let tanh_half = params.pz() / (rest + moving);
    let rapidity = 2.0 * tanh_half.atanh();
    BoostParams {
        rapidity,
        cosh_half,
        tanh_half,
    }
}

/// Spinor boost S^{-1}_{L3}: cosh(eta/2) on the diagonal, tanh(eta/2)
/// mixing (psi_1, psi_3) with + sign and (psi_2, psi_4) with - sign.
/// Determinant 1; the inverse is the matrix at -eta.
pub fn boost_matrix(b: &BoostParams) -> Matrix4<f64> {
    let c = b.cosh_half;
    let t = b.tanh_half;
    c * Matrix4::new(
        1.0, 0.0, t, 0.0, //
        0.0, 1.0, 0.0, -t, //
        t, 0.0, 1.0, 0.0, //
        0.0, -t, 0.0, 1.0,
    )
}

/// A boosted eigenstate: renormalized state plus the raw squared norm
/// (= cosh eta) the non-unitary boost produced.
#[derive(Debug, Clone)]
pub struct BoostedState {
    pub state: DiracState,
    pub raw_norm_squared: f64,
}

/// Applies the spinor boost componentwise to the p_z = 0 eigenstate:
/// spinor indices mix, Fock content is untouched.
pub fn boosted_eigenstate(
    params: &ModelParams,
    n_r: usize,
    branch: EnergyBranch,
) -> Result<BoostedState> {
    let moving = landau_eigenstate(params, n_r, branch)?;
    // Negative-energy levels carry momentum -p_z per unit rapidity, so the
    // spinor boost reaching the same rest frame has the opposite sign of eta.
    let b = match branch.sign {
        Sign::Plus => rapidity(params, n_r),
        Sign::Minus => rapidity(params, n_r).inverse(),
    };
    let s = boost_matrix(&b);
    let raw = apply_spinor_matrix(&s, &moving);
    Ok(BoostedState {
        raw_norm_squared: raw.norm_squared(),
        state: raw.normalized(),
    })
}

fn apply_spinor_matrix(s: &Matrix4<f64>, state: &DiracState) -> DiracState {
    let cutoff = state.cutoff();
    let mut out = DiracState::zero(cutoff);
    for row in 0..4 {
        for col in 0..4 {
            let w = s[(row, col)];
            if w == 0.0 {
                continue;
            }
            let scaled = state.component(col).scaled(C64::new(w, 0.0));
            out.components_mut()[row] = out.components_mut()[row].add(&scaled).unwrap();
        }
    }
    out
}
