//! Mesoscopic-regime asymptotics: factorized branch evolution, circular
//! trajectories, revival/cat schedule and Dirac cat construction.
//!
//! Everything here fixes the initial coherent phase to z_r = i|z_r|, the
//! convention that pins the t = 0 trajectory point to (0, +|z_r|) in
//! oscillator-width units. With that phase the branch eigenspinors are
//! real: |+-E> = alpha_pm chi_1-up +- alpha_mp chi_2-down, which are the
//! exact eigenvectors of the semiclassical two-level Hamiltonian
//! Delta sigma_z + |g||z| sigma_x. (For real z_r the chi_2-down amplitude
//! picks up the factor +-i instead; the branch phase is i conj(z)/|z|.)

use num_complex::Complex64 as C64;

use crate::error::Result;
use crate::evolution::semiclassical_energy;
use crate::fock::{coherent_vector, inner_product, FockVector};
use crate::hamiltonian::{DiracState, ModelParams, Sign};

/// Mean-occupation band labels used for reporting; boundaries follow the
/// collapse-revival phenomenology (discreteness matters below ~10 quanta,
/// the semiclassical picture takes over beyond ~100).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    Microscopic,
    Mesoscopic,
    Macroscopic,
}

impl Regime {
    pub fn classify(n_bar: f64) -> Self {
        if n_bar <= 10.0 {
            Regime::Microscopic
        } else if n_bar <= 100.0 {
            Regime::Mesoscopic
        } else {
            Regime::Macroscopic
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Regime::Microscopic => "microscopic",
            Regime::Mesoscopic => "mesoscopic",
            Regime::Macroscopic => "macroscopic",
        }
    }
}

/// Two-component spinor over (chi_1-up, chi_2-down) with its energy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenSpinor {
    pub amplitudes: [C64; 2],
    pub energy: f64,
}

/// Semiclassical eigenspinors for z_r = i sqrt(n_bar): the orthonormal
/// pair (alpha_plus, alpha_minus) and (alpha_minus, -alpha_plus) with
/// energies +-E_z, E_z = sqrt(1 + 4 xi n_bar).
pub fn semiclassical_eigenspinors(params: &ModelParams, n_bar: f64) -> [EigenSpinor; 2] {
    let energy = semiclassical_energy(params, n_bar);
    let (ap, am) = crate::hamiltonian::mixing_amplitudes(energy);
    [
        EigenSpinor {
            amplitudes: [C64::new(ap, 0.0), C64::new(am, 0.0)],
            energy,
        },
        EigenSpinor {
            amplitudes: [C64::new(am, 0.0), C64::new(-ap, 0.0)],
            energy: -energy,
        },
    ]
}

/// Factorized spinor (x) orbital branch state of the asymptotic
/// approximation. Both factors are unit norm at all times.
#[derive(Debug, Clone)]
pub struct AsymptoticState {
    /// Spinor over (chi_1-up, chi_2-down).
    pub spinor: [C64; 2],
    /// Rotated coherent state.
    pub orbital: FockVector,
    /// Accumulated global phase e^{-+ i t (E - |g|^2 |z|^2 / 2E)}.
    pub global_phase: C64,
}

impl AsymptoticState {
    /// Embeds the factorized state into the full four-component space.
    pub fn to_dirac_state(&self) -> DiracState {
        DiracState::product(
            [
                self.spinor[0] * self.global_phase,
                C64::ZERO,
                C64::ZERO,
                self.spinor[1] * self.global_phase,
            ],
            &self.orbital,
        )
    }
}

/// Asymptotic (Gea-Banacloche-type) evolution of the branch state
/// |+-E_z>|z>: the spinor's chi_1-up amplitude rotates at Omega_rot
/// while the orbital stays coherent with phase z e^{-+ i Omega_rot t}.
pub fn asymptotic_state(params: &ModelParams, z: C64, sign: Sign, t: f64) -> Result<AsymptoticState> {
    assert!(z.norm() > 0.0, "asymptotic branch needs a nonzero coherent amplitude");
    let n_bar = z.norm_sqr();
    let energy = semiclassical_energy(params, n_bar);
    let (ap, am) = crate::hamiltonian::mixing_amplitudes(energy);
    let omega_rot = params.coupling_strength().powi(2) / (2.0 * energy);
    let s = sign.signum();
    let rotation = C64::from_polar(1.0, -s * omega_rot * t);
    // branch phase on the chi_2-down slot: i conj(z)/|z| (= 1 for z = i|z|)
    let branch_phase = C64::I * z.conj() / z.norm();
    let spinor = match sign {
        Sign::Plus => [C64::new(ap, 0.0) * rotation, branch_phase * am],
        Sign::Minus => [C64::new(am, 0.0) * rotation, -branch_phase * ap],
    };
    let orbital = coherent_vector(z * rotation, params.cutoff())?;
    let global_phase = C64::from_polar(1.0, -s * t * (energy - 2.0 * params.xi() * n_bar / energy));
    Ok(AsymptoticState {
        spinor,
        orbital,
        global_phase,
    })
}

/// Revival and cat times with the rotation frequency and the relative
/// phase delta the two branch spinors acquire by the cat time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CatSchedule {
    /// Revival time t_R = 2 pi E_z / |g|^2 = pi E_z / 2 xi.
    pub t_revival: f64,
    /// Dirac cat time t_d = t_R / 2.
    pub t_cat: f64,
    /// Orbital rotation frequency Omega_rot = |g|^2 / 2 E_z = 2 xi / E_z.
    pub omega_rot: f64,
    /// arg <Phi_sp^-(t_d) | Phi_sp^+(t_d)>; the branch spinors coincide up
    /// to e^{i delta} in the ultra-relativistic limit.
    pub delta: f64,
}

pub fn cat_schedule(params: &ModelParams, n_bar: f64) -> CatSchedule {
    let energy = semiclassical_energy(params, n_bar);
    let g_sq = params.coupling_strength().powi(2);
    let t_revival = 2.0 * std::f64::consts::PI * energy / g_sq;
    let t_cat = t_revival / 2.0;
    let omega_rot = g_sq / (2.0 * energy);
    let delta = branch_spinor_overlap(params, n_bar, t_cat).arg();
    CatSchedule {
        t_revival,
        t_cat,
        omega_rot,
        delta,
    }
}

/// <Phi_sp^-(t) | Phi_sp^+(t)> from the asymptotic branch spinors,
/// independent of the coherent phase convention.
fn branch_spinor_overlap(params: &ModelParams, n_bar: f64, t: f64) -> C64 {
    let z = C64::new(0.0, n_bar.sqrt());
    let spinor = |sign| {
        // orbital content irrelevant; reuse the branch spinor construction
        let energy = semiclassical_energy(params, n_bar);
        let (ap, am) = crate::hamiltonian::mixing_amplitudes(energy);
        let omega_rot = params.coupling_strength().powi(2) / (2.0 * energy);
        let branch_phase = C64::I * z.conj() / z.norm();
        match sign {
            Sign::Plus => [
                C64::new(ap, 0.0) * C64::from_polar(1.0, -omega_rot * t),
                branch_phase * am,
            ],
            Sign::Minus => [
                C64::new(am, 0.0) * C64::from_polar(1.0, omega_rot * t),
                -branch_phase * ap,
            ],
        }
    };
    let plus = spinor(Sign::Plus);
    let minus = spinor(Sign::Minus);
    minus[0].conj() * plus[0] + minus[1].conj() * plus[1]
}

/// Electron guiding trajectory of the +- branch in oscillator-width
/// units: (+-|z| sin Omega_rot t, |z| cos Omega_rot t). Both branches
/// start at (0, +|z|) and rotate in opposite senses; the + branch turns
/// clockwise under the calibrated position convention
/// (<X>, <Y>) = (Re<a_r>, Im<a_r>).
pub fn trajectory(params: &ModelParams, z_abs: f64, sign: Sign, t: f64) -> (f64, f64) {
    let omega_rot = cat_schedule(params, z_abs * z_abs).omega_rot;
    let (sin, cos) = (omega_rot * t).sin_cos();
    (sign.signum() * z_abs * sin, z_abs * cos)
}

/// |<Phi_sp^+(t_d) | Phi_sp^-(t_d)>| = sqrt(4 xi n_bar / (1 + 4 xi n_bar)),
/// the quantity deciding whether a cat forms (-> 1 ultra-relativistically).
pub fn spinor_overlap_at_cat_time(params: &ModelParams, n_bar: f64) -> f64 {
    let x = 4.0 * params.xi() * n_bar;
    (x / (1.0 + x)).sqrt()
}

/// Leading non-relativistic expansion of the cat-time spinor overlap,
/// 2 sqrt(xi n_bar): vanishing as xi -> 0, so the cat disappears.
pub fn spinor_overlap_nonrelativistic(params: &ModelParams, n_bar: f64) -> f64 {
    2.0 * (params.xi() * n_bar).sqrt()
}

/// The composed state at the cat time.
#[derive(Debug, Clone)]
pub struct DiracCat {
    /// Common spinor the two branches (approximately) share at t_d.
    pub spinor: [C64; 2],
    /// Normalized orbital superposition alpha_+ |o_+> + e^{-i delta} alpha_- |o_->.
    pub orbital_cat: FockVector,
    /// The two antipodal coherent components with weights |alpha_+-|^2.
    pub components: [(FockVector, f64); 2],
    /// Relative branch phase at t_d.
    pub delta: f64,
    pub schedule: CatSchedule,
    /// |<o_+|o_->|; e^{-2|z|^2} analytically.
    pub component_overlap: f64,
    /// 4 xi |z|^2 >= 10 holds; outside it the coherence washes out.
    pub ultra_relativistic: bool,
}

/// Builds the Dirac cat reached at t_d from |z_r> chi_1-up, z_r = i|z|.
pub fn dirac_cat(params: &ModelParams, z: C64) -> Result<DiracCat> {
    let n_bar = z.norm_sqr();
    let schedule = cat_schedule(params, n_bar);
    let plus = asymptotic_state(params, z, Sign::Plus, schedule.t_cat)?;
    let minus = asymptotic_state(params, z, Sign::Minus, schedule.t_cat)?;
    let energy = semiclassical_energy(params, n_bar);
    let (ap, am) = crate::hamiltonian::mixing_amplitudes(energy);
    let o_plus = plus.orbital.scaled(plus.global_phase);
    let o_minus = minus.orbital.scaled(minus.global_phase);
    let delta = schedule.delta;
    let cat = o_plus
        .scaled(C64::new(ap, 0.0))
        .add(&o_minus.scaled(C64::from_polar(am, -delta)))?
        .normalized();
    let component_overlap = inner_product(&o_plus, &o_minus)?.norm();
    // normalize the shared spinor from the + branch
    let norm = (plus.spinor[0].norm_sqr() + plus.spinor[1].norm_sqr()).sqrt();
    let spinor = [plus.spinor[0] / norm, plus.spinor[1] / norm];
    Ok(DiracCat {
        spinor,
        orbital_cat: cat,
        components: [(o_plus, ap * ap), (o_minus, am * am)],
        delta,
        schedule,
        component_overlap,
        ultra_relativistic: 4.0 * params.xi() * n_bar >= 10.0,
    })
}
