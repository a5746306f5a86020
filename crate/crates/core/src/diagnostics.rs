//! Reduced density matrices, purity and fidelity, position expectations
//! and Husimi-Q phase-space rendering.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::fock::{coherent_raw, inner_product, FockVector};
use crate::hamiltonian::DiracState;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    /// 4x4 spinor reduction.
    Spinor,
    /// (N+1)x(N+1) orbital reduction.
    Orbital,
}

/// Hermitian, positive-semidefinite, unit-trace reduced state.
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    entries: DMatrix<C64>,
    subsystem: Subsystem,
}

impl DensityMatrix {
    pub fn entries(&self) -> &DMatrix<C64> {
        &self.entries
    }

    pub fn subsystem(&self) -> Subsystem {
        self.subsystem
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim()).map(|i| self.entries[(i, i)].re).sum()
    }
}

/// Partial trace of a pure state over the complementary subsystem.
pub fn reduced_density(state: &DiracState, subsystem: Subsystem) -> DensityMatrix {
    let entries = match subsystem {
        Subsystem::Spinor => {
            let mut rho = DMatrix::zeros(4, 4);
            for i in 0..4 {
                for j in 0..4 {
                    rho[(i, j)] = inner_product(state.component(j), state.component(i)).unwrap();
                }
            }
            rho
        }
        Subsystem::Orbital => {
            let dim = state.cutoff() + 1;
            let mut rho = DMatrix::zeros(dim, dim);
            for c in state.components() {
                let amps = c.amplitudes();
                for m in 0..dim {
                    if amps[m] == C64::ZERO {
                        continue;
                    }
                    for n in 0..dim {
                        rho[(m, n)] += amps[m] * amps[n].conj();
                    }
                }
            }
            rho
        }
    };
    DensityMatrix { entries, subsystem }
}

/// tr(rho^2), in [1/dim, 1].
pub fn purity(rho: &DensityMatrix) -> f64 {
    let mut acc = 0.0;
    for i in 0..rho.dim() {
        for j in 0..rho.dim() {
            acc += (rho.entries[(i, j)] * rho.entries[(j, i)]).re;
        }
    }
    acc
}

/// |<a|b>| for normalized states of equal dimension.
pub fn fidelity(a: &DiracState, b: &DiracState) -> Result<f64> {
    Ok(a.inner_product(b)?.norm())
}

/// Guiding-center position (<X>, <Y>) in oscillator-width units,
/// calibrated as (Re<a_r>, Im<a_r>). The left-handed mode contributes
/// nothing in the n_l = 0 sector.
pub fn position_expectation(state: &DiracState) -> (f64, f64) {
    let mut a_expect = C64::ZERO;
    for c in state.components() {
        let amps = c.amplitudes();
        for n in 1..amps.len() {
            a_expect += amps[n - 1].conj() * (n as f64).sqrt() * amps[n];
        }
    }
    (a_expect.re, a_expect.im)
}

/// Rectangular phase-space window and sampling density for Husimi grids.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub x_range: (f64, f64),
    pub y_range: (f64, f64),
    pub nx: usize,
    pub ny: usize,
}

impl GridSpec {
    /// Default window for a state of coherent radius |z|: +-(|z| + 4) at
    /// 201x201, covering 6 sigma so the Riemann sum stays within 1%.
    pub fn covering(z_abs: f64) -> Self {
        let half = z_abs + 4.0;
        Self {
            x_range: (-half, half),
            y_range: (-half, half),
            nx: 201,
            ny: 201,
        }
    }

    pub fn x_at(&self, i: usize) -> f64 {
        lerp(self.x_range, i, self.nx)
    }

    pub fn y_at(&self, j: usize) -> f64 {
        lerp(self.y_range, j, self.ny)
    }

    pub fn cell_area(&self) -> f64 {
        let dx = (self.x_range.1 - self.x_range.0) / (self.nx - 1) as f64;
        let dy = (self.y_range.1 - self.y_range.0) / (self.ny - 1) as f64;
        dx * dy
    }
}

fn lerp(range: (f64, f64), i: usize, n: usize) -> f64 {
    range.0 + (range.1 - range.0) * i as f64 / (n - 1) as f64
}

/// Sampled Q(beta) = <beta|rho|beta> / pi field. Row-major over y
/// (rows) then x (columns).
#[derive(Debug, Clone)]
pub struct PhaseSpaceGrid {
    pub spec: GridSpec,
    pub values: Vec<f64>,
    /// Riemann sum of Q over the window; ~1 when the grid covers the state.
    pub normalization: f64,
}

impl PhaseSpaceGrid {
    pub fn value(&self, ix: usize, iy: usize) -> f64 {
        self.values[iy * self.spec.nx + ix]
    }

    pub fn covers_state(&self, tolerance: f64) -> bool {
        (self.normalization - 1.0).abs() <= tolerance
    }

    /// Plain-text serialization: 3 header lines (x_range, y_range,
    /// resolution), then one row per line in scientific notation with
    /// 9 significant digits.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "x_range {:.8e} {:.8e}\n",
            self.spec.x_range.0, self.spec.x_range.1
        ));
        out.push_str(&format!(
            "y_range {:.8e} {:.8e}\n",
            self.spec.y_range.0, self.spec.y_range.1
        ));
        out.push_str(&format!("resolution {} {}\n", self.spec.nx, self.spec.ny));
        for iy in 0..self.spec.ny {
            let row: Vec<String> = (0..self.spec.nx)
                .map(|ix| format!("{:.8e}", self.value(ix, iy)))
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Husimi Q of an orbital density matrix on the given grid.
///
/// Evaluated through the spectral form Q = sum_k lambda_k |<u_k|beta>|^2 / pi,
/// skipping negligible eigenvalues; probe states are raw truncated coherent
/// vectors (their discarded tail overlaps nothing the state occupies).
pub fn husimi_q(rho: &DensityMatrix, spec: GridSpec) -> Result<PhaseSpaceGrid> {
    if rho.subsystem != Subsystem::Orbital {
        return Err(Error::DimensionMismatch {
            left: rho.dim(),
            right: 4,
        });
    }
    let cutoff = rho.dim() - 1;
    let eigen = SymmetricEigen::new(rho.entries.clone());
    let mut modes: Vec<(f64, Vec<C64>)> = Vec::new();
    for (k, lambda) in eigen.eigenvalues.iter().enumerate() {
        if *lambda > 1e-14 {
            modes.push((*lambda, eigen.eigenvectors.column(k).iter().copied().collect()));
        }
    }
    let mut values = vec![0.0; spec.nx * spec.ny];
    for iy in 0..spec.ny {
        let y = spec.y_at(iy);
        for ix in 0..spec.nx {
            let x = spec.x_at(ix);
            let probe = coherent_raw(C64::new(x, y), cutoff);
            let mut q = 0.0;
            for (lambda, mode) in &modes {
                let overlap: C64 = mode
                    .iter()
                    .zip(probe.amplitudes())
                    .map(|(u, b)| u.conj() * b)
                    .sum();
                q += lambda * overlap.norm_sqr();
            }
            values[iy * spec.nx + ix] = q / std::f64::consts::PI;
        }
    }
    let normalization = values.iter().sum::<f64>() * spec.cell_area();
    Ok(PhaseSpaceGrid {
        spec,
        values,
        normalization,
    })
}

/// Pure-state convenience wrapper for [`husimi_q`].
pub fn husimi_q_pure(orbital: &FockVector, spec: GridSpec) -> PhaseSpaceGrid {
    let state = DiracState::product([C64::ONE, C64::ZERO, C64::ZERO, C64::ZERO], orbital);
    husimi_q(&reduced_density(&state, Subsystem::Orbital), spec).unwrap()
}

/// Off-diagonal cat coherence |<o_+| rho_orbital |o_->| of a composed
/// state against the two branch orbitals. Computed without forming rho:
/// rho_orb = sum_j |psi_j><psi_j| gives sum_j <o_+|psi_j><psi_j|o_->.
pub fn coherence_magnitude(
    state: &DiracState,
    plus_branch: &FockVector,
    minus_branch: &FockVector,
) -> Result<f64> {
    let mut acc = C64::ZERO;
    for c in state.components() {
        acc += inner_product(plus_branch, c)? * inner_product(c, minus_branch)?;
    }
    Ok(acc.norm())
}
