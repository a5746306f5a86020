//! The magnetized Dirac Hamiltonian in the p_z = 0 frame, its
//! Jaynes-Cummings / anti-Jaynes-Cummings invariant-subspace structure,
//! and the closed-form relativistic Landau spectrum and eigenstates.
//!
//! Natural units throughout: hbar = m = c = 1, so the mass gap is
//! Delta = 1, omega = xi, omega_c = 2 xi and the coupling is g = 2i sqrt(xi).

use nalgebra::{DMatrix, Matrix4};
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::fock::{FockVector, OperatorMatrix};

/// Physical configuration in natural units.
///
/// `xi` is the dimensionless coupling hbar*omega / m c^2 that controls the
/// relativistic regime; `pz` is the longitudinal momentum in units of mc;
/// `cutoff` is the Fock truncation N of the right-handed mode. The
/// left-handed mode is frozen at n_l = 0: every Landau level carries an
/// infinite degeneracy in n_l that the coupling never lifts, so we work in
/// a single representative of it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    xi: f64,
    pz: f64,
    cutoff: usize,
}

impl ModelParams {
    pub fn new(xi: f64, pz: f64, cutoff: usize) -> Result<Self> {
        if !(xi > 0.0) {
            return Err(Error::InvalidXi(xi));
        }
        if cutoff == 0 {
            return Err(Error::InvalidCutoff);
        }
        Ok(Self { xi, pz, cutoff })
    }

    /// Zero-field fixture (xi = 0), where the Hamiltonian is diagonal.
    /// Only meaningful for decoupling-limit checks; the oscillator width
    /// 1/sqrt(xi) is undefined here.
    pub fn free_particle(pz: f64, cutoff: usize) -> Result<Self> {
        if cutoff == 0 {
            return Err(Error::InvalidCutoff);
        }
        Ok(Self {
            xi: 0.0,
            pz,
            cutoff,
        })
    }

    pub fn xi(&self) -> f64 {
        self.xi
    }

    pub fn pz(&self) -> f64 {
        self.pz
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    /// |g| = 2 sqrt(xi) in units of mc^2.
    pub fn coupling_strength(&self) -> f64 {
        2.0 * self.xi.sqrt()
    }

    /// g = 2i sqrt(xi); the block couplings are -g (JC) and +g (AJC).
    pub fn coupling(&self) -> C64 {
        C64::new(0.0, self.coupling_strength())
    }

    /// Larmor frequency omega = omega_c / 2 = xi.
    pub fn omega(&self) -> f64 {
        self.xi
    }

    /// Cyclotron frequency omega_c = 2 xi.
    pub fn omega_c(&self) -> f64 {
        2.0 * self.xi
    }

    /// Oscillator ground-state width, 1/sqrt(xi).
    pub fn oscillator_width(&self) -> f64 {
        1.0 / self.xi.sqrt()
    }

    /// Full-space dimension 4 (N + 1).
    pub fn dirac_dim(&self) -> usize {
        4 * (self.cutoff + 1)
    }
}

/// Four spinor components, each a Fock vector over right-handed quanta.
///
/// Component index j = 0..4 holds psi_{j+1} of the standard representation:
/// j = 0 is chi_1-up, j = 1 chi_1-down, j = 2 chi_2-up, j = 3 chi_2-down.
#[derive(Debug, Clone, PartialEq)]
pub struct DiracState {
    components: [FockVector; 4],
}

impl DiracState {
    pub fn from_components(components: [FockVector; 4]) -> Result<Self> {
        let len = components[0].len();
        for c in &components[1..] {
            if c.len() != len {
                return Err(Error::DimensionMismatch {
                    left: len,
                    right: c.len(),
                });
            }
        }
        Ok(Self { components })
    }

    pub fn zero(cutoff: usize) -> Self {
        Self {
            components: std::array::from_fn(|_| FockVector::zero(cutoff)),
        }
    }

    /// Basis state |j+1, n>: spinor component j with n right-handed quanta.
    pub fn basis(component: usize, n: usize, cutoff: usize) -> Self {
        assert!(component < 4);
        let mut s = Self::zero(cutoff);
        s.components[component] = FockVector::basis(n, cutoff);
        s
    }

    /// Product state spinor (x) orbital.
    pub fn product(spinor: [C64; 4], orbital: &FockVector) -> Self {
        Self {
            components: std::array::from_fn(|j| orbital.scaled(spinor[j])),
        }
    }

    pub fn components(&self) -> &[FockVector; 4] {
        &self.components
    }

    pub fn component(&self, j: usize) -> &FockVector {
        &self.components[j]
    }

    pub fn components_mut(&mut self) -> &mut [FockVector; 4] {
        &mut self.components
    }

    pub fn cutoff(&self) -> usize {
        self.components[0].cutoff()
    }

    pub fn norm_squared(&self) -> f64 {
        self.components.iter().map(|c| c.norm_squared()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_squared().sqrt()
    }

    pub fn normalized(&self) -> Self {
        let n = self.norm();
        assert!(n > 0.0, "cannot normalize the zero state");
        self.scaled(C64::new(1.0 / n, 0.0))
    }

    pub fn scaled(&self, factor: C64) -> Self {
        Self {
            components: std::array::from_fn(|j| self.components[j].scaled(factor)),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(Self {
            components: [
                self.components[0].add(&other.components[0])?,
                self.components[1].add(&other.components[1])?,
                self.components[2].add(&other.components[2])?,
                self.components[3].add(&other.components[3])?,
            ],
        })
    }

    /// <self|other>.
    pub fn inner_product(&self, other: &Self) -> Result<C64> {
        let mut acc = C64::ZERO;
        for j in 0..4 {
            acc += crate::fock::inner_product(&self.components[j], &other.components[j])?;
        }
        Ok(acc)
    }

    /// Flat column ordering: index = j * (N + 1) + n, matching
    /// [`build_hamiltonian`].
    pub fn to_column(&self) -> Vec<C64> {
        let mut out = Vec::with_capacity(self.cutoff() * 4 + 4);
        for c in &self.components {
            out.extend_from_slice(c.amplitudes());
        }
        out
    }

    pub fn from_column(column: &[C64], cutoff: usize) -> Result<Self> {
        let dim = cutoff + 1;
        if column.len() != 4 * dim {
            return Err(Error::DimensionMismatch {
                left: column.len(),
                right: 4 * dim,
            });
        }
        Self::from_components(std::array::from_fn(|j| {
            FockVector::from_amplitudes(column[j * dim..(j + 1) * dim].to_vec()).unwrap()
        }))
    }
}

/// Energy sign: particle (+) / antiparticle (-) branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn signum(&self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

/// Degeneracy label of the two eigenstate families per level: the first
/// lives in the JC sector {psi_1, psi_4}, the second in the AJC sector
/// {psi_2, psi_3}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Degeneracy {
    First,
    Second,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnergyBranch {
    pub sign: Sign,
    pub degeneracy: Degeneracy,
}

impl EnergyBranch {
    pub const ALL: [EnergyBranch; 4] = [
        EnergyBranch {
            sign: Sign::Plus,
            degeneracy: Degeneracy::First,
        },
        EnergyBranch {
            sign: Sign::Minus,
            degeneracy: Degeneracy::First,
        },
        EnergyBranch {
            sign: Sign::Plus,
            degeneracy: Degeneracy::Second,
        },
        EnergyBranch {
            sign: Sign::Minus,
            degeneracy: Degeneracy::Second,
        },
    ];
}

/// Dense 4(N+1)-dimensional Hamiltonian in the p_z = 0 frame.
///
/// Block pattern: diagonal (+1, +1, -1, -1) on the spinor index, with
/// -i|g| a at (1,4) and (3,2), +i|g| a^dag at (2,3) and (4,1). Hermitian
/// by construction since the truncated ladder pair is an exact adjoint pair.
pub fn build_hamiltonian(params: &ModelParams) -> OperatorMatrix {
    let dim = params.cutoff + 1;
    let g = params.coupling_strength();
    let mut h = DMatrix::zeros(4 * dim, 4 * dim);
    let block_sign = [1.0, 1.0, -1.0, -1.0];
    for (j, s) in block_sign.iter().enumerate() {
        for n in 0..dim {
            h[(j * dim + n, j * dim + n)] = C64::new(*s, 0.0);
        }
    }
    // (row component, col component, conjugate-of-g?) for the lowering blocks;
    // the raising blocks are filled as adjoints.
    for n in 1..dim {
        let amp = (n as f64).sqrt() * g;
        let lower = C64::new(0.0, -amp); // -i|g| sqrt(n)
        let raise = C64::new(0.0, amp); // +i|g| sqrt(n)
        h[(0 * dim + n - 1, 3 * dim + n)] = lower; // psi_1 <- a psi_4
        h[(3 * dim + n, 0 * dim + n - 1)] = raise;
        h[(2 * dim + n - 1, 1 * dim + n)] = lower; // psi_3 <- a psi_2
        h[(1 * dim + n, 2 * dim + n - 1)] = raise;
    }
    OperatorMatrix::from_matrix(h)
}

/// Rest-frame Hamiltonian: adds the longitudinal term p_z alpha_z, which
/// couples (psi_1, psi_3) with +p_z and (psi_2, psi_4) with -p_z.
pub fn build_hamiltonian_with_momentum(params: &ModelParams) -> OperatorMatrix {
    let dim = params.cutoff + 1;
    let mut h = build_hamiltonian(params).entries().clone();
    let pz = C64::new(params.pz, 0.0);
    for n in 0..dim {
        h[(0 * dim + n, 2 * dim + n)] += pz;
        h[(2 * dim + n, 0 * dim + n)] += pz;
        h[(1 * dim + n, 3 * dim + n)] -= pz;
        h[(3 * dim + n, 1 * dim + n)] -= pz;
    }
    OperatorMatrix::from_matrix(h)
}

/// Matrix-free application of the p_z = 0 Hamiltonian.
pub fn apply_hamiltonian(params: &ModelParams, state: &DiracState) -> Result<DiracState> {
    apply_hamiltonian_impl(params, state, 0.0)
}

/// Matrix-free application of the rest-frame Hamiltonian (with p_z alpha_z).
pub fn apply_hamiltonian_with_momentum(
    params: &ModelParams,
    state: &DiracState,
) -> Result<DiracState> {
    apply_hamiltonian_impl(params, state, params.pz)
}

fn apply_hamiltonian_impl(params: &ModelParams, state: &DiracState, pz: f64) -> Result<DiracState> {
    if state.cutoff() != params.cutoff {
        return Err(Error::DimensionMismatch {
            left: state.cutoff(),
            right: params.cutoff,
        });
    }
    let dim = params.cutoff + 1;
    let g = params.coupling_strength();
    let [p1, p2, p3, p4] = state.components();
    let mut out = DiracState::zero(params.cutoff);
    for n in 0..dim {
        let sq_up = if n + 1 < dim {
            (n as f64 + 1.0).sqrt()
        } else {
            0.0
        };
        let sq_dn = (n as f64).sqrt();
        let a_p4 = if n + 1 < dim {
            p4.amplitude(n + 1)
        } else {
            C64::ZERO
        };
        let a_p2 = if n + 1 < dim {
            p2.amplitude(n + 1)
        } else {
            C64::ZERO
        };
        let adag_p1 = if n > 0 { p1.amplitude(n - 1) } else { C64::ZERO };
        let adag_p3 = if n > 0 { p3.amplitude(n - 1) } else { C64::ZERO };
        let [o1, o2, o3, o4] = out.components_mut();
        o1.amplitudes_mut()[n] =
            p1.amplitude(n) - C64::new(0.0, g * sq_up) * a_p4 + C64::new(pz, 0.0) * p3.amplitude(n);
        o2.amplitudes_mut()[n] =
            p2.amplitude(n) + C64::new(0.0, g * sq_dn) * adag_p3 - C64::new(pz, 0.0) * p4.amplitude(n);
        o3.amplitudes_mut()[n] =
            -p3.amplitude(n) - C64::new(0.0, g * sq_up) * a_p2 + C64::new(pz, 0.0) * p1.amplitude(n);
        o4.amplitudes_mut()[n] =
            -p4.amplitude(n) + C64::new(0.0, g * sq_dn) * adag_p1 - C64::new(pz, 0.0) * p2.amplitude(n);
    }
    Ok(out)
}

/// The two dark states |2,0> and |4,0> with their exact energies +-1.
/// They exchange no chiral quanta and are eigenstates for every xi.
pub fn dark_states(params: &ModelParams) -> [(DiracState, f64); 2] {
    [
        (DiracState::basis(1, 0, params.cutoff), 1.0),
        (DiracState::basis(3, 0, params.cutoff), -1.0),
    ]
}

/// One member of an invariant-subspace basis: spinor component index
/// (0-based) and Fock occupation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasisKet {
    pub component: usize,
    pub occupation: usize,
}

impl BasisKet {
    pub fn to_state(&self, cutoff: usize) -> DiracState {
        DiracState::basis(self.component, self.occupation, cutoff)
    }
}

/// Ordered basis (|1,n>, |4,n+1>, |2,n+1>, |3,n>) of the invariant
/// subspace with n_r = n. Complete blocks need n + 1 <= cutoff.
pub fn subspace_basis(params: &ModelParams, n_r: usize) -> Result<[BasisKet; 4]> {
    if n_r + 1 > params.cutoff {
        return Err(Error::SubspaceOutOfRange {
            n_r,
            cutoff: params.cutoff,
        });
    }
    Ok([
        BasisKet {
            component: 0,
            occupation: n_r,
        },
        BasisKet {
            component: 3,
            occupation: n_r + 1,
        },
        BasisKet {
            component: 1,
            occupation: n_r + 1,
        },
        BasisKet {
            component: 2,
            occupation: n_r,
        },
    ])
}

/// 4x4 restriction of the Hamiltonian to [`subspace_basis`] order:
/// two decoupled 2x2 blocks with couplings -g sqrt(n_r+1) (JC sector)
/// and +g sqrt(n_r+1) (AJC sector), g = 2i sqrt(xi).
pub fn block_matrix(params: &ModelParams, n_r: usize) -> Result<Matrix4<C64>> {
    subspace_basis(params, n_r)?;
    let g = params.coupling();
    let root = C64::new((n_r as f64 + 1.0).sqrt(), 0.0);
    let one = C64::ONE;
    let zero = C64::ZERO;
    Ok(Matrix4::new(
        one,
        -g * root,
        zero,
        zero,
        -g.conj() * root,
        -one,
        zero,
        zero,
        zero,
        zero,
        one,
        g * root,
        zero,
        zero,
        g.conj() * root,
        -one,
    ))
}

/// Relativistic Landau level +-sqrt(1 + 4 xi (n_r + 1)) in the p_z = 0 frame.
pub fn landau_energy(params: &ModelParams, n_r: usize, sign: Sign) -> f64 {
    sign.signum() * (1.0 + 4.0 * params.xi * (n_r as f64 + 1.0)).sqrt()
}

/// Mixing amplitudes alpha_pm = sqrt((E +- 1) / 2E) for level energy E >= 1.
pub(crate) fn mixing_amplitudes(energy: f64) -> (f64, f64) {
    (
        ((energy + 1.0) / (2.0 * energy)).sqrt(),
        ((energy - 1.0) / (2.0 * energy)).sqrt(),
    )
}

/// Closed-form eigenstate of the n_r-th invariant subspace.
///
/// For a 2x2 block [[1, c], [conj(c), -1]] with E = sqrt(1 + |c|^2) the
/// eigenvectors are (alpha_plus, p alpha_minus) at +E and
/// (alpha_minus, -p alpha_plus) at -E, where p = conj(c)/|c|. With
/// g = +2i sqrt(xi) this puts phase +i on the JC sector (psi_4 slot) and
/// -i on the AJC sector (psi_2 slot).
pub fn landau_eigenstate(
    params: &ModelParams,
    n_r: usize,
    branch: EnergyBranch,
) -> Result<DiracState> {
    subspace_basis(params, n_r)?;
    let energy = landau_energy(params, n_r, Sign::Plus);
    let (alpha_plus, alpha_minus) = mixing_amplitudes(energy);
    // Coupling of the relevant 2x2 block, and its unit phase p = conj(c)/|c|.
    let root = (n_r as f64 + 1.0).sqrt();
    let (first, second, c) = match branch.degeneracy {
        // basis (|1,n_r>, |4,n_r+1>)
        Degeneracy::First => ((0, n_r), (3, n_r + 1), -params.coupling() * root),
        // basis (|2,n_r+1>, |3,n_r>)
        Degeneracy::Second => ((1, n_r + 1), (2, n_r), params.coupling() * root),
    };
    let phase = c.conj() / c.norm();
    let (a, b) = match branch.sign {
        Sign::Plus => (C64::new(alpha_plus, 0.0), phase * alpha_minus),
        Sign::Minus => (C64::new(alpha_minus, 0.0), -phase * alpha_plus),
    };
    let mut state = DiracState::zero(params.cutoff);
    state.components_mut()[first.0].amplitudes_mut()[first.1] = a;
    state.components_mut()[second.0].amplitudes_mut()[second.1] = b;
    Ok(state)
}

/// Expectation of the conserved excitation N_inv = a^dag a + P_{1,3},
/// where P_{1,3} projects onto spinor components psi_1 and psi_3. It
/// labels the invariant subspaces: n_r + 1 on every member of the n_r-th
/// block, 0 on both dark states.
pub fn conserved_excitation(state: &DiracState) -> f64 {
    let mut total = 0.0;
    for (j, c) in state.components().iter().enumerate() {
        total += c.mean_occupation();
        if j == 0 || j == 2 {
            total += c.norm_squared();
        }
    }
    total
}
