//! Relativistic Landau levels through a quantum-optics lens.
//!
//! A spin-1/2 charged particle in a uniform magnetic field maps exactly
//! onto a pair of Jaynes-Cummings and anti-Jaynes-Cummings couplings
//! between spinor components and right-handed orbital quanta. This crate
//! builds that Hamiltonian in a truncated Fock space, diagonalizes it in
//! closed form per invariant subspace, evolves states exactly, boosts
//! eigenstates along the field axis, and constructs the mesoscopic cat
//! states that appear at half the revival time in the ultra-relativistic
//! regime (and vanish in the non-relativistic limit).
//!
//! Natural units everywhere: hbar = m = c = 1. Energies are in units of
//! mc^2, times in hbar/mc^2, phase-space lengths in the oscillator width.

pub mod boost;
pub mod cat;
pub mod cli;
pub mod diagnostics;
pub mod error;
pub mod evolution;
pub mod fock;
pub mod hamiltonian;

pub use error::{Error, Result};
pub use fock::{coherent_vector, inner_product, ladder_matrix, FockVector, LadderKind, OperatorMatrix};
pub use hamiltonian::{
    build_hamiltonian, build_hamiltonian_with_momentum, dark_states, landau_eigenstate,
    landau_energy, Degeneracy, DiracState, EnergyBranch, ModelParams, Sign,
};
