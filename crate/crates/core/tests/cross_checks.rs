//! Cross-module consistency: the factorized asymptotic picture against
//! the exact spectral evolution, which shares no code path with it.

use dirac_landau::cat::{asymptotic_state, cat_schedule, dirac_cat};
use dirac_landau::evolution::{coherent_initial_state, evolve, EvolutionPlan};
use dirac_landau::hamiltonian::{DiracState, ModelParams, Sign};
use num_complex::Complex64 as C64;

fn mixing(energy: f64) -> (f64, f64) {
    (
        ((energy + 1.0) / (2.0 * energy)).sqrt(),
        ((energy - 1.0) / (2.0 * energy)).sqrt(),
    )
}

fn composed_branches(params: &ModelParams, z: C64, t: f64) -> DiracState {
    let energy = (1.0 + 4.0 * params.xi() * z.norm_sqr()).sqrt();
    let (ap, am) = mixing(energy);
    let plus = asymptotic_state(params, z, Sign::Plus, t).unwrap().to_dirac_state();
    let minus = asymptotic_state(params, z, Sign::Minus, t).unwrap().to_dirac_state();
    plus.scaled(C64::new(ap, 0.0))
        .add(&minus.scaled(C64::new(am, 0.0)))
        .unwrap()
}

#[test]
fn asymptotic_branches_track_exact_evolution() {
    // chi_1-up |z> = alpha_+ |+E>|z> + alpha_- |-E>|z>, each branch evolving
    // factorized; the superposition should shadow the exact state well past
    // the collapse for a mesoscopic amplitude
    let p = ModelParams::new(1.0, 0.0, 256).unwrap();
    let z = C64::new(0.0, 7.0);
    let plan = EvolutionPlan::new(p);
    let initial = coherent_initial_state(&p, 7.0).unwrap();
    // the quadratic spread of E_n around n_bar is outside the approximation,
    // so the floor decays from ~1 early on to ~0.84 by the cat time
    let t_cat = cat_schedule(&p, 49.0).t_cat;
    for (frac, floor) in [(0.1, 0.97), (0.25, 0.97), (0.5, 0.9), (1.0, 0.8)] {
        let t = frac * t_cat;
        let exact = evolve(&initial, &plan, t).unwrap();
        let approx = composed_branches(&p, z, t);
        let fidelity = exact.inner_product(&approx).unwrap().norm();
        assert!(fidelity > floor, "t = {frac} t_d: fidelity {fidelity}");
    }
}

#[test]
fn constructed_cat_matches_exactly_evolved_state() {
    let p = ModelParams::new(1.0, 0.0, 128).unwrap();
    let cat = dirac_cat(&p, C64::new(0.0, 5.0)).unwrap();
    let plan = EvolutionPlan::new(p);
    let initial = coherent_initial_state(&p, 5.0).unwrap();
    let exact = evolve(&initial, &plan, cat.schedule.t_cat).unwrap();

    // spinor (x) orbital-cat product state straight from the constructor
    let product = DiracState::product(
        [cat.spinor[0], C64::ZERO, C64::ZERO, cat.spinor[1]],
        &cat.orbital_cat,
    );
    // global phase is free; compare through the overlap magnitude
    let fidelity = exact.inner_product(&product).unwrap().norm();
    assert!(fidelity > 0.8, "cat fidelity {fidelity}");
}
