//! Python bindings: a thin `Model` class over the core crate plus free
//! functions for the cat construction and Husimi sampling.

use num_complex::Complex64 as C64;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use dirac_landau::boost::{boosted_energy, rapidity};
use dirac_landau::cat::{
    cat_schedule, dirac_cat, spinor_overlap_at_cat_time, trajectory, Regime,
};
use dirac_landau::diagnostics::{husimi_q_pure, position_expectation, GridSpec};
use dirac_landau::evolution::{
    coherent_initial_state, evolve, spin_populations, EvolutionPlan,
};
use dirac_landau::hamiltonian::{landau_energy, ModelParams, Sign};

fn value_err(err: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(err.to_string())
}

fn sign_of(value: i64) -> PyResult<Sign> {
    match value {
        1 => Ok(Sign::Plus),
        -1 => Ok(Sign::Minus),
        other => Err(PyValueError::new_err(format!(
            "sign must be +1 or -1, got {other}"
        ))),
    }
}

/// A magnetized Dirac particle: field strength xi, axial momentum pz and
/// the Fock-space cutoff. All other operations hang off this.
#[pyclass(skip_from_py_object)]
#[derive(Clone)]
struct Model {
    params: ModelParams,
}

#[pymethods]
impl Model {
    #[new]
    #[pyo3(signature = (xi, cutoff, pz = 0.0))]
    fn new(xi: f64, cutoff: usize, pz: f64) -> PyResult<Self> {
        Ok(Self {
            params: ModelParams::new(xi, pz, cutoff).map_err(value_err)?,
        })
    }

    #[getter]
    fn xi(&self) -> f64 {
        self.params.xi()
    }

    #[getter]
    fn pz(&self) -> f64 {
        self.params.pz()
    }

    #[getter]
    fn cutoff(&self) -> usize {
        self.params.cutoff()
    }

    /// Moving-frame level energy, sign * sqrt(1 + 4 xi (n_r + 1)).
    #[pyo3(signature = (n_r, sign = 1))]
    fn landau_energy(&self, n_r: usize, sign: i64) -> PyResult<f64> {
        Ok(landau_energy(&self.params, n_r, sign_of(sign)?))
    }

    /// Rest-frame level energy, sign * sqrt(1 + pz^2 + 4 xi (n_r + 1)).
    #[pyo3(signature = (n_r, sign = 1))]
    fn boosted_energy(&self, n_r: usize, sign: i64) -> PyResult<f64> {
        Ok(boosted_energy(&self.params, n_r, sign_of(sign)?))
    }

    /// Rapidity of the boost connecting the two frames for level n_r.
    fn rapidity(&self, n_r: usize) -> f64 {
        rapidity(&self.params, n_r).rapidity
    }

    /// The first `levels` positive Landau energies.
    fn spectrum(&self, levels: usize) -> Vec<f64> {
        (0..levels)
            .map(|n_r| landau_energy(&self.params, n_r, Sign::Plus))
            .collect()
    }

    /// Spin populations [p1, p2, p3, p4] of |i z_abs> chi_1-up evolved to
    /// each requested time.
    fn evolve_populations(&self, z_abs: f64, times: Vec<f64>) -> PyResult<Vec<[f64; 4]>> {
        let plan = EvolutionPlan::new(self.params);
        let initial = coherent_initial_state(&self.params, z_abs).map_err(value_err)?;
        times
            .into_iter()
            .map(|t| {
                evolve(&initial, &plan, t)
                    .map(|state| spin_populations(&state))
                    .map_err(value_err)
            })
            .collect()
    }

    /// Exact (<X>, <Y>) of the evolved +branch and the asymptotic circle
    /// prediction, as ((x, y), (x, y)).
    fn branch_position(&self, z_abs: f64, t: f64) -> PyResult<((f64, f64), (f64, f64))> {
        let plan = EvolutionPlan::new(self.params);
        let initial =
            dirac_landau::cat::asymptotic_state(&self.params, C64::new(0.0, z_abs), Sign::Plus, 0.0)
                .map_err(value_err)?
                .to_dirac_state();
        let exact = position_expectation(&evolve(&initial, &plan, t).map_err(value_err)?);
        Ok((exact, trajectory(&self.params, z_abs, Sign::Plus, t)))
    }

    /// Branch-spinor overlap magnitude at the cat time,
    /// sqrt(4 xi n_bar / (1 + 4 xi n_bar)).
    fn spinor_overlap(&self, n_bar: f64) -> f64 {
        spinor_overlap_at_cat_time(&self.params, n_bar)
    }

    /// (t_revival, t_cat, omega_rot, delta) for mean occupation n_bar.
    fn schedule(&self, n_bar: f64) -> (f64, f64, f64, f64) {
        let s = cat_schedule(&self.params, n_bar);
        (s.t_revival, s.t_cat, s.omega_rot, s.delta)
    }

    /// Summary dict of the Dirac cat reached from |i z_abs> chi_1-up.
    fn cat_summary<'py>(&self, py: Python<'py>, z_abs: f64) -> PyResult<Bound<'py, PyDict>> {
        let cat = dirac_cat(&self.params, C64::new(0.0, z_abs)).map_err(value_err)?;
        let out = PyDict::new(py);
        out.set_item("t_revival", cat.schedule.t_revival)?;
        out.set_item("t_cat", cat.schedule.t_cat)?;
        out.set_item("delta", cat.delta)?;
        out.set_item("spinor_overlap", spinor_overlap_at_cat_time(&self.params, z_abs * z_abs))?;
        out.set_item("component_overlap", cat.component_overlap)?;
        out.set_item("weight_plus", cat.components[0].1)?;
        out.set_item("weight_minus", cat.components[1].1)?;
        out.set_item("ultra_relativistic", cat.ultra_relativistic)?;
        out.set_item("regime", Regime::classify(z_abs * z_abs).label())?;
        Ok(out)
    }

    /// Husimi Q of the cat orbital on the default covering window:
    /// (xs, ys, rows) with rows indexed [iy][ix].
    fn husimi_cat(&self, z_abs: f64) -> PyResult<(Vec<f64>, Vec<f64>, Vec<Vec<f64>>)> {
        let cat = dirac_cat(&self.params, C64::new(0.0, z_abs)).map_err(value_err)?;
        let spec = GridSpec::covering(z_abs);
        let grid = husimi_q_pure(&cat.orbital_cat, spec);
        let xs = (0..spec.nx).map(|i| spec.x_at(i)).collect();
        let ys = (0..spec.ny).map(|j| spec.y_at(j)).collect();
        let rows = (0..spec.ny)
            .map(|iy| (0..spec.nx).map(|ix| grid.value(ix, iy)).collect())
            .collect();
        Ok((xs, ys, rows))
    }
}

#[pymodule]
fn dirac_landau_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Model>()?;
    Ok(())
}
