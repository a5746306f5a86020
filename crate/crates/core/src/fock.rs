//! Truncated bosonic Fock-space primitives: ladder operators, coherent
//! states and inner products over the right-handed number states |0..N>.

use nalgebra::DMatrix;
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

/// Complex amplitude vector over number states |n>, n = 0..=cutoff.
#[derive(Debug, Clone, PartialEq)]
pub struct FockVector {
    amplitudes: Vec<C64>,
}

impl FockVector {
    /// Wraps raw amplitudes; the vector length fixes the cutoff as len - 1.
    pub fn from_amplitudes(amplitudes: Vec<C64>) -> Result<Self> {
        if amplitudes.len() < 2 {
            return Err(Error::InvalidCutoff);
        }
        Ok(Self { amplitudes })
    }

    /// All-zero vector at the given cutoff.
    pub fn zero(cutoff: usize) -> Self {
        Self {
            amplitudes: vec![C64::ZERO; cutoff + 1],
        }
    }

    /// Basis state |n>.
    pub fn basis(n: usize, cutoff: usize) -> Self {
        assert!(n <= cutoff, "basis index {n} beyond cutoff {cutoff}");
        let mut v = Self::zero(cutoff);
        v.amplitudes[n] = C64::ONE;
        v
    }

    pub fn cutoff(&self) -> usize {
        self.amplitudes.len() - 1
    }

    pub fn len(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }

    pub fn amplitudes_mut(&mut self) -> &mut [C64] {
        &mut self.amplitudes
    }

    pub fn amplitude(&self, n: usize) -> C64 {
        self.amplitudes[n]
    }

    pub fn norm_squared(&self) -> f64 {
        self.amplitudes.iter().map(|c| c.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_squared().sqrt()
    }

    /// Returns a unit-norm copy. Panics on the zero vector.
    pub fn normalized(&self) -> Self {
        let n = self.norm();
        assert!(n > 0.0, "cannot normalize the zero vector");
        self.scaled(C64::new(1.0 / n, 0.0))
    }

    pub fn scaled(&self, factor: C64) -> Self {
        Self {
            amplitudes: self.amplitudes.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_dims(self.len(), other.len())?;
        Ok(Self {
            amplitudes: self
                .amplitudes
                .iter()
                .zip(&other.amplitudes)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Mean occupation <n>.
    pub fn mean_occupation(&self) -> f64 {
        self.amplitudes
            .iter()
            .enumerate()
            .map(|(n, c)| n as f64 * c.norm_sqr())
            .sum()
    }
}

/// Dense complex matrix acting on Fock or full Dirac-state vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorMatrix {
    entries: DMatrix<C64>,
}

impl OperatorMatrix {
    pub fn from_matrix(entries: DMatrix<C64>) -> Self {
        assert_eq!(entries.nrows(), entries.ncols(), "operator must be square");
        Self { entries }
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn entries(&self) -> &DMatrix<C64> {
        &self.entries
    }

    pub fn adjoint(&self) -> Self {
        Self {
            entries: self.entries.adjoint(),
        }
    }

    /// Largest entrywise deviation from Hermiticity.
    pub fn hermiticity_defect(&self) -> f64 {
        (&self.entries - self.entries.adjoint())
            .iter()
            .map(|c| c.norm())
            .fold(0.0, f64::max)
    }

    pub fn apply_fock(&self, v: &FockVector) -> Result<FockVector> {
        check_dims(self.dim(), v.len())?;
        let out = &self.entries * DMatrix::from_column_slice(v.len(), 1, v.amplitudes());
        FockVector::from_amplitudes(out.iter().copied().collect())
    }
}

fn check_dims(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::DimensionMismatch { left, right });
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LadderKind {
    Lower,
    Raise,
}

/// Truncated ladder operator on |0..N>. Lowering has entries sqrt(n) at
/// (n-1, n); raising is its conjugate transpose. The matrix element that
/// would leave the truncated space is dropped.
pub fn ladder_matrix(cutoff: usize, kind: LadderKind) -> Result<OperatorMatrix> {
    if cutoff == 0 {
        return Err(Error::InvalidCutoff);
    }
    let dim = cutoff + 1;
    let mut m = DMatrix::zeros(dim, dim);
    for n in 1..dim {
        let amp = C64::new((n as f64).sqrt(), 0.0);
        match kind {
            LadderKind::Lower => m[(n - 1, n)] = amp,
            LadderKind::Raise => m[(n, n - 1)] = amp,
        }
    }
    Ok(OperatorMatrix::from_matrix(m))
}

/// Smallest cutoff accepted for a coherent amplitude: mean + 6 sigma of
/// the Poisson number distribution, so the discarded tail is < 1e-9.
pub fn required_cutoff(z_abs: f64) -> usize {
    (z_abs * z_abs + 6.0 * z_abs).ceil() as usize
}

/// Truncated coherent state |z>, renormalized to unit norm.
///
/// Amplitudes follow the multiplicative recurrence c_n = c_{n-1} z / sqrt(n),
/// which stays finite where n! would overflow.
pub fn coherent_vector(z: C64, cutoff: usize) -> Result<FockVector> {
    if cutoff == 0 {
        return Err(Error::InvalidCutoff);
    }
    let z_abs = z.norm();
    let required = required_cutoff(z_abs);
    if required > cutoff {
        return Err(Error::TruncationGuard {
            z_abs,
            required,
            cutoff,
        });
    }
    Ok(coherent_raw(z, cutoff).normalized())
}

/// Raw truncated coherent amplitudes, no guard, no renormalization.
/// Used as a Husimi probe where truncated tail mass is harmless.
pub(crate) fn coherent_raw(z: C64, cutoff: usize) -> FockVector {
    let mut amplitudes = Vec::with_capacity(cutoff + 1);
    let mut c = C64::new((-z.norm_sqr() / 2.0).exp(), 0.0);
    amplitudes.push(c);
    for n in 1..=cutoff {
        c *= z / C64::new((n as f64).sqrt(), 0.0);
        amplitudes.push(c);
    }
    FockVector { amplitudes }
}

/// <a|b> = sum_n conj(a_n) b_n.
pub fn inner_product(a: &FockVector, b: &FockVector) -> Result<C64> {
    check_dims(a.len(), b.len())?;
    Ok(a.amplitudes
        .iter()
        .zip(&b.amplitudes)
        .map(|(x, y)| x.conj() * y)
        .sum())
}
