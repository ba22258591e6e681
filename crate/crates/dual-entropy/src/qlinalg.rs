//! Dense complex linear algebra for small multi-qubit problems.
//!
//! Everything here is self-contained and deterministic: square row-major
//! matrices over `Complex<f64>`, Kronecker products, partial traces over
//! arbitrary factor dimensions, and a cyclic Jacobi eigensolver for
//! Hermitian matrices. Dimensions are capped at [`MAX_DIM`].

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Hard cap on matrix dimension (2^12), i.e. 12 qubits.
pub const MAX_DIM: usize = 1 << 12;

/// Hermiticity tolerance accepted by the eigensolver.
pub const HERMITICITY_TOL: f64 = 1e-10;

/// Eigenvalues below this are rejected by [`psd_sqrt`]; above it they are
/// clamped to zero.
pub const NEGATIVITY_TOL: f64 = -1e-10;

/// Square complex matrix, row-major storage.
#[derive(Clone, Debug)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                m.data[i * dim + j] = f(i, j);
            }
        }
        m
    }

    pub fn from_diag(diag: &[f64]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, d) in diag.iter().enumerate() {
            m.data[i * diag.len() + i] = Complex64::new(*d, 0.0);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.dim + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[i * self.dim + j] = v;
    }

    pub fn mul(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.dim, self.dim, other.dim, other.dim
            )));
        }
        let n = self.dim;
        let mut out = ComplexMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a.re == 0.0 && a.im == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        Ok(out)
    }

    pub fn adjoint(&self) -> ComplexMatrix {
        let n = self.dim;
        ComplexMatrix::from_fn(n, |i, j| self.data[j * n + i].conj())
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.data[i * self.dim + i]).sum()
    }

    /// tr(M^2) for Hermitian M, computed as the squared Frobenius norm.
    pub fn purity(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.purity().sqrt()
    }

    /// Largest entrywise deviation from M = M^dagger.
    pub fn hermiticity_deviation(&self) -> f64 {
        let n = self.dim;
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in i..n {
                let d = (self.data[i * n + j] - self.data[j * n + i].conj()).norm();
                worst = worst.max(d);
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_deviation() <= tol
    }

    /// Largest entrywise absolute difference to another matrix.
    pub fn max_abs_diff(&self, other: &ComplexMatrix) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Kronecker product `a (x) b`. Errors when the product dimension exceeds
/// [`MAX_DIM`].
pub fn tensor(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    let (da, db) = (a.dim, b.dim);
    let dim = da.checked_mul(db).unwrap_or(usize::MAX);
    if dim > MAX_DIM {
        return Err(Error::DimensionTooLarge { dim, max: MAX_DIM });
    }
    let mut out = ComplexMatrix::zeros(dim);
    for ia in 0..da {
        for ja in 0..da {
            let va = a.get(ia, ja);
            if va.re == 0.0 && va.im == 0.0 {
                continue;
            }
            for ib in 0..db {
                for jb in 0..db {
                    out.set(ia * db + ib, ja * db + jb, va * b.get(ib, jb));
                }
            }
        }
    }
    Ok(out)
}

/// Partial trace of `rho` over the factors not listed in `keep`.
///
/// `dims` are the factor dimensions in row-major (first factor most
/// significant) order; `keep` lists factor indices to retain, which appear
/// in the output in their original relative order.
pub fn partial_trace(
    rho: &ComplexMatrix,
    dims: &[usize],
    keep: &[usize],
) -> Result<ComplexMatrix> {
    if dims.iter().any(|&d| d == 0) {
        return Err(Error::DimensionMismatch("zero factor dimension".into()));
    }
    let total: usize = dims.iter().product();
    if total != rho.dim {
        return Err(Error::DimensionMismatch(format!(
            "factor dimensions multiply to {} but the matrix is {}x{}",
            total, rho.dim, rho.dim
        )));
    }
    if keep.is_empty() {
        return Err(Error::EmptyKeepSet);
    }
    let mut keep_sorted = keep.to_vec();
    keep_sorted.sort_unstable();
    keep_sorted.dedup();
    if keep_sorted.len() != keep.len() {
        return Err(Error::InvalidArgument("duplicate subsystem in keep set".into()));
    }
    if let Some(&bad) = keep_sorted.iter().find(|&&k| k >= dims.len()) {
        return Err(Error::SubsystemOutOfRange {
            index: bad,
            count: dims.len(),
        });
    }

    let kept_dim: usize = keep_sorted.iter().map(|&k| dims[k]).product();
    // Codes splitting each composite index into (kept part, traced part).
    let mut kept_code = vec![0usize; total];
    let mut traced_code = vec![0usize; total];
    for idx in 0..total {
        let mut rem = idx;
        let mut kc = 0usize;
        let mut tc = 0usize;
        // Mixed-radix digits, most significant factor first.
        let mut digits = vec![0usize; dims.len()];
        for f in (0..dims.len()).rev() {
            digits[f] = rem % dims[f];
            rem /= dims[f];
        }
        for (f, &d) in digits.iter().enumerate() {
            if keep_sorted.binary_search(&f).is_ok() {
                kc = kc * dims[f] + d;
            } else {
                tc = tc * dims[f] + d;
            }
        }
        kept_code[idx] = kc;
        traced_code[idx] = tc;
    }

    let mut out = ComplexMatrix::zeros(kept_dim);
    for i in 0..total {
        for j in 0..total {
            if traced_code[i] == traced_code[j] {
                let v = rho.get(i, j);
                let prev = out.get(kept_code[i], kept_code[j]);
                out.set(kept_code[i], kept_code[j], prev + v);
            }
        }
    }
    Ok(out)
}

/// Eigenvalues (descending) and matching eigenvector columns of a Hermitian
/// matrix.
#[derive(Clone, Debug)]
pub struct HermitianSpectrum {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: ComplexMatrix,
}

impl HermitianSpectrum {
    /// Rebuild `V f(Lambda) V^dagger` from the spectrum.
    pub fn synthesize(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let n = self.eigenvalues.len();
        let v = &self.eigenvectors;
        let g: Vec<f64> = self.eigenvalues.iter().map(|&l| f(l)).collect();
        let mut out = ComplexMatrix::zeros(n);
        for k in 0..n {
            if g[k] == 0.0 {
                continue;
            }
            for i in 0..n {
                let vik = v.get(i, k);
                for j in 0..n {
                    let prev = out.get(i, j);
                    out.set(i, j, prev + g[k] * vik * v.get(j, k).conj());
                }
            }
        }
        out
    }

    pub fn reconstruct(&self) -> ComplexMatrix {
        self.synthesize(|l| l)
    }
}

const JACOBI_MAX_SWEEPS: usize = 60;

/// Full eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
///
/// The input must be Hermitian within [`HERMITICITY_TOL`]; it is symmetrized
/// before iteration. Sweeps run in a fixed order until the off-diagonal
/// Frobenius mass falls below `1e-13 * ||H||_F`, so the decomposition is
/// deterministic for a fixed input.
pub fn hermitian_eigs(h: &ComplexMatrix) -> Result<HermitianSpectrum> {
    let dev = h.hermiticity_deviation();
    if dev > HERMITICITY_TOL {
        return Err(Error::NotHermitian {
            deviation: dev,
            tol: HERMITICITY_TOL,
        });
    }
    let n = h.dim;
    let mut a = ComplexMatrix::from_fn(n, |i, j| {
        0.5 * (h.get(i, j) + h.get(j, i).conj())
    });
    let mut v = ComplexMatrix::identity(n);
    let norm = a.frobenius_norm();
    if norm == 0.0 || n == 1 {
        let eigenvalues = (0..n).map(|i| a.get(i, i).re).collect();
        return Ok(HermitianSpectrum {
            eigenvalues,
            eigenvectors: v,
        });
    }
    let threshold = 1e-13 * norm;

    let mut converged = false;
    for _sweep in 0..JACOBI_MAX_SWEEPS {
        let mut off = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    off += a.get(i, j).norm_sqr();
                }
            }
        }
        if off.sqrt() <= threshold {
            converged = true;
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                jacobi_rotate(&mut a, &mut v, p, q);
            }
        }
    }
    if !converged {
        // One final check: the last sweep may have finished the job.
        let mut off = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    off += a.get(i, j).norm_sqr();
                }
            }
        }
        if off.sqrt() > threshold {
            return Err(Error::EigNonConvergence {
                sweeps: JACOBI_MAX_SWEEPS,
            });
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    // Stable descending sort keeps tie order deterministic.
    order.sort_by(|&i, &j| {
        a.get(j, j)
            .re
            .partial_cmp(&a.get(i, i).re)
            .expect("eigenvalues are finite")
    });
    let eigenvalues: Vec<f64> = order.iter().map(|&i| a.get(i, i).re).collect();
    let eigenvectors = ComplexMatrix::from_fn(n, |i, j| v.get(i, order[j]));
    Ok(HermitianSpectrum {
        eigenvalues,
        eigenvectors,
    })
}

/// One complex Jacobi rotation annihilating the (p, q) entry.
fn jacobi_rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let n = a.dim;
    let apq = a.get(p, q);
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let phase = apq / r; // e^{i phi}
    let app = a.get(p, p).re;
    let aqq = a.get(q, q).re;
    let theta = (aqq - app) / (2.0 * r);
    let t = if theta >= 0.0 {
        1.0 / (theta + (1.0 + theta * theta).sqrt())
    } else {
        -1.0 / (-theta + (1.0 + theta * theta).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    // Unitary block [[c, s], [-s e^{-i phi}, c e^{-i phi}]]: phase-align the
    // off-diagonal entry, then apply the real rotation.
    let sp = s * phase.conj(); // s e^{-i phi}
    let cp = c * phase.conj(); // c e^{-i phi}

    // Columns: H <- H U.
    for k in 0..n {
        let hkp = a.get(k, p);
        let hkq = a.get(k, q);
        a.set(k, p, c * hkp - sp * hkq);
        a.set(k, q, s * hkp + cp * hkq);
    }
    // Rows: H <- U^dagger H.
    for k in 0..n {
        let hpk = a.get(p, k);
        let hqk = a.get(q, k);
        a.set(p, k, c * hpk - sp.conj() * hqk);
        a.set(q, k, s * hpk + cp.conj() * hqk);
    }
    // Clean up rounding noise where exact zeros/reals are known.
    a.set(p, q, Complex64::new(0.0, 0.0));
    a.set(q, p, Complex64::new(0.0, 0.0));
    let dpp = a.get(p, p);
    let dqq = a.get(q, q);
    a.set(p, p, Complex64::new(dpp.re, 0.0));
    a.set(q, q, Complex64::new(dqq.re, 0.0));

    // Accumulate V <- V U.
    for k in 0..n {
        let vkp = v.get(k, p);
        let vkq = v.get(k, q);
        v.set(k, p, c * vkp - sp * vkq);
        v.set(k, q, s * vkp + cp * vkq);
    }
}

/// Positive-semidefinite square root `V sqrt(Lambda) V^dagger`.
///
/// Eigenvalues in `[-1e-10, 0)` are clamped to zero; anything below that is
/// an error.
pub fn psd_sqrt(h: &ComplexMatrix) -> Result<ComplexMatrix> {
    let spec = hermitian_eigs(h)?;
    for &l in &spec.eigenvalues {
        if l < NEGATIVITY_TOL {
            return Err(Error::NegativeEigenvalue { value: l });
        }
    }
    Ok(spec.synthesize(|l| l.max(0.0).sqrt()))
}

/// Validation report for a candidate density matrix.
#[derive(Clone, Debug)]
pub struct DensityReport {
    pub dim: usize,
    pub tol: f64,
    pub hermiticity_deviation: f64,
    pub trace_deviation: f64,
    pub min_eigenvalue: f64,
    pub hermitian: bool,
    pub unit_trace: bool,
    pub psd: bool,
}

impl DensityReport {
    pub fn is_valid(&self) -> bool {
        self.hermitian && self.unit_trace && self.psd
    }

    pub fn describe(&self) -> String {
        format!(
            "hermitian={} (dev {:.3e}), unit_trace={} (dev {:.3e}), psd={} (min eig {:.3e}), tol {:.1e}",
            self.hermitian,
            self.hermiticity_deviation,
            self.unit_trace,
            self.trace_deviation,
            self.psd,
            self.min_eigenvalue,
            self.tol
        )
    }
}

/// Check Hermiticity, unit trace, and positive semidefiniteness within `tol`.
pub fn validate_density(rho: &ComplexMatrix, tol: f64) -> DensityReport {
    let hdev = rho.hermiticity_deviation();
    let tr = rho.trace();
    let trace_deviation = (tr - Complex64::new(1.0, 0.0)).norm();
    // PSD test runs on the symmetrized matrix so it stays meaningful when the
    // Hermiticity deviation is pure rounding noise.
    let sym = ComplexMatrix::from_fn(rho.dim, |i, j| 0.5 * (rho.get(i, j) + rho.get(j, i).conj()));
    let min_eigenvalue = match hermitian_eigs(&sym) {
        Ok(spec) => spec.eigenvalues.last().copied().unwrap_or(0.0),
        Err(_) => f64::NAN,
    };
    DensityReport {
        dim: rho.dim,
        tol,
        hermiticity_deviation: hdev,
        trace_deviation,
        min_eigenvalue,
        hermitian: hdev <= tol,
        unit_trace: trace_deviation <= tol,
        psd: min_eigenvalue >= -tol,
    }
}

/// Pauli Y.
pub fn pauli_y() -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(2);
    m.set(0, 1, Complex64::new(0.0, -1.0));
    m.set(1, 0, Complex64::new(0.0, 1.0));
    m
}
