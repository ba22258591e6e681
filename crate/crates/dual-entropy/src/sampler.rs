//! Seeded random states.
//!
//! All randomness flows through one ChaCha12 stream so every ensemble is
//! reproducible from a single u64 seed. Uniform doubles take the top 53
//! bits of `next_u64`; normals come from the Box-Muller transform with the
//! first uniform shifted into (0, 1] so the logarithm stays finite. A
//! vector of i.i.d. complex standard normals, normalized, is uniform on
//! the state sphere; tracing out two qubits of a four-qubit draw yields
//! the mixed two-qubit ensemble.

use num_complex::Complex64;
use rand_chacha::ChaCha12Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::Result;
use crate::qlinalg::ComplexMatrix;
use crate::states::{reduced, PureState};

const INV_2_53: f64 = 1.0 / (1u64 << 53) as f64;

pub struct Sampler {
    rng: ChaCha12Rng,
    cached_normal: Option<f64>,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha12Rng::seed_from_u64(seed),
            cached_normal: None,
        }
    }

    /// Uniform in [0, 1) with 53-bit resolution.
    pub fn uniform(&mut self) -> f64 {
        (self.rng.next_u64() >> 11) as f64 * INV_2_53
    }

    /// Standard normal via Box-Muller; the partner draw is cached.
    pub fn standard_normal(&mut self) -> f64 {
        if let Some(z) = self.cached_normal.take() {
            return z;
        }
        let u1 = ((self.rng.next_u64() >> 11) + 1) as f64 * INV_2_53;
        let u2 = self.uniform();
        let r = (-2.0 * u1.ln()).sqrt();
        let theta = 2.0 * std::f64::consts::PI * u2;
        self.cached_normal = Some(r * theta.sin());
        r * theta.cos()
    }

    pub fn complex_normal(&mut self) -> Complex64 {
        Complex64::new(self.standard_normal(), self.standard_normal())
    }

    /// Haar-random pure state on `num_qubits` qubits.
    pub fn haar_pure(&mut self, num_qubits: usize) -> Result<PureState> {
        let dim = 1usize << num_qubits;
        let mut amps: Vec<Complex64> = (0..dim).map(|_| self.complex_normal()).collect();
        let norm = amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for z in &mut amps {
            *z /= norm;
        }
        PureState::new(num_qubits, amps)
    }

    /// Random mixed two-qubit density matrix: the qubit-pair marginal of a
    /// Haar-random four-qubit purification.
    pub fn mixed_2q(&mut self) -> Result<ComplexMatrix> {
        let psi = self.haar_pure(4)?;
        reduced(&psi, &[0, 1])
    }
}
