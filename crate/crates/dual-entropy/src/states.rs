//! Multi-qubit pure states: constructors, marginals, and JSON serialization.
//!
//! Basis convention: qubit 0 is the most significant bit of the row-major
//! basis index, so |q0 q1 ... q_{N-1}> maps to index sum_i q_i 2^{N-1-i}.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qlinalg::{ComplexMatrix, hermitian_eigs, MAX_DIM};

/// Maximum number of qubits (dimension capped at [`MAX_DIM`]).
pub const MAX_QUBITS: usize = 12;

/// Accepted deviation of the state norm from one.
pub const NORMALIZATION_TOL: f64 = 1e-12;

/// Normalized pure state of `num_qubits` qubits.
#[derive(Clone, Debug)]
pub struct PureState {
    num_qubits: usize,
    amplitudes: Vec<Complex64>,
}

impl PureState {
    /// Build a state from raw amplitudes, checking length and normalization.
    pub fn new(num_qubits: usize, amplitudes: Vec<Complex64>) -> Result<Self> {
        if num_qubits == 0 || num_qubits > MAX_QUBITS {
            return Err(Error::DimensionTooLarge {
                dim: 1usize.checked_shl(num_qubits as u32).unwrap_or(usize::MAX),
                max: MAX_DIM,
            });
        }
        let dim = 1usize << num_qubits;
        if amplitudes.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "{} qubits need {} amplitudes, got {}",
                num_qubits,
                dim,
                amplitudes.len()
            )));
        }
        let norm = amplitudes
            .iter()
            .map(|a| a.norm_sqr())
            .sum::<f64>()
            .sqrt();
        if (norm - 1.0).abs() > NORMALIZATION_TOL {
            return Err(Error::NormalizationViolation {
                norm,
                tol: NORMALIZATION_TOL,
            });
        }
        Ok(Self {
            num_qubits,
            amplitudes,
        })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn to_json_string(&self) -> String {
        let mirror = StateJson {
            num_qubits: self.num_qubits,
            amplitudes: self.amplitudes.iter().map(|a| [a.re, a.im]).collect(),
        };
        serde_json::to_string_pretty(&mirror).expect("state serialization cannot fail")
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let mirror: StateJson =
            serde_json::from_str(text).map_err(|e| Error::StateFile(e.to_string()))?;
        let amplitudes = mirror
            .amplitudes
            .into_iter()
            .map(|[re, im]| Complex64::new(re, im))
            .collect();
        Self::new(mirror.num_qubits, amplitudes)
    }

    pub fn write_json_file(&self, path: &std::path::Path) -> Result<()> {
        std::fs::write(path, self.to_json_string() + "\n")?;
        Ok(())
    }

    pub fn read_json_file(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::StateFile(format!("{}: {e}", path.display())))?;
        Self::from_json_str(&text)
    }
}

/// Serialized form: `{ "num_qubits": n, "amplitudes": [[re, im], ...] }`.
#[derive(Serialize, Deserialize)]
struct StateJson {
    num_qubits: usize,
    amplitudes: Vec<[f64; 2]>,
}

/// A cut of the qubit set into focus and rest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    focus: Vec<usize>,
    rest: Vec<usize>,
}

impl Bipartition {
    /// Focus qubits (any nonempty proper subset) versus the rest.
    pub fn new(num_qubits: usize, focus: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut focus: Vec<usize> = focus.into_iter().collect();
        focus.sort_unstable();
        focus.dedup();
        if focus.is_empty() {
            return Err(Error::EmptyKeepSet);
        }
        if let Some(&bad) = focus.iter().find(|&&q| q >= num_qubits) {
            return Err(Error::SubsystemOutOfRange {
                index: bad,
                count: num_qubits,
            });
        }
        if focus.len() == num_qubits {
            return Err(Error::InvalidArgument(
                "focus must leave at least one qubit on the other side".into(),
            ));
        }
        let rest = (0..num_qubits).filter(|q| !focus.contains(q)).collect();
        Ok(Self { focus, rest })
    }

    pub fn single(num_qubits: usize, focus_qubit: usize) -> Result<Self> {
        Self::new(num_qubits, [focus_qubit])
    }

    pub fn focus(&self) -> &[usize] {
        &self.focus
    }

    pub fn rest(&self) -> &[usize] {
        &self.rest
    }

    pub fn is_single_focus(&self) -> bool {
        self.focus.len() == 1
    }
}

/// Squared Schmidt coefficients of a single-qubit cut, descending.
#[derive(Clone, Copy, Debug)]
pub struct SchmidtPair {
    pub lambda0: f64,
    pub lambda1: f64,
}

impl SchmidtPair {
    /// Cut concurrence 2 sqrt(lambda0 lambda1).
    pub fn concurrence(&self) -> f64 {
        2.0 * (self.lambda0 * self.lambda1).max(0.0).sqrt()
    }
}

/// Three-qubit state l0|000> + l1 e^{i phi}|100> + l2|110> + l3|101> + l4|111>.
///
/// l2 sits on the ket whose trace over qubit 2 is coherent with |000>, so
/// the pairwise concurrences come out as C(0,1) = 2 l0 l2 and
/// C(0,2) = 2 l0 l3, and the 0|12 cut has C = 2 l0 sqrt(l2^2 + l3^2 + l4^2).
///
/// The coefficients must be nonnegative with squares summing to one within
/// 1e-10; the residual is renormalized away.
pub fn generalized_schmidt_state(lambdas: [f64; 5], phi: f64) -> Result<PureState> {
    for (i, &l) in lambdas.iter().enumerate() {
        if !(l >= 0.0) {
            return Err(Error::DomainViolation {
                name: ["l0", "l1", "l2", "l3", "l4"][i],
                value: l,
                domain: "[0, 1]",
            });
        }
    }
    let sum_sq: f64 = lambdas.iter().map(|l| l * l).sum();
    if (sum_sq - 1.0).abs() > 1e-10 {
        return Err(Error::NormalizationViolation {
            norm: sum_sq.sqrt(),
            tol: 1e-10,
        });
    }
    let norm = sum_sq.sqrt();
    let mut amps = vec![Complex64::new(0.0, 0.0); 8];
    amps[0b000] = Complex64::new(lambdas[0] / norm, 0.0);
    amps[0b100] = Complex64::from_polar(lambdas[1] / norm, phi);
    amps[0b110] = Complex64::new(lambdas[2] / norm, 0.0);
    amps[0b101] = Complex64::new(lambdas[3] / norm, 0.0);
    amps[0b111] = Complex64::new(lambdas[4] / norm, 0.0);
    PureState::new(3, amps)
}

fn binomial(n: usize, k: usize) -> u128 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k {
        acc = acc * (n - k + i) as u128 / i as u128;
    }
    acc
}

/// Symmetric Dicke state of `n` qubits with `k` excitations: the equal-weight
/// superposition of all basis states with exactly `k` ones, each with
/// amplitude 1/sqrt(C(n,k)).
pub fn dicke_state(n: usize, k: usize) -> Result<PureState> {
    if n == 0 || n > MAX_QUBITS {
        return Err(Error::DimensionTooLarge {
            dim: 1usize.checked_shl(n as u32).unwrap_or(usize::MAX),
            max: MAX_DIM,
        });
    }
    if k > n {
        return Err(Error::ExcitationOutOfRange { k, n });
    }
    let amp = 1.0 / (binomial(n, k) as f64).sqrt();
    let dim = 1usize << n;
    let amps = (0..dim)
        .map(|idx| {
            if idx.count_ones() as usize == k {
                Complex64::new(amp, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
        .collect();
    PureState::new(n, amps)
}

/// W state of `n` qubits: the single-excitation Dicke state.
pub fn w_state(n: usize) -> Result<PureState> {
    dicke_state(n, 1)
}

/// GHZ state (|0...0> + |1...1>)/sqrt(2).
pub fn ghz_state(n: usize) -> Result<PureState> {
    if n == 0 || n > MAX_QUBITS {
        return Err(Error::DimensionTooLarge {
            dim: 1usize.checked_shl(n as u32).unwrap_or(usize::MAX),
            max: MAX_DIM,
        });
    }
    let dim = 1usize << n;
    let mut amps = vec![Complex64::new(0.0, 0.0); dim];
    let a = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    amps[0] = a;
    amps[dim - 1] = a;
    PureState::new(n, amps)
}

/// Projector |psi><psi| as a dense matrix.
pub fn density_of(psi: &PureState) -> ComplexMatrix {
    let n = psi.dim();
    ComplexMatrix::from_fn(n, |i, j| psi.amplitudes[i] * psi.amplitudes[j].conj())
}

/// Reduced density matrix of `psi` on the kept qubits.
///
/// Equal to the partial trace of `density_of(psi)` over the complement, but
/// accumulated directly from amplitudes.
pub fn reduced(psi: &PureState, keep: &[usize]) -> Result<ComplexMatrix> {
    let n = psi.num_qubits;
    if keep.is_empty() {
        return Err(Error::EmptyKeepSet);
    }
    let mut keep_sorted = keep.to_vec();
    keep_sorted.sort_unstable();
    keep_sorted.dedup();
    if keep_sorted.len() != keep.len() {
        return Err(Error::InvalidArgument("duplicate qubit in keep set".into()));
    }
    if let Some(&bad) = keep_sorted.iter().find(|&&q| q >= n) {
        return Err(Error::SubsystemOutOfRange {
            index: bad,
            count: n,
        });
    }

    let k = keep_sorted.len();
    let kd = 1usize << k;
    let env: Vec<usize> = (0..n).filter(|q| !keep_sorted.contains(q)).collect();
    let ed = 1usize << env.len();

    // Amplitudes regrouped as table[env_code * kd + kept_code].
    let mut table = vec![Complex64::new(0.0, 0.0); psi.dim()];
    for (idx, &a) in psi.amplitudes.iter().enumerate() {
        let bit = |q: usize| (idx >> (n - 1 - q)) & 1;
        let mut kc = 0usize;
        for &q in &keep_sorted {
            kc = (kc << 1) | bit(q);
        }
        let mut ec = 0usize;
        for &q in &env {
            ec = (ec << 1) | bit(q);
        }
        table[ec * kd + kc] = a;
    }

    let mut out = ComplexMatrix::zeros(kd);
    for e in 0..ed {
        let row = &table[e * kd..(e + 1) * kd];
        for i in 0..kd {
            if row[i].re == 0.0 && row[i].im == 0.0 {
                continue;
            }
            for j in 0..kd {
                let prev = out.get(i, j);
                out.set(i, j, prev + row[i] * row[j].conj());
            }
        }
    }
    Ok(out)
}

/// Squared Schmidt coefficients of the cut (focus qubit | rest), descending.
pub fn schmidt_pair(psi: &PureState, focus_qubit: usize) -> Result<SchmidtPair> {
    let rho = reduced(psi, &[focus_qubit])?;
    let spec = hermitian_eigs(&rho)?;
    let clamp = |x: f64| x.clamp(0.0, 1.0);
    Ok(SchmidtPair {
        lambda0: clamp(spec.eigenvalues[0]),
        lambda1: clamp(spec.eigenvalues[1]),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qlinalg::{partial_trace, validate_density};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// The worked three-qubit example: l0 = l3 = l4 = 1/sqrt(5), l2 = sqrt(2/5).
    pub fn preset_state() -> PureState {
        let s5 = 5.0f64.sqrt();
        generalized_schmidt_state(
            [1.0 / s5, 0.0, (2.0f64 / 5.0).sqrt(), 1.0 / s5, 1.0 / s5],
            0.0,
        )
        .unwrap()
    }

    #[test]
    fn constructors_produce_valid_densities() {
        for psi in [
            preset_state(),
            dicke_state(4, 1).unwrap(),
            dicke_state(4, 2).unwrap(),
            dicke_state(6, 3).unwrap(),
            w_state(5).unwrap(),
            ghz_state(3).unwrap(),
        ] {
            let rho = density_of(&psi);
            let report = validate_density(&rho, 1e-12);
            assert!(report.is_valid(), "{}", report.describe());
        }
    }

    #[test]
    fn dicke_amplitudes_are_uniform_over_correct_weight() {
        let psi = dicke_state(4, 2).unwrap();
        let expected = 1.0 / 6.0f64.sqrt();
        let mut nonzero = 0;
        for (idx, a) in psi.amplitudes().iter().enumerate() {
            if idx.count_ones() == 2 {
                assert!((a.re - expected).abs() < 1e-15 && a.im == 0.0);
                nonzero += 1;
            } else {
                assert_eq!(*a, c(0.0, 0.0));
            }
        }
        assert_eq!(nonzero, 6);
    }

    #[test]
    fn w_state_matches_single_excitation_dicke() {
        let w = w_state(5).unwrap();
        let d = dicke_state(5, 1).unwrap();
        for (a, b) in w.amplitudes().iter().zip(d.amplitudes()) {
            assert_eq!(a, b);
        }
    }

    #[test]
    fn dicke_rejects_bad_excitation_numbers() {
        assert!(matches!(
            dicke_state(3, 4),
            Err(Error::ExcitationOutOfRange { .. })
        ));
    }

    #[test]
    fn state_constructor_rejects_unnormalized_amplitudes() {
        let err = PureState::new(1, vec![c(0.5, 0.0), c(0.5, 0.0)]).unwrap_err();
        assert!(matches!(err, Error::NormalizationViolation { .. }));
        let err = PureState::new(2, vec![c(1.0, 0.0)]).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch(_)));
    }

    #[test]
    fn schmidt_state_places_amplitudes_with_qubit0_most_significant() {
        let psi = preset_state();
        let a = psi.amplitudes();
        let s5 = 1.0 / 5.0f64.sqrt();
        assert!((a[0b000].re - s5).abs() < 1e-15);
        assert!((a[0b110].re - (2.0f64 / 5.0).sqrt()).abs() < 1e-15);
        assert!((a[0b101].re - s5).abs() < 1e-15);
        assert!((a[0b111].re - s5).abs() < 1e-15);
        assert_eq!(a[0b100], c(0.0, 0.0));
    }

    #[test]
    fn schmidt_state_validates_coefficients() {
        assert!(matches!(
            generalized_schmidt_state([0.9, 0.0, 0.0, 0.0, 0.0], 0.0),
            Err(Error::NormalizationViolation { .. })
        ));
        assert!(matches!(
            generalized_schmidt_state([-0.5, 0.5, 0.5, 0.5, 0.0], 0.0),
            Err(Error::DomainViolation { .. })
        ));
    }

    #[test]
    fn reduced_matches_partial_trace_of_density() {
        for psi in [preset_state(), dicke_state(5, 2).unwrap()] {
            let n = psi.num_qubits();
            let rho = density_of(&psi);
            let dims = vec![2usize; n];
            for keep in [vec![0], vec![n - 1], vec![0, 2], vec![1, n - 1]] {
                let fast = reduced(&psi, &keep).unwrap();
                let slow = partial_trace(&rho, &dims, &keep).unwrap();
                assert!(fast.max_abs_diff(&slow) < 1e-13);
            }
        }
    }

    #[test]
    fn w_state_marginal_eigenvalues() {
        let psi = w_state(3).unwrap();
        let pair = schmidt_pair(&psi, 0).unwrap();
        assert!((pair.lambda0 - 2.0 / 3.0).abs() < 1e-14);
        assert!((pair.lambda1 - 1.0 / 3.0).abs() < 1e-14);

        let pair4 = schmidt_pair(&w_state(4).unwrap(), 0).unwrap();
        assert!((pair4.lambda0 - 0.75).abs() < 1e-14);
        assert!((pair4.lambda1 - 0.25).abs() < 1e-14);
    }

    #[test]
    fn schmidt_pair_sums_to_one_and_gives_cut_concurrence() {
        let psi = preset_state();
        let pair = schmidt_pair(&psi, 0).unwrap();
        assert!((pair.lambda0 + pair.lambda1 - 1.0).abs() < 1e-12);
        assert!((pair.concurrence() - 0.8).abs() < 1e-12);
    }

    #[test]
    fn bell_pattern_inside_schmidt_family() {
        // (1/sqrt2)|000> + (1/sqrt2)|110>: qubit 0 maximally entangled with the rest.
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let psi = generalized_schmidt_state([s, 0.0, s, 0.0, 0.0], 0.0).unwrap();
        let rho_a = reduced(&psi, &[0]).unwrap();
        assert!((rho_a.purity() - 0.5).abs() < 1e-14);
    }

    #[test]
    fn bipartition_validation() {
        assert!(Bipartition::new(3, [0, 1]).is_ok());
        assert!(matches!(
            Bipartition::new(3, []),
            Err(Error::EmptyKeepSet)
        ));
        assert!(matches!(
            Bipartition::new(3, [3]),
            Err(Error::SubsystemOutOfRange { .. })
        ));
        assert!(Bipartition::new(3, [0, 1, 2]).is_err());
        let cut = Bipartition::new(4, [2]).unwrap();
        assert_eq!(cut.rest(), &[0, 1, 3]);
        assert!(cut.is_single_focus());
    }

    #[test]
    fn json_round_trip_is_exact() {
        let psi = preset_state();
        let text = psi.to_json_string();
        let back = PureState::from_json_str(&text).unwrap();
        assert_eq!(psi.num_qubits(), back.num_qubits());
        for (a, b) in psi.amplitudes().iter().zip(back.amplitudes()) {
            assert_eq!(a.re.to_bits(), b.re.to_bits());
            assert_eq!(a.im.to_bits(), b.im.to_bits());
        }
    }

    #[test]
    fn json_rejects_malformed_input() {
        assert!(matches!(
            PureState::from_json_str("{\"num_qubits\": 2}"),
            Err(Error::StateFile(_))
        ));
        // Wrong amplitude count for the declared qubit number.
        let bad = "{\"num_qubits\": 2, \"amplitudes\": [[1.0, 0.0]]}";
        assert!(PureState::from_json_str(bad).is_err());
    }
}
