//! Entanglement measures built on the total entropy of a state and its
//! complement.
//!
//! For a density matrix rho the dual entropy in bits is
//! `S^t(rho) = -tr[rho log2 rho + (1 - rho) log2(1 - rho)]`, and its Tsallis
//! variant with entropic index q is
//! `T^t_q(rho) = [1 - tr rho^q - tr(1-rho)^q + tr(1-rho)] / (q - 1)`.
//! On single-qubit marginals both collapse to closed forms in the cut
//! concurrence: `h(C)` for the entropy measure and `f_q(C)` for the Tsallis
//! one, which is what makes the mixed two-qubit case computable through the
//! Wootters concurrence.

use crate::error::{Error, Result};
use crate::qlinalg::{
    hermitian_eigs, pauli_y, psd_sqrt, tensor, validate_density, ComplexMatrix, NEGATIVITY_TOL,
};
use crate::states::{reduced, schmidt_pair, Bipartition, PureState};

/// Validation tolerance applied to density-matrix inputs of the measures.
pub const DENSITY_TOL: f64 = 1e-10;

/// |q - 1| below which the Tsallis forms switch to their first-order series
/// around the q -> 1 (von Neumann, natural log) limit.
pub const Q_SERIES_SWITCH: f64 = 1e-6;

const DOMAIN_SLACK: f64 = 1e-12;

/// Closed-form validity window for the Tsallis-family measures:
/// `[(5 - sqrt(13))/2, (5 + sqrt(13))/2]`.
pub fn q_window() -> (f64, f64) {
    let s = 13.0f64.sqrt();
    ((5.0 - s) / 2.0, (5.0 + s) / 2.0)
}

pub fn q_in_window(q: f64) -> bool {
    let (lo, hi) = q_window();
    q >= lo - DOMAIN_SLACK && q <= hi + DOMAIN_SLACK
}

/// Which entanglement quantity to evaluate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum MeasureKind {
    /// Cut concurrence.
    Concurrence,
    /// Squared cut concurrence.
    Tangle,
    /// Normalized dual-entropy measure E_t.
    StEntropy,
    /// Entanglement of formation.
    Eof,
    /// Tsallis-q entanglement.
    TsallisQ(f64),
    /// Dual Tsallis-q measure T^t_q.
    TtqEntropy(f64),
}

impl MeasureKind {
    pub fn validate(&self) -> Result<()> {
        match *self {
            MeasureKind::TsallisQ(q) | MeasureKind::TtqEntropy(q) if q <= 0.0 => {
                Err(Error::NonPositiveQ { q })
            }
            _ => Ok(()),
        }
    }

    /// Entropic index carried by the kind, if any.
    pub fn q(&self) -> Option<f64> {
        match *self {
            MeasureKind::TsallisQ(q) | MeasureKind::TtqEntropy(q) => Some(q),
            _ => None,
        }
    }

    fn require_window(&self) -> Result<()> {
        if let Some(q) = self.q() {
            if !q_in_window(q) {
                let (min, max) = q_window();
                return Err(Error::QOutsideWindow { q, min, max });
            }
        }
        Ok(())
    }
}

impl std::fmt::Display for MeasureKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MeasureKind::Concurrence => write!(f, "concurrence"),
            MeasureKind::Tangle => write!(f, "tangle"),
            MeasureKind::StEntropy => write!(f, "st"),
            MeasureKind::Eof => write!(f, "eof"),
            MeasureKind::TsallisQ(q) => write!(f, "tsallis(q={q})"),
            MeasureKind::TtqEntropy(q) => write!(f, "ttq(q={q})"),
        }
    }
}

/// Which formula produced a value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    /// Eigenvalue route on a reduced density matrix.
    Spectral,
    /// Closed form in the (Wootters or Schmidt) concurrence.
    ConcurrenceClosedForm,
}

/// A measure evaluation plus the independent cross-check when one exists.
#[derive(Clone, Copy, Debug)]
pub struct MeasureValue {
    pub kind: MeasureKind,
    pub value: f64,
    pub route: Route,
    /// Value from the other route, when defined for this kind and cut.
    pub cross_check: Option<f64>,
}

fn check_unit_interval(name: &'static str, x: f64) -> Result<f64> {
    if !(x >= -DOMAIN_SLACK && x <= 1.0 + DOMAIN_SLACK) {
        return Err(Error::DomainViolation {
            name,
            value: x,
            domain: "[0, 1]",
        });
    }
    Ok(x.clamp(0.0, 1.0))
}

/// Binary entropy in bits with the 0 log 0 = 0 convention.
pub fn binary_entropy_bits(p: f64) -> f64 {
    let p = p.clamp(0.0, 1.0);
    let term = |x: f64| if x > 0.0 { -x * x.log2() } else { 0.0 };
    term(p) + term(1.0 - p)
}

fn xlnx(x: f64) -> f64 {
    if x > 0.0 {
        x * x.ln()
    } else {
        0.0
    }
}

fn xln2x(x: f64) -> f64 {
    if x > 0.0 {
        let l = x.ln();
        x * l * l
    } else {
        0.0
    }
}

/// Dual-entropy connector: `h(x)` is the binary entropy (bits) of
/// `(1 + sqrt(1 - x^2))/2`. Equals E_t when x is the cut concurrence.
pub fn h_st(x: f64) -> Result<f64> {
    let x = check_unit_interval("concurrence", x)?;
    let s = (1.0 - x * x).max(0.0).sqrt();
    Ok(binary_entropy_bits((1.0 + s) / 2.0))
}

/// EOF connector: binary entropy (bits) of `(1 + sqrt(1 - x))/2`, with x the
/// squared concurrence. Satisfies `f_eof(x^2) = h_st(x)`.
pub fn f_eof(x: f64) -> Result<f64> {
    let x = check_unit_interval("squared concurrence", x)?;
    let s = (1.0 - x).max(0.0).sqrt();
    Ok(binary_entropy_bits((1.0 + s) / 2.0))
}

/// Tsallis entropy of the distribution {p, 1-p}, with the q -> 1 series
/// switch (limit in nats).
fn tsallis_binary(p: f64, q: f64) -> f64 {
    if (q - 1.0).abs() < Q_SERIES_SWITCH {
        let nats = -xlnx(p) - xlnx(1.0 - p);
        nats - 0.5 * (q - 1.0) * (xln2x(p) + xln2x(1.0 - p))
    } else {
        (1.0 - p.powf(q) - (1.0 - p).powf(q)) / (q - 1.0)
    }
}

/// Tsallis-q entanglement connector `g_q` evaluated at x = C^2.
pub fn g_tsallis(x: f64, q: f64) -> Result<f64> {
    if q <= 0.0 {
        return Err(Error::NonPositiveQ { q });
    }
    let x = check_unit_interval("squared concurrence", x)?;
    let s = (1.0 - x).max(0.0).sqrt();
    Ok(tsallis_binary((1.0 + s) / 2.0, q))
}

/// Dual Tsallis connector `f_q` evaluated at the concurrence:
/// `f_ttq(x, q) = 2 g_tsallis(x^2, q)`, and `f_ttq(x, 2) = x^2`.
pub fn f_ttq(x: f64, q: f64) -> Result<f64> {
    if q <= 0.0 {
        return Err(Error::NonPositiveQ { q });
    }
    let x = check_unit_interval("concurrence", x)?;
    let s = (1.0 - x * x).max(0.0).sqrt();
    Ok(2.0 * tsallis_binary((1.0 + s) / 2.0, q))
}

/// Eigenvalues of a validated density matrix, clamped to [0, 1].
fn density_spectrum(rho: &ComplexMatrix, tol: f64) -> Result<Vec<f64>> {
    let report = validate_density(rho, tol);
    if !report.is_valid() {
        return Err(Error::InvalidDensity(report.describe()));
    }
    let spec = hermitian_eigs(rho)?;
    Ok(spec
        .eigenvalues
        .iter()
        .map(|&l| l.clamp(0.0, 1.0))
        .collect())
}

/// Total entropy `S^t` in bits: sum of binary entropies of the eigenvalues.
pub fn total_entropy_st(rho: &ComplexMatrix) -> Result<f64> {
    let spectrum = density_spectrum(rho, DENSITY_TOL)?;
    Ok(spectrum.iter().map(|&l| binary_entropy_bits(l)).sum())
}

/// Dual Tsallis entropy `T^t_q`, with the q -> 1 series switch (nats).
pub fn total_entropy_tq(rho: &ComplexMatrix, q: f64) -> Result<f64> {
    if q <= 0.0 {
        return Err(Error::NonPositiveQ { q });
    }
    let spectrum = density_spectrum(rho, DENSITY_TOL)?;
    if (q - 1.0).abs() < Q_SERIES_SWITCH {
        let nats: f64 = spectrum
            .iter()
            .map(|&l| -xlnx(l) - xlnx(1.0 - l))
            .sum();
        let second: f64 = spectrum
            .iter()
            .map(|&l| xln2x(l) + xln2x(1.0 - l))
            .sum();
        Ok(nats - 0.5 * (q - 1.0) * second)
    } else {
        let sum_q: f64 = spectrum.iter().map(|&l| l.powf(q)).sum();
        let sum_cq: f64 = spectrum.iter().map(|&l| (1.0 - l).powf(q)).sum();
        let trace_c: f64 = spectrum.iter().map(|&l| 1.0 - l).sum();
        Ok((1.0 - sum_q - sum_cq + trace_c) / (q - 1.0))
    }
}

/// Von Neumann entropy in bits.
fn von_neumann_bits(spectrum: &[f64]) -> f64 {
    spectrum
        .iter()
        .map(|&l| if l > 0.0 { -l * l.log2() } else { 0.0 })
        .sum()
}

/// Tsallis entropy `(1 - tr rho^q)/(q - 1)` with the q -> 1 series switch.
fn tsallis_spectral(spectrum: &[f64], q: f64) -> f64 {
    if (q - 1.0).abs() < Q_SERIES_SWITCH {
        let nats: f64 = spectrum.iter().map(|&l| -xlnx(l)).sum();
        let second: f64 = spectrum.iter().map(|&l| xln2x(l)).sum();
        nats - 0.5 * (q - 1.0) * second
    } else {
        let sum_q: f64 = spectrum.iter().map(|&l| l.powf(q)).sum();
        (1.0 - sum_q) / (q - 1.0)
    }
}

/// Normalization `r(d) = d log2 d - (d-1) log2(d-1)` for the entropy measure.
fn entropy_normalization(d: usize) -> f64 {
    let d = d as f64;
    if d < 2.0 {
        return 1.0;
    }
    d * d.log2() - (d - 1.0) * (d - 1.0).log2()
}

/// Cut concurrence of a pure state: `sqrt(2 (1 - tr rho_A^2))`.
pub fn concurrence_pure(psi: &PureState, cut: &Bipartition) -> Result<f64> {
    check_cut(psi, cut)?;
    let rho = reduced(psi, cut.focus())?;
    let purity = rho.purity().min(1.0);
    Ok((2.0 * (1.0 - purity)).max(0.0).sqrt())
}

/// Wootters concurrence of a two-qubit density matrix.
///
/// The spin-flip values eta_i are the singular values of
/// `sqrt(rho_tilde) sqrt(rho)`, obtained as the positive eigenvalues of the
/// Hermitian embedding [[0, A], [A*, 0]]. Taking eigenvalues of
/// `sqrt(rho) rho_tilde sqrt(rho)` and square-rooting them would turn
/// 1e-17-level noise on an exact-zero eigenvalue into a 1e-9 error in the
/// concurrence; the embedding keeps zeros at round-off size.
pub fn concurrence_2q_mixed(rho: &ComplexMatrix) -> Result<f64> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch(format!(
            "two-qubit concurrence needs a 4x4 matrix, got {}x{}",
            rho.dim(),
            rho.dim()
        )));
    }
    let report = validate_density(rho, DENSITY_TOL);
    if !report.is_valid() {
        return Err(Error::InvalidDensity(report.describe()));
    }
    let yy = tensor(&pauli_y(), &pauli_y())?;
    let conj = ComplexMatrix::from_fn(4, |i, j| rho.get(i, j).conj());
    let tilde = yy.mul(&conj)?.mul(&yy)?;
    let a = psd_sqrt(&tilde)?.mul(&psd_sqrt(rho)?)?;
    let mut embed = ComplexMatrix::zeros(8);
    for i in 0..4 {
        for j in 0..4 {
            embed.set(i, 4 + j, a.get(i, j));
            embed.set(4 + j, i, a.get(i, j).conj());
        }
    }
    let spec = hermitian_eigs(&embed)?;
    // The embedding spectrum is {+eta_i, -eta_i}; descending order puts the
    // four etas first.
    let etas = &spec.eigenvalues[..4];
    if etas[3] < NEGATIVITY_TOL {
        return Err(Error::NegativeEigenvalue { value: etas[3] });
    }
    let etas: Vec<f64> = etas.iter().map(|&l| l.max(0.0)).collect();
    Ok((etas[0] - etas[1] - etas[2] - etas[3]).max(0.0))
}

fn check_cut(psi: &PureState, cut: &Bipartition) -> Result<()> {
    let n = psi.num_qubits();
    if cut.focus().len() + cut.rest().len() != n
        || cut.focus().iter().chain(cut.rest()).any(|&q| q >= n)
    {
        return Err(Error::DimensionMismatch(format!(
            "bipartition does not match a {n}-qubit state"
        )));
    }
    Ok(())
}

/// Evaluate a measure on a pure state across the given cut.
///
/// The primary value comes from the spectral route on the focus marginal;
/// when the focus is a single qubit the concurrence closed form is evaluated
/// too and reported as `cross_check`. Entropy-family kinds require a
/// single-qubit focus (the d = 2 normalization).
pub fn measure_pure(psi: &PureState, cut: &Bipartition, kind: MeasureKind) -> Result<MeasureValue> {
    kind.validate()?;
    check_cut(psi, cut)?;
    let rho = reduced(psi, cut.focus())?;
    let schmidt = if cut.is_single_focus() {
        Some(schmidt_pair(psi, cut.focus()[0])?)
    } else {
        None
    };
    let cut_concurrence = schmidt.map(|p| p.concurrence());

    let (value, cross_check) = match kind {
        MeasureKind::Concurrence => {
            let purity = rho.purity().min(1.0);
            let c = (2.0 * (1.0 - purity)).max(0.0).sqrt();
            (c, cut_concurrence)
        }
        MeasureKind::Tangle => {
            let purity = rho.purity().min(1.0);
            let tangle = (2.0 * (1.0 - purity)).max(0.0);
            (tangle, schmidt.map(|p| 4.0 * p.lambda0 * p.lambda1))
        }
        MeasureKind::StEntropy => {
            let c = require_single_focus(cut, cut_concurrence, "entropy measure")?;
            let spectral = total_entropy_st(&rho)? / entropy_normalization(2);
            (spectral, Some(h_st(c)?))
        }
        MeasureKind::Eof => {
            let c = require_single_focus(cut, cut_concurrence, "entanglement of formation")?;
            let spectrum = density_spectrum(&rho, DENSITY_TOL)?;
            (von_neumann_bits(&spectrum), Some(f_eof(c * c)?))
        }
        MeasureKind::TsallisQ(q) => {
            let c = require_single_focus(cut, cut_concurrence, "Tsallis entanglement")?;
            let spectrum = density_spectrum(&rho, DENSITY_TOL)?;
            let cross = if q_in_window(q) {
                Some(g_tsallis(c * c, q)?)
            } else {
                None
            };
            (tsallis_spectral(&spectrum, q), cross)
        }
        MeasureKind::TtqEntropy(q) => {
            let c = require_single_focus(cut, cut_concurrence, "dual Tsallis measure")?;
            let cross = if q_in_window(q) {
                Some(f_ttq(c, q)?)
            } else {
                None
            };
            (total_entropy_tq(&rho, q)?, cross)
        }
    };
    Ok(MeasureValue {
        kind,
        value: value.max(0.0),
        route: Route::Spectral,
        cross_check,
    })
}

fn require_single_focus(
    cut: &Bipartition,
    cut_concurrence: Option<f64>,
    context: &'static str,
) -> Result<f64> {
    match (cut.is_single_focus(), cut_concurrence) {
        (true, Some(c)) => Ok(c),
        _ => Err(Error::NotSingleQubitFocus { context }),
    }
}

/// Evaluate a measure on a two-qubit density matrix through the Wootters
/// concurrence and the matching closed form.
pub fn measure_2q(rho: &ComplexMatrix, kind: MeasureKind) -> Result<MeasureValue> {
    kind.validate()?;
    let c = concurrence_2q_mixed(rho)?;
    let value = match kind {
        MeasureKind::Concurrence => c,
        MeasureKind::Tangle => {
            return Err(Error::UnsupportedMeasure(
                "tangle of a mixed state (convex roof) is not provided".into(),
            ))
        }
        MeasureKind::StEntropy => h_st(c)?,
        MeasureKind::Eof => f_eof(c * c)?,
        MeasureKind::TsallisQ(q) => {
            kind.require_window()?;
            g_tsallis(c * c, q)?
        }
        MeasureKind::TtqEntropy(q) => {
            kind.require_window()?;
            f_ttq(c, q)?
        }
    };
    Ok(MeasureValue {
        kind,
        value: value.max(0.0),
        route: Route::ConcurrenceClosedForm,
        cross_check: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{dicke_state, generalized_schmidt_state, ghz_state, w_state};
    use num_complex::Complex64;

    fn preset_state() -> PureState {
        let s5 = 5.0f64.sqrt();
        generalized_schmidt_state(
            [1.0 / s5, 0.0, (2.0f64 / 5.0).sqrt(), 1.0 / s5, 1.0 / s5],
            0.0,
        )
        .unwrap()
    }

    // Reference values below were generated with 50-digit arithmetic.
    const H_4_5: f64 = 0.7219280948873623;
    const H_2SQRT2_5: f64 = 0.4287100716069234;
    const H_2_5: f64 = 0.2502249116110705;
    const H_SQRT3_2: f64 = 0.8112781244591329;
    const H_1_2: f64 = 0.3545789026652699;

    #[test]
    fn h_st_spot_values() {
        assert!((h_st(0.8).unwrap() - H_4_5).abs() < 1e-15);
        assert!((h_st(2.0 * 2.0f64.sqrt() / 5.0).unwrap() - H_2SQRT2_5).abs() < 1e-15);
        assert!((h_st(0.4).unwrap() - H_2_5).abs() < 1e-15);
        assert!((h_st(3.0f64.sqrt() / 2.0).unwrap() - H_SQRT3_2).abs() < 1e-15);
        assert!((h_st(0.5).unwrap() - H_1_2).abs() < 1e-15);
        assert_eq!(h_st(0.0).unwrap(), 0.0);
        assert!((h_st(1.0).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn h_st_is_nondecreasing_and_bounded() {
        let mut prev = 0.0;
        let mut x = 0.0f64;
        while x <= 1.0 + 1e-9 {
            let v = h_st(x.min(1.0)).unwrap();
            assert!(v >= prev - 1e-12);
            assert!((0.0..=1.0 + 1e-12).contains(&v));
            prev = v;
            x += 1e-3;
        }
    }

    #[test]
    fn h_st_rejects_out_of_domain() {
        assert!(matches!(h_st(1.5), Err(Error::DomainViolation { .. })));
        assert!(matches!(h_st(-0.1), Err(Error::DomainViolation { .. })));
    }

    #[test]
    fn f_eof_matches_h_st_on_squared_argument() {
        for i in 0..=100 {
            let x = i as f64 / 100.0;
            let lhs = f_eof(x * x).unwrap();
            let rhs = h_st(x).unwrap();
            assert!((lhs - rhs).abs() < 1e-14, "x = {x}");
        }
    }

    #[test]
    fn tsallis_connectors_spot_values_and_identity() {
        assert!((g_tsallis(1.0, 2.0).unwrap() - 0.5).abs() < 1e-15);
        assert!((g_tsallis(0.5, 2.0).unwrap() - 0.25).abs() < 1e-15);
        for i in 0..=50 {
            let x = i as f64 / 50.0;
            // f_q(x, 2) = x^2 exactly.
            assert!((f_ttq(x, 2.0).unwrap() - x * x).abs() < 1e-14);
            // f_q(x) = 2 g_q(x^2) for several q.
            for q in [0.8, 1.5, 2.5, 4.0] {
                let f = f_ttq(x, q).unwrap();
                let g = g_tsallis(x * x, q).unwrap();
                assert!((f - 2.0 * g).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn tsallis_series_switch_is_continuous() {
        for x in [0.1, 0.5, 0.9] {
            // Straddle the switch at |q - 1| = 1e-6.
            let below = g_tsallis(x, 1.0 - 2e-6).unwrap();
            let at = g_tsallis(x, 1.0).unwrap();
            let above = g_tsallis(x, 1.0 + 2e-6).unwrap();
            assert!((below - at).abs() < 1e-5);
            assert!((above - at).abs() < 1e-5);
            // Direct formula vs series at the boundary itself.
            let q = 1.0 + Q_SERIES_SWITCH;
            let direct = g_tsallis(x, q + 1e-12).unwrap();
            let series = g_tsallis(x, q - 1e-12).unwrap();
            assert!((direct - series).abs() < 1e-10);
        }
    }

    #[test]
    fn q_window_bounds() {
        let (lo, hi) = q_window();
        assert!((lo - 0.6972243622680054).abs() < 1e-15);
        assert!((hi - 4.302775637731995).abs() < 1e-15);
        assert!(q_in_window(2.0) && q_in_window(lo) && q_in_window(hi));
        assert!(!q_in_window(5.0) && !q_in_window(0.5));
    }

    #[test]
    fn total_entropy_st_spot_values() {
        let rho = ComplexMatrix::from_diag(&[0.8, 0.2]);
        assert!((total_entropy_st(&rho).unwrap() - 1.4438561897747246).abs() < 1e-13);
        let mixed = ComplexMatrix::from_diag(&[0.5, 0.5]);
        assert!((total_entropy_st(&mixed).unwrap() - 2.0).abs() < 1e-14);
        let pure = ComplexMatrix::from_diag(&[1.0, 0.0]);
        assert!(total_entropy_st(&pure).unwrap().abs() < 1e-14);
    }

    #[test]
    fn total_entropy_tq_matches_qubit_closed_form() {
        for i in 1..10 {
            let l = i as f64 / 10.0;
            let rho = ComplexMatrix::from_diag(&[l, 1.0 - l]);
            let direct = total_entropy_tq(&rho, 2.0).unwrap();
            assert!((direct - 4.0 * l * (1.0 - l)).abs() < 1e-14);
            // Against the connector at the matching concurrence.
            let c = 2.0 * (l * (1.0 - l)).sqrt();
            for q in [0.8, 1.0, 1.7, 3.0] {
                let spectral = total_entropy_tq(&rho, q).unwrap();
                let closed = f_ttq(c, q).unwrap();
                assert!((spectral - closed).abs() < 1e-12, "l={l} q={q}");
            }
        }
    }

    #[test]
    fn entropy_rejects_invalid_densities() {
        let bad = ComplexMatrix::from_diag(&[0.9, 0.2]);
        assert!(matches!(
            total_entropy_st(&bad),
            Err(Error::InvalidDensity(_))
        ));
        let rho = ComplexMatrix::from_diag(&[0.5, 0.5]);
        assert!(matches!(
            total_entropy_tq(&rho, -1.0),
            Err(Error::NonPositiveQ { .. })
        ));
    }

    #[test]
    fn pure_cut_concurrences() {
        let psi = preset_state();
        let cut = Bipartition::single(3, 0).unwrap();
        assert!((concurrence_pure(&psi, &cut).unwrap() - 0.8).abs() < 1e-12);

        let dicke = dicke_state(4, 1).unwrap();
        let cut = Bipartition::single(4, 0).unwrap();
        let expected = 3.0f64.sqrt() / 2.0;
        assert!((concurrence_pure(&dicke, &cut).unwrap() - expected).abs() < 1e-12);

        let ghz = ghz_state(3).unwrap();
        let cut = Bipartition::single(3, 0).unwrap();
        assert!((concurrence_pure(&ghz, &cut).unwrap() - 1.0).abs() < 1e-12);

        // Product state: no entanglement across any cut.
        let zero = PureState::new(
            2,
            vec![
                Complex64::new(1.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
            ],
        )
        .unwrap();
        let cut = Bipartition::single(2, 0).unwrap();
        assert!(concurrence_pure(&zero, &cut).unwrap() < 1e-12);
    }

    #[test]
    fn wootters_concurrence_of_werner_states() {
        // p |Phi+><Phi+| + (1-p) I/4 has concurrence max(0, (3p-1)/2).
        let werner = |p: f64| {
            ComplexMatrix::from_fn(4, |i, j| {
                let bell = if (i == 0 || i == 3) && (j == 0 || j == 3) {
                    0.5
                } else {
                    0.0
                };
                let id = if i == j { 0.25 } else { 0.0 };
                Complex64::new(p * bell + (1.0 - p) * id, 0.0)
            })
        };
        assert!((concurrence_2q_mixed(&werner(1.0)).unwrap() - 1.0).abs() < 1e-10);
        assert!((concurrence_2q_mixed(&werner(0.8)).unwrap() - 0.7).abs() < 1e-10);
        assert!(concurrence_2q_mixed(&werner(1.0 / 3.0)).unwrap() < 1e-10);
        assert!(concurrence_2q_mixed(&werner(0.0)).unwrap() < 1e-12);
    }

    #[test]
    fn wootters_requires_a_valid_four_dim_density() {
        let too_small = ComplexMatrix::from_diag(&[0.5, 0.5]);
        assert!(matches!(
            concurrence_2q_mixed(&too_small),
            Err(Error::DimensionMismatch(_))
        ));
        let invalid = ComplexMatrix::from_diag(&[0.5, 0.5, 0.5, 0.5]);
        assert!(matches!(
            concurrence_2q_mixed(&invalid),
            Err(Error::InvalidDensity(_))
        ));
    }

    #[test]
    fn measure_pure_routes_agree_on_preset_state() {
        let psi = preset_state();
        let cut = Bipartition::single(3, 0).unwrap();
        for kind in [
            MeasureKind::Concurrence,
            MeasureKind::StEntropy,
            MeasureKind::Eof,
            MeasureKind::TsallisQ(2.0),
            MeasureKind::TtqEntropy(2.0),
            MeasureKind::TtqEntropy(1.0),
        ] {
            let m = measure_pure(&psi, &cut, kind).unwrap();
            let cross = m.cross_check.expect("single-qubit focus has a closed form");
            assert!(
                (m.value - cross).abs() < 1e-10,
                "{kind}: {} vs {cross}",
                m.value
            );
            assert_eq!(m.route, Route::Spectral);
        }
    }

    #[test]
    fn measure_pure_known_values() {
        let psi = preset_state();
        let cut = Bipartition::single(3, 0).unwrap();
        let st = measure_pure(&psi, &cut, MeasureKind::StEntropy).unwrap();
        assert!((st.value - H_4_5).abs() < 1e-12);
        let ttq = measure_pure(&psi, &cut, MeasureKind::TtqEntropy(2.0)).unwrap();
        assert!((ttq.value - 0.64).abs() < 1e-12);

        let dicke = dicke_state(4, 1).unwrap();
        let cut = Bipartition::single(4, 0).unwrap();
        let st = measure_pure(&dicke, &cut, MeasureKind::StEntropy).unwrap();
        assert!((st.value - H_SQRT3_2).abs() < 1e-12);
    }

    #[test]
    fn measure_pure_supports_multiqubit_focus_for_concurrence_only() {
        let psi = w_state(4).unwrap();
        let cut = Bipartition::new(4, [0, 1]).unwrap();
        let c = measure_pure(&psi, &cut, MeasureKind::Concurrence).unwrap();
        assert!(c.value > 0.0 && c.cross_check.is_none());
        let t = measure_pure(&psi, &cut, MeasureKind::Tangle).unwrap();
        assert!((t.value - c.value * c.value).abs() < 1e-12);
        assert!(matches!(
            measure_pure(&psi, &cut, MeasureKind::StEntropy),
            Err(Error::NotSingleQubitFocus { .. })
        ));
    }

    #[test]
    fn measure_2q_values_on_reduced_pairs() {
        let psi = preset_state();
        let rho_ab = reduced(&psi, &[0, 1]).unwrap();
        let c = measure_2q(&rho_ab, MeasureKind::Concurrence).unwrap();
        assert!((c.value - 2.0 * 2.0f64.sqrt() / 5.0).abs() < 1e-9);
        let st = measure_2q(&rho_ab, MeasureKind::StEntropy).unwrap();
        assert!((st.value - H_2SQRT2_5).abs() < 1e-9);
        assert_eq!(st.route, Route::ConcurrenceClosedForm);

        let rho_ac = reduced(&psi, &[0, 2]).unwrap();
        let t = measure_2q(&rho_ac, MeasureKind::TtqEntropy(2.0)).unwrap();
        assert!((t.value - 0.16).abs() < 1e-12);
    }

    #[test]
    fn measure_2q_enforces_q_window_and_kind_support() {
        let rho = reduced(&w_state(3).unwrap(), &[0, 1]).unwrap();
        assert!(matches!(
            measure_2q(&rho, MeasureKind::TsallisQ(5.0)),
            Err(Error::QOutsideWindow { .. })
        ));
        assert!(matches!(
            measure_2q(&rho, MeasureKind::TtqEntropy(0.5)),
            Err(Error::QOutsideWindow { .. })
        ));
        assert!(matches!(
            measure_2q(&rho, MeasureKind::Tangle),
            Err(Error::UnsupportedMeasure(_))
        ));
        assert!(matches!(
            measure_2q(&rho, MeasureKind::TsallisQ(-2.0)),
            Err(Error::NonPositiveQ { .. })
        ));
    }

    #[test]
    fn dicke_pairwise_concurrence_closed_form_cross_check() {
        // C(A1 Ai) for Dicke(n, k): 2k(n-k)/(n(n-1)) - 2 sqrt(k(k-1)(n-k)(n-k-1))/(n(n-1)).
        let dicke_pair = |n: f64, k: f64| {
            2.0 * k * (n - k) / (n * (n - 1.0))
                - 2.0 * (k * (k - 1.0) * (n - k) * (n - k - 1.0)).sqrt() / (n * (n - 1.0))
        };
        for (n, k) in [(4usize, 1usize), (4, 2), (5, 2), (6, 3)] {
            let psi = dicke_state(n, k).unwrap();
            let rho = reduced(&psi, &[0, 1]).unwrap();
            let woot = concurrence_2q_mixed(&rho).unwrap();
            let formula = dicke_pair(n as f64, k as f64);
            assert!(
                (woot - formula).abs() < 1e-9,
                "Dicke({n},{k}): {woot} vs {formula}"
            );
        }
        // Dicke(4,2) pair value is exactly 1/3.
        let rho = reduced(&dicke_state(4, 2).unwrap(), &[0, 1]).unwrap();
        assert!((concurrence_2q_mixed(&rho).unwrap() - 1.0 / 3.0).abs() < 1e-9);
    }
}
