//! Multipartite indicators built from the monogamy relations.
//!
//! tau_t subtracts the sqrt(2)-th powers of the pairwise E_t from the
//! focus|rest power; omega_q does the same with squared T^t_q. A strictly
//! positive value signals entanglement that no pair accounts for. For W
//! states both indicators have closed forms through the cut and pair
//! concurrences 2 sqrt(N-1)/N and 2/N.

use crate::error::{Error, Result};
use crate::measures::{f_ttq, h_st, measure_2q, measure_pure, q_in_window, q_window, MeasureKind};
use crate::states::{reduced, Bipartition, PureState};

/// Which residual indicator to compute.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum IndicatorKind {
    /// E_t residual at power sqrt(2).
    TauT,
    /// T^t_q residual at power 2.
    OmegaQ(f64),
}

impl IndicatorKind {
    fn measure(&self) -> MeasureKind {
        match *self {
            IndicatorKind::TauT => MeasureKind::StEntropy,
            IndicatorKind::OmegaQ(q) => MeasureKind::TtqEntropy(q),
        }
    }

    fn power(&self) -> f64 {
        match *self {
            IndicatorKind::TauT => std::f64::consts::SQRT_2,
            IndicatorKind::OmegaQ(_) => 2.0,
        }
    }
}

impl std::fmt::Display for IndicatorKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            IndicatorKind::TauT => write!(f, "tau_t"),
            IndicatorKind::OmegaQ(q) => write!(f, "omega_q(q={q})"),
        }
    }
}

/// One indicator evaluation with its ingredients.
#[derive(Clone, Debug)]
pub struct IndicatorResult {
    pub kind: IndicatorKind,
    pub focus: usize,
    pub num_qubits: usize,
    /// Measure on the focus|rest cut, unexponentiated.
    pub cut_measure: f64,
    /// Pairwise measures in partner order (skipping the focus).
    pub pair_measures: Vec<f64>,
    /// cut_measure^power - sum of pair_measures^power.
    pub value: f64,
}

/// Evaluate an indicator on a pure state with the given focus qubit.
pub fn indicator(psi: &PureState, focus: usize, kind: IndicatorKind) -> Result<IndicatorResult> {
    let measure = kind.measure();
    let power = kind.power();
    let n = psi.num_qubits();
    let cut = Bipartition::single(n, focus)?;
    let cut_measure = measure_pure(psi, &cut, measure)?.value;

    let mut pair_measures = Vec::with_capacity(n - 1);
    for j in (0..n).filter(|&j| j != focus) {
        let rho = reduced(psi, &[focus, j])?;
        pair_measures.push(measure_2q(&rho, measure)?.value);
    }
    let value = cut_measure.powf(power) - pair_measures.iter().map(|v| v.powf(power)).sum::<f64>();
    Ok(IndicatorResult {
        kind,
        focus,
        num_qubits: n,
        cut_measure,
        pair_measures,
        value,
    })
}

/// tau_t = E_t^{sqrt 2}(focus|rest) - sum_j E_t^{sqrt 2}(focus, j).
pub fn tau_t(psi: &PureState, focus: usize) -> Result<f64> {
    Ok(indicator(psi, focus, IndicatorKind::TauT)?.value)
}

/// omega_q = (T^t_q)^2(focus|rest) - sum_j (T^t_q)^2(focus, j).
pub fn omega_q(psi: &PureState, focus: usize, q: f64) -> Result<f64> {
    Ok(indicator(psi, focus, IndicatorKind::OmegaQ(q))?.value)
}

/// Closed form of an indicator on the N-qubit W state, using the cut
/// concurrence 2 sqrt(N-1)/N and pair concurrence 2/N.
pub fn w_closed_form(n: usize, kind: IndicatorKind) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidArgument(
            "the W-state closed form needs at least 2 qubits".into(),
        ));
    }
    let nf = n as f64;
    let c_cut = 2.0 * (nf - 1.0).sqrt() / nf;
    let c_pair = 2.0 / nf;
    let pairs = nf - 1.0;
    match kind {
        IndicatorKind::TauT => {
            let p = std::f64::consts::SQRT_2;
            Ok(h_st(c_cut)?.powf(p) - pairs * h_st(c_pair)?.powf(p))
        }
        IndicatorKind::OmegaQ(q) => {
            if q <= 0.0 {
                return Err(Error::NonPositiveQ { q });
            }
            if !q_in_window(q) {
                let (min, max) = q_window();
                return Err(Error::QOutsideWindow { q, min, max });
            }
            Ok(f_ttq(c_cut, q)?.powi(2) - pairs * f_ttq(c_pair, q)?.powi(2))
        }
    }
}
