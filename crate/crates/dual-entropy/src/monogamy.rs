//! Monogamy lower bounds on powers of one-to-group entanglement.
//!
//! For a pure state and a focus qubit A, the alpha-th power of the measure
//! across the cut A|rest is bounded from below by weighted sums of the
//! pairwise values E(A,B_j)^alpha. Four bound families are provided, from
//! the plain power sum up to the ordered/mixed-order hierarchy with
//! coefficients Gamma = 2^{alpha/gamma} - 2, Omega_i (tail-to-value ratios)
//! and Upsilon_j (value-to-tail ratios). gamma is sqrt(2) for the entropy
//! measure E_t and 2 for the Tsallis measure T^t_q.

use crate::error::{Error, Result};
use crate::measures::{measure_2q, measure_pure, MeasureKind};
use crate::states::{reduced, Bipartition, PureState};

const EXPONENT_SLACK: f64 = 1e-12;

/// Inner exponent for a measure family.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MonogamyFamily {
    pub gamma: f64,
}

impl MonogamyFamily {
    pub fn for_kind(kind: MeasureKind) -> Result<Self> {
        match kind {
            MeasureKind::StEntropy => Ok(Self {
                gamma: std::f64::consts::SQRT_2,
            }),
            MeasureKind::TtqEntropy(_) => Ok(Self { gamma: 2.0 }),
            other => Err(Error::UnsupportedMeasure(format!(
                "monogamy bounds are defined for the st and ttq measures, not {other}"
            ))),
        }
    }

    /// Smallest outer exponent for which a bound kind is proven.
    pub fn min_outer(&self, bound: BoundKind) -> f64 {
        match bound {
            BoundKind::PowerSum | BoundKind::WeightedGeo => self.gamma,
            BoundKind::MjProduct | BoundKind::ThmOrdered | BoundKind::ThmMixed(_) => {
                2.0 * self.gamma
            }
        }
    }
}

/// The four lower-bound families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundKind {
    /// Plain sum of pairwise powers.
    PowerSum,
    /// Geometric weights (2^{alpha/gamma} - 1)^{i-1}.
    WeightedGeo,
    /// Running products of M_j = 2^{alpha/gamma} - (tail_j / v_j^gamma)^{alpha/gamma}.
    MjProduct,
    /// Ordered-head bound with (1 + Omega_i) Gamma^{i-1} weights.
    ThmOrdered,
    /// Mixed-order bound: ordered head of length m, Upsilon chain after it.
    ThmMixed(usize),
}

impl std::fmt::Display for BoundKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BoundKind::PowerSum => write!(f, "powersum"),
            BoundKind::WeightedGeo => write!(f, "weighted"),
            BoundKind::MjProduct => write!(f, "mj"),
            BoundKind::ThmOrdered => write!(f, "thm"),
            BoundKind::ThmMixed(m) => write!(f, "thm-mixed(m={m})"),
        }
    }
}

/// Descending-sorted values with the head/tail ordering analysis.
#[derive(Clone, Debug)]
pub struct OrderingProfile {
    /// Values sorted descending.
    pub sorted: Vec<f64>,
    /// `permutation[i]` is the original index of `sorted[i]`.
    pub permutation: Vec<usize>,
    /// Head condition v_i^gamma >= sum_{k>i} v_k^gamma, per position
    /// (all but the last value).
    pub head_met: Vec<bool>,
    /// Longest prefix of positions whose head condition holds.
    pub m: usize,
    /// True when the reverse inequality holds at every position past `m`.
    pub consistent: bool,
}

/// Sort descending and report the longest ordered head prefix m together
/// with whether the remaining positions satisfy the reversed inequality.
pub fn ordering_profile(values: &[f64], gamma: f64) -> OrderingProfile {
    let mut permutation: Vec<usize> = (0..values.len()).collect();
    permutation.sort_by(|&i, &j| values[j].partial_cmp(&values[i]).expect("finite values"));
    let sorted: Vec<f64> = permutation.iter().map(|&i| values[i]).collect();

    let l = sorted.len();
    let vg: Vec<f64> = sorted.iter().map(|&v| v.powf(gamma)).collect();
    let mut tail = vec![0.0f64; l];
    for i in (0..l.saturating_sub(1)).rev() {
        tail[i] = tail[i + 1] + vg[i + 1];
    }
    let head_met: Vec<bool> = (0..l.saturating_sub(1)).map(|i| vg[i] >= tail[i]).collect();
    let m = head_met.iter().take_while(|&&ok| ok).count();
    let consistent = (m..head_met.len()).all(|i| vg[i] <= tail[i]);
    OrderingProfile {
        sorted,
        permutation,
        head_met,
        m,
        consistent,
    }
}

/// Named coefficients entering a bound, with the per-term weights such that
/// rhs = sum_i weights[i] * v_i^alpha over the descending-sorted values.
#[derive(Clone, Debug, Default)]
pub struct BoundCoefficients {
    pub big_gamma: Option<f64>,
    pub omegas: Vec<f64>,
    pub upsilons: Vec<f64>,
    pub mjs: Vec<f64>,
    pub weights: Vec<f64>,
}

struct BoundEval {
    rhs: f64,
    coefficients: BoundCoefficients,
    m_used: usize,
}

fn check_exponent(alpha: f64, min: f64) -> Result<()> {
    if alpha < min - EXPONENT_SLACK {
        return Err(Error::ExponentBelowValidity { alpha, min });
    }
    Ok(())
}

/// Core evaluator over a descending-sorted value list.
fn evaluate(profile: &OrderingProfile, alpha: f64, gamma: f64, kind: BoundKind) -> Result<BoundEval> {
    let v = &profile.sorted;
    let l = v.len();
    if l == 0 {
        return Err(Error::InvalidArgument("no pairwise values".into()));
    }
    let x = alpha / gamma;
    let vg: Vec<f64> = v.iter().map(|&w| w.powf(gamma)).collect();
    let mut tail = vec![0.0f64; l];
    for i in (0..l - 1).rev() {
        tail[i] = tail[i + 1] + vg[i + 1];
    }
    let va: Vec<f64> = v.iter().map(|&w| w.powf(alpha)).collect();

    let mut coeff = BoundCoefficients::default();
    let mut m_used = profile.m;

    match kind {
        BoundKind::PowerSum => {
            coeff.weights = vec![1.0; l];
        }
        BoundKind::WeightedGeo => {
            let base = 2.0f64.powf(x) - 1.0;
            coeff.weights = (0..l).map(|i| base.powi(i as i32)).collect();
        }
        BoundKind::MjProduct => {
            // M_j = 2^x - (tail_j / v_j^gamma)^x; the limit 2^x is used when
            // v_j = 0 (descending order forces the tail to zero as well, so
            // the affected terms vanish).
            let mjs: Vec<f64> = (0..l.saturating_sub(1))
                .map(|j| {
                    if vg[j] > 0.0 {
                        2.0f64.powf(x) - (tail[j] / vg[j]).powf(x)
                    } else {
                        2.0f64.powf(x)
                    }
                })
                .collect();
            let mut weights = Vec::with_capacity(l);
            let mut prod = 1.0;
            weights.push(1.0);
            for j in 0..l - 1 {
                prod *= mjs[j];
                weights.push(prod);
            }
            coeff.mjs = mjs;
            coeff.weights = weights;
        }
        BoundKind::ThmOrdered => {
            if profile.m != l - 1 {
                return Err(Error::OrderingConditionsUnmet {
                    m: profile.m,
                    required: l - 1,
                });
            }
            let gam = 2.0f64.powf(x) - 2.0;
            let omegas: Vec<f64> = (0..l - 1)
                .map(|i| if vg[i] > 0.0 { tail[i] / vg[i] } else { 0.0 })
                .collect();
            let mut weights: Vec<f64> = (0..l - 1)
                .map(|i| (1.0 + omegas[i]) * gam.powi(i as i32))
                .collect();
            weights.push(gam.powi(l as i32 - 1));
            coeff.big_gamma = Some(gam);
            coeff.omegas = omegas;
            coeff.weights = weights;
            m_used = l - 1;
        }
        BoundKind::ThmMixed(m) => {
            if m > l - 1 {
                return Err(Error::InvalidArgument(format!(
                    "m = {m} exceeds the number of orderable positions {}",
                    l - 1
                )));
            }
            let gam = 2.0f64.powf(x) - 2.0;
            let omegas: Vec<f64> = (0..m)
                .map(|i| if vg[i] > 0.0 { tail[i] / vg[i] } else { 0.0 })
                .collect();
            // Upsilon_j = v_j^gamma / tail_j, defined past the head; a zero
            // tail makes every remaining value zero, so the factor is dropped.
            let upsilons: Vec<f64> = (0..l.saturating_sub(1))
                .map(|j| {
                    if j >= m && tail[j] > 0.0 {
                        vg[j] / tail[j]
                    } else {
                        0.0
                    }
                })
                .collect();
            let mut weights = vec![0.0f64; l];
            for (i, w) in weights.iter_mut().enumerate().take(m) {
                *w = (1.0 + omegas[i]) * gam.powi(i as i32);
            }
            if m == l - 1 {
                weights[l - 1] = gam.powi(l as i32 - 1);
            } else {
                weights[m] = gam.powi(m as i32 + 1);
                let mut chain = 1.0;
                for p in m + 1..l {
                    chain *= 1.0 + upsilons[p - 1];
                    weights[p] = if p < l - 1 {
                        gam.powi(m as i32 + 1) * chain
                    } else {
                        gam.powi(m as i32) * chain
                    };
                }
            }
            coeff.big_gamma = Some(gam);
            coeff.omegas = omegas;
            coeff.upsilons = upsilons;
            coeff.weights = weights;
            m_used = m;
        }
    }

    let rhs = coeff
        .weights
        .iter()
        .zip(&va)
        .map(|(w, a)| w * a)
        .sum::<f64>();
    Ok(BoundEval {
        rhs,
        coefficients: coeff,
        m_used,
    })
}

fn eval_sorted(values: &[f64], alpha: f64, gamma: f64, kind: BoundKind) -> Result<BoundEval> {
    let profile = ordering_profile(values, gamma);
    evaluate(&profile, alpha, gamma, kind)
}

/// Sum of pairwise powers. Valid for alpha >= gamma.
pub fn bound_powersum(values: &[f64], alpha: f64, gamma: f64) -> Result<f64> {
    check_exponent(alpha, gamma)?;
    Ok(eval_sorted(values, alpha, gamma, BoundKind::PowerSum)?.rhs)
}

/// Geometrically weighted sum with weights (2^{alpha/gamma} - 1)^{i-1}.
/// Valid for alpha >= gamma; ordering conditions are reported by
/// [`ordering_profile`], not enforced here.
pub fn bound_weighted_geo(values: &[f64], alpha: f64, gamma: f64) -> Result<f64> {
    check_exponent(alpha, gamma)?;
    Ok(eval_sorted(values, alpha, gamma, BoundKind::WeightedGeo)?.rhs)
}

/// Running-product bound with factors M_j. Valid for alpha >= 2 gamma.
pub fn bound_mj(values: &[f64], alpha: f64, gamma: f64) -> Result<f64> {
    check_exponent(alpha, 2.0 * gamma)?;
    Ok(eval_sorted(values, alpha, gamma, BoundKind::MjProduct)?.rhs)
}

/// Fully ordered bound. Valid for alpha >= 2 gamma; refuses when the
/// ordering conditions fail (use [`bound_thm_mixed`] then).
pub fn bound_thm_ordered(values: &[f64], alpha: f64, gamma: f64) -> Result<f64> {
    check_exponent(alpha, 2.0 * gamma)?;
    Ok(eval_sorted(values, alpha, gamma, BoundKind::ThmOrdered)?.rhs)
}

/// Mixed-order bound with ordered head of length `m`. Valid for
/// alpha >= 2 gamma and 0 <= m <= N-2; m = N-2 reproduces the fully
/// ordered bound.
pub fn bound_thm_mixed(values: &[f64], alpha: f64, gamma: f64, m: usize) -> Result<f64> {
    check_exponent(alpha, 2.0 * gamma)?;
    Ok(eval_sorted(values, alpha, gamma, BoundKind::ThmMixed(m))?.rhs)
}

/// Everything needed to audit one bound evaluation.
#[derive(Clone, Debug)]
pub struct BoundReport {
    pub kind: MeasureKind,
    pub bound: BoundKind,
    pub alpha: f64,
    pub gamma: f64,
    pub focus: usize,
    /// Measure value on the focus|rest cut (unexponentiated).
    pub lhs_measure: f64,
    /// lhs_measure^alpha.
    pub lhs: f64,
    /// Pairwise values sorted descending.
    pub pairwise: Vec<f64>,
    /// `partners[i]` is the partner qubit of `pairwise[i]`.
    pub partners: Vec<usize>,
    pub coefficients: BoundCoefficients,
    pub rhs: f64,
    pub slack: f64,
    /// Head ordering condition per position.
    pub conditions_met: Vec<bool>,
    /// Profile m, plus whether the tail conditions hold past it.
    pub profile_m: usize,
    pub ordering_consistent: bool,
    /// m actually used by the bound.
    pub m_used: usize,
    /// Whether m_used falls in the range stated with the mixed-order
    /// theorem (1..=N-3); m = 0 and m = N-2 are still evaluated.
    pub m_in_stated_range: bool,
}

/// Measure on the focus|rest cut plus the pairwise values, in partner
/// order (every qubit except the focus, ascending).
pub fn cut_and_pairwise(
    psi: &PureState,
    focus: usize,
    kind: MeasureKind,
) -> Result<(f64, Vec<f64>)> {
    let n = psi.num_qubits();
    let cut = Bipartition::single(n, focus)?;
    let cut_measure = measure_pure(psi, &cut, kind)?.value;
    let mut values = Vec::with_capacity(n - 1);
    for j in (0..n).filter(|&j| j != focus) {
        let rho = reduced(psi, &[focus, j])?;
        values.push(measure_2q(&rho, kind)?.value);
    }
    Ok((cut_measure, values))
}

/// Compute the focus|rest measure and all pairwise values of `psi`, then
/// evaluate the requested lower bound at outer exponent `alpha`.
pub fn verify(
    psi: &PureState,
    focus: usize,
    kind: MeasureKind,
    alpha: f64,
    bound: BoundKind,
) -> Result<BoundReport> {
    let family = MonogamyFamily::for_kind(kind)?;
    check_exponent(alpha, family.min_outer(bound))?;
    let n = psi.num_qubits();
    let (lhs_measure, values) = cut_and_pairwise(psi, focus, kind)?;
    let partners_natural: Vec<usize> = (0..n).filter(|&q| q != focus).collect();

    let profile = ordering_profile(&values, family.gamma);
    let eval = evaluate(&profile, alpha, family.gamma, bound)?;
    let lhs = lhs_measure.powf(alpha);
    let l = profile.sorted.len();
    let m_in_stated_range = l >= 3 && (1..=l - 2).contains(&eval.m_used);

    Ok(BoundReport {
        kind,
        bound,
        alpha,
        gamma: family.gamma,
        focus,
        lhs_measure,
        lhs,
        pairwise: profile.sorted.clone(),
        partners: profile
            .permutation
            .iter()
            .map(|&i| partners_natural[i])
            .collect(),
        rhs: eval.rhs,
        slack: lhs - eval.rhs,
        coefficients: eval.coefficients,
        conditions_met: profile.head_met.clone(),
        profile_m: profile.m,
        ordering_consistent: profile.consistent,
        m_used: eval.m_used,
        m_in_stated_range,
    })
}

/// Scalar lemmas underpinning the bound hierarchy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LemmaKind {
    /// (1+t)^{x-1} >= 1 + (x-1) t on t in [0, 1].
    L1,
    /// (1+t)^x >= 1 + t + (2^x - 2) t^x on t in [0, 1].
    L2,
    /// t - t^x >= t^x - t^{2x} on t in [0, (sqrt 5 - 1)/2].
    L4,
}

impl std::fmt::Display for LemmaKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LemmaKind::L1 => write!(f, "L1"),
            LemmaKind::L2 => write!(f, "L2"),
            LemmaKind::L4 => write!(f, "L4"),
        }
    }
}

/// Upper end of the L4 domain, (sqrt 5 - 1)/2.
pub fn l4_domain_max() -> f64 {
    (5.0f64.sqrt() - 1.0) / 2.0
}

/// Residual lhs - rhs of a scalar lemma at (t, x); nonnegative on the
/// lemma's domain for x >= 2.
pub fn lemma_residual(t: f64, x: f64, which: LemmaKind) -> Result<f64> {
    if x < 2.0 - EXPONENT_SLACK {
        return Err(Error::DomainViolation {
            name: "x",
            value: x,
            domain: "[2, inf)",
        });
    }
    let t_max = match which {
        LemmaKind::L1 | LemmaKind::L2 => 1.0,
        LemmaKind::L4 => l4_domain_max(),
    };
    if !(t >= -EXPONENT_SLACK && t <= t_max + EXPONENT_SLACK) {
        return Err(Error::DomainViolation {
            name: "t",
            value: t,
            domain: match which {
                LemmaKind::L4 => "[0, (sqrt 5 - 1)/2]",
                _ => "[0, 1]",
            },
        });
    }
    let t = t.clamp(0.0, t_max);
    Ok(match which {
        LemmaKind::L1 => (1.0 + t).powf(x - 1.0) - 1.0 - (x - 1.0) * t,
        LemmaKind::L2 => (1.0 + t).powf(x) - 1.0 - t - (2.0f64.powf(x) - 2.0) * t.powf(x),
        LemmaKind::L4 => t - 2.0 * t.powf(x) + t.powf(2.0 * x),
    })
}
