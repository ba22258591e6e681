//! Dual-entropy entanglement measures for multi-qubit pure states.
//!
//! The library computes the total-entropy measure E_t (von Neumann entropy
//! of a reduced density matrix plus the entropy of its complement,
//! normalized to [0, 1]) and its Tsallis-q generalization T^t_q, evaluates
//! the hierarchy of monogamy lower bounds on their powers, and derives the
//! multipartite indicators tau_t and omega_q from the tightest relation.
//!
//! Modules, bottom up:
//!
//! * [`qlinalg`]: dense complex matrices, tensor products, partial traces,
//!   a Jacobi eigensolver, and density-matrix validation.
//! * [`states`]: pure-state constructors (generalized Schmidt, Dicke, W,
//!   GHZ), reduced density matrices, JSON round trips.
//! * [`measures`]: scalar connectors (h, f, g_q, f_q), spectral entropies,
//!   the Wootters concurrence, and the measure dispatchers.
//! * [`monogamy`]: the four lower-bound families, ordering profiles,
//!   bound verification reports, and the scalar lemma residuals.
//! * [`indicators`]: tau_t and omega_q with W-state closed forms.
//! * [`sampler`]: seeded Haar-random states.
//! * [`cli`]: the `dual-entropy` command-line front end.
//!
//! Conventions: qubit 0 is the most significant bit of the basis index;
//! entropies are in bits; eigenvalues are clamped to [0, 1] after
//! validation at 1e-10.

pub mod cli;
pub mod error;
pub mod indicators;
pub mod measures;
pub mod monogamy;
pub mod qlinalg;
pub mod sampler;
pub mod states;

pub use error::{Error, Result};
pub use indicators::{indicator, omega_q, tau_t, w_closed_form, IndicatorKind, IndicatorResult};
pub use measures::{
    concurrence_2q_mixed, concurrence_pure, f_eof, f_ttq, g_tsallis, h_st, measure_2q,
    measure_pure, q_in_window, q_window, total_entropy_st, total_entropy_tq, MeasureKind,
    MeasureValue, Route,
};
pub use monogamy::{
    bound_mj, bound_powersum, bound_thm_mixed, bound_thm_ordered, bound_weighted_geo,
    cut_and_pairwise, lemma_residual, ordering_profile, verify, BoundCoefficients, BoundKind,
    BoundReport, LemmaKind, MonogamyFamily, OrderingProfile,
};
pub use qlinalg::{
    hermitian_eigs, partial_trace, psd_sqrt, tensor, validate_density, ComplexMatrix,
    DensityReport, HermitianSpectrum,
};
pub use sampler::Sampler;
pub use states::{
    density_of, dicke_state, generalized_schmidt_state, ghz_state, reduced, schmidt_pair, w_state,
    Bipartition, PureState, SchmidtPair,
};
