//! Stress the monogamy inequalities on Haar-random three-qubit states for
//! both measure families and report the worst observed slack.

use dual_entropy::measures::MeasureKind;
use dual_entropy::monogamy::{bound_powersum, bound_thm_ordered, cut_and_pairwise, ordering_profile, MonogamyFamily};
use dual_entropy::sampler::Sampler;
use dual_entropy::Result;

fn main() -> Result<()> {
    let mut sampler = Sampler::new(7);
    let count = 2000;
    let kinds = [
        MeasureKind::StEntropy,
        MeasureKind::TtqEntropy(1.2),
        MeasureKind::TtqEntropy(2.0),
        MeasureKind::TtqEntropy(3.0),
    ];
    for kind in kinds {
        let gamma = MonogamyFamily::for_kind(kind)?.gamma;
        let mut worst_ps = f64::INFINITY;
        let mut worst_thm = f64::INFINITY;
        let mut thm_applicable = 0usize;
        for _ in 0..count {
            let psi = sampler.haar_pure(3)?;
            let (cut, pairs) = cut_and_pairwise(&psi, 0, kind)?;
            let slack = cut.powf(gamma) - bound_powersum(&pairs, gamma, gamma)?;
            worst_ps = worst_ps.min(slack);
            let profile = ordering_profile(&pairs, gamma);
            if profile.m + 1 == pairs.len() {
                thm_applicable += 1;
                let alpha = 2.0 * gamma;
                let slack = cut.powf(alpha) - bound_thm_ordered(&pairs, alpha, gamma)?;
                worst_thm = worst_thm.min(slack);
            }
        }
        println!(
            "{kind}: worst powersum slack {worst_ps:.3e} over {count} states; \
             worst ordered-head slack {worst_thm:.3e} over {thm_applicable} applicable",
        );
    }
    Ok(())
}
