//! Compare all four monogamy lower bounds for the dual entropy E_t on a
//! generalized Schmidt state as the outer exponent alpha grows.
//!
//! Prints one row per alpha: the lhs E_t(0|12)^alpha and each bound's rhs.
//! The slack column uses the tightest applicable bound.

use dual_entropy::measures::MeasureKind;
use dual_entropy::monogamy::{
    bound_mj, bound_powersum, bound_thm_ordered, bound_weighted_geo, cut_and_pairwise,
};
use dual_entropy::states::generalized_schmidt_state;
use dual_entropy::Result;

fn main() -> Result<()> {
    let lambdas = [
        0.4f64.sqrt(),
        0.1f64.sqrt(),
        0.2f64.sqrt(),
        0.1f64.sqrt(),
        0.2f64.sqrt(),
    ];
    let psi = generalized_schmidt_state(lambdas, 0.0)?;
    let gamma = std::f64::consts::SQRT_2;
    let (cut, pairs) = cut_and_pairwise(&psi, 0, MeasureKind::StEntropy)?;

    println!("E_t(0|12) = {cut:.9}, pairwise E_t = {pairs:.9?}");
    println!("{:>6} {:>12} {:>12} {:>12} {:>12} {:>12} {:>10}",
        "alpha", "lhs", "powersum", "weighted", "mj", "ordered", "slack");
    let mut alpha = 2.0 * gamma;
    while alpha <= 6.0 + 1e-9 {
        let lhs = cut.powf(alpha);
        let ps = bound_powersum(&pairs, alpha, gamma)?;
        let wg = bound_weighted_geo(&pairs, alpha, gamma)?;
        let mj = bound_mj(&pairs, alpha, gamma)?;
        let thm = bound_thm_ordered(&pairs, alpha, gamma)?;
        let best = ps.max(wg).max(mj).max(thm);
        println!(
            "{alpha:>6.3} {lhs:>12.9} {ps:>12.9} {wg:>12.9} {mj:>12.9} {thm:>12.9} {:>10.3e}",
            lhs - best
        );
        alpha += 0.25;
    }
    Ok(())
}
