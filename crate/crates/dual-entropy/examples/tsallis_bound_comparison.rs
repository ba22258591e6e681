//! Monogamy bounds for the dual Tsallis measure T^t_q, whose squared pair
//! values satisfy the same hierarchy with gamma = 2.

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
    let q = 2.0;
    let gamma = 2.0;
    let (cut, pairs) = cut_and_pairwise(&psi, 0, MeasureKind::TtqEntropy(q))?;
    println!("T_2(0|12) = {cut:.9}, pairwise T_2 = {pairs:.9?}");

    println!("{:>6} {:>12} {:>12} {:>12} {:>12} {:>12}",
        "beta", "lhs", "powersum", "weighted", "mj", "ordered");
    let mut beta = 2.0 * gamma;
    while beta <= 12.0 + 1e-9 {
        let lhs = cut.powf(beta);
        println!(
            "{beta:>6.2} {lhs:>12.9} {:>12.9} {:>12.9} {:>12.9} {:>12.9}",
            bound_powersum(&pairs, beta, gamma)?,
            bound_weighted_geo(&pairs, beta, gamma)?,
            bound_mj(&pairs, beta, gamma)?,
            bound_thm_ordered(&pairs, beta, gamma)?,
        );
        beta += 1.0;
    }
    Ok(())
}
