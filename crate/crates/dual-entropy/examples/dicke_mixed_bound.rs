//! The four-qubit Dicke state with one excitation has three equal pairwise
//! entropies, so its ordering profile has an empty ordered head (m = 0) and
//! the ordered-head bound refuses. The mixed-order bound still applies and
//! collapses to a closed form in the common pairwise value.

use dual_entropy::measures::MeasureKind;
use dual_entropy::monogamy::{bound_thm_mixed, bound_thm_ordered, cut_and_pairwise, ordering_profile};
use dual_entropy::states::dicke_state;
use dual_entropy::Result;

fn main() -> Result<()> {
    let psi = dicke_state(4, 1)?;
    let gamma = std::f64::consts::SQRT_2;
    let (cut, pairs) = cut_and_pairwise(&psi, 0, MeasureKind::StEntropy)?;
    let profile = ordering_profile(&pairs, gamma);
    println!("E_t(0|123) = {cut:.9}, pairwise = {pairs:.9?}");
    println!("ordering profile: m = {}, consistent = {}", profile.m, profile.consistent);

    let alpha = 2.0 * gamma;
    match bound_thm_ordered(&pairs, alpha, gamma) {
        Err(e) => println!("ordered-head bound refuses: {e}"),
        Ok(_) => unreachable!("equal values cannot satisfy the head conditions"),
    }

    println!("\nmixed-order bound at m = 0 against its closed form:");
    println!("{:>6} {:>14} {:>14} {:>14} {:>10}", "alpha", "lhs", "rhs", "closed", "gap");
    for alpha in [2.0 * gamma, 3.0, 4.0, 5.0, 6.0] {
        let lhs = cut.powf(alpha);
        let rhs = bound_thm_mixed(&pairs, alpha, gamma, 0)?;
        // three equal values e: rhs = (5/2 * 2^(alpha/gamma) - 2) e^alpha
        let e = pairs[0];
        let closed = (2.5 * 2f64.powf(alpha / gamma) - 2.0) * e.powf(alpha);
        println!(
            "{alpha:>6.3} {lhs:>14.9} {rhs:>14.9} {closed:>14.9} {:>10.2e}",
            (rhs - closed).abs()
        );
    }
    Ok(())
}
