//! Multipartite indicators on W states: tau_t across sizes, and the
//! omega_q residual swept over the valid q window, each checked against
//! the W-state closed form.

use dual_entropy::indicators::{indicator, w_closed_form, IndicatorKind};
use dual_entropy::measures::q_window;
use dual_entropy::states::w_state;
use dual_entropy::Result;

fn main() -> Result<()> {
    println!("{:>3} {:>22} {:>22} {:>10}", "N", "tau_t", "closed form", "gap");
    for n in 3..=10 {
        let psi = w_state(n)?;
        let tau = indicator(&psi, 0, IndicatorKind::TauT)?.value;
        let closed = w_closed_form(n, IndicatorKind::TauT)?;
        println!("{n:>3} {tau:>22.15} {closed:>22.15} {:>10.2e}", (tau - closed).abs());
    }

    let (q_lo, q_hi) = q_window();
    println!("\nomega_q for the five-qubit W state over q in [{q_lo:.6}, {q_hi:.6}]:");
    let psi = w_state(5)?;
    println!("{:>8} {:>18} {:>18}", "q", "omega_q", "closed form");
    for i in 0..=10 {
        let q = q_lo + (q_hi - q_lo) * i as f64 / 10.0;
        let omega = indicator(&psi, 0, IndicatorKind::OmegaQ(q))?.value;
        let closed = w_closed_form(5, IndicatorKind::OmegaQ(q))?;
        println!("{q:>8.4} {omega:>18.12} {closed:>18.12}");
    }
    Ok(())
}
