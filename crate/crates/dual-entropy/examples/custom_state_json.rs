//! Round-trip a state through the JSON file format and evaluate measures on
//! the reloaded copy. The format stores one [re, im] pair per amplitude in
//! most-significant-qubit-first order.

use dual_entropy::measures::{measure_pure, MeasureKind};
use dual_entropy::states::{w_state, Bipartition, PureState};
use dual_entropy::Result;

fn main() -> Result<()> {
    let psi = w_state(4)?;
    let path = std::env::temp_dir().join("dual-entropy-w4.json");
    psi.write_json_file(&path)?;
    println!("wrote {}:", path.display());
    println!("{}", psi.to_json_string());

    let back = PureState::read_json_file(&path)?;
    let cut = Bipartition::single(back.num_qubits(), 0)?;
    for kind in [MeasureKind::StEntropy, MeasureKind::Eof, MeasureKind::TtqEntropy(2.0)] {
        let m = measure_pure(&back, &cut, kind)?;
        println!("{:<8} on reloaded state: {}", kind.to_string(), m.value);
    }

    // amplitudes survive bit for bit
    let identical = psi
        .amplitudes()
        .iter()
        .zip(back.amplitudes())
        .all(|(a, b)| a.re.to_bits() == b.re.to_bits() && a.im.to_bits() == b.im.to_bits());
    println!("bit-exact round trip: {identical}");
    std::fs::remove_file(&path).ok();
    Ok(())
}
