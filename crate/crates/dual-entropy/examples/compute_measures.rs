//! Evaluate every measure on a three-qubit generalized Schmidt state,
//! printing both evaluation routes where two exist.

use dual_entropy::measures::{measure_2q, measure_pure, MeasureKind};
use dual_entropy::states::{generalized_schmidt_state, reduced, Bipartition};
use dual_entropy::Result;

fn main() -> Result<()> {
    // sqrt(0.4)|000> + sqrt(0.1)|100> + sqrt(0.2)|110> + sqrt(0.1)|101> + sqrt(0.2)|111>
    let lambdas = [
        0.4f64.sqrt(),
        0.1f64.sqrt(),
        0.2f64.sqrt(),
        0.1f64.sqrt(),
        0.2f64.sqrt(),
    ];
    let psi = generalized_schmidt_state(lambdas, 0.0)?;
    let cut = Bipartition::single(3, 0)?;

    println!("qubit 0 against the rest:");
    let kinds = [
        MeasureKind::Concurrence,
        MeasureKind::Tangle,
        MeasureKind::StEntropy,
        MeasureKind::Eof,
        MeasureKind::TsallisQ(2.0),
        MeasureKind::TtqEntropy(2.0),
    ];
    for kind in kinds {
        let m = measure_pure(&psi, &cut, kind)?;
        match m.cross_check {
            Some(other) => println!(
                "  {:<14} {:.12}   (cross-check {:.12}, gap {:.1e})",
                kind.to_string(),
                m.value,
                other,
                (m.value - other).abs()
            ),
            None => println!("  {:<14} {:.12}", kind.to_string(), m.value),
        }
    }

    println!("\npair marginals (Wootters route):");
    for partner in [1usize, 2] {
        let rho = reduced(&psi, &[0, partner])?;
        for kind in [
            MeasureKind::Concurrence,
            MeasureKind::StEntropy,
            MeasureKind::Eof,
            MeasureKind::TtqEntropy(2.0),
        ] {
            let m = measure_2q(&rho, kind)?;
            println!("  qubits (0,{partner})  {:<14} {:.12}", kind.to_string(), m.value);
        }
    }
    Ok(())
}
