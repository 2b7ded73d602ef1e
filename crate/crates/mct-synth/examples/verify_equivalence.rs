//! Runs the equivalence checker over the borrowed-line constructions and
//! contrasts reported garbage (the table's accounting) with the lines the
//! circuits actually disturb: the ladders restore every ancilla.

use mct_synth::{check_mct, corollary74, expand_circuit, lemma72_canonical, synthesize};

fn main() {
    let lemma72 = lemma72_canonical(4, true).expect("valid size");
    let cor74 = corollary74(5, true).expect("valid size");
    let split = synthesize(6, 1).expect("valid size");

    for (name, result) in
        [("lemma72-peres m=4", &lemma72), ("cor74-peres m=5", &cor74), ("split size=6", &split)]
    {
        let expanded = expand_circuit(&result.circuit);
        let report = check_mct(&expanded, result.controls(), result.target(), &result.extra_lines)
            .expect("widths are within limits");
        println!("{name}:");
        println!(
            "  cost={} lines={} strategy={}",
            result.cost, result.circuit.width, result.strategy
        );
        println!("  reported garbage: {}", result.garbage_reported);
        println!("  {report}");
        println!(
            "  measured non-restored lines: {} (reported accounting counts consumed extra lines)",
            report.non_restored_lines.len()
        );
        println!();
    }
}
