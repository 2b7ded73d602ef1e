//! Builds the ancilla-free gray-code network for a 3-control Toffoli and
//! verifies it against the MCT operator, gate by gate and as a whole.

use mct_synth::{global_phase_normalize, lemma71, mct_unitary, unitary, Gate};

fn main() {
    let controls = [0, 1, 2];
    let target = 3;
    let network = lemma71(&controls, target).expect("three controls are enough");

    println!("gray-code network, {} gates (2^4 - 3 = 13):", network.circuit.len());
    for gate in &network.circuit.gates {
        println!("  {gate}");
    }

    let roots = network
        .circuit
        .gates
        .iter()
        .filter(|g| matches!(g, Gate::Crx { .. } | Gate::Crxd { .. }))
        .count();
    println!(
        "\n{} controlled roots of X (k=2), {} CNOTs among controls",
        roots,
        network.circuit.len() - roots
    );

    let u = global_phase_normalize(&unitary(&network.circuit).unwrap()).unwrap();
    let reference = global_phase_normalize(&mct_unitary(4, &controls, target)).unwrap();
    println!("max deviation from the 16x16 MCT operator: {:.3e}", u.max_abs_diff(&reference));
}
