//! Mechanizes the ladder equivalence proof: writing each Peres gate as
//! Toffoli+CNOT and each inverse Peres as CNOT+Toffoli, the cancellation
//! pass removes every inserted CNOT pair and leaves exactly the plain
//! Toffoli ladder.

use mct_synth::{cancel_pairs, lemma72_canonical, peres_to_toffoli_level};

fn main() {
    let m = 5;
    let peres = lemma72_canonical(m, true).expect("valid ladder size");
    let ladder = lemma72_canonical(m, false).expect("valid ladder size");

    println!("Peres ladder for m={m} ({} macro gates, cost {}):", peres.circuit.len(), peres.cost);
    for gate in &peres.circuit.gates {
        println!("  {gate}");
    }

    let lowered = peres_to_toffoli_level(&peres.circuit);
    println!("\nat Toffoli granularity: {} gates", lowered.len());

    let cancelled = cancel_pairs(&lowered);
    println!("after pair cancellation: {} gates", cancelled.len());

    assert_eq!(cancelled.gates, ladder.circuit.gates);
    println!("identical to the 4(m-2) = {} Toffoli ladder, gate for gate", ladder.circuit.len());
    println!(
        "\ncost comparison: {} (Peres variant) vs {} (Toffoli variant)",
        peres.cost, ladder.cost
    );
}
