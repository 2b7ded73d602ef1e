//! The text circuit format: serialize, parse back, expand macros, and
//! cancel redundant pairs, all through the file representation.

use mct_synth::{cancel_pairs, circuit_cost, expand_circuit, parse, serialize};

fn main() {
    let source = "\
.lines 4
.roles c c t a
# a redundant CNOT pair around a Toffoli that shares only its target
cx 0 3
ccx 1 2 3
cx 0 3
mct 0 1 : 2
crx 0 2 k=2
.end
";
    let circuit = parse(source).expect("well-formed input");
    println!(
        "parsed {} gates over {} lines, cost {}",
        circuit.len(),
        circuit.width,
        circuit_cost(&circuit)
    );

    println!("\ncanonical serialization:\n{}", serialize(&circuit));

    let optimized = cancel_pairs(&circuit);
    println!("after pair cancellation ({} gates):\n{}", optimized.len(), serialize(&optimized));

    let expanded = expand_circuit(&optimized);
    println!(
        "fully expanded ({} elementary gates, cost {}):\n{}",
        expanded.len(),
        circuit_cost(&expanded),
        serialize(&expanded)
    );

    let round_trip = parse(&serialize(&expanded)).expect("serializer output always parses");
    assert_eq!(round_trip, expanded);
    println!("round-trip: parse(serialize(c)) == c");
}
