//! Synthesizes one gate size under different garbage budgets and shows how
//! the selector trades extra lines for cost.

use mct_synth::{serialize, synthesize};

fn main() {
    let size = 7;
    println!("MCT of size {size} ({} controls):\n", size - 1);
    for budget in [0, 1, size - 3] {
        let result = synthesize(size, budget).expect("size is valid");
        println!(
            "budget {budget}: cost={:<4} garbage={} lines={:<2} strategy={}",
            result.cost, result.garbage_reported, result.circuit.width, result.strategy
        );
    }

    let best = synthesize(size, 1).expect("size is valid");
    println!("\ncircuit file for the garbage-1 construction:\n");
    print!("{}", serialize(&best.circuit));
}
