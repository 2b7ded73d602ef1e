//! Reproduces the quantum cost table for multi-controlled Toffoli gates and
//! checks each row against the closed-form expressions.

use mct_synth::{cost_table, formula_cost, CostFormula};

fn main() {
    let max_size = 12;
    let rows = cost_table(max_size);

    println!("{:<6} {:<8} {:<6} strategy", "size", "garbage", "cost");
    for row in &rows {
        println!("{:<6} {:<8} {:<6} {}", row.size, row.garbage, row.cost, row.strategy);
    }

    // Above size 10 the three garbage classes settle into closed forms.
    println!("\nclosed forms at size {max_size} (m = {}):", max_size - 1);
    let m = (max_size - 1) as u64;
    println!("  garbage 0   : 2^(m+1)-3 = {}", formula_cost(CostFormula::Lemma71, m).unwrap());
    println!("  garbage 1   : 32m-96    = {}", formula_cost(CostFormula::Cor74Peres, m).unwrap());
    println!("  garbage m-2 : 16m-32    = {}", formula_cost(CostFormula::Lemma72Peres, m).unwrap());
}
