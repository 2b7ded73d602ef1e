//! Seeded random circuit generation for the integration suites.

use mct_synth::{Circuit, Gate};
use rand::seq::SliceRandom;
use rand::Rng;

fn distinct_lines(rng: &mut impl Rng, width: usize, n: usize) -> Vec<usize> {
    let mut lines: Vec<usize> = (0..width).collect();
    let (picked, _) = lines.partial_shuffle(rng, n);
    picked.to_vec()
}

pub fn random_gate(rng: &mut impl Rng, width: usize) -> Gate {
    let max_kind = if width >= 3 {
        10
    } else if width >= 2 {
        6
    } else {
        1
    };
    match rng.gen_range(0..max_kind) {
        0 => Gate::X { target: rng.gen_range(0..width) },
        1 => {
            let l = distinct_lines(rng, width, 2);
            Gate::Cx { control: l[0], target: l[1] }
        }
        2 => {
            let l = distinct_lines(rng, width, 2);
            Gate::Cv { control: l[0], target: l[1] }
        }
        3 => {
            let l = distinct_lines(rng, width, 2);
            Gate::Cvd { control: l[0], target: l[1] }
        }
        4 => {
            let l = distinct_lines(rng, width, 2);
            Gate::Crx { control: l[0], target: l[1], k: rng.gen_range(1..=4) }
        }
        5 => {
            let l = distinct_lines(rng, width, 2);
            Gate::Crxd { control: l[0], target: l[1], k: rng.gen_range(1..=4) }
        }
        6 => {
            let l = distinct_lines(rng, width, 3);
            Gate::Ccx { control1: l[0], control2: l[1], target: l[2] }
        }
        7 => {
            let l = distinct_lines(rng, width, 3);
            Gate::Peres { x1: l[0], x2: l[1], x3: l[2] }
        }
        8 => {
            let l = distinct_lines(rng, width, 3);
            Gate::Iperes { x1: l[0], x2: l[1], x3: l[2] }
        }
        _ => {
            let controls = rng.gen_range(1..=(width - 1).min(4));
            let mut l = distinct_lines(rng, width, controls + 1);
            let target = l.pop().expect("at least two lines");
            Gate::Mct { controls: l, target }
        }
    }
}

pub fn random_circuit(rng: &mut impl Rng, max_width: usize, max_len: usize) -> Circuit {
    let width = rng.gen_range(1..=max_width);
    let len = rng.gen_range(0..=max_len);
    let gates = (0..len).map(|_| random_gate(rng, width)).collect();
    Circuit::with_gates(width, gates)
}
