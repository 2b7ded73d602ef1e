//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

mod common;

use std::time::{Duration, Instant};

use mct_synth::{
    apply_basis, cancel_pairs, cancel_pairs_traced, check_mct, circuit_cost, corollary74,
    cost_table, expand_circuit, expand_peres, global_phase_normalize, lemma71, lemma72_canonical,
    mct_unitary, parse, peres_to_toffoli_level, permute_basis, serialize, unitary, Circuit, Gate,
    Verdict,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TOL: f64 = 1e-9;

fn finish(number: usize, name: &str, failures: Vec<String>, details: String) {
    if failures.is_empty() {
        println!("acceptance criterion {number} [{name}]: PASS ({details})");
    } else {
        println!("acceptance criterion {number} [{name}]: FAIL ({})", failures.join("; "));
        panic!("criterion {number} failed:\n{}", failures.join("\n"));
    }
}

fn line_mask(width: usize, line: usize) -> usize {
    1 << (width - 1 - line)
}

/// Table reproduction for sizes 1-10 across the listed garbage classes,
/// exact integer match, under 5 seconds.
#[test]
fn criterion_1_cost_table_reproduction() {
    const TABLE: [(usize, usize, u64); 20] = [
        (1, 0, 1),
        (2, 0, 1),
        (3, 0, 5),
        (4, 0, 13),
        (5, 0, 29),
        (6, 0, 61),
        (6, 1, 52),
        (6, 3, 48),
        (7, 0, 125),
        (7, 1, 84),
        (7, 4, 64),
        (8, 0, 253),
        (8, 1, 116),
        (8, 5, 80),
        (9, 0, 509),
        (9, 1, 154),
        (9, 6, 96),
        (10, 0, 1021),
        (10, 1, 192),
        (10, 7, 112),
    ];
    let mut failures = Vec::new();
    let start = Instant::now();
    let rows = cost_table(10);
    let elapsed = start.elapsed();
    if rows.len() != TABLE.len() {
        failures.push(format!("expected {} rows, got {}", TABLE.len(), rows.len()));
    }
    for (row, &(size, garbage, cost)) in rows.iter().zip(TABLE.iter()) {
        if (row.size, row.garbage, row.cost) != (size, garbage, cost) {
            failures.push(format!(
                "row ({size},{garbage}) expected cost {cost}, got ({},{},{})",
                row.size, row.garbage, row.cost
            ));
        }
    }
    if elapsed >= Duration::from_secs(5) {
        failures.push(format!("took {elapsed:?}, limit 5s"));
    }
    finish(1, "cost table sizes 1-10", failures, format!("20 rows exact in {elapsed:?}"));
}

/// Closed forms against counted witnesses: 16m-32 and 32m-96 elementary
/// costs after full expansion, 4(m-2) and 8(n-5) Toffoli counts.
#[test]
fn criterion_2_closed_forms_vs_counted() {
    let mut failures = Vec::new();
    let ccx_count =
        |c: &Circuit| c.gates.iter().filter(|g| matches!(g, Gate::Ccx { .. })).count() as u64;

    for m in 3..=9u64 {
        let peres = lemma72_canonical(m as usize, true).unwrap();
        let counted = circuit_cost(&expand_circuit(&peres.circuit));
        if counted != 16 * m - 32 {
            failures
                .push(format!("lemma72-peres m={m}: counted {counted}, formula {}", 16 * m - 32));
        }
        let toffoli = lemma72_canonical(m as usize, false).unwrap();
        if ccx_count(&toffoli.circuit) != 4 * (m - 2) {
            failures.push(format!(
                "lemma72 m={m}: {} Toffolis, formula {}",
                ccx_count(&toffoli.circuit),
                4 * (m - 2)
            ));
        }
    }
    for m in 5..=9u64 {
        let peres = corollary74(m as usize, true).unwrap();
        let counted = circuit_cost(&expand_circuit(&peres.circuit));
        if counted != 32 * m - 96 {
            failures.push(format!("cor74-peres m={m}: counted {counted}, formula {}", 32 * m - 96));
        }
        let toffoli = corollary74(m as usize, false).unwrap();
        let n = m + 2;
        if ccx_count(&toffoli.circuit) != 8 * (n - 5) {
            failures.push(format!(
                "cor74 m={m}: {} Toffolis, formula {}",
                ccx_count(&toffoli.circuit),
                8 * (n - 5)
            ));
        }
    }
    finish(2, "closed forms vs counted", failures, "m=3..9 ladders, m=5..9 splits".into());
}

/// Dense-unitary equality of the ancilla-free network against the MCT
/// operator for sizes 3-8, within 1e-9 after global-phase normalization.
#[test]
fn criterion_3_unitary_correctness_garbage_free() {
    let mut failures = Vec::new();
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for size in 3..=8usize {
        let m = size - 1;
        let controls: Vec<usize> = (0..m).collect();
        let network = lemma71(&controls, m).unwrap();
        let u = global_phase_normalize(&unitary(&network.circuit).unwrap()).unwrap();
        let reference = global_phase_normalize(&mct_unitary(size, &controls, m)).unwrap();
        let dev = u.max_abs_diff(&reference);
        worst = worst.max(dev);
        if dev > TOL {
            failures.push(format!("size {size}: deviation {dev:.3e}"));
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(60) {
        failures.push(format!("took {elapsed:?}, limit 60s"));
    }
    finish(
        3,
        "gray-code network unitary",
        failures,
        format!("max deviation {worst:.3e} in {elapsed:?}"),
    );
}

/// Exhaustive basis-input behavior of the borrowed-ancilla ladders for
/// m = 3, 4, 5 (widths 5, 7, 9): the Toffoli variant restores every
/// ancilla; the expanded Peres variant may only disturb ancilla lines.
#[test]
fn criterion_4_mainline_correctness_with_borrowed_lines() {
    let mut failures = Vec::new();
    let start = Instant::now();
    for m in 3..=5usize {
        let toffoli = lemma72_canonical(m, false).unwrap();
        let width = toffoli.circuit.width;
        assert_eq!(width, 2 * m - 1);
        let cmask: usize = (0..m).map(|c| line_mask(width, c)).fold(0, |a, b| a | b);
        let tmask = line_mask(width, m);
        for input in 0..1usize << width {
            let out = permute_basis(&toffoli.circuit, input).unwrap();
            let expect = if input & cmask == cmask { input ^ tmask } else { input };
            if out != expect {
                failures
                    .push(format!("lemma72 m={m} input {input:b}: got {out:b}, want {expect:b}"));
                break;
            }
        }

        let peres = lemma72_canonical(m, true).unwrap();
        let expanded = expand_circuit(&peres.circuit);
        let ancilla_mask: usize =
            peres.extra_lines.iter().map(|&l| line_mask(width, l)).fold(0, |a, b| a | b);
        for input in 0..1usize << width {
            let outcome = apply_basis(&expanded, input).unwrap();
            let Some(out) = outcome.basis_index else {
                failures.push(format!("peres m={m} input {input:b}: not a basis state"));
                break;
            };
            let expect = if input & cmask == cmask { input ^ tmask } else { input };
            if (out ^ expect) & !ancilla_mask != 0 {
                failures.push(format!("peres m={m} input {input:b}: main lines wrong: {out:b}"));
                break;
            }
        }

        // The equivalence checker agrees on both variants.
        for result in [&toffoli, &peres] {
            let report =
                check_mct(&result.circuit, result.controls(), result.target(), &result.extra_lines)
                    .unwrap();
            if report.verdict == Verdict::Fail {
                failures.push(format!("check_mct failed for m={m}"));
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(120) {
        failures.push(format!("took {elapsed:?}, limit 120s"));
    }
    finish(4, "borrowed-line ladders exhaustive", failures, format!("widths 5,7,9 in {elapsed:?}"));
}

/// The cancellation pass turns the Peres ladder (at Toffoli granularity)
/// into the plain 4(m-2)-Toffoli ladder, gate for gate.
#[test]
fn criterion_5_mechanized_ladder_equivalence() {
    let mut failures = Vec::new();
    for m in 3..=6usize {
        let peres = lemma72_canonical(m, true).unwrap();
        let lowered = peres_to_toffoli_level(&peres.circuit);
        let cancelled = cancel_pairs(&lowered);
        let ladder = lemma72_canonical(m, false).unwrap();
        if cancelled.gates != ladder.circuit.gates {
            failures.push(format!(
                "m={m}: cancelled to {} gates, ladder has {}",
                cancelled.gates.len(),
                ladder.circuit.len()
            ));
        }
    }
    finish(5, "Peres ladder collapses to Toffoli ladder", failures, "m=3..6 gate-for-gate".into());
}

/// Peres gate semantics: the 4-gate expansion matches Toffoli-then-CNOT,
/// and the inverted expansion is exactly the reversed-inverse sequence
/// matching CNOT-then-Toffoli.
#[test]
fn criterion_6_peres_gate_semantics() {
    let mut failures = Vec::new();
    let forward = expand_peres(0, 1, 2, false).unwrap();
    if forward.len() != 4 || circuit_cost(&forward) != 4 {
        failures.push(format!(
            "expansion has {} gates, cost {}",
            forward.len(),
            circuit_cost(&forward)
        ));
    }
    let ccx_then_cx = unitary(&Circuit::with_gates(
        3,
        vec![Gate::Ccx { control1: 0, control2: 1, target: 2 }, Gate::Cx { control: 0, target: 1 }],
    ))
    .unwrap();
    let dev = unitary(&forward).unwrap().max_abs_diff(&ccx_then_cx);
    if dev > TOL {
        failures.push(format!("forward deviation {dev:.3e}"));
    }

    let inverted = expand_peres(0, 1, 2, true).unwrap();
    if inverted.gates != forward.inverse().gates {
        failures.push("inverted expansion is not the reversed-inverse sequence".into());
    }
    let cx_then_ccx = unitary(&Circuit::with_gates(
        3,
        vec![Gate::Cx { control: 0, target: 1 }, Gate::Ccx { control1: 0, control2: 1, target: 2 }],
    ))
    .unwrap();
    let dev = unitary(&inverted).unwrap().max_abs_diff(&cx_then_ccx);
    if dev > TOL {
        failures.push(format!("inverted deviation {dev:.3e}"));
    }
    finish(6, "Peres gate semantics", failures, "4 gates, both directions".into());
}

/// Property suites: inverse composition, root-of-X composition, text
/// round-trip, and 1000-case commutation soundness fuzzing.
#[test]
fn criterion_7_property_suites() {
    let mut failures = Vec::new();

    // Inverse-composition identity on seeded random circuits.
    let mut rng = ChaCha8Rng::seed_from_u64(7001);
    for case in 0..200 {
        let c = common::random_circuit(&mut rng, 6, 20);
        let u = unitary(&c.then(&c.inverse())).unwrap();
        let identity = mct_synth::DenseUnitary::identity(c.width);
        let dev = u.max_abs_diff(&identity);
        if dev > TOL {
            failures.push(format!("inverse composition case {case}: deviation {dev:.3e}"));
            break;
        }
    }

    // CRX composed 2^k times equals CX.
    for k in 1..=6u32 {
        let gates = vec![Gate::Crx { control: 0, target: 1, k }; 1 << k];
        let u = unitary(&Circuit::with_gates(2, gates)).unwrap();
        let cx =
            unitary(&Circuit::with_gates(2, vec![Gate::Cx { control: 0, target: 1 }])).unwrap();
        let dev = u.max_abs_diff(&cx);
        if dev > TOL {
            failures.push(format!("crx k={k}: deviation {dev:.3e}"));
        }
    }

    // Text format round-trip.
    let mut rng = ChaCha8Rng::seed_from_u64(7002);
    for case in 0..300 {
        let c = common::random_circuit(&mut rng, 8, 24);
        let text = serialize(&c);
        match parse(&text) {
            Ok(back) => {
                if back != c || serialize(&back) != text {
                    failures.push(format!("round-trip case {case} mismatch"));
                    break;
                }
            }
            Err(e) => {
                failures.push(format!("round-trip case {case}: {e}"));
                break;
            }
        }
    }

    // Commutation-rule soundness fuzzing: every commutation the cancellation
    // pass used is re-verified by local unitary comparison, and the pass
    // preserves the circuit operator. Copies of existing gates are inserted
    // so cancellation candidates actually arise.
    let mut rng = ChaCha8Rng::seed_from_u64(7003);
    let mut moves_checked = 0usize;
    for case in 0..1000 {
        let mut c = common::random_circuit(&mut rng, 6, 22);
        for _ in 0..c.gates.len() / 3 {
            let src = rng.gen_range(0..c.gates.len());
            let dst = rng.gen_range(0..=c.gates.len());
            let gate = c.gates[src].clone();
            c.gates.insert(dst, gate);
        }
        let (out, moves) = cancel_pairs_traced(&c);
        for (moved, passed) in &moves {
            let ab = unitary(&Circuit::with_gates(c.width, vec![moved.clone(), passed.clone()]))
                .unwrap();
            let ba = unitary(&Circuit::with_gates(c.width, vec![passed.clone(), moved.clone()]))
                .unwrap();
            if ab.max_abs_diff(&ba) > TOL {
                failures.push(format!("fuzz case {case}: unsound swap of {moved} and {passed}"));
            }
            moves_checked += 1;
        }
        let before = unitary(&c).unwrap();
        let after = unitary(&out).unwrap();
        if before.max_abs_diff(&after) > TOL {
            failures.push(format!("fuzz case {case}: operator changed"));
            break;
        }
    }

    finish(
        7,
        "property suites",
        failures,
        format!("200 inverse cases, k<=6 roots, 300 round-trips, 1000 fuzz circuits, {moves_checked} moves re-verified"),
    );
}
