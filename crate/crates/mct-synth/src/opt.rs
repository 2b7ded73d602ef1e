//! Peephole pass: the moving rule and pair cancellation.
//!
//! `commutes` is a sound, conservative predicate: a `true` answer guarantees
//! the two gates can be swapped without changing the circuit operator; a
//! `false` answer claims nothing. `cancel_pairs` uses it to move identical
//! self-inverse gates together and remove them, which is exactly the
//! argument that turns the Peres-substituted ladder back into the plain
//! Toffoli ladder.

use crate::circuit::Circuit;
use crate::gate::Gate;

fn is_x_family(gate: &Gate) -> bool {
    matches!(gate, Gate::X { .. } | Gate::Cx { .. } | Gate::Ccx { .. } | Gate::Mct { .. })
}

fn x_family_target(gate: &Gate) -> usize {
    match gate {
        Gate::X { target }
        | Gate::Cx { target, .. }
        | Gate::Ccx { target, .. }
        | Gate::Mct { target, .. } => *target,
        _ => unreachable!("only called on controlled-X gates"),
    }
}

/// Sound swap condition for an adjacent gate pair. True when:
/// (a) supports are disjoint; or
/// (b) both gates are controlled-X type (X, CX, CCX, MCT; Peres gates are
///     excluded) and neither gate's target is a control of the other; or
/// (c) at least one gate is V-type and every shared line is a control in
///     both gates.
pub fn commutes(g1: &Gate, g2: &Gate) -> bool {
    let s1 = g1.support();
    let s2 = g2.support();
    let shared: Vec<usize> = s1.iter().copied().filter(|l| s2.contains(l)).collect();
    if shared.is_empty() {
        return true;
    }
    if is_x_family(g1) && is_x_family(g2) {
        let t1 = x_family_target(g1);
        let t2 = x_family_target(g2);
        return !g2.control_lines().contains(&t1) && !g1.control_lines().contains(&t2);
    }
    if g1.is_v_type() || g2.is_v_type() {
        let c1 = g1.control_lines();
        let c2 = g2.control_lines();
        return shared.iter().all(|l| c1.contains(l) && c2.contains(l));
    }
    false
}

/// Removes identical self-inverse gate pairs whose intervening gates all
/// commute with them, iterating to a fixed point. Leftmost candidate pair
/// first; the circuit operator is preserved.
pub fn cancel_pairs(circuit: &Circuit) -> Circuit {
    cancel_pairs_traced(circuit).0
}

/// Same as [`cancel_pairs`], also returning every (cancelled gate,
/// intervening gate) commutation the pass relied on, so soundness of each
/// individual move can be re-verified by local unitary comparison.
pub fn cancel_pairs_traced(circuit: &Circuit) -> (Circuit, Vec<(Gate, Gate)>) {
    let mut gates = circuit.gates.clone();
    let mut moves: Vec<(Gate, Gate)> = Vec::new();
    'restart: loop {
        for i in 0..gates.len() {
            if !gates[i].is_self_inverse() {
                continue;
            }
            let mut j = i + 1;
            while j < gates.len() {
                if gates[j] == gates[i] {
                    for passed in &gates[i + 1..j] {
                        moves.push((gates[i].clone(), passed.clone()));
                    }
                    gates.remove(j);
                    gates.remove(i);
                    continue 'restart;
                }
                if !commutes(&gates[i], &gates[j]) {
                    break;
                }
                j += 1;
            }
        }
        break;
    }
    (Circuit { width: circuit.width, gates, roles: circuit.roles.clone() }, moves)
}
