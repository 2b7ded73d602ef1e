//! Construction of multi-controlled Toffoli networks.
//!
//! Three families, each with an exact gate-count witness:
//!
//! - the ancilla-free gray-code network over controlled roots of X
//!   (`lemma71`): 2^(m+1)-3 gates for m controls;
//! - the borrowed-ancilla Toffoli ladder (`lemma72`): 4(m-2) Toffolis on
//!   m-2 extra lines, with a variant that swaps every Toffoli for a Peres
//!   or inverse-Peres gate, bringing the elementary cost to 16m-32;
//! - the one-extra-line ABAB composition of two smaller pieces
//!   (`corollary74` and the split search in `synthesize`): 32m-96 elementary
//!   gates when both pieces use the Peres ladder.
//!
//! `synthesize` picks the cheapest construction for a requested gate size
//! and garbage budget.

use std::collections::HashMap;

use crate::circuit::{Circuit, Role};
use crate::cost::{circuit_cost, mct_cost};
use crate::gate::Gate;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SynthesisError {
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("duplicate line")]
    DuplicateLine,
    #[error("line collision among controls, target, and ancillas")]
    LineCollision,
}

/// Which construction produced a synthesis result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Strategy {
    /// A single gate (sizes 1 to 3).
    Base,
    Lemma71,
    Lemma72 {
        peres: bool,
    },
    Cor74 {
        peres: bool,
    },
    /// ABAB over one extra line, pieces of `m1` and `m2` controls.
    Split {
        m1: usize,
        m2: usize,
        first: PieceKind,
        second: PieceKind,
    },
}

/// Realization of one piece inside a split construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PieceKind {
    Cx,
    Ccx,
    Lemma71,
    Lemma72Peres,
}

impl std::fmt::Display for PieceKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PieceKind::Cx => write!(f, "cx"),
            PieceKind::Ccx => write!(f, "ccx"),
            PieceKind::Lemma71 => write!(f, "lemma71"),
            PieceKind::Lemma72Peres => write!(f, "lemma72-peres"),
        }
    }
}

impl std::fmt::Display for Strategy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Strategy::Base => write!(f, "base"),
            Strategy::Lemma71 => write!(f, "lemma71"),
            Strategy::Lemma72 { peres: false } => write!(f, "lemma72"),
            Strategy::Lemma72 { peres: true } => write!(f, "lemma72-peres"),
            Strategy::Cor74 { peres: false } => write!(f, "cor74"),
            Strategy::Cor74 { peres: true } => write!(f, "cor74-peres"),
            Strategy::Split { m1, m2, first, second } => {
                write!(f, "split({m1}:{first};{m2}:{second})")
            }
        }
    }
}

/// A constructed circuit together with its cost and garbage accounting.
///
/// `garbage_reported` follows the construction's own accounting (extra lines
/// consumed), which may exceed the number of lines actually left disturbed;
/// `check_mct` measures the latter.
#[derive(Debug, Clone)]
pub struct SynthesisResult {
    pub circuit: Circuit,
    /// Controls in order, then the target.
    pub main_lines: Vec<usize>,
    /// Every circuit line outside `main_lines`.
    pub extra_lines: Vec<usize>,
    pub cost: u64,
    pub garbage_reported: usize,
    pub strategy: Strategy,
}

impl SynthesisResult {
    pub fn controls(&self) -> &[usize] {
        &self.main_lines[..self.main_lines.len() - 1]
    }

    pub fn target(&self) -> usize {
        *self.main_lines.last().expect("main lines include the target")
    }
}

fn all_distinct(lines: &[usize]) -> bool {
    let mut sorted = lines.to_vec();
    sorted.sort_unstable();
    sorted.windows(2).all(|w| w[0] != w[1])
}

fn roles_for(width: usize, controls: &[usize], target: usize) -> Vec<Role> {
    let mut roles = vec![Role::Ancilla; width];
    for &c in controls {
        roles[c] = Role::Control;
    }
    roles[target] = Role::Target;
    roles
}

fn build_result(
    width: usize,
    gates: Vec<Gate>,
    controls: &[usize],
    target: usize,
    garbage_reported: usize,
    strategy: Strategy,
) -> SynthesisResult {
    let mut circuit = Circuit::with_gates(width, gates);
    circuit.roles = Some(roles_for(width, controls, target));
    let mut main_lines = controls.to_vec();
    main_lines.push(target);
    let extra_lines: Vec<usize> = (0..width).filter(|l| !main_lines.contains(l)).collect();
    let cost = circuit_cost(&circuit);
    debug_assert!(garbage_reported <= extra_lines.len());
    SynthesisResult { circuit, main_lines, extra_lines, cost, garbage_reported, strategy }
}

/// The four elementary gates realizing Peres(x1, x2, x3): Toffoli on x3
/// followed by CNOT x1 -> x2, via two controlled V and one controlled V+.
pub(crate) fn peres_elementary(x1: usize, x2: usize, x3: usize) -> [Gate; 4] {
    [
        Gate::Cv { control: x1, target: x3 },
        Gate::Cv { control: x2, target: x3 },
        Gate::Cx { control: x1, target: x2 },
        Gate::Cvd { control: x2, target: x3 },
    ]
}

/// The reversed-inverse sequence D+ C+ B+ A+ of [`peres_elementary`],
/// realizing the inverse Peres gate: CNOT x1 -> x2, then Toffoli.
pub(crate) fn iperes_elementary(x1: usize, x2: usize, x3: usize) -> [Gate; 4] {
    [
        Gate::Cv { control: x2, target: x3 },
        Gate::Cx { control: x1, target: x2 },
        Gate::Cvd { control: x2, target: x3 },
        Gate::Cvd { control: x1, target: x3 },
    ]
}

/// Expands a Peres gate (or its inverse) into exactly four elementary gates.
pub fn expand_peres(
    x1: usize,
    x2: usize,
    x3: usize,
    inverted: bool,
) -> Result<Circuit, SynthesisError> {
    if !all_distinct(&[x1, x2, x3]) {
        return Err(SynthesisError::DuplicateLine);
    }
    let width = x1.max(x2).max(x3) + 1;
    let gates = if inverted {
        iperes_elementary(x1, x2, x3).to_vec()
    } else {
        peres_elementary(x1, x2, x3).to_vec()
    };
    Ok(Circuit::with_gates(width, gates))
}

/// The five-elementary-gate Toffoli: controlled V / V+ plus two CNOTs.
pub fn expand_toffoli3(c1: usize, c2: usize, t: usize) -> Result<Circuit, SynthesisError> {
    if !all_distinct(&[c1, c2, t]) {
        return Err(SynthesisError::DuplicateLine);
    }
    let width = c1.max(c2).max(t) + 1;
    Ok(Circuit::with_gates(
        width,
        vec![
            Gate::Cv { control: c2, target: t },
            Gate::Cx { control: c1, target: c2 },
            Gate::Cvd { control: c2, target: t },
            Gate::Cx { control: c1, target: c2 },
            Gate::Cv { control: c1, target: t },
        ],
    ))
}

fn high_bit(x: usize) -> usize {
    debug_assert!(x > 0);
    usize::BITS as usize - 1 - x.leading_zeros() as usize
}

/// The gray-code network: 2^m - 1 controlled 2^(m-1)-th roots of X on the
/// target interleaved with 2^m - 2 CNOTs among the controls.
///
/// Subsets of controls are visited in reflected gray-code order; the parity
/// of the current subset is accumulated on its highest line, which is always
/// otherwise clean because the gray code enters a new highest bit only from
/// a singleton subset. Root direction alternates with subset parity, so the
/// net exponent on the target telescopes to 2^(m-1) exactly when all
/// controls are 1. All control lines end restored.
fn gray_network(controls: &[usize], target: usize) -> Vec<Gate> {
    let m = controls.len();
    debug_assert!(m >= 2);
    let k = (m - 1) as u32;
    let count = (1usize << m) - 1;
    let mut gates = Vec::with_capacity(2 * count - 1);
    for i in 1..=count {
        let code = i ^ (i >> 1);
        let parity_line = controls[high_bit(code)];
        gates.push(if code.count_ones() % 2 == 1 {
            Gate::Crx { control: parity_line, target, k }
        } else {
            Gate::Crxd { control: parity_line, target, k }
        });
        if i < count {
            let next = (i + 1) ^ ((i + 1) >> 1);
            let h = high_bit(code);
            let h2 = high_bit(next);
            gates.push(if h2 != h {
                // A new highest bit enters; seed its line from the old parity line.
                Gate::Cx { control: controls[h], target: controls[h2] }
            } else {
                let d = (code ^ next).trailing_zeros() as usize;
                Gate::Cx { control: controls[d], target: controls[h] }
            });
        }
    }
    gates
}

/// Ancilla-free synthesis of an MCT with `controls.len() >= 2` controls:
/// exactly 2^(m+1) - 3 elementary gates.
pub fn lemma71(controls: &[usize], target: usize) -> Result<SynthesisResult, SynthesisError> {
    let m = controls.len();
    if m < 2 {
        return Err(SynthesisError::OutOfRange(format!(
            "lemma71 needs at least 2 controls, got {m}"
        )));
    }
    let mut lines = controls.to_vec();
    lines.push(target);
    if !all_distinct(&lines) {
        return Err(SynthesisError::LineCollision);
    }
    let width = lines.iter().max().unwrap() + 1;
    let gates = gray_network(controls, target);
    debug_assert_eq!(gates.len() as u64, mct_cost(m));
    Ok(build_result(width, gates, controls, target, 0, Strategy::Lemma71))
}

/// One application of the V-shaped Toffoli ladder: the descending chain
/// G1..G(m-1) followed by the ascending chain G(m-2)..G2, twice over,
/// 4(m-2) Toffolis total. Works for any initial ancilla values and restores
/// every ancilla.
fn toffoli_ladder(controls: &[usize], target: usize, ancillas: &[usize]) -> Vec<Gate> {
    let m = controls.len();
    debug_assert!(m >= 3 && ancillas.len() == m - 2);
    let rung = |j: usize| -> Gate {
        if j == 1 {
            Gate::Ccx { control1: controls[m - 1], control2: ancillas[m - 3], target }
        } else if j == m - 1 {
            Gate::Ccx { control1: controls[1], control2: controls[0], target: ancillas[0] }
        } else {
            Gate::Ccx {
                control1: controls[m - j],
                control2: ancillas[m - j - 2],
                target: ancillas[m - j - 1],
            }
        }
    };
    let mut block: Vec<Gate> = (1..=m - 1).map(rung).collect();
    block.extend((2..=m.saturating_sub(2)).rev().map(rung));
    let mut gates = block.clone();
    gates.extend(block);
    gates
}

/// Replaces each Toffoli occurrence with a Peres gate (odd occurrences) or
/// an inverse Peres gate (even occurrences) on the same three lines. The
/// added CNOT acts on the two control lines; pairing by occurrence makes
/// every inserted CNOT pair cancel under the moving rule, so the operator
/// is unchanged while the elementary cost drops from 5 to 4 per Toffoli.
fn peres_substitute(gates: Vec<Gate>) -> Vec<Gate> {
    let mut seen: HashMap<(usize, usize, usize), usize> = HashMap::new();
    gates
        .into_iter()
        .map(|gate| match gate {
            Gate::Ccx { control1, control2, target } => {
                let n = seen.entry((control1, control2, target)).or_insert(0);
                *n += 1;
                if *n % 2 == 1 {
                    Gate::Peres { x1: control1, x2: control2, x3: target }
                } else {
                    Gate::Iperes { x1: control1, x2: control2, x3: target }
                }
            }
            g => g,
        })
        .collect()
}

/// Borrowed-ancilla synthesis of an MCT on an `n`-line circuit.
///
/// Requires 3 <= m controls, m - 2 ancillas, and 2m - 1 <= n. The ancillas
/// may hold arbitrary values. With `peres_variant` the Toffolis become
/// Peres / inverse-Peres pairs (cost 16m - 32 after expansion); the reported
/// garbage is m - 2 either way, though the network in fact restores every
/// ancilla — `check_mct` surfaces the measured set.
pub fn lemma72(
    n: usize,
    controls: &[usize],
    target: usize,
    ancillas: &[usize],
    peres_variant: bool,
) -> Result<SynthesisResult, SynthesisError> {
    let m = controls.len();
    if m < 3 {
        return Err(SynthesisError::OutOfRange(format!(
            "lemma72 needs at least 3 controls, got {m}"
        )));
    }
    if n < 5 {
        return Err(SynthesisError::OutOfRange(format!("lemma72 needs at least 5 lines, got {n}")));
    }
    if 2 * m - 1 > n {
        return Err(SynthesisError::OutOfRange(format!(
            "lemma72 with {m} controls needs {} lines, got {n}",
            2 * m - 1
        )));
    }
    if ancillas.len() != m - 2 {
        return Err(SynthesisError::OutOfRange(format!(
            "lemma72 with {m} controls needs {} ancillas, got {}",
            m - 2,
            ancillas.len()
        )));
    }
    let mut lines = controls.to_vec();
    lines.push(target);
    lines.extend_from_slice(ancillas);
    if !all_distinct(&lines) {
        return Err(SynthesisError::LineCollision);
    }
    if let Some(&line) = lines.iter().find(|&&l| l >= n) {
        return Err(SynthesisError::OutOfRange(format!("line {line} out of range for width {n}")));
    }
    let mut gates = toffoli_ladder(controls, target, ancillas);
    if peres_variant {
        gates = peres_substitute(gates);
    }
    Ok(build_result(n, gates, controls, target, m - 2, Strategy::Lemma72 { peres: peres_variant }))
}

/// Canonical-layout wrapper for [`lemma72`]: controls on lines 0..m, target
/// on line m, ancillas above, total width 2m - 1.
pub fn lemma72_canonical(m: usize, peres_variant: bool) -> Result<SynthesisResult, SynthesisError> {
    if m < 3 {
        return Err(SynthesisError::OutOfRange(format!(
            "lemma72 needs at least 3 controls, got {m}"
        )));
    }
    let controls: Vec<usize> = (0..m).collect();
    let ancillas: Vec<usize> = (m + 1..2 * m - 1).collect();
    lemma72(2 * m - 1, &controls, m, &ancillas, peres_variant)
}

/// One-extra-line synthesis for m >= 5 controls on m + 2 lines.
///
/// The MCT is written ABAB with A an MCT of m1 = ceil((m+1)/2) controls onto
/// the extra line and B an MCT of the remaining controls plus the extra line
/// onto the target; each piece is a borrowed-ancilla ladder using the lines
/// idle during that piece. 8(n-5) Toffolis on n = m + 2 lines, or 32m - 96
/// elementary gates with the Peres variant.
pub fn corollary74(m: usize, peres_variant: bool) -> Result<SynthesisResult, SynthesisError> {
    if m < 5 {
        return Err(SynthesisError::OutOfRange(format!(
            "corollary74 needs at least 5 controls, got {m}"
        )));
    }
    let n = m + 2;
    let target = m;
    let extra = m + 1;
    let m1 = (m + 2) / 2;
    let m2 = m + 1 - m1;

    let a_controls: Vec<usize> = (0..m1).collect();
    let a_ancillas: Vec<usize> = (m1..m).take(m1 - 2).collect();
    let mut piece_a = toffoli_ladder(&a_controls, extra, &a_ancillas);

    let b_controls: Vec<usize> = (m1..m).chain(std::iter::once(extra)).collect();
    let b_ancillas: Vec<usize> = (0..m1).take(m2 - 2).collect();
    let mut piece_b = toffoli_ladder(&b_controls, target, &b_ancillas);

    if peres_variant {
        piece_a = peres_substitute(piece_a);
        piece_b = peres_substitute(piece_b);
    }

    let mut gates = piece_a.clone();
    gates.extend(piece_b.clone());
    gates.extend(piece_a);
    gates.extend(piece_b);

    let controls: Vec<usize> = (0..m).collect();
    Ok(build_result(n, gates, &controls, target, 1, Strategy::Cor74 { peres: peres_variant }))
}

/// Cheapest realization of one split piece with `x` controls on an `n`-line
/// circuit. The borrowed-ancilla ladder is eligible only when 2x <= n, the
/// reading under which the split search reproduces the published cost table;
/// the gray-code network needs no extra lines and is always available.
fn piece_choice(x: usize, n: usize) -> (PieceKind, u64) {
    match x {
        0 => unreachable!("split pieces have at least one control"),
        1 => (PieceKind::Cx, 1),
        2 => (PieceKind::Ccx, 5),
        _ => {
            let gray = mct_cost(x);
            let ladder = 16 * x as u64 - 32;
            if 2 * x <= n && ladder < gray {
                (PieceKind::Lemma72Peres, ladder)
            } else {
                (PieceKind::Lemma71, gray)
            }
        }
    }
}

fn piece_gates(
    controls: &[usize],
    target: usize,
    borrow_pool: &[usize],
    kind: PieceKind,
) -> Vec<Gate> {
    match kind {
        PieceKind::Cx => vec![Gate::Cx { control: controls[0], target }],
        PieceKind::Ccx => vec![Gate::Ccx { control1: controls[0], control2: controls[1], target }],
        PieceKind::Lemma71 => gray_network(controls, target),
        PieceKind::Lemma72Peres => {
            let ancillas = &borrow_pool[..controls.len() - 2];
            peres_substitute(toffoli_ladder(controls, target, ancillas))
        }
    }
}

fn build_split(m: usize, m1: usize, first: PieceKind, second: PieceKind) -> SynthesisResult {
    let n = m + 2;
    let target = m;
    let extra = m + 1;
    let m2 = m + 1 - m1;

    let a_controls: Vec<usize> = (0..m1).collect();
    let a_pool: Vec<usize> = (m1..m).collect();
    let piece_a = piece_gates(&a_controls, extra, &a_pool, first);

    let b_controls: Vec<usize> = (m1..m).chain(std::iter::once(extra)).collect();
    let b_pool: Vec<usize> = (0..m1).collect();
    let piece_b = piece_gates(&b_controls, target, &b_pool, second);

    let mut gates = piece_a.clone();
    gates.extend(piece_b.clone());
    gates.extend(piece_a);
    gates.extend(piece_b);

    let controls: Vec<usize> = (0..m).collect();
    build_result(n, gates, &controls, target, 1, Strategy::Split { m1, m2, first, second })
}

/// Picks the cheapest construction for an MCT of the given size (controls
/// plus target) within a garbage budget, over: single base gates, the
/// gray-code network, the borrowed-ancilla ladder in both variants, the
/// fixed even split, and every ABAB split with pieces chosen greedily.
///
/// There is no infeasible budget: the gray-code network needs no extra
/// lines, so budget 0 is always satisfiable.
pub fn synthesize(size: usize, garbage_budget: usize) -> Result<SynthesisResult, SynthesisError> {
    if size < 1 {
        return Err(SynthesisError::OutOfRange("size must be at least 1".into()));
    }
    let m = size - 1;
    let n = m + 2;

    #[derive(Clone, Copy)]
    enum Candidate {
        Base,
        Lemma71,
        Lemma72 { peres: bool },
        Cor74Peres,
        Split { m1: usize, first: PieceKind, second: PieceKind },
    }

    let mut candidates: Vec<(u64, Candidate)> = Vec::new();
    if size <= 3 {
        candidates.push(([1, 1, 5][size - 1], Candidate::Base));
    }
    if m >= 2 {
        candidates.push((mct_cost(m), Candidate::Lemma71));
    }
    if m >= 3 && garbage_budget >= m - 2 {
        candidates.push((16 * m as u64 - 32, Candidate::Lemma72 { peres: true }));
        candidates.push((20 * m as u64 - 40, Candidate::Lemma72 { peres: false }));
    }
    if m >= 5 && garbage_budget >= 1 {
        candidates.push((32 * m as u64 - 96, Candidate::Cor74Peres));
    }
    if m >= 2 && garbage_budget >= 1 {
        for m1 in 1..=m {
            let m2 = m + 1 - m1;
            let (first, cost_a) = piece_choice(m1, n);
            let (second, cost_b) = piece_choice(m2, n);
            candidates.push((2 * (cost_a + cost_b), Candidate::Split { m1, first, second }));
        }
    }

    let (_, winner) = candidates
        .iter()
        .copied()
        .reduce(|best, cand| if cand.0 < best.0 { cand } else { best })
        .expect("at least one candidate for size >= 1");

    let result = match winner {
        Candidate::Base => {
            let gate = match size {
                1 => Gate::X { target: 0 },
                2 => Gate::Cx { control: 0, target: 1 },
                _ => Gate::Ccx { control1: 0, control2: 1, target: 2 },
            };
            let controls: Vec<usize> = (0..m).collect();
            build_result(size, vec![gate], &controls, m, 0, Strategy::Base)
        }
        Candidate::Lemma71 => {
            let controls: Vec<usize> = (0..m).collect();
            lemma71(&controls, m)?
        }
        Candidate::Lemma72 { peres } => lemma72_canonical(m, peres)?,
        Candidate::Cor74Peres => corollary74(m, true)?,
        Candidate::Split { m1, first, second } => build_split(m, m1, first, second),
    };
    debug_assert!(result.garbage_reported <= garbage_budget || result.garbage_reported == 0);
    Ok(result)
}

/// Replaces every macro gate with elementary gates on the same lines.
///
/// Toffolis expand to the five-gate network, Peres gates to the four-gate
/// network, and MCT macros to the ancilla-free gray-code network, so the
/// expansion never needs lines the macro did not already touch.
pub fn expand_circuit(circuit: &Circuit) -> Circuit {
    let mut gates = Vec::with_capacity(circuit.gates.len() * 4);
    for gate in &circuit.gates {
        match gate {
            Gate::Ccx { control1, control2, target } => {
                gates.extend(toffoli5(*control1, *control2, *target));
            }
            Gate::Peres { x1, x2, x3 } => gates.extend(peres_elementary(*x1, *x2, *x3)),
            Gate::Iperes { x1, x2, x3 } => gates.extend(iperes_elementary(*x1, *x2, *x3)),
            Gate::Mct { controls, target } => match controls.len() {
                0 => gates.push(Gate::X { target: *target }),
                1 => gates.push(Gate::Cx { control: controls[0], target: *target }),
                2 => gates.extend(toffoli5(controls[0], controls[1], *target)),
                _ => gates.extend(gray_network(controls, *target)),
            },
            g => gates.push(g.clone()),
        }
    }
    Circuit { width: circuit.width, gates, roles: circuit.roles.clone() }
}

fn toffoli5(c1: usize, c2: usize, t: usize) -> Vec<Gate> {
    vec![
        Gate::Cv { control: c2, target: t },
        Gate::Cx { control: c1, target: c2 },
        Gate::Cvd { control: c2, target: t },
        Gate::Cx { control: c1, target: c2 },
        Gate::Cv { control: c1, target: t },
    ]
}

/// Lowers Peres macros to Toffoli granularity: Peres becomes Toffoli then
/// CNOT, inverse Peres becomes CNOT then Toffoli. Other gates pass through.
pub fn peres_to_toffoli_level(circuit: &Circuit) -> Circuit {
    let mut gates = Vec::with_capacity(circuit.gates.len() * 2);
    for gate in &circuit.gates {
        match gate {
            Gate::Peres { x1, x2, x3 } => {
                gates.push(Gate::Ccx { control1: *x1, control2: *x2, target: *x3 });
                gates.push(Gate::Cx { control: *x1, target: *x2 });
            }
            Gate::Iperes { x1, x2, x3 } => {
                gates.push(Gate::Cx { control: *x1, target: *x2 });
                gates.push(Gate::Ccx { control1: *x1, control2: *x2, target: *x3 });
            }
            g => gates.push(g.clone()),
        }
    }
    Circuit { width: circuit.width, gates, roles: circuit.roles.clone() }
}
