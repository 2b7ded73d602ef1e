//! Exhaustive simulation and equivalence checking.
//!
//! Two engines: dense unitaries (capped at width 11, 2048x2048) and per
//! basis-state propagation (capped at width 16). Permutation-only circuits
//! additionally get an exact bit-level simulator with no floating point, so
//! checks on Toffoli-granularity networks carry no tolerance at all.
//!
//! Convention: line 0 is the most significant bit of a basis-state index.
//! This is internal and uniform across the crate; it matches reading a
//! circuit diagram top to bottom.

use num_complex::Complex64;

use crate::circuit::{Circuit, CircuitError};
use crate::gate::Gate;

/// Widest circuit accepted by [`unitary`].
pub const UNITARY_WIDTH_LIMIT: usize = 11;
/// Widest circuit accepted by [`apply_basis`] and [`check_mct`].
pub const BASIS_WIDTH_LIMIT: usize = 16;
/// Tolerance for unitary comparisons.
pub const UNITARY_TOL: f64 = 1e-9;
/// Tolerance for amplitude checks on permutation-only circuits.
pub const PERMUTATION_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SimError {
    #[error("width {width} exceeds limit {limit}")]
    WidthLimitExceeded { width: usize, limit: usize },
    #[error("matrix has no entry of magnitude above {0}")]
    ZeroMatrix(f64),
    #[error("circuit contains a non-permutation gate")]
    NotAPermutation,
    #[error("basis index {index} out of range for width {width}")]
    BadBasisIndex { index: usize, width: usize },
    #[error("line {line} out of range for width {width}")]
    LineOutOfRange { line: usize, width: usize },
    #[error("controls and target must be pairwise distinct")]
    DuplicateMainLine,
    #[error(transparent)]
    Circuit(#[from] CircuitError),
}

/// Bit mask of `line` in a `width`-line basis index (line 0 = MSB).
pub fn line_mask(width: usize, line: usize) -> usize {
    debug_assert!(line < width);
    1 << (width - 1 - line)
}

/// The principal 2^k-th root of the X matrix.
///
/// Eigenvalue 1 on |+> and exp(i*pi/2^k) on |->, which gives
/// [[1+w, 1-w], [1-w, 1+w]] / 2 with w = exp(i*pi/2^k). For k = 1 this is
/// exactly V = (1+i)/2 [[1, -i], [-i, 1]].
pub fn root_x_matrix(k: u32) -> [[Complex64; 2]; 2] {
    let theta = std::f64::consts::PI / 2f64.powi(k as i32);
    let omega =
        if k == 1 { Complex64::new(0.0, 1.0) } else { Complex64::new(theta.cos(), theta.sin()) };
    let one = Complex64::new(1.0, 0.0);
    let p = (one + omega) * 0.5;
    let q = (one - omega) * 0.5;
    [[p, q], [q, p]]
}

fn dagger2(m: [[Complex64; 2]; 2]) -> [[Complex64; 2]; 2] {
    [[m[0][0].conj(), m[1][0].conj()], [m[0][1].conj(), m[1][1].conj()]]
}

/// How a gate acts on one (target-bit 0, target-bit 1) index pair.
#[derive(Clone, Copy)]
enum PairOp {
    Swap,
    Mix([[Complex64; 2]; 2]),
}

/// A gate as a short sequence of controlled pair operations.
///
/// Macro gates are realized by their defining semantics, not by their
/// elementary expansions, so expansions can be checked against macros.
fn gate_ops(gate: &Gate, width: usize) -> Vec<(usize, usize, PairOp)> {
    let m = |line: usize| line_mask(width, line);
    match gate {
        Gate::X { target } => vec![(0, m(*target), PairOp::Swap)],
        Gate::Cx { control, target } => vec![(m(*control), m(*target), PairOp::Swap)],
        Gate::Ccx { control1, control2, target } => {
            vec![(m(*control1) | m(*control2), m(*target), PairOp::Swap)]
        }
        Gate::Mct { controls, target } => {
            let cm = controls.iter().fold(0, |acc, &c| acc | m(c));
            vec![(cm, m(*target), PairOp::Swap)]
        }
        // Toffoli then CNOT.
        Gate::Peres { x1, x2, x3 } => {
            vec![(m(*x1) | m(*x2), m(*x3), PairOp::Swap), (m(*x1), m(*x2), PairOp::Swap)]
        }
        // CNOT then Toffoli.
        Gate::Iperes { x1, x2, x3 } => {
            vec![(m(*x1), m(*x2), PairOp::Swap), (m(*x1) | m(*x2), m(*x3), PairOp::Swap)]
        }
        Gate::Cv { control, target } => {
            vec![(m(*control), m(*target), PairOp::Mix(root_x_matrix(1)))]
        }
        Gate::Cvd { control, target } => {
            vec![(m(*control), m(*target), PairOp::Mix(dagger2(root_x_matrix(1))))]
        }
        Gate::Crx { control, target, k } => {
            vec![(m(*control), m(*target), PairOp::Mix(root_x_matrix(*k)))]
        }
        Gate::Crxd { control, target, k } => {
            vec![(m(*control), m(*target), PairOp::Mix(dagger2(root_x_matrix(*k))))]
        }
    }
}

fn apply_gate_to_state(gate: &Gate, width: usize, state: &mut [Complex64]) {
    let dim = 1usize << width;
    for (cm, tm, op) in gate_ops(gate, width) {
        for i in 0..dim {
            if i & cm == cm && i & tm == 0 {
                let j = i | tm;
                match op {
                    PairOp::Swap => state.swap(i, j),
                    PairOp::Mix(mat) => {
                        let a = state[i];
                        let b = state[j];
                        state[i] = mat[0][0] * a + mat[0][1] * b;
                        state[j] = mat[1][0] * a + mat[1][1] * b;
                    }
                }
            }
        }
    }
}

/// Left-multiplies the matrix by the gate operator (rows mix, columns stay).
fn apply_gate_to_matrix(gate: &Gate, width: usize, data: &mut [Complex64]) {
    let dim = 1usize << width;
    for (cm, tm, op) in gate_ops(gate, width) {
        for r in 0..dim {
            if r & cm == cm && r & tm == 0 {
                let r2 = r | tm;
                for c in 0..dim {
                    let i = r * dim + c;
                    let j = r2 * dim + c;
                    match op {
                        PairOp::Swap => data.swap(i, j),
                        PairOp::Mix(mat) => {
                            let a = data[i];
                            let b = data[j];
                            data[i] = mat[0][0] * a + mat[0][1] * b;
                            data[j] = mat[1][0] * a + mat[1][1] * b;
                        }
                    }
                }
            }
        }
    }
}

/// A dense 2^width x 2^width operator, row-major, line 0 = MSB.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseUnitary {
    width: usize,
    data: Vec<Complex64>,
}

impl DenseUnitary {
    pub fn identity(width: usize) -> Self {
        let dim = 1usize << width;
        let mut data = vec![Complex64::new(0.0, 0.0); dim * dim];
        for i in 0..dim {
            data[i * dim + i] = Complex64::new(1.0, 0.0);
        }
        DenseUnitary { width, data }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn dim(&self) -> usize {
        1 << self.width
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.dim() + col]
    }

    /// Largest elementwise magnitude of the difference.
    pub fn max_abs_diff(&self, other: &DenseUnitary) -> f64 {
        assert_eq!(self.width, other.width);
        self.data.iter().zip(other.data.iter()).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    /// Checks U * U^dagger = I elementwise within `tol`. O(dim^3): meant for
    /// small widths.
    pub fn is_unitary(&self, tol: f64) -> bool {
        let dim = self.dim();
        for r in 0..dim {
            for c in 0..dim {
                let mut sum = Complex64::new(0.0, 0.0);
                for k in 0..dim {
                    sum += self.get(r, k) * self.get(c, k).conj();
                }
                let expect = if r == c { 1.0 } else { 0.0 };
                if (sum - expect).norm() > tol {
                    return false;
                }
            }
        }
        true
    }

    /// Matrix product self * other. O(dim^3): meant for small widths.
    pub fn mul(&self, other: &DenseUnitary) -> DenseUnitary {
        assert_eq!(self.width, other.width);
        let dim = self.dim();
        let mut data = vec![Complex64::new(0.0, 0.0); dim * dim];
        for r in 0..dim {
            for k in 0..dim {
                let a = self.get(r, k);
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for c in 0..dim {
                    data[r * dim + c] += a * other.get(k, c);
                }
            }
        }
        DenseUnitary { width: self.width, data }
    }

    /// Scales every entry by `factor`.
    pub fn scaled(&self, factor: Complex64) -> DenseUnitary {
        DenseUnitary { width: self.width, data: self.data.iter().map(|e| e * factor).collect() }
    }
}

/// Dense unitary of the whole circuit, gates applied in sequence order.
pub fn unitary(circuit: &Circuit) -> Result<DenseUnitary, SimError> {
    unitary_with_limit(circuit, UNITARY_WIDTH_LIMIT)
}

pub fn unitary_with_limit(circuit: &Circuit, limit: usize) -> Result<DenseUnitary, SimError> {
    if circuit.width > limit {
        return Err(SimError::WidthLimitExceeded { width: circuit.width, limit });
    }
    circuit.validate()?;
    let mut u = DenseUnitary::identity(circuit.width);
    for gate in &circuit.gates {
        apply_gate_to_matrix(gate, circuit.width, &mut u.data);
    }
    Ok(u)
}

/// The reference operator: flips `target` iff every line in `controls` is 1,
/// identity on all other lines.
pub fn mct_unitary(width: usize, controls: &[usize], target: usize) -> DenseUnitary {
    let mut u = DenseUnitary::identity(width);
    let gate = Gate::Mct { controls: controls.to_vec(), target };
    apply_gate_to_matrix(&gate, width, &mut u.data);
    u
}

/// Result of propagating one computational basis state through a circuit.
#[derive(Debug, Clone)]
pub struct BasisOutcome {
    /// Index of the dominant output amplitude; `None` when the output is not
    /// a basis state within 1e-9.
    pub basis_index: Option<usize>,
    /// Amplitude on the dominant index (phase included).
    pub amplitude: Complex64,
    /// How far the output is from a perfect basis state: the larger of the
    /// leaked weight outside the dominant index and |1 - |amplitude||.
    pub deviation: f64,
}

/// Applies the circuit to one basis state by state-vector propagation.
pub fn apply_basis(circuit: &Circuit, input: usize) -> Result<BasisOutcome, SimError> {
    if circuit.width > BASIS_WIDTH_LIMIT {
        return Err(SimError::WidthLimitExceeded {
            width: circuit.width,
            limit: BASIS_WIDTH_LIMIT,
        });
    }
    circuit.validate()?;
    let dim = 1usize << circuit.width;
    if input >= dim {
        return Err(SimError::BadBasisIndex { index: input, width: circuit.width });
    }
    let mut state = vec![Complex64::new(0.0, 0.0); dim];
    state[input] = Complex64::new(1.0, 0.0);
    for gate in &circuit.gates {
        apply_gate_to_state(gate, circuit.width, &mut state);
    }
    let (best, amp) = state
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.norm_sqr().total_cmp(&b.1.norm_sqr()))
        .map(|(i, a)| (i, *a))
        .expect("non-empty state");
    let leaked: f64 = state
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != best)
        .map(|(_, a)| a.norm_sqr())
        .sum::<f64>()
        .sqrt();
    let deviation = leaked.max((1.0 - amp.norm()).abs());
    let basis_index = if deviation <= 1e-9 { Some(best) } else { None };
    Ok(BasisOutcome { basis_index, amplitude: amp, deviation })
}

/// True when every gate maps basis states to basis states.
pub fn is_permutation_circuit(circuit: &Circuit) -> bool {
    circuit.gates.iter().all(Gate::is_permutation)
}

/// Exact bit-level simulation of a permutation-only circuit: no floating
/// point anywhere, so no tolerances apply.
pub fn permute_basis(circuit: &Circuit, input: usize) -> Result<usize, SimError> {
    circuit.validate()?;
    let dim = 1usize.checked_shl(circuit.width as u32).ok_or(SimError::WidthLimitExceeded {
        width: circuit.width,
        limit: usize::BITS as usize - 1,
    })?;
    if input >= dim {
        return Err(SimError::BadBasisIndex { index: input, width: circuit.width });
    }
    let mut b = input;
    for gate in &circuit.gates {
        if !gate.is_permutation() {
            return Err(SimError::NotAPermutation);
        }
        for (cm, tm, _) in gate_ops(gate, circuit.width) {
            if b & cm == cm {
                b ^= tm;
            }
        }
    }
    Ok(b)
}

/// Rescales `u` by a unit scalar so that its first row-major entry of
/// magnitude above 1e-6 becomes real positive.
pub fn global_phase_normalize(u: &DenseUnitary) -> Result<DenseUnitary, SimError> {
    const PIVOT_MIN: f64 = 1e-6;
    let pivot =
        u.data.iter().find(|e| e.norm() > PIVOT_MIN).ok_or(SimError::ZeroMatrix(PIVOT_MIN))?;
    let factor = pivot.conj() / pivot.norm();
    Ok(u.scaled(factor))
}

/// Verdict of an equivalence check against the MCT specification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// Full-space unitary equality, up to global phase, within 1e-9.
    ExactUnitary,
    /// Every basis input yields a basis output that realizes MCT on the
    /// main lines; any changed line lies in the declared extra set.
    MainlineOkWithGarbage,
    Fail,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::ExactUnitary => write!(f, "exact_unitary"),
            Verdict::MainlineOkWithGarbage => write!(f, "mainline_ok_with_garbage"),
            Verdict::Fail => write!(f, "fail"),
        }
    }
}

/// Outcome of [`check_mct`], including the measured garbage accounting.
#[derive(Debug, Clone)]
pub struct EquivalenceReport {
    pub verdict: Verdict,
    pub max_deviation: f64,
    /// Every line (target excluded) whose output differs from its input on
    /// some basis input. Empty for exact equivalence; a circuit may declare
    /// more extra lines than it actually disturbs.
    pub non_restored_lines: Vec<usize>,
    pub basis_preserving: bool,
}

impl std::fmt::Display for EquivalenceReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let lines: Vec<String> = self.non_restored_lines.iter().map(|l| l.to_string()).collect();
        write!(
            f,
            "verdict={} max_deviation={:.3e} non_restored_lines=[{}] basis_preserving={}",
            self.verdict,
            self.max_deviation,
            lines.join(","),
            self.basis_preserving
        )
    }
}

/// Checks a circuit against the MCT specification on `controls` and `target`,
/// with `extra` the lines allowed to end in garbage states.
///
/// Widths up to 11 are first compared as dense unitaries after global-phase
/// normalization (exact verdict). Otherwise, and as the fallback when the
/// unitary differs, every basis input is enumerated: controls must be
/// preserved, the target must flip exactly when all controls are 1, and any
/// other changed line must belong to `extra`.
pub fn check_mct(
    circuit: &Circuit,
    controls: &[usize],
    target: usize,
    extra: &[usize],
) -> Result<EquivalenceReport, SimError> {
    if circuit.width > BASIS_WIDTH_LIMIT {
        return Err(SimError::WidthLimitExceeded {
            width: circuit.width,
            limit: BASIS_WIDTH_LIMIT,
        });
    }
    circuit.validate()?;
    for &line in controls.iter().chain(std::iter::once(&target)).chain(extra.iter()) {
        if line >= circuit.width {
            return Err(SimError::LineOutOfRange { line, width: circuit.width });
        }
    }
    let mut main: Vec<usize> = controls.to_vec();
    main.push(target);
    main.sort_unstable();
    if main.windows(2).any(|w| w[0] == w[1]) {
        return Err(SimError::DuplicateMainLine);
    }

    if circuit.width <= UNITARY_WIDTH_LIMIT {
        let u = global_phase_normalize(&unitary(circuit)?)?;
        let reference = global_phase_normalize(&mct_unitary(circuit.width, controls, target))?;
        let dev = u.max_abs_diff(&reference);
        if dev <= UNITARY_TOL {
            return Ok(EquivalenceReport {
                verdict: Verdict::ExactUnitary,
                max_deviation: dev,
                non_restored_lines: vec![],
                basis_preserving: true,
            });
        }
    }

    basis_scan(circuit, controls, target, extra)
}

fn basis_scan(
    circuit: &Circuit,
    controls: &[usize],
    target: usize,
    extra: &[usize],
) -> Result<EquivalenceReport, SimError> {
    let width = circuit.width;
    let dim = 1usize << width;
    let cmask = controls.iter().fold(0, |acc, &c| acc | line_mask(width, c));
    let tmask = line_mask(width, target);
    let exact = is_permutation_circuit(circuit);

    let mut non_restored = vec![false; width];
    let mut basis_preserving = true;
    let mut semantics_ok = true;
    let mut max_dev: f64 = 0.0;

    for input in 0..dim {
        let out = if exact {
            permute_basis(circuit, input)?
        } else {
            let outcome = apply_basis(circuit, input)?;
            max_dev = max_dev.max(outcome.deviation);
            match outcome.basis_index {
                Some(i) => i,
                None => {
                    basis_preserving = false;
                    continue;
                }
            }
        };
        let expected_target = ((input & tmask) != 0) ^ ((input & cmask) == cmask);
        if ((out & tmask) != 0) != expected_target {
            semantics_ok = false;
        }
        let changed = input ^ out;
        for (line, flag) in non_restored.iter_mut().enumerate() {
            if line == target {
                continue;
            }
            if changed & line_mask(width, line) != 0 {
                *flag = true;
                if !extra.contains(&line) {
                    semantics_ok = false;
                }
            }
        }
    }

    let non_restored_lines: Vec<usize> = (0..width).filter(|&l| non_restored[l]).collect();
    let verdict = if basis_preserving && semantics_ok {
        Verdict::MainlineOkWithGarbage
    } else {
        Verdict::Fail
    };
    Ok(EquivalenceReport { verdict, max_deviation: max_dev, non_restored_lines, basis_preserving })
}
