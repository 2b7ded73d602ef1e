//! The gate set: elementary gates, controlled roots of X, and macro gates.

use std::fmt;

/// One gate instance over zero-based circuit lines.
///
/// Elementary gates are `X`, `Cx`, `Cv`, `Cvd`, `Crx`, `Crxd`; everything
/// else is a macro kept at its natural granularity until explicitly expanded.
///
/// Semantics:
/// - `Cv` applies V = (1+i)/2 · [[1, -i], [-i, 1]] to the target when the
///   control is 1. V is the principal square root of X (V² = X); `Cvd`
///   applies its inverse.
/// - `Crx { k }` applies the principal 2^k-th root of X, so `Crx { k: 1 }`
///   is the same unitary as `Cv` and 2^k successive applications equal `Cx`.
/// - `Peres` acts as `Ccx(x1, x2, x3)` followed by `Cx(x1, x2)`; `Iperes`
///   is its gate-wise inverse (`Cx` first, then `Ccx`). The pair (x1, x2)
///   is ordered: x1 controls the CNOT, x2 is its target.
/// - `Mct` flips the target iff every control is 1. Zero controls is `X`,
///   one control is `Cx`; the kind is kept as stated, never re-normalized.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Gate {
    X { target: usize },
    Cx { control: usize, target: usize },
    Ccx { control1: usize, control2: usize, target: usize },
    Cv { control: usize, target: usize },
    Cvd { control: usize, target: usize },
    Crx { control: usize, target: usize, k: u32 },
    Crxd { control: usize, target: usize, k: u32 },
    Peres { x1: usize, x2: usize, x3: usize },
    Iperes { x1: usize, x2: usize, x3: usize },
    Mct { controls: Vec<usize>, target: usize },
}

impl Gate {
    /// The set of lines the gate touches, in gate order (controls, then target).
    pub fn support(&self) -> Vec<usize> {
        match self {
            Gate::X { target } => vec![*target],
            Gate::Cx { control, target }
            | Gate::Cv { control, target }
            | Gate::Cvd { control, target }
            | Gate::Crx { control, target, .. }
            | Gate::Crxd { control, target, .. } => vec![*control, *target],
            Gate::Ccx { control1, control2, target } => vec![*control1, *control2, *target],
            Gate::Peres { x1, x2, x3 } | Gate::Iperes { x1, x2, x3 } => vec![*x1, *x2, *x3],
            Gate::Mct { controls, target } => {
                let mut lines = controls.clone();
                lines.push(*target);
                lines
            }
        }
    }

    /// Lines that the gate reads but never writes.
    ///
    /// For `Peres`/`Iperes` that is only x1: x2 is written by the embedded
    /// CNOT and x3 by the embedded Toffoli.
    pub fn control_lines(&self) -> Vec<usize> {
        match self {
            Gate::X { .. } => vec![],
            Gate::Cx { control, .. }
            | Gate::Cv { control, .. }
            | Gate::Cvd { control, .. }
            | Gate::Crx { control, .. }
            | Gate::Crxd { control, .. } => vec![*control],
            Gate::Ccx { control1, control2, .. } => vec![*control1, *control2],
            Gate::Peres { x1, .. } | Gate::Iperes { x1, .. } => vec![*x1],
            Gate::Mct { controls, .. } => controls.clone(),
        }
    }

    /// The gate-wise inverse.
    pub fn inverse(&self) -> Gate {
        match self {
            Gate::Cv { control, target } => Gate::Cvd { control: *control, target: *target },
            Gate::Cvd { control, target } => Gate::Cv { control: *control, target: *target },
            Gate::Crx { control, target, k } => {
                Gate::Crxd { control: *control, target: *target, k: *k }
            }
            Gate::Crxd { control, target, k } => {
                Gate::Crx { control: *control, target: *target, k: *k }
            }
            Gate::Peres { x1, x2, x3 } => Gate::Iperes { x1: *x1, x2: *x2, x3: *x3 },
            Gate::Iperes { x1, x2, x3 } => Gate::Peres { x1: *x1, x2: *x2, x3: *x3 },
            g => g.clone(),
        }
    }

    /// True for the gates that are their own inverse (X, CX, CCX, MCT).
    pub fn is_self_inverse(&self) -> bool {
        matches!(self, Gate::X { .. } | Gate::Cx { .. } | Gate::Ccx { .. } | Gate::Mct { .. })
    }

    /// True when the gate maps computational basis states to basis states.
    pub fn is_permutation(&self) -> bool {
        !self.is_v_type()
    }

    /// True for the controlled-root-of-X family (CV, CV+, CRX, CRX+).
    pub fn is_v_type(&self) -> bool {
        matches!(self, Gate::Cv { .. } | Gate::Cvd { .. } | Gate::Crx { .. } | Gate::Crxd { .. })
    }
}

impl fmt::Display for Gate {
    /// The text-format mnemonic line for this gate (see the `text` module).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gate::X { target } => write!(f, "x {target}"),
            Gate::Cx { control, target } => write!(f, "cx {control} {target}"),
            Gate::Ccx { control1, control2, target } => {
                write!(f, "ccx {control1} {control2} {target}")
            }
            Gate::Cv { control, target } => write!(f, "cv {control} {target}"),
            Gate::Cvd { control, target } => write!(f, "cv+ {control} {target}"),
            Gate::Crx { control, target, k } => write!(f, "crx {control} {target} k={k}"),
            Gate::Crxd { control, target, k } => write!(f, "crx+ {control} {target} k={k}"),
            Gate::Peres { x1, x2, x3 } => write!(f, "peres {x1} {x2} {x3}"),
            Gate::Iperes { x1, x2, x3 } => write!(f, "peres+ {x1} {x2} {x3}"),
            Gate::Mct { controls, target } => {
                write!(f, "mct")?;
                for c in controls {
                    write!(f, " {c}")?;
                }
                write!(f, " : {target}")
            }
        }
    }
}
