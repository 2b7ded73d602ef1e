//! Circuits: ordered gate sequences over a fixed number of lines.

use crate::gate::Gate;

/// Role of a circuit line, as declared in a circuit file header.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    Control,
    Target,
    Ancilla,
}

impl std::fmt::Display for Role {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Role::Control => write!(f, "c"),
            Role::Target => write!(f, "t"),
            Role::Ancilla => write!(f, "a"),
        }
    }
}

/// Why a circuit fails validation.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CircuitError {
    #[error("gate {gate}: line {line} out of range for width {width}")]
    IndexOutOfRange { gate: usize, line: usize, width: usize },
    #[error("gate {gate}: line {line} used more than once")]
    DuplicateLine { gate: usize, line: usize },
    #[error("gate {gate}: controlled-root exponent k must be at least 1")]
    BadExponent { gate: usize },
    #[error("bad roles: {0}")]
    BadRoles(String),
}

/// An ordered gate sequence over `width` lines. Gates apply left to right.
///
/// Values are immutable by convention after construction; all operations on
/// circuits are pure functions returning new values.
#[derive(Debug, Clone, PartialEq)]
pub struct Circuit {
    pub width: usize,
    pub gates: Vec<Gate>,
    pub roles: Option<Vec<Role>>,
}

impl Circuit {
    pub fn new(width: usize) -> Self {
        Circuit { width, gates: Vec::new(), roles: None }
    }

    pub fn with_gates(width: usize, gates: Vec<Gate>) -> Self {
        Circuit { width, gates, roles: None }
    }

    pub fn push(&mut self, gate: Gate) {
        self.gates.push(gate);
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    /// Checks every well-formedness invariant: all gate lines in range and
    /// pairwise distinct, root exponents at least 1, and — when roles are
    /// present — one role per line with exactly one target.
    pub fn validate(&self) -> Result<(), CircuitError> {
        for (i, gate) in self.gates.iter().enumerate() {
            let lines = gate.support();
            for &line in &lines {
                if line >= self.width {
                    return Err(CircuitError::IndexOutOfRange { gate: i, line, width: self.width });
                }
            }
            let mut seen = lines.clone();
            seen.sort_unstable();
            for pair in seen.windows(2) {
                if pair[0] == pair[1] {
                    return Err(CircuitError::DuplicateLine { gate: i, line: pair[0] });
                }
            }
            match gate {
                Gate::Crx { k, .. } | Gate::Crxd { k, .. } if *k < 1 => {
                    return Err(CircuitError::BadExponent { gate: i });
                }
                _ => {}
            }
        }
        if let Some(roles) = &self.roles {
            if roles.len() != self.width {
                return Err(CircuitError::BadRoles(format!(
                    "{} roles declared for width {}",
                    roles.len(),
                    self.width
                )));
            }
            let targets = roles.iter().filter(|r| **r == Role::Target).count();
            if targets != 1 {
                return Err(CircuitError::BadRoles(format!(
                    "expected exactly one target role, found {targets}"
                )));
            }
        }
        Ok(())
    }

    /// The inverse circuit: gate order reversed, each gate inverted.
    ///
    /// Composing `self` then `self.inverse()` is the identity map.
    pub fn inverse(&self) -> Circuit {
        Circuit {
            width: self.width,
            gates: self.gates.iter().rev().map(Gate::inverse).collect(),
            roles: self.roles.clone(),
        }
    }

    /// Concatenation of two circuits over the same width.
    pub fn then(&self, other: &Circuit) -> Circuit {
        debug_assert_eq!(self.width, other.width);
        let mut gates = self.gates.clone();
        gates.extend(other.gates.iter().cloned());
        Circuit { width: self.width, gates, roles: self.roles.clone() }
    }
}
