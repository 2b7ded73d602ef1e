//! The native circuit file format.
//!
//! ```text
//! .lines 5            # line count, required first
//! .roles c c c t a    # optional, one of c/t/a per line
//! ccx 0 1 4           # one gate per line, 0-based indices
//! crx 0 4 k=2         # controlled 2^k-th root of X
//! mct 0 1 2 : 3       # controls, then ':', then the target
//! .end                # required terminator
//! ```
//!
//! Mnemonics: `x`, `cx`, `ccx`, `cv`, `cv+`, `crx`, `crx+`, `peres`,
//! `peres+`, `mct`. `#` starts a comment, newline is LF. Unknown mnemonics
//! are a parse error, never skipped.

use crate::circuit::{Circuit, CircuitError, Role};
use crate::gate::Gate;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("invalid circuit: {0}")]
    Validation(#[from] CircuitError),
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, message: message.into() }
}

fn parse_index(token: &str, line: usize) -> Result<usize, ParseError> {
    token
        .parse::<usize>()
        .map_err(|_| syntax(line, format!("expected a line index, found `{token}`")))
}

fn parse_gate(tokens: &[&str], line: usize) -> Result<Gate, ParseError> {
    let arity = |n: usize| -> Result<Vec<usize>, ParseError> {
        if tokens.len() != n + 1 {
            return Err(syntax(
                line,
                format!("`{}` takes {} line indices, found {}", tokens[0], n, tokens.len() - 1),
            ));
        }
        tokens[1..].iter().map(|t| parse_index(t, line)).collect()
    };
    match tokens[0] {
        "x" => {
            let idx = arity(1)?;
            Ok(Gate::X { target: idx[0] })
        }
        "cx" => {
            let idx = arity(2)?;
            Ok(Gate::Cx { control: idx[0], target: idx[1] })
        }
        "ccx" => {
            let idx = arity(3)?;
            Ok(Gate::Ccx { control1: idx[0], control2: idx[1], target: idx[2] })
        }
        "cv" => {
            let idx = arity(2)?;
            Ok(Gate::Cv { control: idx[0], target: idx[1] })
        }
        "cv+" => {
            let idx = arity(2)?;
            Ok(Gate::Cvd { control: idx[0], target: idx[1] })
        }
        "crx" | "crx+" => {
            if tokens.len() != 4 {
                return Err(syntax(line, format!("`{}` takes two indices and k=<int>", tokens[0])));
            }
            let control = parse_index(tokens[1], line)?;
            let target = parse_index(tokens[2], line)?;
            let k = tokens[3]
                .strip_prefix("k=")
                .and_then(|v| v.parse::<u32>().ok())
                .ok_or_else(|| syntax(line, format!("expected k=<int>, found `{}`", tokens[3])))?;
            Ok(if tokens[0] == "crx" {
                Gate::Crx { control, target, k }
            } else {
                Gate::Crxd { control, target, k }
            })
        }
        "peres" => {
            let idx = arity(3)?;
            Ok(Gate::Peres { x1: idx[0], x2: idx[1], x3: idx[2] })
        }
        "peres+" => {
            let idx = arity(3)?;
            Ok(Gate::Iperes { x1: idx[0], x2: idx[1], x3: idx[2] })
        }
        "mct" => {
            let sep = tokens
                .iter()
                .position(|t| *t == ":")
                .ok_or_else(|| syntax(line, "`mct` needs `:` before the target"))?;
            if sep + 2 != tokens.len() {
                return Err(syntax(line, "`mct` takes exactly one target after `:`"));
            }
            let controls: Vec<usize> =
                tokens[1..sep].iter().map(|t| parse_index(t, line)).collect::<Result<_, _>>()?;
            let target = parse_index(tokens[sep + 1], line)?;
            Ok(Gate::Mct { controls, target })
        }
        other => Err(syntax(line, format!("unknown mnemonic `{other}`"))),
    }
}

/// Parses the text format and validates the resulting circuit.
pub fn parse(input: &str) -> Result<Circuit, ParseError> {
    let mut width: Option<usize> = None;
    let mut roles: Option<Vec<Role>> = None;
    let mut gates: Vec<Gate> = Vec::new();
    let mut ended_at: Option<usize> = None;

    for (i, raw) in input.lines().enumerate() {
        let line_no = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if ended_at.is_some() {
            return Err(syntax(line_no, "content after `.end`"));
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match (width.is_none(), tokens[0]) {
            (true, ".lines") => {
                if tokens.len() != 2 {
                    return Err(syntax(line_no, "`.lines` takes one count"));
                }
                width = Some(parse_index(tokens[1], line_no)?);
            }
            (true, other) => {
                return Err(syntax(line_no, format!("expected `.lines`, found `{other}`")));
            }
            (false, ".roles") => {
                if !gates.is_empty() || roles.is_some() {
                    return Err(syntax(line_no, "`.roles` must directly follow `.lines`"));
                }
                let parsed: Result<Vec<Role>, ParseError> = tokens[1..]
                    .iter()
                    .map(|t| match *t {
                        "c" => Ok(Role::Control),
                        "t" => Ok(Role::Target),
                        "a" => Ok(Role::Ancilla),
                        other => Err(syntax(line_no, format!("unknown role `{other}`"))),
                    })
                    .collect();
                roles = Some(parsed?);
            }
            (false, ".end") => {
                ended_at = Some(line_no);
            }
            (false, _) => gates.push(parse_gate(&tokens, line_no)?),
        }
    }

    let width =
        width.ok_or_else(|| syntax(input.lines().count() + 1, "missing `.lines` header"))?;
    if ended_at.is_none() {
        return Err(syntax(input.lines().count() + 1, "missing `.end` terminator"));
    }
    let circuit = Circuit { width, gates, roles };
    circuit.validate()?;
    Ok(circuit)
}

/// Serializes a circuit in the canonical form: LF newlines, single spaces,
/// no comments. `parse(serialize(c)) == c` for every valid circuit.
pub fn serialize(circuit: &Circuit) -> String {
    let mut out = format!(".lines {}\n", circuit.width);
    if let Some(roles) = &circuit.roles {
        out.push_str(".roles");
        for role in roles {
            out.push(' ');
            out.push_str(&role.to_string());
        }
        out.push('\n');
    }
    for gate in &circuit.gates {
        out.push_str(&gate.to_string());
        out.push('\n');
    }
    out.push_str(".end\n");
    out
}
