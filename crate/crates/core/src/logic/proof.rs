//! Hilbert-style proof sequences and their verification.
//!
//! A proof is a list of lines, each justified either as an instance of a
//! cited axiom schema or by modus ponens from two earlier lines. The checker
//! never searches: the prover must cite the schema or premise lines.

use super::axioms::match_schema;
use super::formula::Formula;
use super::parser::parse_formula;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum System {
    Cl,
    Il,
}

impl fmt::Display for System {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            System::Cl => write!(f, "CL"),
            System::Il => write!(f, "IL"),
        }
    }
}

/// Why a line is claimed to hold. `Mp` indices are 0-based positions into the
/// line list and must refer to strictly earlier lines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Justification {
    Axiom(u8),
    Mp(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofLine {
    pub formula: Formula,
    pub justification: Justification,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Proof {
    pub system: System,
    pub lines: Vec<ProofLine>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RejectReason {
    SchemaMismatch,
    ForbiddenAxiom12InIl,
    BadMp,
    ForwardReference,
}

impl RejectReason {
    /// Stable machine-readable name.
    pub fn name(self) -> &'static str {
        match self {
            RejectReason::SchemaMismatch => "SchemaMismatch",
            RejectReason::ForbiddenAxiom12InIl => "ForbiddenAxiom12InIL",
            RejectReason::BadMp => "BadMP",
            RejectReason::ForwardReference => "ForwardReference",
        }
    }
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            RejectReason::SchemaMismatch => "formula does not match the cited axiom schema",
            RejectReason::ForbiddenAxiom12InIl => "axiom 12 is not available in IL",
            RejectReason::BadMp => "modus ponens premises do not fit",
            RejectReason::ForwardReference => {
                "modus ponens cites a line that is not strictly earlier"
            }
        };
        write!(f, "{text}")
    }
}

/// Verdict of [`check_proof`]; `line` is 1-based to match the file format.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProofVerdict {
    Accepted,
    Rejected { line: usize, reason: RejectReason },
}

/// Verifies every line of the proof; the first failure is reported.
pub fn check_proof(p: &Proof) -> ProofVerdict {
    for (i, line) in p.lines.iter().enumerate() {
        let reason = match line.justification {
            Justification::Axiom(schema) => {
                if !(1..=12).contains(&schema) {
                    Some(RejectReason::SchemaMismatch)
                } else if p.system == System::Il && schema == 12 {
                    Some(RejectReason::ForbiddenAxiom12InIl)
                } else if match_schema(&line.formula, schema).is_none() {
                    Some(RejectReason::SchemaMismatch)
                } else {
                    None
                }
            }
            Justification::Mp(a, b) => {
                if a >= i || b >= i {
                    Some(RejectReason::ForwardReference)
                } else {
                    let expected = Formula::imp(p.lines[a].formula.clone(), line.formula.clone());
                    if p.lines[b].formula == expected {
                        None
                    } else {
                        Some(RejectReason::BadMp)
                    }
                }
            }
        };
        if let Some(reason) = reason {
            return ProofVerdict::Rejected {
                line: i + 1,
                reason,
            };
        }
    }
    ProofVerdict::Accepted
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("proof file line {line}: {message}")]
pub struct ProofParseError {
    pub line: usize,
    pub message: String,
}

fn parse_err<T>(line: usize, message: impl Into<String>) -> Result<T, ProofParseError> {
    Err(ProofParseError {
        line,
        message: message.into(),
    })
}

/// Parses the proof file format:
///
/// ```text
/// # comment
/// system: IL
/// 1. p0 -> (p0 & p0)  ; AX 1
/// 2. ...              ; MP 1 2
/// ```
///
/// Steps must be numbered sequentially from 1; `MP i j` cites 1-based line
/// numbers; blank lines and lines starting with `#` are skipped.
pub fn parse_proof(text: &str) -> Result<Proof, ProofParseError> {
    let mut system = None;
    let mut lines = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if system.is_none() {
            let rest = match trimmed.strip_prefix("system:") {
                Some(rest) => rest.trim(),
                None => return parse_err(lineno, "expected header `system: CL` or `system: IL`"),
            };
            system = Some(match rest {
                "CL" => System::Cl,
                "IL" => System::Il,
                other => return parse_err(lineno, format!("unknown system `{other}`")),
            });
            continue;
        }
        let (num_text, rest) = match trimmed.split_once('.') {
            Some(split) => split,
            None => return parse_err(lineno, "expected `<n>. <formula> ; <justification>`"),
        };
        let num: usize = match num_text.trim().parse() {
            Ok(n) => n,
            Err(_) => return parse_err(lineno, format!("bad step number `{}`", num_text.trim())),
        };
        if num != lines.len() + 1 {
            return parse_err(
                lineno,
                format!(
                    "steps must be numbered sequentially; expected {}",
                    lines.len() + 1
                ),
            );
        }
        let (formula_text, just_text) = match rest.split_once(';') {
            Some(split) => split,
            None => return parse_err(lineno, "missing `;` before the justification"),
        };
        let formula = parse_formula(formula_text.trim()).map_err(|e| ProofParseError {
            line: lineno,
            message: e.to_string(),
        })?;
        let words: Vec<&str> = just_text.split_whitespace().collect();
        let justification = match words.as_slice() {
            ["AX", k] => match k.parse::<u8>() {
                Ok(k @ 1..=12) => Justification::Axiom(k),
                _ => return parse_err(lineno, format!("axiom number must be 1..=12, got `{k}`")),
            },
            ["MP", i, j] => {
                let parse_ref = |s: &str| -> Result<usize, ProofParseError> {
                    match s.parse::<usize>() {
                        Ok(n @ 1..) => Ok(n - 1),
                        _ => parse_err(lineno, format!("line references are 1-based, got `{s}`")),
                    }
                };
                Justification::Mp(parse_ref(i)?, parse_ref(j)?)
            }
            _ => return parse_err(lineno, "justification must be `AX <k>` or `MP <i> <j>`"),
        };
        lines.push(ProofLine {
            formula,
            justification,
        });
    }
    match system {
        Some(system) => Ok(Proof { system, lines }),
        None => parse_err(text.lines().count() + 1, "missing `system:` header"),
    }
}
