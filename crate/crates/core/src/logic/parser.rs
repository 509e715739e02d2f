//! Recursive-descent parser for the ASCII formula syntax.
//!
//! ```text
//! formula := imp
//! imp     := or ("->" imp)?
//! or      := and ("|" and)*
//! and     := unary ("&" unary)*
//! unary   := "~" unary | atom
//! atom    := VAR | "(" formula ")"
//! VAR     := "p" [0-9]+
//! ```

use super::formula::Formula;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at byte {offset}: {message}")]
pub struct SyntaxError {
    pub offset: usize,
    pub message: String,
}

fn err<T>(offset: usize, message: impl Into<String>) -> Result<T, SyntaxError> {
    Err(SyntaxError {
        offset,
        message: message.into(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok {
    Tilde,
    Amp,
    Pipe,
    Arrow,
    LParen,
    RParen,
    Var(u32),
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, SyntaxError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'~' => {
                toks.push((i, Tok::Tilde));
                i += 1;
            }
            b'&' => {
                toks.push((i, Tok::Amp));
                i += 1;
            }
            b'|' => {
                toks.push((i, Tok::Pipe));
                i += 1;
            }
            b'(' => {
                toks.push((i, Tok::LParen));
                i += 1;
            }
            b')' => {
                toks.push((i, Tok::RParen));
                i += 1;
            }
            b'-' => {
                if bytes.get(i + 1) == Some(&b'>') {
                    toks.push((i, Tok::Arrow));
                    i += 2;
                } else {
                    return err(i, "expected `->`");
                }
            }
            b'p' => {
                let start = i;
                i += 1;
                let digits_start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i == digits_start {
                    return err(start, "variable `p` must be followed by digits");
                }
                let id: u32 = text[digits_start..i].parse().map_err(|_| SyntaxError {
                    offset: start,
                    message: "variable index too large".into(),
                })?;
                toks.push((start, Tok::Var(id)));
            }
            _ => return err(i, format!("unknown token `{}`", &text[i..i + 1])),
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: &'a [(usize, Tok)],
    pos: usize,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<Tok> {
        self.toks.get(self.pos).map(|&(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |&(o, _)| o)
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn imp(&mut self) -> Result<Formula, SyntaxError> {
        let lhs = self.or()?;
        if self.peek() == Some(Tok::Arrow) {
            self.bump();
            let rhs = self.imp()?;
            return Ok(Formula::imp(lhs, rhs));
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Formula, SyntaxError> {
        let mut lhs = self.and()?;
        while self.peek() == Some(Tok::Pipe) {
            self.bump();
            lhs = Formula::or(lhs, self.and()?);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Formula, SyntaxError> {
        let mut lhs = self.unary()?;
        while self.peek() == Some(Tok::Amp) {
            self.bump();
            lhs = Formula::and(lhs, self.unary()?);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, SyntaxError> {
        if self.peek() == Some(Tok::Tilde) {
            self.bump();
            return Ok(Formula::neg(self.unary()?));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Formula, SyntaxError> {
        match self.peek() {
            Some(Tok::Var(id)) => {
                self.bump();
                Ok(Formula::Var(id))
            }
            Some(Tok::LParen) => {
                self.bump();
                let inner = self.imp()?;
                if self.peek() == Some(Tok::RParen) {
                    self.bump();
                    Ok(inner)
                } else {
                    err(self.offset(), "expected `)`")
                }
            }
            Some(_) => err(self.offset(), "expected a formula"),
            None => err(self.end, "unexpected end of input"),
        }
    }
}

/// Parses a formula; errors carry the byte offset of the offending token.
pub fn parse_formula(text: &str) -> Result<Formula, SyntaxError> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        end: text.len(),
    };
    let f = p.imp()?;
    if p.pos < toks.len() {
        return err(p.offset(), "unexpected trailing input");
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_axiom_one_instance() {
        let f = parse_formula("p0 -> (p0 & p0)").unwrap();
        assert_eq!(
            f,
            Formula::imp(
                Formula::var(0),
                Formula::and(Formula::var(0), Formula::var(0))
            )
        );
    }

    #[test]
    fn parses_bare_variable() {
        assert_eq!(parse_formula("p0").unwrap(), Formula::var(0));
        assert_eq!(parse_formula("p17").unwrap(), Formula::var(17));
    }

    #[test]
    fn unbalanced_paren_errors_at_end_of_input() {
        let e = parse_formula("(p0 & p1").unwrap_err();
        assert_eq!(e.offset, 8);
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(
            parse_formula("~p0 & p1 | p2 -> p3").unwrap().to_string(),
            "~p0 & p1 | p2 -> p3"
        );
        assert_eq!(
            parse_formula("p0 -> p1 -> p2").unwrap(),
            parse_formula("p0 -> (p1 -> p2)").unwrap()
        );
        assert_eq!(
            parse_formula("p0 & p1 & p2").unwrap(),
            parse_formula("(p0 & p1) & p2").unwrap()
        );
        assert_eq!(
            parse_formula("p0 | p1 | p2").unwrap(),
            parse_formula("(p0 | p1) | p2").unwrap()
        );
        assert_eq!(
            parse_formula("((p0->p1)->p0)->p0").unwrap().to_string(),
            "((p0 -> p1) -> p0) -> p0"
        );
    }

    #[test]
    fn error_offsets_point_at_the_problem() {
        assert_eq!(parse_formula("p0 & & p1").unwrap_err().offset, 5);
        assert_eq!(parse_formula("p0 @ p1").unwrap_err().offset, 3);
        assert_eq!(parse_formula("p").unwrap_err().offset, 0);
        assert_eq!(parse_formula("p0 -").unwrap_err().offset, 3);
        assert_eq!(parse_formula("").unwrap_err().offset, 0);
        assert_eq!(parse_formula("p0 p1").unwrap_err().offset, 3);
        assert_eq!(parse_formula("p0 )").unwrap_err().offset, 3);
    }

    #[test]
    fn deep_negation_parses() {
        assert_eq!(
            parse_formula("~~p0 -> p0").unwrap(),
            Formula::imp(Formula::neg(Formula::neg(Formula::var(0))), Formula::var(0))
        );
    }
}
