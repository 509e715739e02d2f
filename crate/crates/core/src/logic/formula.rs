//! Propositional formulas over variables `p0`, `p1`, ...

use std::collections::BTreeSet;
use std::fmt;

/// Abstract syntax tree for a propositional sentence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Var(u32),
    Neg(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn var(id: u32) -> Self {
        Formula::Var(id)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(f: Formula) -> Self {
        Formula::Neg(Box::new(f))
    }

    pub fn and(l: Formula, r: Formula) -> Self {
        Formula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Formula, r: Formula) -> Self {
        Formula::Or(Box::new(l), Box::new(r))
    }

    pub fn imp(l: Formula, r: Formula) -> Self {
        Formula::Imp(Box::new(l), Box::new(r))
    }

    /// The set of variable ids occurring in the formula, ascending.
    pub fn vars(&self) -> BTreeSet<u32> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<u32>) {
        match self {
            Formula::Var(i) => {
                out.insert(*i);
            }
            Formula::Neg(x) => x.collect_vars(out),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Imp(l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
        }
    }

    /// Replaces every occurrence of `var` by `replacement`.
    pub fn substitute(&self, var: u32, replacement: &Formula) -> Formula {
        match self {
            Formula::Var(i) if *i == var => replacement.clone(),
            Formula::Var(i) => Formula::Var(*i),
            Formula::Neg(x) => Formula::neg(x.substitute(var, replacement)),
            Formula::And(l, r) => Formula::and(
                l.substitute(var, replacement),
                r.substitute(var, replacement),
            ),
            Formula::Or(l, r) => Formula::or(
                l.substitute(var, replacement),
                r.substitute(var, replacement),
            ),
            Formula::Imp(l, r) => Formula::imp(
                l.substitute(var, replacement),
                r.substitute(var, replacement),
            ),
        }
    }

    fn prec(&self) -> u8 {
        match self {
            Formula::Imp(_, _) => 1,
            Formula::Or(_, _) => 2,
            Formula::And(_, _) => 3,
            Formula::Neg(_) => 4,
            Formula::Var(_) => 5,
        }
    }

    fn write_prec(&self, f: &mut fmt::Formatter<'_>, required: u8) -> fmt::Result {
        if self.prec() < required {
            write!(f, "(")?;
            self.write_prec(f, 0)?;
            return write!(f, ")");
        }
        match self {
            Formula::Var(i) => write!(f, "p{i}"),
            Formula::Neg(x) => {
                write!(f, "~")?;
                x.write_prec(f, 4)
            }
            // `&` and `|` associate to the left, `->` to the right.
            Formula::And(l, r) => {
                l.write_prec(f, 3)?;
                write!(f, " & ")?;
                r.write_prec(f, 4)
            }
            Formula::Or(l, r) => {
                l.write_prec(f, 2)?;
                write!(f, " | ")?;
                r.write_prec(f, 3)
            }
            Formula::Imp(l, r) => {
                l.write_prec(f, 2)?;
                write!(f, " -> ")?;
                r.write_prec(f, 1)
            }
        }
    }
}

/// Canonical printing: minimal parentheses under the grammar's precedence
/// and associativity, spaces around binary connectives.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_prec(f, 0)
    }
}
