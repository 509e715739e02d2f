//! The twelve axiom schemas of CL and first-order pattern matching of
//! formulas against them. IL is CL without schema 12.

use super::formula::Formula;

/// Number of axiom schemas in CL; IL uses schemas 1 through 11.
pub const SCHEMA_COUNT: u8 = 12;

/// Metavariables a schema may mention.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Meta {
    Alpha,
    Beta,
    Gamma,
}

/// Schema shape: a formula tree over metavariables.
#[derive(Debug, Clone)]
enum Pat {
    M(Meta),
    Neg(Box<Pat>),
    And(Box<Pat>, Box<Pat>),
    Or(Box<Pat>, Box<Pat>),
    Imp(Box<Pat>, Box<Pat>),
}

fn m(x: Meta) -> Pat {
    Pat::M(x)
}

fn neg(p: Pat) -> Pat {
    Pat::Neg(Box::new(p))
}

fn and(l: Pat, r: Pat) -> Pat {
    Pat::And(Box::new(l), Box::new(r))
}

fn or(l: Pat, r: Pat) -> Pat {
    Pat::Or(Box::new(l), Box::new(r))
}

fn imp(l: Pat, r: Pat) -> Pat {
    Pat::Imp(Box::new(l), Box::new(r))
}

fn schema_pattern(schema: u8) -> Pat {
    use Meta::{Alpha as A, Beta as B, Gamma as C};
    match schema {
        1 => imp(m(A), and(m(A), m(A))),
        2 => imp(and(m(A), m(B)), and(m(B), m(A))),
        3 => imp(imp(m(A), m(B)), imp(and(m(A), m(C)), and(m(B), m(C)))),
        4 => imp(and(imp(m(A), m(B)), imp(m(B), m(C))), imp(m(A), m(C))),
        5 => imp(m(B), imp(m(A), m(B))),
        6 => imp(and(m(A), imp(m(A), m(B))), m(B)),
        7 => imp(m(A), or(m(A), m(B))),
        8 => imp(or(m(A), m(B)), or(m(B), m(A))),
        9 => imp(
            and(imp(m(A), m(C)), imp(m(B), m(C))),
            imp(or(m(A), m(B)), m(C)),
        ),
        10 => imp(neg(m(A)), imp(m(A), m(B))),
        11 => imp(and(imp(m(A), m(B)), imp(m(A), neg(m(B)))), neg(m(A))),
        12 => or(m(A), neg(m(A))),
        _ => panic!("schema number must be in 1..=12, got {schema}"),
    }
}

/// What each metavariable was bound to in a successful match.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Bindings {
    pub alpha: Option<Formula>,
    pub beta: Option<Formula>,
    pub gamma: Option<Formula>,
}

impl Bindings {
    fn slot(&mut self, meta: Meta) -> &mut Option<Formula> {
        match meta {
            Meta::Alpha => &mut self.alpha,
            Meta::Beta => &mut self.beta,
            Meta::Gamma => &mut self.gamma,
        }
    }
}

fn unify(pat: &Pat, f: &Formula, b: &mut Bindings) -> bool {
    match (pat, f) {
        (Pat::M(meta), _) => match b.slot(*meta) {
            Some(bound) => bound == f,
            slot @ None => {
                *slot = Some(f.clone());
                true
            }
        },
        (Pat::Neg(p), Formula::Neg(x)) => unify(p, x, b),
        (Pat::And(pl, pr), Formula::And(l, r)) => unify(pl, l, b) && unify(pr, r, b),
        (Pat::Or(pl, pr), Formula::Or(l, r)) => unify(pl, l, b) && unify(pr, r, b),
        (Pat::Imp(pl, pr), Formula::Imp(l, r)) => unify(pl, l, b) && unify(pr, r, b),
        _ => false,
    }
}

/// Matches `f` against axiom schema `schema` (1..=12). A metavariable that
/// appears twice must bind the same subformula both times.
pub fn match_schema(f: &Formula, schema: u8) -> Option<Bindings> {
    let pat = schema_pattern(schema);
    let mut b = Bindings::default();
    unify(&pat, f, &mut b).then_some(b)
}

/// Builds the instance of `schema` with the given metavariable values.
/// Metavariables the schema does not mention are ignored.
pub fn instantiate(schema: u8, alpha: &Formula, beta: &Formula, gamma: &Formula) -> Formula {
    fn build(pat: &Pat, alpha: &Formula, beta: &Formula, gamma: &Formula) -> Formula {
        match pat {
            Pat::M(Meta::Alpha) => alpha.clone(),
            Pat::M(Meta::Beta) => beta.clone(),
            Pat::M(Meta::Gamma) => gamma.clone(),
            Pat::Neg(p) => Formula::neg(build(p, alpha, beta, gamma)),
            Pat::And(l, r) => {
                Formula::and(build(l, alpha, beta, gamma), build(r, alpha, beta, gamma))
            }
            Pat::Or(l, r) => {
                Formula::or(build(l, alpha, beta, gamma), build(r, alpha, beta, gamma))
            }
            Pat::Imp(l, r) => {
                Formula::imp(build(l, alpha, beta, gamma), build(r, alpha, beta, gamma))
            }
        }
    }
    build(&schema_pattern(schema), alpha, beta, gamma)
}

/// How many distinct metavariables a schema mentions.
pub fn schema_arity(schema: u8) -> usize {
    fn walk(pat: &Pat, seen: &mut [bool; 3]) {
        match pat {
            Pat::M(Meta::Alpha) => seen[0] = true,
            Pat::M(Meta::Beta) => seen[1] = true,
            Pat::M(Meta::Gamma) => seen[2] = true,
            Pat::Neg(p) => walk(p, seen),
            Pat::And(l, r) | Pat::Or(l, r) | Pat::Imp(l, r) => {
                walk(l, seen);
                walk(r, seen);
            }
        }
    }
    let mut seen = [false; 3];
    walk(&schema_pattern(schema), &mut seen);
    seen.iter().filter(|&&s| s).count()
}
