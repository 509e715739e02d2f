//! Heyting-valued semantics: valuations, evaluation, validity with
//! countermodel search.

use super::formula::Formula;
use crate::order::Heyting;
use std::collections::BTreeMap;
use thiserror::Error;

/// Default cap on the number of valuations a validity search may enumerate.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("variable p{0} has no assigned value")]
    UnassignedVariable(u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidityError {
    #[error("{vars} variables over an algebra of size {algebra_size} exceed the budget of {budget} valuations")]
    BudgetExceeded {
        vars: usize,
        algebra_size: usize,
        budget: u64,
    },
}

/// An assignment of algebra elements to propositional variables.
#[derive(Debug, Clone)]
pub struct Valuation<'h> {
    pub algebra: &'h Heyting,
    assignment: BTreeMap<u32, usize>,
}

impl<'h> Valuation<'h> {
    pub fn new(algebra: &'h Heyting) -> Self {
        Valuation {
            algebra,
            assignment: BTreeMap::new(),
        }
    }

    pub fn from_pairs(algebra: &'h Heyting, pairs: &[(u32, usize)]) -> Self {
        let mut v = Valuation::new(algebra);
        for &(var, elem) in pairs {
            v.set(var, elem);
        }
        v
    }

    pub fn set(&mut self, var: u32, elem: usize) {
        assert!(elem < self.algebra.size(), "element index out of range");
        self.assignment.insert(var, elem);
    }

    pub fn get(&self, var: u32) -> Option<usize> {
        self.assignment.get(&var).copied()
    }

    /// Assignment pairs in ascending variable order.
    pub fn pairs(&self) -> Vec<(u32, usize)> {
        self.assignment.iter().map(|(&v, &e)| (v, e)).collect()
    }
}

/// Evaluates by structural recursion: `~` is the pseudo-complement, `&` meet,
/// `|` join, `->` the relative pseudo-complement.
pub fn eval(f: &Formula, v: &Valuation<'_>) -> Result<usize, EvalError> {
    let h = v.algebra;
    Ok(match f {
        Formula::Var(i) => v.get(*i).ok_or(EvalError::UnassignedVariable(*i))?,
        Formula::Neg(x) => h.imp(eval(x, v)?, h.bot()),
        Formula::And(l, r) => h.meet(eval(l, v)?, eval(r, v)?),
        Formula::Or(l, r) => h.join(eval(l, v)?, eval(r, v)?),
        Formula::Imp(l, r) => h.imp(eval(l, v)?, eval(r, v)?),
    })
}

/// Outcome of a validity search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Validity {
    Valid,
    /// The first valuation (in enumeration order) whose value is not `top`,
    /// as ascending `(variable, element)` pairs.
    Countermodel {
        assignment: Vec<(u32, usize)>,
        value: usize,
    },
}

/// Decides validity of `f` over `h` by exhausting all valuations of the
/// formula's variables.
///
/// Valuations are enumerated as base-`|h|` counters with the least variable
/// index in the fastest-moving digit, so the reported countermodel is
/// deterministic: it is the least one in enumeration order.
pub fn check_validity(f: &Formula, h: &Heyting, budget: u64) -> Result<Validity, ValidityError> {
    let vars: Vec<u32> = f.vars().into_iter().collect();
    let size = h.size();
    let total = (size as u128).checked_pow(vars.len() as u32);
    let total = match total {
        Some(t) if t <= budget as u128 => t as u64,
        _ => {
            return Err(ValidityError::BudgetExceeded {
                vars: vars.len(),
                algebra_size: size,
                budget,
            })
        }
    };
    let mut v = Valuation::new(h);
    for counter in 0..total {
        let mut c = counter;
        for &var in &vars {
            v.set(var, (c % size as u64) as usize);
            c /= size as u64;
        }
        let value = eval(f, &v).expect("all variables assigned");
        if value != h.top() {
            return Ok(Validity::Countermodel {
                assignment: v.pairs(),
                value,
            });
        }
    }
    Ok(Validity::Valid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::parser::parse_formula;
    use crate::order::{enumerate_downsets, named_poset};

    fn chain3() -> Heyting {
        Heyting::chain(3).unwrap()
    }

    #[test]
    fn excluded_middle_in_three_chain_at_middle_is_middle() {
        let h = chain3();
        let f = parse_formula("p0 | ~p0").unwrap();
        let v = Valuation::from_pairs(&h, &[(0, 1)]);
        assert_eq!(eval(&f, &v).unwrap(), 1);
    }

    #[test]
    fn unassigned_variable_is_reported() {
        let h = chain3();
        let f = parse_formula("p0 & p1").unwrap();
        let v = Valuation::from_pairs(&h, &[(0, 1)]);
        assert_eq!(eval(&f, &v), Err(EvalError::UnassignedVariable(1)));
    }

    #[test]
    fn self_implication_is_top_under_every_valuation() {
        let f = parse_formula("p0 -> p0").unwrap();
        for h in [
            Heyting::chain(2).unwrap(),
            chain3(),
            Heyting::chain(5).unwrap(),
        ] {
            for e in 0..h.size() {
                let v = Valuation::from_pairs(&h, &[(0, e)]);
                assert_eq!(eval(&f, &v).unwrap(), h.top());
            }
        }
    }

    #[test]
    fn two_element_algebra_agrees_with_classical_truth_tables() {
        // Oracle: classical boolean evaluation, checked compositionally over
        // every formula of depth <= 2 in two variables, on all 4 valuations.
        let h = Heyting::chain(2).unwrap();
        let mut layer: Vec<Formula> = vec![Formula::var(0), Formula::var(1)];
        for _ in 0..2 {
            let prev = layer.clone();
            for f in &prev {
                layer.push(Formula::neg(f.clone()));
                for g in &prev {
                    layer.push(Formula::and(f.clone(), g.clone()));
                    layer.push(Formula::or(f.clone(), g.clone()));
                    layer.push(Formula::imp(f.clone(), g.clone()));
                }
            }
            layer.sort_by_key(|f| f.to_string());
            layer.dedup();
        }
        fn classical(f: &Formula, a: bool, b: bool) -> bool {
            match f {
                Formula::Var(0) => a,
                Formula::Var(_) => b,
                Formula::Neg(x) => !classical(x, a, b),
                Formula::And(l, r) => classical(l, a, b) && classical(r, a, b),
                Formula::Or(l, r) => classical(l, a, b) || classical(r, a, b),
                Formula::Imp(l, r) => !classical(l, a, b) || classical(r, a, b),
            }
        }
        for f in &layer {
            for bits in 0..4u32 {
                let (a, b) = (bits & 1 != 0, bits & 2 != 0);
                let v = Valuation::from_pairs(&h, &[(0, a as usize), (1, b as usize)]);
                assert_eq!(eval(f, &v).unwrap() == 1, classical(f, a, b), "{f}");
            }
        }
    }

    #[test]
    fn excluded_middle_countermodel_over_cribles_is_the_singleton_crible() {
        let p = named_poset("powerset:3").unwrap().unwrap();
        let h = enumerate_downsets(&p).unwrap();
        let f = parse_formula("p0 | ~p0").unwrap();
        match check_validity(&f, &h, DEFAULT_BUDGET).unwrap() {
            Validity::Countermodel { assignment, value } => {
                assert_eq!(assignment, vec![(0, 1)]);
                assert_eq!(h.label(1), "{{}}");
                assert_eq!(value, 1);
            }
            Validity::Valid => panic!("expected a countermodel"),
        }
    }

    #[test]
    fn excluded_middle_is_valid_classically() {
        let h = Heyting::chain(2).unwrap();
        let f = parse_formula("p0 | ~p0").unwrap();
        assert_eq!(
            check_validity(&f, &h, DEFAULT_BUDGET).unwrap(),
            Validity::Valid
        );
    }

    #[test]
    fn countermodel_search_exhausts_in_enumeration_order() {
        // Oracle: independent scan in the same counter order.
        let h = chain3();
        let f = parse_formula("((p0 -> p1) -> p0) -> p0").unwrap();
        let got = check_validity(&f, &h, DEFAULT_BUDGET).unwrap();
        let mut expected = None;
        'outer: for b in 0..3 {
            for a in 0..3 {
                // p0 varies fastest, so (a, b) pairs in this nesting order.
                let v = Valuation::from_pairs(&h, &[(0, a), (1, b)]);
                let value = eval(&f, &v).unwrap();
                if value != h.top() {
                    expected = Some(Validity::Countermodel {
                        assignment: vec![(0, a), (1, b)],
                        value,
                    });
                    break 'outer;
                }
            }
        }
        assert_eq!(got, expected.unwrap());
        assert_eq!(
            got,
            Validity::Countermodel {
                assignment: vec![(0, 1), (1, 0)],
                value: 1
            }
        );
    }

    #[test]
    fn budget_is_enforced() {
        let h = enumerate_downsets(&named_poset("powerset:3").unwrap().unwrap()).unwrap();
        let f = parse_formula("p0 | p1 | p2").unwrap();
        let err = check_validity(&f, &h, 100).unwrap_err();
        assert_eq!(
            err,
            ValidityError::BudgetExceeded {
                vars: 3,
                algebra_size: 20,
                budget: 100
            }
        );
    }

    #[test]
    fn non_contradiction_is_valid_in_the_three_chain() {
        let h = chain3();
        let f = parse_formula("~(p0 & ~p0)").unwrap();
        assert_eq!(
            check_validity(&f, &h, DEFAULT_BUDGET).unwrap(),
            Validity::Valid
        );
    }
}
