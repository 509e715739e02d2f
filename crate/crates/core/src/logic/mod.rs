//! Propositional logic over finite Heyting algebras: formulas, the parser,
//! valuation semantics, validity with countermodels, CL/IL axiom schemas
//! and Hilbert proof checking.

pub mod axioms;
pub mod formula;
pub mod parser;
pub mod proof;
pub mod semantics;

pub use axioms::{instantiate, match_schema, schema_arity, Bindings, SCHEMA_COUNT};
pub use formula::Formula;
pub use parser::{parse_formula, SyntaxError};
pub use proof::{
    check_proof, parse_proof, Justification, Proof, ProofLine, ProofParseError, ProofVerdict,
    RejectReason, System,
};
pub use semantics::{
    check_validity, eval, EvalError, Validity, ValidityError, Valuation, DEFAULT_BUDGET,
};
