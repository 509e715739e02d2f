//! Desk-scale categorical logic: finite posets and their downset Heyting
//! algebras, Heyting-valued propositional logic with a Hilbert proof checker,
//! the subobject classifier of presheaves over a finite poset, omega-valued
//! sets, and monads on finite sets with Eilenberg-Moore liftings.
//!
//! Everything is tabulated and small by design, so laws are checked
//! exhaustively rather than proved.

pub mod logic;
pub mod monad;
pub mod omega_set;
pub mod order;
pub mod presheaf;

pub use logic::{parse_formula, Formula, Valuation};
pub use monad::{AlgebraInstance, BuiltinMonad, FinFn, FinSetObj, MonadMorphism};
pub use omega_set::OmegaSetInstance;
pub use order::{enumerate_downsets, Downset, Heyting, OrderError, Poset};
pub use presheaf::OmegaPresheaf;
