//! Monads on finite sets, their Eilenberg-Moore algebras, monad morphisms
//! and the induced lifting between algebra categories.
//!
//! Everything is tabulated: objects are label lists, maps are index tables,
//! and a monad is a recipe producing those tables for any carrier. The sizes
//! involved stay tiny, so the monad laws, the algebra laws and the morphism
//! laws are all checked pointwise.

mod builtins;
mod morphism;

pub use builtins::{
    builtin_monads, monad_law_suite, BuiltinMonad, FinMonad, LawCheck, ASSOC_DOMAIN_CAP,
};
pub use morphism::{
    builtin_morphism, builtin_morphisms, check_monad_morphism, check_monad_morphism_up_to,
    lift_hom, lift_morphism, recover_theta, FinEndofunctor, IdentityFunctor, MonadMorphism,
    MorphismLaw, MorphismViolation,
};

use std::fmt;
use thiserror::Error;

/// Cap on the number of candidate structure tables [`enumerate_algebras`]
/// will scan.
pub const ALGEBRA_ENUM_BUDGET: u128 = 10_000_000;

#[derive(Debug, Error)]
pub enum MonadError {
    #[error("{0}")]
    Shape(String),
    #[error(
        "enumerating would scan {candidates} structure tables, the limit is {ALGEBRA_ENUM_BUDGET}"
    )]
    BudgetExceeded { candidates: u128 },
    #[error("carrier mismatch: expected {expected:?}, got {got:?}")]
    CarrierMismatch {
        expected: Vec<String>,
        got: Vec<String>,
    },
    #[error("expected an algebra for monad `{expected}`, got one for `{got}`")]
    WrongMonad {
        expected: &'static str,
        got: &'static str,
    },
    #[error("algebra law violated: {0}")]
    AlgebraLaw(AlgebraViolation),
    #[error("monad morphism law violated: {0}")]
    MorphismLaw(MorphismViolation),
}

/// A finite set as a list of element labels; the labels are canonical so
/// table equality is meaningful.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinSetObj {
    labels: Vec<String>,
}

impl FinSetObj {
    pub fn new(labels: Vec<String>) -> Self {
        FinSetObj { labels }
    }

    /// The carrier `{0, 1, ..., n-1}`.
    pub fn canonical(n: usize) -> Self {
        FinSetObj {
            labels: (0..n).map(|i| i.to_string()).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }
}

/// A total function between finite sets, as an index table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinFn {
    dom: usize,
    cod: usize,
    table: Vec<usize>,
}

impl FinFn {
    pub fn new(dom: usize, cod: usize, table: Vec<usize>) -> Result<Self, MonadError> {
        if table.len() != dom {
            return Err(MonadError::Shape(format!(
                "function table has {} entries for a domain of size {dom}",
                table.len()
            )));
        }
        if let Some(&bad) = table.iter().find(|&&v| v >= cod) {
            return Err(MonadError::Shape(format!(
                "table entry {bad} out of range for a codomain of size {cod}"
            )));
        }
        Ok(FinFn { dom, cod, table })
    }

    pub(crate) fn raw(dom: usize, cod: usize, table: Vec<usize>) -> Self {
        debug_assert_eq!(table.len(), dom);
        debug_assert!(table.iter().all(|&v| v < cod));
        FinFn { dom, cod, table }
    }

    pub fn identity(n: usize) -> Self {
        FinFn {
            dom: n,
            cod: n,
            table: (0..n).collect(),
        }
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    /// Composition in diagram order: `self` then `g`.
    pub fn then(&self, g: &FinFn) -> FinFn {
        assert_eq!(self.cod, g.dom, "composition needs matching boundary");
        FinFn {
            dom: self.dom,
            cod: g.cod,
            table: self.table.iter().map(|&x| g.table[x]).collect(),
        }
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.cod];
        for &v in &self.table {
            hit[v] = true;
        }
        hit.into_iter().all(|h| h)
    }
}

/// Enumerates every function from a domain of size `dom` to a codomain of
/// size `cod`, in ascending base-`cod` counter order.
pub fn all_functions(dom: usize, cod: usize) -> Vec<FinFn> {
    if cod == 0 {
        return if dom == 0 {
            vec![FinFn::identity(0)]
        } else {
            Vec::new()
        };
    }
    let count = (cod as u128).pow(dom as u32);
    assert!(count <= 1 << 20, "function space too large to enumerate");
    let mut out = Vec::with_capacity(count as usize);
    for c in 0..count {
        let mut c = c;
        let table: Vec<usize> = (0..dom)
            .map(|_| {
                let digit = (c % cod as u128) as usize;
                c /= cod as u128;
                digit
            })
            .collect();
        out.push(FinFn::raw(dom, cod, table));
    }
    out
}

/// An Eilenberg-Moore algebra: a carrier with a structure map `TA -> A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraInstance {
    pub monad: BuiltinMonad,
    pub carrier: FinSetObj,
    pub structure: FinFn,
}

impl AlgebraInstance {
    pub fn new(
        monad: BuiltinMonad,
        carrier: FinSetObj,
        structure: FinFn,
    ) -> Result<Self, MonadError> {
        let ta = monad.apply_obj(&carrier).len();
        if structure.dom() != ta || structure.cod() != carrier.len() {
            return Err(MonadError::Shape(format!(
                "structure map must be T A -> A, i.e. {ta} -> {}, got {} -> {}",
                carrier.len(),
                structure.dom(),
                structure.cod()
            )));
        }
        Ok(AlgebraInstance {
            monad,
            carrier,
            structure,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraLaw {
    /// `sigma . eta = id`, witnessed by an element of A.
    Unit,
    /// `sigma . T sigma = sigma . mu`, witnessed by an element of T^2 A.
    Associativity,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraViolation {
    pub law: AlgebraLaw,
    pub witness: usize,
}

impl fmt::Display for AlgebraViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.law {
            AlgebraLaw::Unit => write!(f, "unit law fails at carrier element {}", self.witness),
            AlgebraLaw::Associativity => {
                write!(f, "associativity law fails at T^2 element {}", self.witness)
            }
        }
    }
}

/// Whether the associativity equation of an algebra on a carrier of this
/// size can be tabulated (`|T^2 A|` within [`ASSOC_DOMAIN_CAP`]).
pub fn algebra_check_feasible(monad: BuiltinMonad, carrier_len: usize) -> bool {
    monad
        .obj_size(carrier_len as u128)
        .and_then(|t| monad.obj_size(t))
        .is_some_and(|t2| t2 <= ASSOC_DOMAIN_CAP)
}

/// Verifies both algebra equations pointwise; reports the first failing
/// element (unit law over A first, then associativity over T^2 A).
///
/// Panics when `|T^2 A|` is not tabulatable; see [`algebra_check_feasible`].
pub fn check_algebra(alg: &AlgebraInstance) -> Result<(), AlgebraViolation> {
    let m = alg.monad;
    let n = alg.carrier.len();
    assert!(
        algebra_check_feasible(m, n),
        "associativity check on a carrier of size {n} is not tabulatable for {}",
        m.name()
    );
    let unit = m.unit(n);
    for x in 0..n {
        if alg.structure.apply(unit.apply(x)) != x {
            return Err(AlgebraViolation {
                law: AlgebraLaw::Unit,
                witness: x,
            });
        }
    }
    let via_t_sigma = m.apply_fn(&alg.structure).then(&alg.structure);
    let via_mult = m.mult(n).then(&alg.structure);
    for t2 in 0..via_mult.dom() {
        if via_t_sigma.apply(t2) != via_mult.apply(t2) {
            return Err(AlgebraViolation {
                law: AlgebraLaw::Associativity,
                witness: t2,
            });
        }
    }
    Ok(())
}

/// Brute-force filter of all structure tables `TA -> A` by [`check_algebra`],
/// ascending in base-`|A|` counter order.
pub fn enumerate_algebras(
    monad: BuiltinMonad,
    carrier: &FinSetObj,
) -> Result<Vec<AlgebraInstance>, MonadError> {
    let ta = monad.apply_obj(carrier).len();
    let n = carrier.len();
    let candidates = if n == 0 {
        if ta == 0 {
            1
        } else {
            0
        }
    } else {
        (n as u128).pow(ta as u32)
    };
    if candidates > ALGEBRA_ENUM_BUDGET {
        return Err(MonadError::BudgetExceeded { candidates });
    }
    let mut out = Vec::new();
    for f in all_functions(ta, n) {
        let alg = AlgebraInstance {
            monad,
            carrier: carrier.clone(),
            structure: f,
        };
        if check_algebra(&alg).is_ok() {
            out.push(alg);
        }
    }
    Ok(out)
}

/// The free algebra `(T A, mu_A)` on a carrier.
pub fn free_algebra(monad: BuiltinMonad, carrier: &FinSetObj) -> AlgebraInstance {
    AlgebraInstance {
        monad,
        carrier: monad.apply_obj(carrier),
        structure: monad.mult(carrier.len()),
    }
}

/// Whether `h` is a homomorphism of algebras: `h . sigma_A = sigma_B . T h`.
pub fn is_algebra_hom(a: &AlgebraInstance, b: &AlgebraInstance, h: &FinFn) -> bool {
    assert_eq!(a.monad, b.monad, "homomorphisms live over one monad");
    if h.dom() != a.carrier.len() || h.cod() != b.carrier.len() {
        return false;
    }
    a.structure.then(h) == a.monad.apply_fn(h).then(&b.structure)
}

/// All algebra homomorphisms from `a` to `b`, by brute force.
pub fn algebra_homs(a: &AlgebraInstance, b: &AlgebraInstance) -> Vec<FinFn> {
    all_functions(a.carrier.len(), b.carrier.len())
        .into_iter()
        .filter(|h| is_algebra_hom(a, b, h))
        .collect()
}
