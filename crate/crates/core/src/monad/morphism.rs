//! Monad morphisms `(F, theta)` with `theta : T2 F => F T1`, the induced
//! lifting of algebras, and the converse recovery of `theta` from a lifting
//! that commutes with the forgetful functors.

use super::builtins::{BuiltinMonad, FinMonad};
use super::{
    all_functions, check_algebra, free_algebra, AlgebraInstance, FinFn, FinSetObj, MonadError,
};
use std::fmt;
use std::sync::Arc;

/// A tabulated endofunctor of finite sets. Only the identity ships, but the
/// morphism interfaces keep the functor a parameter.
pub trait FinEndofunctor: Send + Sync {
    fn name(&self) -> &'static str;
    fn apply_obj(&self, a: &FinSetObj) -> FinSetObj;
    fn apply_fn(&self, f: &FinFn) -> FinFn;
}

pub struct IdentityFunctor;

impl FinEndofunctor for IdentityFunctor {
    fn name(&self) -> &'static str {
        "identity"
    }

    fn apply_obj(&self, a: &FinSetObj) -> FinSetObj {
        a.clone()
    }

    fn apply_fn(&self, f: &FinFn) -> FinFn {
        f.clone()
    }
}

/// A monad morphism from `source` to `target`: a functor together with a
/// family `theta_A : T2 F A -> F T1 A`, produced per carrier.
#[derive(Clone)]
pub struct MonadMorphism {
    name: String,
    source: BuiltinMonad,
    target: BuiltinMonad,
    functor: Arc<dyn FinEndofunctor>,
    theta: Arc<dyn Fn(&FinSetObj) -> FinFn + Send + Sync>,
}

impl fmt::Debug for MonadMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MonadMorphism")
            .field("name", &self.name)
            .field("source", &self.source.name())
            .field("target", &self.target.name())
            .finish()
    }
}

impl MonadMorphism {
    pub fn new(
        name: impl Into<String>,
        source: BuiltinMonad,
        target: BuiltinMonad,
        functor: Arc<dyn FinEndofunctor>,
        theta: Arc<dyn Fn(&FinSetObj) -> FinFn + Send + Sync>,
    ) -> Self {
        MonadMorphism {
            name: name.into(),
            source,
            target,
            functor,
            theta,
        }
    }

    /// The identity morphism on a monad: `F = Id`, `theta = id`.
    pub fn identity(monad: BuiltinMonad) -> Self {
        MonadMorphism {
            name: format!("{0}->{0}", monad.name()),
            source: monad,
            target: monad,
            functor: Arc::new(IdentityFunctor),
            theta: Arc::new(move |a| FinFn::identity(monad.apply_obj(a).len())),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> BuiltinMonad {
        self.source
    }

    pub fn target(&self) -> BuiltinMonad {
        self.target
    }

    pub fn functor(&self) -> &dyn FinEndofunctor {
        &*self.functor
    }

    pub fn functor_arc(&self) -> Arc<dyn FinEndofunctor> {
        Arc::clone(&self.functor)
    }

    /// The component `theta_A` for a carrier.
    pub fn theta(&self, a: &FinSetObj) -> FinFn {
        let th = (self.theta)(a);
        let t2fa = self.target.apply_obj(&self.functor.apply_obj(a)).len();
        let ft1a = self.functor.apply_obj(&self.source.apply_obj(a)).len();
        assert!(
            th.dom() == t2fa && th.cod() == ft1a,
            "theta component must be T2 F A -> F T1 A"
        );
        th
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MorphismLaw {
    Naturality,
    UnitCompat,
    MultCompat,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismViolation {
    pub law: MorphismLaw,
    pub detail: String,
}

impl fmt::Display for MorphismViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let law = match self.law {
            MorphismLaw::Naturality => "naturality",
            MorphismLaw::UnitCompat => "unit compatibility",
            MorphismLaw::MultCompat => "multiplication compatibility",
        };
        write!(f, "{law}: {}", self.detail)
    }
}

/// Largest carrier size the morphism checks run at.
fn morphism_check_bound(m: &MonadMorphism) -> usize {
    m.source.size_bound().min(m.target.size_bound()).min(3)
}

/// Verifies naturality of `theta` (over every function between the test
/// carriers) and both compatibility equations pointwise, on carriers of size
/// `0..=min(source bound, target bound, 3)`.
pub fn check_monad_morphism(m: &MonadMorphism) -> Result<(), MorphismViolation> {
    check_monad_morphism_up_to(m, morphism_check_bound(m))
}

/// [`check_monad_morphism`] with an explicit largest carrier size. Useful for
/// morphisms whose components are expensive to produce, like ones recovered
/// from a lifting (their component at `A` tabulates the free algebra on `A`).
pub fn check_monad_morphism_up_to(
    m: &MonadMorphism,
    max_size: usize,
) -> Result<(), MorphismViolation> {
    let carriers: Vec<FinSetObj> = (0..=max_size).map(FinSetObj::canonical).collect();

    for a in &carriers {
        for b in &carriers {
            let theta_a = m.theta(a);
            let theta_b = m.theta(b);
            for f in all_functions(a.len(), b.len()) {
                let ff = m.functor().apply_fn(&f);
                let lhs = theta_a.then(&m.functor().apply_fn(&m.source.apply_fn(&f)));
                let rhs = m.target.apply_fn(&ff).then(&theta_b);
                if lhs != rhs {
                    return Err(MorphismViolation {
                        law: MorphismLaw::Naturality,
                        detail: format!(
                            "square for f: {} -> {} with table {:?} does not commute",
                            a.len(),
                            b.len(),
                            f.table()
                        ),
                    });
                }
            }
        }
    }

    for a in &carriers {
        let n = a.len();
        let fa = m.functor().apply_obj(a);
        let theta_a = m.theta(a);
        let lhs = m.target.unit(fa.len()).then(&theta_a);
        let rhs = m.functor().apply_fn(&m.source.unit(n));
        if lhs != rhs {
            let bad = (0..fa.len())
                .find(|&x| lhs.apply(x) != rhs.apply(x))
                .unwrap();
            return Err(MorphismViolation {
                law: MorphismLaw::UnitCompat,
                detail: format!(
                    "theta . eta2 F differs from F eta1 at carrier size {n}, element {bad}"
                ),
            });
        }
    }

    for a in &carriers {
        let n = a.len();
        let fa = m.functor().apply_obj(a);
        let t1a = m.source.apply_obj(a);
        let theta_a = m.theta(a);
        let lhs = m.target.mult(fa.len()).then(&theta_a);
        let rhs = m
            .target
            .apply_fn(&theta_a)
            .then(&m.theta(&t1a))
            .then(&m.functor().apply_fn(&m.source.mult(n)));
        if lhs != rhs {
            let bad = (0..lhs.dom())
                .find(|&x| lhs.apply(x) != rhs.apply(x))
                .unwrap();
            return Err(MorphismViolation {
                law: MorphismLaw::MultCompat,
                detail: format!(
                    "theta . mu2 F differs from F mu1 . theta T1 . T2 theta at carrier size {n}, element {bad}"
                ),
            });
        }
    }

    Ok(())
}

/// Lifts an algebra along the morphism: `(A, sigma)` becomes
/// `(F A, F sigma . theta_A)`. Both the morphism laws and the algebra laws
/// are preconditions and are re-checked here (the algebra laws whenever the
/// carrier is small enough to tabulate the check; free algebras over
/// carriers near the size bound are taken on trust).
pub fn lift_morphism(
    m: &MonadMorphism,
    alg: &AlgebraInstance,
) -> Result<AlgebraInstance, MonadError> {
    if alg.monad != m.source {
        return Err(MonadError::WrongMonad {
            expected: m.source.name(),
            got: alg.monad.name(),
        });
    }
    let bound = morphism_check_bound(m).min(alg.carrier.len());
    check_monad_morphism_up_to(m, bound).map_err(MonadError::MorphismLaw)?;
    if super::algebra_check_feasible(alg.monad, alg.carrier.len()) {
        check_algebra(alg).map_err(MonadError::AlgebraLaw)?;
    }
    let carrier = m.functor().apply_obj(&alg.carrier);
    let structure = m
        .theta(&alg.carrier)
        .then(&m.functor().apply_fn(&alg.structure));
    let lifted = AlgebraInstance::new(m.target, carrier, structure)?;
    debug_assert!(
        !super::algebra_check_feasible(lifted.monad, lifted.carrier.len())
            || check_algebra(&lifted).is_ok(),
        "lifted structure must be an algebra"
    );
    Ok(lifted)
}

/// Image of an algebra homomorphism under the lifting: just `F h`.
pub fn lift_hom(m: &MonadMorphism, h: &FinFn) -> FinFn {
    m.functor().apply_fn(h)
}

/// Recovers the morphism component `theta_A` from an assignment of
/// target-monad algebras to free source-monad algebras: apply the lifting to
/// the free algebra `(T1 A, mu1)` and set
/// `theta_A = sigma~ . T2 F eta1_A`.
///
/// The lifting must commute with the forgetful functors on the nose: the
/// lifted carrier has to be `F T1 A`, else `CarrierMismatch`.
pub fn recover_theta(
    source: BuiltinMonad,
    target: BuiltinMonad,
    functor: &dyn FinEndofunctor,
    lifted: &mut dyn FnMut(&AlgebraInstance) -> Result<AlgebraInstance, MonadError>,
    a: &FinSetObj,
) -> Result<FinFn, MonadError> {
    let free = free_algebra(source, a);
    let lifted_free = lifted(&free)?;
    let expected = functor.apply_obj(&free.carrier);
    if lifted_free.carrier != expected {
        return Err(MonadError::CarrierMismatch {
            expected: expected.labels().to_vec(),
            got: lifted_free.carrier.labels().to_vec(),
        });
    }
    if lifted_free.monad != target {
        return Err(MonadError::WrongMonad {
            expected: target.name(),
            got: lifted_free.monad.name(),
        });
    }
    let t2_f_eta = target.apply_fn(&functor.apply_fn(&source.unit(a.len())));
    Ok(t2_f_eta.then(&lifted_free.structure))
}

/// The shipped morphisms: the identity on every builtin monad, plus
/// `powerset -> maybe` (theta sends `just a` to `{a}` and `*` to the empty
/// set) and `powerset -> nonempty-powerset` (theta is the inclusion).
pub fn builtin_morphisms() -> Vec<MonadMorphism> {
    let mut out: Vec<MonadMorphism> = super::builtin_monads()
        .into_iter()
        .map(MonadMorphism::identity)
        .collect();
    out.push(powerset_to_maybe());
    out.push(powerset_to_nonempty_powerset());
    out
}

/// Looks up the shipped morphism lifting `source`-algebras to
/// `target`-algebras.
pub fn builtin_morphism(source: BuiltinMonad, target: BuiltinMonad) -> Option<MonadMorphism> {
    if source == target {
        return Some(MonadMorphism::identity(source));
    }
    match (source, target) {
        (BuiltinMonad::Powerset, BuiltinMonad::Maybe) => Some(powerset_to_maybe()),
        (BuiltinMonad::Powerset, BuiltinMonad::NonemptyPowerset) => {
            Some(powerset_to_nonempty_powerset())
        }
        _ => None,
    }
}

fn powerset_to_maybe() -> MonadMorphism {
    MonadMorphism::new(
        "powerset->maybe",
        BuiltinMonad::Powerset,
        BuiltinMonad::Maybe,
        Arc::new(IdentityFunctor),
        Arc::new(|a| {
            let n = a.len();
            let mut table: Vec<usize> = (0..n).map(|j| 1usize << j).collect();
            table.push(0); // the added point becomes the empty set
            FinFn::new(n + 1, 1 << n, table).expect("well shaped")
        }),
    )
}

fn powerset_to_nonempty_powerset() -> MonadMorphism {
    MonadMorphism::new(
        "powerset->nonempty-powerset",
        BuiltinMonad::Powerset,
        BuiltinMonad::NonemptyPowerset,
        Arc::new(IdentityFunctor),
        Arc::new(|a| {
            let n = a.len();
            let table: Vec<usize> = (0..(1usize << n) - 1).map(|j| j + 1).collect();
            FinFn::new((1 << n) - 1, 1 << n, table).expect("well shaped")
        }),
    )
}
