//! The shipped monads on finite sets and the exhaustive law suite.
//!
//! Canonical element orders keep tables comparable:
//! - maybe: `just(x_i)` at index i, the added point `*` last;
//! - powerset: subsets as bitmasks over carrier indices, ascending;
//! - nonempty powerset: the same skipping the empty mask (index = mask - 1).

use super::{all_functions, FinFn, FinSetObj};

/// Cap on `|T^3 A|` for the pointwise associativity check; beyond it the law
/// suite checks associativity only up to the largest carrier that fits.
pub const ASSOC_DOMAIN_CAP: u128 = 1 << 20;

/// A monad on finite sets, given by tabulation recipes.
pub trait FinMonad {
    fn name(&self) -> &'static str;
    /// Largest carrier size the monad is meant to be tabulated at.
    fn size_bound(&self) -> usize;
    /// `|T A|` for `|A| = n`, `None` when it does not fit.
    fn obj_size(&self, n: u128) -> Option<u128>;
    fn apply_obj(&self, a: &FinSetObj) -> FinSetObj;
    fn apply_fn(&self, f: &FinFn) -> FinFn;
    /// The unit `eta_A : A -> T A` for a carrier of size `n`.
    fn unit(&self, n: usize) -> FinFn;
    /// The multiplication `mu_A : T^2 A -> T A` for a carrier of size `n`.
    fn mult(&self, n: usize) -> FinFn;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuiltinMonad {
    Identity,
    Maybe,
    Powerset,
    NonemptyPowerset,
}

/// The shipped monads, law-checked up to their size bounds.
pub fn builtin_monads() -> Vec<BuiltinMonad> {
    vec![
        BuiltinMonad::Identity,
        BuiltinMonad::Maybe,
        BuiltinMonad::Powerset,
        BuiltinMonad::NonemptyPowerset,
    ]
}

impl BuiltinMonad {
    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "identity" => Some(BuiltinMonad::Identity),
            "maybe" => Some(BuiltinMonad::Maybe),
            "powerset" => Some(BuiltinMonad::Powerset),
            "nonempty-powerset" => Some(BuiltinMonad::NonemptyPowerset),
            _ => None,
        }
    }

    fn powerset_labels(a: &FinSetObj, skip_empty: bool) -> Vec<String> {
        let n = a.len();
        let start = usize::from(skip_empty);
        (start..1usize << n)
            .map(|mask| {
                let members: Vec<&str> = (0..n)
                    .filter(|&b| mask & (1 << b) != 0)
                    .map(|b| a.label(b))
                    .collect();
                format!("{{{}}}", members.join(","))
            })
            .collect()
    }
}

impl FinMonad for BuiltinMonad {
    fn name(&self) -> &'static str {
        match self {
            BuiltinMonad::Identity => "identity",
            BuiltinMonad::Maybe => "maybe",
            BuiltinMonad::Powerset => "powerset",
            BuiltinMonad::NonemptyPowerset => "nonempty-powerset",
        }
    }

    fn size_bound(&self) -> usize {
        match self {
            BuiltinMonad::Identity | BuiltinMonad::Maybe => 4,
            // T^2 A already has 2^8 elements at carrier size 3.
            BuiltinMonad::Powerset => 3,
            BuiltinMonad::NonemptyPowerset => 4,
        }
    }

    fn obj_size(&self, n: u128) -> Option<u128> {
        match self {
            BuiltinMonad::Identity => Some(n),
            BuiltinMonad::Maybe => n.checked_add(1),
            BuiltinMonad::Powerset => {
                if n < 127 {
                    Some(1u128 << n)
                } else {
                    None
                }
            }
            BuiltinMonad::NonemptyPowerset => {
                if n < 127 {
                    Some((1u128 << n) - 1)
                } else {
                    None
                }
            }
        }
    }

    fn apply_obj(&self, a: &FinSetObj) -> FinSetObj {
        match self {
            BuiltinMonad::Identity => a.clone(),
            BuiltinMonad::Maybe => {
                let mut labels: Vec<String> =
                    a.labels().iter().map(|l| format!("just({l})")).collect();
                labels.push("*".to_string());
                FinSetObj::new(labels)
            }
            BuiltinMonad::Powerset => FinSetObj::new(Self::powerset_labels(a, false)),
            BuiltinMonad::NonemptyPowerset => FinSetObj::new(Self::powerset_labels(a, true)),
        }
    }

    fn apply_fn(&self, f: &FinFn) -> FinFn {
        match self {
            BuiltinMonad::Identity => f.clone(),
            BuiltinMonad::Maybe => {
                let mut table: Vec<usize> = (0..f.dom()).map(|i| f.apply(i)).collect();
                table.push(f.cod()); // the added point is preserved
                FinFn::raw(f.dom() + 1, f.cod() + 1, table)
            }
            BuiltinMonad::Powerset => {
                let table: Vec<usize> = (0..1usize << f.dom())
                    .map(|mask| image_mask(f, mask))
                    .collect();
                FinFn::raw(1 << f.dom(), 1 << f.cod(), table)
            }
            BuiltinMonad::NonemptyPowerset => {
                let table: Vec<usize> = (1..1usize << f.dom())
                    .map(|mask| image_mask(f, mask) - 1)
                    .collect();
                FinFn::raw((1 << f.dom()) - 1, (1 << f.cod()) - 1, table)
            }
        }
    }

    fn unit(&self, n: usize) -> FinFn {
        match self {
            BuiltinMonad::Identity => FinFn::identity(n),
            BuiltinMonad::Maybe => FinFn::raw(n, n + 1, (0..n).collect()),
            BuiltinMonad::Powerset => FinFn::raw(n, 1 << n, (0..n).map(|i| 1usize << i).collect()),
            BuiltinMonad::NonemptyPowerset => {
                FinFn::raw(n, (1 << n) - 1, (0..n).map(|i| (1usize << i) - 1).collect())
            }
        }
    }

    fn mult(&self, n: usize) -> FinFn {
        match self {
            BuiltinMonad::Identity => FinFn::identity(n),
            BuiltinMonad::Maybe => {
                // just(just x) -> just x, just(*) -> *, * -> *.
                FinFn::raw(n + 2, n + 1, (0..n + 2).map(|i| i.min(n)).collect())
            }
            BuiltinMonad::Powerset => {
                let t = 1usize << n;
                assert!(t <= 20, "powerset multiplication table would not fit");
                let table: Vec<usize> = (0..1usize << t)
                    .map(|family| {
                        (0..t)
                            .filter(|&j| family & (1 << j) != 0)
                            .fold(0usize, |acc, j| acc | j)
                    })
                    .collect();
                FinFn::raw(1 << t, t, table)
            }
            BuiltinMonad::NonemptyPowerset => {
                let t = (1usize << n) - 1;
                assert!(t <= 20, "powerset multiplication table would not fit");
                let table: Vec<usize> = (1..1usize << t)
                    .map(|family| {
                        (0..t)
                            .filter(|&j| family & (1 << j) != 0)
                            .fold(0usize, |acc, j| acc | (j + 1))
                            - 1
                    })
                    .collect();
                FinFn::raw((1 << t) - 1, t, table)
            }
        }
    }
}

fn image_mask(f: &FinFn, mask: usize) -> usize {
    (0..f.dom())
        .filter(|&b| mask & (1 << b) != 0)
        .fold(0usize, |acc, b| acc | (1 << f.apply(b)))
}

/// One line of the law suite: which law, the largest carrier size actually
/// checked, and the verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawCheck {
    pub law: &'static str,
    pub max_size: usize,
    pub ok: bool,
    pub witness: Option<String>,
}

fn law_result(law: &'static str, max_size: usize, witness: Option<String>) -> LawCheck {
    LawCheck {
        law,
        max_size,
        ok: witness.is_none(),
        witness,
    }
}

/// Largest carrier size `<= size` whose `|T^3 A|` fits the pointwise
/// associativity check.
pub fn assoc_feasible_size(m: &dyn FinMonad, size: usize) -> usize {
    (0..=size)
        .take_while(|&n| {
            m.obj_size(n as u128)
                .and_then(|t| m.obj_size(t))
                .and_then(|t2| m.obj_size(t2))
                .is_some_and(|t3| t3 <= ASSOC_DOMAIN_CAP)
        })
        .last()
        .unwrap_or(0)
}

/// Checks the functor laws, both unit laws and associativity pointwise on
/// carriers `0..=size` (associativity capped by [`assoc_feasible_size`];
/// functor composition by carrier size 3). Returns one verdict per law.
pub fn monad_law_suite(m: &dyn FinMonad, size: usize) -> Vec<LawCheck> {
    let mut out = Vec::new();

    let mut witness = None;
    for n in 0..=size {
        let tn = m.obj_size(n as u128).expect("within bound") as usize;
        if m.apply_fn(&FinFn::identity(n)) != FinFn::identity(tn) {
            witness = Some(format!("T(id) differs from id at carrier size {n}"));
            break;
        }
    }
    out.push(law_result("functor-identity", size, witness));

    let comp_size = size.min(3);
    let mut witness = None;
    'comp: for a in 0..=comp_size {
        for b in 0..=comp_size {
            for c in 0..=comp_size {
                for f in all_functions(a, b) {
                    for g in all_functions(b, c) {
                        if m.apply_fn(&f.then(&g)) != m.apply_fn(&f).then(&m.apply_fn(&g)) {
                            witness = Some(format!(
                                "T(g . f) differs from Tg . Tf for f: {a}->{b}, g: {b}->{c}"
                            ));
                            break 'comp;
                        }
                    }
                }
            }
        }
    }
    out.push(law_result("functor-composition", comp_size, witness));

    let mut left = None;
    let mut right = None;
    for n in 0..=size {
        let tn = m.obj_size(n as u128).expect("within bound") as usize;
        let mult = m.mult(n);
        if left.is_none() && m.unit(tn).then(&mult) != FinFn::identity(tn) {
            left = Some(format!("mu . eta_T differs from id at carrier size {n}"));
        }
        if right.is_none() && m.apply_fn(&m.unit(n)).then(&mult) != FinFn::identity(tn) {
            right = Some(format!("mu . T eta differs from id at carrier size {n}"));
        }
    }
    out.push(law_result("unit-left", size, left));
    out.push(law_result("unit-right", size, right));

    let assoc_size = assoc_feasible_size(m, size);
    let mut witness = None;
    for n in 0..=assoc_size {
        let tn = m.obj_size(n as u128).expect("within bound") as usize;
        let mult = m.mult(n);
        let via_t_mult = m.apply_fn(&mult).then(&mult);
        let via_mult_t = m.mult(tn).then(&mult);
        if let Some(bad) =
            (0..via_t_mult.dom()).find(|&x| via_t_mult.apply(x) != via_mult_t.apply(x))
        {
            witness = Some(format!(
                "mu . T mu differs from mu . mu_T at carrier size {n}, element {bad}"
            ));
            break;
        }
    }
    out.push(law_result("associativity", assoc_size, witness));

    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powerset_mult_is_union() {
        // mu({{a},{a,b}}) = {a,b} on a two-element carrier:
        // TA indices are masks, so {a} = 1, {a,b} = 3, and the family
        // {{a},{a,b}} is the T^2 mask with bits 1 and 3 set.
        let mu = BuiltinMonad::Powerset.mult(2);
        let family = (1 << 1) | (1 << 3);
        assert_eq!(mu.apply(family), 3);
    }

    #[test]
    fn maybe_mult_collapses() {
        let m = BuiltinMonad::Maybe;
        let mu = m.mult(2);
        // Indices in T^2 A = {just(just 0), just(just 1), just(*), *}.
        assert_eq!(mu.apply(0), 0);
        assert_eq!(mu.apply(1), 1);
        assert_eq!(mu.apply(2), 2); // just(*) -> *
        assert_eq!(mu.apply(3), 2); // * -> *
    }

    #[test]
    fn powerset_unit_then_mult_is_identity() {
        let m = BuiltinMonad::Powerset;
        // mu({{a}}) = {a}: the unit-law instance on singletons.
        let n = 2;
        let composed = m.unit(1 << n).then(&m.mult(n));
        assert_eq!(composed, FinFn::identity(1 << n));
    }

    #[test]
    fn canonical_labels() {
        let a = FinSetObj::canonical(2);
        assert_eq!(
            BuiltinMonad::Maybe.apply_obj(&a).labels(),
            &["just(0)", "just(1)", "*"]
        );
        assert_eq!(
            BuiltinMonad::Powerset.apply_obj(&a).labels(),
            &["{}", "{0}", "{1}", "{0,1}"]
        );
        assert_eq!(
            BuiltinMonad::NonemptyPowerset.apply_obj(&a).labels(),
            &["{0}", "{1}", "{0,1}"]
        );
    }

    #[test]
    fn all_builtin_monads_pass_their_law_suites() {
        for m in builtin_monads() {
            for check in monad_law_suite(&m, m.size_bound()) {
                assert!(
                    check.ok,
                    "{} law {} failed: {:?}",
                    m.name(),
                    check.law,
                    check.witness
                );
            }
        }
    }

    #[test]
    fn associativity_is_capped_where_the_triple_power_explodes() {
        assert_eq!(assoc_feasible_size(&BuiltinMonad::Powerset, 3), 2);
        assert_eq!(assoc_feasible_size(&BuiltinMonad::NonemptyPowerset, 4), 2);
        assert_eq!(assoc_feasible_size(&BuiltinMonad::Maybe, 4), 4);
        assert_eq!(assoc_feasible_size(&BuiltinMonad::Identity, 4), 4);
    }

    #[test]
    fn the_suite_catches_a_broken_multiplication() {
        struct BrokenMaybe;
        impl FinMonad for BrokenMaybe {
            fn name(&self) -> &'static str {
                "broken-maybe"
            }
            fn size_bound(&self) -> usize {
                3
            }
            fn obj_size(&self, n: u128) -> Option<u128> {
                n.checked_add(1)
            }
            fn apply_obj(&self, a: &FinSetObj) -> FinSetObj {
                BuiltinMonad::Maybe.apply_obj(a)
            }
            fn apply_fn(&self, f: &FinFn) -> FinFn {
                BuiltinMonad::Maybe.apply_fn(f)
            }
            fn unit(&self, n: usize) -> FinFn {
                BuiltinMonad::Maybe.unit(n)
            }
            fn mult(&self, n: usize) -> FinFn {
                // Sends the doubled point to just(0) instead of *.
                let mut table: Vec<usize> = (0..n + 2).map(|i| i.min(n)).collect();
                table[n + 1] = 0;
                FinFn::raw(n + 2, n + 1, table)
            }
        }
        let suite = monad_law_suite(&BrokenMaybe, 2);
        let by_law = |law: &str| suite.iter().find(|c| c.law == law).unwrap().clone();
        assert!(by_law("functor-identity").ok);
        assert!(by_law("unit-left").ok);
        assert!(!by_law("unit-right").ok);
        // Both associativity routes hit the same broken value, so that law
        // still holds here; a separate defect covers it below.
        assert!(by_law("associativity").ok);
    }

    #[test]
    fn the_suite_catches_a_non_associative_multiplication() {
        // Standard maybe, except the multiplication at carrier size 3 swaps
        // two entries; the two associativity routes through mu_T and T mu
        // then disagree at carrier size 2.
        struct SwappedMult;
        impl FinMonad for SwappedMult {
            fn name(&self) -> &'static str {
                "swapped-mult"
            }
            fn size_bound(&self) -> usize {
                2
            }
            fn obj_size(&self, n: u128) -> Option<u128> {
                n.checked_add(1)
            }
            fn apply_obj(&self, a: &FinSetObj) -> FinSetObj {
                BuiltinMonad::Maybe.apply_obj(a)
            }
            fn apply_fn(&self, f: &FinFn) -> FinFn {
                BuiltinMonad::Maybe.apply_fn(f)
            }
            fn unit(&self, n: usize) -> FinFn {
                BuiltinMonad::Maybe.unit(n)
            }
            fn mult(&self, n: usize) -> FinFn {
                let mut table: Vec<usize> = (0..n + 2).map(|i| i.min(n)).collect();
                if n == 3 {
                    table.swap(0, 1);
                }
                FinFn::raw(n + 2, n + 1, table)
            }
        }
        let suite = monad_law_suite(&SwappedMult, 2);
        let by_law = |law: &str| suite.iter().find(|c| c.law == law).unwrap().clone();
        assert!(by_law("unit-left").ok);
        assert!(by_law("unit-right").ok);
        assert!(!by_law("associativity").ok);
    }

    #[test]
    fn monad_names_round_trip() {
        for m in builtin_monads() {
            assert_eq!(BuiltinMonad::from_name(m.name()), Some(m));
        }
        assert_eq!(BuiltinMonad::from_name("list"), None);
    }

    #[test]
    fn empty_carrier_is_handled() {
        for m in builtin_monads() {
            let empty = FinSetObj::canonical(0);
            let ta = m.apply_obj(&empty);
            assert_eq!(ta.len(), m.obj_size(0).unwrap() as usize);
            for check in monad_law_suite(&m, 0) {
                assert!(check.ok, "{}: {}", m.name(), check.law);
            }
        }
    }
}
