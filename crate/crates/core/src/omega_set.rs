//! Omega-valued sets: the meet monoid of a finite Heyting algebra acting on a
//! carrier that also carries a truth-valued equality `<p=q>`.
//!
//! An instance is validated against six laws (monoid unit and compatibility,
//! well-definedness of the action on the equality, the bound
//! `alpha <= <alpha.p = p>`, symmetry and transitivity of the equality).
//! Once validated, the derived point order, meets, the Galois connection
//! `F_p -| G_p` and the bounded-sup formula all hold; the functions here
//! evaluate them and the tests re-verify exhaustively.

use crate::order::Heyting;
use serde::Deserialize;
use std::fmt;
use thiserror::Error;

/// Cap on the operation count of the triple-nested law checks.
pub const MAX_LAW_OPS: u128 = 10_000_000;

#[derive(Debug, Error)]
pub enum OmegaSetError {
    #[error("action table must have {expected} rows of length {width}, got {got}")]
    ActionShape {
        expected: usize,
        width: usize,
        got: String,
    },
    #[error("eq table must be {expected}x{expected}, got {got}")]
    EqShape { expected: usize, got: String },
    #[error("table entry {index} out of range ({what})")]
    EntryOutOfRange { what: &'static str, index: usize },
    #[error("law checks would need about {ops} operations, the limit is {MAX_LAW_OPS}")]
    InstanceTooLarge { ops: u128 },
    #[error("the three order characterizations disagree at points ({p}, {q}); the instance violates its preconditions")]
    EquivalenceBroken { p: usize, q: usize },
    #[error("point {bound} is not an upper bound: point {witness} is not below it")]
    NotUpperBound { bound: usize, witness: usize },
    #[error("invalid instance file: {0}")]
    BadFile(#[from] serde_json::Error),
}

/// The laws an instance must satisfy (checked in this order by
/// [`validate_instance`]), plus the derived adjunction properties that
/// [`check_adjunction`] verifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OmegaLaw {
    UnitAction,
    CompatAction,
    WellDefined,
    EqualityBound,
    Symmetry,
    Transitivity,
    GaloisConnection,
    AdjunctionUnit,
    AdjunctionCounit,
}

impl OmegaLaw {
    pub fn name(self) -> &'static str {
        match self {
            OmegaLaw::UnitAction => "unit-action",
            OmegaLaw::CompatAction => "compatible-action",
            OmegaLaw::WellDefined => "well-definedness",
            OmegaLaw::EqualityBound => "equality-bound",
            OmegaLaw::Symmetry => "symmetry",
            OmegaLaw::Transitivity => "transitivity",
            OmegaLaw::GaloisConnection => "galois-connection",
            OmegaLaw::AdjunctionUnit => "adjunction-unit",
            OmegaLaw::AdjunctionCounit => "adjunction-counit",
        }
    }
}

/// A law failure with the offending tuple of indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaViolation {
    pub law: OmegaLaw,
    pub witness: Vec<usize>,
}

impl fmt::Display for OmegaViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "law `{}` fails at {:?}", self.law.name(), self.witness)
    }
}

/// A carrier with an action of the algebra's meet monoid and a truth-valued
/// equality. Immutable once built; construction checks only table shapes,
/// [`validate_instance`] checks the laws.
#[derive(Debug, Clone)]
pub struct OmegaSetInstance {
    algebra: Heyting,
    points: Vec<String>,
    /// `action[alpha * len + p]`: the point `alpha . p`.
    action: Vec<usize>,
    /// `eq[p * len + q]`: the algebra element `<p = q>`.
    eq: Vec<usize>,
}

impl OmegaSetInstance {
    pub fn new(
        algebra: Heyting,
        points: Vec<String>,
        action: Vec<usize>,
        eq: Vec<usize>,
    ) -> Result<Self, OmegaSetError> {
        let x = points.len();
        let h = algebra.size();
        if action.len() != h * x {
            return Err(OmegaSetError::ActionShape {
                expected: h,
                width: x,
                got: format!("{} entries", action.len()),
            });
        }
        if eq.len() != x * x {
            return Err(OmegaSetError::EqShape {
                expected: x,
                got: format!("{} entries", eq.len()),
            });
        }
        for &p in &action {
            if p >= x {
                return Err(OmegaSetError::EntryOutOfRange {
                    what: "action value",
                    index: p,
                });
            }
        }
        for &e in &eq {
            if e >= h {
                return Err(OmegaSetError::EntryOutOfRange {
                    what: "eq value",
                    index: e,
                });
            }
        }
        let ops = (h as u128) * (h as u128) * (x as u128);
        let ops = ops
            .max((x as u128).pow(3))
            .max((h as u128) * (x as u128) * (x as u128));
        if ops > MAX_LAW_OPS {
            return Err(OmegaSetError::InstanceTooLarge { ops });
        }
        Ok(OmegaSetInstance {
            algebra,
            points,
            action,
            eq,
        })
    }

    pub fn algebra(&self) -> &Heyting {
        &self.algebra
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point_label(&self, p: usize) -> &str {
        &self.points[p]
    }

    /// The action `alpha . p`.
    pub fn act(&self, alpha: usize, p: usize) -> usize {
        self.action[alpha * self.len() + p]
    }

    /// The truth value `<p = q>`.
    pub fn eq(&self, p: usize, q: usize) -> usize {
        self.eq[p * self.len() + q]
    }
}

#[derive(Deserialize)]
struct InstanceFile {
    carrier: Vec<String>,
    action: Vec<Vec<usize>>,
    eq: Vec<Vec<usize>>,
}

/// Parses the JSON instance format
/// `{"carrier": [...], "action": [[...]], "eq": [[...]]}` where
/// `action[i][j]` is the carrier index of `alpha_i . x_j` and `eq[i][j]` the
/// algebra index of `<x_i = x_j>`, both against the algebra's canonical
/// element order.
pub fn instance_from_json(algebra: Heyting, text: &str) -> Result<OmegaSetInstance, OmegaSetError> {
    let file: InstanceFile = serde_json::from_str(text)?;
    OmegaSetInstance::new(
        algebra,
        file.carrier,
        file.action.into_iter().flatten().collect(),
        file.eq.into_iter().flatten().collect(),
    )
}

/// The canonical instance on `h` itself: the action is meet and
/// `<b = c> = (b => c) meet (c => b)`.
pub fn build_omega_self(h: &Heyting) -> OmegaSetInstance {
    let n = h.size();
    let points = h.labels().to_vec();
    let mut action = vec![0usize; n * n];
    let mut eq = vec![0usize; n * n];
    for a in 0..n {
        for b in 0..n {
            action[a * n + b] = h.meet(a, b);
            eq[a * n + b] = h.meet(h.imp(a, b), h.imp(b, a));
        }
    }
    OmegaSetInstance::new(h.clone(), points, action, eq).expect("self instance is well shaped")
}

/// Checks every law on every tuple, in a fixed order, and reports the first
/// violation with the offending tuple.
pub fn validate_instance(inst: &OmegaSetInstance) -> Result<(), OmegaViolation> {
    let h = &inst.algebra;
    let x = inst.len();
    let top = h.top();
    for p in 0..x {
        if inst.act(top, p) != p {
            return Err(OmegaViolation {
                law: OmegaLaw::UnitAction,
                witness: vec![p],
            });
        }
    }
    for alpha in 0..h.size() {
        for beta in 0..h.size() {
            for p in 0..x {
                if inst.act(h.meet(alpha, beta), p) != inst.act(alpha, inst.act(beta, p)) {
                    return Err(OmegaViolation {
                        law: OmegaLaw::CompatAction,
                        witness: vec![alpha, beta, p],
                    });
                }
            }
        }
    }
    for p in 0..x {
        for q in 0..x {
            let e = inst.eq(p, q);
            if inst.act(e, p) != inst.act(e, q) {
                return Err(OmegaViolation {
                    law: OmegaLaw::WellDefined,
                    witness: vec![p, q],
                });
            }
        }
    }
    for alpha in 0..h.size() {
        for p in 0..x {
            if !h.leq(alpha, inst.eq(inst.act(alpha, p), p)) {
                return Err(OmegaViolation {
                    law: OmegaLaw::EqualityBound,
                    witness: vec![alpha, p],
                });
            }
        }
    }
    // The symmetry axiom states <p=q> <= <q=p>; applied twice it forces
    // equality, which is what gets checked.
    for p in 0..x {
        for q in 0..x {
            if inst.eq(p, q) != inst.eq(q, p) {
                return Err(OmegaViolation {
                    law: OmegaLaw::Symmetry,
                    witness: vec![p, q],
                });
            }
        }
    }
    for p in 0..x {
        for q in 0..x {
            for r in 0..x {
                if !h.leq(h.meet(inst.eq(p, q), inst.eq(q, r)), inst.eq(p, r)) {
                    return Err(OmegaViolation {
                        law: OmegaLaw::Transitivity,
                        witness: vec![p, q, r],
                    });
                }
            }
        }
    }
    Ok(())
}

/// Decides `p <= q` in the point order by evaluating all three equivalent
/// characterizations and insisting they agree:
/// `p = <p=q>.p`, `p = <p=q>.q`, and `p = alpha.q` for some `alpha`.
pub fn leq_points(inst: &OmegaSetInstance, p: usize, q: usize) -> Result<bool, OmegaSetError> {
    let e = inst.eq(p, q);
    let first = inst.act(e, p) == p;
    let second = inst.act(e, q) == p;
    let third = (0..inst.algebra.size()).any(|alpha| inst.act(alpha, q) == p);
    if first != second || second != third {
        return Err(OmegaSetError::EquivalenceBroken { p, q });
    }
    Ok(first)
}

/// The whole point-order matrix (`out[p * len + q]` iff p <= q), with the
/// characterization agreement verified on every pair.
pub fn point_order(inst: &OmegaSetInstance) -> Result<Vec<bool>, OmegaSetError> {
    let x = inst.len();
    let mut out = vec![false; x * x];
    for p in 0..x {
        for q in 0..x {
            out[p * x + q] = leq_points(inst, p, q)?;
        }
    }
    Ok(out)
}

/// The greatest lower bound `<p=q>.p` of two points.
pub fn point_meet(inst: &OmegaSetInstance, p: usize, q: usize) -> usize {
    inst.act(inst.eq(p, q), p)
}

/// The truth value `<p <= q>`, read as `<p = p meet q>`.
pub fn leq_truth(inst: &OmegaSetInstance, p: usize, q: usize) -> usize {
    inst.eq(p, point_meet(inst, p, q))
}

/// Verifies the Galois connection at `p`: `F_p(alpha) = alpha.p` is left
/// adjoint to `G_p(q) = <p <= q>`, plus the unit and counit inequalities.
///
/// Panics if the instance was not validated (the order characterizations
/// disagree).
pub fn check_adjunction(inst: &OmegaSetInstance, p: usize) -> Result<(), OmegaViolation> {
    let h = &inst.algebra;
    let order = point_order(inst).expect("instance must be validated first");
    let x = inst.len();
    let point_leq = |a: usize, b: usize| order[a * x + b];
    for alpha in 0..h.size() {
        let fp = inst.act(alpha, p);
        for q in 0..x {
            let lhs = point_leq(fp, q);
            let rhs = h.leq(alpha, leq_truth(inst, p, q));
            if lhs != rhs {
                return Err(OmegaViolation {
                    law: OmegaLaw::GaloisConnection,
                    witness: vec![p, alpha, q],
                });
            }
        }
        // Unit: alpha <= G_p(F_p(alpha)).
        if !h.leq(alpha, leq_truth(inst, p, fp)) {
            return Err(OmegaViolation {
                law: OmegaLaw::AdjunctionUnit,
                witness: vec![p, alpha],
            });
        }
    }
    // Counit: F_p(G_p(q)) <= q.
    for q in 0..x {
        if !point_leq(inst.act(leq_truth(inst, p, q), p), q) {
            return Err(OmegaViolation {
                law: OmegaLaw::AdjunctionCounit,
                witness: vec![p, q],
            });
        }
    }
    Ok(())
}

/// Supremum of a bounded subset: `sup Y = <p in Y>.p` where `p` is any upper
/// bound of `Y` and `<p in Y>` is the join of `<z=p>` over `z in Y` (the
/// empty join being bottom).
pub fn sup_bounded(
    inst: &OmegaSetInstance,
    ys: &[usize],
    p: usize,
) -> Result<usize, OmegaSetError> {
    for &z in ys {
        if !leq_points(inst, z, p)? {
            return Err(OmegaSetError::NotUpperBound {
                bound: p,
                witness: z,
            });
        }
    }
    let h = &inst.algebra;
    let membership = ys
        .iter()
        .fold(h.bot(), |acc, &z| h.join(acc, inst.eq(z, p)));
    Ok(inst.act(membership, p))
}
