//! Finite posets and finite Heyting algebras.
//!
//! A [`Poset`] is a finite carrier with a reflexive, transitive, antisymmetric
//! order relation stored as a dense boolean matrix. Downward-closed subsets
//! ([`Downset`]) are bitsets over element indices; [`enumerate_downsets`]
//! collects all of them into a [`Heyting`] algebra ordered by inclusion, with
//! meet = intersection, join = union and the relative pseudo-complement
//! computed pointwise.

use serde::Deserialize;
use std::collections::HashMap;
use std::fmt;
use thiserror::Error;

/// Hard limit on poset size so downset enumeration stays at most 2^16 subsets.
pub const MAX_POSET_ELEMENTS: usize = 16;

/// Hard limit on the number of downsets a generated algebra may have; keeps
/// the dense operation tables (size^2 entries each) small.
pub const MAX_ALGEBRA_ELEMENTS: usize = 1024;

#[derive(Debug, Error)]
pub enum OrderError {
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    #[error("order relation has a cycle through `{0}` and `{1}`")]
    CycleDetected(String, String),
    #[error("poset has {0} elements, the limit is {MAX_POSET_ELEMENTS}")]
    TooManyElements(usize),
    #[error("downset lattice has {0} elements, the limit is {MAX_ALGEBRA_ELEMENTS}")]
    TooManyDownsets(usize),
    #[error("element index {index} out of range for algebra of size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("a chain needs at least one element")]
    EmptyChain,
    #[error("invalid poset spec `{0}`")]
    BadSpec(String),
    #[error("invalid poset file: {0}")]
    BadFile(#[from] serde_json::Error),
    #[error("bitset {0:#x} is not downward closed")]
    NotDownwardClosed(u32),
}

/// A finite partially ordered set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<String>,
    /// Dense matrix, `leq[a * n + b]` iff a <= b.
    leq: Vec<bool>,
    /// `down_masks[e]` is the principal downset {q : q <= e} as a bitset.
    down_masks: Vec<u32>,
}

#[derive(Deserialize)]
struct PosetFile {
    elements: Vec<String>,
    #[serde(default)]
    leq: Vec<(String, String)>,
}

impl Poset {
    /// Builds a poset from labels and order pairs `(a, b)` meaning a <= b.
    ///
    /// The pairs may be cover relations or any superset of them: the
    /// reflexive-transitive closure is always computed. Closures that violate
    /// antisymmetry are rejected with [`OrderError::CycleDetected`].
    pub fn new(labels: Vec<String>, pairs: &[(String, String)]) -> Result<Self, OrderError> {
        let mut index: HashMap<&str, usize> = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.as_str(), i).is_some() {
                return Err(OrderError::DuplicateLabel(l.clone()));
            }
        }
        let mut index_pairs = Vec::with_capacity(pairs.len());
        for (a, b) in pairs {
            let ia = *index
                .get(a.as_str())
                .ok_or_else(|| OrderError::UnknownLabel(a.clone()))?;
            let ib = *index
                .get(b.as_str())
                .ok_or_else(|| OrderError::UnknownLabel(b.clone()))?;
            index_pairs.push((ia, ib));
        }
        Self::from_index_pairs(labels, &index_pairs)
    }

    fn from_index_pairs(labels: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self, OrderError> {
        let n = labels.len();
        if n > MAX_POSET_ELEMENTS {
            return Err(OrderError::TooManyElements(n));
        }
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for &(a, b) in pairs {
            leq[a * n + b] = true;
        }
        // Warshall closure.
        for k in 0..n {
            for a in 0..n {
                if leq[a * n + k] {
                    for b in 0..n {
                        if leq[k * n + b] {
                            leq[a * n + b] = true;
                        }
                    }
                }
            }
        }
        for a in 0..n {
            for b in (a + 1)..n {
                if leq[a * n + b] && leq[b * n + a] {
                    return Err(OrderError::CycleDetected(
                        labels[a].clone(),
                        labels[b].clone(),
                    ));
                }
            }
        }
        let down_masks = (0..n)
            .map(|e| {
                (0..n)
                    .filter(|&q| leq[q * n + e])
                    .fold(0u32, |m, q| m | (1 << q))
            })
            .collect();
        Ok(Poset {
            labels,
            leq,
            down_masks,
        })
    }

    /// Parses the JSON poset format `{"elements": [...], "leq": [[a,b], ...]}`.
    pub fn from_json(text: &str) -> Result<Self, OrderError> {
        let file: PosetFile = serde_json::from_str(text)?;
        Self::new(file.elements, &file.leq)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.len() + b]
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// The principal downset {q : q <= e} as a bitset.
    pub fn down_mask(&self, e: usize) -> u32 {
        self.down_masks[e]
    }

    /// Full-carrier bitset.
    pub fn full_mask(&self) -> u32 {
        if self.is_empty() {
            0
        } else {
            (1u32 << self.len()) - 1
        }
    }

    /// The greatest element, if one exists.
    pub fn top(&self) -> Option<usize> {
        (0..self.len()).find(|&t| (0..self.len()).all(|a| self.leq(a, t)))
    }

    /// Length in edges of a longest chain ending at `e` (minimal elements get 0).
    pub fn height(&self, e: usize) -> usize {
        (0..self.len())
            .filter(|&q| q != e && self.leq(q, e))
            .map(|q| self.height(q) + 1)
            .max()
            .unwrap_or(0)
    }

    /// Whether a bitset is downward closed.
    pub fn is_downward_closed(&self, mask: u32) -> bool {
        (0..self.len()).all(|e| mask & (1 << e) == 0 || self.down_masks[e] & !mask == 0)
    }

    /// Induced sub-poset on the elements of `mask`, together with the map from
    /// new indices back to the original ones (ascending).
    pub fn restrict(&self, mask: u32) -> (Poset, Vec<usize>) {
        let old: Vec<usize> = (0..self.len()).filter(|&e| mask & (1 << e) != 0).collect();
        let labels: Vec<String> = old.iter().map(|&e| self.labels[e].clone()).collect();
        let pairs: Vec<(usize, usize)> = old
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| {
                old.iter()
                    .enumerate()
                    .filter(move |&(_, &b)| self.leq(a, b))
                    .map(move |(j, _)| (i, j))
            })
            .collect();
        let sub = Poset::from_index_pairs(labels, &pairs).expect("induced order is a poset");
        (sub, old)
    }
}

/// A downward-closed subset of a poset, as a bitset over element indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Downset(u32);

impl Downset {
    pub fn new(bits: u32, poset: &Poset) -> Result<Self, OrderError> {
        if poset.is_downward_closed(bits) {
            Ok(Downset(bits))
        } else {
            Err(OrderError::NotDownwardClosed(bits))
        }
    }

    pub(crate) fn from_bits_unchecked(bits: u32) -> Self {
        Downset(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, e: usize) -> bool {
        self.0 & (1 << e) != 0
    }

    pub fn members(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..32usize).filter(move |e| bits & (1 << e) != 0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Renders the downset as `{label,label,...}` in element-index order.
    pub fn render(self, poset: &Poset) -> String {
        let mut out = String::from("{");
        let mut first = true;
        for e in self.members() {
            if !first {
                out.push(',');
            }
            out.push_str(poset.label(e));
            first = false;
        }
        out.push('}');
        out
    }
}

/// Where a Heyting algebra's elements came from, when generated from a poset.
#[derive(Debug, Clone)]
pub struct Provenance {
    pub poset: Poset,
    pub downsets: Vec<Downset>,
}

/// A finite Heyting algebra with tabulated operations.
///
/// `(leq, meet, join, bot, top)` always form a bounded distributive lattice
/// and `imp(a, b)` is the greatest `x` with `meet(a, x) <= b`; constructors
/// establish this and the law-check functions below re-verify it by brute
/// force.
#[derive(Debug, Clone)]
pub struct Heyting {
    size: usize,
    leq: Vec<bool>,
    meet: Vec<usize>,
    join: Vec<usize>,
    imp: Vec<usize>,
    bot: usize,
    top: usize,
    labels: Vec<String>,
    provenance: Option<Provenance>,
}

impl Heyting {
    /// The chain algebra 0 < 1 < ... < n-1 (meet = min, join = max).
    pub fn chain(n: usize) -> Result<Self, OrderError> {
        if n == 0 {
            return Err(OrderError::EmptyChain);
        }
        if n > MAX_ALGEBRA_ELEMENTS {
            return Err(OrderError::TooManyDownsets(n));
        }
        let mut leq = vec![false; n * n];
        let mut meet = vec![0usize; n * n];
        let mut join = vec![0usize; n * n];
        let mut imp = vec![0usize; n * n];
        for a in 0..n {
            for b in 0..n {
                leq[a * n + b] = a <= b;
                meet[a * n + b] = a.min(b);
                join[a * n + b] = a.max(b);
                imp[a * n + b] = if a <= b { n - 1 } else { b };
            }
        }
        let h = Heyting {
            size: n,
            leq,
            meet,
            join,
            imp,
            bot: 0,
            top: n - 1,
            labels: (0..n).map(|i| i.to_string()).collect(),
            provenance: None,
        };
        debug_assert!(validate(&h).is_ok());
        Ok(h)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.size + b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.size + b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.size + b]
    }

    /// The relative pseudo-complement: the greatest `x` with `meet(a, x) <= b`.
    pub fn imp(&self, a: usize, b: usize) -> usize {
        self.imp[a * self.size + b]
    }

    /// Bounds-checked [`imp`](Self::imp).
    pub fn try_imp(&self, a: usize, b: usize) -> Result<usize, OrderError> {
        for index in [a, b] {
            if index >= self.size {
                return Err(OrderError::IndexOutOfRange {
                    index,
                    size: self.size,
                });
            }
        }
        Ok(self.imp(a, b))
    }

    /// Pseudo-complement `imp(a, bot)`.
    pub fn neg(&self, a: usize) -> usize {
        self.imp(a, self.bot)
    }

    pub fn bot(&self) -> usize {
        self.bot
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn provenance(&self) -> Option<&Provenance> {
        self.provenance.as_ref()
    }
}

impl fmt::Display for Heyting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Heyting algebra of size {}", self.size)
    }
}

/// The lattice of all downsets of `p`, ordered by inclusion.
///
/// Elements are indexed in ascending numeric bitset order, so indexing is
/// deterministic; `bot` is the empty downset and `top` the whole carrier.
pub fn enumerate_downsets(p: &Poset) -> Result<Heyting, OrderError> {
    if p.len() > MAX_POSET_ELEMENTS {
        return Err(OrderError::TooManyElements(p.len()));
    }
    let full = p.full_mask();
    let mut masks: Vec<u32> = Vec::new();
    for m in 0..=full {
        if p.is_downward_closed(m) {
            masks.push(m);
        }
    }
    if masks.len() > MAX_ALGEBRA_ELEMENTS {
        return Err(OrderError::TooManyDownsets(masks.len()));
    }
    let size = masks.len();
    let idx = |m: u32| masks.binary_search(&m).expect("closed under the operation");

    // Pointwise closure formula for the relative pseudo-complement:
    // e is in imp(A, B) iff every q <= e that lies in A also lies in B.
    let imp_mask = |a: u32, b: u32| -> u32 {
        (0..p.len())
            .filter(|&e| p.down_mask(e) & a & !b == 0)
            .fold(0u32, |m, e| m | (1 << e))
    };

    let mut leq = vec![false; size * size];
    let mut meet = vec![0usize; size * size];
    let mut join = vec![0usize; size * size];
    let mut imp = vec![0usize; size * size];
    for (i, &ma) in masks.iter().enumerate() {
        for (j, &mb) in masks.iter().enumerate() {
            leq[i * size + j] = ma & !mb == 0;
            meet[i * size + j] = idx(ma & mb);
            join[i * size + j] = idx(ma | mb);
            imp[i * size + j] = idx(imp_mask(ma, mb));
        }
    }
    let downsets: Vec<Downset> = masks
        .iter()
        .map(|&m| Downset::from_bits_unchecked(m))
        .collect();
    let labels = downsets.iter().map(|d| d.render(p)).collect();
    let h = Heyting {
        size,
        leq,
        meet,
        join,
        imp,
        bot: 0,
        top: size - 1,
        labels,
        provenance: Some(Provenance {
            poset: p.clone(),
            downsets,
        }),
    };
    debug_assert!(check_rpc_brute_force(&h).is_ok());
    Ok(h)
}

/// `None` when the algebra is Boolean, otherwise the first element `a`
/// (ascending) with `join(a, neg(a)) != top`.
pub fn boolean_witness(h: &Heyting) -> Option<usize> {
    (0..h.size()).find(|&a| h.join(a, h.neg(a)) != h.top())
}

pub fn is_boolean(h: &Heyting) -> bool {
    boolean_witness(h).is_none()
}

/// A failed algebra law, with the offending element tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawViolation {
    pub law: &'static str,
    pub witness: Vec<usize>,
}

impl fmt::Display for LawViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "law `{}` fails at {:?}", self.law, self.witness)
    }
}

/// Checks `imp(a, b)` against the brute-force greatest `x` with
/// `meet(a, x) <= b`, for every pair.
pub fn check_rpc_brute_force(h: &Heyting) -> Result<(), LawViolation> {
    for a in 0..h.size() {
        for b in 0..h.size() {
            let candidates: Vec<usize> =
                (0..h.size()).filter(|&x| h.leq(h.meet(a, x), b)).collect();
            let greatest = candidates
                .iter()
                .copied()
                .find(|&x| candidates.iter().all(|&c| h.leq(c, x)));
            match greatest {
                Some(g) if g == h.imp(a, b) => {}
                _ => {
                    return Err(LawViolation {
                        law: "rpc-greatest",
                        witness: vec![a, b],
                    });
                }
            }
        }
    }
    Ok(())
}

/// meet distributes over join, exhaustively.
pub fn check_distributivity(h: &Heyting) -> Result<(), LawViolation> {
    for a in 0..h.size() {
        for b in 0..h.size() {
            for c in 0..h.size() {
                if h.meet(a, h.join(b, c)) != h.join(h.meet(a, b), h.meet(a, c)) {
                    return Err(LawViolation {
                        law: "distributivity",
                        witness: vec![a, b, c],
                    });
                }
            }
        }
    }
    Ok(())
}

/// meet is associative, commutative, idempotent, with unit `top`.
pub fn check_meet_monoid(h: &Heyting) -> Result<(), LawViolation> {
    for a in 0..h.size() {
        if h.meet(h.top(), a) != a {
            return Err(LawViolation {
                law: "meet-unit",
                witness: vec![a],
            });
        }
        if h.meet(a, a) != a {
            return Err(LawViolation {
                law: "meet-idempotent",
                witness: vec![a],
            });
        }
        for b in 0..h.size() {
            if h.meet(a, b) != h.meet(b, a) {
                return Err(LawViolation {
                    law: "meet-commutative",
                    witness: vec![a, b],
                });
            }
            for c in 0..h.size() {
                if h.meet(h.meet(a, b), c) != h.meet(a, h.meet(b, c)) {
                    return Err(LawViolation {
                        law: "meet-associative",
                        witness: vec![a, b, c],
                    });
                }
            }
        }
    }
    Ok(())
}

/// Partial-order axioms, glb/lub laws for meet/join, and the bounds.
pub fn check_bounded_lattice(h: &Heyting) -> Result<(), LawViolation> {
    let n = h.size();
    for a in 0..n {
        if !h.leq(a, a) {
            return Err(LawViolation {
                law: "reflexive",
                witness: vec![a],
            });
        }
        if !h.leq(h.bot(), a) || !h.leq(a, h.top()) {
            return Err(LawViolation {
                law: "bounds",
                witness: vec![a],
            });
        }
        for b in 0..n {
            if a != b && h.leq(a, b) && h.leq(b, a) {
                return Err(LawViolation {
                    law: "antisymmetric",
                    witness: vec![a, b],
                });
            }
            let m = h.meet(a, b);
            if !h.leq(m, a) || !h.leq(m, b) {
                return Err(LawViolation {
                    law: "meet-lower-bound",
                    witness: vec![a, b],
                });
            }
            let j = h.join(a, b);
            if !h.leq(a, j) || !h.leq(b, j) {
                return Err(LawViolation {
                    law: "join-upper-bound",
                    witness: vec![a, b],
                });
            }
            for c in 0..n {
                if h.leq(a, b) && h.leq(b, c) && !h.leq(a, c) {
                    return Err(LawViolation {
                        law: "transitive",
                        witness: vec![a, b, c],
                    });
                }
                if h.leq(c, a) && h.leq(c, b) && !h.leq(c, m) {
                    return Err(LawViolation {
                        law: "meet-greatest",
                        witness: vec![a, b, c],
                    });
                }
                if h.leq(a, c) && h.leq(b, c) && !h.leq(j, c) {
                    return Err(LawViolation {
                        law: "join-least",
                        witness: vec![a, b, c],
                    });
                }
            }
        }
    }
    Ok(())
}

/// Runs every algebra law check.
pub fn validate(h: &Heyting) -> Result<(), LawViolation> {
    check_bounded_lattice(h)?;
    check_distributivity(h)?;
    check_meet_monoid(h)?;
    check_rpc_brute_force(h)?;
    Ok(())
}

fn powerset_poset(n: usize) -> Poset {
    let count = 1usize << n;
    let label = |m: usize| {
        let members: Vec<String> = (0..n)
            .filter(|&k| m & (1 << k) != 0)
            .map(|k| (k + 1).to_string())
            .collect();
        format!("{{{}}}", members.join(","))
    };
    let labels: Vec<String> = (0..count).map(label).collect();
    let pairs: Vec<(usize, usize)> = (0..count)
        .flat_map(|a| {
            (0..count)
                .filter(move |&b| a & !b == 0)
                .map(move |b| (a, b))
        })
        .collect();
    Poset::from_index_pairs(labels, &pairs).expect("inclusion is a partial order")
}

/// Resolves the built-in poset names:
/// `powerset:N` (N in 1..=3), `chain:N` (N >= 1), `diamond`, `vee`.
///
/// Returns `Ok(None)` when the spec is not a built-in name.
pub fn named_poset(spec: &str) -> Result<Option<Poset>, OrderError> {
    if let Some(ns) = spec.strip_prefix("powerset:") {
        let n: usize = ns
            .parse()
            .map_err(|_| OrderError::BadSpec(spec.to_string()))?;
        if !(1..=3).contains(&n) {
            return Err(OrderError::BadSpec(spec.to_string()));
        }
        return Ok(Some(powerset_poset(n)));
    }
    if let Some(ns) = spec.strip_prefix("chain:") {
        let n: usize = ns
            .parse()
            .map_err(|_| OrderError::BadSpec(spec.to_string()))?;
        if n == 0 {
            return Err(OrderError::BadSpec(spec.to_string()));
        }
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let pairs: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        return Poset::from_index_pairs(labels, &pairs).map(Some);
    }
    match spec {
        "diamond" => {
            let labels = ["0", "a", "b", "1"].map(String::from).to_vec();
            let pairs = [(0, 1), (0, 2), (1, 3), (2, 3)];
            Poset::from_index_pairs(labels, &pairs).map(Some)
        }
        "vee" => {
            let labels = ["0", "a", "b"].map(String::from).to_vec();
            let pairs = [(0, 1), (0, 2)];
            Poset::from_index_pairs(labels, &pairs).map(Some)
        }
        _ => Ok(None),
    }
}

/// Resolves an algebra spec: `chain:N` is the N-element chain algebra, any
/// built-in poset name is the downset algebra of that poset.
///
/// Returns `Ok(None)` when the spec names neither, so callers can fall back
/// to reading a poset file.
pub fn algebra_from_spec(spec: &str) -> Result<Option<Heyting>, OrderError> {
    if let Some(ns) = spec.strip_prefix("chain:") {
        let n: usize = ns
            .parse()
            .map_err(|_| OrderError::BadSpec(spec.to_string()))?;
        if n == 0 {
            return Err(OrderError::BadSpec(spec.to_string()));
        }
        return Heyting::chain(n).map(Some);
    }
    match named_poset(spec)? {
        Some(p) => enumerate_downsets(&p).map(Some),
        None => Ok(None),
    }
}
