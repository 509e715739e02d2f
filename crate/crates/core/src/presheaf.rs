//! The subobject classifier of presheaves over a finite poset.
//!
//! For each element `a` the classifier assigns the set of `a`-cribles: the
//! downward-closed subsets of the principal downset `S_a = {b : b <= a}`.
//! The restriction along `b <= a` sends a crible `S` to `{c in S : c <= b}`,
//! which is just `S` intersected with `S_b`. Everything is materialized as
//! tables; the posets in play are tiny.

use crate::order::{Downset, OrderError, Poset, MAX_POSET_ELEMENTS};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PresheafError {
    #[error("poset has {0} elements, the limit is {MAX_POSET_ELEMENTS}")]
    PosetTooLarge(usize),
    #[error("poset has no greatest element")]
    NoTopElement,
    #[error(transparent)]
    Order(#[from] OrderError),
}

/// The classifier: per-object crible lists plus restriction tables.
#[derive(Debug, Clone)]
pub struct OmegaPresheaf {
    base: Poset,
    /// `at[a]` lists all `a`-cribles in ascending bitset order.
    at: Vec<Vec<Downset>>,
    /// `restrict[a * n + b]`, filled when b <= a, maps indices of `at[a]`
    /// to indices of `at[b]`.
    restrict: Vec<Vec<usize>>,
}

impl OmegaPresheaf {
    pub fn base(&self) -> &Poset {
        &self.base
    }

    /// All `a`-cribles, ascending by bitset value.
    pub fn at(&self, a: usize) -> &[Downset] {
        &self.at[a]
    }

    /// Index of the restriction of `at(a)[i]` inside `at(b)`; requires b <= a.
    pub fn restrict(&self, a: usize, b: usize, i: usize) -> usize {
        assert!(self.base.leq(b, a), "restriction needs b <= a");
        self.restrict[a * self.base.len() + b][i]
    }
}

fn cribles_of(p: &Poset, sa: u32) -> Vec<Downset> {
    let mut out = Vec::new();
    for m in 0..=p.full_mask() {
        if m & !sa == 0 && p.is_downward_closed(m) {
            out.push(Downset::from_bits_unchecked(m));
        }
    }
    out
}

/// Builds the classifier for `p`: crible lists and restriction tables.
pub fn build_omega(p: &Poset) -> Result<OmegaPresheaf, PresheafError> {
    let n = p.len();
    if n > MAX_POSET_ELEMENTS {
        return Err(PresheafError::PosetTooLarge(n));
    }
    let at: Vec<Vec<Downset>> = (0..n).map(|a| cribles_of(p, p.down_mask(a))).collect();
    let mut restrict = vec![Vec::new(); n * n];
    for a in 0..n {
        for b in 0..n {
            if !p.leq(b, a) {
                continue;
            }
            let sb = p.down_mask(b);
            let table: Vec<usize> = at[a]
                .iter()
                .map(|s| {
                    let restricted = s.bits() & sb;
                    at[b]
                        .binary_search_by_key(&restricted, |d| d.bits())
                        .expect("restriction of a crible is a crible")
                })
                .collect();
            restrict[a * n + b] = table;
        }
    }
    let omega = OmegaPresheaf {
        base: p.clone(),
        at,
        restrict,
    };
    debug_assert!(check_functoriality(&omega).is_ok());
    Ok(omega)
}

/// A functoriality failure, for the exhaustive checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FunctorialityError {
    #[error("restriction along {a} <= {a} is not the identity at crible {i}")]
    Identity { a: usize, i: usize },
    #[error("restrictions along {a} -> {b} -> {c} and {a} -> {c} disagree at crible {i}")]
    Composition {
        a: usize,
        b: usize,
        c: usize,
        i: usize,
    },
}

/// Verifies identity and contravariant composition of all restriction tables.
pub fn check_functoriality(omega: &OmegaPresheaf) -> Result<(), FunctorialityError> {
    let p = omega.base();
    let n = p.len();
    for a in 0..n {
        for i in 0..omega.at(a).len() {
            if omega.restrict(a, a, i) != i {
                return Err(FunctorialityError::Identity { a, i });
            }
        }
    }
    for a in 0..n {
        for b in (0..n).filter(|&b| p.leq(b, a)) {
            for c in (0..n).filter(|&c| p.leq(c, b)) {
                for i in 0..omega.at(a).len() {
                    let two_step = omega.restrict(b, c, omega.restrict(a, b, i));
                    if two_step != omega.restrict(a, c, i) {
                        return Err(FunctorialityError::Composition { a, b, c, i });
                    }
                }
            }
        }
    }
    Ok(())
}

/// Counts the truth values `1 => Omega` via representability: when `p` has a
/// greatest element the count is the number of top-cribles.
pub fn count_truth_values(p: &Poset) -> Result<usize, PresheafError> {
    let top = p.top().ok_or(PresheafError::NoTopElement)?;
    let omega = build_omega(p)?;
    Ok(omega.at(top).len())
}

/// Direct enumeration of the natural transformations `1 => Omega`: one crible
/// index per object, compatible with every restriction. Works for any poset,
/// top or no top; serves as the independent oracle for
/// [`count_truth_values`].
pub fn enumerate_global_elements(omega: &OmegaPresheaf) -> Vec<Vec<usize>> {
    let p = omega.base();
    let n = p.len();
    let mut out = Vec::new();
    let mut choice = vec![0usize; n];
    fn compatible(omega: &OmegaPresheaf, choice: &[usize], fixed: usize) -> bool {
        let p = omega.base();
        for other in 0..fixed {
            if p.leq(other, fixed) && omega.restrict(fixed, other, choice[fixed]) != choice[other] {
                return false;
            }
            if p.leq(fixed, other) && omega.restrict(other, fixed, choice[other]) != choice[fixed] {
                return false;
            }
        }
        true
    }
    fn search(
        omega: &OmegaPresheaf,
        choice: &mut Vec<usize>,
        next: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if next == omega.base().len() {
            out.push(choice.clone());
            return;
        }
        for i in 0..omega.at(next).len() {
            choice[next] = i;
            if compatible(omega, choice, next) {
                search(omega, choice, next + 1, out);
            }
        }
    }
    if n == 0 {
        return vec![Vec::new()];
    }
    search(omega, &mut choice, 0, &mut out);
    out
}

/// A subfunctor of the representable presheaf at `a`: a selection of the
/// one-point fibers over `S_a`, closed under restriction (so the selected set
/// is itself an `a`-crible).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubfunctorOfRepresentable {
    pub at: usize,
    pub selected: Downset,
}

/// Brute force over all boolean selections on `S_a`, keeping the ones closed
/// under restriction. The result is in bijection with `at(a)`.
pub fn enumerate_subfunctors(p: &Poset, a: usize) -> Vec<SubfunctorOfRepresentable> {
    let sa = p.down_mask(a);
    let mut out = Vec::new();
    for m in 0..=p.full_mask() {
        if m & !sa != 0 {
            continue;
        }
        // Closed under restriction: selected(b) and c <= b imply selected(c).
        let closed = (0..p.len())
            .filter(|&b| m & (1 << b) != 0)
            .all(|b| p.down_mask(b) & !m == 0);
        if closed {
            out.push(SubfunctorOfRepresentable {
                at: a,
                selected: Downset::from_bits_unchecked(m),
            });
        }
    }
    out
}

/// Sort key reproducing the listing that orders cribles by the size of a
/// largest member (the poset height of that member), ties by bitset value.
/// The empty crible sorts first.
pub fn size_sort_key(p: &Poset, d: Downset) -> (i64, u32) {
    let max_height = d.members().map(|e| p.height(e) as i64).max().unwrap_or(-1);
    (max_height, d.bits())
}
