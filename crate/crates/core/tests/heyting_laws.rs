//! Exhaustive algebra-law suite over the standard poset corpus.

use tinytopos_core::order::{
    algebra_from_spec, boolean_witness, check_bounded_lattice, check_distributivity,
    check_meet_monoid, check_rpc_brute_force, enumerate_downsets, is_boolean, named_poset, Heyting,
};

const CORPUS_POSETS: [&str; 9] = [
    "chain:1",
    "chain:2",
    "chain:3",
    "chain:4",
    "powerset:1",
    "powerset:2",
    "powerset:3",
    "diamond",
    "vee",
];

fn corpus() -> Vec<(String, Heyting)> {
    CORPUS_POSETS
        .iter()
        .map(|name| {
            let p = named_poset(name).unwrap().unwrap();
            (name.to_string(), enumerate_downsets(&p).unwrap())
        })
        .collect()
}

#[test]
fn rpc_matches_brute_force_on_the_whole_corpus() {
    for (name, h) in corpus() {
        check_rpc_brute_force(&h).unwrap_or_else(|v| panic!("{name}: {v}"));
    }
}

#[test]
fn downset_lattices_are_distributive() {
    for (name, h) in corpus() {
        check_distributivity(&h).unwrap_or_else(|v| panic!("{name}: {v}"));
    }
}

#[test]
fn meet_monoid_laws_hold() {
    for (name, h) in corpus() {
        check_meet_monoid(&h).unwrap_or_else(|v| panic!("{name}: {v}"));
    }
}

#[test]
fn bounded_lattice_axioms_hold() {
    for (name, h) in corpus() {
        check_bounded_lattice(&h).unwrap_or_else(|v| panic!("{name}: {v}"));
    }
}

#[test]
fn chain_algebras_pass_the_same_suite() {
    for n in 1..=5 {
        let h = Heyting::chain(n).unwrap();
        check_rpc_brute_force(&h).unwrap();
        check_distributivity(&h).unwrap();
        check_meet_monoid(&h).unwrap();
        check_bounded_lattice(&h).unwrap();
    }
}

#[test]
fn boolean_exactly_when_double_negation_is_the_identity() {
    for (name, h) in corpus() {
        let dn = (0..h.size()).all(|a| h.neg(h.neg(a)) == a);
        assert_eq!(is_boolean(&h), dn, "{name}");
        match boolean_witness(&h) {
            None => assert!(dn),
            Some(w) => assert_ne!(h.join(w, h.neg(w)), h.top(), "{name} witness {w}"),
        }
    }
}

#[test]
fn only_the_boolean_corpus_members_are_boolean() {
    // Downsets of the one-element poset give the two-element algebra; every
    // other corpus poset has a non-complemented downset.
    for (name, h) in corpus() {
        let expected = name == "chain:1";
        assert_eq!(is_boolean(&h), expected, "{name}");
    }
}

#[test]
fn algebra_specs_resolve_to_corpus_members() {
    assert_eq!(algebra_from_spec("chain:3").unwrap().unwrap().size(), 3);
    assert_eq!(algebra_from_spec("powerset:2").unwrap().unwrap().size(), 6);
    assert_eq!(algebra_from_spec("vee").unwrap().unwrap().size(), 5);
    assert_eq!(algebra_from_spec("diamond").unwrap().unwrap().size(), 6);
}
