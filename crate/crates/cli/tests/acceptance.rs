//! Acceptance suite: one test per criterion, each ending with an explicit
//! `criterion N (...): PASS` line (visible under `--nocapture`).
//!
//! Run with `cargo test -p tinytopos-cli --test acceptance`.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};
use tinytopos_core::logic::{
    check_proof, check_validity, instantiate, parse_proof, Formula, ProofVerdict, System, Validity,
    DEFAULT_BUDGET,
};
use tinytopos_core::monad::{
    algebra_homs, builtin_monads, builtin_morphism, builtin_morphisms, check_algebra,
    check_monad_morphism, enumerate_algebras, is_algebra_hom, lift_hom, lift_morphism,
    monad_law_suite, recover_theta, BuiltinMonad, FinMonad, FinSetObj, MonadMorphism,
};
use tinytopos_core::omega_set::{
    build_omega_self, check_adjunction, point_meet, point_order, sup_bounded, validate_instance,
    OmegaSetInstance,
};
use tinytopos_core::order::{
    check_distributivity, check_meet_monoid, check_rpc_brute_force, enumerate_downsets,
    named_poset, Heyting,
};
use tinytopos_core::presheaf::{build_omega, count_truth_values, enumerate_global_elements};

fn bin(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_tinytopos"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("utf-8"),
    )
}

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn golden(name: &str) -> String {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).expect("golden file exists")
}

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

fn corpus_algebras() -> Vec<(String, Heyting)> {
    let mut out: Vec<(String, Heyting)> = CORPUS_POSETS
        .iter()
        .map(|name| {
            let p = named_poset(name).unwrap().unwrap();
            (
                format!("downsets of {name}"),
                enumerate_downsets(&p).unwrap(),
            )
        })
        .collect();
    out.push(("3-chain algebra".to_string(), Heyting::chain(3).unwrap()));
    out
}

/// The twenty cribles on {1,2,3}, as listed in ascending order of the size
/// of a largest member.
fn expected_cribles() -> Vec<BTreeSet<String>> {
    let raw: [&[&str]; 20] = [
        &[],
        &["{}"],
        &["{}", "{1}"],
        &["{}", "{2}"],
        &["{}", "{3}"],
        &["{}", "{1}", "{2}"],
        &["{}", "{2}", "{3}"],
        &["{}", "{1}", "{3}"],
        &["{}", "{1}", "{2}", "{3}"],
        &["{}", "{1}", "{2}", "{1,2}"],
        &["{}", "{1}", "{2}", "{3}", "{1,2}"],
        &["{}", "{2}", "{3}", "{2,3}"],
        &["{}", "{1}", "{2}", "{3}", "{2,3}"],
        &["{}", "{1}", "{3}", "{1,3}"],
        &["{}", "{1}", "{2}", "{3}", "{1,3}"],
        &["{}", "{1}", "{2}", "{3}", "{1,2}", "{1,3}"],
        &["{}", "{1}", "{2}", "{3}", "{1,2}", "{2,3}"],
        &["{}", "{1}", "{2}", "{3}", "{2,3}", "{1,3}"],
        &["{}", "{1}", "{2}", "{3}", "{1,2}", "{2,3}", "{1,3}"],
        &[
            "{}", "{1}", "{2}", "{3}", "{1,2}", "{2,3}", "{1,3}", "{1,2,3}",
        ],
    ];
    raw.iter()
        .map(|c| c.iter().map(|s| s.to_string()).collect())
        .collect()
}

/// Splits a rendered crible like `{{},{1},{1,2}}` into its member labels.
fn parse_crible_line(line: &str) -> BTreeSet<String> {
    let inner = line
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .unwrap_or_else(|| panic!("not a crible line: {line}"));
    let mut out = BTreeSet::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for ch in inner.chars() {
        match ch {
            '{' => {
                depth += 1;
                cur.push(ch);
            }
            '}' => {
                depth -= 1;
                cur.push(ch);
            }
            ',' if depth == 0 => {
                out.insert(std::mem::take(&mut cur));
            }
            _ => cur.push(ch),
        }
    }
    if !cur.is_empty() {
        out.insert(cur);
    }
    out
}

#[test]
fn criterion_1_crible_count_and_content() {
    let start = Instant::now();
    let (code, stdout) = bin(&["topos", "cribles", "--poset", "powerset:3"]);
    let elapsed = start.elapsed();
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines.len(), 20, "exactly twenty cribles");

    // Equal as sets-of-sets to the documented list.
    let got: BTreeSet<BTreeSet<String>> = lines.iter().map(|l| parse_crible_line(l)).collect();
    let expected: BTreeSet<BTreeSet<String>> = expected_cribles().into_iter().collect();
    assert_eq!(
        got, expected,
        "crible content matches the documented twenty"
    );

    // Golden-file match after canonical sorting.
    let mut sorted_lines: Vec<&str> = lines.clone();
    sorted_lines.sort_unstable();
    let golden_text = golden("cribles_powerset3_bits.txt");
    let mut golden_lines: Vec<&str> = golden_text.lines().collect();
    golden_lines.sort_unstable();
    assert_eq!(
        sorted_lines, golden_lines,
        "golden-file match after sorting"
    );

    assert!(
        elapsed < Duration::from_secs(1),
        "runtime {elapsed:?} under one second"
    );
    println!("criterion 1 (crible count and content): PASS");
}

#[test]
fn criterion_2_truth_value_counts() {
    for (name, expected) in [("powerset:3", 20usize), ("powerset:2", 6), ("chain:1", 2)] {
        let p = named_poset(name).unwrap().unwrap();
        let yoneda = count_truth_values(&p).unwrap();
        let oracle = enumerate_global_elements(&build_omega(&p).unwrap()).len();
        assert_eq!(yoneda, expected, "{name}: representable count");
        assert_eq!(oracle, expected, "{name}: direct enumeration");
        assert_eq!(yoneda, oracle, "{name}: the two paths agree exactly");
    }
    println!("criterion 2 (truth-value counts, oracle vs representable): PASS");
}

#[test]
fn criterion_3_heyting_law_suite() {
    let start = Instant::now();
    for name in CORPUS_POSETS {
        let p = named_poset(name).unwrap().unwrap();
        let h = enumerate_downsets(&p).unwrap();
        check_rpc_brute_force(&h).unwrap_or_else(|v| panic!("{name}: {v}"));
        check_distributivity(&h).unwrap_or_else(|v| panic!("{name}: {v}"));
        check_meet_monoid(&h).unwrap_or_else(|v| panic!("{name}: {v}"));
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(10),
        "runtime {elapsed:?} under ten seconds"
    );
    println!("criterion 3 (exhaustive Heyting law suite): PASS");
}

/// Operations rebuilt from the order matrix alone; the countermodel
/// cross-check must not reuse the precomputed operation tables or the main
/// evaluator.
struct OrderOnlyEval<'h> {
    h: &'h Heyting,
}

impl OrderOnlyEval<'_> {
    fn glb(&self, a: usize, b: usize) -> usize {
        let h = self.h;
        (0..h.size())
            .filter(|&x| h.leq(x, a) && h.leq(x, b))
            .find(|&x| (0..h.size()).all(|y| !(h.leq(y, a) && h.leq(y, b)) || h.leq(y, x)))
            .expect("finite lattice has binary meets")
    }

    fn lub(&self, a: usize, b: usize) -> usize {
        let h = self.h;
        (0..h.size())
            .filter(|&x| h.leq(a, x) && h.leq(b, x))
            .find(|&x| (0..h.size()).all(|y| !(h.leq(a, y) && h.leq(b, y)) || h.leq(x, y)))
            .expect("finite lattice has binary joins")
    }

    fn bottom(&self) -> usize {
        let h = self.h;
        (0..h.size())
            .find(|&x| (0..h.size()).all(|y| h.leq(x, y)))
            .expect("bounded")
    }

    fn top(&self) -> usize {
        let h = self.h;
        (0..h.size())
            .find(|&x| (0..h.size()).all(|y| h.leq(y, x)))
            .expect("bounded")
    }

    fn rpc(&self, a: usize, b: usize) -> usize {
        let h = self.h;
        let candidates: Vec<usize> = (0..h.size())
            .filter(|&x| h.leq(self.glb(a, x), b))
            .collect();
        candidates
            .iter()
            .copied()
            .find(|&x| candidates.iter().all(|&c| h.leq(c, x)))
            .expect("relatively pseudo-complemented")
    }

    fn eval(&self, f: &Formula, assignment: &[(u32, usize)]) -> usize {
        match f {
            Formula::Var(i) => {
                assignment
                    .iter()
                    .find(|&&(v, _)| v == *i)
                    .expect("assigned")
                    .1
            }
            Formula::Neg(x) => self.rpc(self.eval(x, assignment), self.bottom()),
            Formula::And(l, r) => self.glb(self.eval(l, assignment), self.eval(r, assignment)),
            Formula::Or(l, r) => self.lub(self.eval(l, assignment), self.eval(r, assignment)),
            Formula::Imp(l, r) => self.rpc(self.eval(l, assignment), self.eval(r, assignment)),
        }
    }
}

#[test]
fn criterion_4_intuitionistic_soundness_at_finite_scale() {
    let corpus = corpus_algebras();
    let vars = [Formula::var(0), Formula::var(1), Formula::var(2)];

    // The eleven IL schemas are valid everywhere in the corpus.
    for (name, h) in &corpus {
        for schema in 1..=11u8 {
            for a in &vars {
                for b in &vars {
                    for c in &vars {
                        let inst = instantiate(schema, a, b, c);
                        assert_eq!(
                            check_validity(&inst, h, DEFAULT_BUDGET).unwrap(),
                            Validity::Valid,
                            "schema {schema} instance {inst} over {name}"
                        );
                    }
                }
            }
        }
    }

    // Excluded middle, double negation and Peirce's law all fail in the
    // 3-chain and in the twenty-crible algebra; the countermodels found by
    // the checker are re-verified by the order-only evaluator.
    let classics = [
        tinytopos_core::logic::parse_formula("p0 | ~p0").unwrap(),
        tinytopos_core::logic::parse_formula("~~p0 -> p0").unwrap(),
        tinytopos_core::logic::parse_formula("((p0->p1)->p0)->p0").unwrap(),
    ];
    let targets = [
        ("3-chain algebra", Heyting::chain(3).unwrap()),
        (
            "downsets of powerset:3",
            enumerate_downsets(&named_poset("powerset:3").unwrap().unwrap()).unwrap(),
        ),
    ];
    for (name, h) in &targets {
        let independent = OrderOnlyEval { h };
        for f in &classics {
            match check_validity(f, h, DEFAULT_BUDGET).unwrap() {
                Validity::Countermodel { assignment, value } => {
                    let recomputed = independent.eval(f, &assignment);
                    assert_eq!(recomputed, value, "{name}: {f}: evaluators agree");
                    assert_ne!(recomputed, independent.top(), "{name}: {f}: not top");
                }
                Validity::Valid => panic!("{name}: {f} should fail"),
            }
        }
    }

    // All twelve schemas are classical tautologies.
    let two = Heyting::chain(2).unwrap();
    for schema in 1..=12u8 {
        for a in &vars {
            for b in &vars {
                for c in &vars {
                    let inst = instantiate(schema, a, b, c);
                    assert_eq!(
                        check_validity(&inst, &two, DEFAULT_BUDGET).unwrap(),
                        Validity::Valid,
                        "schema {schema} instance {inst} over the two-element algebra"
                    );
                }
            }
        }
    }
    println!("criterion 4 (intuitionistic soundness at finite scale): PASS");
}

#[test]
fn criterion_5_proof_checker() {
    // The three-line modus ponens proof is accepted under IL.
    let (code, stdout) = bin(&["logic", "proof", "--file", &data("mp_chain.proof")]);
    assert_eq!((code, stdout.trim()), (0, "accepted"));

    // The one-line axiom-12 proof: accepted under CL, rejected under IL with
    // the documented reason.
    let (code, stdout) = bin(&["logic", "proof", "--file", &data("ax12_cl.proof")]);
    assert_eq!((code, stdout.trim()), (0, "accepted"));
    let (code, stdout) = bin(&["--json", "logic", "proof", "--file", &data("ax12_il.proof")]);
    assert_eq!(code, 1);
    let value: serde_json::Value = serde_json::from_str(stdout.trim()).unwrap();
    assert_eq!(value["witness"]["reason"], "ForbiddenAxiom12InIL");
    assert_eq!(value["witness"]["line"], 1);

    // Soundness over the accepted-proof corpus: every accepted IL proof has
    // a conclusion valid in every corpus algebra.
    let corpus = corpus_algebras();
    let mut accepted_il = 0;
    for file in [
        "mp_chain.proof",
        "weakening.proof",
        "ax12_cl.proof",
        "ax12_il.proof",
    ] {
        let text = std::fs::read_to_string(data(file)).unwrap();
        let proof = parse_proof(&text).unwrap();
        let verdict = check_proof(&proof);
        if proof.system == System::Il && verdict == ProofVerdict::Accepted {
            accepted_il += 1;
            let conclusion = &proof.lines.last().unwrap().formula;
            for (name, h) in &corpus {
                assert_eq!(
                    check_validity(conclusion, h, DEFAULT_BUDGET).unwrap(),
                    Validity::Valid,
                    "{file}: conclusion {conclusion} over {name}"
                );
            }
        }
    }
    assert_eq!(accepted_il, 2, "the corpus has two accepted IL proofs");
    println!("criterion 5 (Hilbert proof checker): PASS");
}

fn omega_corpus() -> Vec<(String, OmegaSetInstance)> {
    let mut out = vec![(
        "3-chain algebra".to_string(),
        build_omega_self(&Heyting::chain(3).unwrap()),
    )];
    for name in ["powerset:2", "powerset:3"] {
        let p = named_poset(name).unwrap().unwrap();
        out.push((
            format!("downsets of {name}"),
            build_omega_self(&enumerate_downsets(&p).unwrap()),
        ));
    }
    out
}

fn sup_families(x: usize) -> Vec<Vec<usize>> {
    if x <= 8 {
        return (0u32..(1 << x))
            .map(|mask| (0..x).filter(|&i| mask & (1 << i) != 0).collect())
            .collect();
    }
    // All subsets of size <= 2, plus a deterministic seeded sample.
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    for p in 0..x {
        out.push(vec![p]);
        for q in (p + 1)..x {
            out.push(vec![p, q]);
        }
    }
    let mut state = 0x2545f4914f6cdd1du64;
    for _ in 0..200 {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        let mask = (state >> 16) as u32 & ((1u32 << x) - 1);
        out.push((0..x).filter(|&i| mask & (1 << i) != 0).collect());
    }
    out
}

#[test]
fn criterion_6_omega_set_suite() {
    let start = Instant::now();
    for (name, inst) in omega_corpus() {
        let verdict = validate_instance(&inst);
        assert!(verdict.is_ok(), "{name}: {verdict:?}");

        // Characterization agreement on every pair comes with the order
        // matrix; the matrix then drives the remaining checks.
        let x = inst.len();
        let order = point_order(&inst).unwrap_or_else(|e| panic!("{name}: {e}"));
        let leq = |a: usize, b: usize| order[a * x + b];
        let h = inst.algebra().clone();

        for p in 0..x {
            assert!(leq(p, p), "{name}: reflexive at {p}");
            for q in 0..x {
                if p != q && leq(p, q) && leq(q, p) {
                    panic!("{name}: antisymmetry fails at ({p},{q})");
                }
                for r in 0..x {
                    if leq(p, q) && leq(q, r) {
                        assert!(leq(p, r), "{name}: transitivity at ({p},{q},{r})");
                    }
                }
            }
        }

        for alpha in 0..h.size() {
            for beta in 0..h.size() {
                if h.leq(alpha, beta) {
                    for p in 0..x {
                        assert!(
                            leq(inst.act(alpha, p), inst.act(beta, p)),
                            "{name}: action monotone in the algebra argument"
                        );
                    }
                }
            }
        }
        for p in 0..x {
            for q in 0..x {
                if leq(p, q) {
                    for alpha in 0..h.size() {
                        assert!(
                            leq(inst.act(alpha, p), inst.act(alpha, q)),
                            "{name}: action monotone in the point argument"
                        );
                    }
                }
            }
        }

        for p in 0..x {
            for q in 0..x {
                let m = point_meet(&inst, p, q);
                assert!(leq(m, p) && leq(m, q), "{name}: meet is a lower bound");
                for r in 0..x {
                    if leq(r, p) && leq(r, q) {
                        assert!(leq(r, m), "{name}: meet is greatest at ({p},{q},{r})");
                    }
                }
            }
        }

        for p in 0..x {
            check_adjunction(&inst, p).unwrap_or_else(|v| panic!("{name} at {p}: {v}"));
        }

        for ys in sup_families(x) {
            let bounds: Vec<usize> = (0..x).filter(|&p| ys.iter().all(|&z| leq(z, p))).collect();
            let sups: Vec<usize> = bounds
                .iter()
                .map(|&p| sup_bounded(&inst, &ys, p).unwrap())
                .collect();
            if let Some(&sup) = sups.first() {
                assert!(
                    sups.iter().all(|&s| s == sup),
                    "{name}: bound independence for {ys:?}"
                );
                assert!(
                    ys.iter().all(|&z| leq(z, sup)),
                    "{name}: upper bound for {ys:?}"
                );
                assert!(
                    bounds.iter().all(|&b| leq(sup, b)),
                    "{name}: least for {ys:?}"
                );
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(30),
        "runtime {elapsed:?} under thirty seconds"
    );
    println!("criterion 6 (omega-valued set suite): PASS");
}

#[test]
fn criterion_7_monad_suite() {
    let start = Instant::now();

    for m in builtin_monads() {
        for check in monad_law_suite(&m, m.size_bound()) {
            assert!(
                check.ok,
                "{} law {}: {:?}",
                m.name(),
                check.law,
                check.witness
            );
        }
    }

    let algs = enumerate_algebras(BuiltinMonad::Powerset, &FinSetObj::canonical(2)).unwrap();
    assert_eq!(
        algs.len(),
        2,
        "exactly two powerset algebras on two elements"
    );

    let pm = builtin_morphism(BuiltinMonad::Powerset, BuiltinMonad::Maybe).unwrap();
    check_monad_morphism(&pm).unwrap();

    // Every lift of every enumerated algebra is itself an algebra.
    for m in builtin_morphisms() {
        for n in 0..=2usize {
            for alg in enumerate_algebras(m.source(), &FinSetObj::canonical(n)).unwrap() {
                let lifted = lift_morphism(&m, &alg).unwrap();
                check_algebra(&lifted).unwrap_or_else(|v| panic!("{}: {v}", m.name()));
            }
        }
    }

    // Round trip theta -> lifting -> theta, pointwise.
    for m in builtin_morphisms() {
        let bound = m.source().size_bound().min(3);
        for n in 0..=bound {
            let a = FinSetObj::canonical(n);
            let recovered = recover_theta(
                m.source(),
                m.target(),
                m.functor(),
                &mut |free| lift_morphism(&m, free),
                &a,
            )
            .unwrap();
            assert_eq!(
                recovered,
                m.theta(&a),
                "{}: theta round trip at {n}",
                m.name()
            );
        }
    }

    // Round trip lifting -> theta -> lifting on the enumerated corpus.
    for original in [
        builtin_morphism(BuiltinMonad::Powerset, BuiltinMonad::Maybe).unwrap(),
        builtin_morphism(BuiltinMonad::Powerset, BuiltinMonad::NonemptyPowerset).unwrap(),
    ] {
        let source = original.source();
        let target = original.target();
        let functor = original.functor_arc();
        let lift_src = original.clone();
        let rebuilt = MonadMorphism::new(
            "rebuilt",
            source,
            target,
            functor.clone(),
            std::sync::Arc::new(move |a: &FinSetObj| {
                recover_theta(
                    source,
                    target,
                    &*functor,
                    &mut |free| lift_morphism(&lift_src, free),
                    a,
                )
                .expect("recovery from a lawful lifting")
            }),
        );
        for alg in enumerate_algebras(source, &FinSetObj::canonical(2)).unwrap() {
            assert_eq!(
                lift_morphism(&original, &alg).unwrap(),
                lift_morphism(&rebuilt, &alg).unwrap(),
                "{}: lifting round trip",
                original.name()
            );
        }
    }

    // Faithfulness transfer: distinct homomorphisms lift to distinct ones,
    // and lifted homomorphisms are homomorphisms.
    for m in builtin_morphisms() {
        for n in 0..=2usize {
            let algs = enumerate_algebras(m.source(), &FinSetObj::canonical(n)).unwrap();
            for a in &algs {
                for b in &algs {
                    let lifted_a = lift_morphism(&m, a).unwrap();
                    let lifted_b = lift_morphism(&m, b).unwrap();
                    let homs = algebra_homs(a, b);
                    for h in &homs {
                        assert!(
                            is_algebra_hom(&lifted_a, &lifted_b, &lift_hom(&m, h)),
                            "{}: lifted homomorphism",
                            m.name()
                        );
                    }
                    for (i, h1) in homs.iter().enumerate() {
                        for h2 in homs.iter().skip(i + 1) {
                            assert_ne!(lift_hom(&m, h1), lift_hom(&m, h2), "{}", m.name());
                        }
                    }
                }
            }
        }
    }

    // Fullness transfer with surjective theta: the identity morphisms.
    for monad in builtin_monads() {
        let id = MonadMorphism::identity(monad);
        for n in 0..=2usize {
            let algs = enumerate_algebras(monad, &FinSetObj::canonical(n)).unwrap();
            for a in &algs {
                for b in &algs {
                    let lifted_a = lift_morphism(&id, a).unwrap();
                    let lifted_b = lift_morphism(&id, b).unwrap();
                    let downstairs: Vec<_> = algebra_homs(a, b)
                        .into_iter()
                        .map(|h| lift_hom(&id, &h))
                        .collect();
                    for k in algebra_homs(&lifted_a, &lifted_b) {
                        assert!(downstairs.contains(&k), "{}: fullness", monad.name());
                    }
                }
            }
        }
    }

    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(30),
        "runtime {elapsed:?} under thirty seconds"
    );
    println!("criterion 7 (monad suite): PASS");
}

#[test]
fn criterion_8_determinism() {
    let mp_chain = data("mp_chain.proof");
    let commands: Vec<Vec<&str>> = vec![
        vec!["topos", "cribles", "--poset", "powerset:3"],
        vec![
            "topos",
            "cribles",
            "--poset",
            "powerset:3",
            "--sort",
            "size",
        ],
        vec!["topos", "truth-values", "--poset", "powerset:2"],
        vec![
            "logic",
            "valid",
            "--formula",
            "p0 | ~p0",
            "--algebra",
            "powerset:3",
        ],
        vec![
            "--json",
            "logic",
            "valid",
            "--formula",
            "p0 | ~p0",
            "--algebra",
            "powerset:3",
        ],
        vec![
            "logic",
            "valid",
            "--formula",
            "((p0->p1)->p0)->p0",
            "--algebra",
            "chain:3",
        ],
        vec!["logic", "proof", "--file", &mp_chain],
        vec!["omega", "check", "--algebra", "powerset:2"],
        vec!["--json", "omega", "check", "--algebra", "chain:3"],
        vec!["monad", "check", "--monad", "powerset"],
        vec![
            "monad",
            "lift",
            "--from",
            "powerset",
            "--to",
            "maybe",
            "--carrier",
            "2",
        ],
        vec![
            "--json",
            "monad",
            "lift",
            "--from",
            "powerset",
            "--to",
            "nonempty-powerset",
            "--carrier",
            "2",
        ],
    ];
    for args in &commands {
        let first = bin(args);
        let second = bin(args);
        assert_eq!(first, second, "two runs of {args:?} are byte-identical");
    }
    // Spot checks against committed golden files, countermodel included.
    let (_, em) = bin(&[
        "logic",
        "valid",
        "--formula",
        "p0 | ~p0",
        "--algebra",
        "powerset:3",
    ]);
    assert_eq!(em, golden("em_countermodel_powerset3.txt"));
    let (_, cribles) = bin(&[
        "topos",
        "cribles",
        "--poset",
        "powerset:3",
        "--sort",
        "size",
    ]);
    assert_eq!(cribles, golden("cribles_powerset3_size.txt"));
    let (_, lift) = bin(&[
        "monad",
        "lift",
        "--from",
        "powerset",
        "--to",
        "maybe",
        "--carrier",
        "2",
    ]);
    assert_eq!(lift, golden("monad_lift_powerset_maybe_2.txt"));
    println!("criterion 8 (byte-identical reruns and golden files): PASS");
}
