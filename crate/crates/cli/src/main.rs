//! `tinytopos`: command-line workbench for finite categorical logic.
//!
//! Exit codes: 0 for a positive verdict (valid, accepted, laws hold), 1 for
//! a negative one (countermodel, rejected proof, law violation), 2 for usage
//! or input errors.

mod output;
mod resolve;

use clap::{Parser, Subcommand, ValueEnum};
use output::{envelope, CommandOutput};
use resolve::{load_algebra, load_poset, CliError};
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;
use tinytopos_core::logic::{
    check_proof, check_validity, parse_formula, parse_proof, ProofVerdict, Validity,
};
use tinytopos_core::monad::{
    builtin_morphism, enumerate_algebras, lift_morphism, monad_law_suite, BuiltinMonad, FinMonad,
    FinSetObj,
};
use tinytopos_core::omega_set::{build_omega_self, instance_from_json, validate_instance};
use tinytopos_core::order::{enumerate_downsets, Downset};
use tinytopos_core::presheaf::{build_omega, count_truth_values, size_sort_key};

#[derive(Parser)]
#[command(
    name = "tinytopos",
    version,
    about = "Finite categorical logic workbench"
)]
struct Cli {
    /// Wrap results in the stable JSON envelope
    #[arg(long, global = true)]
    json: bool,
    /// Cap on the number of valuations a validity search may enumerate
    #[arg(long, global = true, default_value_t = tinytopos_core::logic::DEFAULT_BUDGET)]
    budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Subobject classifier of presheaves over a finite poset
    #[command(subcommand)]
    Topos(ToposCmd),
    /// Heyting-valued propositional logic and Hilbert proofs
    #[command(subcommand)]
    Logic(LogicCmd),
    /// Omega-valued sets
    #[command(subcommand)]
    Omega(OmegaCmd),
    /// Monads on finite sets and their algebras
    #[command(subcommand)]
    Monad(MonadCmd),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SortOrder {
    /// Ascending bitset value (the canonical index order)
    Bits,
    /// Ascending size of a largest member, ties by bitset value
    Size,
}

#[derive(Subcommand)]
enum ToposCmd {
    /// Print the cribles of a poset, one per line
    Cribles {
        /// Poset: `powerset:N`, `chain:N`, `diamond`, `vee`, or a JSON file
        #[arg(long)]
        poset: String,
        /// Element label; its cribles instead of the whole poset's downsets
        #[arg(long)]
        at: Option<String>,
        #[arg(long, value_enum, default_value_t = SortOrder::Bits)]
        sort: SortOrder,
    },
    /// Count the truth values 1 => Omega (needs a greatest element)
    TruthValues {
        #[arg(long)]
        poset: String,
    },
}

#[derive(Subcommand)]
enum LogicCmd {
    /// Decide validity of a formula over a finite Heyting algebra
    Valid {
        /// Formula, e.g. "p0 -> (p1 | ~p0)"
        #[arg(long)]
        formula: String,
        /// Algebra: `chain:N` (N-element chain) or a poset spec (its downsets)
        #[arg(long)]
        algebra: String,
    },
    /// Check a Hilbert-style proof file
    Proof {
        #[arg(long)]
        file: PathBuf,
    },
}

#[derive(Subcommand)]
enum OmegaCmd {
    /// Validate an omega-valued set against its laws
    Check {
        /// Algebra spec as for `logic valid`
        #[arg(long)]
        algebra: String,
        /// Instance table file; defaults to the algebra acting on itself
        #[arg(long)]
        instance: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum MonadCmd {
    /// Run the monad law suite
    Check {
        /// One of: identity, maybe, powerset, nonempty-powerset
        #[arg(long)]
        monad: String,
        /// Largest carrier size; defaults to the monad's bound
        #[arg(long)]
        size: Option<usize>,
    },
    /// Lift all algebras on a carrier along a shipped monad morphism
    Lift {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        /// Carrier size
        #[arg(long)]
        carrier: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            use std::io::Write;
            // A consumer like `head` may close the pipe early; that is fine.
            let _ = if cli.json {
                writeln!(stdout, "{}", out.json)
            } else {
                out.human
                    .iter()
                    .try_for_each(|line| writeln!(stdout, "{line}"))
            };
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<CommandOutput, CliError> {
    match &cli.command {
        Command::Topos(cmd) => run_topos(cmd),
        Command::Logic(cmd) => run_logic(cmd, cli.budget),
        Command::Omega(cmd) => run_omega(cmd),
        Command::Monad(cmd) => run_monad(cmd),
    }
}

fn run_topos(cmd: &ToposCmd) -> Result<CommandOutput, CliError> {
    match cmd {
        ToposCmd::Cribles { poset, at, sort } => {
            let p = load_poset(poset)?;
            let mut cribles: Vec<Downset> = match at {
                Some(label) => {
                    let a = p
                        .index_of(label)
                        .ok_or_else(|| CliError::new(format!("unknown element `{label}`")))?;
                    build_omega(&p)?.at(a).to_vec()
                }
                None => enumerate_downsets(&p)?
                    .provenance()
                    .expect("downset algebras carry provenance")
                    .downsets
                    .clone(),
            };
            if *sort == SortOrder::Size {
                cribles.sort_by_key(|&d| size_sort_key(&p, d));
            }
            let human: Vec<String> = cribles.iter().map(|d| d.render(&p)).collect();
            let members: Vec<Vec<&str>> = cribles
                .iter()
                .map(|d| d.members().map(|e| p.label(e)).collect())
                .collect();
            let json = envelope(
                true,
                json!({ "at": at, "count": cribles.len(), "cribles": members }),
                serde_json::Value::Null,
            );
            Ok(CommandOutput {
                code: 0,
                human,
                json,
            })
        }
        ToposCmd::TruthValues { poset } => {
            let p = load_poset(poset)?;
            let count = count_truth_values(&p).map_err(CliError::from_display)?;
            let json = envelope(true, json!({ "count": count }), serde_json::Value::Null);
            Ok(CommandOutput {
                code: 0,
                human: vec![count.to_string()],
                json,
            })
        }
    }
}

fn run_logic(cmd: &LogicCmd, budget: u64) -> Result<CommandOutput, CliError> {
    match cmd {
        LogicCmd::Valid { formula, algebra } => {
            let f = parse_formula(formula).map_err(CliError::from_display)?;
            let h = load_algebra(algebra)?;
            match check_validity(&f, &h, budget).map_err(CliError::from_display)? {
                Validity::Valid => Ok(CommandOutput {
                    code: 0,
                    human: vec!["valid".to_string()],
                    json: envelope(true, json!({ "verdict": "valid" }), serde_json::Value::Null),
                }),
                Validity::Countermodel { assignment, value } => {
                    let mut human = vec!["countermodel".to_string()];
                    let pairs: Vec<[String; 2]> = assignment
                        .iter()
                        .map(|&(var, elem)| [format!("p{var}"), h.label(elem).to_string()])
                        .collect();
                    for [var, val] in &pairs {
                        human.push(format!("{var} = {val}"));
                    }
                    human.push(format!("value = {}", h.label(value)));
                    let json = envelope(
                        false,
                        json!({ "verdict": "countermodel" }),
                        json!({ "assignment": pairs, "value": h.label(value) }),
                    );
                    Ok(CommandOutput {
                        code: 1,
                        human,
                        json,
                    })
                }
            }
        }
        LogicCmd::Proof { file } => {
            let text = std::fs::read_to_string(file)
                .map_err(|e| CliError::new(format!("cannot read {}: {e}", file.display())))?;
            let proof = parse_proof(&text).map_err(CliError::from_display)?;
            let system = proof.system.to_string();
            match check_proof(&proof) {
                ProofVerdict::Accepted => Ok(CommandOutput {
                    code: 0,
                    human: vec!["accepted".to_string()],
                    json: envelope(
                        true,
                        json!({ "verdict": "accepted", "system": system }),
                        serde_json::Value::Null,
                    ),
                }),
                ProofVerdict::Rejected { line, reason } => Ok(CommandOutput {
                    code: 1,
                    human: vec![format!("rejected at line {line}: {reason}")],
                    json: envelope(
                        false,
                        json!({ "verdict": "rejected", "system": system }),
                        json!({ "line": line, "reason": reason.name(), "detail": reason.to_string() }),
                    ),
                }),
            }
        }
    }
}

fn run_omega(cmd: &OmegaCmd) -> Result<CommandOutput, CliError> {
    let OmegaCmd::Check { algebra, instance } = cmd;
    let h = load_algebra(algebra)?;
    let inst = match instance {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::new(format!("cannot read {}: {e}", path.display())))?;
            instance_from_json(h, &text).map_err(CliError::from_display)?
        }
        None => build_omega_self(&h),
    };
    match validate_instance(&inst) {
        Ok(()) => Ok(CommandOutput {
            code: 0,
            human: vec!["ok".to_string()],
            json: envelope(true, json!({ "verdict": "ok" }), serde_json::Value::Null),
        }),
        Err(v) => Ok(CommandOutput {
            code: 1,
            human: vec![format!("violation: {} at {:?}", v.law.name(), v.witness)],
            json: envelope(
                false,
                json!({ "verdict": "violation" }),
                json!({ "law": v.law.name(), "tuple": v.witness }),
            ),
        }),
    }
}

fn run_monad(cmd: &MonadCmd) -> Result<CommandOutput, CliError> {
    match cmd {
        MonadCmd::Check { monad, size } => {
            let m = BuiltinMonad::from_name(monad)
                .ok_or_else(|| CliError::new(format!("unknown monad `{monad}`")))?;
            let size = size.unwrap_or_else(|| m.size_bound());
            if size > m.size_bound() {
                return Err(CliError::new(format!(
                    "size {size} exceeds the tabulation bound {} for `{monad}`",
                    m.size_bound()
                )));
            }
            let suite = monad_law_suite(&m, size);
            let all_ok = suite.iter().all(|c| c.ok);
            let mut human = vec![format!("monad: {}", m.name())];
            for check in &suite {
                let verdict = if check.ok {
                    "ok".to_string()
                } else {
                    format!("violated ({})", check.witness.clone().unwrap_or_default())
                };
                human.push(format!(
                    "{}: {} (size <= {})",
                    check.law, verdict, check.max_size
                ));
            }
            let laws: Vec<serde_json::Value> = suite
                .iter()
                .map(|c| {
                    json!({ "law": c.law, "max_size": c.max_size, "ok": c.ok, "witness": c.witness })
                })
                .collect();
            let json = envelope(
                all_ok,
                json!({ "monad": m.name(), "laws": laws }),
                serde_json::Value::Null,
            );
            Ok(CommandOutput {
                code: u8::from(!all_ok),
                human,
                json,
            })
        }
        MonadCmd::Lift { from, to, carrier } => {
            let source = BuiltinMonad::from_name(from)
                .ok_or_else(|| CliError::new(format!("unknown monad `{from}`")))?;
            let target = BuiltinMonad::from_name(to)
                .ok_or_else(|| CliError::new(format!("unknown monad `{to}`")))?;
            let morphism = builtin_morphism(source, target).ok_or_else(|| {
                CliError::new(format!(
                    "no shipped morphism lifts `{from}`-algebras to `{to}`-algebras"
                ))
            })?;
            let bound = source.size_bound().min(target.size_bound());
            if *carrier > bound {
                return Err(CliError::new(format!(
                    "carrier size {carrier} exceeds the tabulation bound {bound} for this pair"
                )));
            }
            let carrier_obj = FinSetObj::canonical(*carrier);
            let algebras =
                enumerate_algebras(source, &carrier_obj).map_err(CliError::from_display)?;
            let mut human = vec![
                format!("morphism: {} (check: ok)", morphism.name()),
                format!(
                    "source algebras on a {carrier}-element carrier: {}",
                    algebras.len()
                ),
            ];
            let mut entries = Vec::new();
            for (i, alg) in algebras.iter().enumerate() {
                let lifted = lift_morphism(&morphism, alg).map_err(CliError::from_display)?;
                let ta = source.apply_obj(&carrier_obj);
                let t2fa = target.apply_obj(&lifted.carrier);
                human.push(format!("algebra {}:", i + 1));
                let structure_rows: Vec<[String; 2]> = (0..ta.len())
                    .map(|x| {
                        [
                            ta.label(x).to_string(),
                            alg.carrier.label(alg.structure.apply(x)).to_string(),
                        ]
                    })
                    .collect();
                for [input, output] in &structure_rows {
                    human.push(format!("  {input} -> {output}"));
                }
                human.push(format!("lifted {}:", i + 1));
                let lifted_rows: Vec<[String; 2]> = (0..t2fa.len())
                    .map(|x| {
                        [
                            t2fa.label(x).to_string(),
                            lifted.carrier.label(lifted.structure.apply(x)).to_string(),
                        ]
                    })
                    .collect();
                for [input, output] in &lifted_rows {
                    human.push(format!("  {input} -> {output}"));
                }
                entries.push(json!({ "structure": structure_rows, "lifted": lifted_rows }));
            }
            let json = envelope(
                true,
                json!({
                    "morphism": morphism.name(),
                    "carrier": carrier,
                    "count": algebras.len(),
                    "algebras": entries,
                }),
                serde_json::Value::Null,
            );
            Ok(CommandOutput {
                code: 0,
                human,
                json,
            })
        }
    }
}
