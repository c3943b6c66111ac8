use std::error::Error;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use serde::Serialize;
use serde_json::json;

use subres::calculi::{corpus_entry, deduction_transform, proof_corpus, Proof};
use subres::classes::{check, ClassTag};
use subres::enumerate::{enumerate_class, size_cap};
use subres::filters::{verify_representation, FilterKind};
use subres::fixtures::{algebra_fixture, describe, expectations, FIXTURE_NAMES};
use subres::io::{algebra_from_json, AlgebraDoc, CountermodelDoc, ProofScript};
use subres::pair::{build_implication, build_srs_pair, AlgebraPair};
use subres::semantics::{entails, find_countermodel, fmp_shrink_sha, fmp_shrink_srl, fmp_shrink_srlbs, Entailment, Shrunk};
use subres::suite::{run, CRITERIA};
use subres::{ElemSet, FiniteAlgebra, FiniteLattice, FinitePoset, Formula, Limits};

/// Enumeration never goes beyond this many elements, whatever --max-size says.
const HARD_CAP: usize = 7;

#[derive(Parser)]
#[command(name = "subres", version, about = "Finite models and proof checking for subresiduated lattices")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest carrier to enumerate.
    #[arg(long, global = true)]
    max_size: Option<usize>,
    /// Seed for randomized sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Source {
    /// A built-in algebra (see `fixtures list`).
    #[arg(long, conflicts_with = "algebra")]
    fixture: Option<String>,
    /// An algebra JSON file.
    #[arg(long)]
    algebra: Option<PathBuf>,
}

impl Source {
    fn load(&self) -> Result<(String, FiniteAlgebra), Box<dyn Error>> {
        match (&self.fixture, &self.algebra) {
            (Some(name), _) => {
                let a = algebra_fixture(name).ok_or_else(|| format!("unknown fixture `{name}`"))?;
                Ok((name.clone(), a))
            }
            (None, Some(path)) => Ok((path.display().to_string(), algebra_from_json(&fs::read_to_string(path)?)?)),
            (None, None) => Err("give --fixture NAME or --algebra FILE".into()),
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Check class membership; exits 1 on non-membership.
    Check {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        class: ClassTag,
        /// Succeed exactly when the algebra is NOT a member.
        #[arg(long)]
        expect_fail: bool,
    },
    /// Build `a → b = max{d ∈ D : d ∧ a ≤ b}` from a lattice and `D`.
    BuildPair {
        /// JSON with the lattice (`leq`, or `meet` and `join`) and `designated`.
        #[arg(long, conflicts_with_all = ["size", "leq", "designated"])]
        file: Option<PathBuf>,
        /// Carrier size; elements are `0..size`.
        #[arg(long)]
        size: Option<usize>,
        /// Order pairs, e.g. `0<1,1<2`.
        #[arg(long)]
        leq: Option<String>,
        /// Elements of D, e.g. `0,2`.
        #[arg(long)]
        designated: Option<String>,
        /// Only require D to be meet-closed and drop the join.
        #[arg(long)]
        srs: bool,
    },
    /// Embed an algebra into the upsets of its filters and verify the embedding.
    Represent {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value = "implicative")]
        kind: FilterKind,
    },
    /// Enumerate class members of one size, up to isomorphism.
    Enumerate {
        #[arg(long)]
        class: ClassTag,
        #[arg(long)]
        size: usize,
        /// Print the algebras, not just the count.
        #[arg(long)]
        emit: bool,
        /// Print a random sample of this many members (uses --seed).
        #[arg(long)]
        sample: Option<usize>,
    },
    /// Check a proof script, or a proof from the built-in corpus.
    CheckProof {
        /// Proof script in JSON.
        #[arg(long, conflicts_with = "corpus")]
        file: Option<PathBuf>,
        /// Name of a corpus proof (see `fixtures list`).
        #[arg(long)]
        corpus: Option<String>,
        /// Apply the deduction transform this many times first.
        #[arg(long, default_value_t = 0)]
        deduce: usize,
    },
    /// Search for a countermodel in a class, smallest first.
    Countermodel {
        #[arg(long)]
        formula: Formula,
        #[arg(long)]
        class: ClassTag,
        /// Run the finite-model construction matching the class on the result.
        #[arg(long)]
        shrink: bool,
    },
    /// Semantic consequence up to a size bound.
    Entails {
        #[arg(long = "hyp")]
        hyps: Vec<Formula>,
        #[arg(long)]
        goal: Formula,
        #[arg(long)]
        class: ClassTag,
    },
    /// Run the acceptance suite.
    PaperSuite {
        /// Run one criterion only.
        #[arg(long)]
        only: Option<u8>,
    },
    /// Built-in algebras and proofs.
    Fixtures {
        #[command(subcommand)]
        action: FixturesCmd,
    },
}

#[derive(Subcommand)]
enum FixturesCmd {
    List,
    /// Print one fixture as JSON, or its Hasse diagram with --dot.
    Show {
        name: String,
        #[arg(long)]
        dot: bool,
    },
    /// Write every algebra and proof fixture as JSON files.
    Export {
        #[arg(long, default_value = "fixtures")]
        dir: PathBuf,
    },
}

fn limits(max: Option<usize>) -> Result<Limits, Box<dyn Error>> {
    let mut l = Limits::default();
    if let Some(m) = max {
        if m > HARD_CAP {
            return Err(format!("--max-size {m} exceeds the hard cap of {HARD_CAP}").into());
        }
        l.enum_lattice = l.enum_lattice.max(m);
        l.enum_implicative = l.enum_implicative.max(m);
    }
    Ok(l)
}

/// Writes to stdout, ignoring a closed pipe (`subres ... | head`).
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn print<T: Serialize>(json: bool, value: &T, text: impl FnOnce() -> String) {
    if json {
        emit(&serde_json::to_string_pretty(value).expect("serializable"));
    } else {
        emit(&text());
    }
}

fn table(a: &FiniteAlgebra) -> String {
    let n = a.size();
    let names: Vec<String> = (0..n).map(|x| a.name(x)).collect();
    let w = names.iter().map(String::len).max().unwrap_or(1).max(2);
    let mut s = format!("{:>w$} |", "->");
    for y in &names {
        s.push_str(&format!(" {y:>w$}"));
    }
    s.push('\n');
    for x in 0..n {
        s.push_str(&format!("{:>w$} |", names[x]));
        for y in 0..n {
            s.push_str(&format!(" {:>w$}", names[a.imp(x, y)]));
        }
        s.push('\n');
    }
    let boxed: Vec<String> = a.box_set().iter().map(|&x| a.name(x)).collect();
    s.push_str(&format!("box = {{{}}}", boxed.join(", ")));
    s
}

fn parse_list(s: &str) -> Result<Vec<usize>, Box<dyn Error>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<usize>().map_err(|e| format!("`{t}`: {e}").into()))
        .collect()
}

fn parse_leq(s: &str) -> Result<Vec<(usize, usize)>, Box<dyn Error>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            let (a, b) = t.split_once('<').ok_or_else(|| format!("`{t}`: expected A<B"))?;
            Ok((a.trim().parse()?, b.trim().parse()?))
        })
        .collect()
}

fn shrink(cm: &subres::semantics::Countermodel, l: &Limits) -> Result<Shrunk, Box<dyn Error>> {
    Ok(match cm.class {
        ClassTag::Sha => fmp_shrink_sha(cm, l)?,
        ClassTag::Srl => fmp_shrink_srl(cm)?,
        ClassTag::Srlbs => fmp_shrink_srlbs(cm)?,
        c => return Err(format!("no finite-model construction for {c}; use sha, srl or srlbs").into()),
    })
}

fn dot(a: &FiniteAlgebra) -> Result<String, Box<dyn Error>> {
    let order = a.natural_order()?;
    let mut s = String::from("digraph hasse {\n  rankdir=BT;\n");
    let boxed = a.box_set();
    for x in 0..a.size() {
        let shape = if boxed.contains(&x) { "doublecircle" } else { "circle" };
        s.push_str(&format!("  n{x} [label=\"{}\", shape={shape}];\n", a.name(x)));
    }
    for (x, y) in order.covers() {
        s.push_str(&format!("  n{x} -> n{y};\n"));
    }
    s.push('}');
    Ok(s)
}

fn write_json<T: Serialize>(path: &Path, v: &T) -> Result<(), Box<dyn Error>> {
    fs::write(path, serde_json::to_string_pretty(v)? + "\n")?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// `Ok(false)` is a negative verdict, `Err` a usage or input problem.
fn dispatch(cli: &Cli) -> Result<bool, Box<dyn Error>> {
    let json = cli.json;
    match &cli.cmd {
        Cmd::Check {
            source,
            class,
            expect_fail,
        } => {
            let (name, a) = source.load()?;
            let v = check(*class, &a)?;
            print(json, &json!({"algebra": name, "class": class, "member": v.member, "violations": v.violations}), || {
                if v.member {
                    format!("{name}: member of {class}")
                } else {
                    let lines: Vec<String> = v
                        .violations
                        .iter()
                        .map(|x| {
                            let w: Vec<String> = x.witness.iter().map(|&e| a.name(e)).collect();
                            format!("  {} fails at ({})", x.axiom, w.join(", "))
                        })
                        .collect();
                    format!("{name}: not in {class}\n{}", lines.join("\n"))
                }
            });
            Ok(v.member != *expect_fail)
        }
        Cmd::BuildPair {
            file,
            size,
            leq,
            designated,
            srs,
        } => {
            let a = if let Some(path) = file {
                algebra_from_json(&fs::read_to_string(path)?)?
            } else {
                let n = size.ok_or("give --file, or --size with --leq and --designated")?;
                let pairs = parse_leq(leq.as_deref().unwrap_or(""))?;
                let d: ElemSet = parse_list(designated.as_deref().ok_or("--designated is required")?)?.into_iter().collect();
                let l = FiniteLattice::from_poset(FinitePoset::from_pairs(n, &pairs)?)?;
                let p = AlgebraPair::new(l, d)?;
                if *srs {
                    build_srs_pair(&p)?
                } else {
                    build_implication(&p)?
                }
            };
            print(json, &AlgebraDoc::from_algebra(&a), || table(&a));
            Ok(true)
        }
        Cmd::Represent { source, kind } => {
            let (name, a) = source.load()?;
            let r = verify_representation(&a, *kind, &limits(cli.max_size)?)?;
            print(json, &r, || {
                format!(
                    "{name}: {} {:?} filters, {} upsets, |D| = {}; injective {}, order embedding {}, srl violations {:?} => {}",
                    r.filters,
                    r.kind,
                    r.upsets,
                    r.designated,
                    r.injective,
                    r.order_embedding,
                    r.srl_violations,
                    if r.passed { "ok" } else { "FAILED" }
                )
            });
            Ok(r.passed)
        }
        Cmd::Enumerate {
            class,
            size,
            emit,
            sample,
        } => {
            let l = limits(cli.max_size.or(Some(*size)))?;
            if *size > size_cap(*class, &l) {
                return Err(format!("size {size} exceeds the cap for {class}").into());
            }
            let mut all = enumerate_class(*size, *class, true, &l)?;
            let count = all.len();
            if let Some(k) = sample {
                let mut rng = StdRng::seed_from_u64(cli.seed);
                all = all.choose_multiple(&mut rng, *k).cloned().collect();
            }
            let shown = *emit || sample.is_some();
            let docs: Vec<AlgebraDoc> = if shown { all.iter().map(AlgebraDoc::from_algebra).collect() } else { vec![] };
            print(json, &json!({"class": class, "size": size, "count": count, "algebras": docs}), || {
                let mut s = format!("{count} {class} algebras of size {size} up to isomorphism");
                if shown {
                    for a in &all {
                        s.push_str("\n\n");
                        s.push_str(&table(a));
                    }
                }
                s
            });
            Ok(true)
        }
        Cmd::CheckProof { file, corpus, deduce } => {
            let mut p: Proof = match (file, corpus) {
                (Some(path), _) => subres::io::proof_from_json(&fs::read_to_string(path)?)?,
                (None, Some(name)) => corpus_entry(name).ok_or_else(|| format!("no corpus proof `{name}`"))?.proof,
                (None, None) => return Err("give --file FILE or --corpus NAME".into()),
            };
            for _ in 0..*deduce {
                p = deduction_transform(&p.calculus.spec(), &p)?;
            }
            let v = p.check();
            let concl = p.conclusion().map(ToString::to_string);
            print(json, &json!({"calculus": p.calculus, "conclusion": concl, "lines": p.lines.len(), "valid": v.valid, "diagnostics": v.diagnostics, "proof": ProofScript::from_proof(&p)}), || {
                let mut s = format!("{} proof of {} in {} lines: {}", p.calculus, concl.clone().unwrap_or_default(), p.lines.len(), if v.valid { "valid" } else { "INVALID" });
                for d in &v.diagnostics {
                    s.push_str(&format!("\n  line {}: {}", d.line, d.message));
                }
                s
            });
            Ok(v.valid)
        }
        Cmd::Countermodel { formula, class, shrink: do_shrink } => {
            let l = limits(cli.max_size)?;
            let max = cli.max_size.unwrap_or_else(|| size_cap(*class, &l));
            match find_countermodel(formula, *class, max, &l)? {
                None => {
                    print(json, &json!({"verdict": "no-countermodel-up-to", "max_size": max}), || {
                        format!("no countermodel in {class} up to size {max}")
                    });
                    Ok(false)
                }
                Some(cm) => {
                    let shrunk = if *do_shrink { Some(shrink(&cm, &l)?) } else { None };
                    let doc = json!({
                        "verdict": "refuted",
                        "countermodel": CountermodelDoc::new(&cm),
                        "shrunk": shrunk.as_ref().map(|s| json!({"countermodel": CountermodelDoc::new(&s.countermodel), "audit": s.audit})),
                    });
                    print(json, &doc, || {
                        let mut s = format!(
                            "refuted in {class} at size {}: {:?} gives {}\n{}",
                            cm.algebra.size(),
                            cm.valuation.map,
                            cm.algebra.name(cm.value),
                            table(&cm.algebra)
                        );
                        if let Some(sh) = &shrunk {
                            s.push_str(&format!(
                                "\nshrunk to a {} of size {} (audit {}): {:?} gives {}\n{}",
                                sh.countermodel.class,
                                sh.countermodel.algebra.size(),
                                if sh.audit.passed() { "ok" } else { "FAILED" },
                                sh.countermodel.valuation.map,
                                sh.countermodel.value,
                                table(&sh.countermodel.algebra)
                            ));
                        }
                        s
                    });
                    Ok(true)
                }
            }
        }
        Cmd::Entails { hyps, goal, class } => {
            let l = limits(cli.max_size)?;
            let max = cli.max_size.unwrap_or_else(|| size_cap(*class, &l));
            match entails(hyps, goal, *class, max, &l)? {
                Entailment::Refuted(cm) => {
                    print(json, &json!({"verdict": "refuted", "countermodel": CountermodelDoc::new(&cm)}), || {
                        format!("refuted at size {}: {:?}\n{}", cm.algebra.size(), cm.valuation.map, table(&cm.algebra))
                    });
                    Ok(false)
                }
                Entailment::NoCountermodelUpTo(n) => {
                    print(json, &json!({"verdict": "no-countermodel-up-to", "max_size": n}), || {
                        format!("no countermodel in {class} up to size {n}")
                    });
                    Ok(true)
                }
            }
        }
        Cmd::PaperSuite { only } => {
            let selected: Vec<_> = CRITERIA.iter().filter(|c| only.is_none_or(|id| c.id == id)).collect();
            if selected.is_empty() {
                return Err(format!("no criterion {}", only.unwrap_or_default()).into());
            }
            let reports: Vec<_> = selected.into_iter().map(run).collect();
            let ok = reports.iter().all(|r| r.passed);
            print(json, &reports, || reports.iter().map(|r| r.line()).collect::<Vec<_>>().join("\n"));
            Ok(ok)
        }
        Cmd::Fixtures { action } => match action {
            FixturesCmd::List => {
                let rows: Vec<_> = FIXTURE_NAMES
                    .iter()
                    .map(|&n| {
                        let classes: Vec<String> = expectations(n)
                            .iter()
                            .map(|e| format!("{}{}", if e.member { "" } else { "not " }, e.class))
                            .collect();
                        json!({"name": n, "kind": "algebra", "description": describe(n), "classes": classes})
                    })
                    .chain(proof_corpus().iter().map(|fx| json!({"name": fx.name, "kind": "proof", "calculus": fx.proof.calculus})))
                    .collect();
                print(json, &rows, || {
                    rows.iter()
                        .map(|r| match r["kind"].as_str() {
                            Some("algebra") => format!("{:<30} algebra  {}", r["name"].as_str().unwrap_or(""), r["description"].as_str().unwrap_or("")),
                            _ => format!("{:<30} proof    {}", r["name"].as_str().unwrap_or(""), r["calculus"].as_str().unwrap_or("")),
                        })
                        .collect::<Vec<_>>()
                        .join("\n")
                });
                Ok(true)
            }
            FixturesCmd::Show { name, dot: as_dot } => {
                if let Some(a) = algebra_fixture(name) {
                    if *as_dot {
                        emit(&dot(&a)?);
                    } else {
                        print(json, &AlgebraDoc::from_algebra(&a), || table(&a));
                    }
                } else if let Some(fx) = corpus_entry(name) {
                    let script = ProofScript::from_proof(&fx.proof);
                    print(json, &script, || {
                        let mut s = format!("{} (hypotheses: {})", fx.proof.calculus, script.hypotheses.join("; "));
                        for (i, l) in script.lines.iter().enumerate() {
                            s.push_str(&format!("\n{i:>3}. {:<50} {}", l.formula, l.rule));
                        }
                        s
                    });
                } else {
                    return Err(format!("unknown fixture `{name}`").into());
                }
                Ok(true)
            }
            FixturesCmd::Export { dir } => {
                fs::create_dir_all(dir.join("algebras"))?;
                fs::create_dir_all(dir.join("proofs"))?;
                for n in FIXTURE_NAMES {
                    let a = algebra_fixture(n).expect("registered");
                    write_json(&dir.join("algebras").join(format!("{n}.json")), &AlgebraDoc::from_algebra(&a))?;
                }
                let corpus = proof_corpus();
                for fx in &corpus {
                    write_json(&dir.join("proofs").join(format!("{}.json", fx.name)), &ProofScript::from_proof(&fx.proof))?;
                }
                let written = FIXTURE_NAMES.len() + corpus.len();
                print(json, &json!({"dir": dir, "files": written}), || format!("wrote {written} files under {}", dir.display()));
                Ok(true)
            }
        },
    }
}
