use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use treeacc::constructions::transform;
use treeacc::deciders::{build_emptiness_game, decide, emptiness, extract_witness_tree, Via};
use treeacc::fuzz::{run_campaign, FuzzConfig, FuzzReport};
use treeacc::games::game_to_dot;
use treeacc::oracle::{build_run_graph, classify, membership_from_classification, require_deterministic};
use treeacc::{
    parse_automaton, parse_tree, serialize_automaton, serialize_tree, ParityTreeAutomaton, RegularTree, Semantics,
};

const SCHEMA: u32 = 1;

/// Tree automata over infinite binary trees with relaxed acceptance.
#[derive(Debug, Parser)]
#[command(name = "treeacc", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Direct,
    Transform,
    Oracle,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse files and check their invariants; `.tree` files are trees,
    /// anything else an automaton.
    Validate {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Build the classical automaton for a semantics.
    Transform {
        #[command(flatten)]
        sem: SemanticsArg,
        #[arg(short = 'i', long = "input")]
        input: PathBuf,
        /// Where to write the automaton; stdout if absent.
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Decide whether a regular tree is accepted.
    Member {
        #[command(flatten)]
        sem: SemanticsArg,
        #[arg(long)]
        aut: PathBuf,
        #[arg(long)]
        tree: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Direct)]
        via: Method,
        /// Print Eloise's winning strategy when the tree is accepted.
        #[arg(long)]
        strategy: bool,
    },
    /// Decide whether the language is empty.
    Empty {
        #[command(flatten)]
        sem: SemanticsArg,
        #[arg(long)]
        aut: PathBuf,
    },
    /// Count rejecting and accepting branches of the run of a deterministic
    /// automaton.
    Classify {
        #[arg(long)]
        aut: PathBuf,
        #[arg(long)]
        tree: PathBuf,
        /// Include witness vertices.
        #[arg(long)]
        witnesses: bool,
    },
    /// Print a regular tree in the language, or "empty".
    Witness {
        #[command(flatten)]
        sem: SemanticsArg,
        #[arg(long)]
        aut: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Differential campaign: direct games against transformations, and the
    /// oracle on deterministic instances.
    Fuzz {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        count: usize,
        /// Only generate deterministic automata.
        #[arg(long)]
        det: bool,
    },
    /// Export a game as Graphviz: the membership game when `--tree` is
    /// given, the emptiness game otherwise.
    Dot {
        #[arg(long)]
        aut: PathBuf,
        #[arg(long)]
        tree: Option<PathBuf>,
        #[arg(long, default_value_t = Semantics::Classical)]
        semantics: Semantics,
        #[arg(long, value_enum, default_value_t = Method::Direct)]
        via: Method,
    },
}

#[derive(Debug, Args)]
struct SemanticsArg {
    /// classical, rej-fin, rej-count, acc-inf, acc-unc or large.
    #[arg(long)]
    semantics: Semantics,
}

/// A failed command and its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn invalid(path: &Path, e: impl std::fmt::Display) -> Self {
        Failure {
            code: 3,
            message: format!("{}: {e}", path.display()),
        }
    }
}

/// What a successful command prints, and its exit status.
struct Output {
    code: u8,
    text: String,
}

type Outcome = Result<Output, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))
}

fn load_automaton(path: &Path) -> Result<ParityTreeAutomaton, Failure> {
    parse_automaton(&read(path)?).map_err(|e| Failure::invalid(path, e))
}

fn load_tree(path: &Path, a: &ParityTreeAutomaton) -> Result<RegularTree, Failure> {
    let t = parse_tree(&read(path)?).map_err(|e| Failure::invalid(path, e))?;
    t.symbol_ids(a).map_err(|e| Failure::invalid(path, e))?;
    Ok(t)
}

fn json_text(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("json values serialize");
    s.push('\n');
    s
}

fn with_schema(mut v: Value) -> Value {
    v.as_object_mut()
        .expect("json output is an object")
        .insert("schema".into(), json!(SCHEMA));
    v
}

fn verdict(format: Format, value: bool, word: (&str, &str), extra: Value, text_extra: &str) -> Output {
    let code = if value { 0 } else { 1 };
    let text = match format {
        Format::Json => {
            let mut v = json!({ "result": value });
            if let (Some(o), Value::Object(e)) = (v.as_object_mut(), extra) {
                o.extend(e);
            }
            json_text(with_schema(v))
        }
        _ => format!("{}\n{text_extra}", if value { word.0 } else { word.1 }),
    };
    Output { code, text }
}

fn no_dot(format: Format, verb: &str) -> Result<(), Failure> {
    if format == Format::Dot {
        Err(Failure::usage(format!("`{verb}` has no dot output; use the `dot` verb")))
    } else {
        Ok(())
    }
}

fn run(cli: Cli) -> Outcome {
    let format = cli.format;
    match cli.command {
        Command::Validate { files } => {
            no_dot(format, "validate")?;
            let mut report = Vec::new();
            let mut text = String::new();
            for f in &files {
                let src = read(f)?;
                let entry = if f.extension().is_some_and(|e| e == "tree") {
                    let t = parse_tree(&src).map_err(|e| Failure::invalid(f, e))?;
                    json!({ "file": f, "kind": "tree", "nodes": t.num_nodes() })
                } else {
                    let a = parse_automaton(&src).map_err(|e| Failure::invalid(f, e))?;
                    json!({
                        "file": f,
                        "kind": "automaton",
                        "states": a.num_states(),
                        "symbols": a.num_symbols(),
                        "transitions": a.transitions().len(),
                        "colours": a.distinct_colours().len(),
                        "deterministic": a.is_deterministic(),
                    })
                };
                let _ = writeln!(text, "{}: ok", f.display());
                report.push(entry);
            }
            let text = match format {
                Format::Json => json_text(json!({ "schema": SCHEMA, "files": report })),
                _ => text,
            };
            Ok(Output { code: 0, text })
        }

        Command::Transform { sem, input, output } => {
            no_dot(format, "transform")?;
            let a = load_automaton(&input)?;
            let (out, rep) = transform(&a, sem.semantics);
            let aut = serialize_automaton(&out);
            if let Some(path) = &output {
                write(path, &aut)?;
            }
            let text = match format {
                Format::Json => {
                    let mut v = json!({ "schema": SCHEMA, "report": rep });
                    if output.is_none() {
                        v["automaton"] = json!(aut);
                    }
                    json_text(v)
                }
                _ => {
                    let mut s = if output.is_none() { aut } else { String::new() };
                    let _ = writeln!(s, "# semantics: {}", rep.semantics);
                    let _ = writeln!(s, "# input: {} states, {} colours", rep.input_states, rep.input_colours);
                    let _ = writeln!(s, "# output: {} states, {} colours", rep.output_states, rep.output_colours);
                    let _ = writeln!(s, "# bound: {} ({})", rep.bound_expr, if rep.bound_ok { "met" } else { "VIOLATED" });
                    s
                }
            };
            Ok(Output { code: 0, text })
        }

        Command::Member {
            sem,
            aut,
            tree,
            via,
            strategy,
        } => {
            let a = load_automaton(&aut)?;
            let t = load_tree(&tree, &a)?;
            let s = sem.semantics;
            let via = match via {
                Method::Direct => Via::Direct,
                Method::Transform => Via::Transform,
                Method::Oracle => {
                    no_dot(format, "member --via oracle")?;
                    require_deterministic(&a).map_err(|e| Failure::invalid(&aut, e))?;
                    let g = build_run_graph(&a, &t).map_err(|e| Failure::invalid(&aut, e))?;
                    let c = classify(&g);
                    let value = membership_from_classification(&c, s);
                    return Ok(verdict(format, value, ("true", "false"), json!({ "classification": c }), ""));
                }
            };
            let d = decide(&a, &t, s, via).map_err(|e| Failure::invalid(&tree, e))?;
            if format == Format::Dot {
                let text = game_to_dot(&d.game.game, |v| Some(d.game.describe(v, &d.automaton, &t)));
                return Ok(Output {
                    code: if d.accepted { 0 } else { 1 },
                    text,
                });
            }
            let moves: Vec<(String, String)> = if strategy {
                d.eloise_strategy()
                    .into_iter()
                    .map(|(v, w)| (d.game.describe(v, &d.automaton, &t), d.game.describe(w, &d.automaton, &t)))
                    .collect()
            } else {
                Vec::new()
            };
            let mut text_extra = String::new();
            for (v, w) in &moves {
                let _ = writeln!(text_extra, "{v} -> {w}");
            }
            let extra = if strategy {
                json!({ "strategy": moves.iter().map(|(v, w)| json!([v, w])).collect::<Vec<_>>() })
            } else {
                json!({})
            };
            Ok(verdict(format, d.accepted, ("true", "false"), extra, &text_extra))
        }

        Command::Empty { sem, aut } => {
            no_dot(format, "empty")?;
            let a = load_automaton(&aut)?;
            let empty = emptiness(&a, sem.semantics);
            let code = if empty { 1 } else { 0 };
            let text = match format {
                Format::Json => json_text(json!({ "schema": SCHEMA, "empty": empty })),
                _ => format!("{}\n", if empty { "empty" } else { "nonempty" }),
            };
            Ok(Output { code, text })
        }

        Command::Classify { aut, tree, witnesses } => {
            no_dot(format, "classify")?;
            let a = load_automaton(&aut)?;
            let t = load_tree(&tree, &a)?;
            require_deterministic(&a).map_err(|e| Failure::invalid(&aut, e))?;
            let g = build_run_graph(&a, &t).map_err(|e| Failure::invalid(&aut, e))?;
            let c = classify(&g);
            let vertex = |i: usize| {
                let (q, n) = g.vertices[i];
                format!("({},{})", a.state_name(q), t.name(n))
            };
            let text = match format {
                Format::Json => {
                    let mut v = json!({
                        "schema": SCHEMA,
                        "rejecting": c.rejecting,
                        "accepting": c.accepting,
                        "accepting_large": c.accepting_large,
                    });
                    if witnesses {
                        let w = |tw: &treeacc::oracle::TargetWitness| {
                            json!({
                                "splitting": tw.splitting.map(|(w, d)| json!({ "vertex": vertex(w), "direction": d })),
                                "branching": tw.branching.map(|(s, k)| json!({ "vertex": vertex(s), "colour": k.0 })),
                            })
                        };
                        v["rejecting_witness"] = w(&c.rejecting_witness);
                        v["accepting_witness"] = w(&c.accepting_witness);
                        v["offending_bscc"] =
                            json!(c.offending_bscc.as_ref().map(|b| b.iter().map(|&i| vertex(i)).collect::<Vec<_>>()));
                    }
                    json_text(v)
                }
                _ => {
                    let mut s = format!(
                        "rejecting: {}\naccepting: {}\naccepting large: {}\n",
                        c.rejecting, c.accepting, c.accepting_large
                    );
                    if witnesses {
                        for (name, tw) in [("rejecting", &c.rejecting_witness), ("accepting", &c.accepting_witness)] {
                            if let Some((w, d)) = tw.splitting {
                                let _ = writeln!(s, "{name} splitting pair: {} direction {d}", vertex(w));
                            }
                            if let Some((v, k)) = tw.branching {
                                let _ = writeln!(s, "{name} branching pair: {} colour {k}", vertex(v));
                            }
                        }
                        if let Some(b) = &c.offending_bscc {
                            let names: Vec<String> = b.iter().map(|&i| vertex(i)).collect();
                            let _ = writeln!(s, "offending bottom component: {}", names.join(" "));
                        }
                    }
                    for sem in Semantics::ALL {
                        let _ = writeln!(s, "{sem}: {}", membership_from_classification(&c, sem));
                    }
                    s
                }
            };
            Ok(Output { code: 0, text })
        }

        Command::Witness { sem, aut, output } => {
            no_dot(format, "witness")?;
            let a = load_automaton(&aut)?;
            let w = extract_witness_tree(&a, sem.semantics);
            let tree = w.as_ref().map(|w| serialize_tree(&w.tree));
            if let (Some(path), Some(tree)) = (&output, &tree) {
                write(path, tree)?;
            }
            let text = match format {
                Format::Json => json_text(json!({
                    "schema": SCHEMA,
                    "empty": w.is_none(),
                    "tree": tree,
                    "strategy": w.as_ref().map(|w| &w.strategy),
                })),
                _ => match (&tree, &output) {
                    (None, _) => "empty\n".to_string(),
                    (Some(t), None) => t.clone(),
                    (Some(_), Some(p)) => format!("witness written to {}\n", p.display()),
                },
            };
            Ok(Output {
                code: if w.is_some() { 0 } else { 1 },
                text,
            })
        }

        Command::Fuzz { seed, count, det } => {
            no_dot(format, "fuzz")?;
            let cfg = if det {
                FuzzConfig::deterministic(seed, count)
            } else {
                FuzzConfig::nondeterministic(seed, count)
            };
            let r = run_campaign(&cfg);
            let code = if r.passed() { 0 } else { 4 };
            let text = match format {
                Format::Json => json_text(with_schema(serde_json::to_value(&r).expect("report serializes"))),
                _ => fuzz_text(&r),
            };
            Ok(Output { code, text })
        }

        Command::Dot {
            aut,
            tree,
            semantics,
            via,
        } => {
            if format == Format::Json {
                return Err(Failure::usage("`dot` only emits dot output"));
            }
            let a = load_automaton(&aut)?;
            let text = match tree {
                Some(tp) => {
                    let t = load_tree(&tp, &a)?;
                    let via = match via {
                        Method::Direct => Via::Direct,
                        Method::Transform => Via::Transform,
                        Method::Oracle => return Err(Failure::usage("the oracle builds no game; use direct or transform")),
                    };
                    let d = decide(&a, &t, semantics, via).map_err(|e| Failure::invalid(&tp, e))?;
                    game_to_dot(&d.game.game, |v| Some(d.game.describe(v, &d.automaton, &t)))
                }
                None => {
                    let (out, _) = transform(&a, semantics);
                    let g = build_emptiness_game(&out);
                    game_to_dot(&g, |v| (v < out.num_states()).then(|| out.state_name(v).to_string()))
                }
            };
            Ok(Output { code: 0, text })
        }
    }
}

fn fuzz_text(r: &FuzzReport) -> String {
    let mut s = format!(
        "seed {} count {} ({})\n",
        r.seed,
        r.count,
        if r.deterministic { "deterministic" } else { "nondeterministic" }
    );
    for (sem, n) in Semantics::ALL.iter().zip(r.accepted) {
        let _ = writeln!(s, "{sem}: {n} accepted");
    }
    let _ = writeln!(s, "{} failures", r.failures);
    if let Some(f) = &r.first_failure {
        let _ = writeln!(s, "first failure at instance {}: {}", f.index, f.failure);
        let _ = writeln!(s, "--- automaton\n{}--- tree\n{}", f.automaton, f.tree);
    }
    s
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
