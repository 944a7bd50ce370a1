use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;
use num_traits::One;
use serde::Deserialize;
use serde_json::{json, Map, Value};

use ordinal_lab::digits::{code_value, decode_digits, encode_digits, DigitString};
use ordinal_lab::hierarchy::{
    fund_seq, hierarchy_eval, hierarchy_eval_traced, step_down, Budget, EvalOutcome, StepDown, SuccessorBase,
    TraceRecord, DEFAULT_PATH_CAP,
};
use ordinal_lab::ordinal::{compare, omega_tower, Ordinal};
use ordinal_lab::ramsey::{chain_check, chain_links, min_witness, ph_holds, sigma, MinWitness, PhVerdict};
use ordinal_lab::slow::{
    cantor_pair, cantor_unpair, f_eps0_inverse_certified, slow_proof_shape, DiamondBase, Refutation,
};
use ordinal_lab::suites::{run_suite, DEFAULT_SEED, SUITES};
use ordinal_lab::syntax::{parse, render, GRAMMAR};
use ordinal_lab::{BaseFunction, Error, ParseError};

const ELIDE_BITS: u64 = 4096;
const DEFAULT_NODES: u64 = 100_000_000;
const DEFAULT_N_CAP: usize = 32;

/// Exit statuses.
const EXIT_DEFINITE: u8 = 0;
const EXIT_USAGE: u8 = 1;
const EXIT_UNDECIDED: u8 = 2;
const EXIT_VIOLATION: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "ordlab",
    version,
    about = "Ordinals below ε₀, budgeted hierarchies and Paris–Harrington colourings"
)]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Opts {
    /// Largest intermediate value, in bits, before an evaluation gives up.
    #[arg(long, global = true)]
    bits: Option<u64>,
    /// Rewrite steps before an evaluation gives up.
    #[arg(long, global = true)]
    steps: Option<u64>,
    /// Search nodes for colouring searches.
    #[arg(long, global = true)]
    nodes: Option<u64>,
    /// Largest N tried by `sigma` and `minwit`.
    #[arg(long, global = true)]
    ncap: Option<usize>,
    /// JSON file with any of: max_value_bits, max_steps, node_budget, n_cap, output, trace.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Print one JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Stream one JSON line per rewrite step before the result.
    #[arg(long, global = true)]
    trace: bool,
    /// Print numbers in full even above 4096 bits.
    #[arg(long, global = true)]
    full: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Ordinal notation utilities.
    #[command(subcommand)]
    Ord(OrdCommand),
    /// Fundamental sequence {a}(n).
    Fseq { ordinal: String, n: BigUint },
    /// Step-down witness path a ->_n b.
    Step {
        a: String,
        n: BigUint,
        b: String,
        /// Longest path to try.
        #[arg(long, default_value_t = DEFAULT_PATH_CAP)]
        max_len: usize,
    },
    /// Fast-growing hierarchy F_a(x).
    Fgh { ordinal: String, x: BigUint },
    /// F_e0(x) = F_{w_{x+1}}(x).
    Feps { x: usize },
    /// Inverse of F_e0 with its certificate.
    Inv { x: BigUint },
    /// The slow function F_diamond(x).
    Diamond { x: BigUint },
    /// The slow hierarchy F_diamond_{e0+a}(x).
    Slowh { ordinal: String, x: BigUint },
    /// Cantor pairing <x,y>.
    Pair { x: BigUint, y: BigUint },
    /// Inverse of the pairing.
    Unpair {
        p: BigUint,
        /// Read the pair as a slow proof <q,N> and recover its stage.
        #[arg(long)]
        proof_shape: bool,
    },
    /// Paris–Harrington PH(k,m,n,N) by adversarial search.
    Ph {
        k: usize,
        m: usize,
        n: usize,
        #[arg(value_name = "N")]
        ground: usize,
    },
    /// sigma(n,k): least N with PH(k, n+1, n, N).
    Sigma { n: usize, k: usize },
    /// Least N with PH(k,m,n,N).
    Minwit { k: usize, m: usize, n: usize },
    /// Exact inequality chain for 15 <= n <= 18.
    Chain { n: u64 },
    /// Run a named invariant suite.
    Props {
        suite: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
enum OrdCommand {
    /// Normalize and describe an ordinal.
    Eval { ordinal: String },
    /// Compare two ordinals.
    Cmp { a: String, b: String },
    /// Digit-list encoding and its code.
    Encode { ordinal: String },
    /// Decode a comma-separated digit list.
    Decode { digits: String },
}

#[derive(Deserialize, Default, Debug)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    max_value_bits: Option<u64>,
    max_steps: Option<u64>,
    node_budget: Option<u64>,
    n_cap: Option<usize>,
    output: Option<OutputMode>,
    trace: Option<bool>,
}

#[derive(Deserialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
enum OutputMode {
    Text,
    Json,
}

/// Effective settings: defaults, then the config file, then explicit flags.
#[derive(Debug)]
struct RunConfig {
    budget: Budget,
    node_budget: u64,
    n_cap: usize,
    output: OutputMode,
    trace: bool,
    full: bool,
}

enum Failure {
    Usage(String),
    Parse { input: String, error: ParseError },
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl RunConfig {
    fn resolve(opts: &Opts) -> Result<RunConfig, Failure> {
        let file = match &opts.config {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Failure::Usage(format!("cannot read config {}: {e}", path.display())))?;
                serde_json::from_str::<ConfigFile>(&text)
                    .map_err(|e| Failure::Usage(format!("bad config {}: {e}", path.display())))?
            }
            None => ConfigFile::default(),
        };
        let bits = opts.bits.or(file.max_value_bits).unwrap_or(Budget::DEFAULT_BITS);
        let steps = opts.steps.or(file.max_steps).unwrap_or(Budget::DEFAULT_STEPS);
        let node_budget = opts.nodes.or(file.node_budget).unwrap_or(DEFAULT_NODES);
        let n_cap = opts.ncap.or(file.n_cap).unwrap_or(DEFAULT_N_CAP);
        if bits == 0 || steps == 0 || node_budget == 0 || n_cap == 0 {
            return Err(Failure::Usage("budgets must be positive".into()));
        }
        let output = if opts.json {
            OutputMode::Json
        } else {
            file.output.unwrap_or(OutputMode::Text)
        };
        Ok(RunConfig {
            budget: Budget::new(bits, steps),
            node_budget,
            n_cap,
            output,
            trace: opts.trace || file.trace.unwrap_or(false),
            full: opts.full,
        })
    }

    fn num(&self, v: &BigUint) -> String {
        if !self.full && v.bits() > ELIDE_BITS {
            format!("~2^{}", v.bits())
        } else {
            v.to_string()
        }
    }
}

struct Reply {
    text: String,
    json: Map<String, Value>,
    exit: u8,
}

fn reply(command: &str, text: impl Into<String>, fields: Value, exit: u8) -> Reply {
    let mut json = Map::new();
    json.insert("command".into(), command.into());
    if let Value::Object(f) = fields {
        json.extend(f);
    }
    Reply {
        text: text.into(),
        json,
        exit,
    }
}

fn ordinal_arg(text: &str) -> Result<Ordinal, Failure> {
    parse(text).map_err(|error| Failure::Parse {
        input: text.to_string(),
        error,
    })
}

fn eval_reply(command: &str, cfg: &RunConfig, mut fields: Value, outcome: EvalOutcome) -> Reply {
    let (text, extra, exit) = match &outcome {
        EvalOutcome::Value(v) => (
            cfg.num(v),
            json!({"result": "value", "value": cfg.num(v), "bits": v.bits()}),
            EXIT_DEFINITE,
        ),
        EvalOutcome::Exceeded { lower_bound } => (
            format!("Exceeded: >= {}", cfg.num(lower_bound)),
            json!({"result": "exceeded", "lower_bound": cfg.num(lower_bound), "bits": lower_bound.bits()}),
            EXIT_UNDECIDED,
        ),
        EvalOutcome::StepLimit => ("StepLimit".to_string(), json!({"result": "step-limit"}), EXIT_UNDECIDED),
    };
    fields
        .as_object_mut()
        .unwrap()
        .extend(extra.as_object().unwrap().clone());
    reply(command, text, fields, exit)
}

/// Runs `H_a(x)` over `base`, streaming trace lines when asked.
fn run_hierarchy(cfg: &RunConfig, base: &dyn BaseFunction, a: &Ordinal, x: &BigUint) -> EvalOutcome {
    if !cfg.trace {
        return hierarchy_eval(base, a, &BigUint::one(), x, cfg.budget);
    }
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let mut emit = |r: &TraceRecord| {
        let line = serde_json::to_string(r).expect("trace record serializes");
        let _ = writeln!(out, "{line}");
    };
    hierarchy_eval_traced(base, a, &BigUint::one(), x, cfg.budget, &mut emit)
}

fn refutation_json(cfg: &RunConfig, r: &Refutation) -> Value {
    match r {
        Refutation::Exact { value } => json!({"kind": "exact", "value": cfg.num(value)}),
        Refutation::PowerBound => json!({"kind": "power-bound"}),
        Refutation::Capped { lower_bound } => json!({"kind": "capped", "lower_bound": cfg.num(lower_bound)}),
        Refutation::OmegaBound { lower_bound } => json!({"kind": "omega-bound", "lower_bound": cfg.num(lower_bound)}),
    }
}

fn min_witness_reply(command: &str, fields: Value, result: MinWitness, start: Instant) -> Reply {
    let (text, exit) = match &result {
        MinWitness::Found { ground, .. } => (ground.to_string(), EXIT_DEFINITE),
        MinWitness::Unknown { reason } => (format!("Unknown ({reason})"), EXIT_UNDECIDED),
    };
    let mut r = reply(command, text, fields, exit);
    if let Value::Object(m) = serde_json::to_value(&result).unwrap() {
        r.json.extend(m);
    }
    r.json
        .insert("timing".into(), json!({"wall_ms": start.elapsed().as_secs_f64() * 1e3}));
    r
}

fn run(command: Command, cfg: &RunConfig) -> Result<Reply, Failure> {
    let start = Instant::now();
    let mut r = match command {
        Command::Ord(OrdCommand::Eval { ordinal }) => {
            let a = ordinal_arg(&ordinal)?;
            reply(
                "ord eval",
                render(&a),
                json!({"ordinal": render(&a), "kind": a.kind(), "height": a.height(), "size": a.size()}),
                EXIT_DEFINITE,
            )
        }
        Command::Ord(OrdCommand::Cmp { a, b }) => {
            let (x, y) = (ordinal_arg(&a)?, ordinal_arg(&b)?);
            let (sym, word) = match compare(&x, &y) {
                std::cmp::Ordering::Less => ("<", "less"),
                std::cmp::Ordering::Equal => ("=", "equal"),
                std::cmp::Ordering::Greater => (">", "greater"),
            };
            reply(
                "ord cmp",
                format!("{} {sym} {}", render(&x), render(&y)),
                json!({"a": render(&x), "b": render(&y), "order": word}),
                EXIT_DEFINITE,
            )
        }
        Command::Ord(OrdCommand::Encode { ordinal }) => {
            let a = ordinal_arg(&ordinal)?;
            let d = encode_digits(&a);
            let code = code_value(&d);
            reply(
                "ord encode",
                d.to_string(),
                json!({"ordinal": render(&a), "digits": d.to_string(), "code": cfg.num(&code)}),
                EXIT_DEFINITE,
            )
        }
        Command::Ord(OrdCommand::Decode { digits }) => {
            let d: DigitString = digits.parse().map_err(|e: Error| match e {
                Error::Digits(error) | Error::Parse(error) => Failure::Parse {
                    input: digits.clone(),
                    error,
                },
                other => other.into(),
            })?;
            let a = decode_digits(&d).map_err(|e| match e {
                Error::Digits(error) | Error::Parse(error) => Failure::Parse {
                    input: digits.clone(),
                    error,
                },
                other => other.into(),
            })?;
            reply(
                "ord decode",
                render(&a),
                json!({"digits": d.to_string(), "ordinal": render(&a)}),
                EXIT_DEFINITE,
            )
        }
        Command::Fseq { ordinal, n } => {
            let a = ordinal_arg(&ordinal)?;
            let f = fund_seq(&a, &n);
            reply(
                "fseq",
                render(&f),
                json!({"ordinal": render(&a), "n": n.to_string(), "result": render(&f)}),
                EXIT_DEFINITE,
            )
        }
        Command::Step { a, n, b, max_len } => {
            let (x, y) = (ordinal_arg(&a)?, ordinal_arg(&b)?);
            let base = json!({"a": render(&x), "n": n.to_string(), "b": render(&y)});
            let mut r = match step_down(&x, &n, &y, max_len) {
                StepDown::Path(p) => {
                    let path: Vec<String> = p.ordinals.iter().map(render).collect();
                    let text = path.join(" -> ");
                    let mut r = reply("step", text, base, EXIT_DEFINITE);
                    r.json.insert("result".into(), "path".into());
                    r.json.insert("steps".into(), p.steps().into());
                    r.json.insert("path".into(), path.into());
                    r
                }
                StepDown::Refuted => {
                    let mut r = reply("step", "absent", base, EXIT_DEFINITE);
                    r.json.insert("result".into(), "absent".into());
                    r
                }
                StepDown::Exhausted { steps } => {
                    let mut r = reply(
                        "step",
                        format!("Unknown (no verdict within {steps} steps)"),
                        base,
                        EXIT_UNDECIDED,
                    );
                    r.json.insert("result".into(), "unknown".into());
                    r.json.insert("steps".into(), steps.into());
                    r
                }
            };
            r.json.insert("max_len".into(), max_len.into());
            r
        }
        Command::Fgh { ordinal, x } => {
            let a = ordinal_arg(&ordinal)?;
            let out = run_hierarchy(cfg, &SuccessorBase, &a, &x);
            eval_reply("fgh", cfg, json!({"ordinal": render(&a), "x": x.to_string()}), out)
        }
        Command::Feps { x } => {
            let out = run_hierarchy(cfg, &SuccessorBase, &omega_tower(x + 1), &BigUint::from(x));
            eval_reply("feps", cfg, json!({"x": x.to_string()}), out)
        }
        Command::Inv { x } => {
            let c = f_eps0_inverse_certified(&x);
            reply(
                "inv",
                c.value.to_string(),
                json!({
                    "x": cfg.num(&x),
                    "value": c.value.to_string(),
                    "witness": c.witness.as_ref().map(|w| cfg.num(w)),
                    "refuted": c.refuted.to_string(),
                    "refutation": refutation_json(cfg, &c.refutation),
                }),
                EXIT_DEFINITE,
            )
        }
        Command::Diamond { x } => {
            let z = f_eps0_inverse_certified(&x).value as usize;
            let out = run_hierarchy(cfg, &SuccessorBase, &omega_tower(z + 1), &x);
            eval_reply(
                "diamond",
                cfg,
                json!({"x": x.to_string(), "inverse": z.to_string()}),
                out,
            )
        }
        Command::Slowh { ordinal, x } => {
            let a = ordinal_arg(&ordinal)?;
            let out = run_hierarchy(cfg, &DiamondBase, &a, &x);
            eval_reply("slowh", cfg, json!({"ordinal": render(&a), "x": x.to_string()}), out)
        }
        Command::Pair { x, y } => {
            let p = cantor_pair(&x, &y);
            reply(
                "pair",
                cfg.num(&p),
                json!({"x": cfg.num(&x), "y": cfg.num(&y), "pair": cfg.num(&p)}),
                EXIT_DEFINITE,
            )
        }
        Command::Unpair { p, proof_shape } => {
            if proof_shape {
                let s = slow_proof_shape(&p);
                let stage = s.stage.map_or("none".to_string(), |k| k.to_string());
                let mut r = reply(
                    "unpair",
                    format!("q = {}, N = {}, stage = {stage}", cfg.num(&s.q), cfg.num(&s.n_bound)),
                    json!({"pair": cfg.num(&p)}),
                    EXIT_DEFINITE,
                );
                r.json.insert("q".into(), cfg.num(&s.q).into());
                r.json.insert("N".into(), cfg.num(&s.n_bound).into());
                r.json.insert("stage".into(), s.stage.map_or(Value::Null, Value::from));
                r
            } else {
                let (x, y) = cantor_unpair(&p);
                reply(
                    "unpair",
                    format!("{} {}", cfg.num(&x), cfg.num(&y)),
                    json!({"pair": cfg.num(&p), "x": cfg.num(&x), "y": cfg.num(&y)}),
                    EXIT_DEFINITE,
                )
            }
        }
        Command::Ph { k, m, n, ground } => {
            let report = ph_holds(k, m, n, ground, cfg.node_budget)?;
            let text = match &report.verdict {
                PhVerdict::Holds => "Holds".to_string(),
                PhVerdict::Fails { witness } => format!("Fails {}", serde_json::to_string(witness).unwrap()),
                PhVerdict::Unknown { reason } => format!("Unknown ({reason})"),
            };
            let exit = if matches!(report.verdict, PhVerdict::Unknown { .. }) {
                EXIT_UNDECIDED
            } else {
                EXIT_DEFINITE
            };
            let mut r = reply("ph", text, json!({}), exit);
            if let Value::Object(m) = serde_json::to_value(&report).unwrap() {
                r.json.extend(m);
            }
            // the report's own timing is kept as is
            return Ok(r);
        }
        Command::Sigma { n, k } => {
            let result = sigma(n, k, cfg.node_budget, cfg.n_cap)?;
            return Ok(min_witness_reply(
                "sigma",
                json!({"n": n, "k": k, "node_budget": cfg.node_budget}),
                result,
                start,
            ));
        }
        Command::Minwit { k, m, n } => {
            let result = min_witness(k, m, n, cfg.node_budget, cfg.n_cap)?;
            return Ok(min_witness_reply(
                "minwit",
                json!({"k": k, "m": m, "n": n, "node_budget": cfg.node_budget}),
                result,
                start,
            ));
        }
        Command::Chain { n } => {
            let holds = chain_check(n)?;
            let report = chain_links(n);
            let mut lines: Vec<String> = report
                .links
                .iter()
                .map(|l| format!("{} {}", if l.holds { "ok  " } else { "FAIL" }, l.claim))
                .collect();
            lines.push(holds.to_string());
            let mut r = reply("chain", lines.join("\n"), json!({}), EXIT_DEFINITE);
            if let Value::Object(m) = serde_json::to_value(&report).unwrap() {
                r.json.extend(m);
            }
            r
        }
        Command::Props { suite, seed } => {
            let report = run_suite(&suite, seed)?;
            let mut text = format!(
                "{}: {} checked, {} passed, {} failed, {} undecided",
                report.name, report.checked, report.passed, report.failed, report.undecided
            );
            for f in &report.failures {
                text.push_str(&format!("\n  violation: {f}"));
            }
            for note in &report.notes {
                text.push_str(&format!("\n  note: {note}"));
            }
            let exit = if report.failed > 0 {
                EXIT_VIOLATION
            } else if report.undecided > 0 {
                EXIT_UNDECIDED
            } else {
                EXIT_DEFINITE
            };
            let mut r = reply("props", text, json!({"seed": seed}), exit);
            if let Value::Object(m) = serde_json::to_value(&report).unwrap() {
                r.json.extend(m);
            }
            r
        }
    };
    r.json
        .insert("timing".into(), json!({"wall_ms": start.elapsed().as_secs_f64() * 1e3}));
    Ok(r)
}

fn usage_footer() -> String {
    format!("ordinal grammar:\n{GRAMMAR}\nsuites: {}", SUITES.join(", "))
}

fn report_failure(f: Failure, json_mode: bool) -> ExitCode {
    let (message, position) = match &f {
        Failure::Usage(m) => (m.clone(), None),
        Failure::Parse { input, error } => {
            let caret = format!("{}^", " ".repeat(error.position));
            (
                format!(
                    "parse error at position {}: {}\n  {input}\n  {caret}",
                    error.position, error.message
                ),
                Some(error.position),
            )
        }
    };
    if json_mode {
        let kind = if position.is_some() { "parse" } else { "usage" };
        let doc = json!({"error": {"kind": kind, "message": message, "position": position}});
        println!("{doc}");
    }
    eprintln!("error: {message}\n\n{}", usage_footer());
    ExitCode::from(EXIT_USAGE)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            // a missing subcommand prints help too, but counts as a usage error
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let _ = e.print();
            eprintln!("\n{}", usage_footer());
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let json_flag = cli.opts.json;
    let cfg = match RunConfig::resolve(&cli.opts) {
        Ok(c) => c,
        Err(f) => return report_failure(f, json_flag),
    };
    match run(cli.command, &cfg) {
        Ok(r) => {
            match cfg.output {
                OutputMode::Json => println!("{}", Value::Object(r.json)),
                OutputMode::Text => println!("{}", r.text),
            }
            ExitCode::from(r.exit)
        }
        Err(f) => report_failure(f, cfg.output == OutputMode::Json),
    }
}
