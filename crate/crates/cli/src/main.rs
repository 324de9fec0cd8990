use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use cdkit::constants::{gamma, gamma_realizers, ResidueSet};
use cdkit::search::{sweep, SweepConfig, SweepSummary};
use cdkit::subset::{parse_subset, parse_subset_list};
use cdkit::table_file::{read_table, to_json};
use cdkit::verify::{
    check_chowla_pillai, check_inequality, forced_step, progression_pair, run_descent, CheckOutcome, CheckReport,
    DescentOutcome, DescentStep, DescentTrace, StepCase, TheoremId,
};
use cdkit::{make_standard, FamilySpec, FiniteSemigroup};

#[derive(Parser)]
#[command(name = "cdkit", version, about = "Sumset bounds in finite semigroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print γ of a subset.
    Gamma {
        #[command(flatten)]
        source: Source,
        /// Subset literal such as "[0,2,4]".
        #[arg(long)]
        set: String,
        #[arg(long)]
        json: bool,
    },
    /// Check one inequality on one instance.
    Check {
        #[arg(long)]
        theorem: TheoremId,
        #[command(flatten)]
        source: Source,
        /// Subset literals separated by ';', e.g. "[0,1,2];[0,1]".
        #[arg(long)]
        sets: String,
        #[arg(long)]
        json: bool,
    },
    /// Check the gcd-based bound for residue sets modulo m.
    Chowla {
        /// Modulus; may be omitted when both sets are given as residue-set JSON.
        #[arg(long)]
        m: Option<usize>,
        /// "[...]" literal, residue-set JSON, or a file holding either.
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long)]
        json: bool,
    },
    /// Run the descent procedure on a pair of subsets of a monoid.
    Trace {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        /// Defaults to 4n + 4 for a carrier of order n.
        #[arg(long)]
        max_steps: Option<usize>,
        /// Apply one transformation step even when the pair already satisfies the bound.
        #[arg(long)]
        force_step: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run a sweep described by a JSON config.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        /// Also write the JSON summary here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Write a Cayley-table file for a named family.
    Gen {
        /// Family name (cyclic, product, left_zero, ...) or a full expression.
        #[arg(long)]
        family: String,
        /// Arguments of the family: integers or nested expressions.
        #[arg(long, num_args = 1..)]
        params: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare the progression pair in Z/mpqZ with its closed forms.
    Progression {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Cayley-table JSON file.
    #[arg(long)]
    table: Option<PathBuf>,
    /// Family expression such as "product(cyclic(2),cyclic(3))".
    #[arg(long)]
    family: Option<String>,
}

impl Source {
    fn load(&self) -> Result<FiniteSemigroup, String> {
        match (&self.table, &self.family) {
            (Some(path), _) => read_table(path).map_err(|e| e.to_string()),
            (None, Some(expr)) => {
                let spec: FamilySpec = expr.parse().map_err(|e: cdkit::Error| e.to_string())?;
                make_standard(&spec).map_err(|e| e.to_string())
            }
            (None, None) => Err("one of --table or --family is required".into()),
        }
    }
}

/// Process exit status: holds, violation found, bad input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Status {
    Ok,
    Violation,
    Input,
}

impl From<Status> for ExitCode {
    fn from(s: Status) -> ExitCode {
        ExitCode::from(match s {
            Status::Ok => 0,
            Status::Violation => 1,
            Status::Input => 2,
        })
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(s) => s.into(),
        Err(msg) => {
            eprintln!("cdkit: {msg}");
            Status::Input.into()
        }
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn run(command: Command) -> Result<Status, String> {
    match command {
        Command::Gamma { source, set, json } => {
            let s = source.load()?;
            let x = parse_subset(s.order(), &set).map_err(err)?;
            let g = gamma(&s, &x);
            if json {
                let doc = serde_json::json!({
                    "semigroup": s.label(),
                    "set": x,
                    "gamma": g,
                    "realizers": gamma_realizers(&s, &x),
                });
                println!("{doc}");
            } else {
                println!("{g}");
            }
            Ok(Status::Ok)
        }
        Command::Check {
            theorem,
            source,
            sets,
            json,
        } => {
            let s = source.load()?;
            let sets = parse_subset_list(s.order(), &sets).map_err(err)?;
            let outcome = check_inequality(&s, theorem, &sets).map_err(err)?;
            print_outcome(&outcome, json);
            Ok(match outcome {
                CheckOutcome::Checked(r) => verdict(&r),
                CheckOutcome::Skipped { .. } => Status::Input,
            })
        }
        Command::Chowla { m, x, y, json } => {
            let x = residue_arg(m, &x)?;
            let y = residue_arg(m, &y)?;
            let r = check_chowla_pillai(&x, &y).map_err(err)?;
            if json {
                println!("{}", r.to_json_line());
            } else {
                println!("{}", r.summary_line());
            }
            Ok(verdict(&r))
        }
        Command::Trace {
            source,
            x,
            y,
            max_steps,
            force_step,
            json,
        } => {
            let s = source.load()?;
            let x = parse_subset(s.order(), &x).map_err(err)?;
            let y = parse_subset(s.order(), &y).map_err(err)?;
            if force_step {
                let st = forced_step(&s, &x, &y).map_err(err)?;
                if json {
                    println!("{}", serde_json::to_string(&st).map_err(err)?);
                } else {
                    print_step(1, &st);
                }
                return Ok(match st.checks {
                    Some(ch) if !ch.all() => Status::Violation,
                    _ => Status::Ok,
                });
            }
            let steps = max_steps.unwrap_or(4 * s.order() + 4);
            let trace = run_descent(&s, &x, &y, steps).map_err(err)?;
            if json {
                println!("{}", serde_json::to_string(&trace).map_err(err)?);
            } else {
                print_trace(&s, &trace);
            }
            Ok(match trace.outcome {
                DescentOutcome::InequalityHolds => Status::Ok,
                DescentOutcome::ClaimContradiction | DescentOutcome::StepBudgetExceeded => Status::Violation,
                DescentOutcome::NotNormalizable => Status::Input,
            })
        }
        Command::Sweep { config, out, json } => {
            let mut cfg = SweepConfig::read(&config).map_err(err)?;
            if let Ok(v) = std::env::var("CDKIT_THREADS") {
                cfg.parallelism = v
                    .trim()
                    .parse()
                    .map_err(|_| format!("CDKIT_THREADS must be a non-negative integer, got {v:?}"))?;
            }
            let summary = sweep(&cfg).map_err(err)?;
            let text = summary.to_json();
            if let Some(path) = out {
                write_file(&path, &text)?;
            }
            if json {
                println!("{text}");
            } else {
                print_summary(&summary);
            }
            let descent_bad = summary
                .descent
                .as_ref()
                .is_some_and(|d| d.claim_contradiction + d.step_budget_exceeded > 0);
            Ok(if summary.violation_count > 0 || descent_bad {
                Status::Violation
            } else {
                Status::Ok
            })
        }
        Command::Gen { family, params, out } => {
            let expr = if params.is_empty() {
                family
            } else {
                format!("{family}({})", params.join(","))
            };
            let spec: FamilySpec = expr.parse().map_err(|e: cdkit::Error| e.to_string())?;
            let s = make_standard(&spec).map_err(err)?;
            let text = to_json(&s);
            match out {
                Some(path) => write_file(&path, &format!("{text}\n"))?,
                None => println!("{text}"),
            }
            Ok(Status::Ok)
        }
        Command::Progression { m, p, q, json } => {
            let r = progression_pair(m, p, q).map_err(err)?;
            if json {
                println!("{}", serde_json::to_string(&r).map_err(err)?);
            } else {
                println!("Z/{}Z  X={}  Y={}  X+Y={}", r.modulus, r.x, r.y, r.sumset);
                for (name, qy) in [
                    ("|X+Y|", r.sumset_size),
                    ("gamma(X)", r.gamma_x),
                    ("gamma(Y)", r.gamma_y),
                    ("gamma(X+Y)", r.gamma_sumset),
                    ("gamma(X,Y)", r.gamma_pair),
                    ("p(A)", r.p_min),
                ] {
                    let mark = if qy.matches() { "ok" } else { "MISMATCH" };
                    println!(
                        "  {name:<11} computed={:<4} closed form={:<4} {mark}",
                        qy.computed, qy.formula
                    );
                }
                println!("  strict chain: {}", r.strict_chain);
            }
            Ok(Status::Ok)
        }
    }
}

fn verdict(r: &CheckReport) -> Status {
    if r.holds {
        Status::Ok
    } else {
        Status::Violation
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), String> {
    std::fs::write(path, text).map_err(|e| format!("writing {}: {e}", path.display()))
}

/// A residue set from a literal, a residue-set document, or a file holding either.
fn residue_arg(m: Option<usize>, arg: &str) -> Result<ResidueSet, String> {
    let text = arg.trim();
    let text = if text.starts_with('[') || text.starts_with('{') {
        text.to_owned()
    } else {
        std::fs::read_to_string(text).map_err(|e| format!("reading {text}: {e}"))?
    };
    let text = text.trim();
    if text.starts_with('{') {
        let r: ResidueSet = serde_json::from_str(text).map_err(|e| format!("residue set: {e}"))?;
        if let Some(m) = m {
            if m != r.modulus() {
                return Err(format!("--m {m} disagrees with residue set modulo {}", r.modulus()));
            }
        }
        return Ok(r);
    }
    let m = m.ok_or("--m is required for a plain literal")?;
    if m == 0 {
        return Err("modulus must be positive".into());
    }
    let members: Vec<usize> = serde_json::from_str(text).map_err(|e| format!("residue literal {text:?}: {e}"))?;
    ResidueSet::new(m, members.into_iter().map(|v| v % m)).map_err(err)
}

fn print_outcome(outcome: &CheckOutcome, json: bool) {
    if json {
        println!("{}", outcome.to_json_line());
        return;
    }
    println!("{}", outcome.summary_line());
    if let Some(w) = outcome.report().and_then(|r| r.witness.as_ref()) {
        println!("  witness: sumset={} sizes={}", json_set(&w.sumset), json_set(&w.sizes));
    }
}

fn json_set<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).unwrap_or_default()
}

fn opt<T: std::fmt::Display>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_owned(), T::to_string)
}

fn print_step(k: usize, st: &DescentStep) {
    println!(
        "step {k}: X={} Y={} |X+Y|={} gamma(X+Y)={} n={} z={}",
        st.x,
        st.y,
        st.sumset_size,
        st.gamma_of_sumset,
        opt(&st.n_min),
        opt(&st.z_bar),
    );
    match st.case {
        StepCase::Terminal => println!("  terminal"),
        case => {
            let c = if case == StepCase::One { 1 } else { 2 };
            println!(
                "  X0={} Y0={} case {c}: X'={} Y'={}",
                opt(&st.x0),
                opt(&st.y0),
                opt(&st.x_bar),
                opt(&st.y_bar),
            );
            if let Some(ch) = st.checks.filter(|ch| !ch.all()) {
                println!("  failed checks: {ch:?}");
            }
        }
    }
}

fn print_trace(s: &FiniteSemigroup, trace: &DescentTrace) {
    println!("semigroup: {}", s.label());
    if let Some(sh) = &trace.shifts {
        println!("shifts: {}", json_set(&sh.shifts));
    }
    for (k, st) in trace.steps.iter().enumerate() {
        print_step(k + 1, st);
    }
    println!("outcome: {}", json_set(&trace.outcome).trim_matches('"'));
    for a in &trace.anomalies {
        println!("anomaly: {a}");
    }
}

fn print_summary(s: &SweepSummary) {
    println!(
        "{} semigroups ({} outside subset policy), {} instances",
        s.semigroups, s.semigroups_outside_policy, s.instances
    );
    println!(
        "{:<22} {:>5} {:>12} {:>12} {:>12} {:>10} {:>12}",
        "theorem", "arity", "checked", "holds", "tight", "violated", "skipped"
    );
    for c in &s.per_theorem {
        let id = c.theorem_id.map_or("-", |t| t.as_str());
        println!(
            "{id:<22} {:>5} {:>12} {:>12} {:>12} {:>10} {:>12}",
            c.arity, c.checked, c.holds, c.tight, c.violated, c.skipped
        );
    }
    if let Some(d) = &s.descent {
        println!(
            "descent: {} runs, {} hold, {} contradictions, {} over budget, {} not normalizable, {} steps",
            d.runs,
            d.inequality_holds,
            d.claim_contradiction,
            d.step_budget_exceeded,
            d.not_normalizable,
            d.transformations
        );
    }
    for v in s.violations.iter().take(10) {
        println!("violation: {}", v.summary_line());
    }
    if s.violations.len() > 10 {
        println!(
            "... {} more violations kept in the JSON summary",
            s.violations.len() - 10
        );
    }
    for a in &s.anomalies {
        println!("anomaly: {a}");
    }
    if let Some(seed) = s.seed {
        println!("seed: {seed}");
    }
    println!("{}", s.note);
}
