//! The `rae` command line.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rae_core::ensembling::solve;
use rae_core::{build_baf, generate_random_scenario, Error, GeneratorConfig, Limits, Method, Semantics};

use crate::batch::{evaluate_batch, scenario_seed, EvalOptions};
use crate::bench::{rows_to_csv, run_bench, s_no_slower_than_d, BenchConfig};
use crate::format::{parse_scenario, read_batch, solution_json, write_batch};
use crate::fuzz::{oracle_check_with, Enumerator, FuzzConfig, Outcome};
use crate::method::{parse_method_list, MethodSpec, PreferenceSource};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_CAPACITY: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

/// Environment variable overriding the enumeration argument limit.
pub const MAX_ARGS_VAR: &str = "RAE_MAX_ARGS";

#[derive(Debug, Parser)]
#[command(name = "rae", version, about = "Recourse-aware ensembling of classifiers and counterfactual explanations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve one scenario with one method.
    Solve(SolveArgs),
    /// Run several methods over a JSON-lines batch and report property rates.
    Evaluate(EvaluateArgs),
    /// Compare the enumerator with the exhaustive oracle on random scenarios.
    OracleCheck(OracleArgs),
    /// Time argumentative ensembling on generated scenarios.
    Bench(BenchArgs),
    /// Generate a JSON-lines batch of random scenarios.
    Gen(GenArgs),
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[arg(long)]
    scenario: PathBuf,
    /// naive, augmented, robust, arg, or a full spec such as arg:s-preferred:accuracy/simplicity.
    #[arg(long, default_value = "arg")]
    method: String,
    /// Semantics for `--method arg`.
    #[arg(long, default_value = "s-preferred")]
    semantics: String,
    /// Priority groups for `--method arg`: commas separate groups, `+` joins equally important
    /// properties. Also `uniform` or `scenario` (the default).
    #[arg(long)]
    pref: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Include every extension of the chosen semantics.
    #[arg(long)]
    explain: bool,
    /// Also write the bipolar framework as a Graphviz file.
    #[arg(long)]
    dot: Option<PathBuf>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct EvaluateArgs {
    #[arg(long)]
    batch: PathBuf,
    /// Comma-separated method specs.
    #[arg(long, default_value = "naive,augmented,robust,arg:s-preferred")]
    methods: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Record solve times. Off by default so reports are reproducible byte for byte.
    #[arg(long)]
    timing: bool,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct OracleArgs {
    #[arg(long, default_value_t = 200)]
    n: usize,
    #[arg(long, default_value_t = 5)]
    max_models: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Where to write the failing scenario.
    #[arg(long, default_value = "oracle-reproducer.json")]
    reproducer: PathBuf,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(long, value_delimiter = ',', default_value = "10,20,30")]
    sizes: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_value = "s-preferred,d-preferred")]
    semantics: Vec<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 5)]
    reps: usize,
    #[arg(long, default_value_t = 0.3)]
    invalidity: f64,
    #[arg(long, default_value_t = 0.0)]
    tie_rate: f64,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct GenArgs {
    /// Number of scenarios.
    #[arg(long)]
    n: usize,
    #[arg(long)]
    models: usize,
    #[arg(long, default_value_t = 2)]
    labels: usize,
    #[arg(long, default_value_t = 0.3)]
    invalidity: f64,
    #[arg(long, default_value_t = 0.0)]
    tie_rate: f64,
    /// Draw truth labels and make predictions track them by model accuracy.
    #[arg(long)]
    truth: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

/// A failed command with its exit status.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }

    fn invalid(message: impl Into<String>) -> Self {
        Failure { code: EXIT_INVALID, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Capacity { .. } => EXIT_CAPACITY,
            Error::InvalidScenario(_) => EXIT_INVALID,
            Error::Config(_) | Error::UnknownProperty(_) => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

type CmdResult = Result<(), Failure>;

/// Replaceable internals, so tests can exercise failure paths.
#[derive(Debug, Clone, Copy)]
pub struct Hooks {
    pub enumerator: Enumerator,
}

impl Default for Hooks {
    fn default() -> Self {
        Hooks { enumerator: rae_core::enumerate_extensions }
    }
}

/// Runs the command line and returns the exit status.
pub fn run<I, T>(args: I, hooks: &Hooks, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = limits().and_then(|limits| match cli.command {
        Command::Solve(a) => cmd_solve(a, &limits, out),
        Command::Evaluate(a) => cmd_evaluate(a, &limits, out),
        Command::OracleCheck(a) => cmd_oracle_check(a, hooks, out, err),
        Command::Bench(a) => cmd_bench(a, &limits, out, err),
        Command::Gen(a) => cmd_gen(a, out, err),
    });
    match result {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn limits() -> Result<Limits, Failure> {
    match std::env::var(MAX_ARGS_VAR) {
        Err(_) => Ok(Limits::default()),
        Ok(v) => {
            let n = v.trim().parse().map_err(|_| Failure::usage(format!("{MAX_ARGS_VAR} must be an integer, got `{v}`")))?;
            Ok(Limits::new(n)?)
        }
    }
}

fn read(path: &Path) -> Result<Vec<u8>, Failure> {
    std::fs::read(path).map_err(|e| Failure::invalid(format!("cannot read {}: {e}", path.display())))
}

fn emit(text: &str, path: Option<&Path>, out: &mut dyn Write) -> CmdResult {
    match path {
        Some(p) => std::fs::write(p, text)
            .map_err(|e| Failure::invalid(format!("cannot write {}: {e}", p.display()))),
        None => out.write_all(text.as_bytes()).map_err(|e| Failure::invalid(format!("cannot write output: {e}"))),
    }
}

fn cmd_solve(a: SolveArgs, limits: &Limits, out: &mut dyn Write) -> CmdResult {
    let spec = if a.method == "arg" {
        let sem: Semantics = a.semantics.parse()?;
        let pref = match &a.pref {
            Some(p) => PreferenceSource::parse_priority(p, ',')?,
            None => PreferenceSource::Scenario,
        };
        MethodSpec::new(Method::Argumentative(sem), pref)
    } else {
        a.method.parse::<MethodSpec>()?
    };
    let scenario = parse_scenario(&read(&a.scenario)?).map_err(|e| Failure::invalid(e.to_string()))?;
    let inst = scenario.instance()?;
    let pref = spec.preference.resolve(&scenario)?;
    if let Some(path) = &a.dot {
        let dot = build_baf(&inst, &pref)?.to_dot();
        std::fs::write(path, dot).map_err(|e| Failure::invalid(format!("cannot write {}: {e}", path.display())))?;
    }
    let sol = solve(&inst, spec.method, &pref, a.seed, limits)?;
    let mut doc = solution_json(&inst, &sol, a.explain);
    doc["method"] = spec.label().into();
    let text = serde_json::to_string_pretty(&doc).expect("json values serialize") + "\n";
    emit(&text, a.output.as_deref(), out)
}

fn cmd_evaluate(a: EvaluateArgs, limits: &Limits, out: &mut dyn Write) -> CmdResult {
    let methods = parse_method_list(&a.methods)?;
    let text = String::from_utf8(read(&a.batch)?).map_err(|_| Failure::invalid("batch is not UTF-8"))?;
    let batch = read_batch(&text).map_err(|e| Failure::invalid(e.to_string()))?;
    let opts = EvalOptions { limits: *limits, timing: a.timing };
    let report = evaluate_batch(&batch, &methods, a.seed, &opts).map_err(|e| {
        let mut f = Failure::from(e.source);
        if !e.input_id.is_empty() {
            f.message = format!("scenario `{}`: {}", e.input_id, f.message);
        }
        f
    })?;
    let text = match a.format {
        Format::Json => report.to_json() + "\n",
        Format::Csv => report.to_csv(),
    };
    emit(&text, a.output.as_deref(), out)
}

fn cmd_oracle_check(a: OracleArgs, hooks: &Hooks, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let cfg = FuzzConfig { cases: a.n, max_models: a.max_models, seed: a.seed };
    match oracle_check_with(&cfg, hooks.enumerator)? {
        Outcome::Passed { cases } => {
            let _ = writeln!(out, "oracle-check: {cases} scenarios, all checks passed");
            Ok(())
        }
        Outcome::Failed(m) => {
            let doc = crate::format::write_scenario(&m.scenario);
            std::fs::write(&a.reproducer, &doc)
                .map_err(|e| Failure::invalid(format!("cannot write {}: {e}", a.reproducer.display())))?;
            let _ = writeln!(err, "{doc}");
            Err(Failure {
                code: EXIT_MISMATCH,
                message: format!(
                    "case {}: {}; scenario written to {}",
                    m.case,
                    m.check,
                    a.reproducer.display()
                ),
            })
        }
    }
}

fn cmd_bench(a: BenchArgs, limits: &Limits, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let semantics = a.semantics.iter().map(|s| s.parse()).collect::<rae_core::Result<Vec<Semantics>>>()?;
    for (name, rate) in [("invalidity", a.invalidity), ("tie-rate", a.tie_rate)] {
        if !(0.0..=1.0).contains(&rate) {
            return Err(Failure::usage(format!("--{name} must lie in [0, 1]")));
        }
    }
    let cfg = BenchConfig {
        sizes: a.sizes,
        semantics,
        seed: a.seed,
        reps: a.reps,
        invalidity_rate: a.invalidity,
        tie_rate: a.tie_rate,
        limits: *limits,
    };
    let rows = run_bench(&cfg)?;
    for (n, ok) in s_no_slower_than_d(&rows) {
        let verdict = if ok { "yes" } else { "no" };
        let _ = writeln!(err, "s-preferred no slower than d-preferred at {n} models: {verdict}");
    }
    emit(&rows_to_csv(&rows), a.output.as_deref(), out)
}

fn cmd_gen(a: GenArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let cfg = GeneratorConfig {
        n_models: a.models,
        label_count: a.labels,
        invalidity_rate: a.invalidity,
        tie_rate: a.tie_rate,
        with_truth: a.truth,
    };
    cfg.check().map_err(|e| Failure::usage(e.to_string()))?;
    let batch = (0..a.n)
        .map(|i| {
            let id = format!("gen-{}-{i:05}", a.seed);
            let mut s = generate_random_scenario(&cfg, scenario_seed(a.seed, &id))?;
            s.input_id = id;
            Ok(s)
        })
        .collect::<rae_core::Result<Vec<_>>>()?;
    let _ = writeln!(err, "generated {} scenarios", batch.len());
    emit(&write_batch(&batch), a.output.as_deref(), out)
}
