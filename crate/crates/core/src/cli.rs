use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use phicover::bench::{run_bench, to_csv, Algo};
use phicover::boxcover::box_cover_fast;
use phicover::hullcover::{hull_cover_with, HullOptions, LinearShooter};
use phicover::model::{
    generate, parse_instance, parse_instance_scaled, serialize_instance, validate_instance, Cover, GenKind, GenParams,
    Instance,
};
use phicover::phicover::{
    check_well_defined, naive_phi_cover, MergePolicy, Phi, Trials, Verdict, EXHAUSTIVE_MAX_TREES,
};
use phicover::render::{render_svg, Trace};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INVALID: i32 = 3;
pub const EXIT_WITNESS: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {message}")]
    Parse { path: PathBuf, message: String },
    #[error("invalid instance:\n{0}")]
    Invalid(String),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse { .. } => EXIT_USAGE,
            CliError::Invalid(_) => EXIT_INVALID,
            CliError::Internal(_) => EXIT_INTERNAL,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "phicover", version, about = "Hull-covers and box-covers of non-crossing plane forests")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check an instance file and list every violation.
    Validate(InputArgs),
    /// Compute a cover.
    Cover(CoverArgs),
    /// Run the reference merge loop and optionally dump its merge forest.
    Oracle(OracleArgs),
    /// Compare covers across merge orders.
    CheckWellDefined(WellDefinedArgs),
    /// Generate a seeded instance.
    Gen(GenArgs),
    /// Time the engines on generated instances and write CSV.
    Bench(BenchArgs),
    /// Draw an instance, optionally with a cover and shot rays, as SVG.
    Render(RenderArgs),
}

#[derive(Args, Debug)]
pub struct InputArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Multiply coordinates by this factor and round, for inputs with
    /// fractional coordinates.
    #[arg(long)]
    pub scale: Option<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExactPhi {
    Hull,
    Box,
}

impl From<ExactPhi> for Phi {
    fn from(p: ExactPhi) -> Phi {
        match p {
            ExactPhi::Hull => Phi::Hull,
            ExactPhi::Box => Phi::Box,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AnyPhi {
    Hull,
    Box,
    Mincircle,
}

impl From<AnyPhi> for Phi {
    fn from(p: AnyPhi) -> Phi {
        match p {
            AnyPhi::Hull => Phi::Hull,
            AnyPhi::Box => Phi::Box,
            AnyPhi::Mincircle => Phi::MinCircle,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlgoArg {
    Fast,
    Naive,
}

#[derive(Args, Debug)]
pub struct CoverArgs {
    #[arg(long, value_enum)]
    pub phi: ExactPhi,
    #[arg(long, value_enum, default_value = "fast")]
    pub algo: AlgoArg,
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long)]
    pub output: PathBuf,
    /// Write engine counters as JSON.
    #[arg(long)]
    pub stats: Option<PathBuf>,
    /// Seed of the random merge order used by the naive algorithm.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Write the rays shot by the fast hull engine, for `render --trace`.
    #[arg(long)]
    pub trace: Option<PathBuf>,
    /// Re-check the fast hull engine's invariants during the run.
    #[arg(long)]
    pub check_invariants: bool,
}

#[derive(Args, Debug)]
pub struct OracleArgs {
    #[arg(long, value_enum)]
    pub phi: AnyPhi,
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long)]
    pub emit_forest: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args, Debug)]
pub struct WellDefinedArgs {
    #[arg(long, value_enum)]
    pub phi: AnyPhi,
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, default_value_t = 20)]
    pub trials: usize,
    /// Enumerate every merge order instead of sampling.
    #[arg(long)]
    pub exhaustive: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[arg(long, value_parser = parse_kind)]
    pub kind: GenKind,
    #[arg(long, default_value_t = 8)]
    pub trees: usize,
    #[arg(long, default_value_t = 8)]
    pub size: usize,
    /// Horizontal extent for `strips`.
    #[arg(long)]
    pub range: Option<i64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub output: PathBuf,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    #[arg(long, value_enum)]
    pub phi: ExactPhi,
    #[arg(long, value_delimiter = ',', value_parser = parse_kind, default_value = "strips,combs,nested")]
    pub kinds: Vec<GenKind>,
    #[arg(long, value_delimiter = ',', default_value = "100,200,400")]
    pub sizes: Vec<usize>,
    #[arg(long, value_delimiter = ',', value_enum, default_value = "fast,naive")]
    pub algos: Vec<AlgoArg>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub output: PathBuf,
}

#[derive(Args, Debug)]
pub struct RenderArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long)]
    pub cover: Option<PathBuf>,
    /// Rays written by `cover --trace`.
    #[arg(long)]
    pub trace: Option<PathBuf>,
    #[arg(long)]
    pub output: PathBuf,
}

fn parse_kind(s: &str) -> Result<GenKind, String> {
    s.parse()
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|e| CliError::Internal(format!("cannot write {}: {e}", path.display())))
}

fn load(args: &InputArgs) -> Result<Instance, CliError> {
    let text = read(&args.input)?;
    let parsed = match args.scale {
        Some(scale) => parse_instance_scaled(&text, scale),
        None => parse_instance(&text),
    };
    parsed.map_err(|e| CliError::Parse { path: args.input.clone(), message: e.to_string() })
}

/// Loads and validates; warnings go to standard error.
fn load_valid(args: &InputArgs) -> Result<Instance, CliError> {
    let instance = load(args)?;
    let report = validate_instance(&instance);
    for w in &report.warnings {
        eprintln!("warning: {w}");
    }
    if !report.is_valid() {
        let lines: Vec<String> = report.violations.iter().map(|v| v.to_string()).collect();
        return Err(CliError::Invalid(lines.join("\n")));
    }
    Ok(instance)
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("value serializes")
}

pub fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Validate(args) => {
            let instance = load_valid(&args)?;
            eprintln!("valid: {} trees, {} vertices", instance.m(), instance.n());
            Ok(EXIT_OK)
        }
        Command::Cover(args) => cover(args),
        Command::Oracle(args) => {
            let instance = load_valid(&args.input)?;
            let phi = Phi::from(args.phi);
            let run = naive_phi_cover(&instance, phi, &MergePolicy::Random(args.seed))
                .map_err(|e| CliError::Internal(e.to_string()))?;
            run.forest.verify(phi, instance.m()).map_err(CliError::Internal)?;
            if let Some(path) = &args.output {
                write(path, &run.cover.to_json())?;
            }
            if let Some(path) = &args.emit_forest {
                write(path, &run.forest.to_json())?;
            }
            eprintln!("{} regions after {} merges", run.cover.len(), run.forest.merge_count());
            Ok(EXIT_OK)
        }
        Command::CheckWellDefined(args) => well_defined(args),
        Command::Gen(args) => {
            let params = GenParams { trees: args.trees, size: args.size, range: args.range };
            let instance = generate(args.kind, params, args.seed).map_err(|e| CliError::Usage(e.to_string()))?;
            write(&args.output, &serialize_instance(&instance))?;
            Ok(EXIT_OK)
        }
        Command::Bench(args) => {
            let algos: Vec<Algo> = args
                .algos
                .iter()
                .map(|a| match a {
                    AlgoArg::Fast => Algo::Fast,
                    AlgoArg::Naive => Algo::Naive,
                })
                .collect();
            let rows = run_bench(args.phi.into(), &args.kinds, &args.sizes, &algos, args.seed)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            write(&args.output, &to_csv(&rows))?;
            Ok(EXIT_OK)
        }
        Command::Render(args) => {
            let instance = load_valid(&args.input)?;
            let cover = match &args.cover {
                Some(path) => Some(
                    Cover::from_json(&read(path)?)
                        .map_err(|e| CliError::Parse { path: path.clone(), message: e.to_string() })?,
                ),
                None => None,
            };
            let trace: Trace = match &args.trace {
                Some(path) => serde_json::from_str(&read(path)?)
                    .map_err(|e| CliError::Parse { path: path.clone(), message: e.to_string() })?,
                None => Trace::default(),
            };
            write(&args.output, &render_svg(&instance, cover.as_ref(), &trace.rays))?;
            Ok(EXIT_OK)
        }
    }
}

fn cover(args: CoverArgs) -> Result<i32, CliError> {
    let instance = load_valid(&args.input)?;
    let phi = Phi::from(args.phi);
    if args.trace.is_some() && (args.algo, args.phi) != (AlgoArg::Fast, ExactPhi::Hull) {
        return Err(CliError::Usage("--trace needs --algo fast --phi hull".into()));
    }
    let (cover, stats) = match (args.algo, args.phi) {
        (AlgoArg::Fast, ExactPhi::Hull) => {
            let options = HullOptions { check_invariants: args.check_invariants, record_trace: args.trace.is_some() };
            let run = hull_cover_with(&instance, LinearShooter::new(), options)
                .map_err(|e| CliError::Internal(e.to_string()))?;
            if let Some(path) = &args.trace {
                write(path, &Trace::from_records(&run.trace).to_json())?;
            }
            (run.cover, json(&run.stats))
        }
        (AlgoArg::Fast, ExactPhi::Box) => {
            let run = box_cover_fast(&instance);
            if run.inserts.iter().chain(&run.deletes).any(|&c| c > 1) {
                return Err(CliError::Internal("a box was inserted or deleted twice".into()));
            }
            (run.cover, json(&run.stats))
        }
        (AlgoArg::Naive, _) => {
            let run = naive_phi_cover(&instance, phi, &MergePolicy::Random(args.seed))
                .map_err(|e| CliError::Internal(e.to_string()))?;
            let stats = serde_json::json!({
                "merges": run.forest.merge_count(),
                "intersection_tests": run.intersection_tests,
            });
            (run.cover, stats.to_string())
        }
    };
    write(&args.output, &cover.to_json())?;
    if let Some(path) = &args.stats {
        write(path, &stats)?;
    }
    eprintln!("{} regions", cover.len());
    Ok(EXIT_OK)
}

fn well_defined(args: WellDefinedArgs) -> Result<i32, CliError> {
    let instance = load_valid(&args.input)?;
    let trials = if args.exhaustive {
        if instance.m() > EXHAUSTIVE_MAX_TREES {
            return Err(CliError::Usage(format!(
                "--exhaustive supports at most {EXHAUSTIVE_MAX_TREES} trees, the instance has {}",
                instance.m()
            )));
        }
        Trials::Exhaustive
    } else {
        Trials::Random(args.trials)
    };
    let verdict = check_well_defined(&instance, args.phi.into(), trials, args.seed)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    match verdict {
        Verdict::WellDefined { runs, cover } => {
            println!("WELL-DEFINED over {runs} runs");
            println!("{}", cover.to_json());
            Ok(EXIT_OK)
        }
        Verdict::Witness { first, second } => {
            println!("WITNESS");
            for outcome in [first, second] {
                println!("policy {}", describe(&outcome.policy));
                println!("cover {}", outcome.cover.to_json());
            }
            Ok(EXIT_WITNESS)
        }
    }
}

fn describe(policy: &MergePolicy) -> String {
    match policy {
        MergePolicy::FirstFound => "first-found".into(),
        MergePolicy::Random(seed) => format!("random({seed})"),
        MergePolicy::Scripted(steps) => {
            let steps: Vec<String> = steps.iter().map(|(a, b)| format!("{a}+{b}")).collect();
            format!("scripted [{}]", steps.join(", "))
        }
    }
}
