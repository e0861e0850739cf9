use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use sqfd_core::family::{build_family, verify_theorem};
use sqfd_core::search::{scan, ScanOptions, SearchConfig};
use sqfd_core::{depth, g_profile, DepthReport, Error, FieldSpec, Graph, Ideal};

#[derive(Parser, Debug)]
#[command(
    name = "sqfd",
    version,
    about = "Squarefree powers and normalized depth functions of squarefree monomial ideals"
)]
struct Cli {
    /// Worker threads for Betti-number and search parallelism (default: all cores).
    #[arg(long, global = true, env = "SQFD_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct FieldArgs {
    /// Characteristic of the coefficient field.
    #[arg(long = "char", default_value_t = 2)]
    characteristic: u32,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Depth, projective dimension, regularity and graded Betti numbers of S/I.
    Depth {
        file: PathBuf,
        #[command(flatten)]
        field: FieldArgs,
        /// Recompute over a second prime and flag disagreement.
        #[arg(long)]
        both_primes: bool,
    },
    /// Graded Betti numbers of S/I (same report as `depth`).
    Betti {
        file: PathBuf,
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        both_primes: bool,
    },
    /// The k-th squarefree power, in the ideal text format.
    Power {
        file: PathBuf,
        #[arg(short = 'k', long)]
        k: usize,
    },
    /// Normalized depth function g_I(1..nu).
    Gprofile {
        file: PathBuf,
        #[command(flatten)]
        field: FieldArgs,
    },
    /// Minimal primes as variable lists.
    MinimalPrimes { file: PathBuf },
    /// Print the cubic family ideal in n variables, in the ideal text format.
    Family {
        #[arg(long)]
        n: usize,
    },
    /// Replay the family theorem for every n in a range.
    VerifyFamily {
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: Option<usize>,
        #[command(flatten)]
        field: FieldArgs,
    },
    /// Compare the tree depth lemma with the computed depth of an edge ideal.
    GraphDepth {
        file: PathBuf,
        #[command(flatten)]
        field: FieldArgs,
    },
    /// Search for ideals whose normalized depth function increases.
    Search(SearchArgs),
}

#[derive(Args, Debug)]
struct SearchArgs {
    /// `key = value` configuration file; flags given here override it.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    ambient_n: Option<usize>,
    /// Generator degree `d` or range `a..b`.
    #[arg(long)]
    gen_degree: Option<String>,
    /// Generator count `c` or range `a..b`.
    #[arg(long)]
    gen_count: Option<String>,
    #[arg(long)]
    density: Option<f64>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    samples: Option<u64>,
    /// Comma-separated primes, each scanned separately.
    #[arg(long)]
    primes: Option<String>,
    #[arg(long)]
    edge_ideals_only: bool,
    #[arg(long)]
    exhaustive: bool,
    #[arg(long)]
    exhaustive_cap: Option<u64>,
    /// Ideal files appended to the sample stream.
    #[arg(long = "inject")]
    inject: Vec<PathBuf>,
    /// Append findings to this line-delimited JSON log.
    #[arg(long)]
    log: Option<PathBuf>,
}

/// A failure with its process exit code: 1 computational, 2 usage.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl Failure {
    fn usage(error: impl Into<anyhow::Error>) -> Self {
        Failure {
            code: 2,
            error: error.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. }
            | Error::Io(_)
            | Error::InvalidConfig(_)
            | Error::InvalidField(_)
            | Error::InvalidFamilyParameter(_)
            | Error::InvalidExponent(_)
            | Error::InvalidGraph(_)
            | Error::InvalidAmbient(_) => 2,
            _ => 1,
        };
        Failure {
            code,
            error: e.into(),
        }
    }
}

type CmdResult = Result<(), Failure>;

fn read_ideal(path: &Path) -> Result<Ideal, Failure> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(Failure::usage)?;
    Ideal::parse_text(&text)
        .with_context(|| format!("parsing {}", path.display()))
        .map_err(Failure::usage)
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(Failure::usage)?;
    Graph::parse_text(&text)
        .with_context(|| format!("parsing {}", path.display()))
        .map_err(Failure::usage)
}

fn field(args: FieldArgs) -> Result<FieldSpec, Failure> {
    Ok(FieldSpec::new(args.characteristic)?)
}

fn print_json(value: &impl serde::Serialize) -> CmdResult {
    let text = serde_json::to_string(value).map_err(|e| Failure {
        code: 1,
        error: e.into(),
    })?;
    println!("{text}");
    Ok(())
}

fn cmd_depth(file: &Path, args: FieldArgs, both_primes: bool) -> CmdResult {
    let ideal = read_ideal(file)?;
    let f = field(args)?;
    let report = DepthReport::compute(&ideal, f, both_primes.then(|| f.companion()))?;
    print_json(&report)
}

fn cmd_power(file: &Path, k: usize) -> CmdResult {
    let ideal = read_ideal(file)?;
    print!("{}", ideal.squarefree_power(k)?.to_text());
    Ok(())
}

fn cmd_gprofile(file: &Path, args: FieldArgs) -> CmdResult {
    let ideal = read_ideal(file)?;
    print_json(&g_profile(&ideal, field(args)?)?)
}

fn cmd_minimal_primes(file: &Path) -> CmdResult {
    let ideal = read_ideal(file)?;
    let primes: Vec<Vec<usize>> = ideal
        .minimal_primes()?
        .iter()
        .map(|p| p.var_list())
        .collect();
    print_json(&json!({ "n": ideal.ambient_n(), "primes": primes }))
}

fn cmd_family(n: usize) -> CmdResult {
    print!("{}", build_family(n)?.to_text());
    Ok(())
}

fn cmd_verify_family(n_min: usize, n_max: Option<usize>, args: FieldArgs) -> CmdResult {
    let n_max = n_max.unwrap_or(n_min);
    if n_min < 6 || n_max < n_min {
        return Err(Failure::usage(anyhow!(
            "need 6 <= n-min <= n-max, got {n_min}..{n_max}"
        )));
    }
    let f = field(args)?;
    let reports = (n_min..=n_max)
        .map(|n| verify_theorem(n, f))
        .collect::<Result<Vec<_>, _>>()?;
    print_json(&reports)?;
    if let Some(bad) = reports.iter().find(|r| !r.all_pass()) {
        return Err(Failure {
            code: 1,
            error: anyhow!("family check failed at n={}", bad.n),
        });
    }
    Ok(())
}

fn cmd_graph_depth(file: &Path, args: FieldArgs) -> CmdResult {
    let graph = read_graph(file)?;
    let f = field(args)?;
    let engine = depth(&graph.edge_ideal(), f)?;
    let lemma = graph.tree_depth_via_lemma(0).ok();
    print_json(&json!({
        "v": graph.n_vertices(),
        "field_char": f.characteristic(),
        "is_tree": graph.is_tree(),
        "independence_domination": graph.independence_domination(),
        "lemma_depth": lemma,
        "engine_depth": engine,
        "agree": lemma.map(|l| l == engine),
    }))
}

fn cmd_search(args: &SearchArgs, threads: Option<usize>) -> CmdResult {
    let mut cfg = SearchConfig::default();
    if let Some(path) = &args.config {
        let text = fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))
            .map_err(Failure::usage)?;
        cfg.apply_text(&text)?;
    }
    let mut overrides: Vec<(&str, String)> = Vec::new();
    if let Some(v) = args.ambient_n {
        overrides.push(("ambient_n", v.to_string()));
    }
    if let Some(v) = &args.gen_degree {
        overrides.push(("gen_degree", v.clone()));
    }
    if let Some(v) = &args.gen_count {
        overrides.push(("gen_count", v.clone()));
    }
    if let Some(v) = args.density {
        overrides.push(("density", v.to_string()));
    }
    if let Some(v) = args.seed {
        overrides.push(("seed", v.to_string()));
    }
    if let Some(v) = args.samples {
        overrides.push(("sample_count", v.to_string()));
    }
    if let Some(v) = &args.primes {
        overrides.push(("primes", v.clone()));
    }
    if let Some(v) = args.exhaustive_cap {
        overrides.push(("exhaustive_cap", v.to_string()));
    }
    for (k, v) in overrides {
        cfg.set(k, &v)?;
    }
    cfg.edge_ideals_only |= args.edge_ideals_only;
    cfg.exhaustive |= args.exhaustive;
    for path in &args.inject {
        cfg.injected.push(read_ideal(path)?);
    }
    let opts = ScanOptions {
        workers: threads,
        log: args.log.clone(),
    };
    let outcome = scan(&cfg, &opts)?;
    print_json(&outcome.summary)
}

fn run(cli: Cli) -> CmdResult {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global()
            .map_err(Failure::usage)?;
    }
    match &cli.command {
        Command::Depth {
            file,
            field,
            both_primes,
        }
        | Command::Betti {
            file,
            field,
            both_primes,
        } => cmd_depth(file, *field, *both_primes),
        Command::Power { file, k } => cmd_power(file, *k),
        Command::Gprofile { file, field } => cmd_gprofile(file, *field),
        Command::MinimalPrimes { file } => cmd_minimal_primes(file),
        Command::Family { n } => cmd_family(*n),
        Command::VerifyFamily {
            n_min,
            n_max,
            field,
        } => cmd_verify_family(*n_min, *n_max, *field),
        Command::GraphDepth { file, field } => cmd_graph_depth(file, *field),
        Command::Search(args) => cmd_search(args, cli.threads),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}
