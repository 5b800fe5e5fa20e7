use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use geohull::core_periphery::{approximate_core_with, exact_core, jaccard, CoreConfig, CoreResult};
use geohull::error::{Error, Result};
use geohull::exact::closure_exact;
use geohull::graph::{degree_distribution, largest_component, read_edge_list_file, Graph};
use geohull::hull::{write_votes_csv, Ensemble, EnsembleConfig};
use geohull::io::{read_label_file, read_vertex_set_file, write_degree_csv, write_vertex_set, Record};
use geohull::op_closure::{closure_naive_outerplanar, PreparedOuterplanar};
use geohull::outerplanarity::check_outerplanar;
use geohull::sampler::sample_outerplanar;
use geohull::vertex_set::VertexSet;

#[derive(Parser)]
#[command(name = "geohull", version, about = "Geodesic convex hulls via outerplanar subgraph ensembles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample one outerplanar spanning subgraph.
    Sample(SampleArgs),
    /// Close a vertex set.
    Closure(ClosureArgs),
    /// Core-periphery decomposition.
    Core(CoreArgs),
    /// Jaccard similarity of two vertex-set files.
    Eval(EvalArgs),
}

#[derive(Args)]
struct Common {
    /// Edge list; only its largest connected component is used.
    #[arg(long)]
    input: PathBuf,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Primary output file; side outputs are written next to it.
    #[arg(long)]
    out: PathBuf,
    /// Worker threads (0: all cores).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
}

#[derive(Args)]
struct EnsembleArgs {
    /// Vote threshold t in percent.
    #[arg(long, default_value_t = 1.0)]
    threshold: f64,
    /// Number of sampled subgraphs N.
    #[arg(long, default_value_t = 100)]
    subgraphs: usize,
}

#[derive(Args)]
struct SampleArgs {
    #[command(flatten)]
    common: Common,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClosureMode {
    Exact,
    NaiveOp,
    FastOp,
    Approx,
}

#[derive(Args)]
struct ClosureArgs {
    #[command(flatten)]
    common: Common,
    /// Labels to close, one per line.
    #[arg(long)]
    vertices: PathBuf,
    #[arg(long, value_enum, default_value_t = ClosureMode::Exact)]
    mode: ClosureMode,
    #[command(flatten)]
    ensemble: EnsembleArgs,
    /// Also write per-vertex vote counts (approx mode) as CSV.
    #[arg(long)]
    votes: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CoreMode {
    Exact,
    Approx,
}

#[derive(Args)]
struct CoreArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, value_enum, default_value_t = CoreMode::Exact)]
    mode: CoreMode,
    #[arg(long, default_value_t = 10)]
    k: usize,
    #[arg(long, default_value_t = 5)]
    l: usize,
    #[command(flatten)]
    ensemble: EnsembleArgs,
    #[arg(long, default_value_t = 50)]
    max_iterations: usize,
    /// Sweep l and t and write "l,t,jaccard" rows against --exact-core.
    #[arg(long, requires = "exact_core")]
    grid: bool,
    /// Exact core labels to compare against in grid mode.
    #[arg(long)]
    exact_core: Option<PathBuf>,
    #[arg(long, value_delimiter = ',', default_value = "5,10,20,50,100,200,500,1000,2000")]
    grid_l: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_value = "1,2,3,4,5,6,7,8,9,10")]
    grid_t: Vec<f64>,
}

#[derive(Args)]
struct EvalArgs {
    #[arg(long)]
    a: PathBuf,
    #[arg(long)]
    b: PathBuf,
    /// Report file; stdout if absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}: {}", e.kind(), e);
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Sample(args) => cmd_sample(args),
        Command::Closure(args) => cmd_closure(args),
        Command::Core(args) => cmd_core(args),
        Command::Eval(args) => cmd_eval(args),
    }
}

fn init_pool(jobs: usize) -> Result<()> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build_global()
        .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))
}

fn sidecar(out: &Path, suffix: &str) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

fn write_file<F>(path: &Path, body: F) -> Result<()>
where
    F: FnOnce(&mut BufWriter<File>) -> std::io::Result<()>,
{
    let file = File::create(path).map_err(|e| Error::Io {
        path: path.to_path_buf(),
        source: e,
    })?;
    let mut w = BufWriter::new(file);
    body(&mut w)
        .and_then(|()| w.flush())
        .map_err(|e| Error::Io {
            path: path.to_path_buf(),
            source: e,
        })
}

fn ms(start: Instant) -> String {
    format!("{:.3}", start.elapsed().as_secs_f64() * 1e3)
}

struct Loaded {
    graph: Graph,
    record: Record,
}

fn load(common: &Common, command: &str) -> Result<Loaded> {
    init_pool(common.jobs)?;
    let start = Instant::now();
    let raw = read_edge_list_file(&common.input)?;
    let graph = largest_component(&raw);
    let mut record = Record::new();
    record
        .push("command", command)
        .push("version", env!("CARGO_PKG_VERSION"))
        .push("input", common.input.display())
        .push("seed", common.seed)
        .push("input_nodes", raw.n())
        .push("input_edges", raw.m())
        .push("nodes", graph.n())
        .push("edges", graph.m())
        .push("load_ms", ms(start));
    Ok(Loaded { graph, record })
}

fn ensemble_config(args: &EnsembleArgs, seed: u64) -> Result<EnsembleConfig> {
    let config = EnsembleConfig {
        num_subgraphs: args.subgraphs,
        threshold: args.threshold,
        seed,
    };
    config.validate()?;
    Ok(config)
}

fn cmd_sample(args: SampleArgs) -> Result<()> {
    let Loaded { graph, mut record } = load(&args.common, "sample")?;
    let start = Instant::now();
    let h = sample_outerplanar(&graph, args.common.seed)?;
    let sample_ms = ms(start);
    let faces = PreparedOuterplanar::new(h.graph())?.face_number();
    write_file(&args.common.out, |w| h.write_tagged(w))?;
    record
        .push("sample_edges", h.m())
        .push("tree_edges", h.n() - 1)
        .push("left_edges", h.left_edges().len())
        .push("right_edges", h.right_edges().len())
        .push("face_number", faces)
        .push("sample_ms", sample_ms);
    write_file(&sidecar(&args.common.out, ".stats"), |w| record.write(w))
}

fn cmd_closure(args: ClosureArgs) -> Result<()> {
    let Loaded { graph, mut record } = load(&args.common, "closure")?;
    let x = read_vertex_set_file(&graph, &args.vertices)?;
    let start = Instant::now();
    let mode = match args.mode {
        ClosureMode::Exact => "exact",
        ClosureMode::NaiveOp => "naive-op",
        ClosureMode::FastOp => "fast-op",
        ClosureMode::Approx => "approx",
    };
    record
        .push("mode", mode)
        .push("vertices", args.vertices.display())
        .push("input_size", x.len());
    let closed = match args.mode {
        ClosureMode::Exact => closure_exact(&graph, &x),
        ClosureMode::NaiveOp => {
            check_outerplanar(&graph)?;
            closure_naive_outerplanar(&graph, &x)
        }
        ClosureMode::FastOp => PreparedOuterplanar::new(&graph)?.closure(&x),
        ClosureMode::Approx => {
            let config = ensemble_config(&args.ensemble, args.common.seed)?;
            record
                .push("subgraphs", config.num_subgraphs)
                .push("threshold", config.threshold)
                .push("min_votes", config.min_votes());
            let ensemble = Ensemble::sample(&graph, &config)?;
            record.push("sample_ms", ms(start));
            let votes = ensemble.votes(&x);
            if let Some(path) = &args.votes {
                write_file(path, |w| write_votes_csv(&graph, &votes, w))?;
            }
            ensemble.select(&votes)
        }
    };
    record.push("closure_size", closed.len()).push("closure_ms", ms(start));
    write_file(&args.common.out, |w| write_vertex_set(&graph, &closed, w))?;
    write_file(&sidecar(&args.common.out, ".stats"), |w| record.write(w))
}

fn core_config(args: &CoreArgs) -> Result<CoreConfig> {
    let config = CoreConfig {
        k: args.k,
        l: args.l,
        ensemble: ensemble_config(&args.ensemble, args.common.seed)?,
        max_iterations: args.max_iterations,
        seed: args.common.seed,
    };
    config.validate()?;
    Ok(config)
}

fn cmd_core(args: CoreArgs) -> Result<()> {
    let Loaded { graph, mut record } = load(&args.common, "core")?;
    let config = core_config(&args)?;
    if args.grid {
        return cmd_core_grid(&args, &graph, config, record);
    }
    record
        .push("mode", if args.mode == CoreMode::Exact { "exact" } else { "approx" })
        .push("k", config.k)
        .push("l", config.l)
        .push("threshold", config.ensemble.threshold)
        .push("subgraphs", config.ensemble.num_subgraphs)
        .push("max_iterations", config.max_iterations);
    let start = Instant::now();
    let result: CoreResult = match args.mode {
        CoreMode::Exact => exact_core(&graph, &config)?,
        CoreMode::Approx => {
            let ensemble = Ensemble::sample(&graph, &config.ensemble)?;
            record.push("sample_ms", ms(start));
            approximate_core_with(&graph, &ensemble, &config)?
        }
    };
    let out = &args.common.out;
    let periphery = result.periphery();
    write_file(out, |w| write_vertex_set(&graph, &result.core, w))?;
    write_file(&sidecar(out, ".periphery"), |w| write_vertex_set(&graph, &periphery, w))?;
    write_file(&sidecar(out, ".core-degrees.csv"), |w| {
        write_degree_csv(&degree_distribution(&graph, &result.core), w)
    })?;
    write_file(&sidecar(out, ".periphery-degrees.csv"), |w| {
        write_degree_csv(&degree_distribution(&graph, &periphery), w)
    })?;
    let sizes: Vec<String> = result.closure_sizes.iter().map(usize::to_string).collect();
    record
        .push("core_size", result.core.len())
        .push("periphery_size", periphery.len())
        .push("iterations", result.iterations)
        .push("closure_sizes", sizes.join(","))
        .push("core_ms", ms(start));
    write_file(&sidecar(out, ".stats"), |w| record.write(w))
}

fn cmd_core_grid(args: &CoreArgs, graph: &Graph, config: CoreConfig, mut record: Record) -> Result<()> {
    let exact_path = args.exact_core.as_ref().expect("clap enforces --exact-core");
    let exact = read_vertex_set_file(graph, exact_path)?;
    let start = Instant::now();
    let ensemble = Ensemble::sample(graph, &config.ensemble)?;
    record
        .push("mode", "grid")
        .push("exact_core", exact_path.display())
        .push("exact_core_size", exact.len())
        .push("subgraphs", config.ensemble.num_subgraphs)
        .push("sample_ms", ms(start));
    let mut rows = Vec::new();
    let mut best: Option<(usize, f64, f64)> = None;
    for &l in &args.grid_l {
        for &t in &args.grid_t {
            let mut cell = config;
            cell.l = l;
            cell.ensemble.threshold = t;
            cell.ensemble.validate()?;
            let result = approximate_core_with(graph, &ensemble, &cell)?;
            let j = jaccard(&result.core, &exact);
            if best.is_none_or(|(_, _, b)| j > b) {
                best = Some((l, t, j));
            }
            rows.push((l, t, j));
        }
    }
    write_file(&args.common.out, |w| {
        writeln!(w, "l,t,jaccard")?;
        for (l, t, j) in &rows {
            writeln!(w, "{l},{t},{j:.6}")?;
        }
        Ok(())
    })?;
    if let Some((l, t, j)) = best {
        record.push("best_l", l).push("best_t", t).push("best_jaccard", format!("{j:.6}"));
    }
    record.push("grid_ms", ms(start));
    write_file(&sidecar(&args.common.out, ".stats"), |w| record.write(w))
}

fn cmd_eval(args: EvalArgs) -> Result<()> {
    let a = read_label_file(&args.a)?;
    let b = read_label_file(&args.b)?;
    let mut universe: Vec<u64> = a.iter().chain(&b).copied().collect();
    universe.sort_unstable();
    universe.dedup();
    let index = |labels: &[u64]| {
        VertexSet::from_iter(
            universe.len(),
            labels.iter().map(|l| universe.binary_search(l).unwrap()),
        )
    };
    let (sa, sb) = (index(&a), index(&b));
    let mut record = Record::new();
    record
        .push("a", args.a.display())
        .push("b", args.b.display())
        .push("a_size", sa.len())
        .push("b_size", sb.len())
        .push("intersection", sa.intersection_len(&sb))
        .push("union", sa.union_len(&sb))
        .push("jaccard", format!("{:.6}", jaccard(&sa, &sb)));
    match &args.out {
        Some(path) => write_file(path, |w| record.write(w)),
        None => record
            .write(std::io::stdout().lock())
            .map_err(|e| Error::InvalidArgument(format!("stdout: {e}"))),
    }
}

