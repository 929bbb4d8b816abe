//! `bicliq`: maintain the maximal bicliques of a bipartite graph under an edge
//! stream.
//!
//! Exit codes: 0 success, 1 usage or I/O error, 2 parse error, 3 stream
//! inconsistency, 4 verification mismatch.

mod error;
mod format;
mod session;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use bicliq_core::oracle::{brute_force_change, gen_cp, gen_extremal, gen_random, make_stream, Convention, StreamSpec};
use bicliq_core::{EdgeBatch, SizeThreshold, StoreMode};
use clap::{Args, Parser, Subcommand};

use error::CliError;
use format::{Labels, OpKind, StreamOp};
use session::{Mode, Session};

#[derive(Parser)]
#[command(name = "bicliq", version, about = "Dynamic maximal biclique maintenance")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Replay an edge stream and report the change per batch.
    Run {
        #[command(flatten)]
        args: RunArgs,
        /// Check every batch against full re-enumeration.
        #[arg(long)]
        verify: bool,
    },
    /// Same as `run --verify`.
    Verify {
        #[command(flatten)]
        args: RunArgs,
    },
    /// Write generated graphs and streams.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Measure the largest single-edge change on the extremal graphs.
    Bound {
        #[arg(long, default_value_t = 4)]
        n_min: u32,
        /// Defaults to `--n-min`.
        #[arg(long)]
        n_max: Option<u32>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct RunArgs {
    /// Initial graph, one `<left> <right>` edge per line.
    #[arg(long)]
    graph: PathBuf,
    /// Stream of `<op> <left> <right> [timestamp]` lines.
    #[arg(long)]
    stream: Option<PathBuf>,
    /// Generate the stream from the graph instead: keep this fraction of
    /// edges and replay the rest (add mode) or delete the rest (delete mode).
    #[arg(long, conflicts_with = "stream")]
    retain: Option<f64>,
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
    batch_size: u64,
    /// Minimum size of each side of a reported biclique.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    threshold: u64,
    #[arg(long, value_enum, default_value_t = Mode::Add)]
    mode: Mode,
    /// `hash64` or `exact`.
    #[arg(long, default_value = "hash64", value_parser = StoreMode::from_str)]
    signature: StoreMode,
    /// Metrics CSV; stdout when omitted.
    #[arg(long)]
    metrics_out: Option<PathBuf>,
    /// Change log, one `N|S <batch> ({left},{right})` line per biclique.
    #[arg(long)]
    changes_out: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum GenKind {
    /// Cocktail-party graph: K_{k,k} minus a perfect matching.
    Cp {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Graph on `n` vertices whose missing edge `(u,v)` changes the most
    /// maximal bicliques.
    Extremal {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write a one-line stream adding the missing edge.
        #[arg(long)]
        stream_out: Option<PathBuf>,
    },
    /// Random bipartite graph with independent edges.
    Random {
        #[arg(long)]
        left: u32,
        #[arg(long)]
        right: u32,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Fraction of edges kept in the graph file when `--stream-out` is set.
        #[arg(long, default_value_t = 0.1)]
        retain: f64,
        /// Write only the retained edges to `--out` and the rest, shuffled,
        /// as additions here.
        #[arg(long)]
        stream_out: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn create(path: &Path) -> Result<BufWriter<File>, CliError> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| CliError::io(&path.display().to_string(), e))
}

fn output(path: Option<&Path>) -> Result<Box<dyn Write>, CliError> {
    Ok(match path {
        Some(p) => Box::new(create(p)?),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn write_to(path: Option<&Path>, f: impl FnOnce(&mut dyn Write) -> io::Result<()>) -> Result<(), CliError> {
    let name = path.map_or_else(|| "stdout".to_owned(), |p| p.display().to_string());
    let mut out = output(path)?;
    f(&mut out).and_then(|()| out.flush()).map_err(|e| CliError::io(&name, e))
}

fn fraction(name: &str, x: f64) -> Result<f64, CliError> {
    if (0.0..=1.0).contains(&x) {
        Ok(x)
    } else {
        Err(CliError::Usage(format!("--{name} must lie in [0, 1], got {x}")))
    }
}

fn generated_ops(batches: Vec<EdgeBatch>, kind: OpKind) -> Vec<StreamOp> {
    batches
        .iter()
        .flat_map(|b| b.iter().copied())
        .map(|edge| StreamOp { kind, edge, line: 0 })
        .collect()
}

fn run(args: RunArgs, verify: bool) -> Result<(), CliError> {
    let mut labels = Labels::default();
    let mut graph = format::read_graph(&args.graph, &mut labels)?;
    let batch_size = args.batch_size as usize;
    let ops = match (&args.stream, args.retain) {
        (Some(path), _) => format::read_stream(path, &mut labels)?,
        (None, Some(retain)) => {
            let spec = StreamSpec {
                retain_fraction: fraction("retain", retain)?,
                batch_size,
                seed: args.seed,
            };
            let (initial, batches) = make_stream(&graph, spec);
            match args.mode {
                Mode::Add => {
                    graph = initial;
                    generated_ops(batches, OpKind::Add)
                }
                Mode::Delete => generated_ops(batches, OpKind::Remove),
                Mode::Mixed => {
                    return Err(CliError::Usage("--retain supports add and delete modes only".into()))
                }
            }
        }
        (None, None) => return Err(CliError::Usage("one of --stream or --retain is required".into())),
    };

    let threshold = SizeThreshold::new(args.threshold as usize).expect("threshold is at least 1");
    let mut session = Session::new(graph, labels, threshold, args.signature, args.mode, verify);
    let metrics = output(args.metrics_out.as_deref())?;
    let changes = args.changes_out.as_deref().map(create).transpose()?;
    let batches = session.run(&ops, batch_size, metrics, changes)?;
    eprintln!(
        "{batches} batches, {} operations; store holds {} maximal bicliques, graph has {} edges",
        ops.len(),
        session.state.store().len(),
        session.state.graph().num_edges()
    );
    Ok(())
}

fn generate(kind: GenKind) -> Result<(), CliError> {
    match kind {
        GenKind::Cp { k, out } => {
            if k == 0 {
                return Err(CliError::Usage("--k must be positive".into()));
            }
            let g = gen_cp(k);
            write_to(out.as_deref(), |w| format::write_graph(w, &g, &format!("cocktail-party graph, k = {k}")))
        }
        GenKind::Extremal { n, out, stream_out } => {
            let (g, e) = gen_extremal(n).map_err(|e| CliError::Usage(e.to_string()))?;
            let comment = format!("extremal graph, n = {n}; missing edge {} {}", e.left, e.right);
            write_to(out.as_deref(), |w| format::write_graph(w, &g, &comment))?;
            match stream_out {
                Some(p) => write_to(Some(&p), |w| format::write_stream(w, OpKind::Add, [&e])),
                None => Ok(()),
            }
        }
        GenKind::Random { left, right, p, seed, retain, stream_out, out } => {
            let g = gen_random(left, right, fraction("p", p)?, seed);
            let comment = format!("random graph, {left} x {right}, p = {p}, seed = {seed}");
            match stream_out {
                None => write_to(out.as_deref(), |w| format::write_graph(w, &g, &comment)),
                Some(sp) => {
                    let spec = StreamSpec {
                        retain_fraction: fraction("retain", retain)?,
                        batch_size: 1,
                        seed,
                    };
                    let (initial, batches) = make_stream(&g, spec);
                    let comment = format!("{comment}; retained fraction {retain}");
                    write_to(out.as_deref(), |w| format::write_graph(w, &initial, &comment))?;
                    write_to(Some(&sp), |w| {
                        format::write_stream(w, OpKind::Add, batches.iter().flat_map(|b| b.edges()))
                    })
                }
            }
        }
    }
}

/// Largest `n` the exhaustive oracle accepts here.
const BOUND_MAX_N: u32 = 14;

fn bound(n_min: u32, n_max: Option<u32>, out: Option<PathBuf>) -> Result<(), CliError> {
    let n_max = n_max.unwrap_or(n_min);
    for n in [n_min, n_max] {
        if n % 2 == 1 || !(4..=BOUND_MAX_N).contains(&n) {
            return Err(CliError::Usage(format!("n must be even and in 4..={BOUND_MAX_N}, got {n}")));
        }
    }
    if n_min > n_max {
        return Err(CliError::Usage(format!("--n-min {n_min} exceeds --n-max {n_max}")));
    }
    let mut rows = Vec::new();
    for n in (n_min..=n_max).step_by(2) {
        let (g, e) = gen_extremal(n).map_err(|e| CliError::Usage(e.to_string()))?;
        let mut after = g.clone();
        after.add_edges(&vec![e].into()).expect("the extremal edge is absent");
        let observed = brute_force_change(&g, &after, Convention::TrivialInclusive)
            .map_err(|e| CliError::Usage(e.to_string()))?
            .len();
        let predicted = 3usize << ((n - 2) / 2);
        rows.push((n, observed, predicted));
    }
    write_to(out.as_deref(), |w| {
        let mut csv = csv::Writer::from_writer(w);
        csv.write_record(["n", "observed", "predicted", "pass"])?;
        for &(n, observed, predicted) in &rows {
            csv.serialize((n, observed, predicted, observed == predicted))?;
        }
        csv.flush()
    })?;
    match rows.iter().find(|r| r.1 != r.2) {
        Some(&(n, observed, predicted)) => Err(CliError::Verify(format!(
            "n = {n}: observed change {observed}, expected {predicted}"
        ))),
        None => Ok(()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Run { args, verify } => run(args, verify),
        Command::Verify { args } => run(args, true),
        Command::Gen { kind } => generate(kind),
        Command::Bound { n_min, n_max, out } => bound(n_min, n_max, out),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("bicliq: {e}");
            e.exit_code()
        }
    }
}
