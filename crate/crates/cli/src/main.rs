use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use linkcohesion::baselines::{edge_betweenness, sparsify_local};
use linkcohesion::cohesion::{score_all, EdgeScoreTable, HopWeights};
use linkcohesion::density::mdcore_sweep;
use linkcohesion::eval::{
    pearson, planted_partition, run_pipeline, weight_ablation, Communities, EvalReport,
    GeneratorSpec, Method,
};
use linkcohesion::graph::{load_communities, load_edge_list, Delimiter, LoadOptions};
use linkcohesion::truss::{maximal_community_truss, TrussOptions};
use linkcohesion::{CommunityAssignment, Graph};

/// Link cohesion scoring, MDCore pruning and truss-based community finding.
#[derive(Debug, Parser)]
#[command(name = "linkcohesion", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write per-edge hop strengths and cohesion as CSV.
    Score {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = HopWeights::default())]
        weights: HopWeights,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write the density curve of the MDCore sweep as CSV.
    Sweep {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        scoring: Scoring,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write the MDCore-pruned edge list.
    Prune {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        scoring: Scoring,
        /// Also write the density curve here.
        #[arg(long)]
        curve: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Find communities at the truss level with the most clusters.
    Truss {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 4)]
        min_level: u32,
        /// Also write the cluster count of every truss level here.
        #[arg(long)]
        levels: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write the Jaccard-sparsified edge list.
    Sparsify {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 0.5)]
        exponent: f64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write exact edge betweenness as CSV.
    Betweenness {
        #[command(flatten)]
        input: Input,
        /// Print the Pearson correlation with cohesion under these weights.
        #[arg(long)]
        correlate: Option<HopWeights>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run a pruning method plus truss-finding and score against ground truth.
    Eval {
        #[command(flatten)]
        input: Input,
        /// `vertex community` pairs.
        truth: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodName::Mdcore)]
        method: MethodName,
        /// MDCore hop weights; repeat to run an ablation.
        #[arg(long)]
        weights: Vec<HopWeights>,
        #[arg(long, default_value_t = 0.5)]
        exponent: f64,
        #[arg(long, default_value_t = 4)]
        min_level: u32,
        /// Write the detected communities of a single run here.
        #[arg(long)]
        detected: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Generate a planted-partition graph.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        communities: usize,
        #[arg(long)]
        p_in: f64,
        #[arg(long)]
        p_out: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Where to write the planted communities.
        #[arg(long)]
        truth_output: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct Input {
    /// Edge list: two vertex ids per line, `#` comments allowed.
    edges: PathBuf,
    /// Field separator; default splits on commas if present, else whitespace.
    #[arg(long)]
    delimiter: Option<char>,
    /// Treat self-loops as malformed input instead of dropping them.
    #[arg(long)]
    strict: bool,
}

#[derive(Debug, Args)]
struct Scoring {
    /// Hop weights (default 1,1,1).
    #[arg(long)]
    weights: Option<HopWeights>,
    /// Reuse a table written by `score` instead of recomputing.
    #[arg(long)]
    scores: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodName {
    Original,
    Sparsify,
    Mdcore,
}

mod exit {
    pub const FAILURE: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const MISSING_FILE: u8 = 3;
    pub const MALFORMED: u8 = 4;
}

fn open(path: &Path) -> Result<BufReader<File>> {
    let f = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
    Ok(BufReader::new(f))
}

fn sink(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("cannot create {}", p.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

impl Input {
    fn load(&self) -> Result<Graph> {
        let options = LoadOptions {
            delimiter: self.delimiter.map_or(Delimiter::Auto, Delimiter::Char),
            drop_self_loops: !self.strict,
            symmetrize: true,
        };
        let (g, stats) = load_edge_list(open(&self.edges)?, &options)
            .with_context(|| format!("reading {}", self.edges.display()))?;
        eprintln!(
            "loaded {} vertices, {} edges ({} duplicate, {} reciprocal, {} self-loop lines dropped)",
            g.vertex_count(),
            g.edge_count(),
            stats.duplicates,
            stats.reciprocal,
            stats.self_loops
        );
        Ok(g)
    }
}

impl Scoring {
    fn table(&self, g: &Graph) -> Result<EdgeScoreTable> {
        match &self.scores {
            Some(path) => {
                let table = EdgeScoreTable::read_csv(open(path)?, g)
                    .with_context(|| format!("reading {}", path.display()))?;
                Ok(match self.weights {
                    Some(w) => table.reweight(w),
                    None => table,
                })
            }
            None => Ok(score_all(g, self.weights.unwrap_or_default())?),
        }
    }
}

fn load_truth(path: &Path, g: &Graph) -> Result<CommunityAssignment> {
    load_communities(open(path)?, g).with_context(|| format!("reading {}", path.display()))
}

fn write_edge_list(g: &Graph, path: Option<&Path>) -> Result<()> {
    g.write_edge_list(sink(path)?)?;
    Ok(())
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Score {
            input,
            weights,
            output,
        } => {
            let g = input.load()?;
            score_all(&g, weights)?.write_csv(&g, sink(output.as_deref())?)?;
        }
        Command::Sweep {
            input,
            scoring,
            output,
        } => {
            let g = input.load()?;
            let curve = mdcore_sweep(&g, &scoring.table(&g)?)?;
            eprintln!(
                "best: remove {} edges, rho {}",
                curve.best_removed, curve.best_rho
            );
            curve.write_csv(sink(output.as_deref())?)?;
        }
        Command::Prune {
            input,
            scoring,
            curve,
            output,
        } => {
            let g = input.load()?;
            let sweep = mdcore_sweep(&g, &scoring.table(&g)?)?;
            if let Some(path) = curve {
                sweep.write_csv(sink(Some(&path))?)?;
            }
            let pruned = g.subgraph(&sweep.kept_mask(&g))?;
            eprintln!(
                "removed {} of {} edges, rho {}",
                sweep.best_removed,
                g.edge_count(),
                sweep.best_rho
            );
            write_edge_list(&pruned, output.as_deref())?;
        }
        Command::Truss {
            input,
            min_level,
            levels,
            output,
        } => {
            let g = input.load()?;
            let r = maximal_community_truss(&g, &TrussOptions { min_level })?;
            if let Some(path) = levels {
                r.write_levels_csv(sink(Some(&path))?)?;
            }
            match r.chosen_level {
                Some(k) => eprintln!("level {k}: {} communities", r.detected_count()),
                None => eprintln!("no truss level at or above {min_level}"),
            }
            r.labels.write_csv(&g, sink(output.as_deref())?)?;
        }
        Command::Sparsify {
            input,
            exponent,
            output,
        } => {
            let g = input.load()?;
            let s = sparsify_local(&g, exponent)?;
            eprintln!("kept {} of {} edges", s.edge_count(), g.edge_count());
            write_edge_list(&s, output.as_deref())?;
        }
        Command::Betweenness {
            input,
            correlate,
            output,
        } => {
            let g = input.load()?;
            let b = edge_betweenness(&g);
            if let Some(w) = correlate {
                let c = score_all(&g, w)?.cohesion_values();
                println!("pearson(cohesion, betweenness) = {}", pearson(&c, &b)?);
            }
            let mut out = sink(output.as_deref())?;
            writeln!(out, "u,v,betweenness")?;
            for (e, x) in g.edges().iter().zip(&b) {
                writeln!(out, "{},{},{x}", g.name(e.u), g.name(e.v))?;
            }
            out.flush()?;
        }
        Command::Eval {
            input,
            truth,
            method,
            weights,
            exponent,
            min_level,
            detected,
            output,
        } => {
            let g = input.load()?;
            let truth = load_truth(&truth, &g)?;
            let opts = TrussOptions { min_level };
            let reports = match method {
                MethodName::Mdcore if weights.len() > 1 => {
                    if detected.is_some() {
                        anyhow::bail!(usage("--detected needs a single weight vector"));
                    }
                    weight_ablation(&g, &truth, &weights, &opts)?
                }
                _ => {
                    let m = match method {
                        MethodName::Original => Method::Original,
                        MethodName::Sparsify => Method::Sparsify { exponent },
                        MethodName::Mdcore => Method::MdCore {
                            weights: weights.first().copied().unwrap_or_default(),
                        },
                    };
                    if let Some(path) = &detected {
                        write_detected(&g, m, &opts, path)?;
                    }
                    vec![run_pipeline(&g, &truth, m, &opts)?]
                }
            };
            let mut out = sink(output.as_deref())?;
            writeln!(out, "{}", EvalReport::CSV_HEADER)?;
            for r in &reports {
                writeln!(out, "{}", r.csv_row())?;
                eprintln!("{r}");
            }
            out.flush()?;
        }
        Command::Gen {
            n,
            communities,
            p_in,
            p_out,
            seed,
            truth_output,
            output,
        } => {
            let spec = GeneratorSpec {
                n,
                communities: Communities::Count(communities),
                p_in,
                p_out,
                seed,
            };
            let (g, truth) = planted_partition(&spec)?;
            eprintln!(
                "generated {} vertices, {} edges",
                g.vertex_count(),
                g.edge_count()
            );
            write_edge_list(&g, output.as_deref())?;
            if let Some(path) = truth_output {
                truth.write_csv(&g, sink(Some(&path))?)?;
            }
        }
    }
    Ok(())
}

fn write_detected(g: &Graph, method: Method, opts: &TrussOptions, path: &Path) -> Result<()> {
    let reduced = match method {
        Method::Original => g.clone(),
        Method::Sparsify { exponent } => sparsify_local(g, exponent)?,
        Method::MdCore { weights } => {
            g.subgraph(&mdcore_sweep(g, &score_all(g, weights)?)?.kept_mask(g))?
        }
    };
    let labels = if reduced.edge_count() == 0 {
        CommunityAssignment::unlabeled(g.vertex_count())
    } else {
        maximal_community_truss(&reduced, opts)?.labels
    };
    labels.write_csv(g, sink(Some(path))?)?;
    Ok(())
}

#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: &str) -> Usage {
    Usage(msg.to_owned())
}

fn exit_code(err: &anyhow::Error) -> u8 {
    use linkcohesion::Error as E;
    for cause in err.chain() {
        if cause.is::<Usage>() {
            return exit::USAGE;
        }
        if let Some(e) = cause.downcast_ref::<io::Error>() {
            if e.kind() == io::ErrorKind::NotFound {
                return exit::MISSING_FILE;
            }
        }
        match cause.downcast_ref::<E>() {
            Some(E::InvalidParameter(_)) => return exit::USAGE,
            Some(
                E::Parse { .. }
                | E::UnknownVertex(_)
                | E::ConflictingLabel { .. }
                | E::NotAnEdge(..)
                | E::ScoreMismatch
                | E::EmptyGraph,
            ) => return exit::MALFORMED,
            _ => {}
        }
    }
    exit::FAILURE
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    eprintln!("config: {:?}", cli.command);
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
