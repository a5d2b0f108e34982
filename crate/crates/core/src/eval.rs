//! Community-detection scoring, correlation, benchmark graph generation and
//! the end-to-end prune-then-truss pipeline.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::baselines::sparsify_local;
use crate::cohesion::{hop_strengths, EdgeScoreTable, HopWeights};
use crate::density::prune;
use crate::graph::{CommunityAssignment, Graph, VertexId};
use crate::truss::{maximal_community_truss, TrussOptions};
use crate::{Error, Result};

/// Best-match F-score of `detected` against `truth`.
///
/// Each ground-truth community `T` is matched with the detected community
/// `D` maximizing `F(T, D) = 2|T ∩ D| / (|T| + |D|)`, the harmonic mean of
/// precision `|T ∩ D| / |D|` and recall `|T ∩ D| / |T|`. The per-community
/// scores are averaged with weights `|T|`. Truth vertices left unlabeled by
/// the detection only hurt recall.
///
/// Returns `Ok(None)` when either side has no communities.
pub fn f_score(detected: &CommunityAssignment, truth: &CommunityAssignment) -> Result<Option<f64>> {
    if detected.vertex_count() != truth.vertex_count() {
        return Err(Error::InvalidParameter(format!(
            "assignments cover {} and {} vertices",
            detected.vertex_count(),
            truth.vertex_count()
        )));
    }
    if detected.community_count() == 0 || truth.community_count() == 0 {
        return Ok(None);
    }
    let mut truth_size = vec![0usize; truth.community_count()];
    let mut det_size = vec![0usize; detected.community_count()];
    let mut overlap: HashMap<(u32, u32), usize> = HashMap::new();
    for (t, d) in truth.labels().iter().zip(detected.labels()) {
        if let Some(t) = t {
            truth_size[*t as usize] += 1;
        }
        if let Some(d) = d {
            det_size[*d as usize] += 1;
        }
        if let (Some(t), Some(d)) = (t, d) {
            *overlap.entry((*t, *d)).or_default() += 1;
        }
    }

    let mut best = vec![0.0f64; truth_size.len()];
    for (&(t, d), &n) in &overlap {
        let f = 2.0 * n as f64 / (truth_size[t as usize] + det_size[d as usize]) as f64;
        let slot = &mut best[t as usize];
        *slot = slot.max(f);
    }
    let total: usize = truth_size.iter().sum();
    let weighted: f64 = best
        .iter()
        .zip(&truth_size)
        .map(|(f, &s)| f * s as f64)
        .sum();
    Ok(Some(weighted / total as f64))
}

/// Sample Pearson correlation coefficient.
pub fn pearson(x: &[f64], y: &[f64]) -> Result<f64> {
    if x.len() != y.len() {
        return Err(Error::InvalidParameter(format!(
            "series lengths differ: {} vs {}",
            x.len(),
            y.len()
        )));
    }
    if x.len() < 2 {
        return Err(Error::UndefinedCorrelation("fewer than two values"));
    }
    let constant = |s: &[f64]| s.iter().all(|&v| v == s[0]);
    if constant(x) || constant(y) {
        return Err(Error::UndefinedCorrelation("zero variance"));
    }
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (a, b) in x.iter().zip(y) {
        let (dx, dy) = (a - mx, b - my);
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if sxx == 0.0 || syy == 0.0 {
        return Err(Error::UndefinedCorrelation("zero variance"));
    }
    Ok((sxy / (sxx.sqrt() * syy.sqrt())).clamp(-1.0, 1.0))
}

#[derive(Clone, Debug, PartialEq)]
pub enum Communities {
    /// Split `n` as evenly as possible; earlier communities get the extra
    /// vertices.
    Count(usize),
    Sizes(Vec<usize>),
}

/// Parameters of a planted-partition random graph.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorSpec {
    pub n: usize,
    pub communities: Communities,
    pub p_in: f64,
    pub p_out: f64,
    pub seed: u64,
}

impl GeneratorSpec {
    fn sizes(&self) -> Result<Vec<usize>> {
        let sizes = match &self.communities {
            Communities::Count(0) => {
                return Err(Error::InvalidParameter(
                    "community count must be positive".into(),
                ))
            }
            Communities::Count(c) => {
                let (q, r) = (self.n / c, self.n % c);
                (0..*c).map(|i| q + usize::from(i < r)).collect()
            }
            Communities::Sizes(s) => s.clone(),
        };
        if sizes.iter().sum::<usize>() != self.n {
            return Err(Error::InvalidParameter(format!(
                "community sizes {sizes:?} do not sum to n = {}",
                self.n
            )));
        }
        if sizes.contains(&0) {
            return Err(Error::InvalidParameter("empty community".into()));
        }
        Ok(sizes)
    }
}

/// Planted-partition graph: each same-community pair is joined with
/// probability `p_in`, every other pair with `p_out`. Communities occupy
/// contiguous vertex ranges.
pub fn planted_partition(spec: &GeneratorSpec) -> Result<(Graph, CommunityAssignment)> {
    let valid = |p: f64| (0.0..=1.0).contains(&p);
    if !valid(spec.p_in) || !valid(spec.p_out) || spec.p_out > spec.p_in {
        return Err(Error::InvalidParameter(format!(
            "need 0 <= p_out <= p_in <= 1, got p_in = {}, p_out = {}",
            spec.p_in, spec.p_out
        )));
    }
    let sizes = spec.sizes()?;
    let block: Vec<usize> = sizes
        .iter()
        .enumerate()
        .flat_map(|(c, &s)| std::iter::repeat_n(c, s))
        .collect();

    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut edges = Vec::new();
    for a in 0..spec.n {
        for b in a + 1..spec.n {
            let p = if block[a] == block[b] {
                spec.p_in
            } else {
                spec.p_out
            };
            if rng.gen::<f64>() < p {
                edges.push((a as VertexId, b as VertexId));
            }
        }
    }
    let g = Graph::from_edges(spec.n, edges)?;
    let truth = CommunityAssignment::from_labels(block.into_iter().map(Some).collect());
    Ok((g, truth))
}

/// Edge-removal step applied before truss-finding.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Method {
    Original,
    Sparsify { exponent: f64 },
    MdCore { weights: HopWeights },
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::Original => "original",
            Method::Sparsify { .. } => "sparsify",
            Method::MdCore { .. } => "mdcore",
        }
    }
}

impl FromStr for Method {
    type Err = Error;

    /// Parses a method name with default parameters.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "original" | "unpruned" => Ok(Method::Original),
            "sparsify" => Ok(Method::Sparsify { exponent: 0.5 }),
            "mdcore" => Ok(Method::MdCore {
                weights: HopWeights::default(),
            }),
            other => Err(Error::InvalidParameter(format!("unknown method `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EvalReport {
    pub method: Method,
    pub remaining_edges: usize,
    pub chosen_level: Option<u32>,
    pub detected_count: usize,
    pub ground_truth_count: usize,
    /// `None` when nothing was detected.
    pub f_score: Option<f64>,
    pub elapsed: Duration,
}

impl EvalReport {
    pub const CSV_HEADER: &'static str =
        "method,weights,exponent,remaining_edges,level,detected,ground_truth,f_score,elapsed_ms";

    pub fn csv_row(&self) -> String {
        let (weights, exponent) = match self.method {
            Method::MdCore { weights } => (weights.to_string(), String::new()),
            Method::Sparsify { exponent } => (String::new(), exponent.to_string()),
            Method::Original => (String::new(), String::new()),
        };
        format!(
            "{},\"{}\",{},{},{},{},{},{},{:.3}",
            self.method.name(),
            weights,
            exponent,
            self.remaining_edges,
            self.chosen_level.map(|k| k.to_string()).unwrap_or_default(),
            self.detected_count,
            self.ground_truth_count,
            self.f_score.map(|f| f.to_string()).unwrap_or_default(),
            self.elapsed.as_secs_f64() * 1e3
        )
    }
}

impl fmt::Display for EvalReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "method: {}", self.method.name())?;
        match self.method {
            Method::MdCore { weights } => write!(f, " (weights {weights})")?,
            Method::Sparsify { exponent } => write!(f, " (exponent {exponent})")?,
            Method::Original => {}
        }
        writeln!(f)?;
        writeln!(f, "remaining edges: {}", self.remaining_edges)?;
        match self.chosen_level {
            Some(k) => writeln!(f, "truss level: {k}")?,
            None => writeln!(f, "truss level: --")?,
        }
        writeln!(
            f,
            "detected communities: {} of {}",
            self.detected_count, self.ground_truth_count
        )?;
        match self.f_score {
            Some(s) => writeln!(f, "f-score: {s:.3}")?,
            None => writeln!(f, "f-score: --")?,
        }
        write!(f, "elapsed: {:.1} ms", self.elapsed.as_secs_f64() * 1e3)
    }
}

fn detect_and_score(
    reduced: &Graph,
    truth: &CommunityAssignment,
    truss: &TrussOptions,
) -> Result<(Option<u32>, CommunityAssignment)> {
    if reduced.edge_count() == 0 {
        return Ok((None, CommunityAssignment::unlabeled(truth.vertex_count())));
    }
    let r = maximal_community_truss(reduced, truss)?;
    Ok((r.chosen_level, r.labels))
}

fn report(
    method: Method,
    reduced: &Graph,
    truth: &CommunityAssignment,
    truss: &TrussOptions,
    start: Instant,
) -> Result<EvalReport> {
    let (chosen_level, detected) = detect_and_score(reduced, truth, truss)?;
    let f = f_score(&detected, truth)?;
    Ok(EvalReport {
        method,
        remaining_edges: reduced.edge_count(),
        chosen_level,
        detected_count: detected.community_count(),
        ground_truth_count: truth.community_count(),
        f_score: f,
        elapsed: start.elapsed(),
    })
}

/// Applies `method`, runs maximal-community truss-finding on what is left
/// and scores the clusters against `truth`.
pub fn run_pipeline(
    g: &Graph,
    truth: &CommunityAssignment,
    method: Method,
    truss: &TrussOptions,
) -> Result<EvalReport> {
    if truth.vertex_count() != g.vertex_count() {
        return Err(Error::InvalidParameter(
            "ground truth and graph have different vertex sets".into(),
        ));
    }
    let start = Instant::now();
    let reduced = match method {
        Method::Original => g.clone(),
        Method::Sparsify { exponent } => sparsify_local(g, exponent)?,
        Method::MdCore { weights } => {
            let scores = crate::cohesion::score_all(g, weights)?;
            prune(g, &scores)?
        }
    };
    report(method, &reduced, truth, truss, start)
}

/// MDCore pipeline under each weight vector, computing hop strengths once.
/// The first report's elapsed time includes the shared scoring.
pub fn weight_ablation(
    g: &Graph,
    truth: &CommunityAssignment,
    weights: &[HopWeights],
    truss: &TrussOptions,
) -> Result<Vec<EvalReport>> {
    if g.edge_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let start = Instant::now();
    let base = EdgeScoreTable::from_strengths(g, hop_strengths(g), HopWeights::default())?;
    let mut first = Some(start);
    weights
        .iter()
        .map(|&w| {
            let t0 = first.take().unwrap_or_else(Instant::now);
            let pruned = prune(g, &base.reweight(w))?;
            report(Method::MdCore { weights: w }, &pruned, truth, truss, t0)
        })
        .collect()
}
