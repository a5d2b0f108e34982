//! Hop-based link strengths and the aggregate link-cohesion score.
//!
//! For an edge `(i, j)` with endpoint degrees `k_i`, `k_j`:
//!
//! * `a1 = 1 / (k_i k_j)`
//! * `a2 = (1 / (k_i k_j)^2) * sum over common neighbors l of 1 / k_l^2`
//! * `a3 = (1 / (k_i k_j)^2) * sum over paths i-m-n-j of 1 / (k_m k_n)^2`,
//!   where `m`, `n` are distinct and both differ from `i` and `j`. Both
//!   orientations of a quadrilateral count, and chords do not disqualify a
//!   path.
//!
//! Each strength is normalized against its mean over all edges,
//! `c_n = a_n / (mu_n + a_n)`, and the cohesion is the weighted mean of the
//! three normalized strengths.

use std::io::{BufRead, Write};
use std::str::FromStr;

use crate::graph::{EdgeRef, Graph, VertexId};
use crate::{Error, Result};

/// Non-negative weights for the three normalized hop strengths.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HopWeights([f64; 3]);

impl HopWeights {
    /// The seven binary inclusion patterns, equal weighting first.
    pub const BINARY: [[f64; 3]; 7] = [
        [1.0, 1.0, 1.0],
        [1.0, 1.0, 0.0],
        [1.0, 0.0, 1.0],
        [0.0, 1.0, 1.0],
        [1.0, 0.0, 0.0],
        [0.0, 1.0, 0.0],
        [0.0, 0.0, 1.0],
    ];

    pub fn new(w1: f64, w2: f64, w3: f64) -> Result<Self> {
        let w = [w1, w2, w3];
        if w.iter().any(|x| !x.is_finite() || *x < 0.0) {
            return Err(Error::InvalidParameter(format!(
                "hop weights must be finite and non-negative, got {w:?}"
            )));
        }
        if w.iter().all(|&x| x == 0.0) {
            return Err(Error::InvalidParameter(
                "hop weights must not all be zero".into(),
            ));
        }
        Ok(Self(w))
    }

    pub fn as_array(&self) -> [f64; 3] {
        self.0
    }

    fn combine(&self, c: &[f64; 3]) -> f64 {
        let total: f64 = self.0.iter().sum();
        self.0.iter().zip(c).map(|(w, c)| w * c).sum::<f64>() / total
    }
}

impl Default for HopWeights {
    fn default() -> Self {
        Self([1.0; 3])
    }
}

impl std::fmt::Display for HopWeights {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{},{},{}", self.0[0], self.0[1], self.0[2])
    }
}

impl FromStr for HopWeights {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<f64> = s
            .split(',')
            .map(|p| p.trim().parse::<f64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::InvalidParameter(format!("weights `{s}`: {e}")))?;
        match parts[..] {
            [a, b, c] => Self::new(a, b, c),
            _ => Err(Error::InvalidParameter(format!(
                "weights `{s}`: expected three comma-separated values"
            ))),
        }
    }
}

/// Scores for one edge.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EdgeScore {
    /// Raw hop strengths `a1, a2, a3`.
    pub strength: [f64; 3],
    /// Normalized strengths `c1, c2, c3`, each in `[0, 1)`.
    pub normalized: [f64; 3],
    pub cohesion: f64,
}

/// Per-edge scores aligned with a graph's [`EdgeId`](crate::EdgeId)s.
#[derive(Clone, Debug, PartialEq)]
pub struct EdgeScoreTable {
    edges: Vec<EdgeRef>,
    scores: Vec<EdgeScore>,
    mu: [f64; 3],
    weights: HopWeights,
}

impl EdgeScoreTable {
    /// Normalizes raw strengths (one triple per edge of `g`, in edge-id
    /// order) and aggregates them with `weights`.
    pub fn from_strengths(
        g: &Graph,
        strengths: Vec<[f64; 3]>,
        weights: HopWeights,
    ) -> Result<Self> {
        if strengths.len() != g.edge_count() {
            return Err(Error::ScoreMismatch);
        }
        if strengths.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let m = strengths.len() as f64;
        let mut mu = [0.0; 3];
        for a in &strengths {
            for n in 0..3 {
                mu[n] += a[n];
            }
        }
        mu.iter_mut().for_each(|x| *x /= m);

        let scores = strengths
            .into_iter()
            .map(|a| {
                let mut c = [0.0; 3];
                for n in 0..3 {
                    let denom = mu[n] + a[n];
                    c[n] = if denom > 0.0 { a[n] / denom } else { 0.0 };
                }
                EdgeScore {
                    strength: a,
                    normalized: c,
                    cohesion: weights.combine(&c),
                }
            })
            .collect();
        Ok(Self {
            edges: g.edges().to_vec(),
            scores,
            mu,
            weights,
        })
    }

    /// Same strengths and means, new aggregation weights.
    pub fn reweight(&self, weights: HopWeights) -> Self {
        let scores = self
            .scores
            .iter()
            .map(|s| EdgeScore {
                cohesion: weights.combine(&s.normalized),
                ..*s
            })
            .collect();
        Self {
            edges: self.edges.clone(),
            scores,
            mu: self.mu,
            weights,
        }
    }

    pub fn len(&self) -> usize {
        self.scores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }

    pub fn scores(&self) -> &[EdgeScore] {
        &self.scores
    }

    pub fn get(&self, id: crate::EdgeId) -> &EdgeScore {
        &self.scores[id]
    }

    pub fn cohesion(&self, id: crate::EdgeId) -> f64 {
        self.scores[id].cohesion
    }

    pub fn cohesion_values(&self) -> Vec<f64> {
        self.scores.iter().map(|s| s.cohesion).collect()
    }

    /// Mean raw strength per hop count, over all edges.
    pub fn mu(&self) -> [f64; 3] {
        self.mu
    }

    pub fn weights(&self) -> HopWeights {
        self.weights
    }

    pub fn edges(&self) -> &[EdgeRef] {
        &self.edges
    }

    /// True when this table was computed for exactly `g`'s edge set.
    pub fn matches(&self, g: &Graph) -> bool {
        self.edges == g.edges()
    }

    pub fn write_csv<W: Write>(&self, g: &Graph, mut out: W) -> std::io::Result<()> {
        writeln!(out, "# weights={}", self.weights)?;
        writeln!(out, "u,v,a1,a2,a3,c1,c2,c3,cohesion")?;
        for (e, s) in self.edges.iter().zip(&self.scores) {
            let [a1, a2, a3] = s.strength;
            let [c1, c2, c3] = s.normalized;
            writeln!(
                out,
                "{},{},{a1},{a2},{a3},{c1},{c2},{c3},{}",
                g.name(e.u),
                g.name(e.v),
                s.cohesion
            )?;
        }
        out.flush()
    }

    /// Reads a table written by [`EdgeScoreTable::write_csv`] back against
    /// `g`, recomputing the normalization from the stored raw strengths.
    pub fn read_csv<R: BufRead>(source: R, g: &Graph) -> Result<Self> {
        let mut weights = HopWeights::default();
        let mut strengths: Vec<Option<[f64; 3]>> = vec![None; g.edge_count()];
        let mut header_seen = false;
        for (i, line) in source.lines().enumerate() {
            let line = line?;
            let line = line.trim();
            let lineno = i + 1;
            let parse_err = |message: String| Error::Parse {
                line: lineno,
                message,
            };
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix('#') {
                if let Some(w) = rest.trim().strip_prefix("weights=") {
                    weights = w.parse()?;
                }
                continue;
            }
            if !header_seen {
                header_seen = true;
                if line.starts_with("u,v") {
                    continue;
                }
            }
            let fields: Vec<&str> = line.split(',').map(str::trim).collect();
            if fields.len() != 9 {
                return Err(parse_err(format!(
                    "expected 9 fields, found {}",
                    fields.len()
                )));
            }
            let vertex = |name: &str| {
                g.vertex_by_name(name)
                    .ok_or_else(|| Error::UnknownVertex(name.to_owned()))
            };
            let (u, v): (VertexId, VertexId) = (vertex(fields[0])?, vertex(fields[1])?);
            let id = g.edge_id(u, v).ok_or(Error::NotAnEdge(u, v))?;
            let mut a = [0.0; 3];
            for n in 0..3 {
                a[n] = fields[2 + n]
                    .parse()
                    .map_err(|e| parse_err(format!("a{}: {e}", n + 1)))?;
            }
            if strengths[id].replace(a).is_some() {
                return Err(parse_err(format!(
                    "edge ({}, {}) listed twice",
                    fields[0], fields[1]
                )));
            }
        }
        let strengths = strengths
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or(Error::ScoreMismatch)?;
        Self::from_strengths(g, strengths, weights)
    }
}

fn oriented(g: &Graph, e: EdgeRef) -> (VertexId, VertexId) {
    if (g.degree(e.u), e.u) <= (g.degree(e.v), e.v) {
        (e.u, e.v)
    } else {
        (e.v, e.u)
    }
}

fn inverse_square_degrees(g: &Graph) -> Vec<f64> {
    (0..g.vertex_count() as VertexId)
        .map(|v| {
            let k = g.degree(v) as f64;
            1.0 / (k * k)
        })
        .collect()
}

/// Raw `[a1, a2, a3]` for one edge. `mark` must hold no entry equal to
/// `stamp` on entry; afterwards the neighbors of one endpoint carry it.
fn strengths_with(
    g: &Graph,
    inv_sq: &[f64],
    e: EdgeRef,
    mark: &mut [usize],
    stamp: usize,
) -> [f64; 3] {
    // Walk from the lower-degree endpoint, test membership against the other.
    let (i, j) = oriented(g, e);
    for &n in g.neighbors(j) {
        mark[n as usize] = stamp;
    }
    let mut two = 0.0;
    let mut three = 0.0;
    for &m in g.neighbors(i) {
        if m == j {
            continue;
        }
        if mark[m as usize] == stamp {
            two += inv_sq[m as usize];
        }
        let mut inner = 0.0;
        for &n in g.neighbors(m) {
            if n != i && mark[n as usize] == stamp {
                inner += inv_sq[n as usize];
            }
        }
        three += inv_sq[m as usize] * inner;
    }
    let p = 1.0 / (g.degree(i) as f64 * g.degree(j) as f64);
    [p, p * p * two, p * p * three]
}

fn single_edge(g: &Graph, e: EdgeRef) -> Result<[f64; 3]> {
    g.require_edge(e)?;
    let mut mark = vec![0; g.vertex_count()];
    Ok(strengths_with(
        g,
        &inverse_square_degrees(g),
        e,
        &mut mark,
        1,
    ))
}

/// `1 / (k_i k_j)`.
pub fn single_link_strength(g: &Graph, e: EdgeRef) -> Result<f64> {
    g.require_edge(e)?;
    Ok(1.0 / (g.degree(e.u) as f64 * g.degree(e.v) as f64))
}

/// Triangle support, each common neighbor weighted by its inverse squared
/// degree.
pub fn double_link_strength(g: &Graph, e: EdgeRef) -> Result<f64> {
    single_edge(g, e).map(|a| a[1])
}

/// Quadrilateral support over ordered 3-hop paths `i-m-n-j`.
pub fn triple_link_strength(g: &Graph, e: EdgeRef) -> Result<f64> {
    single_edge(g, e).map(|a| a[2])
}

/// Raw `[a1, a2, a3]` for every edge, in edge-id order.
pub fn hop_strengths(g: &Graph) -> Vec<[f64; 3]> {
    let inv_sq = inverse_square_degrees(g);
    let n = g.vertex_count();
    let edges = g.edges();

    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        edges
            .par_iter()
            .enumerate()
            .map_init(
                || vec![0usize; n],
                |mark, (id, &e)| strengths_with(g, &inv_sq, e, mark, id + 1),
            )
            .collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        let mut mark = vec![0usize; n];
        edges
            .iter()
            .enumerate()
            .map(|(id, &e)| strengths_with(g, &inv_sq, e, &mut mark, id + 1))
            .collect()
    }
}

/// Scores every edge of `g`.
pub fn score_all(g: &Graph, weights: HopWeights) -> Result<EdgeScoreTable> {
    if g.edge_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    EdgeScoreTable::from_strengths(g, hop_strengths(g), weights)
}
