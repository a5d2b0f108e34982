//! Browser bindings: build a graph, then explore the density curve, truss
//! levels and the cohesion/betweenness relationship under chosen hop
//! weights.

use linkcohesion::baselines::edge_betweenness;
use linkcohesion::cohesion::{hop_strengths, EdgeScoreTable, HopWeights};
use linkcohesion::density::mdcore_sweep;
use linkcohesion::eval::{f_score, pearson, planted_partition, Communities, GeneratorSpec};
use linkcohesion::graph::{load_communities, load_edge_list, LoadOptions};
use linkcohesion::truss::{maximal_community_truss, TrussOptions};
use linkcohesion::{CommunityAssignment, Graph};
use wasm_bindgen::prelude::*;

const KARATE_EDGES: &str = include_str!("../../core/tests/data/karate.txt");
const KARATE_CLUBS: &str = include_str!("../../core/tests/data/karate_club.txt");

fn js_err(e: linkcohesion::Error) -> JsError {
    JsError::new(&e.to_string())
}

/// A loaded graph with its ground truth and cached hop strengths.
#[wasm_bindgen]
pub struct Demo {
    graph: Graph,
    truth: CommunityAssignment,
    base: EdgeScoreTable,
    betweenness: Option<Vec<f64>>,
}

#[wasm_bindgen]
impl Demo {
    /// Zachary's karate club.
    pub fn karate() -> Result<Demo, JsError> {
        let (graph, _) =
            load_edge_list(KARATE_EDGES.as_bytes(), &LoadOptions::default()).map_err(js_err)?;
        let truth = load_communities(KARATE_CLUBS.as_bytes(), &graph).map_err(js_err)?;
        Demo::new(graph, truth)
    }

    /// Planted-partition graph with `communities` equal blocks.
    pub fn planted(
        n: usize,
        communities: usize,
        p_in: f64,
        p_out: f64,
        seed: u32,
    ) -> Result<Demo, JsError> {
        let spec = GeneratorSpec {
            n,
            communities: Communities::Count(communities),
            p_in,
            p_out,
            seed: seed as u64,
        };
        let (graph, truth) = planted_partition(&spec).map_err(js_err)?;
        Demo::new(graph, truth)
    }

    #[wasm_bindgen(getter)]
    pub fn vertices(&self) -> usize {
        self.graph.vertex_count()
    }

    #[wasm_bindgen(getter)]
    pub fn edges(&self) -> usize {
        self.graph.edge_count()
    }

    /// Density after each removal count `0..=|E|`.
    pub fn density_curve(&self, w1: f64, w2: f64, w3: f64) -> Result<Vec<f64>, JsError> {
        let curve = mdcore_sweep(&self.graph, &self.scores(w1, w2, w3)?).map_err(js_err)?;
        Ok(curve.points.iter().map(|p| p.rho).collect())
    }

    /// Flattened `[k, clusters, ...]` for the original graph when `weights`
    /// is empty, otherwise for the graph pruned under those weights. The
    /// last three entries are the chosen level (0 if none), the detected
    /// count and the F-score (NaN if undefined).
    pub fn truss_levels(&self, weights: Vec<f64>, min_level: u32) -> Result<Vec<f64>, JsError> {
        let g = match weights[..] {
            [] => self.graph.clone(),
            [w1, w2, w3] => {
                let curve = mdcore_sweep(&self.graph, &self.scores(w1, w2, w3)?).map_err(js_err)?;
                self.graph
                    .subgraph(&curve.kept_mask(&self.graph))
                    .map_err(js_err)?
            }
            _ => return Err(JsError::new("expected zero or three weights")),
        };
        let r = maximal_community_truss(&g, &TrussOptions { min_level }).map_err(js_err)?;
        let f = f_score(&r.labels, &self.truth).map_err(js_err)?;
        let mut out: Vec<f64> = r
            .level_clusters
            .iter()
            .flat_map(|&(k, c)| [k as f64, c as f64])
            .collect();
        out.push(r.chosen_level.unwrap_or(0) as f64);
        out.push(r.detected_count() as f64);
        out.push(f.unwrap_or(f64::NAN));
        Ok(out)
    }

    /// Interleaved `[cohesion, betweenness, ...]` per edge, followed by the
    /// Pearson correlation (NaN if undefined).
    pub fn cohesion_vs_betweenness(
        &mut self,
        w1: f64,
        w2: f64,
        w3: f64,
    ) -> Result<Vec<f64>, JsError> {
        let cohesion = self.scores(w1, w2, w3)?.cohesion_values();
        let graph = &self.graph;
        let b = self
            .betweenness
            .get_or_insert_with(|| edge_betweenness(graph));
        let mut out: Vec<f64> = cohesion
            .iter()
            .zip(b.iter())
            .flat_map(|(&c, &x)| [c, x])
            .collect();
        out.push(pearson(&cohesion, b).unwrap_or(f64::NAN));
        Ok(out)
    }
}

impl Demo {
    fn new(graph: Graph, truth: CommunityAssignment) -> Result<Demo, JsError> {
        if graph.edge_count() == 0 {
            return Err(JsError::new("graph has no edges"));
        }
        let base =
            EdgeScoreTable::from_strengths(&graph, hop_strengths(&graph), HopWeights::default())
                .map_err(js_err)?;
        Ok(Demo {
            graph,
            truth,
            base,
            betweenness: None,
        })
    }

    fn scores(&self, w1: f64, w2: f64, w3: f64) -> Result<EdgeScoreTable, JsError> {
        let w = HopWeights::new(w1, w2, w3).map_err(js_err)?;
        Ok(self.base.reweight(w))
    }
}
