//! Link-cohesion density and the MDCore pruning sweep.
//!
//! The density of a set of active edges is `v_c * c_avg`: the number of
//! vertices touching at least one active edge times the mean cohesion of the
//! active edges. MDCore removes edges in ascending cohesion order (scores are
//! never recomputed) and keeps the prefix that maximizes the density.

use std::io::Write;

use crate::cohesion::EdgeScoreTable;
use crate::graph::{EdgeId, EdgeMask, Graph};
use crate::{Error, Result};

/// Relative slack under which two densities count as tied.
const TIE_TOLERANCE: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DensityPoint {
    pub removed: usize,
    pub rho: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DensityCurve {
    /// One point per prefix length `0..=|E|`.
    pub points: Vec<DensityPoint>,
    /// Smallest number of removals attaining `best_rho`.
    pub best_removed: usize,
    pub best_rho: f64,
    /// Edge ids by ascending cohesion, ties by edge id.
    pub removal_order: Vec<EdgeId>,
}

impl DensityCurve {
    /// Edges that survive the best prefix.
    pub fn kept_mask(&self, g: &Graph) -> EdgeMask {
        let mut mask = EdgeMask::full(g);
        for &id in &self.removal_order[..self.best_removed] {
            mask.set(id, false);
        }
        mask
    }

    pub fn write_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "removed_count,rho")?;
        for p in &self.points {
            writeln!(out, "{},{}", p.removed, p.rho)?;
        }
        out.flush()
    }
}

fn check(g: &Graph, scores: &EdgeScoreTable) -> Result<()> {
    if scores.matches(g) {
        Ok(())
    } else {
        Err(Error::ScoreMismatch)
    }
}

/// Density of the active edges, recomputed from scratch.
pub fn density(g: &Graph, scores: &EdgeScoreTable, active: &EdgeMask) -> Result<f64> {
    check(g, scores)?;
    active.check(g)?;
    let mut touched = vec![false; g.vertex_count()];
    let mut sum = 0.0;
    let mut count = 0usize;
    for id in active.active_ids() {
        let e = g.edge(id);
        touched[e.u as usize] = true;
        touched[e.v as usize] = true;
        sum += scores.cohesion(id);
        count += 1;
    }
    if count == 0 {
        return Ok(0.0);
    }
    let vc = touched.iter().filter(|&&t| t).count();
    Ok(vc as f64 * sum / count as f64)
}

/// Edge ids sorted by ascending cohesion, ties broken by canonical edge order.
pub fn removal_order(scores: &EdgeScoreTable) -> Vec<EdgeId> {
    let mut order: Vec<EdgeId> = (0..scores.len()).collect();
    order.sort_by(|&a, &b| {
        scores
            .cohesion(a)
            .total_cmp(&scores.cohesion(b))
            .then(a.cmp(&b))
    });
    order
}

/// Density after every prefix of the removal order.
///
/// Each step updates the active-degree counters of the removed edge's
/// endpoints in O(1); the remaining cohesion sum comes from a suffix sum so
/// no rounding error accumulates along the sweep.
pub fn mdcore_sweep(g: &Graph, scores: &EdgeScoreTable) -> Result<DensityCurve> {
    check(g, scores)?;
    let order = removal_order(scores);
    let m = order.len();

    let mut suffix = vec![0.0; m + 1];
    for r in (0..m).rev() {
        suffix[r] = suffix[r + 1] + scores.cohesion(order[r]);
    }

    let mut degree: Vec<usize> = (0..g.vertex_count() as u32).map(|v| g.degree(v)).collect();
    let mut vc = degree.iter().filter(|&&d| d > 0).count();
    let mut points = Vec::with_capacity(m + 1);
    for r in 0..=m {
        let rho = if r == m {
            0.0
        } else {
            vc as f64 * suffix[r] / (m - r) as f64
        };
        points.push(DensityPoint { removed: r, rho });
        if r < m {
            let e = g.edge(order[r]);
            for x in [e.u as usize, e.v as usize] {
                degree[x] -= 1;
                if degree[x] == 0 {
                    vc -= 1;
                }
            }
        }
    }

    let best_rho = points.iter().map(|p| p.rho).fold(0.0, f64::max);
    let floor = best_rho - TIE_TOLERANCE * best_rho;
    let best_removed = points
        .iter()
        .find(|p| p.rho >= floor)
        .map_or(0, |p| p.removed);
    Ok(DensityCurve {
        points,
        best_removed,
        best_rho,
        removal_order: order,
    })
}

/// The subgraph left by the density-maximizing prefix. Vertices that lose
/// all their edges stay in the vertex set.
pub fn prune(g: &Graph, scores: &EdgeScoreTable) -> Result<Graph> {
    let curve = mdcore_sweep(g, scores)?;
    g.subgraph(&curve.kept_mask(g))
}
