//! k-truss decomposition and maximal-community truss-finding.
//!
//! The k-truss is the largest subgraph in which every edge closes at least
//! `k - 2` triangles with other edges of the subgraph. An edge's trussness is
//! the largest `k` whose truss still contains it; every edge is in the
//! 2-truss.

use std::io::Write;

use crate::graph::{connected_components, CommunityAssignment, EdgeId, EdgeMask, Graph};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TrussOptions {
    /// Lowest truss level eligible for selection. Levels below it are still
    /// reported in [`TrussResult::level_clusters`].
    pub min_level: u32,
}

impl Default for TrussOptions {
    fn default() -> Self {
        Self { min_level: 4 }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TrussResult {
    /// Per-edge trussness, indexed by edge id.
    pub trussness: Vec<u32>,
    /// `(k, clusters)` for every level `2..=max trussness`.
    pub level_clusters: Vec<(u32, usize)>,
    /// Level with the most clusters (lowest on ties), or `None` when no
    /// eligible level has any.
    pub chosen_level: Option<u32>,
    /// Components of the chosen level's subgraph.
    pub labels: CommunityAssignment,
}

impl TrussResult {
    pub fn detected_count(&self) -> usize {
        self.labels.community_count()
    }

    pub fn write_levels_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "k,cluster_count")?;
        for (k, c) in &self.level_clusters {
            writeln!(out, "{k},{c}")?;
        }
        out.flush()
    }
}

/// Triangle count of every edge, by merging sorted neighbor lists.
pub fn edge_support(g: &Graph) -> Vec<usize> {
    g.edges()
        .iter()
        .map(|e| {
            let (a, b) = (g.neighbors(e.u), g.neighbors(e.v));
            let (mut i, mut j, mut count) = (0, 0, 0);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => {
                        count += 1;
                        i += 1;
                        j += 1;
                    }
                }
            }
            count
        })
        .collect()
}

/// Trussness of every edge by support peeling with a bucket queue.
///
/// Edges leave in order of current support; when an edge leaves, each
/// triangle it closed loses one unit of support on its other two edges,
/// never dropping below the level being peeled.
pub fn truss_decomposition(g: &Graph) -> Vec<u32> {
    let m = g.edge_count();
    let mut support = edge_support(g);
    let top = support.iter().copied().max().unwrap_or(0);
    let mut buckets: Vec<Vec<EdgeId>> = vec![Vec::new(); top + 1];
    for (id, &s) in support.iter().enumerate() {
        buckets[s].push(id);
    }

    let mut removed = vec![false; m];
    let mut trussness = vec![0u32; m];
    let mut level = 0usize;
    let mut done = 0usize;
    while done < m {
        let Some(id) = buckets[level].pop() else {
            level += 1;
            continue;
        };
        // Entries left behind by a support decrement are stale.
        if removed[id] || support[id] != level {
            continue;
        }
        removed[id] = true;
        trussness[id] = level as u32 + 2;
        done += 1;

        let e = g.edge(id);
        let (u, v) = if g.degree(e.u) <= g.degree(e.v) {
            (e.u, e.v)
        } else {
            (e.v, e.u)
        };
        for (w, uw) in g.incident(u) {
            if w == v || removed[uw] {
                continue;
            }
            let Some(vw) = g.edge_id(v, w) else { continue };
            if removed[vw] {
                continue;
            }
            for f in [uw, vw] {
                if support[f] > level {
                    support[f] -= 1;
                    buckets[support[f]].push(f);
                }
            }
        }
    }
    trussness
}

/// Edges whose trussness is at least `k`.
pub fn level_mask(trussness: &[u32], k: u32) -> EdgeMask {
    EdgeMask::from_bools(trussness.iter().map(|&t| t >= k).collect())
}

/// Scans every truss level, counts the edge-bearing components at each,
/// and picks the eligible level with the most, preferring the lower level
/// on ties.
pub fn maximal_community_truss(g: &Graph, options: &TrussOptions) -> Result<TrussResult> {
    if g.edge_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    if options.min_level < 2 {
        return Err(Error::InvalidParameter(format!(
            "minimum truss level must be at least 2, got {}",
            options.min_level
        )));
    }
    let trussness = truss_decomposition(g);
    let max_level = trussness.iter().copied().max().unwrap_or(2);

    let mut level_clusters = Vec::new();
    let mut best: Option<(u32, usize)> = None;
    for k in 2..=max_level {
        let comps = connected_components(g, Some(&level_mask(&trussness, k)))?;
        level_clusters.push((k, comps.count));
        if k >= options.min_level && comps.count > 0 && best.is_none_or(|(_, c)| comps.count > c) {
            best = Some((k, comps.count));
        }
    }

    let chosen_level = best.map(|(k, _)| k);
    let labels = match chosen_level {
        Some(k) => connected_components(g, Some(&level_mask(&trussness, k)))?.into_assignment(),
        None => CommunityAssignment::unlabeled(g.vertex_count()),
    };
    Ok(TrussResult {
        trussness,
        level_clusters,
        chosen_level,
        labels,
    })
}
