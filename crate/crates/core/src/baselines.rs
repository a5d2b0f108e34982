//! Comparison methods: Jaccard-similarity local sparsification and exact
//! edge betweenness.

use std::collections::VecDeque;

use crate::graph::{EdgeId, EdgeMask, EdgeRef, Graph, VertexId};
use crate::{Error, Result};

fn common_count(a: &[VertexId], b: &[VertexId]) -> usize {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

fn jaccard_unchecked(g: &Graph, e: EdgeRef) -> f64 {
    let (a, b) = (g.neighbors(e.u), g.neighbors(e.v));
    let inter = common_count(a, b);
    // Open neighborhoods: an edge's endpoints appear in each other's sets, so
    // the union is never empty.
    inter as f64 / (a.len() + b.len() - inter) as f64
}

/// `|N(u) ∩ N(v)| / |N(u) ∪ N(v)|` over open neighborhoods.
pub fn jaccard_similarity(g: &Graph, e: EdgeRef) -> Result<f64> {
    g.require_edge(e)?;
    Ok(jaccard_unchecked(g, e))
}

/// Similarity of every edge, indexed by edge id.
pub fn similarities(g: &Graph) -> Vec<f64> {
    g.edges().iter().map(|&e| jaccard_unchecked(g, e)).collect()
}

/// `ceil(d^exponent)`, snapping values within rounding noise of an integer.
fn retained(degree: usize, exponent: f64) -> usize {
    let x = (degree as f64).powf(exponent);
    let r = x.round();
    if (x - r).abs() < 1e-9 {
        r as usize
    } else {
        x.ceil() as usize
    }
}

/// Local similarity sparsification.
///
/// Every vertex of degree `d` marks its `ceil(d^exponent)` most similar
/// incident edges (ties by canonical edge order). An edge survives when
/// either endpoint marks it.
pub fn sparsify_local(g: &Graph, exponent: f64) -> Result<Graph> {
    if !(exponent > 0.0 && exponent <= 1.0) {
        return Err(Error::InvalidParameter(format!(
            "sparsify exponent must lie in (0, 1], got {exponent}"
        )));
    }
    let sim = similarities(g);
    let mut keep = EdgeMask::empty(g);
    let mut incident: Vec<EdgeId> = Vec::new();
    for v in 0..g.vertex_count() as VertexId {
        let d = g.degree(v);
        if d == 0 {
            continue;
        }
        incident.clear();
        incident.extend(g.incident(v).map(|(_, id)| id));
        incident.sort_by(|&a, &b| sim[b].total_cmp(&sim[a]).then(a.cmp(&b)));
        for &id in incident.iter().take(retained(d, exponent)) {
            keep.set(id, true);
        }
    }
    g.subgraph(&keep)
}

/// Single-source dependency accumulation, adding each edge's share of
/// shortest paths from `s` into `acc`.
struct Bfs {
    dist: Vec<i64>,
    sigma: Vec<f64>,
    delta: Vec<f64>,
    order: Vec<VertexId>,
    queue: VecDeque<VertexId>,
}

impl Bfs {
    fn new(n: usize) -> Self {
        Self {
            dist: vec![-1; n],
            sigma: vec![0.0; n],
            delta: vec![0.0; n],
            order: Vec::with_capacity(n),
            queue: VecDeque::new(),
        }
    }

    fn accumulate(&mut self, g: &Graph, s: VertexId, acc: &mut [f64]) {
        self.dist.fill(-1);
        self.sigma.fill(0.0);
        self.delta.fill(0.0);
        self.order.clear();

        self.dist[s as usize] = 0;
        self.sigma[s as usize] = 1.0;
        self.queue.push_back(s);
        while let Some(v) = self.queue.pop_front() {
            self.order.push(v);
            let dv = self.dist[v as usize];
            for &w in g.neighbors(v) {
                let w = w as usize;
                if self.dist[w] < 0 {
                    self.dist[w] = dv + 1;
                    self.queue.push_back(w as VertexId);
                }
                if self.dist[w] == dv + 1 {
                    self.sigma[w] += self.sigma[v as usize];
                }
            }
        }

        for &w in self.order.iter().rev() {
            let wu = w as usize;
            let coeff = (1.0 + self.delta[wu]) / self.sigma[wu];
            for (v, id) in g.incident(w) {
                let vu = v as usize;
                if self.dist[vu] >= 0 && self.dist[vu] + 1 == self.dist[wu] {
                    let c = self.sigma[vu] * coeff;
                    acc[id] += c;
                    self.delta[vu] += c;
                }
            }
        }
    }
}

const SOURCE_CHUNK: usize = 64;

/// Exact edge betweenness: for every unordered vertex pair, the fraction of
/// its shortest paths running through each edge, summed.
///
/// Sources are processed in fixed-size chunks whose partial sums are added
/// in chunk order, so the result does not depend on thread scheduling.
pub fn edge_betweenness(g: &Graph) -> Vec<f64> {
    let n = g.vertex_count();
    let m = g.edge_count();
    let sources: Vec<VertexId> = (0..n as VertexId).collect();
    let run_chunk = |chunk: &[VertexId]| {
        let mut bfs = Bfs::new(n);
        let mut acc = vec![0.0; m];
        for &s in chunk {
            bfs.accumulate(g, s, &mut acc);
        }
        acc
    };

    #[cfg(feature = "parallel")]
    let partials: Vec<Vec<f64>> = {
        use rayon::prelude::*;
        sources.par_chunks(SOURCE_CHUNK).map(run_chunk).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let partials: Vec<Vec<f64>> = sources.chunks(SOURCE_CHUNK).map(run_chunk).collect();

    let mut total = vec![0.0; m];
    for part in partials {
        for (t, p) in total.iter_mut().zip(part) {
            *t += p;
        }
    }
    // Each unordered pair was counted once from each end.
    total.iter_mut().for_each(|x| *x *= 0.5);
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(u: u32, v: u32) -> EdgeRef {
        EdgeRef::new(u, v).unwrap()
    }

    fn k(n: u32) -> Graph {
        Graph::from_edges(
            n as usize,
            (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))),
        )
        .unwrap()
    }

    #[test]
    fn jaccard_examples() {
        assert!((jaccard_similarity(&k(3), e(0, 1)).unwrap() - 1.0 / 3.0).abs() < 1e-15);
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(jaccard_similarity(&c4, e(0, 1)).unwrap(), 0.0);
        assert_eq!(jaccard_similarity(&k(4), e(2, 3)).unwrap(), 0.5);
        assert!(jaccard_similarity(&c4, e(0, 2)).is_err());
    }

    #[test]
    fn retained_counts() {
        assert_eq!(retained(1, 0.5), 1);
        assert_eq!(retained(2, 0.5), 2);
        assert_eq!(retained(4, 0.5), 2);
        assert_eq!(retained(5, 0.5), 3);
        assert_eq!(retained(9, 0.5), 3);
        assert_eq!(retained(10, 1.0), 10);
    }

    #[test]
    fn sparsify_examples() {
        let g = k(3);
        assert_eq!(sparsify_local(&g, 0.5).unwrap().edge_count(), 3);
        let star = Graph::from_edges(6, (1..6).map(|l| (0, l))).unwrap();
        assert_eq!(sparsify_local(&star, 0.5).unwrap().edge_count(), 5);
        let empty = Graph::from_edges(0, []).unwrap();
        assert_eq!(sparsify_local(&empty, 0.5).unwrap().edge_count(), 0);
    }

    #[test]
    fn sparsify_drops_weak_edges() {
        // Two K4s joined by a bridge: each bridge endpoint has degree 4 and
        // keeps its two most similar edges, the bridge (similarity 0) loses.
        let mut edges = Vec::new();
        for base in [0u32, 4] {
            for a in 0..4 {
                for b in a + 1..4 {
                    edges.push((base + a, base + b));
                }
            }
        }
        edges.push((3, 4));
        let g = Graph::from_edges(8, edges).unwrap();
        let s = sparsify_local(&g, 0.5).unwrap();
        assert!(!s.contains_edge(3, 4));
    }

    #[test]
    fn sparsify_rejects_bad_exponent() {
        assert!(sparsify_local(&k(3), 0.0).is_err());
        assert!(sparsify_local(&k(3), 1.5).is_err());
        assert!(sparsify_local(&k(3), f64::NAN).is_err());
    }

    #[test]
    fn betweenness_examples() {
        let path = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(edge_betweenness(&path), vec![2.0, 2.0]);
        assert_eq!(edge_betweenness(&k(3)), vec![1.0; 3]);
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(edge_betweenness(&star), vec![3.0; 3]);
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        // Adjacent pair: 1. Each of the two antipodal pairs splits over two
        // paths, touching every edge with weight 1/2.
        assert_eq!(edge_betweenness(&c4), vec![2.0; 4]);
    }

    #[test]
    fn betweenness_disconnected() {
        let g = Graph::from_edges(5, [(0, 1), (2, 3), (3, 4)]).unwrap();
        assert_eq!(edge_betweenness(&g), vec![1.0, 2.0, 2.0]);
    }
}
