//! Brute-force reference implementations shared by the integration tests.
//! Nothing here calls into the algorithms it is used to check.
#![allow(dead_code)]

use std::collections::VecDeque;
use std::path::PathBuf;

use linkcohesion::graph::{load_communities, load_edge_list, LoadOptions};
use linkcohesion::{CommunityAssignment, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// G(n, p) with every pair drawn independently.
pub fn gnp(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for a in 0..n as u32 {
        for b in a + 1..n as u32 {
            if rng.gen::<f64>() < p {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut adj = vec![vec![false; n]; n];
    for e in g.edges() {
        adj[e.u as usize][e.v as usize] = true;
        adj[e.v as usize][e.u as usize] = true;
    }
    adj
}

/// Hop strengths by enumerating every vertex (pair) as a candidate path
/// interior.
pub fn naive_strengths(g: &Graph) -> Vec<[f64; 3]> {
    let n = g.vertex_count();
    let adj = adjacency(g);
    let k: Vec<f64> = (0..n)
        .map(|v| adj[v].iter().filter(|&&b| b).count() as f64)
        .collect();
    g.edges()
        .iter()
        .map(|e| {
            let (i, j) = (e.u as usize, e.v as usize);
            let base = 1.0 / (k[i] * k[j]);
            let mut two = 0.0;
            for l in 0..n {
                if adj[i][l] && adj[j][l] {
                    two += 1.0 / (k[l] * k[l]);
                }
            }
            let mut three = 0.0;
            for m in 0..n {
                if m == i || m == j || !adj[i][m] {
                    continue;
                }
                for q in 0..n {
                    if q == i || q == j || q == m {
                        continue;
                    }
                    if adj[m][q] && adj[q][j] {
                        three += 1.0 / (k[m] * k[q]).powi(2);
                    }
                }
            }
            [base, base * base * two, base * base * three]
        })
        .collect()
}

/// Trussness by recomputing the k-truss from the full edge set for every k
/// until a fixed point.
pub fn naive_trussness(g: &Graph) -> Vec<u32> {
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut result = vec![2u32; m];
    let mut k = 3u32;
    loop {
        let mut alive = vec![true; m];
        loop {
            let mut adj = vec![vec![false; n]; n];
            for (id, e) in g.edges().iter().enumerate() {
                if alive[id] {
                    adj[e.u as usize][e.v as usize] = true;
                    adj[e.v as usize][e.u as usize] = true;
                }
            }
            let mut changed = false;
            for (id, e) in g.edges().iter().enumerate() {
                if !alive[id] {
                    continue;
                }
                let support = (0..n)
                    .filter(|&w| adj[e.u as usize][w] && adj[e.v as usize][w])
                    .count();
                if support < (k - 2) as usize {
                    alive[id] = false;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        if !alive.iter().any(|&a| a) {
            return result;
        }
        for (id, a) in alive.iter().enumerate() {
            if *a {
                result[id] = k;
            }
        }
        k += 1;
    }
}

/// BFS distances and shortest-path counts from every vertex.
pub fn all_pairs(g: &Graph) -> (Vec<Vec<i64>>, Vec<Vec<f64>>) {
    let n = g.vertex_count();
    let mut dist = vec![vec![-1i64; n]; n];
    let mut sigma = vec![vec![0.0f64; n]; n];
    for s in 0..n {
        dist[s][s] = 0;
        sigma[s][s] = 1.0;
        let mut q = VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            for &w in g.neighbors(v as u32) {
                let w = w as usize;
                if dist[s][w] < 0 {
                    dist[s][w] = dist[s][v] + 1;
                    q.push_back(w);
                }
                if dist[s][w] == dist[s][v] + 1 {
                    sigma[s][w] += sigma[s][v];
                }
            }
        }
    }
    (dist, sigma)
}

/// Edge betweenness by counting, for every unordered pair, the shortest
/// paths that traverse each edge in either direction.
pub fn naive_betweenness(g: &Graph) -> Vec<f64> {
    let n = g.vertex_count();
    let (dist, sigma) = all_pairs(g);
    g.edges()
        .iter()
        .map(|e| {
            let mut total = 0.0;
            for s in 0..n {
                for t in s + 1..n {
                    let d = dist[s][t];
                    if d <= 0 {
                        continue;
                    }
                    for (a, b) in [(e.u as usize, e.v as usize), (e.v as usize, e.u as usize)] {
                        if dist[s][a] >= 0 && dist[b][t] >= 0 && dist[s][a] + 1 + dist[b][t] == d {
                            total += sigma[s][a] * sigma[b][t] / sigma[s][t];
                        }
                    }
                }
            }
            total
        })
        .collect()
}

pub fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    a == b || (a - b).abs() <= tol * a.abs().max(b.abs())
}

fn test_data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

pub fn karate() -> (Graph, CommunityAssignment) {
    let edges = std::fs::read(test_data("karate.txt")).unwrap();
    let (g, _) = load_edge_list(edges.as_slice(), &LoadOptions::default()).unwrap();
    let clubs = std::fs::read(test_data("karate_club.txt")).unwrap();
    let truth = load_communities(clubs.as_slice(), &g).unwrap();
    (g, truth)
}
