use super::{CommunityAssignment, EdgeMask, Graph, VertexId};
use crate::Result;

/// Union-find with path halving and union by size.
#[derive(Clone, Debug)]
pub struct DisjointSet {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSet {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }
}

/// Connected components over a set of active edges.
///
/// Only edge-bearing components get a label; vertices with no active
/// incident edge are counted in `isolated_count` and left unlabeled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Components {
    pub labels: Vec<Option<u32>>,
    pub count: usize,
    pub isolated_count: usize,
}

impl Components {
    pub fn isolated(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.labels
            .iter()
            .enumerate()
            .filter_map(|(v, l)| l.is_none().then_some(v as VertexId))
    }

    pub fn into_assignment(self) -> CommunityAssignment {
        CommunityAssignment::from_labels(self.labels)
    }
}

/// Labels components `0..C` in order of their smallest vertex.
pub fn connected_components(g: &Graph, active: Option<&EdgeMask>) -> Result<Components> {
    if let Some(mask) = active {
        mask.check(g)?;
    }
    let n = g.vertex_count();
    let mut dsu = DisjointSet::new(n);
    let mut touched = vec![false; n];
    for (id, e) in g.edges().iter().enumerate() {
        if active.is_some_and(|m| !m.is_active(id)) {
            continue;
        }
        touched[e.u as usize] = true;
        touched[e.v as usize] = true;
        dsu.union(e.u as usize, e.v as usize);
    }

    let mut root_label = vec![u32::MAX; n];
    let mut labels = vec![None; n];
    let mut count = 0u32;
    let mut isolated_count = 0;
    for v in 0..n {
        if !touched[v] {
            isolated_count += 1;
            continue;
        }
        let r = dsu.find(v);
        if root_label[r] == u32::MAX {
            root_label[r] = count;
            count += 1;
        }
        labels[v] = Some(root_label[r]);
    }
    Ok(Components {
        labels,
        count: count as usize,
        isolated_count,
    })
}
