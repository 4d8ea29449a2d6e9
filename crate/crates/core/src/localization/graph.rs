use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// `(1 2)(3 4)` on fixed-point labels.
pub fn tau4(label: u8) -> u8 {
    match label {
        1 => 2,
        2 => 1,
        3 => 4,
        _ => 3,
    }
}

/// Label of the fixed point carrying `i+` on a contributing pair.
pub fn marking_label(i: usize) -> u8 {
    if i % 2 == 1 {
        1
    } else {
        3
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub ends: (usize, usize),
    pub degree: u32,
}

impl Edge {
    pub fn other(&self, v: usize) -> usize {
        if self.ends.0 == v {
            self.ends.1
        } else {
            self.ends.0
        }
    }

    pub fn touches(&self, v: usize) -> bool {
        self.ends.0 == v || self.ends.1 == v
    }
}

/// Decorated graph with fixed-point labels in `1..=4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecoratedGraph {
    pub labels: Vec<u8>,
    pub genera: Vec<u32>,
    pub edges: Vec<Edge>,
    /// Vertex of `i+` at index `2(i-1)`, of `i-` at `2(i-1)+1`.
    pub markings: Vec<usize>,
}

impl DecoratedGraph {
    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn degree(&self) -> u32 {
        self.edges.iter().map(|e| e.degree).sum()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for e in &self.edges {
                if e.touches(v) {
                    let w = e.other(v);
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// First Betti number plus the vertex genera.
    pub fn genus(&self) -> u32 {
        let b1 = self.edges.len() as i64 - self.vertex_count() as i64 + 1;
        (b1 + self.genera.iter().map(|&g| g as i64).sum::<i64>()) as u32
    }

    pub fn incident(&self, v: usize) -> Vec<usize> {
        (0..self.edges.len()).filter(|&i| self.edges[i].touches(v)).collect()
    }

    pub fn markings_at(&self, v: usize) -> usize {
        self.markings.iter().filter(|&&m| m == v).count()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.vertex_count();
        if self.genera.len() != n {
            return Err(Error::InvalidArgument("one genus per vertex".into()));
        }
        if self.labels.iter().any(|l| !(1..=4).contains(l)) {
            return Err(Error::InvalidArgument("labels must lie in 1..=4".into()));
        }
        for e in &self.edges {
            if e.ends.0 >= n || e.ends.1 >= n || e.degree == 0 {
                return Err(Error::InvalidArgument(format!("bad edge {e:?}")));
            }
            if self.labels[e.ends.0] == self.labels[e.ends.1] {
                return Err(Error::InvalidArgument(format!("edge {e:?} joins equal labels")));
            }
        }
        if self.markings.len() % 2 != 0 || self.markings.iter().any(|&m| m >= n) {
            return Err(Error::InvalidArgument("markings come in conjugate pairs".into()));
        }
        if !self.is_connected() {
            return Err(Error::InvalidArgument("graph is disconnected".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphInvolution {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl GraphInvolution {
    pub fn validate(&self, graph: &DecoratedGraph) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidArgument(format!("not a valid involution: {m}")));
        if self.vertices.len() != graph.vertex_count() || self.edges.len() != graph.edges.len() {
            return bad("size mismatch");
        }
        for (v, &w) in self.vertices.iter().enumerate() {
            if w >= graph.vertex_count() || self.vertices[w] != v {
                return bad("vertex map is not an involution");
            }
            if graph.labels[w] != tau4(graph.labels[v]) || graph.genera[w] != graph.genera[v] {
                return bad("labels or genera not compatible");
            }
        }
        for (i, &j) in self.edges.iter().enumerate() {
            if j >= graph.edges.len() || self.edges[j] != i {
                return bad("edge map is not an involution");
            }
            let (a, b) = graph.edges[i].ends;
            let image: BTreeSet<usize> = [self.vertices[a], self.vertices[b]].into();
            let target: BTreeSet<usize> = [graph.edges[j].ends.0, graph.edges[j].ends.1].into();
            if image != target || graph.edges[i].degree != graph.edges[j].degree {
                return bad("edge map does not follow vertices");
            }
        }
        for k in 0..graph.markings.len() / 2 {
            if self.vertices[graph.markings[2 * k]] != graph.markings[2 * k + 1] {
                return bad("markings not swapped");
            }
        }
        Ok(())
    }
}

/// Number of label-, genus-, degree- and marking-preserving automorphisms
/// commuting with the involution.
pub fn automorphism_count(graph: &DecoratedGraph, inv: &GraphInvolution) -> u64 {
    let n = graph.vertex_count();
    let reps: Vec<usize> = (0..n).filter(|&v| v < inv.vertices[v]).collect();
    let mut phi = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut total = 0;
    vertex_maps(graph, inv, &reps, 0, &mut phi, &mut used, &mut total);
    total
}

fn vertex_maps(
    graph: &DecoratedGraph,
    inv: &GraphInvolution,
    reps: &[usize],
    at: usize,
    phi: &mut Vec<usize>,
    used: &mut Vec<bool>,
    total: &mut u64,
) {
    if at == reps.len() {
        if graph.markings.iter().all(|&m| phi[m] == m) {
            *total += edge_maps(graph, inv, phi);
        }
        return;
    }
    let v = reps[at];
    for w in 0..graph.vertex_count() {
        let sw = inv.vertices[w];
        if used[w] || used[sw] || graph.labels[w] != graph.labels[v] || graph.genera[w] != graph.genera[v] {
            continue;
        }
        phi[v] = w;
        phi[inv.vertices[v]] = sw;
        used[w] = true;
        used[sw] = true;
        vertex_maps(graph, inv, reps, at + 1, phi, used, total);
        used[w] = false;
        used[sw] = false;
    }
}

fn edge_maps(graph: &DecoratedGraph, inv: &GraphInvolution, phi: &[usize]) -> u64 {
    let orbits: Vec<usize> = (0..graph.edges.len()).filter(|&e| e <= inv.edges[e]).collect();
    let mut used = vec![false; graph.edges.len()];
    count_edges(graph, inv, phi, &orbits, 0, &mut used)
}

fn count_edges(
    graph: &DecoratedGraph,
    inv: &GraphInvolution,
    phi: &[usize],
    orbits: &[usize],
    at: usize,
    used: &mut Vec<bool>,
) -> u64 {
    if at == orbits.len() {
        return 1;
    }
    let e = orbits[at];
    let fixed = inv.edges[e] == e;
    let (a, b) = graph.edges[e].ends;
    let want: BTreeSet<usize> = [phi[a], phi[b]].into();
    let mut count = 0;
    for f in 0..graph.edges.len() {
        let sf = inv.edges[f];
        if used[f] || used[sf] || (sf == f) != fixed || graph.edges[f].degree != graph.edges[e].degree {
            continue;
        }
        let ends: BTreeSet<usize> = [graph.edges[f].ends.0, graph.edges[f].ends.1].into();
        if ends != want {
            continue;
        }
        used[f] = true;
        used[sf] = true;
        count += count_edges(graph, inv, phi, orbits, at + 1, used);
        used[f] = false;
        used[sf] = false;
    }
    count
}
