//! Torus localization for real GW invariants of `(P^3, tau_4)` with `d`
//! conjugate pairs of point constraints.
//!
//! Fixed loci are indexed by decorated graphs with an involution. The
//! weights are dehomogenized to `alpha_1 = 1`, `alpha_3 = z`, so every
//! contribution is a rational function of one variable and the final sum
//! must be a constant.

mod contrib;
mod enumerate;
mod graph;

pub use contrib::{
    edge_contribution, fixed_edge_factor, pair_contribution, psi_edge_weight, vertex_contribution, Weights,
};
pub use enumerate::{enumerate_pairs, permutations, shape_of, Orbit, ShapeKey};
pub use graph::{automorphism_count, marking_label, tau4, DecoratedGraph, Edge, GraphInvolution};

use crate::arith::{Rational, RationalFunction};
use crate::error::{Error, Result};

pub type WeightRing = RationalFunction;

/// A graph with involution, its automorphism count, and a choice of halves
/// `V+` (one vertex per conjugate pair) and `E+` (one edge per free orbit).
#[derive(Clone, Debug)]
pub struct AdmissiblePair {
    graph: DecoratedGraph,
    involution: GraphInvolution,
    plus_vertices: Vec<usize>,
    plus_edges: Vec<usize>,
    automorphisms: u64,
}

impl AdmissiblePair {
    /// Validates and picks the canonical halves: vertices labelled 1 or 3,
    /// and the lower-indexed edge of each free orbit.
    pub fn new(graph: DecoratedGraph, involution: GraphInvolution) -> Result<Self> {
        graph.validate()?;
        involution.validate(&graph)?;
        for (i, e) in graph.edges.iter().enumerate() {
            if involution.edges[i] == i && e.degree % 2 == 0 {
                return Err(Error::EvenFixedEdge(e.degree));
            }
        }
        let plus_vertices = (0..graph.vertex_count()).filter(|&v| matches!(graph.labels[v], 1 | 3)).collect();
        let plus_edges = (0..graph.edges.len()).filter(|&e| e < involution.edges[e]).collect();
        let automorphisms = automorphism_count(&graph, &involution);
        Ok(AdmissiblePair { graph, involution, plus_vertices, plus_edges, automorphisms })
    }

    pub fn graph(&self) -> &DecoratedGraph {
        &self.graph
    }

    pub fn involution(&self) -> &GraphInvolution {
        &self.involution
    }

    pub fn plus_vertices(&self) -> &[usize] {
        &self.plus_vertices
    }

    pub fn plus_edges(&self) -> &[usize] {
        &self.plus_edges
    }

    pub fn automorphisms(&self) -> u64 {
        self.automorphisms
    }

    pub fn genus(&self) -> u32 {
        self.graph.genus()
    }

    pub fn degree(&self) -> u32 {
        self.graph.degree()
    }

    pub fn fixed_edges(&self) -> Vec<usize> {
        (0..self.graph.edges.len()).filter(|&e| self.involution.edges[e] == e).collect()
    }

    /// `i+` sits at a vertex labelled 1 for odd `i` and 3 for even `i`.
    pub fn is_contributing(&self) -> bool {
        (0..self.graph.markings.len() / 2)
            .all(|k| self.graph.labels[self.graph.markings[2 * k]] == marking_label(k + 1))
    }

    /// Isomorphism-class key.
    pub fn key(&self) -> ShapeKey {
        shape_of(&self.graph, &self.involution).canonical()
    }

    /// Same pair with other halves.
    pub fn with_halves(&self, plus_vertices: Vec<usize>, plus_edges: Vec<usize>) -> Result<Self> {
        let n = self.graph.vertex_count();
        let mut hit = vec![false; n];
        for &v in &plus_vertices {
            if v >= n || hit[v] || hit[self.involution.vertices[v]] {
                return Err(Error::InvalidArgument("V+ must pick one vertex per conjugate pair".into()));
            }
            hit[v] = true;
        }
        if hit.iter().filter(|&&h| h).count() * 2 != n {
            return Err(Error::InvalidArgument("V+ must cover every conjugate pair".into()));
        }
        let m = self.graph.edges.len();
        let mut hit = vec![false; m];
        for &e in &plus_edges {
            let se = self.involution.edges[e];
            if e >= m || se == e || hit[e] || hit[se] {
                return Err(Error::InvalidArgument("E+ must pick one edge per free orbit".into()));
            }
            hit[e] = true;
        }
        let free = (0..m).filter(|&e| self.involution.edges[e] != e).count();
        if plus_edges.len() * 2 != free {
            return Err(Error::InvalidArgument("E+ must cover every free orbit".into()));
        }
        Ok(AdmissiblePair { plus_vertices, plus_edges, ..self.clone() })
    }

    /// Every valid `(V+, E+)`.
    pub fn half_choices(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        let vreps: Vec<usize> = (0..self.graph.vertex_count()).filter(|&v| v < self.involution.vertices[v]).collect();
        let ereps: Vec<usize> = (0..self.graph.edges.len()).filter(|&e| e < self.involution.edges[e]).collect();
        let mut out = Vec::new();
        for vm in 0..(1u64 << vreps.len()) {
            let vs: Vec<usize> = vreps
                .iter()
                .enumerate()
                .map(|(i, &v)| if vm >> i & 1 == 1 { self.involution.vertices[v] } else { v })
                .collect();
            for em in 0..(1u64 << ereps.len()) {
                let es = ereps
                    .iter()
                    .enumerate()
                    .map(|(i, &e)| if em >> i & 1 == 1 { self.involution.edges[e] } else { e })
                    .collect();
                out.push((vs.clone(), es));
            }
        }
        out
    }

    /// The same pair with vertices renamed by `vperm` and edges by `eperm`.
    pub fn relabeled(&self, vperm: &[usize], eperm: &[usize]) -> Result<Self> {
        let g = &self.graph;
        let n = g.vertex_count();
        let m = g.edges.len();
        let mut labels = vec![0; n];
        let mut genera = vec![0; n];
        let mut sv = vec![0; n];
        for v in 0..n {
            labels[vperm[v]] = g.labels[v];
            genera[vperm[v]] = g.genera[v];
            sv[vperm[v]] = vperm[self.involution.vertices[v]];
        }
        let mut edges = vec![Edge { ends: (0, 0), degree: 0 }; m];
        let mut se = vec![0; m];
        for e in 0..m {
            let old = g.edges[e];
            edges[eperm[e]] = Edge { ends: (vperm[old.ends.1], vperm[old.ends.0]), degree: old.degree };
            se[eperm[e]] = eperm[self.involution.edges[e]];
        }
        let markings = g.markings.iter().map(|&v| vperm[v]).collect();
        AdmissiblePair::new(
            DecoratedGraph { labels, genera, edges, markings },
            GraphInvolution { vertices: sv, edges: se },
        )
    }
}

/// Sum of all pair contributions at the given weights.
pub fn gw_real_sum(g: u32, d: u32, w: &Weights) -> Result<RationalFunction> {
    let mut acc = RationalFunction::zero();
    for pair in enumerate_pairs(g, d) {
        acc = &acc + &pair_contribution(&pair, w)?;
    }
    Ok(acc)
}

/// `GW^phi_{g,d}`, with the weight-independence of the sum checked.
pub fn gw_real(g: u32, d: u32) -> Result<Rational> {
    if d == 0 {
        return Err(Error::InvalidArgument("degree must be positive".into()));
    }
    let sum = gw_real_sum(g, d, &Weights::generic())?;
    sum.as_constant().ok_or_else(|| Error::NonConstant { genus: g, degree: d, value: sum.to_string() })
}
