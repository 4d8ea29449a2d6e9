//! Admissible contributing pairs up to isomorphism.
//!
//! Vertices come in conjugate pairs `(2p, 2p+1)` with the even one labelled
//! 1 or 3. Edges are described per involution orbit relative to these pairs.

use std::collections::BTreeSet;

use super::graph::{marking_label, DecoratedGraph, Edge, GraphInvolution};
use super::AdmissiblePair;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orbit {
    /// Fixed edge joining the two vertices of pair `p`.
    Fixed { p: usize, degree: u32 },
    /// Edges `(p+, q+)` and `(p-, q-)`, `p < q`.
    Same { p: usize, q: usize, degree: u32 },
    /// Edges `(p+, q-)` and `(q+, p-)`, `p <= q`.
    Cross { p: usize, q: usize, degree: u32 },
}

impl Orbit {
    fn relabel(self, pi: &[usize]) -> Orbit {
        match self {
            Orbit::Fixed { p, degree } => Orbit::Fixed { p: pi[p], degree },
            Orbit::Same { p, q, degree } => Orbit::Same { p: pi[p].min(pi[q]), q: pi[p].max(pi[q]), degree },
            Orbit::Cross { p, q, degree } => Orbit::Cross { p: pi[p].min(pi[q]), q: pi[p].max(pi[q]), degree },
        }
    }

    fn weight(self) -> u32 {
        match self {
            Orbit::Fixed { degree, .. } => degree,
            Orbit::Same { degree, .. } | Orbit::Cross { degree, .. } => 2 * degree,
        }
    }

    fn edge_count(self) -> usize {
        match self {
            Orbit::Fixed { .. } => 1,
            _ => 2,
        }
    }
}

/// Isomorphism-class key of a pair: per-pair `(label, genus)` of the even
/// vertex, sorted orbits, and for each `i+` its `(pair, is_even_vertex)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ShapeKey {
    pub pairs: Vec<(u8, u32)>,
    pub orbits: Vec<Orbit>,
    pub marks: Vec<(usize, bool)>,
}

impl ShapeKey {
    fn relabel(&self, pi: &[usize]) -> ShapeKey {
        let mut pairs = vec![(0, 0); self.pairs.len()];
        for (p, &x) in self.pairs.iter().enumerate() {
            pairs[pi[p]] = x;
        }
        let mut orbits: Vec<Orbit> = self.orbits.iter().map(|o| o.relabel(pi)).collect();
        orbits.sort();
        let marks = self.marks.iter().map(|&(p, s)| (pi[p], s)).collect();
        ShapeKey { pairs, orbits, marks }
    }

    pub fn canonical(&self) -> ShapeKey {
        let mut best: Option<ShapeKey> = None;
        for pi in permutations(self.pairs.len()) {
            let k = self.relabel(&pi);
            if best.as_ref().map_or(true, |b| k < *b) {
                best = Some(k);
            }
        }
        best.expect("at least one permutation")
    }

    /// Builds the graph with pair `p` on vertices `2p` (label 1 or 3) and `2p+1`.
    pub fn build(&self) -> (DecoratedGraph, GraphInvolution) {
        let n = self.pairs.len();
        let mut labels = Vec::with_capacity(2 * n);
        let mut genera = Vec::with_capacity(2 * n);
        for &(l, g) in &self.pairs {
            labels.push(l);
            labels.push(super::graph::tau4(l));
            genera.push(g);
            genera.push(g);
        }
        let mut edges = Vec::new();
        let mut sigma_e = Vec::new();
        for &o in &self.orbits {
            let k = edges.len();
            match o {
                Orbit::Fixed { p, degree } => {
                    edges.push(Edge { ends: (2 * p, 2 * p + 1), degree });
                    sigma_e.push(k);
                }
                Orbit::Same { p, q, degree } => {
                    edges.push(Edge { ends: (2 * p, 2 * q), degree });
                    edges.push(Edge { ends: (2 * p + 1, 2 * q + 1), degree });
                    sigma_e.extend([k + 1, k]);
                }
                Orbit::Cross { p, q, degree } => {
                    edges.push(Edge { ends: (2 * p, 2 * q + 1), degree });
                    edges.push(Edge { ends: (2 * q, 2 * p + 1), degree });
                    sigma_e.extend([k + 1, k]);
                }
            }
        }
        let mut markings = Vec::with_capacity(2 * self.marks.len());
        for &(p, even) in &self.marks {
            let (plus, minus) = if even { (2 * p, 2 * p + 1) } else { (2 * p + 1, 2 * p) };
            markings.push(plus);
            markings.push(minus);
        }
        let sigma_v = (0..2 * n).map(|v| v ^ 1).collect();
        (DecoratedGraph { labels, genera, edges, markings }, GraphInvolution { vertices: sigma_v, edges: sigma_e })
    }
}

/// All permutations of `0..n` (small `n`).
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    fn rec(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == cur.len() {
            out.push(cur.clone());
            return;
        }
        for i in k..cur.len() {
            cur.swap(k, i);
            rec(k + 1, cur, out);
            cur.swap(k, i);
        }
    }
    rec(0, &mut cur, &mut out);
    out
}

/// Reads the pair structure off an arbitrary valid graph.
pub fn shape_of(graph: &DecoratedGraph, inv: &GraphInvolution) -> ShapeKey {
    let even: Vec<usize> = (0..graph.vertex_count()).filter(|&v| matches!(graph.labels[v], 1 | 3)).collect();
    let pair_of = |v: usize| -> (usize, bool) {
        match even.iter().position(|&w| w == v) {
            Some(p) => (p, true),
            None => (even.iter().position(|&w| w == inv.vertices[v]).expect("pair exists"), false),
        }
    };
    let pairs = even.iter().map(|&v| (graph.labels[v], graph.genera[v])).collect();
    let mut orbits = Vec::new();
    for (i, e) in graph.edges.iter().enumerate() {
        let j = inv.edges[i];
        if j < i {
            continue;
        }
        let (pa, sa) = pair_of(e.ends.0);
        let (pb, sb) = pair_of(e.ends.1);
        let degree = e.degree;
        orbits.push(if j == i {
            Orbit::Fixed { p: pa, degree }
        } else if sa == sb {
            Orbit::Same { p: pa.min(pb), q: pa.max(pb), degree }
        } else {
            Orbit::Cross { p: pa.min(pb), q: pa.max(pb), degree }
        });
    }
    orbits.sort();
    let marks = (0..graph.markings.len() / 2).map(|k| pair_of(graph.markings[2 * k])).collect();
    ShapeKey { pairs, orbits, marks }
}

fn slots(labels: &[u8]) -> Vec<Orbit> {
    let n = labels.len();
    let mut out = Vec::new();
    for p in 0..n {
        out.push(Orbit::Fixed { p, degree: 0 });
    }
    for p in 0..n {
        for q in p + 1..n {
            if labels[p] != labels[q] {
                out.push(Orbit::Same { p, q, degree: 0 });
            }
        }
    }
    for p in 0..n {
        for q in p..n {
            out.push(Orbit::Cross { p, q, degree: 0 });
        }
    }
    out
}

fn with_degree(o: Orbit, degree: u32) -> Orbit {
    match o {
        Orbit::Fixed { p, .. } => Orbit::Fixed { p, degree },
        Orbit::Same { p, q, .. } => Orbit::Same { p, q, degree },
        Orbit::Cross { p, q, .. } => Orbit::Cross { p, q, degree },
    }
}

/// Multisets of orbits of total degree `left`, nondecreasing in `(slot, degree)`.
fn orbit_sets(slots: &[Orbit], left: u32, from: (usize, u32), cur: &mut Vec<Orbit>, out: &mut Vec<Vec<Orbit>>) {
    if left == 0 {
        out.push(cur.clone());
        return;
    }
    for s in from.0..slots.len() {
        let start = if s == from.0 { from.1.max(1) } else { 1 };
        for degree in start..=left {
            let o = with_degree(slots[s], degree);
            if matches!(o, Orbit::Fixed { .. }) && degree % 2 == 0 {
                continue;
            }
            if o.weight() > left {
                break;
            }
            cur.push(o);
            orbit_sets(slots, left - o.weight(), (s, degree), cur, out);
            cur.pop();
        }
    }
}

fn connected(n: usize, orbits: &[Orbit]) -> bool {
    pair_halves_linked(0, n, orbits)
}

fn pair_halves_linked(p: usize, n: usize, orbits: &[Orbit]) -> bool {
    let mut adj = vec![Vec::new(); 2 * n];
    for o in orbits {
        let es: Vec<(usize, usize)> = match *o {
            Orbit::Fixed { p, .. } => vec![(2 * p, 2 * p + 1)],
            Orbit::Same { p, q, .. } => vec![(2 * p, 2 * q), (2 * p + 1, 2 * q + 1)],
            Orbit::Cross { p, q, .. } => vec![(2 * p, 2 * q + 1), (2 * q, 2 * p + 1)],
        };
        for (a, b) in es {
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    let mut seen = vec![false; 2 * n];
    let mut stack = vec![2 * p];
    seen[2 * p] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn marking_choices(labels: &[u8], d: usize) -> Vec<Vec<(usize, bool)>> {
    let mut out = vec![Vec::new()];
    for i in 1..=d {
        let hosts: Vec<usize> = (0..labels.len()).filter(|&p| labels[p] == marking_label(i)).collect();
        let mut next = Vec::new();
        for prefix in &out {
            for &p in &hosts {
                let mut m: Vec<(usize, bool)> = prefix.clone();
                m.push((p, true));
                next.push(m);
            }
        }
        out = next;
    }
    out
}

/// Contributing admissible pairs of genus `g` and degree `d`, one per class.
pub fn enumerate_pairs(g: u32, d: u32) -> Vec<AdmissiblePair> {
    let mut seen = BTreeSet::new();
    let mut keys = Vec::new();
    for n in 1..=((d as usize + 1) / 2) {
        for mask in 0..(1u32 << n) {
            let labels: Vec<u8> = (0..n).map(|p| if mask >> p & 1 == 0 { 1 } else { 3 }).collect();
            if d >= 2 && !labels.contains(&3) || !labels.contains(&1) {
                continue;
            }
            let slots = slots(&labels);
            let mut sets = Vec::new();
            orbit_sets(&slots, d, (0, 1), &mut Vec::new(), &mut sets);
            for orbits in sets {
                if !connected(n, &orbits) {
                    continue;
                }
                let edges: usize = orbits.iter().map(|o| o.edge_count()).sum();
                let b1 = edges as i64 - 2 * n as i64 + 1;
                let rest = g as i64 - b1;
                if rest < 0 || rest % 2 != 0 {
                    continue;
                }
                for genera in compositions((rest / 2) as u32, n) {
                    for marks in marking_choices(&labels, d as usize) {
                        let pairs = labels.iter().copied().zip(genera.iter().copied()).collect();
                        let key = ShapeKey { pairs, orbits: orbits.clone(), marks }.canonical();
                        if seen.insert(key.clone()) {
                            keys.push(key);
                        }
                    }
                }
            }
        }
    }
    keys.sort();
    keys.into_iter()
        .map(|k| {
            let (graph, inv) = k.build();
            AdmissiblePair::new(graph, inv).expect("enumerated pairs are admissible")
        })
        .collect()
}
