//! Fixed-locus contributions as rational functions of the torus weights.

use num_traits::One;

use super::graph::tau4;
use super::AdmissiblePair;
use crate::arith::rational::{factorial, int, sign, Rational};
use crate::arith::RationalFunction;
use crate::error::{Error, Result};
use crate::hodge::{lambda_product_integral, Insertion};

/// Torus weights `alpha_1..alpha_4` with `alpha_2 = -alpha_1`, `alpha_4 = -alpha_3`.
#[derive(Clone, Debug)]
pub struct Weights {
    alpha: [RationalFunction; 4],
}

impl Weights {
    /// `alpha_1 = 1`, `alpha_3 = z`.
    pub fn generic() -> Self {
        Self::from_pair(RationalFunction::one(), RationalFunction::z())
    }

    /// `alpha_1 = 1`, `alpha_3 = q`.
    pub fn at(q: Rational) -> Self {
        Self::from_pair(RationalFunction::one(), RationalFunction::constant(q))
    }

    pub fn from_pair(a1: RationalFunction, a3: RationalFunction) -> Self {
        Weights { alpha: [a1.clone(), -a1, a3.clone(), -a3] }
    }

    pub fn alpha(&self, label: u8) -> &RationalFunction {
        &self.alpha[label as usize - 1]
    }

    /// `e(T_{P_i} P^3) = prod_{j != i} (alpha_i - alpha_j)`.
    pub fn euler(&self, label: u8) -> RationalFunction {
        let mut out = RationalFunction::one();
        for j in 1..=4u8 {
            if j != label {
                out = &out * &(self.alpha(label) - self.alpha(j));
            }
        }
        out
    }
}

fn frac(a: i64, b: u32) -> RationalFunction {
    RationalFunction::constant(int(a) / int(b as i64))
}

/// `psi_{e;v} = (alpha(other end) - alpha(v)) / d(e)`.
pub fn psi_edge_weight(pair: &AdmissiblePair, e: usize, v: usize, w: &Weights) -> RationalFunction {
    let g = pair.graph();
    let edge = &g.edges[e];
    debug_assert!(edge.touches(v));
    let diff = w.alpha(g.labels[edge.other(v)]) - w.alpha(g.labels[v]);
    diff.scale(&(Rational::one() / int(edge.degree as i64)))
}

/// Signed vertex factor; zero on non-contributing pairs.
pub fn vertex_contribution(pair: &AdmissiblePair, v: usize, w: &Weights) -> Result<RationalFunction> {
    if !pair.is_contributing() {
        return Ok(RationalFunction::zero());
    }
    let g = pair.graph();
    let label = g.labels[v];
    let genus = g.genera[v];
    let edges = g.incident(v);
    let marks = g.markings_at(v);
    let s = edges.len() + marks;
    let psis: Vec<RationalFunction> = edges.iter().map(|&e| psi_edge_weight(pair, e, v, w)).collect();
    let euler = w.euler(label);
    let euler_pow = euler.pow(s as i64 - 1)?;
    if genus == 0 && s <= 2 {
        let prod = psis.iter().fold(RationalFunction::one(), |acc, p| &acc * p);
        let sum = psis.iter().fold(RationalFunction::zero(), |acc, p| &acc + p);
        let tail = sum.pow(3 - s as i64 - edges.len() as i64)?;
        let sgn = RationalFunction::constant(sign(marks as i64));
        return (&(&sgn * &euler_pow) * &tail).checked_div(&prod);
    }
    // 1/(psi_e (psi_e + psi)) = -(1/psi_e) * 1/(-psi_e - psi)
    let mut insertions = Vec::with_capacity(s);
    let mut prefactor = RationalFunction::one();
    for p in &psis {
        insertions.push(Insertion::Geometric(-p));
        prefactor = (-&prefactor).checked_div(p)?;
    }
    insertions.extend(std::iter::repeat(Insertion::Psi(0)).take(marks));
    let us: Vec<RationalFunction> =
        (1..=4u8).filter(|&j| j != label).map(|j| w.alpha(label) - w.alpha(j)).collect();
    let integral = lambda_product_integral(genus, &insertions, &us)?;
    let sgn = RationalFunction::constant(-sign(genus as i64 + edges.len() as i64));
    Ok(&(&(&sgn * &euler_pow) * &prefactor) * &integral)
}

/// Edge factor for a fixed or a free edge.
pub fn edge_contribution(pair: &AdmissiblePair, e: usize, w: &Weights) -> Result<RationalFunction> {
    let g = pair.graph();
    let edge = g.edges[e];
    let d = edge.degree;
    let fixed = pair.involution().edges[e] == e;
    let (mut v1, mut v2) = edge.ends;
    if fixed {
        if d % 2 == 0 {
            return Err(Error::EvenFixedEdge(d));
        }
        if !matches!(g.labels[v1], 1 | 3) {
            std::mem::swap(&mut v1, &mut v2);
        }
        return fixed_edge_factor(g.labels[v1], d, w);
    }
    let (a, b) = (g.labels[v1], g.labels[v2]);
    let (aa, ab) = (w.alpha(a), w.alpha(b));
    let mut den = (aa - ab).scale(&(Rational::one() / int(d as i64))).pow(2 * d as i64 - 2)?;
    for j in (1..=4u8).filter(|&j| j != a && j != b) {
        for r in 0..=d {
            let point = (&aa.scale(&int((d - r) as i64)) + &ab.scale(&int(r as i64))).scale(&(Rational::one() / int(d as i64)));
            den = &den * &(&point - w.alpha(j));
        }
    }
    let f = factorial(d);
    let c = sign(d as i64) / (Rational::from_integer(&f * &f) * int(d as i64));
    RationalFunction::constant(c).checked_div(&den)
}

/// Fixed-edge factor with `v1` the endpoint labelled `a`.
pub fn fixed_edge_factor(a: u8, d: u32, w: &Weights) -> Result<RationalFunction> {
    if d % 2 == 0 {
        return Err(Error::EvenFixedEdge(d));
    }
    let b = tau4(a);
    let aa = w.alpha(a);
    let mut den = aa.scale(&(int(2) / int(d as i64))).pow(d as i64 - 1)?;
    for j in (1..=4u8).filter(|&j| j != a && j != b) {
        for r in 0..=(d - 1) / 2 {
            let point = aa.scale(&(int((d - 2 * r) as i64) / int(d as i64)));
            den = &den * &(&point - w.alpha(j));
        }
    }
    let c = sign(((d - 1) / 2) as i64) / (Rational::from_integer(factorial(d)) * int(d as i64));
    RationalFunction::constant(c).checked_div(&den)
}

/// `(1/|Aut|) prod_{V+} vertex * prod_{E_R + E+} edge` for the pair's halves.
pub fn pair_contribution(pair: &AdmissiblePair, w: &Weights) -> Result<RationalFunction> {
    if !pair.is_contributing() {
        return Ok(RationalFunction::zero());
    }
    let mut acc = frac(1, pair.automorphisms() as u32);
    for &v in pair.plus_vertices() {
        acc = &acc * &vertex_contribution(pair, v, w)?;
        if acc.is_zero() {
            return Ok(acc);
        }
    }
    for e in pair.fixed_edges().into_iter().chain(pair.plus_edges().iter().copied()) {
        acc = &acc * &edge_contribution(pair, e, w)?;
    }
    Ok(acc)
}
