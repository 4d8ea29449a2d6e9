//! Hodge integrals `int psi^a lambda_{r_1} ... lambda_{r_k}` over moduli of
//! stable curves, the triple-Lambda integrals built from them, and the
//! one- and two-partition Hodge integrals `I_{1;g}`, `I_{2;g}`.
//!
//! Lambda monomials are rewritten in the odd Chern characters of the Hodge
//! bundle (the even ones vanish), using `c(E) = exp(sum_l (2l-2)! ch_{2l-1})`.
//! Each `ch_{2l-1}` is then replaced by Mumford's expression
//!
//! ```text
//! B_{2l}/(2l)! [ kappa_{2l-1} - sum_i psi_i^{2l-1}
//!               + 1/2 sum_{gluings} xi_*( sum_{a+b=2l-2} (-psi')^a psi''^b ) ]
//! ```
//!
//! where the gluing sum runs over the non-separating map from `M_{g-1,n+2}`
//! and over every ordered separating type `(h, I)`. Boundary terms are
//! integrated at once on the smaller moduli spaces: psi and kappa classes
//! restrict piecewise and `ch(E)` restricts to the sum of the pieces' `ch`.
//! Only one boundary pushforward is ever formed at a time.
//!
//! Results are memoized in process-wide stores behind `RwLock`s, with the
//! same contract as [`crate::psi`].

use std::collections::{BTreeMap, HashMap};
use std::sync::{OnceLock, RwLock};

use num_traits::{One, Zero};

use crate::arith::rational::{bernoulli_numbers, factorial, int, rat, sign, Rational};
use crate::arith::{LaurentSum, RationalFunction};
use crate::error::{Error, Result};
use crate::psi::{dimension, is_stable, psi_unsorted};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HodgeQuery {
    genus: u32,
    psi_exponents: Vec<u32>,
    lambda_indices: Vec<u32>,
}

impl HodgeQuery {
    /// `psi_exponents` has one entry per marked point; `lambda_indices` lists
    /// the `r` of each `lambda_r` factor (each in `1..=genus`).
    pub fn new(genus: u32, psi_exponents: Vec<u32>, mut lambda_indices: Vec<u32>) -> Result<Self> {
        if !is_stable(genus, psi_exponents.len()) {
            return Err(Error::Unstable { genus, points: psi_exponents.len() });
        }
        if let Some(&r) = lambda_indices.iter().find(|&&r| r == 0 || r > genus) {
            return Err(Error::InvalidArgument(format!("lambda_{r} is not a Chern class of a rank-{genus} bundle")));
        }
        lambda_indices.sort_unstable();
        let mut psi_exponents = psi_exponents;
        psi_exponents.sort_unstable();
        Ok(HodgeQuery { genus, psi_exponents, lambda_indices })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }
}

/// A polynomial in `ch_1, ch_3, ch_5, ...`: sorted index multiset to coefficient.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct LambdaPolynomial {
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl LambdaPolynomial {
    pub fn one() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Vec::new(), Rational::one());
        LambdaPolynomial { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn coeff(&self, monomial: &[u32]) -> Rational {
        let mut key = monomial.to_vec();
        key.sort_unstable();
        self.terms.get(&key).cloned().unwrap_or_else(Rational::zero)
    }

    fn mul(&self, rhs: &Self) -> Self {
        let mut out: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let mut key: Vec<u32> = a.iter().chain(b).copied().collect();
                key.sort_unstable();
                *out.entry(key).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        out.retain(|_, c| !c.is_zero());
        LambdaPolynomial { terms: out }
    }
}

/// `lambda_r` as a polynomial in the odd Chern characters.
fn lambda_single(r: u32) -> LambdaPolynomial {
    // degree-r part of prod_k exp((k-1)! ch_k) over odd k
    let mut out = BTreeMap::new();
    fn rec(k: u32, left: u32, acc: Vec<u32>, coeff: Rational, out: &mut BTreeMap<Vec<u32>, Rational>) {
        if left == 0 {
            let mut key = acc;
            key.sort_unstable();
            *out.entry(key).or_insert_with(Rational::zero) += coeff;
            return;
        }
        if k > left {
            return;
        }
        let ck = Rational::from_integer(factorial(k - 1));
        let mut m = 0u32;
        while m * k <= left {
            let c = &coeff * num_traits::pow(ck.clone(), m as usize) / Rational::from_integer(factorial(m));
            let mut next = acc.clone();
            next.extend(std::iter::repeat(k).take(m as usize));
            rec(k + 2, left - m * k, next, c, out);
            m += 1;
        }
    }
    rec(1, r, Vec::new(), Rational::one(), &mut out);
    LambdaPolynomial { terms: out }
}

/// Newton-identity conversion of a lambda monomial with `ch_even = 0`.
pub fn lambda_to_ch(lambda_indices: &[u32]) -> LambdaPolynomial {
    lambda_indices.iter().fold(LambdaPolynomial::one(), |acc, &r| acc.mul(&lambda_single(r)))
}

/// One term of Mumford's expansion of `ch_{2l-1}(E)` on `M_{g,n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChernTerm {
    Kappa(u32),
    Psi { point: usize, power: u32 },
    /// Pushforward from `M_{g-1,n+2}` of `psi_{n+1}^a psi_{n+2}^b`.
    BoundaryIrr { a: u32, b: u32 },
    /// Pushforward from `M_{h, I+*} x M_{g-h, I^c+*}` of `psi_*^a psi_*^b`,
    /// with `a` on the genus-`h` side carrying the points in `points`.
    BoundarySep { genus: u32, points: Vec<usize>, a: u32, b: u32 },
}

fn bernoulli_over_factorial(l: u32) -> Rational {
    static TABLE: OnceLock<Vec<Rational>> = OnceLock::new();
    let table = TABLE.get_or_init(|| bernoulli_numbers(64));
    &table[2 * l as usize] / Rational::from_integer(factorial(2 * l))
}

/// Mumford's expansion of `ch_{2l-1}(E)` on `M_{g,n}` as a list of
/// coefficient/term pairs. Separating types are listed ordered, each
/// unordered divisor twice, which the global 1/2 compensates.
pub fn grr_expand(l: u32, genus: u32, points: usize) -> Vec<(Rational, ChernTerm)> {
    assert!(l >= 1);
    let k = 2 * l - 1;
    let pre = bernoulli_over_factorial(l);
    let half = &pre * rat(1, 2);
    let mut out = vec![(pre.clone(), ChernTerm::Kappa(k))];
    for i in 0..points {
        out.push((-&pre, ChernTerm::Psi { point: i, power: k }));
    }
    if genus >= 1 {
        for a in 0..k {
            out.push((&half * sign(a as i64), ChernTerm::BoundaryIrr { a, b: k - 1 - a }));
        }
    }
    for h in 0..=genus {
        for mask in 0..(1u64 << points) {
            let left: Vec<usize> = (0..points).filter(|i| mask >> i & 1 == 1).collect();
            if !is_stable(h, left.len() + 1) || !is_stable(genus - h, points - left.len() + 1) {
                continue;
            }
            for a in 0..k {
                out.push((
                    &half * sign(a as i64),
                    ChernTerm::BoundarySep { genus: h, points: left.clone(), a, b: k - 1 - a },
                ));
            }
        }
    }
    out
}

type ChKey = (u32, Vec<u32>, Vec<u32>, Vec<u32>);

fn ch_store() -> &'static RwLock<HashMap<ChKey, Rational>> {
    static STORE: OnceLock<RwLock<HashMap<ChKey, Rational>>> = OnceLock::new();
    STORE.get_or_init(Default::default)
}

fn hodge_store() -> &'static RwLock<HashMap<(u32, Vec<u32>, Vec<u32>), Rational>> {
    static STORE: OnceLock<RwLock<HashMap<(u32, Vec<u32>, Vec<u32>), Rational>>> = OnceLock::new();
    STORE.get_or_init(Default::default)
}

fn degree_sum(xs: &[u32]) -> i64 {
    xs.iter().map(|&x| x as i64).sum()
}

/// `int_{M_{g,n}} prod psi_i^{a_i} prod kappa_b prod ch_k(E)`.
pub fn ch_integral(g: u32, psi: &[u32], kappa: &[u32], ch: &[u32]) -> Rational {
    let n = psi.len();
    if !is_stable(g, n) {
        return Rational::zero();
    }
    if degree_sum(psi) + degree_sum(kappa) + degree_sum(ch) != dimension(g, n) {
        return Rational::zero();
    }
    if g == 0 && !ch.is_empty() {
        return Rational::zero();
    }
    if ch.iter().any(|k| k % 2 == 0) {
        return Rational::zero();
    }
    if kappa.is_empty() && ch.is_empty() {
        return psi_unsorted(g, psi);
    }
    let mut key_psi = psi.to_vec();
    key_psi.sort_unstable();
    let mut key_kappa = kappa.to_vec();
    key_kappa.sort_unstable();
    let mut key_ch = ch.to_vec();
    key_ch.sort_unstable();
    let key = (g, key_psi, key_kappa, key_ch);
    if let Some(v) = ch_store().read().expect("memo lock").get(&key) {
        return v.clone();
    }
    let (_, psi, kappa, ch) = &key;
    let value = if !kappa.is_empty() {
        eliminate_kappa(g, psi, kappa, ch)
    } else if psi.first() == Some(&0) && is_stable(g, n - 1) {
        let rest = &psi[1..];
        let mut acc = Rational::zero();
        for j in 0..rest.len() {
            if rest[j] == 0 {
                continue;
            }
            let mut lowered = rest.to_vec();
            lowered[j] -= 1;
            acc += ch_integral(g, &lowered, &[], ch);
        }
        acc
    } else if let Some(pos) = psi.iter().position(|&a| a == 1).filter(|_| is_stable(g, n - 1)) {
        let mut rest = psi.clone();
        rest.remove(pos);
        int(2 * g as i64 - 2 + rest.len() as i64) * ch_integral(g, &rest, &[], ch)
    } else {
        eliminate_ch(g, psi, ch)
    };
    ch_store().write().expect("memo lock").entry(key.clone()).or_insert(value.clone());
    value
}

/// Pushes the largest kappa forward from one extra marked point.
fn eliminate_kappa(g: u32, psi: &[u32], kappa: &[u32], ch: &[u32]) -> Rational {
    let (&b, others) = kappa.split_last().expect("nonempty");
    let m = others.len();
    let mut acc = Rational::zero();
    for mask in 0..(1u64 << m) {
        let mut merged = b + 1;
        let mut kept = Vec::with_capacity(m);
        for (i, &a) in others.iter().enumerate() {
            if mask >> i & 1 == 1 {
                merged += a;
            } else {
                kept.push(a);
            }
        }
        let mut extended = psi.to_vec();
        extended.push(merged);
        let v = ch_integral(g, &extended, &kept, ch);
        if !v.is_zero() {
            acc += sign(mask.count_ones() as i64) * v;
        }
    }
    acc
}

/// Replaces the largest ch factor by its Mumford expansion.
fn eliminate_ch(g: u32, psi: &[u32], ch: &[u32]) -> Rational {
    let (&k, rest) = ch.split_last().expect("nonempty");
    let l = (k + 1) / 2;
    let n = psi.len();
    let mut acc = Rational::zero();
    for (coeff, term) in grr_expand(l, g, n) {
        let v = match term {
            ChernTerm::Kappa(b) => ch_integral(g, psi, &[b], rest),
            ChernTerm::Psi { point, power } => {
                let mut raised = psi.to_vec();
                raised[point] += power;
                ch_integral(g, &raised, &[], rest)
            }
            ChernTerm::BoundaryIrr { a, b } => {
                let mut extended = psi.to_vec();
                extended.push(a);
                extended.push(b);
                ch_integral(g - 1, &extended, &[], rest)
            }
            ChernTerm::BoundarySep { genus: h, points, a, b } => separating(g, h, psi, &points, a, b, rest),
        };
        if !v.is_zero() {
            acc += coeff * v;
        }
    }
    acc
}

fn separating(g: u32, h: u32, psi: &[u32], left_points: &[usize], a: u32, b: u32, rest: &[u32]) -> Rational {
    let mut left: Vec<u32> = left_points.iter().map(|&i| psi[i]).collect();
    let mut right: Vec<u32> =
        (0..psi.len()).filter(|i| !left_points.contains(i)).map(|i| psi[i]).collect();
    left.push(a);
    right.push(b);
    let left_room = dimension(h, left.len()) - degree_sum(&left);
    let right_room = dimension(g - h, right.len()) - degree_sum(&right);
    if left_room < 0 || right_room < 0 || left_room + right_room != degree_sum(rest) {
        return Rational::zero();
    }
    let m = rest.len();
    let mut acc = Rational::zero();
    for mask in 0..(1u64 << m) {
        let mut cl = Vec::new();
        let mut cr = Vec::new();
        for (i, &c) in rest.iter().enumerate() {
            if mask >> i & 1 == 1 {
                cl.push(c);
            } else {
                cr.push(c);
            }
        }
        if degree_sum(&cl) != left_room {
            continue;
        }
        let lv = ch_integral(h, &left, &[], &cl);
        if lv.is_zero() {
            continue;
        }
        acc += lv * ch_integral(g - h, &right, &[], &cr);
    }
    acc
}

/// Like [`hodge_integral`], but the first step always expands a Chern
/// character by Mumford's formula instead of removing a `psi^0` or `psi^1`.
pub fn hodge_integral_unreduced(q: &HodgeQuery) -> Rational {
    let (g, psi) = (q.genus, &q.psi_exponents);
    if q.lambda_indices.is_empty() || degree_sum(psi) + degree_sum(&q.lambda_indices) != dimension(g, psi.len()) {
        return hodge_integral(q);
    }
    let mut acc = Rational::zero();
    for (mono, c) in lambda_to_ch(&q.lambda_indices).terms() {
        if mono.iter().any(|k| k % 2 == 0) {
            continue;
        }
        let v = eliminate_ch(g, psi, mono);
        if !v.is_zero() {
            acc += c * v;
        }
    }
    acc
}

/// `int psi-monomial * lambda-monomial` over `M_{g,n}`.
pub fn hodge_integral(q: &HodgeQuery) -> Rational {
    hodge_raw(q.genus, &q.psi_exponents, &q.lambda_indices)
}

/// Unchecked form; `lambda` entries of 0 are ignored and entries above the
/// genus give zero.
pub(crate) fn hodge_raw(g: u32, psi: &[u32], lambda: &[u32]) -> Rational {
    let n = psi.len();
    if !is_stable(g, n) {
        return Rational::zero();
    }
    let mut lam: Vec<u32> = lambda.iter().copied().filter(|&r| r > 0).collect();
    if lam.iter().any(|&r| r > g) {
        return Rational::zero();
    }
    if degree_sum(psi) + degree_sum(&lam) != dimension(g, n) {
        return Rational::zero();
    }
    if lam.is_empty() {
        return psi_unsorted(g, psi);
    }
    lam.sort_unstable();
    let mut key_psi = psi.to_vec();
    key_psi.sort_unstable();
    let key = (g, key_psi, lam);
    if let Some(v) = hodge_store().read().expect("memo lock").get(&key) {
        return v.clone();
    }
    let mut acc = Rational::zero();
    for (mono, c) in lambda_to_ch(&key.2).terms() {
        let v = ch_integral(g, &key.1, &[], mono);
        if !v.is_zero() {
            acc += c * v;
        }
    }
    hodge_store().write().expect("memo lock").entry(key.clone()).or_insert(acc.clone());
    acc
}

/// Marked-point insertion for [`lambda_product_integral`].
#[derive(Clone, Debug)]
pub enum Insertion {
    /// `psi^a`
    Psi(u32),
    /// `1 / (w - psi)`, expanded as `sum_s psi^s / w^{s+1}`.
    Geometric(RationalFunction),
}

/// `int_{M_{g,n}} prod_j Lambda(u_j) * prod_i insertion_i` with
/// `Lambda(u) = sum_r c_r(E^*) u^{g-r}`.
pub fn lambda_product_integral(
    genus: u32,
    insertions: &[Insertion],
    u: &[RationalFunction],
) -> Result<RationalFunction> {
    let n = insertions.len();
    if !is_stable(genus, n) {
        return Err(Error::Unstable { genus, points: n });
    }
    let mut bases: Vec<RationalFunction> = u.to_vec();
    let mut fixed = Vec::with_capacity(n);
    let mut geometric = Vec::new();
    for (i, ins) in insertions.iter().enumerate() {
        match ins {
            Insertion::Psi(a) => fixed.push(Some(*a)),
            Insertion::Geometric(w) => {
                if w.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                fixed.push(None);
                geometric.push(i);
                bases.push(w.clone());
            }
        }
    }
    let dim = dimension(genus, n);
    let fixed_degree: i64 = fixed.iter().flatten().map(|&a| a as i64).sum();
    let mut sum = LaurentSum::new(bases);
    let m = u.len();
    let mut lambdas = vec![0u32; m];
    loop {
        let lam_degree: i64 = lambdas.iter().map(|&r| r as i64).sum();
        let free = dim - fixed_degree - lam_degree;
        if free >= 0 {
            let lam_sign = sign(lam_degree);
            let mut spread = vec![0u32; geometric.len()];
            distribute(free as u32, &mut spread, 0, &mut |s| {
                let mut psi: Vec<u32> = fixed.iter().map(|a| a.unwrap_or(0)).collect();
                for (slot, &i) in geometric.iter().enumerate() {
                    psi[i] = s[slot];
                }
                let v = hodge_raw(genus, &psi, &lambdas);
                if v.is_zero() {
                    return;
                }
                let mut exps: Vec<i64> = lambdas.iter().map(|&r| genus as i64 - r as i64).collect();
                exps.extend(s.iter().map(|&x| -(x as i64) - 1));
                sum.add_term(exps, &lam_sign * v);
            });
        }
        // next lambda tuple
        let mut j = 0;
        loop {
            if j == m {
                return sum.evaluate();
            }
            if lambdas[j] < genus {
                lambdas[j] += 1;
                break;
            }
            lambdas[j] = 0;
            j += 1;
        }
    }
}

fn distribute(total: u32, slots: &mut Vec<u32>, at: usize, f: &mut impl FnMut(&[u32])) {
    if slots.is_empty() {
        if total == 0 {
            f(slots);
        }
        return;
    }
    if at + 1 == slots.len() {
        slots[at] = total;
        f(slots);
        return;
    }
    for x in 0..=total {
        slots[at] = x;
        distribute(total - x, slots, at + 1, f);
    }
}

fn check_nonzero(us: &[&RationalFunction]) -> Result<()> {
    if us.iter().any(|u| u.is_zero()) {
        return Err(Error::InvalidArgument("Hodge integral arguments must be nonzero".into()));
    }
    Ok(())
}

/// One-partition Hodge integral `I_{1;g}(u1, u2, u3)`.
pub fn i1(g: u32, u1: &RationalFunction, u2: &RationalFunction, u3: &RationalFunction) -> Result<RationalFunction> {
    check_nonzero(&[u1, u2, u3])?;
    if g == 0 {
        return Ok(RationalFunction::one());
    }
    let u = [u1.clone(), u2.clone(), u3.clone()];
    let v = lambda_product_integral(g, &[Insertion::Geometric(u1.clone())], &u)?;
    v.checked_div(u1)
}

/// Two-partition Hodge integral `I_{2;g}(u1, u2, u3)`, prefactor included.
pub fn i2(g: u32, u1: &RationalFunction, u2: &RationalFunction, u3: &RationalFunction) -> Result<RationalFunction> {
    check_nonzero(&[u1, u2, u3])?;
    let s = u1 + u2;
    let base = (&s * u3).checked_div(&(u1 * u2))?;
    if g == 0 {
        return Ok(base);
    }
    let u = [u1.clone(), u2.clone(), u3.clone()];
    let v = lambda_product_integral(
        g,
        &[Insertion::Geometric(u1.clone()), Insertion::Geometric(u2.clone())],
        &u,
    )?;
    Ok(&(&base * &s) * &v)
}

/// `int_{M_{g,1}} lambda_{g-1} lambda_g sum_r (-1)^r lambda_r psi^{g-1-r}`.
pub fn alpha_coeff(gp: u32) -> Rational {
    assert!(gp >= 1);
    let mut acc = Rational::zero();
    for r in 0..gp {
        let v = hodge_raw(gp, &[gp - 1 - r], &[gp - 1, gp, r]);
        acc += sign(r as i64) * v;
    }
    acc
}

/// `int_{M_{g,1}} psi^{2g-2} lambda_g`, used by the self-check.
pub fn lambda_g_psi(g: u32) -> Rational {
    hodge_raw(g, &[2 * g - 2], &[g])
}

/// Startup self-check of the boundary conventions.
pub fn self_check() -> bool {
    hodge_raw(1, &[0], &[1]) == rat(1, 24)
        && hodge_raw(1, &[0, 0], &[1, 1]).is_zero()
        && lambda_g_psi(2) == rat(7, 5760)
}
