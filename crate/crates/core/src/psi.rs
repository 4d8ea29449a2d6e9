//! Intersection numbers of psi and kappa classes on moduli of stable curves.
//!
//! `<tau_{a_1} ... tau_{a_n}>_g` is evaluated by the string and dilaton
//! equations where they apply and otherwise by the DVV recursion on the
//! largest exponent. Kappa classes are removed by pushing forward from one
//! extra marked point, which turns `kappa_b` into `psi^{b+1}` at the new point
//! at the cost of the correction terms from `pi^* kappa_a = kappa_a - psi^a`.
//!
//! Results are memoized in a process-wide store keyed by the sorted exponent
//! multiset. The store is behind a `RwLock`: concurrent readers are fine and
//! insertions are serialized. A stored value never changes.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::rational::{double_factorial, rat, sign, Rational};
use crate::error::{Error, Result};

/// `2g - 2 + n > 0`.
pub fn is_stable(genus: u32, points: usize) -> bool {
    2 * genus as i64 - 2 + points as i64 > 0
}

/// Complex dimension `3g - 3 + n` of the moduli space.
pub fn dimension(genus: u32, points: usize) -> i64 {
    3 * genus as i64 - 3 + points as i64
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PsiQuery {
    genus: u32,
    exponents: Vec<u32>,
}

impl PsiQuery {
    pub fn new(genus: u32, mut exponents: Vec<u32>) -> Result<Self> {
        if !is_stable(genus, exponents.len()) {
            return Err(Error::Unstable { genus, points: exponents.len() });
        }
        exponents.sort_unstable();
        Ok(PsiQuery { genus, exponents })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KappaPsiQuery {
    genus: u32,
    psi_exponents: Vec<u32>,
    kappa_indices: Vec<u32>,
}

impl KappaPsiQuery {
    pub fn new(genus: u32, mut psi_exponents: Vec<u32>, mut kappa_indices: Vec<u32>) -> Result<Self> {
        if !is_stable(genus, psi_exponents.len()) {
            return Err(Error::Unstable { genus, points: psi_exponents.len() });
        }
        if kappa_indices.contains(&0) {
            return Err(Error::InvalidArgument("kappa indices must be positive".into()));
        }
        psi_exponents.sort_unstable();
        kappa_indices.sort_unstable();
        Ok(KappaPsiQuery { genus, psi_exponents, kappa_indices })
    }
}

/// Memo of `<tau_a>_g` keyed by genus and sorted exponents.
#[derive(Default)]
pub struct MemoStore {
    map: RwLock<HashMap<(u32, Vec<u32>), Rational>>,
}

impl MemoStore {
    fn get(&self, key: &(u32, Vec<u32>)) -> Option<Rational> {
        self.map.read().expect("memo lock").get(key).cloned()
    }

    fn insert(&self, key: (u32, Vec<u32>), value: Rational) {
        self.map.write().expect("memo lock").entry(key).or_insert(value);
    }

    pub fn len(&self) -> usize {
        self.map.read().expect("memo lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn store() -> &'static MemoStore {
    static STORE: OnceLock<MemoStore> = OnceLock::new();
    STORE.get_or_init(MemoStore::default)
}

/// `<tau_{a_1} ... tau_{a_n}>_g`; zero unless the degrees add up to the dimension.
pub fn witten_psi(q: &PsiQuery) -> Rational {
    psi_sorted(q.genus, &q.exponents)
}

/// Convenience wrapper taking unsorted exponents.
pub fn psi_integral(genus: u32, exponents: &[u32]) -> Result<Rational> {
    Ok(witten_psi(&PsiQuery::new(genus, exponents.to_vec())?))
}

pub(crate) fn psi_unsorted(genus: u32, exponents: &[u32]) -> Rational {
    let mut e = exponents.to_vec();
    e.sort_unstable();
    psi_sorted(genus, &e)
}

fn psi_sorted(g: u32, a: &[u32]) -> Rational {
    let n = a.len();
    if !is_stable(g, n) {
        return Rational::zero();
    }
    let total: i64 = a.iter().map(|&x| x as i64).sum();
    if total != dimension(g, n) {
        return Rational::zero();
    }
    if g == 0 && n == 3 {
        return Rational::one();
    }
    if g == 1 && n == 1 {
        return rat(1, 24);
    }
    let key = (g, a.to_vec());
    if let Some(v) = store().get(&key) {
        return v;
    }
    let value = if a[0] == 0 {
        string_reduction(g, a)
    } else if a[0] == 1 {
        let rest = &a[1..];
        Rational::from_integer(BigInt::from(2 * g as i64 - 2 + rest.len() as i64)) * psi_sorted(g, rest)
    } else {
        dvv(g, a)
    };
    store().insert(key, value.clone());
    value
}

fn string_reduction(g: u32, a: &[u32]) -> Rational {
    let rest = &a[1..];
    let mut acc = Rational::zero();
    for j in 0..rest.len() {
        if rest[j] == 0 || (j > 0 && rest[j] == rest[j - 1]) {
            continue;
        }
        let mult = rest.iter().filter(|&&x| x == rest[j]).count();
        let mut lowered = rest.to_vec();
        lowered[j] -= 1;
        lowered.sort_unstable();
        acc += Rational::from_integer(BigInt::from(mult)) * psi_sorted(g, &lowered);
    }
    acc
}

/// One DVV step on the largest exponent of `a` (which must be at least 1),
/// evaluating the lower terms through the memoized entry point.
pub fn dvv_step(g: u32, a: &[u32]) -> Rational {
    let mut sorted = a.to_vec();
    sorted.sort_unstable();
    dvv(g, &sorted)
}

fn dvv(g: u32, a: &[u32]) -> Rational {
    let (top, rest) = a.split_last().expect("nonempty");
    debug_assert!(*top >= 1);
    let k = (*top - 1) as i64;
    let rest: Vec<u32> = rest.to_vec();
    let mut acc = Rational::zero();

    for j in 0..rest.len() {
        let dj = rest[j] as i64;
        let coeff = double_factorial(2 * k + 2 * dj + 1) / double_factorial(2 * dj - 1);
        let mut raised = rest.clone();
        raised[j] += k as u32;
        acc += Rational::from_integer(coeff) * psi_unsorted(g, &raised);
    }

    let half = rat(1, 2);
    for x in 0..k {
        let y = k - 1 - x;
        let w = Rational::from_integer(double_factorial(2 * x + 1) * double_factorial(2 * y + 1));
        let mut inner = Rational::zero();
        if g >= 1 {
            let mut with = rest.clone();
            with.push(x as u32);
            with.push(y as u32);
            inner += psi_unsorted(g - 1, &with);
        }
        let m = rest.len();
        for g1 in 0..=g {
            for mask in 0..(1u64 << m) {
                let mut left = vec![x as u32];
                let mut right = vec![y as u32];
                for (i, &d) in rest.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        left.push(d);
                    } else {
                        right.push(d);
                    }
                }
                if !is_stable(g1, left.len()) || !is_stable(g - g1, right.len()) {
                    continue;
                }
                let l = psi_unsorted(g1, &left);
                if l.is_zero() {
                    continue;
                }
                inner += l * psi_unsorted(g - g1, &right);
            }
        }
        acc += &half * w * inner;
    }
    acc / Rational::from_integer(double_factorial(2 * k + 3))
}

/// `<tau_a kappa_b>_g` with Arbarello-Cornalba kappa classes.
pub fn kappa_psi(q: &KappaPsiQuery) -> Rational {
    kappa_rec(q.genus, &q.psi_exponents, &q.kappa_indices)
}

fn kappa_rec(g: u32, psi: &[u32], kappa: &[u32]) -> Rational {
    let Some((&b, others)) = kappa.split_last() else {
        return psi_unsorted(g, psi);
    };
    let total: i64 = psi.iter().chain(kappa).map(|&x| x as i64).sum();
    if total != dimension(g, psi.len()) {
        return Rational::zero();
    }
    let mut acc = Rational::zero();
    let m = others.len();
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
        acc += sign(mask.count_ones() as i64) * kappa_rec(g, &extended, &kept);
    }
    acc
}

/// Startup self-check: base values and a string/dilaton spot check.
pub fn self_check() -> bool {
    let base = psi_sorted(0, &[0, 0, 0]) == Rational::one() && psi_sorted(1, &[1]) == rat(1, 24);
    let derived = {
        let v = dvv(1, &[0, 2]);
        v == rat(1, 24)
    };
    let dilaton = psi_sorted(2, &[1, 4]) == Rational::from_integer(BigInt::from(3)) * psi_sorted(2, &[4]);
    base && derived && dilaton
}
