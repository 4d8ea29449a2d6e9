//! Genus-expansion coefficients for the GW/enumerative transforms, the
//! generating functions `F1`, `F2` of one- and two-partition Hodge
//! integrals, and order-by-order checks of the identities between them.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::arith::rational::{factorial, int, rat, sign, Rational};
use crate::arith::{series_sinc, RationalFunction, Series, SincKind};
use crate::error::{Error, Result};
use crate::hodge::{alpha_coeff, i1, i2};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoefficientKind {
    RealTilde,
    Complex,
    RealHat,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientTable {
    pub kind: CoefficientKind,
    pub h: u32,
    pub c1: i64,
    pub values: BTreeMap<u32, Rational>,
}

impl CoefficientTable {
    pub fn compute(kind: CoefficientKind, h: u32, c1: i64, max_genus: u32) -> Result<Self> {
        let mut values = BTreeMap::new();
        for g in 0..=max_genus {
            let v = match kind {
                CoefficientKind::RealTilde => coeff_real(h, c1, g)?,
                CoefficientKind::Complex => coeff_cx(h, c1, g),
                CoefficientKind::RealHat => coeff_hat(h, c1, g),
            };
            values.insert(g, v);
        }
        Ok(CoefficientTable { kind, h, c1, values })
    }
}

fn kernel_power(kind: SincKind, exponent: i64, g: u32) -> Rational {
    let order = 2 * g as usize;
    series_sinc::<Rational>(kind, order)
        .pow(exponent)
        .expect("sinc kernel has unit constant term")
        .coeff(order)
}

/// Coefficient of `t^{2g}` in `(sinh(t/2)/(t/2))^{h-1+c1/2}`.
pub fn coeff_real(h: u32, c1: i64, g: u32) -> Result<Rational> {
    if c1 % 2 != 0 {
        return Err(Error::OddFirstChern(c1));
    }
    Ok(kernel_power(SincKind::Sinh, h as i64 - 1 + c1 / 2, g))
}

/// Coefficient of `t^{2g}` in `(sin(t/2)/(t/2))^{2h-2+c1}`.
pub fn coeff_cx(h: u32, c1: i64, g: u32) -> Rational {
    kernel_power(SincKind::Sin, 2 * h as i64 - 2 + c1, g)
}

/// Sum over ordered compositions `(g_1..g_m)` of `gc` of
/// `(2-2h-c1)^m / (2^m m!) prod (-1)^{g_i} alpha_{g_i}`.
pub fn coeff_hat(h: u32, c1: i64, gc: u32) -> Rational {
    let w = int(2 - 2 * h as i64 - c1);
    let alphas: Vec<Rational> = (0..=gc).map(|g| if g == 0 { Rational::zero() } else { alpha_coeff(g) }).collect();
    // by_parts[m][s] = sum over compositions of s into m positive parts
    let mut total = if gc == 0 { Rational::one() } else { Rational::zero() };
    let mut layer: Vec<Rational> = vec![Rational::zero(); gc as usize + 1];
    layer[0] = Rational::one();
    for m in 1..=gc {
        let mut next = vec![Rational::zero(); gc as usize + 1];
        for s in 0..=gc as usize {
            if layer[s].is_zero() {
                continue;
            }
            for part in 1..=(gc as usize - s) {
                next[s + part] += &layer[s] * sign(part as i64) * &alphas[part];
            }
        }
        layer = next;
        let weight = num_traits::pow(&w * rat(1, 2), m as usize) / Rational::from_integer(factorial(m));
        total += weight * &layer[gc as usize];
    }
    total
}

fn series_from(coeffs: Vec<RationalFunction>, order: usize) -> Series<RationalFunction> {
    let mut full = Vec::with_capacity(order + 1);
    for c in coeffs {
        full.push(c);
        full.push(RationalFunction::zero());
    }
    Series::new(full, order).with_parity(crate::arith::Parity::Even)
}

/// `sum_g I_{1;g}(u) t^{2g}` through `t^order`.
pub fn f1_series(
    u1: &RationalFunction,
    u2: &RationalFunction,
    u3: &RationalFunction,
    order: usize,
) -> Result<Series<RationalFunction>> {
    let coeffs = (0..=order as u32 / 2).map(|g| i1(g, u1, u2, u3)).collect::<Result<Vec<_>>>()?;
    Ok(series_from(coeffs, order))
}

/// `sum_g I_{2;g}(u) t^{2g}` through `t^order`.
pub fn f2_series(
    u1: &RationalFunction,
    u2: &RationalFunction,
    u3: &RationalFunction,
    order: usize,
) -> Result<Series<RationalFunction>> {
    let coeffs = (0..=order as u32 / 2).map(|g| i2(g, u1, u2, u3)).collect::<Result<Vec<_>>>()?;
    Ok(series_from(coeffs, order))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identity {
    F1,
    F12,
    F2,
    F1Sq,
    HatEqTilde,
    AlphaExp,
}

impl Identity {
    pub const ALL: [Identity; 6] =
        [Identity::F1, Identity::F12, Identity::F2, Identity::F1Sq, Identity::HatEqTilde, Identity::AlphaExp];

    pub fn name(self) -> &'static str {
        match self {
            Identity::F1 => "F1",
            Identity::F12 => "F12",
            Identity::F2 => "F2",
            Identity::F1Sq => "F1sq",
            Identity::HatEqTilde => "hat_eq_tilde",
            Identity::AlphaExp => "alpha_exp",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conjecture {
    F1Dep,
    F2Prod,
}

impl Conjecture {
    pub const ALL: [Conjecture; 2] = [Conjecture::F1Dep, Conjecture::F2Prod];

    pub fn name(self) -> &'static str {
        match self {
            Conjecture::F1Dep => "F1_dep",
            Conjecture::F2Prod => "F2_prod",
        }
    }
}

/// Outcome of one identity check: labelled left-minus-right differences.
#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub name: String,
    pub order: usize,
    pub conjecture: bool,
    pub differences: Vec<(String, Series<RationalFunction>)>,
    pub pass: bool,
}

impl IdentityReport {
    fn new(name: &str, order: usize, conjecture: bool, differences: Vec<(String, Series<RationalFunction>)>) -> Self {
        let pass = differences.iter().all(|(_, d)| d.is_zero());
        IdentityReport { name: name.to_string(), order, conjecture, differences, pass }
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match (self.pass, self.conjecture) {
            (true, false) => "PASS",
            (false, false) => "FAIL",
            (true, true) => "CONSISTENT",
            (false, true) => "INCONSISTENT",
        };
        write!(f, "{:<14} t^{:<3} {} ({} checks)", self.name, self.order, status, self.differences.len())?;
        for (label, d) in &self.differences {
            if !d.is_zero() {
                let k = (0..=d.order()).find(|&k| !d.coeff(k).is_zero()).unwrap_or(0);
                write!(f, "\n    {label}: first nonzero difference at t^{k}: {}", d.coeff(k))?;
            }
        }
        Ok(())
    }
}

fn rf(q: Rational) -> RationalFunction {
    RationalFunction::constant(q)
}

fn sinc_rf(order: usize) -> Series<RationalFunction> {
    series_sinc(SincKind::Sin, order)
}

fn sinc_power(e: i64, order: usize) -> Series<RationalFunction> {
    sinc_rf(order).pow(e).expect("unit constant term")
}

fn scalar(c: RationalFunction, order: usize) -> Series<RationalFunction> {
    Series::constant(c, order)
}

/// Sample values of `u` for the squared-F1 identity.
pub const F1SQ_SAMPLES: [(i64, i64); 3] = [(3, 7), (-5, 2), (11, 3)];

pub fn verify_identity(id: Identity, order: usize) -> Result<IdentityReport> {
    if order % 2 == 1 || order < 2 {
        return Err(Error::InvalidArgument(format!("verification order must be even and at least 2, got {order}")));
    }
    let x = RationalFunction::one();
    let y = RationalFunction::z();
    let diffs = match id {
        Identity::F1 => {
            let lhs = f1_series(&(&x + &y), &x, &y, order)?;
            vec![("x=1,y=z".to_string(), lhs.sub(&sinc_rf(order)))]
        }
        Identity::F12 => {
            let xpy = &x + &y;
            let xmy = &x - &y;
            let my = -&y;
            let c1 = xpy.checked_div(&(&(&x + &x) - &y))?;
            let c2 = xpy.checked_div(&(&(&y + &y) - &x))?;
            let t1 = f1_series(&x, &xpy, &y, order)?.mul(&f2_series(&x, &xmy, &my, order)?).scale(&c1);
            let t2 = f1_series(&y, &xpy, &x, order)?.mul(&f2_series(&my, &xmy, &x, order)?).scale(&c2);
            let t3 = f1_series(&x, &xmy, &my, order)?.mul(&f2_series(&x, &xpy, &y, order)?);
            let t4 = f1_series(&my, &xmy, &x, order)?.mul(&f2_series(&y, &xpy, &x, order)?);
            let lhs = t1.add(&t2).sub(&t3).sub(&t4);
            vec![("x=1,y=z".to_string(), lhs.sub(&sinc_power(5, order)))]
        }
        Identity::F2 => {
            let xpy = &x + &y;
            let xmy = &x - &y;
            let my = -&y;
            let t1 = f2_series(&xpy, &x, &y, order)?.mul(&f2_series(&xmy, &x, &my, order)?);
            let t2 = f2_series(&xpy, &y, &x, order)?.mul(&f2_series(&xmy, &my, &x, order)?);
            let t3 = f2_series(&x, &y, &xpy, order)?.mul(&f2_series(&x, &my, &xmy, order)?);
            let lhs = t1.add(&t2).sub(&t3);
            vec![("x=1,y=z".to_string(), lhs.sub(&sinc_power(8, order)))]
        }
        Identity::F1Sq => {
            let mut out = Vec::new();
            for (p, q) in F1SQ_SAMPLES {
                let u = rf(rat(p, q));
                let lhs = f1_series(&u, &x, &y, order)?.mul(&f1_series(&u, &(&u - &x), &(&u - &y), order)?);
                out.push((format!("u={},x=1,y=z", rat(p, q)), lhs.sub(&sinc_power(2, order))));
            }
            out
        }
        Identity::HatEqTilde => {
            let mut out = Vec::new();
            for h in 0..=2u32 {
                for c1 in [4i64, 8, 12, 16] {
                    let mut coeffs = Vec::new();
                    for g in 0..=order as u32 / 2 {
                        coeffs.push(rf(coeff_hat(h, c1, g) - coeff_real(h, c1, g)?));
                    }
                    out.push((format!("h={h},c1={c1}"), series_from(coeffs, order)));
                }
            }
            out
        }
        Identity::AlphaExp => {
            let mut coeffs = vec![RationalFunction::zero()];
            for g in 1..=order as u32 / 2 {
                coeffs.push(rf(alpha_coeff(g)));
            }
            let lhs = series_from(coeffs, order).exp()?;
            vec![("alpha".to_string(), lhs.sub(&sinc_power(-1, order)))]
        }
    };
    Ok(IdentityReport::new(id.name(), order, false, diffs))
}

/// Observational check of a conjectured identity; never an error on mismatch.
pub fn check_conjecture(c: Conjecture, order: usize, sample_count: usize) -> Result<IdentityReport> {
    if order % 2 == 1 {
        return Err(Error::InvalidArgument(format!("verification order must be even, got {order}")));
    }
    let one = RationalFunction::one();
    let z = RationalFunction::z();
    let diffs = match c {
        Conjecture::F1Dep => {
            // pairs (a, z - a): same sum, different products
            let mut out = Vec::new();
            let reference = f1_series(&one, &rf(rat(1, 2)), &(&z - &rf(rat(1, 2))), order)?;
            for k in 0..sample_count {
                let a = rat(1, k as i64 + 3);
                let s = f1_series(&one, &rf(a.clone()), &(&z - &rf(a.clone())), order)?;
                out.push((format!("u2={a},u3=z-{a}"), s.sub(&reference)));
            }
            out
        }
        Conjecture::F2Prod => {
            let x = one;
            let y = z;
            let lhs = f2_series(&x, &y, &(&x + &y), order)?.mul(&f2_series(&x, &(-&y), &(&x - &y), order)?);
            let x2 = &x * &x;
            let y2 = &y * &y;
            let d = &x2 - &y2;
            let factor = -(&d * &d).checked_div(&(&x2 * &y2))?;
            let rhs = sinc_power(8, order).mul(&scalar(factor, order));
            vec![("x=1,y=z".to_string(), lhs.sub(&rhs))]
        }
    };
    Ok(IdentityReport::new(c.name(), order, true, diffs))
}
