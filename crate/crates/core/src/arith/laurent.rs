//! Sums of Laurent monomials in a fixed list of rational-function bases.
//!
//! Hodge-integral expansions produce many terms `c * w1^e1 * ... * wk^ek` with
//! possibly negative exponents. Adding them one at a time as rational
//! functions would run a polynomial GCD per term; collecting them here and
//! clearing denominators once keeps the work polynomial.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::poly::Polynomial;
use super::ratfunc::RationalFunction;
use super::rational::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct LaurentSum {
    bases: Vec<RationalFunction>,
    terms: BTreeMap<Vec<i64>, Rational>,
}

impl LaurentSum {
    pub fn new(bases: Vec<RationalFunction>) -> Self {
        LaurentSum { bases, terms: BTreeMap::new() }
    }

    pub fn add_term(&mut self, exponents: Vec<i64>, c: Rational) {
        debug_assert_eq!(exponents.len(), self.bases.len());
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exponents).or_insert_with(Rational::zero);
        *slot += c;
    }

    pub fn is_empty(&self) -> bool {
        self.terms.values().all(Zero::is_zero)
    }

    pub fn evaluate(&self) -> Result<RationalFunction> {
        let live: Vec<(&Vec<i64>, &Rational)> = self.terms.iter().filter(|(_, c)| !c.is_zero()).collect();
        if live.is_empty() {
            return Ok(RationalFunction::zero());
        }
        let k = self.bases.len();
        let mut lo = vec![i64::MAX; k];
        let mut hi = vec![i64::MIN; k];
        for (e, _) in &live {
            for i in 0..k {
                lo[i] = lo[i].min(e[i]);
                hi[i] = hi[i].max(e[i]);
            }
        }
        for (i, b) in self.bases.iter().enumerate() {
            if lo[i] < 0 && b.is_zero() {
                return Err(Error::DivisionByZero);
            }
        }
        // powers[i][j] = p_i^j, qpowers[i][j] = q_i^j for j up to hi - lo
        let span: Vec<usize> = (0..k).map(|i| (hi[i] - lo[i]) as usize).collect();
        let powers: Vec<Vec<Polynomial>> = (0..k).map(|i| power_table(self.bases[i].numer(), span[i])).collect();
        let qpowers: Vec<Vec<Polynomial>> = (0..k).map(|i| power_table(self.bases[i].denom(), span[i])).collect();
        let mut numer = Polynomial::zero();
        for (e, c) in live {
            let mut term = Polynomial::constant(c.clone());
            for i in 0..k {
                let up = (e[i] - lo[i]) as usize;
                let down = (hi[i] - e[i]) as usize;
                if up > 0 {
                    term = &term * &powers[i][up];
                }
                if down > 0 {
                    term = &term * &qpowers[i][down];
                }
            }
            numer = &numer + &term;
        }
        let mut out = RationalFunction::from_poly(numer);
        for (i, b) in self.bases.iter().enumerate() {
            let p = RationalFunction::from_poly(b.numer().clone());
            let q = RationalFunction::from_poly(b.denom().clone());
            if lo[i] != 0 {
                out = &out * &p.pow(lo[i])?;
            }
            if hi[i] != 0 {
                out = &out * &q.pow(-hi[i])?;
            }
        }
        Ok(out)
    }
}

fn power_table(p: &Polynomial, max: usize) -> Vec<Polynomial> {
    let mut out = Vec::with_capacity(max + 1);
    out.push(Polynomial::one());
    for j in 1..=max {
        let next = &out[j - 1] * p;
        out.push(next);
    }
    out
}
