//! Truncated power series in `t` over an exact coefficient ring.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rational::{factorial, Rational};
use super::ratfunc::RationalFunction;
use crate::error::{Error, Result};

/// Exact coefficient ring of a [`Series`].
pub trait Coeff: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, c: &Rational) -> Self;
    fn inv(&self) -> Result<Self>;
    fn from_rational(c: Rational) -> Self;
}

impl Coeff for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, c: &Rational) -> Self {
        self * c
    }
    fn inv(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
    fn from_rational(c: Rational) -> Self {
        c
    }
}

impl Coeff for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn one() -> Self {
        RationalFunction::one()
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, c: &Rational) -> Self {
        RationalFunction::scale(self, c)
    }
    fn inv(&self) -> Result<Self> {
        self.recip()
    }
    fn from_rational(c: Rational) -> Self {
        RationalFunction::constant(c)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    fn allows(self, k: usize) -> bool {
        match self {
            Parity::Even => k % 2 == 0,
            Parity::Odd => k % 2 == 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SincKind {
    /// `sin(t/2)/(t/2)`
    Sin,
    /// `sinh(t/2)/(t/2)`
    Sinh,
}

/// Coefficients of `t^0..=t^order`; nothing beyond `order` is ever read.
#[derive(Clone, Debug, PartialEq)]
pub struct Series<C: Coeff> {
    order: usize,
    coeffs: Vec<C>,
    parity: Option<Parity>,
}

impl<C: Coeff> Series<C> {
    pub fn new(mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.resize(order + 1, C::zero());
        Series { order, coeffs, parity: None }
    }

    /// Zeroes the coefficients the parity forbids.
    pub fn with_parity(mut self, parity: Parity) -> Self {
        for (k, c) in self.coeffs.iter_mut().enumerate() {
            if !parity.allows(k) {
                *c = C::zero();
            }
        }
        self.parity = Some(parity);
        self
    }

    pub fn constant(c: C, order: usize) -> Self {
        Self::new(vec![c], order).with_parity(Parity::Even)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(C::one(), order)
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn parity(&self) -> Option<Parity> {
        self.parity
    }

    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        Series { order, coeffs: self.coeffs[..=order].to_vec(), parity: self.parity }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(C::is_zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        let coeffs = (0..=order).map(|k| self.coeffs[k].add(&rhs.coeffs[k])).collect();
        let parity = if self.parity == rhs.parity { self.parity } else { None };
        Series { order, coeffs, parity }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Series { order: self.order, coeffs: self.coeffs.iter().map(C::neg).collect(), parity: self.parity }
    }

    pub fn scale(&self, c: &C) -> Self {
        Series { order: self.order, coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(), parity: self.parity }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        let mut coeffs = vec![C::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        let parity = match (self.parity, rhs.parity) {
            (Some(p), Some(q)) => Some(if p == q { Parity::Even } else { Parity::Odd }),
            _ => None,
        };
        Series { order, coeffs, parity }
    }

    /// Multiplicative inverse; requires an invertible constant term.
    pub fn inverse(&self) -> Result<Self> {
        let a0_inv = self.coeffs[0].inv().map_err(|_| Error::NonInvertibleSeries)?;
        let mut out: Vec<C> = Vec::with_capacity(self.order + 1);
        out.push(a0_inv.clone());
        for n in 1..=self.order {
            let mut acc = C::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc = acc.add(&self.coeffs[k].mul(&out[n - k]));
                }
            }
            out.push(acc.mul(&a0_inv).neg());
        }
        let parity = match self.parity {
            Some(Parity::Even) => Some(Parity::Even),
            _ => None,
        };
        Ok(Series { order: self.order, coeffs: out, parity })
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, exponent: i64) -> Result<Self> {
        let base = if exponent < 0 { self.inverse()? } else { self.clone() };
        let mut e = exponent.unsigned_abs();
        let mut acc = Series::one(self.order);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        Ok(acc)
    }

    /// `exp(s)` for `s(0) = 0`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::SeriesDomain("exp needs a zero constant term"));
        }
        let mut out = vec![C::one()];
        for n in 1..=self.order {
            let mut acc = C::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    let term = self.coeffs[k].mul(&out[n - k]).scale(&Rational::from_integer(BigInt::from(k)));
                    acc = acc.add(&term);
                }
            }
            out.push(acc.scale(&Rational::new(BigInt::one(), BigInt::from(n))));
        }
        let parity = match self.parity {
            Some(Parity::Even) => Some(Parity::Even),
            _ => None,
        };
        Ok(Series { order: self.order, coeffs: out, parity })
    }

    /// `log(s)` for `s(0) = 1`.
    pub fn log(&self) -> Result<Self> {
        if self.coeffs[0] != C::one() {
            return Err(Error::SeriesDomain("log needs constant term 1"));
        }
        let mut out = vec![C::zero()];
        for n in 1..=self.order {
            let mut acc = C::zero();
            for k in 1..n {
                if !self.coeffs[n - k].is_zero() {
                    let term = out[k].mul(&self.coeffs[n - k]).scale(&Rational::from_integer(BigInt::from(k)));
                    acc = acc.add(&term);
                }
            }
            let l = self.coeffs[n].sub(&acc.scale(&Rational::new(BigInt::one(), BigInt::from(n))));
            out.push(l);
        }
        let parity = match self.parity {
            Some(Parity::Even) => Some(Parity::Even),
            _ => None,
        };
        Ok(Series { order: self.order, coeffs: out, parity })
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Series<D> {
        Series { order: self.order, coeffs: self.coeffs.iter().map(f).collect(), parity: self.parity }
    }
}

/// `sin(t/2)/(t/2)` or `sinh(t/2)/(t/2)` through `t^order`.
pub fn series_sinc<C: Coeff>(kind: SincKind, order: usize) -> Series<C> {
    let mut coeffs = vec![C::zero(); order + 1];
    for g in 0..=order / 2 {
        let denom = BigInt::from(4u32).pow(g as u32) * factorial(2 * g as u32 + 1);
        let mut c = Rational::new(BigInt::one(), denom);
        if kind == SincKind::Sin && g % 2 == 1 {
            c = -c;
        }
        coeffs[2 * g] = C::from_rational(c);
    }
    Series::new(coeffs, order).with_parity(Parity::Even)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{int, rat};

    fn rs(cs: &[Rational], order: usize) -> Series<Rational> {
        Series::new(cs.to_vec(), order)
    }

    #[test]
    fn sinc_coefficients() {
        let s: Series<Rational> = series_sinc(SincKind::Sin, 4);
        assert_eq!(s.coeffs(), &[int(1), int(0), rat(-1, 24), int(0), rat(1, 1920)]);
        let h: Series<Rational> = series_sinc(SincKind::Sinh, 2);
        assert_eq!(h.coeffs(), &[int(1), int(0), rat(1, 24)]);
        let c: Series<Rational> = series_sinc(SincKind::Sin, 0);
        assert_eq!(c.coeffs(), &[int(1)]);
    }

    #[test]
    fn square_of_sin_kernel() {
        let s: Series<Rational> = series_sinc(SincKind::Sin, 4);
        let sq = s.pow(2).unwrap();
        assert_eq!(sq.coeffs(), &[int(1), int(0), rat(-1, 12), int(0), rat(1, 360)]);
    }

    #[test]
    fn geometric_inverse() {
        let s = rs(&[int(1), int(0), int(1)], 4);
        let inv = s.pow(-1).unwrap();
        assert_eq!(inv.coeffs(), &[int(1), int(0), int(-1), int(0), int(1)]);
        assert_eq!(s.pow(0).unwrap(), Series::one(4));
    }

    #[test]
    fn non_invertible_negative_power() {
        let s = rs(&[int(0), int(1)], 3);
        assert!(matches!(s.pow(-1), Err(Error::NonInvertibleSeries)));
    }

    #[test]
    fn exp_log_round_trip() {
        let s = rs(&[int(0), int(0), rat(1, 24)], 6);
        assert_eq!(s.exp().unwrap().log().unwrap().coeffs(), s.coeffs());
        assert_eq!(Series::<Rational>::zero(4).exp().unwrap().coeffs(), Series::<Rational>::one(4).coeffs());
        assert!(Series::<Rational>::one(2).exp().is_err());
        assert!(Series::<Rational>::zero(2).log().is_err());
    }

    #[test]
    fn log_of_inverse_sin_kernel_starts_with_one_24th() {
        let s: Series<Rational> = series_sinc(SincKind::Sin, 6);
        let l = s.inverse().unwrap().log().unwrap();
        assert_eq!(l.coeff(2), rat(1, 24));
    }

    #[test]
    fn mixed_orders_use_minimum() {
        let a = Series::<Rational>::one(6);
        let b = Series::<Rational>::one(2);
        assert_eq!(a.mul(&b).order(), 2);
        assert_eq!(a.add(&b).order(), 2);
    }
}
