//! Rigorous real enclosures of cyclotomic numbers.
//!
//! Values are enclosed in fixed-point intervals `[lo, hi] / 2^bits` with
//! outward rounding at every step, so the true value always lies inside.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::cyclo::CycloElement;
use crate::error::{Error, Result};

/// A closed interval `[lo, hi] * 2^-bits`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: BigInt,
    pub hi: BigInt,
    pub bits: u32,
}

fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_floor(b)
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    -((-a).div_floor(b))
}

impl Interval {
    pub fn point(v: BigInt, bits: u32) -> Self {
        Interval {
            lo: v.clone(),
            hi: v,
            bits,
        }
    }

    pub fn from_rational(q: &BigRational, bits: u32) -> Self {
        let num = q.numer() << bits;
        Interval {
            lo: floor_div(&num, q.denom()),
            hi: ceil_div(&num, q.denom()),
            bits,
        }
    }

    fn add(&self, o: &Self) -> Self {
        Interval {
            lo: &self.lo + &o.lo,
            hi: &self.hi + &o.hi,
            bits: self.bits,
        }
    }

    fn sub(&self, o: &Self) -> Self {
        Interval {
            lo: &self.lo - &o.hi,
            hi: &self.hi - &o.lo,
            bits: self.bits,
        }
    }

    fn neg(&self) -> Self {
        Interval {
            lo: -&self.hi,
            hi: -&self.lo,
            bits: self.bits,
        }
    }

    fn mul(&self, o: &Self) -> Self {
        let scale = BigInt::one() << self.bits;
        let cands = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let min = cands.iter().min().unwrap();
        let max = cands.iter().max().unwrap();
        Interval {
            lo: floor_div(min, &scale),
            hi: ceil_div(max, &scale),
            bits: self.bits,
        }
    }

    fn div_int(&self, k: &BigInt) -> Self {
        debug_assert!(k.is_positive());
        Interval {
            lo: floor_div(&self.lo, k),
            hi: ceil_div(&self.hi, k),
            bits: self.bits,
        }
    }

    /// Widen by `ulps` units in the last place on both sides.
    fn widen(&self, ulps: i64) -> Self {
        Interval {
            lo: &self.lo - ulps,
            hi: &self.hi + ulps,
            bits: self.bits,
        }
    }

    pub fn lower(&self) -> BigRational {
        BigRational::new(self.lo.clone(), BigInt::one() << self.bits)
    }

    pub fn upper(&self) -> BigRational {
        BigRational::new(self.hi.clone(), BigInt::one() << self.bits)
    }

    /// Sign if the interval excludes zero.
    pub fn sign(&self) -> Option<i8> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else {
            None
        }
    }
}

/// `arctan(1/m)` by its alternating series with a tail bound.
fn arctan_inv(m: u32, bits: u32) -> Interval {
    let one = Interval::point(BigInt::one() << bits, bits);
    let m = BigInt::from(m);
    let m2 = &m * &m;
    let mut power = one.div_int(&m);
    let mut sum = Interval::point(BigInt::zero(), bits);
    let mut k: u64 = 0;
    loop {
        let term = power.div_int(&BigInt::from(2 * k + 1));
        if term.hi <= BigInt::one() {
            // Remainder of an alternating decreasing series is below this term.
            return sum.widen(1);
        }
        sum = if k.is_multiple_of(2) {
            sum.add(&term)
        } else {
            sum.sub(&term)
        };
        power = power.div_int(&m2);
        k += 1;
    }
}

fn pi(bits: u32) -> Interval {
    let a = arctan_inv(5, bits);
    let b = arctan_inv(239, bits);
    let sixteen = Interval::point(BigInt::from(16) << bits, bits);
    let four = Interval::point(BigInt::from(4) << bits, bits);
    sixteen.mul(&a).sub(&four.mul(&b))
}

/// `cos(t)` for `t` in `[0, 2]` via the alternating Taylor series.
fn cos_small(t: &Interval) -> Interval {
    let bits = t.bits;
    let t2 = t.mul(t);
    let mut term = Interval::point(BigInt::one() << bits, bits);
    let mut sum = term.clone();
    let mut k: u64 = 1;
    loop {
        term = term.mul(&t2).div_int(&BigInt::from((2 * k - 1) * (2 * k)));
        if term.hi <= BigInt::one() {
            return sum.widen(1);
        }
        sum = if k % 2 == 1 {
            sum.sub(&term)
        } else {
            sum.add(&term)
        };
        k += 1;
    }
}

/// Enclosure of `cos(2 pi e / n)`.
fn cos_root(e: u32, n: u32, bits: u32, pi_iv: &Interval) -> Interval {
    // Reduce the angle fraction r = e/n into [0, 1/4] using exact symmetries.
    let mut num = e as u64 % n as u64;
    let den = n as u64;
    if 2 * num > den {
        num = den - num;
    }
    // Now r in [0, 1/2]; cos(2 pi r) = -cos(2 pi (1/2 - r)) for r > 1/4.
    let (num, den, negate) = if 4 * num > den {
        (den - 2 * num, 2 * den, true)
    } else {
        (num, den, false)
    };
    if num == 0 {
        let one = Interval::point(BigInt::one() << bits, bits);
        return if negate { one.neg() } else { one };
    }
    // t = 2 pi num / den in [0, pi/2]
    let t = pi_iv
        .mul(&Interval::point(BigInt::from(2 * num) << bits, bits))
        .div_int(&BigInt::from(den));
    let c = cos_small(&t);
    if negate {
        c.neg()
    } else {
        c
    }
}

/// Enclosure of the real part of `x` under `zeta_n -> exp(2 pi i / n)`,
/// computed with `bits` fractional bits (the width grows with the number of terms).
pub fn enclose_real(x: &CycloElement, bits: u32) -> Interval {
    let work = bits + 16;
    let n = x.conductor();
    let pi_iv = pi(work);
    let mut sum = Interval::point(BigInt::zero(), work);
    for (e, c) in x.coefficients() {
        let cv = cos_root(*e, n, work, &pi_iv);
        let ci = Interval::from_rational(c, work);
        sum = sum.add(&ci.mul(&cv));
    }
    sum
}

/// Sign of a conjugation-fixed cyclotomic number under the standard embedding.
pub fn sign_of(x: &CycloElement) -> Result<i8> {
    if x.is_zero() {
        return Ok(0);
    }
    if let Some(q) = x.to_rational() {
        return Ok(if q.is_positive() { 1 } else { -1 });
    }
    if !x.is_real() {
        return Err(Error::NotReal);
    }
    let mut bits = 64;
    loop {
        if let Some(s) = enclose_real(x, bits).sign() {
            return Ok(s);
        }
        bits *= 2;
    }
}

/// A rational enclosure `[lo, hi]` of width at most `2^-bits` for a real cyclotomic number.
pub fn enclose(x: &CycloElement, bits: u32) -> Result<(BigRational, BigRational)> {
    if !x.is_real() {
        return Err(Error::NotReal);
    }
    if let Some(q) = x.to_rational() {
        return Ok((q.clone(), q));
    }
    let target = BigRational::new(BigInt::one(), BigInt::one() << bits);
    let mut work = bits + 8;
    loop {
        let iv = enclose_real(x, work);
        let (lo, hi) = (iv.lower(), iv.upper());
        if &hi - &lo <= target {
            return Ok((lo, hi));
        }
        work *= 2;
    }
}
