//! Dense univariate polynomials over an exact field.

use std::fmt;

use super::field::{Field, RealField};
use crate::error::{Error, Result};

/// Coefficients in ascending degree; never has a zero leading coefficient.
#[derive(Clone, PartialEq)]
pub struct Poly<F: Field> {
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Poly {
            coeffs: vec![F::zero(), F::one()],
        }
    }

    /// `x^k - c`.
    pub fn binomial(k: usize, c: F) -> Self {
        let mut coeffs = vec![F::zero(); k + 1];
        coeffs[0] = c.neg();
        coeffs[k] = coeffs[k].add(&F::one());
        Self::new(coeffs)
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| F::from_i64(c)).collect())
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let zero = F::zero();
        Self::new(
            (0..n)
                .map(|i| {
                    self.coeffs
                        .get(i)
                        .unwrap_or(&zero)
                        .add(o.coeffs.get(i).unwrap_or(&zero))
                })
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, c| acc.mul(x).add(c))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul(&F::from_i64(i as i64)))
                .collect(),
        )
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => self.scale(&l.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Quotient and remainder; errors on division by the zero polynomial.
    pub fn divrem(&self, d: &Self) -> Result<(Self, Self)> {
        let dl = d.leading().ok_or(Error::DivisionByZero)?;
        let dinv = dl.inv().ok_or(Error::DivisionByZero)?;
        let dd = d.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![F::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = rem[i + dd].mul(&dinv);
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].sub(&c.mul(dc));
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &Self) -> Result<Self> {
        if self.is_zero() && o.is_zero() {
            return Err(Error::ZeroGcd);
        }
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b)?;
            a = b;
            b = r.monic();
        }
        Ok(a.monic())
    }

    /// `p / gcd(p, p')`, monic.
    pub fn squarefree_part(&self) -> Result<Self> {
        if self.degree().unwrap_or(0) == 0 {
            return Ok(self.monic());
        }
        let g = self.gcd(&self.derivative())?;
        Ok(self.divrem(&g)?.0.monic())
    }

    pub fn is_squarefree(&self) -> Result<bool> {
        if self.degree().unwrap_or(0) == 0 {
            return Ok(true);
        }
        Ok(self.gcd(&self.derivative())?.degree() == Some(0))
    }
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("({c:?})"),
                1 => format!("({c:?})x"),
                _ => format!("({c:?})x^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// An interval endpoint for root counting.
#[derive(Debug, Clone, PartialEq)]
pub enum Bound<F> {
    NegInf,
    PosInf,
    Closed(F),
    Open(F),
}

fn sign_variations(signs: &[i8]) -> usize {
    let nz: Vec<i8> = signs.iter().copied().filter(|&s| s != 0).collect();
    nz.windows(2).filter(|w| w[0] != w[1]).count()
}

impl<F: RealField> Poly<F> {
    fn sturm_sequence(&self) -> Result<Vec<Self>> {
        let mut seq = vec![self.clone(), self.derivative()];
        while !seq.last().unwrap().is_zero() {
            let n = seq.len();
            let (_, r) = seq[n - 2].divrem(&seq[n - 1])?;
            seq.push(r.neg());
        }
        seq.pop();
        Ok(seq)
    }

    fn signs_at(seq: &[Self], at: &Bound<F>) -> Result<Vec<i8>> {
        seq.iter()
            .map(|p| {
                let lead = p.leading().expect("nonzero sturm term").sign()?;
                match at {
                    Bound::PosInf => Ok(lead),
                    Bound::NegInf => Ok(if p.degree().unwrap() % 2 == 0 {
                        lead
                    } else {
                        -lead
                    }),
                    Bound::Closed(x) | Bound::Open(x) => p.eval(x).sign(),
                }
            })
            .collect()
    }

    /// Number of distinct real roots of a squarefree polynomial in the interval.
    pub fn sturm_count(&self, lo: &Bound<F>, hi: &Bound<F>) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::Precondition(
                "sturm count of the zero polynomial".into(),
            ));
        }
        if !self.is_squarefree()? {
            return Err(Error::NotSquarefree);
        }
        if self.degree() == Some(0) {
            return Ok(0);
        }
        let seq = self.sturm_sequence()?;
        let va = sign_variations(&Self::signs_at(&seq, lo)?);
        let vb = sign_variations(&Self::signs_at(&seq, hi)?);
        if va < vb {
            return Ok(0);
        }
        // va - vb counts roots in (lo, hi].
        let mut count = va - vb;
        let root_at = |b: &Bound<F>| -> Result<bool> {
            Ok(match b {
                Bound::Closed(x) | Bound::Open(x) => self.eval(x).is_zero(),
                _ => false,
            })
        };
        if matches!(hi, Bound::Open(_)) && root_at(hi)? {
            count -= 1;
        }
        if matches!(lo, Bound::Closed(_)) && root_at(lo)? {
            count += 1;
        }
        Ok(count)
    }
}
