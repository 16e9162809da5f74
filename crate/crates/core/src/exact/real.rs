use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::approx::{enclose, sign_of};
use super::cyclo::{rational_to_f64, CycloElement, Rational};
use super::field::{Field, RealField};
use crate::error::{Error, Result};

/// A cyclotomic number fixed by complex conjugation, viewed as a real number
/// through `zeta_n -> exp(2 pi i / n)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RealCyclo(CycloElement);

impl RealCyclo {
    pub fn new(x: CycloElement) -> Result<Self> {
        if x.is_real() {
            Ok(RealCyclo(x))
        } else {
            Err(Error::NotReal)
        }
    }

    pub fn value(&self) -> &CycloElement {
        &self.0
    }

    pub fn into_inner(self) -> CycloElement {
        self.0
    }

    pub fn from_int(n: i64) -> Self {
        RealCyclo(CycloElement::from_int(n))
    }

    pub fn abs(&self) -> Result<Self> {
        Ok(if self.sign()? < 0 {
            Field::neg(self)
        } else {
            self.clone()
        })
    }

    /// Correctly rounded up to a few ulps, even under heavy cancellation.
    pub fn to_f64(&self) -> f64 {
        if let Some(q) = self.0.to_rational() {
            return rational_to_f64(&q);
        }
        let mut bits = 64;
        loop {
            let (lo, hi) = enclose(&self.0, bits).expect("real by construction");
            let mid = (&lo + &hi) / BigRational::from_integer(2.into());
            let scaled = (&hi - &lo) * BigRational::from_integer(BigInt::one() << 56u32);
            if scaled <= mid.abs() || bits >= 4096 {
                return rational_to_f64(&mid);
            }
            bits *= 2;
        }
    }
}

impl fmt::Debug for RealCyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for RealCyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Field for RealCyclo {
    fn zero() -> Self {
        RealCyclo(CycloElement::zero())
    }
    fn one() -> Self {
        RealCyclo(CycloElement::one())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        RealCyclo(self.0.add(&other.0))
    }
    fn sub(&self, other: &Self) -> Self {
        RealCyclo(self.0.sub(&other.0))
    }
    fn mul(&self, other: &Self) -> Self {
        RealCyclo(self.0.mul(&other.0))
    }
    fn neg(&self) -> Self {
        RealCyclo(self.0.neg())
    }
    fn inv(&self) -> Option<Self> {
        self.0.inv().map(RealCyclo)
    }
    fn from_rational(q: &Rational) -> Self {
        RealCyclo(CycloElement::from_rational(q.clone()))
    }
}

impl RealField for RealCyclo {
    fn sign(&self) -> Result<i8> {
        sign_of(&self.0)
    }
}

impl Serialize for RealCyclo {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RealCyclo {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let x = CycloElement::deserialize(deserializer)?;
        RealCyclo::new(x).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_real() {
        assert_eq!(
            RealCyclo::new(CycloElement::root_of_unity(3, 1)),
            Err(Error::NotReal)
        );
        let golden = CycloElement::root_of_unity(5, 1).add(&CycloElement::root_of_unity(5, 4));
        let g = RealCyclo::new(golden).unwrap();
        assert_eq!(g.sign().unwrap(), 1);
        assert_eq!(g.neg().abs().unwrap(), g);
    }
}
