use serde::{Deserialize, Serialize};

use super::field::{Field, RealField};
use super::matrix::Matrix;
use super::poly::{Bound, Poly};
use super::real::RealCyclo;
use crate::error::{Error, Result};

/// The real number `sign * base^(1/index)` with `base > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadicalReal {
    pub base: RealCyclo,
    pub index: u32,
    pub sign: i8,
}

impl RadicalReal {
    pub fn new(base: RealCyclo, index: u32, sign: i8) -> Result<Self> {
        if base.sign()? <= 0 {
            return Err(Error::NonPositiveBase);
        }
        if index == 0 || !(sign == 1 || sign == -1) {
            return Err(Error::Precondition(
                "radical needs index >= 1 and sign +-1".into(),
            ));
        }
        Ok(RadicalReal { base, index, sign })
    }

    pub fn one() -> Self {
        RadicalReal {
            base: RealCyclo::from_int(1),
            index: 1,
            sign: 1,
        }
    }

    pub fn with_sign(&self, sign: i8) -> Self {
        RadicalReal {
            sign,
            ..self.clone()
        }
    }

    /// `sign^index * base`, the constant term making `theta` a root of `x^index - c`.
    pub fn power_value(&self) -> RealCyclo {
        if self.sign < 0 && self.index % 2 == 1 {
            self.base.neg()
        } else {
            self.base.clone()
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.sign as f64 * self.base.to_f64().powf(1.0 / self.index as f64)
    }
}

/// Whether `theta` is an eigenvalue of the real square matrix `m`.
pub fn has_algebraic_eigenvalue(m: &Matrix<RealCyclo>, theta: &RadicalReal) -> Result<bool> {
    if theta.base.sign()? <= 0 {
        return Err(Error::NonPositiveBase);
    }
    let cp = m.charpoly()?;
    let target = Poly::binomial(theta.index as usize, theta.power_value());
    let g = cp.gcd(&target)?;
    if g.degree() == Some(0) {
        return Ok(false);
    }
    let h = g.squarefree_part()?;
    let zero = RealCyclo::zero();
    let count = if theta.index % 2 == 1 {
        h.sturm_count(&Bound::NegInf, &Bound::PosInf)?
    } else if theta.sign > 0 {
        h.sturm_count(&Bound::Open(zero), &Bound::PosInf)?
    } else {
        h.sturm_count(&Bound::NegInf, &Bound::Open(zero))?
    };
    Ok(count > 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[Vec<i64>]) -> Matrix<RealCyclo> {
        Matrix::from_ints(rows).unwrap()
    }

    #[test]
    fn identity_and_negation() {
        let one = RadicalReal::one();
        assert!(has_algebraic_eigenvalue(&Matrix::identity(3), &one).unwrap());
        let neg = Matrix::<RealCyclo>::identity(3).scale(&RealCyclo::from_int(-1));
        assert!(!has_algebraic_eigenvalue(&neg, &one).unwrap());
        assert!(has_algebraic_eigenvalue(&neg, &one.with_sign(-1)).unwrap());
    }

    #[test]
    fn square_root_two() {
        let m = mat(&[vec![0, 2], vec![1, 0]]);
        let r = RadicalReal::new(RealCyclo::from_int(2), 2, 1).unwrap();
        assert!(has_algebraic_eigenvalue(&m, &r).unwrap());
        assert!(has_algebraic_eigenvalue(&m, &r.with_sign(-1)).unwrap());
        let r3 = RadicalReal::new(RealCyclo::from_int(3), 2, 1).unwrap();
        assert!(!has_algebraic_eigenvalue(&m, &r3).unwrap());
    }

    #[test]
    fn sign_matters_for_even_index() {
        let m = mat(&[vec![2, 0], vec![0, 5]]);
        let r = RadicalReal::new(RealCyclo::from_int(4), 2, -1).unwrap();
        assert!(!has_algebraic_eigenvalue(&m, &r).unwrap());
        assert!(has_algebraic_eigenvalue(&m, &r.with_sign(1)).unwrap());
    }

    #[test]
    fn base_must_be_positive() {
        assert_eq!(
            RadicalReal::new(RealCyclo::from_int(-1), 1, 1),
            Err(Error::NonPositiveBase)
        );
    }
}
