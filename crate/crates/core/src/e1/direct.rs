//! The exhaustive eigenvalue-one scan.

use crate::error::Result;
use crate::exact::has_algebraic_eigenvalue;
use crate::reps::MatrixRep;

use super::intertwiner::IntertwinerData;

/// Outcome of scanning all of `G` for `g` with `rho(g) n_sign` having eigenvalue one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleScan {
    pub witness: Option<usize>,
    pub scanned: usize,
}

impl TripleScan {
    pub fn holds(&self) -> bool {
        self.witness.is_some()
    }
}

/// Scan the elements of `G` in index order.
pub fn check_triple(rep: &MatrixRep, it: &IntertwinerData, sign: i8) -> Result<TripleScan> {
    let target = it.target(sign);
    let n = rep.group().order();
    for g in 0..n {
        let a = rep.image(g).mul(&it.m)?;
        if has_algebraic_eigenvalue(&a, &target)? {
            return Ok(TripleScan {
                witness: Some(g),
                scanned: g + 1,
            });
        }
    }
    Ok(TripleScan {
        witness: None,
        scanned: n,
    })
}

/// Re-check a single candidate witness.
pub fn is_witness(rep: &MatrixRep, it: &IntertwinerData, sign: i8, g: usize) -> Result<bool> {
    has_algebraic_eigenvalue(&rep.image(g).mul(&it.m)?, &it.target(sign))
}
