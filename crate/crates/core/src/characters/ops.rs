//! Restriction to subgroups and constituent searches.

use crate::error::{Error, Result};
use crate::exact::cyclo::CycloElement;

use super::table::{CharacterTable, ClassFunction};

#[derive(Debug, Clone)]
pub struct Restriction {
    /// Values on the classes of the subgroup.
    pub values: ClassFunction,
    /// Multiplicity of each irreducible character of the subgroup.
    pub multiplicities: Vec<usize>,
}

/// Restrict a class function of `big.group()` to the subgroup carried by `small`.
pub fn restrict(
    big: &CharacterTable,
    chi: &[CycloElement],
    small: &CharacterTable,
) -> Result<Restriction> {
    let g = big.group();
    let h = small.group();
    let values: ClassFunction = h
        .conjugacy_classes()
        .iter()
        .map(|c| {
            let p = h.element(c.representative);
            g.index_of(p).map(|i| big.value_at(chi, i)).ok_or_else(|| {
                Error::NotSubgroup("restriction target is not contained in the group".into())
            })
        })
        .collect::<Result<_>>()?;
    let multiplicities = small
        .irr()
        .iter()
        .map(|psi| {
            small
                .inner_product(&values, psi)
                .to_integer()
                .and_then(|m| usize::try_from(m).ok())
                .ok_or_else(|| Error::Invariant("restriction is not a character".into()))
        })
        .collect::<Result<_>>()?;
    Ok(Restriction {
        values,
        multiplicities,
    })
}

/// Find an irreducible `lambda` of `P` with `K <= ker lambda` occurring with odd
/// multiplicity in `Res chi`. In Borel mode `lambda` must be a linear
/// character of order at most 2. Returns `(index in table_p, multiplicity)`.
///
/// `k_elements` are element indices into `table_p.group()`.
pub fn parabolic_odd_constituent(
    table_g: &CharacterTable,
    chi: usize,
    table_p: &CharacterTable,
    k_elements: &[usize],
    borel: bool,
) -> Result<Option<(usize, usize)>> {
    let p = table_p.group();
    if !p.is_normal(k_elements) {
        return Err(Error::Precondition("K is not normal in P".into()));
    }
    if table_g.degree(chi).is_multiple_of(2) || !table_g.is_real(chi) {
        return Err(Error::Precondition("chi must be real of odd degree".into()));
    }
    let res = restrict(table_g, table_g.character(chi), table_p)?;
    let one = CycloElement::one();
    for (i, lambda) in table_p.irr().iter().enumerate() {
        let m = res.multiplicities[i];
        if m % 2 == 0 {
            continue;
        }
        if !k_elements
            .iter()
            .all(|&x| table_p.value_at(lambda, x) == lambda[0])
        {
            continue;
        }
        if borel && (table_p.degree(i) != 1 || lambda.iter().any(|v| v.mul(v) != one)) {
            continue;
        }
        return Ok(Some((i, m)));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{Perm, PermGroup};
    use std::sync::Arc;

    fn grp(degree: usize, gens: &[&str]) -> Arc<PermGroup> {
        Arc::new(
            PermGroup::generate(
                degree,
                gens.iter()
                    .map(|g| Perm::parse_cycles(g, Some(degree)).unwrap())
                    .collect(),
            )
            .unwrap(),
        )
    }

    #[test]
    fn restriction_s4_to_s3() {
        let s4 = grp(4, &["(1,2)", "(1,2,3,4)"]);
        let s3 = grp(4, &["(1,2)", "(1,2,3)"]);
        let t4 = CharacterTable::compute(s4).unwrap();
        let t3 = CharacterTable::compute(s3).unwrap();
        // standard 3-dim rep of S4 restricts to trivial + 2-dim
        let std = t4
            .irr()
            .iter()
            .position(|c| {
                c[0] == CycloElement::from_int(3)
                    && t4.inner_product(c, &t4.permutation_character()) == CycloElement::one()
            })
            .unwrap();
        let r = restrict(&t4, t4.character(std), &t3).unwrap();
        assert_eq!(r.multiplicities, vec![1, 0, 1]);
    }

    #[test]
    fn not_a_subgroup() {
        let s3 = grp(4, &["(1,2)", "(1,2,3)"]);
        let c4 = grp(4, &["(1,2,3,4)"]);
        let t3 = CharacterTable::compute(s3).unwrap();
        let t4 = CharacterTable::compute(c4).unwrap();
        assert!(restrict(&t3, t3.character(0), &t4).is_err());
    }
}
