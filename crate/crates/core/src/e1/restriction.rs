//! Lifting eigenvalue one from an invariant homogeneous component of a
//! `nu`-invariant subgroup.
//!
//! If `W` is a homogeneous component of `Res_H V` with `rho(g) m W = W`, then
//! for `h` in `H` every eigenvector of `rho(h) rho(g) n` on `W` is one on `V`.

use std::collections::HashSet;

use serde_json::json;

use crate::characters::{restrict, CharacterTable};
use crate::error::{Error, Result};
use crate::exact::{has_algebraic_eigenvalue, Matrix, RealCyclo};
use crate::groups::ExtendedGroup;
use crate::reps::MatrixRep;

use super::intertwiner::IntertwinerData;
use super::verdict::{Certificate, Method};

#[derive(Debug, Clone)]
pub struct RestrictionOutcome {
    /// Element `h g` of `G` such that `rho(hg) n` has eigenvalue one.
    pub witness: usize,
    pub certificate: Certificate,
}

/// Row-reduced basis of the column space of `e`, with pivots.
fn column_space(e: &Matrix<RealCyclo>) -> (Vec<Vec<RealCyclo>>, Vec<usize>) {
    let (r, pivots) = e.transpose().rref();
    let rows = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
    (rows, pivots)
}

/// Matrix of `x` on the invariant subspace spanned by `rows`.
fn restricted(
    x: &Matrix<RealCyclo>,
    rows: &[Vec<RealCyclo>],
    pivots: &[usize],
) -> Result<Matrix<RealCyclo>> {
    let images = rows
        .iter()
        .map(|b| x.mul_vec(b))
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_fn(rows.len(), rows.len(), |j, i| {
        images[i][pivots[j]].clone()
    }))
}

/// Try one `nu`-invariant subgroup `h` (sorted element indices of `rep.group()`).
pub fn restriction_strategy(
    table: &CharacterTable,
    chi: usize,
    rep: &MatrixRep,
    it: &IntertwinerData,
    eg: &ExtendedGroup,
    h: &[usize],
    sign: i8,
) -> Result<Option<RestrictionOutcome>> {
    let g = rep.group();
    let mut image: Vec<usize> = h.iter().map(|&x| it.nu.apply(x)).collect();
    image.sort_unstable();
    if image != h {
        return Err(Error::Precondition(
            "subgroup is not invariant under nu".into(),
        ));
    }
    let sub = std::sync::Arc::new(g.subgroup(h)?);
    let th = CharacterTable::compute(sub.clone())?;
    let res = restrict(table, table.character(chi), &th)?;
    let target = it.target(sign);
    for (pi, psi) in th.irr().iter().enumerate() {
        let dim = res.multiplicities[pi] * th.degree(pi);
        if dim % 2 == 0 || !th.is_real(pi) {
            continue;
        }
        // projection onto the psi-component (up to scale)
        let mut e = Matrix::zeros(rep.dim(), rep.dim());
        for &x in h {
            let local = sub.index_of(g.element(x)).expect("element of H");
            let c = th.value_at(psi, sub.inv(local));
            if !c.is_zero() {
                e = e.add(&rep.image(x).scale(&RealCyclo::new(c)?))?;
            }
        }
        let (rows, pivots) = column_space(&e);
        // W is rho(g) m-stable iff psi is fixed by alpha_g restricted to H.
        let mut covered: HashSet<usize> = HashSet::new();
        for x in 0..g.order() {
            if covered.contains(&x) {
                continue;
            }
            let alpha = eg.coset_element(x);
            let stable = th
                .group()
                .conjugacy_classes()
                .iter()
                .enumerate()
                .all(|(c, cl)| {
                    let y = g
                        .index_of(sub.element(cl.representative))
                        .expect("element of G");
                    let z = sub
                        .index_of(g.element(alpha.apply(y)))
                        .expect("H is invariant");
                    th.value_at(psi, z) == psi[c]
                });
            if !stable {
                continue;
            }
            for &y in h {
                covered.insert(g.mul(y, x));
            }
            let b = restricted(&rep.image(x).mul(&it.m)?, &rows, &pivots)?;
            for &y in h {
                let m = restricted(rep.image(y), &rows, &pivots)?.mul(&b)?;
                if has_algebraic_eigenvalue(&m, &target)? {
                    let w = g.mul(y, x);
                    return Ok(Some(RestrictionOutcome {
                        witness: w,
                        certificate: Certificate::new(
                            Method::RestrictionChain,
                            json!({
                                "chain": [g.order(), h.len()],
                                "component_dim": rows.len(),
                                "psi_degree": th.degree(pi),
                                "g": g.word_string(x),
                                "witness": g.word_string(w),
                            }),
                        ),
                    }));
                }
            }
        }
    }
    Ok(None)
}
