//! Explicit matrix representations over real cyclotomic fields.

use std::collections::{HashSet, VecDeque};
use std::sync::Arc;

use log::debug;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::characters::CharacterTable;
use crate::error::{Error, Result};
use crate::exact::{CycloElement, Field, Matrix, RealCyclo};
use crate::groups::PermGroup;

/// Groups larger than this are refused by [`build_irreducible_rep`].
pub const DEFAULT_REP_BOUND: usize = 5000;

#[derive(Debug, Clone)]
pub struct MatrixRep {
    group: Arc<PermGroup>,
    gen_matrices: Vec<Matrix<RealCyclo>>,
    images: Vec<Matrix<RealCyclo>>,
    dim: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct RepCertificate {
    pub character_checked: bool,
    pub homomorphism_checked: bool,
    pub irreducibility_checked: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

impl RepCertificate {
    pub fn is_valid(&self) -> bool {
        self.character_checked && self.homomorphism_checked && self.irreducibility_checked
    }
}

impl MatrixRep {
    /// Extend generator matrices (one per group generator) to all elements by
    /// walking the Cayley graph. No relation is checked here.
    pub fn from_generators(
        group: Arc<PermGroup>,
        gen_matrices: Vec<Matrix<RealCyclo>>,
    ) -> Result<Self> {
        let gens = group.generator_indices();
        if gens.len() != gen_matrices.len() {
            return Err(Error::Dimension("one matrix per generator expected".into()));
        }
        let dim = gen_matrices.first().map_or(1, |m| m.rows());
        if gen_matrices
            .iter()
            .any(|m| m.rows() != dim || m.cols() != dim)
        {
            return Err(Error::Dimension(
                "generator matrices must be square of equal size".into(),
            ));
        }
        let n = group.order();
        let mut images: Vec<Option<Matrix<RealCyclo>>> = vec![None; n];
        images[0] = Some(Matrix::identity(dim));
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (s, m) in gens.iter().zip(&gen_matrices) {
                let y = group.mul(x, *s);
                if images[y].is_none() {
                    images[y] = Some(images[x].as_ref().unwrap().mul(m)?);
                    queue.push_back(y);
                }
            }
        }
        let images = images
            .into_iter()
            .map(|m| m.expect("generators span the group"))
            .collect();
        Ok(MatrixRep {
            group,
            gen_matrices,
            images,
            dim,
        })
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gen_matrices(&self) -> &[Matrix<RealCyclo>] {
        &self.gen_matrices
    }

    /// `rho(g)` for an element index.
    pub fn image(&self, g: usize) -> &Matrix<RealCyclo> {
        &self.images[g]
    }

    /// Smallest `n` such that all entries lie in `Q(zeta_n)`.
    pub fn field_conductor(&self) -> u32 {
        self.gen_matrices
            .iter()
            .flat_map(|m| m.entries())
            .fold(1u32, |acc, x| acc.lcm(&x.value().conductor()))
    }
}

/// `e_chi e_psi` in the group algebra, up to a rational scalar.
fn idempotent_product(
    table: &CharacterTable,
    chi: &[CycloElement],
    h: &[usize],
    psi: &[i8],
) -> Vec<RealCyclo> {
    let g = table.group();
    let mut u = vec![RealCyclo::zero(); g.order()];
    for x in 0..g.order() {
        let c = table.value_at(chi, g.inv(x));
        if c.is_zero() {
            continue;
        }
        let c = RealCyclo::new(c).expect("real character");
        for (i, &y) in h.iter().enumerate() {
            let z = g.mul(x, y);
            u[z] = if psi[i] > 0 {
                u[z].add(&c)
            } else {
                u[z].sub(&c)
            };
        }
    }
    u
}

/// All homomorphisms `H -> {1, -1}` as value lists aligned with `h`.
fn sign_characters(g: &PermGroup, h: &[usize]) -> Vec<Vec<i8>> {
    let gens = g.generators_of(h);
    let pos = |x: usize| h.binary_search(&x).expect("element of H");
    let mut out = Vec::new();
    'outer: for mask in 0u32..(1 << gens.len().min(12)) {
        let mut val: Vec<i8> = vec![0; h.len()];
        val[pos(0)] = 1;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            let vx = val[pos(x)];
            for (b, &s) in gens.iter().enumerate() {
                let sign = if mask >> b & 1 == 1 { -1 } else { 1 };
                let y = g.mul(x, s);
                let slot = &mut val[pos(y)];
                if *slot == 0 {
                    *slot = vx * sign;
                    queue.push_back(y);
                } else if *slot != vx * sign {
                    continue 'outer;
                }
            }
        }
        out.push(val);
    }
    out
}

/// A subgroup `H` (sorted element indices) and a sign character `psi` of `H`
/// with `<Res chi, psi> = 1`.
fn find_multiplicity_one(
    table: &CharacterTable,
    chi: &[CycloElement],
) -> Option<(Vec<usize>, Vec<i8>)> {
    let g = table.group();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let reps: Vec<usize> = g
        .conjugacy_classes()
        .iter()
        .map(|c| c.representative)
        .collect();
    let cyclic = reps.iter().map(|&a| vec![a]);
    let pairs = reps
        .iter()
        .flat_map(|&a| (1..g.order()).map(move |b| vec![a, b]));
    for gens in cyclic.chain(pairs) {
        let h = g.closure(&gens);
        if !seen.insert(h.clone()) {
            continue;
        }
        for psi in sign_characters(g, &h) {
            let mut sum = CycloElement::zero();
            for (i, &x) in h.iter().enumerate() {
                let v = table.value_at(chi, x);
                sum = if psi[i] > 0 { sum.add(&v) } else { sum.sub(&v) };
            }
            if sum == CycloElement::from_int(h.len() as i64) {
                return Some((h, psi));
            }
        }
    }
    None
}

/// Build a representation affording the real irreducible character `chi`
/// (index into `table`). The result has been checked with [`verify_rep`].
pub fn build_irreducible_rep(table: &CharacterTable, chi: usize, seed: u64) -> Result<MatrixRep> {
    build_irreducible_rep_bounded(table, chi, seed, DEFAULT_REP_BOUND)
}

pub fn build_irreducible_rep_bounded(
    table: &CharacterTable,
    chi: usize,
    seed: u64,
    bound: usize,
) -> Result<MatrixRep> {
    let g = table.group().clone();
    if g.order() > bound {
        return Err(Error::OrderBound { bound });
    }
    if table.fs_indicator(chi) != 1 {
        return Err(Error::RepConstruction(format!(
            "character {chi} does not have indicator +1"
        )));
    }
    let values = table.character(chi);
    let d = table.degree(chi);
    let (h, psi) = find_multiplicity_one(table, values).ok_or_else(|| {
        Error::RepConstruction(format!(
            "no subgroup with a sign character of multiplicity one in character {chi}"
        ))
    })?;
    debug!("rep of degree {d}: using a subgroup of order {}", h.len());
    let u = idempotent_product(table, values, &h, &psi);

    // Spin u under left multiplication; keep the span in reduced echelon form.
    let gens = g.generator_indices();
    let mut basis: Vec<Vec<RealCyclo>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    let mut queue = VecDeque::from([u]);
    while let Some(v) = queue.pop_front() {
        let Some((w, p)) = reduce(&basis, &pivots, v) else {
            continue;
        };
        for row in basis.iter_mut() {
            let f = row[p].clone();
            if !f.is_zero() {
                for (a, b) in row.iter_mut().zip(&w) {
                    if !b.is_zero() {
                        *a = a.sub(&f.mul(b));
                    }
                }
            }
        }
        for &s in &gens {
            queue.push_back(left_mul(&g, s, &w));
        }
        basis.push(w);
        pivots.push(p);
        if basis.len() > d {
            break;
        }
    }
    if basis.len() != d {
        return Err(Error::RepConstruction(format!(
            "spun module has dimension {}, expected {d}",
            basis.len()
        )));
    }
    let gen_matrices = gens
        .iter()
        .map(|&s| {
            let images: Vec<Vec<RealCyclo>> = basis.iter().map(|b| left_mul(&g, s, b)).collect();
            Matrix::from_fn(d, d, |j, i| images[i][pivots[j]].clone())
        })
        .collect();
    let rep = MatrixRep::from_generators(g, gen_matrices)?;
    let cert = verify_rep(&rep, table, chi, seed);
    if !cert.is_valid() {
        return Err(Error::RepVerification(
            cert.failure.unwrap_or_else(|| "verification failed".into()),
        ));
    }
    Ok(rep)
}

fn left_mul(g: &PermGroup, s: usize, v: &[RealCyclo]) -> Vec<RealCyclo> {
    let mut out = vec![RealCyclo::zero(); v.len()];
    for (y, c) in v.iter().enumerate() {
        if !c.is_zero() {
            out[g.mul(s, y)] = c.clone();
        }
    }
    out
}

/// Reduce `v` against an echelon basis; if something is left, normalise it
/// and return it with its pivot.
fn reduce(
    basis: &[Vec<RealCyclo>],
    pivots: &[usize],
    mut v: Vec<RealCyclo>,
) -> Option<(Vec<RealCyclo>, usize)> {
    for (row, &p) in basis.iter().zip(pivots) {
        let f = v[p].clone();
        if f.is_zero() {
            continue;
        }
        for (a, b) in v.iter_mut().zip(row) {
            if !b.is_zero() {
                *a = a.sub(&f.mul(b));
            }
        }
    }
    let p = v.iter().position(|x| !x.is_zero())?;
    let inv = v[p].inv().expect("nonzero");
    for a in v.iter_mut() {
        if !a.is_zero() {
            *a = a.mul(&inv);
        }
    }
    Some((v, p))
}

/// Check the homomorphism property, character values and absolute irreducibility.
///
/// The homomorphism check compares `rho(x) rho(s)` with `rho(xs)` for every
/// element `x` and generator `s`, which is equivalent to checking the full
/// multiplication table; 100 seeded random pairs are checked on top.
pub fn verify_rep(
    rep: &MatrixRep,
    table: &CharacterTable,
    chi: usize,
    seed: u64,
) -> RepCertificate {
    let mut cert = RepCertificate::default();
    let g = rep.group();
    let gens = g.generator_indices();
    let check_pair = |a: usize, b: usize| -> bool {
        rep.image(a)
            .mul(rep.image(b))
            .map(|m| &m == rep.image(g.mul(a, b)))
            .unwrap_or(false)
    };
    let mut failure = None;
    'hom: for x in 0..g.order() {
        for &s in &gens {
            if !check_pair(x, s) {
                failure = Some(format!("rho({x}) rho({s}) != rho({x}*{s})"));
                break 'hom;
            }
        }
    }
    if failure.is_none() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..100 {
            let a = rng.gen_range(0..g.order());
            let b = rng.gen_range(0..g.order());
            if !check_pair(a, b) {
                failure = Some(format!("rho({a}) rho({b}) != rho({a}*{b})"));
                break;
            }
        }
    }
    cert.homomorphism_checked = failure.is_none();

    let values = table.character(chi);
    let traces_ok = g.conjugacy_classes().iter().enumerate().all(|(c, cl)| {
        rep.image(cl.representative)
            .trace()
            .map(|t| t.value() == &values[c])
            .unwrap_or(false)
    });
    cert.character_checked = traces_ok;
    if !traces_ok && failure.is_none() {
        failure = Some("traces do not match the character".into());
    }

    cert.irreducibility_checked = endomorphism_dimension(rep) == 1;
    if !cert.irreducibility_checked && failure.is_none() {
        failure = Some("endomorphism algebra is not one-dimensional".into());
    }
    cert.failure = failure;
    cert
}

/// Dimension of `{X : X rho(s) = rho(s) X for all generators s}`.
pub fn endomorphism_dimension(rep: &MatrixRep) -> usize {
    let d = rep.dim();
    let mut rows: Vec<Vec<RealCyclo>> = Vec::new();
    for m in rep.gen_matrices() {
        for i in 0..d {
            for j in 0..d {
                let mut row = vec![RealCyclo::zero(); d * d];
                for k in 0..d {
                    // (X m)[i][j] = sum_k X[i][k] m[k][j]
                    row[i * d + k] = row[i * d + k].add(m.get(k, j));
                    // (m X)[i][j] = sum_k m[i][k] X[k][j]
                    row[k * d + j] = row[k * d + j].sub(m.get(i, k));
                }
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return d * d;
    }
    let n = rows.len();
    let m = Matrix::from_vec(n, d * d, rows.into_iter().flatten().collect()).expect("shape");
    d * d - m.rank()
}

/// Exact determinant check: `det(rho(g))^{|g|} = 1` for every element.
pub fn determinants_are_roots_of_unity(rep: &MatrixRep) -> Result<bool> {
    let g = rep.group();
    for x in 0..g.order() {
        let det = rep.image(x).det()?;
        if det.pow(g.element_order(x) as u64) != RealCyclo::one() {
            return Ok(false);
        }
    }
    Ok(true)
}
