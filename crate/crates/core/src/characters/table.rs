//! Character tables by the Dixon–Schneider method.
//!
//! Central characters are found as common eigenvectors of the class matrices
//! over a prime field `F_p` with `p = 1 mod exp(G)`, then lifted to exact
//! cyclotomic values through eigenvalue multiplicities on cyclic subgroups.

use std::collections::BTreeMap;
use std::sync::Arc;

use log::debug;
use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::cyclo::{CycloElement, Rational};
use crate::exact::modp::{prime_one_mod, Fp};
use crate::groups::PermGroup;

/// Values of a class function, indexed like the group's conjugacy classes.
pub type ClassFunction = Vec<CycloElement>;

#[derive(Debug, Clone)]
pub struct CharacterTable {
    group: Arc<PermGroup>,
    irr: Vec<ClassFunction>,
    power_maps: BTreeMap<usize, Vec<usize>>,
    inverse_class: Vec<usize>,
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

fn primes_up_to(n: usize) -> Vec<usize> {
    (2..=n)
        .filter(|&q| (2..q).take_while(|d| d * d <= q).all(|d| q % d != 0))
        .collect()
}

/// A subspace of `F_p^k` given by row-reduced basis rows.
struct Space {
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Space {
    fn new(f: &Fp, mut rows: Vec<Vec<u64>>) -> Space {
        let pivots = f.rref(&mut rows);
        rows.truncate(pivots.len());
        Space { rows, pivots }
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Split into eigenspaces of the linear map `v -> a v` restricted here.
    fn split(self, f: &Fp, a: &[Vec<u64>]) -> Vec<Space> {
        let m = self.dim();
        let k = a.len();
        // images[i] = a * rows[i]
        let images: Vec<Vec<u64>> = self
            .rows
            .iter()
            .map(|b| {
                (0..k)
                    .map(|s| (0..k).fold(0, |acc, t| f.add(acc, f.mul(a[s][t], b[t]))))
                    .collect()
            })
            .collect();
        // x[j][i] = coordinate j of a * b_i
        let x: Vec<Vec<u64>> = (0..m)
            .map(|j| (0..m).map(|i| images[i][self.pivots[j]]).collect())
            .collect();
        let roots = f.roots(&f.charpoly(&x));
        if roots.len() <= 1 {
            return vec![self];
        }
        roots
            .into_iter()
            .map(|lambda| {
                let shifted: Vec<Vec<u64>> = (0..m)
                    .map(|j| {
                        (0..m)
                            .map(|i| {
                                if i == j {
                                    f.sub(x[j][i], lambda)
                                } else {
                                    x[j][i]
                                }
                            })
                            .collect()
                    })
                    .collect();
                let coords = f.nullspace(&shifted, m);
                let rows = coords
                    .iter()
                    .map(|u| {
                        (0..k)
                            .map(|t| {
                                (0..m).fold(0, |acc, i| f.add(acc, f.mul(u[i], self.rows[i][t])))
                            })
                            .collect()
                    })
                    .collect();
                Space::new(f, rows)
            })
            .collect()
    }
}

impl CharacterTable {
    /// Compute the full irreducible character table of `group`.
    pub fn compute(group: Arc<PermGroup>) -> Result<Self> {
        let irr = dixon_schneider(&group)?;
        let table = Self::assemble(group, irr);
        table.verify()?;
        Ok(table)
    }

    /// Build from precomputed rows (for example from a cache) and check them.
    pub fn from_rows(group: Arc<PermGroup>, irr: Vec<ClassFunction>) -> Result<Self> {
        let k = group.class_count();
        if irr.len() != k || irr.iter().any(|r| r.len() != k) {
            return Err(Error::TableVerification(
                "row or column count mismatch".into(),
            ));
        }
        let table = Self::assemble(group, irr);
        table.verify_spot()?;
        Ok(table)
    }

    fn assemble(group: Arc<PermGroup>, mut irr: Vec<ClassFunction>) -> Self {
        irr.sort_by(|a, b| {
            let trivial_a = a.iter().all(|v| *v == CycloElement::one());
            let trivial_b = b.iter().all(|v| *v == CycloElement::one());
            trivial_b
                .cmp(&trivial_a)
                .then_with(|| degree_of(a).cmp(&degree_of(b)))
                .then_with(|| a.cmp(b))
        });
        let classes = group.conjugacy_classes();
        let mut power_maps = BTreeMap::new();
        for q in primes_up_to(group.exponent().max(2)) {
            let map = classes
                .iter()
                .map(|c| group.class_of(group.pow(c.representative, q as i64)))
                .collect();
            power_maps.insert(q, map);
        }
        let inverse_class = classes
            .iter()
            .map(|c| group.class_of(group.inv(c.representative)))
            .collect();
        CharacterTable {
            group,
            irr,
            power_maps,
            inverse_class,
        }
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn irr(&self) -> &[ClassFunction] {
        &self.irr
    }

    pub fn character(&self, i: usize) -> &ClassFunction {
        &self.irr[i]
    }

    pub fn len(&self) -> usize {
        self.irr.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irr.is_empty()
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.group
            .conjugacy_classes()
            .iter()
            .map(|c| c.size)
            .collect()
    }

    pub fn power_map(&self, q: usize) -> Option<&[usize]> {
        self.power_maps.get(&q).map(|v| v.as_slice())
    }

    pub fn power_maps(&self) -> &BTreeMap<usize, Vec<usize>> {
        &self.power_maps
    }

    pub fn inverse_class(&self, c: usize) -> usize {
        self.inverse_class[c]
    }

    pub fn degree(&self, i: usize) -> usize {
        degree_of(&self.irr[i])
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.irr.len()).map(|i| self.degree(i)).collect()
    }

    /// Class of `g^2` for each class.
    fn square_map(&self) -> Vec<usize> {
        let g = &self.group;
        g.conjugacy_classes()
            .iter()
            .map(|c| g.class_of(g.mul(c.representative, c.representative)))
            .collect()
    }

    /// Exact row and column orthogonality and the degree-square sum.
    pub fn verify(&self) -> Result<()> {
        let order = self.group.order();
        let k = self.irr.len();
        let sizes = self.class_sizes();
        let deg_sum: usize = self.degrees().iter().map(|d| d * d).sum();
        if deg_sum != order {
            return Err(Error::TableVerification(format!(
                "sum of squared degrees is {deg_sum}, expected {order}"
            )));
        }
        let conj: Vec<Vec<CycloElement>> = self
            .irr
            .iter()
            .map(|r| r.iter().map(|v| v.conj()).collect())
            .collect();
        for i in 0..k {
            for j in i..k {
                let mut s = CycloElement::zero();
                for c in 0..k {
                    s = s.add(&self.irr[i][c].mul(&conj[j][c]).scale(&int(sizes[c])));
                }
                let expect = if i == j { order } else { 0 };
                if s != CycloElement::from_int(expect as i64) {
                    return Err(Error::TableVerification(format!(
                        "rows {i} and {j} are not orthogonal"
                    )));
                }
            }
        }
        for a in 0..k {
            for b in a..k {
                let mut s = CycloElement::zero();
                for row in 0..k {
                    s = s.add(&self.irr[row][a].mul(&conj[row][b]));
                }
                let expect = if a == b { order / sizes[a] } else { 0 };
                if s != CycloElement::from_int(expect as i64) {
                    return Err(Error::TableVerification(format!(
                        "columns {a} and {b} are not orthogonal"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Cheap consistency check: degree-square sum and the norm of every row.
    pub fn verify_spot(&self) -> Result<()> {
        let order = self.group.order();
        let deg_sum: usize = self.degrees().iter().map(|d| d * d).sum();
        if deg_sum != order {
            return Err(Error::TableVerification(
                "degree-square sum mismatch".into(),
            ));
        }
        for i in 0..self.irr.len() {
            if self.inner_product(&self.irr[i], &self.irr[i]) != CycloElement::one() {
                return Err(Error::TableVerification(format!(
                    "row {i} does not have norm 1"
                )));
            }
        }
        if self.irr.len() > 1
            && !self
                .inner_product(&self.irr[0], &self.irr[self.irr.len() - 1])
                .is_zero()
        {
            return Err(Error::TableVerification(
                "first and last rows not orthogonal".into(),
            ));
        }
        Ok(())
    }

    /// `(1/|G|) sum_C |C| phi(C) conj(psi(C))`.
    pub fn inner_product(&self, phi: &[CycloElement], psi: &[CycloElement]) -> CycloElement {
        let sizes = self.class_sizes();
        let mut s = CycloElement::zero();
        for c in 0..sizes.len() {
            s = s.add(&phi[c].mul(&psi[c].conj()).scale(&int(sizes[c])));
        }
        s.scale(&Rational::new(
            BigInt::from(1),
            BigInt::from(self.group.order()),
        ))
    }

    /// Frobenius–Schur indicator of the `i`-th irreducible character.
    pub fn fs_indicator(&self, i: usize) -> i8 {
        let sizes = self.class_sizes();
        let sq = self.square_map();
        let mut s = CycloElement::zero();
        for c in 0..sizes.len() {
            s = s.add(&self.irr[i][sq[c]].scale(&int(sizes[c])));
        }
        let v = s.scale(&Rational::new(
            BigInt::from(1),
            BigInt::from(self.group.order()),
        ));
        v.to_integer()
            .and_then(|n| i8::try_from(n).ok())
            .expect("indicator is -1, 0 or 1")
    }

    pub fn is_real(&self, i: usize) -> bool {
        self.irr[i].iter().all(|v| v.is_real())
    }

    pub fn is_trivial(&self, i: usize) -> bool {
        self.irr[i].iter().all(|v| *v == CycloElement::one())
    }

    /// Indices of the nontrivial real irreducible characters of odd degree.
    pub fn odd_real_nontrivial(&self) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for i in 0..self.irr.len() {
            if self.is_trivial(i) || self.degree(i).is_multiple_of(2) || !self.is_real(i) {
                continue;
            }
            let ind = self.fs_indicator(i);
            if ind != 1 {
                return Err(Error::Invariant(format!(
                    "real character {i} of odd degree has indicator {ind}"
                )));
            }
            out.push(i);
        }
        Ok(out)
    }

    /// Element indices of `ker chi`.
    pub fn kernel(&self, chi: &[CycloElement]) -> Vec<usize> {
        let d = &chi[0];
        let mut out: Vec<usize> = self
            .group
            .conjugacy_classes()
            .iter()
            .enumerate()
            .filter(|(c, _)| chi[*c] == *d)
            .flat_map(|(_, cl)| cl.members.iter().copied())
            .collect();
        out.sort_unstable();
        out
    }

    /// Value of a class function at an element index.
    pub fn value_at(&self, chi: &[CycloElement], element: usize) -> CycloElement {
        chi[self.group.class_of(element)].clone()
    }

    /// The character of the natural permutation action on points.
    pub fn permutation_character(&self) -> ClassFunction {
        self.group
            .conjugacy_classes()
            .iter()
            .map(|c| {
                let p = self.group.element(c.representative);
                let fixed = (0..p.degree() as u32).filter(|&x| p.apply(x) == x).count();
                CycloElement::from_int(fixed as i64)
            })
            .collect()
    }

    /// The regular character.
    pub fn regular_character(&self) -> ClassFunction {
        let mut v = vec![CycloElement::zero(); self.irr.len()];
        v[0] = CycloElement::from_int(self.group.order() as i64);
        v
    }
}

fn int(n: usize) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn degree_of(chi: &[CycloElement]) -> usize {
    chi[0]
        .to_integer()
        .and_then(|d| usize::try_from(d).ok())
        .expect("degree is a positive integer")
}

fn dixon_schneider(group: &PermGroup) -> Result<Vec<ClassFunction>> {
    let n = group.order();
    let classes = group.conjugacy_classes();
    let k = classes.len();
    if k == 1 {
        return Ok(vec![vec![CycloElement::one()]]);
    }
    let e = group.exponent() as u64;
    let max_class = classes.iter().map(|c| c.size).max().unwrap_or(1) as u64;
    let bound = 2 * max_class.max(isqrt(n as u64) + 1);
    let p = prime_one_mod(e, bound);
    let f = Fp::new(p);
    debug!("dixon-schneider: |G| = {n}, {k} classes, p = {p}");

    // a[r][s][t] = #{(x, y) in C_r x C_s : x y = g_t}
    let mut a = vec![vec![vec![0u64; k]; k]; k];
    for (r, cr) in classes.iter().enumerate() {
        for (t, ct) in classes.iter().enumerate() {
            let z = ct.representative;
            for &x in &cr.members {
                let s = group.class_of(group.mul(group.inv(x), z));
                a[r][s][t] += 1;
            }
        }
    }
    for ar in a.iter_mut() {
        for row in ar.iter_mut() {
            for v in row.iter_mut() {
                *v %= p;
            }
        }
    }

    // A fixed generic combination usually splits everything at once.
    let combo: Vec<Vec<u64>> = (0..k)
        .map(|s| {
            (0..k)
                .map(|t| {
                    (1..k).fold(0, |acc, r| {
                        let c = f.pow(r as u64 + 2, 3) % p;
                        f.add(acc, f.mul(c, a[r][s][t]))
                    })
                })
                .collect()
        })
        .collect();
    let identity: Vec<Vec<u64>> = (0..k)
        .map(|i| (0..k).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut spaces = vec![Space::new(&f, identity)];
    let mut matrices: Vec<&Vec<Vec<u64>>> = vec![&combo];
    matrices.extend(a.iter().skip(1));
    for mat in matrices {
        if spaces.iter().all(|s| s.dim() == 1) {
            break;
        }
        let mut next = Vec::new();
        for s in spaces {
            if s.dim() == 1 {
                next.push(s);
            } else {
                next.extend(s.split(&f, mat));
            }
        }
        spaces = next;
    }
    if spaces.len() != k || spaces.iter().any(|s| s.dim() != 1) {
        return Err(Error::TableVerification(
            "class matrices did not split into one-dimensional eigenspaces".into(),
        ));
    }

    let sizes: Vec<u64> = classes.iter().map(|c| c.size as u64).collect();
    let inv_class: Vec<usize> = classes
        .iter()
        .map(|c| group.class_of(group.inv(c.representative)))
        .collect();
    let z = f.pow(f.primitive_root(), (p - 1) / e);
    let mut irr = Vec::with_capacity(k);
    for s in spaces {
        let omega = &s.rows[0];
        if s.pivots[0] != 0 {
            return Err(Error::TableVerification(
                "central character vanishes at 1".into(),
            ));
        }
        let sum = (0..k).fold(0, |acc, r| {
            f.add(
                acc,
                f.mul(f.mul(omega[r], omega[inv_class[r]]), f.inv(sizes[r] % p)),
            )
        });
        let d2 = f.mul(n as u64 % p, f.inv(sum));
        let d = (1..=isqrt(n as u64))
            .find(|&d| d * d % p == d2)
            .ok_or_else(|| Error::TableVerification("no integral degree found".into()))?;
        let chi_mod: Vec<u64> = (0..k)
            .map(|r| f.mul(f.mul(d % p, omega[r]), f.inv(sizes[r] % p)))
            .collect();
        let mut row = Vec::with_capacity(k);
        for cl in classes.iter() {
            let g = cl.representative;
            let o = group.element_order(g) as u64;
            let zo = f.pow(z, e / o);
            let powers: Vec<u64> = (0..o)
                .map(|l| chi_mod[group.class_of(group.pow(g, l as i64))])
                .collect();
            let inv_o = f.inv(o % p);
            let mut terms = Vec::new();
            for j in 0..o {
                let zj = f.pow(zo, (o - j) % o);
                let mut acc = 0;
                let mut w = 1;
                for &v in &powers {
                    acc = f.add(acc, f.mul(v, w));
                    w = f.mul(w, zj);
                }
                let mult = f.mul(acc, inv_o);
                if mult > d {
                    return Err(Error::TableVerification(format!(
                        "eigenvalue multiplicity {mult} exceeds degree {d}"
                    )));
                }
                if mult > 0 {
                    terms.push((j as u32, int(mult as usize)));
                }
            }
            let value = CycloElement::from_terms(o as u32, terms);
            if value.is_zero() && o == 1 {
                return Err(Error::TableVerification("zero degree".into()));
            }
            row.push(value);
        }
        irr.push(row);
    }
    if irr.iter().any(|r| r[0].is_zero()) {
        return Err(Error::TableVerification("zero degree".into()));
    }
    Ok(irr)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::Perm;

    pub(crate) fn grp(degree: usize, gens: &[&str]) -> Arc<PermGroup> {
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
    fn small_tables() {
        let s3 = CharacterTable::compute(grp(3, &["(1,2)", "(1,2,3)"])).unwrap();
        assert_eq!(s3.degrees(), vec![1, 1, 2]);
        let c4 = CharacterTable::compute(grp(4, &["(1,2,3,4)"])).unwrap();
        assert_eq!(c4.degrees(), vec![1, 1, 1, 1]);
        assert!(c4.irr().iter().flatten().all(|v| v.conductor() <= 4));
        let q8 =
            CharacterTable::compute(grp(8, &["(1,2,4,7)(3,6,8,5)", "(1,3,4,8)(2,5,7,6)"])).unwrap();
        assert_eq!(q8.degrees(), vec![1, 1, 1, 1, 2]);
        assert_eq!(q8.fs_indicator(4), -1);
    }

    #[test]
    fn a5_odd_real_characters() {
        let a5 = CharacterTable::compute(grp(5, &["(1,2,3)", "(1,2,3,4,5)"])).unwrap();
        assert_eq!(a5.degrees(), vec![1, 3, 3, 4, 5]);
        let odd = a5.odd_real_nontrivial().unwrap();
        let degs: Vec<usize> = odd.iter().map(|&i| a5.degree(i)).collect();
        assert_eq!(degs, vec![3, 3, 5]);
    }

    #[test]
    fn indicators_and_products() {
        let c3 = CharacterTable::compute(grp(3, &["(1,2,3)"])).unwrap();
        assert_eq!(c3.fs_indicator(0), 1);
        assert_eq!(c3.fs_indicator(1), 0);
        let s3 = CharacterTable::compute(grp(3, &["(1,2)", "(1,2,3)"])).unwrap();
        let pc = s3.permutation_character();
        assert_eq!(s3.inner_product(&pc, s3.character(0)), CycloElement::one());
        let reg = s3.regular_character();
        assert_eq!(
            s3.inner_product(&reg, s3.character(2)),
            CycloElement::from_int(2)
        );
    }
}
