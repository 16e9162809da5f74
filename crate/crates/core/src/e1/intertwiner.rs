//! Intertwiners `m` with `rho(nu(g)) m = m rho(g)` and their Schur scaling.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exact::{Field, Matrix, RadicalReal, RealCyclo};
use crate::groups::Automorphism;
use crate::reps::MatrixRep;

#[derive(Debug, Clone)]
pub struct IntertwinerData {
    pub nu: Automorphism,
    /// Smallest `k > 0` with `m^k` scalar.
    pub k: usize,
    pub m: Matrix<RealCyclo>,
    /// `m^k = lambda * id`.
    pub lambda: RealCyclo,
    /// `|lambda|^(1/k)`.
    pub mu0: RadicalReal,
}

impl IntertwinerData {
    /// The target eigenvalue of `rho(g) m` that makes `rho(g) n_sign` have
    /// eigenvalue one, where `n_sign = sign |lambda|^(-1/k) m`.
    pub fn target(&self, sign: i8) -> RadicalReal {
        self.mu0.with_sign(sign)
    }

    /// The two finite-order elements inducing `nu`, as sign tags.
    pub fn finite_order_candidates(&self) -> [i8; 2] {
        [1, -1]
    }
}

/// Whether `chi` (values on classes) is fixed by `nu`.
pub fn fixes_character(rep: &MatrixRep, nu: &Automorphism, chi: &[crate::CycloElement]) -> bool {
    let g = rep.group();
    g.conjugacy_classes()
        .iter()
        .enumerate()
        .all(|(c, cl)| chi[g.class_of(nu.apply(cl.representative))] == chi[c])
}

pub fn solve_intertwiner(
    rep: &MatrixRep,
    nu: &Automorphism,
    chi: &[crate::CycloElement],
    seed: u64,
) -> Result<IntertwinerData> {
    if !fixes_character(rep, nu, chi) {
        return Err(Error::Precondition(
            "automorphism does not fix the character".into(),
        ));
    }
    let g = rep.group();
    let d = rep.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = None;
    for attempt in 0..8 {
        let x: Matrix<RealCyclo> = if nu.is_identity() && attempt == 0 {
            Matrix::identity(d)
        } else {
            Matrix::from_fn(d, d, |_, _| RealCyclo::from_int(rng.gen_range(-3..=3)))
        };
        let mut acc = Matrix::zeros(d, d);
        for h in 0..g.order() {
            let term = rep.image(nu.apply(h)).mul(&x)?.mul(rep.image(g.inv(h)))?;
            acc = acc.add(&term)?;
        }
        if !acc.is_zero() {
            m = Some(acc);
            break;
        }
    }
    let m =
        m.ok_or_else(|| Error::Invariant("averaging produced only zero intertwiners".into()))?;
    // Normalise so the first nonzero entry is one.
    let lead = m
        .entries()
        .iter()
        .find(|x| !x.is_zero())
        .cloned()
        .expect("nonzero");
    let m = m.scale(&lead.inv().expect("nonzero"));
    for &s in &g.generator_indices() {
        if rep.image(nu.apply(s)).mul(&m)? != m.mul(rep.image(s))? {
            return Err(Error::Invariant(
                "intertwining relation fails on a generator".into(),
            ));
        }
    }
    let bound = nu.order().max(1);
    let mut p = m.clone();
    for k in 1..=bound {
        if let Some(lambda) = p.as_scalar() {
            if lambda.is_zero() {
                return Err(Error::Invariant("intertwiner is nilpotent".into()));
            }
            let mu0 = RadicalReal::new(lambda.abs()?, k as u32, 1)?;
            return Ok(IntertwinerData {
                nu: nu.clone(),
                k,
                m,
                lambda,
                mu0,
            });
        }
        p = p.mul(&m)?;
    }
    Err(Error::Invariant(format!(
        "no power of the intertwiner up to {bound} is scalar"
    )))
}
