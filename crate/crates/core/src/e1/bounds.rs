//! Concrete checkers and symbolic bound evaluators for Lie-type arguments.

use num_bigint::BigInt;
use num_traits::{One, Pow};
use serde::Serialize;

use crate::characters::CharacterTable;
use crate::error::{Error, Result};
use crate::exact::CycloElement;
use crate::groups::{Automorphism, PermGroup};

/// Whether `nu^2` fixes every `T`-orbit on the linear characters of `U`.
/// `u` and `t` are sorted element indices of `g`.
pub fn prop4_orbit_check(
    g: &PermGroup,
    u: &[usize],
    t: &[usize],
    nu: &Automorphism,
) -> Result<bool> {
    let image = |a: &Automorphism, s: &[usize]| {
        let mut v: Vec<usize> = s.iter().map(|&x| a.apply(x)).collect();
        v.sort_unstable();
        v
    };
    if image(nu, u) != u || image(nu, t) != t {
        return Err(Error::Precondition("nu must stabilise U and T".into()));
    }
    for &x in t {
        let mut v: Vec<usize> = u.iter().map(|&y| g.conjugate(y, x)).collect();
        v.sort_unstable();
        if v != u {
            return Err(Error::Precondition("T must normalise U".into()));
        }
    }
    if u.len() == 1 {
        return Ok(true);
    }
    let sub = std::sync::Arc::new(g.subgroup(u)?);
    let table = CharacterTable::compute(sub.clone())?;
    let local = |x: usize| sub.index_of(g.element(x)).expect("element of U");
    // linear characters as value lists over u
    let lin: Vec<Vec<CycloElement>> = (0..table.len())
        .filter(|&i| table.degree(i) == 1)
        .map(|i| {
            u.iter()
                .map(|&x| table.value_at(table.character(i), local(x)))
                .collect()
        })
        .collect();
    let pos = |x: usize| u.binary_search(&x).expect("element of U");
    let index_of = |vals: &Vec<CycloElement>| {
        lin.iter()
            .position(|l| l == vals)
            .expect("linear character")
    };
    // (a . lambda)(y) = lambda(a^-1(y))
    let act = |a: &Automorphism, l: usize| -> usize {
        let inv = a.inverse();
        let vals: Vec<CycloElement> = u
            .iter()
            .map(|&y| lin[l][pos(inv.apply(y))].clone())
            .collect();
        index_of(&vals)
    };
    let nu2 = nu.then(nu);
    let mut orbit_of = vec![usize::MAX; lin.len()];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for l in 0..lin.len() {
        if orbit_of[l] != usize::MAX {
            continue;
        }
        let mut orbit: Vec<usize> = t
            .iter()
            .map(|&x| act(&Automorphism::inner(g, x), l))
            .collect();
        orbit.sort_unstable();
        orbit.dedup();
        for &o in &orbit {
            orbit_of[o] = orbits.len();
        }
        orbits.push(orbit);
    }
    Ok(orbits.iter().all(|o| {
        let mut moved: Vec<usize> = o.iter().map(|&l| act(&nu2, l)).collect();
        moved.sort_unstable();
        &moved == o
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct G2Bound {
    pub f: u32,
    pub q: String,
    pub group_order: String,
    pub dim: String,
    /// `q^12`
    pub lhs: String,
    /// `(2f - 1)^2 q^7`
    pub rhs: String,
    pub passes: bool,
}

/// The degree bound for the Steinberg-like character of `G2(3^f)`, in squared form.
pub fn example4_g2_bound(f: u32) -> Result<G2Bound> {
    if f == 0 {
        return Err(Error::Precondition("f must be positive".into()));
    }
    let q = BigInt::from(3).pow(f);
    let q2 = q.clone().pow(2u32);
    let q6 = q.clone().pow(6u32);
    let order = &q6 * (&q2 - BigInt::one()) * (&q6 - BigInt::one());
    let lhs = q.clone().pow(12u32);
    let alpha = BigInt::from(2 * f - 1);
    let rhs = &alpha * &alpha * q.clone().pow(7u32);
    Ok(G2Bound {
        f,
        q: q.to_string(),
        group_order: order.to_string(),
        dim: q6.to_string(),
        passes: lhs > rhs,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Prop5Case {
    A,
    B,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Prop5Bound {
    pub case: Prop5Case,
    pub q: String,
    /// Squared stated inequality: `chi1^2 > lhs_rhs`.
    pub stated_rhs_squared: String,
    pub stated_passes: bool,
    pub alpha_bound: String,
    pub centralizer_bound: String,
    /// `chi1^2 > (|alpha| - 1)^2 |C|`
    pub sufficient_rhs: String,
    pub sufficient_passes: bool,
}

/// Evaluate the degree inequalities for `q = 2^f`: case (a) with rank
/// parameter `d`, case (b) for the exceptional family.
pub fn prop5_bounds(case: Prop5Case, d: u32, f: u32, chi1: &BigInt) -> Result<Prop5Bound> {
    if f == 0 {
        return Err(Error::Precondition("f must be positive".into()));
    }
    let q = BigInt::from(2).pow(f);
    let chi2 = chi1 * chi1;
    let (stated, alpha, cent) = match case {
        Prop5Case::A => {
            if d < 5 {
                return Err(Error::Precondition("case (a) needs d >= 5".into()));
            }
            if q <= BigInt::from(4) {
                return Err(Error::Precondition("case (a) needs q > 4".into()));
            }
            let e = d * (d + 1) / 2;
            // chi1 > q^2 q^(d(d+1)/4), squared
            let stated = q.clone().pow(4u32) * q.clone().pow(e);
            let alpha = BigInt::from(2 * f) * (&q + BigInt::one());
            (stated, alpha, q.clone().pow(e))
        }
        Prop5Case::B => {
            if q <= BigInt::from(16) {
                return Err(Error::Precondition("case (b) needs q > 16".into()));
            }
            let stated = q.clone().pow(54u32);
            (stated, BigInt::from(6 * f), q.clone().pow(52u32))
        }
    };
    let am1 = &alpha - BigInt::one();
    let sufficient = &am1 * &am1 * &cent;
    Ok(Prop5Bound {
        case,
        q: q.to_string(),
        stated_passes: chi2 > stated,
        stated_rhs_squared: stated.to_string(),
        alpha_bound: alpha.to_string(),
        centralizer_bound: cent.to_string(),
        sufficient_passes: chi2 > sufficient,
        sufficient_rhs: sufficient.to_string(),
    })
}
