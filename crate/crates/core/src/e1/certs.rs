//! Certificates from the extended group `<Inn(G), nu>`.
//!
//! [`cor4_certificate`] and [`prop3_certificate`] are only meaningful for
//! odd-degree characters; the pipeline does not call them otherwise.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::json;

use crate::error::{Error, Result};
use crate::exact::approx::enclose;
use crate::exact::{Matrix, RealCyclo, RealField};
use crate::groups::ExtendedGroup;
use crate::reps::MatrixRep;

use super::intertwiner::IntertwinerData;
use super::verdict::{Certificate, Method};

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// An element `ad_g . nu` of order two in the coset.
pub fn cor4_certificate(eg: &ExtendedGroup) -> Option<Certificate> {
    let g = eg.base();
    (0..g.order())
        .find(|&x| eg.coset_element(x).order() == 2)
        .map(|x| {
            Certificate::new(
                Method::Cor4,
                json!({ "g": g.word_string(x), "alpha_order": 2 }),
            )
        })
}

/// An even-order `alpha` in the coset with
/// `degree^2 > (|alpha| - 1)^2 |C_G(alpha')|` for every prime-order power `alpha'`.
pub fn prop3_certificate(eg: &ExtendedGroup, degree: usize) -> Option<Certificate> {
    let g = eg.base();
    let d2 = BigInt::from(degree) * BigInt::from(degree);
    for x in 0..g.order() {
        let alpha = eg.coset_element(x);
        let n = alpha.order();
        if n % 2 == 1 {
            continue;
        }
        let mut bounds = Vec::new();
        let ok = prime_divisors(n).into_iter().all(|p| {
            let c = alpha.pow(n / p).fixed_points().len();
            let rhs = BigInt::from((n - 1) * (n - 1)) * BigInt::from(c);
            bounds.push(json!({ "prime": p, "centralizer_order": c, "rhs": rhs.to_string() }));
            d2 > rhs
        });
        if ok {
            return Some(Certificate::new(
                Method::Prop3,
                json!({
                    "g": g.word_string(x),
                    "alpha_order": n,
                    "degree_squared": d2.to_string(),
                    "bounds": bounds,
                }),
            ));
        }
    }
    None
}

type Iv = (BigRational, BigRational);

fn iv_mul(a: &Iv, b: &Iv) -> Iv {
    let c = [&a.0 * &b.0, &a.0 * &b.1, &a.1 * &b.0, &a.1 * &b.1];
    let lo = c.iter().min().unwrap().clone();
    let hi = c.iter().max().unwrap().clone();
    (lo, hi)
}

/// Enclosure of `r^(1/k)` for a rational `r > 0`, width about `2^-bits`.
fn root_bounds(lo: &BigRational, hi: &BigRational, k: u32, bits: u32) -> Iv {
    let scale = BigInt::one() << (bits as usize * k as usize);
    let den = BigInt::one() << bits as usize;
    let lo_int = (lo * BigRational::from_integer(scale.clone()))
        .floor()
        .to_integer();
    let hi_int = (hi * BigRational::from_integer(scale)).ceil().to_integer();
    let lo_root = if lo_int.sign() == Sign::Plus {
        lo_int.nth_root(k)
    } else {
        BigInt::zero()
    };
    let hi_root = hi_int.nth_root(k) + BigInt::one();
    (
        BigRational::new(lo_root, den.clone()),
        BigRational::new(hi_root, den),
    )
}

/// `(1/N) sum_i s^i (+-1)^i t_i` as an integer, where `s = |lambda|^(-1/k)`
/// and `t_i = tr(A^i)`; `None` if the enclosure stays ambiguous.
fn multiplicities(
    traces: &[RealCyclo],
    lambda_abs: &RealCyclo,
    k: u32,
) -> Result<Option<(BigInt, BigInt)>> {
    let n = traces.len();
    let mut bits = 64u32;
    while bits <= 4096 {
        let (llo, lhi) = enclose(lambda_abs.value(), bits)?;
        if !llo.is_positive() {
            bits *= 2;
            continue;
        }
        let (rlo, rhi) = root_bounds(&llo, &lhi, k, bits);
        if !rlo.is_positive() {
            bits *= 2;
            continue;
        }
        let s: Iv = (rhi.recip(), rlo.recip());
        let mut power: Iv = (BigRational::one(), BigRational::one());
        let mut plus: Iv = (BigRational::zero(), BigRational::zero());
        let mut minus = plus.clone();
        for (i, t) in traces.iter().enumerate() {
            let ti = enclose(t.value(), bits)?;
            let term = iv_mul(&power, &ti);
            plus = (&plus.0 + &term.0, &plus.1 + &term.1);
            if i % 2 == 0 {
                minus = (&minus.0 + &term.0, &minus.1 + &term.1);
            } else {
                minus = (&minus.0 - &term.1, &minus.1 - &term.0);
            }
            power = iv_mul(&power, &s);
        }
        let nn = BigRational::from_integer(BigInt::from(n));
        let round = |iv: &Iv| -> Option<BigInt> {
            let lo = &iv.0 / &nn;
            let hi = &iv.1 / &nn;
            let r = ((&lo + &hi) / BigRational::from_integer(BigInt::from(2))).round();
            let half = BigRational::new(BigInt::one(), BigInt::from(2));
            (lo > &r - &half && hi < &r + &half).then(|| r.to_integer())
        };
        if let (Some(p), Some(m)) = (round(&plus), round(&minus)) {
            return Ok(Some((p, m)));
        }
        bits *= 2;
    }
    Ok(None)
}

/// Prop 2 test for `alpha = ad_g . nu`: both eigenvalues `1` and `-1` occur
/// for `rho(g) n_+`, computed from the traces of powers of `rho(g) m`.
pub fn prop2_certificate(
    rep: &MatrixRep,
    it: &IntertwinerData,
    eg: &ExtendedGroup,
    g: usize,
) -> Result<Option<Certificate>> {
    let n = eg.coset_element(g).order();
    if n % 2 == 1 {
        return Err(Error::Precondition("alpha must have even order".into()));
    }
    let a = rep.image(g).mul(&it.m)?;
    let mut traces = Vec::with_capacity(n);
    let mut p = Matrix::identity(rep.dim());
    for _ in 0..n {
        traces.push(p.trace()?);
        p = p.mul(&a)?;
    }
    let c = p
        .as_scalar()
        .ok_or_else(|| Error::Invariant("power of rho(g) m is not scalar".into()))?;
    if c.sign()? < 0 {
        return Ok(None);
    }
    let Some((plus, minus)) = multiplicities(&traces, &it.lambda.abs()?, it.k as u32)? else {
        return Ok(None);
    };
    if plus.is_positive() && minus.is_positive() {
        let base = eg.base();
        Ok(Some(Certificate::new(
            Method::Prop2,
            json!({
                "g": base.word_string(g),
                "alpha_order": n,
                "multiplicity_plus": plus.to_string(),
                "multiplicity_minus": minus.to_string(),
            }),
        )))
    } else {
        Ok(None)
    }
}

/// First `g` (in index order) whose coset element has even order and passes Prop 2.
pub fn prop2_search(
    rep: &MatrixRep,
    it: &IntertwinerData,
    eg: &ExtendedGroup,
) -> Result<Option<Certificate>> {
    for g in 0..eg.base().order() {
        if eg.coset_element(g).order().is_multiple_of(2) {
            if let Some(c) = prop2_certificate(rep, it, eg, g)? {
                return Ok(Some(c));
            }
        }
    }
    Ok(None)
}
