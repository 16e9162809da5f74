//! Elements of cyclotomic fields `Q(zeta_n)`.
//!
//! Elements are stored in the Zumbroich basis of `Q(zeta_n)`: the set of
//! exponents `e` such that, writing `zeta_n^e` as a product of roots of
//! prime-power order `q = p^k`, every `p`-part exponent `f` satisfies
//! `f >= p^(k-1)` for odd `p` and `f < 2^(k-1)` for `p = 2`. Coordinates in
//! that basis are unique, and after reduction the conductor is shrunk to the
//! smallest `n` (never `2 mod 4`) whose field contains the element. Together
//! these make equality plain structural equality.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::field;

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Prime-power factor `q = p^k` of a conductor with the CRT helper
/// `cofactor_inv = (n / q)^(-1) mod q`.
#[derive(Debug, Clone, Copy)]
struct PrimePart {
    p: u64,
    q: u64,
    cofactor_inv: u64,
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut k = 0;
            while n.is_multiple_of(p) {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub(crate) fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let g = (a as i128).extended_gcd(&(m as i128));
    if g.gcd != 1 {
        return None;
    }
    Some(g.x.rem_euclid(m as i128) as u64)
}

fn prime_parts(n: u64) -> Vec<PrimePart> {
    factorize(n)
        .into_iter()
        .map(|(p, k)| {
            let q = p.pow(k);
            let cofactor_inv = mod_inverse((n / q) % q, q).expect("coprime cofactor");
            PrimePart { p, q, cofactor_inv }
        })
        .collect()
}

#[inline]
fn component(e: u64, part: &PrimePart) -> u64 {
    ((e % part.q) * part.cofactor_inv) % part.q
}

#[inline]
fn component_is_basis(f: u64, part: &PrimePart) -> bool {
    let top = part.q / part.p;
    if part.p == 2 {
        f < top
    } else {
        f >= top
    }
}

/// Rewrite a dense coefficient vector of length `n` (exponent-indexed) so that
/// only basis exponents carry coefficients.
fn reduce_dense(n: u64, acc: &mut [Rational], parts: &[PrimePart]) {
    for part in parts {
        let shift = n / part.p;
        for e in 0..n {
            if acc[e as usize].is_zero() {
                continue;
            }
            let f = component(e, part);
            if component_is_basis(f, part) {
                continue;
            }
            let c = std::mem::replace(&mut acc[e as usize], Rational::zero());
            if part.p == 2 {
                let t = ((e + n / 2) % n) as usize;
                acc[t] -= &c;
            } else {
                for i in 1..part.p {
                    let t = ((e + i * shift) % n) as usize;
                    acc[t] -= &c;
                }
            }
        }
    }
}

/// An element of `Q(zeta_n)` in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloElement {
    conductor: u32,
    /// Nonzero coordinates on basis exponents, sorted by exponent.
    coeffs: Vec<(u32, Rational)>,
}

impl CycloElement {
    pub fn zero() -> Self {
        CycloElement {
            conductor: 1,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(q: Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        CycloElement {
            conductor: 1,
            coeffs: vec![(0, q)],
        }
    }

    /// `zeta_n^e` with `zeta_n = exp(2 pi i / n)`.
    pub fn root_of_unity(n: u32, e: i64) -> Self {
        assert!(n >= 1, "conductor must be positive");
        let e = e.rem_euclid(n as i64) as u32;
        Self::from_terms(n, [(e, Rational::one())])
    }

    /// Build `sum c_e zeta_n^e` from arbitrary (not necessarily basis) exponents.
    pub fn from_terms<I>(n: u32, terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, Rational)>,
    {
        let mut acc = vec![Rational::zero(); n as usize];
        for (e, c) in terms {
            acc[(e % n) as usize] += c;
        }
        Self::from_dense(n, acc)
    }

    fn from_dense(n: u32, mut acc: Vec<Rational>) -> Self {
        let parts = prime_parts(n as u64);
        reduce_dense(n as u64, &mut acc, &parts);
        let coeffs = acc
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e as u32, c))
            .collect();
        let mut out = CycloElement {
            conductor: n,
            coeffs,
        };
        out.shrink_conductor();
        out
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Basis coordinates as `(exponent, coefficient)` pairs.
    pub fn coefficients(&self) -> &[(u32, Rational)] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    pub fn to_rational(&self) -> Option<Rational> {
        if self.conductor != 1 {
            return None;
        }
        Some(
            self.coeffs
                .first()
                .map(|(_, c)| c.clone())
                .unwrap_or_else(Rational::zero),
        )
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational()
            .filter(|q| q.is_integer())
            .map(|q| q.to_integer())
    }

    /// Re-express in `Q(zeta_m)` for a multiple `m` of the conductor.
    fn lift_dense(&self, m: u32) -> Vec<Rational> {
        debug_assert_eq!(m % self.conductor, 0);
        let scale = m / self.conductor;
        let mut acc = vec![Rational::zero(); m as usize];
        for (e, c) in &self.coeffs {
            acc[(e * scale) as usize] += c;
        }
        acc
    }

    /// Shrink the conductor while the element lies in a smaller cyclotomic field.
    fn shrink_conductor(&mut self) {
        loop {
            let n = self.conductor as u64;
            if n == 1 {
                return;
            }
            if self.coeffs.is_empty() {
                self.conductor = 1;
                return;
            }
            if n % 4 == 2 {
                // Q(zeta_n) = Q(zeta_{n/2}); basis exponents are all even here.
                self.conductor /= 2;
                for (e, _) in self.coeffs.iter_mut() {
                    debug_assert!(*e % 2 == 0);
                    *e /= 2;
                }
                continue;
            }
            let parts = prime_parts(n);
            let mut changed = false;
            for part in &parts {
                if part.q != part.p {
                    let p = part.p as u32;
                    if self.coeffs.iter().all(|(e, _)| e % p == 0) {
                        self.conductor /= p;
                        for (e, _) in self.coeffs.iter_mut() {
                            *e /= p;
                        }
                        changed = true;
                        break;
                    }
                } else if part.p != 2 {
                    if let Some(reduced) = self.descend_squarefree_prime(part) {
                        *self = reduced;
                        changed = true;
                        break;
                    }
                }
            }
            if !changed {
                return;
            }
        }
    }

    /// For `p || n` (odd `p`): the element lies in `Q(zeta_{n/p})` iff the
    /// coefficients are constant on every fibre of the `p`-component.
    fn descend_squarefree_prime(&self, part: &PrimePart) -> Option<CycloElement> {
        let n = self.conductor as u64;
        let p = part.p;
        let shift = n / p;
        let mut fibres: BTreeMap<u64, Vec<&Rational>> = BTreeMap::new();
        for (e, c) in &self.coeffs {
            let e = *e as u64;
            let f = component(e, part);
            let base = (e + n - (shift * f) % n) % n;
            fibres.entry(base).or_default().push(c);
        }
        let mut terms = Vec::with_capacity(fibres.len());
        for (base, cs) in fibres {
            if cs.len() as u64 != p - 1 || cs.iter().any(|c| *c != cs[0]) {
                return None;
            }
            debug_assert_eq!(base % p, 0);
            terms.push(((base / p) as u32, -cs[0].clone()));
        }
        terms.sort_by_key(|(e, _)| *e);
        Some(CycloElement {
            conductor: (n / p) as u32,
            coeffs: terms,
        })
    }

    fn common_conductor(&self, other: &Self) -> u32 {
        self.conductor.lcm(&other.conductor)
    }

    fn combine(&self, other: &Self, sign: bool) -> Self {
        if self.conductor == other.conductor {
            let mut out: Vec<(u32, Rational)> =
                Vec::with_capacity(self.coeffs.len() + other.coeffs.len());
            let (mut i, mut j) = (0, 0);
            while i < self.coeffs.len() || j < other.coeffs.len() {
                let take = match (self.coeffs.get(i), other.coeffs.get(j)) {
                    (Some(a), Some(b)) => a.0.cmp(&b.0),
                    (Some(_), None) => Ordering::Less,
                    _ => Ordering::Greater,
                };
                match take {
                    Ordering::Less => {
                        out.push(self.coeffs[i].clone());
                        i += 1;
                    }
                    Ordering::Greater => {
                        let (e, c) = &other.coeffs[j];
                        out.push((*e, if sign { c.clone() } else { -c.clone() }));
                        j += 1;
                    }
                    Ordering::Equal => {
                        let (e, a) = &self.coeffs[i];
                        let b = &other.coeffs[j].1;
                        let s = if sign { a + b } else { a - b };
                        if !s.is_zero() {
                            out.push((*e, s));
                        }
                        i += 1;
                        j += 1;
                    }
                }
            }
            let mut r = CycloElement {
                conductor: self.conductor,
                coeffs: out,
            };
            r.shrink_conductor();
            return r;
        }
        let m = self.common_conductor(other);
        let mut acc = self.lift_dense(m);
        let scale = m / other.conductor;
        for (e, c) in &other.coeffs {
            let slot = &mut acc[(e * scale) as usize];
            if sign {
                *slot += c;
            } else {
                *slot -= c;
            }
        }
        Self::from_dense(m, acc)
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        self.combine(other, true)
    }

    pub fn sub(&self, other: &Self) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        self.combine(other, false)
    }

    pub fn neg(&self) -> Self {
        CycloElement {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        CycloElement {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, c * q)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if let Some(q) = self.to_rational() {
            return other.scale(&q);
        }
        if let Some(q) = other.to_rational() {
            return self.scale(&q);
        }
        let m = self.common_conductor(other);
        let (sa, sb) = (m / self.conductor, m / other.conductor);
        let mut acc = vec![Rational::zero(); m as usize];
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &other.coeffs {
                let e = ((ea * sa + eb * sb) % m) as usize;
                acc[e] += ca * cb;
            }
        }
        Self::from_dense(m, acc)
    }

    /// Galois automorphism `zeta ↦ zeta^a` (requires `gcd(a, n) = 1`).
    pub fn galois(&self, a: i64) -> Self {
        let n = self.conductor as i64;
        if n == 1 {
            return self.clone();
        }
        let a = a.rem_euclid(n) as u64;
        debug_assert_eq!(a.gcd(&(n as u64)), 1);
        Self::from_terms(
            self.conductor,
            self.coeffs
                .iter()
                .map(|(e, c)| (((*e as u64 * a) % n as u64) as u32, c.clone())),
        )
    }

    /// Complex conjugation `zeta ↦ zeta^(-1)`.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    pub fn is_real(&self) -> bool {
        self.conductor <= 2 || *self == self.conj()
    }

    /// Field norm down to `Q` and the product of the non-trivial conjugates.
    fn norm_cofactor(&self) -> (Rational, CycloElement) {
        let n = self.conductor as u64;
        let mut cof = CycloElement::one();
        for a in 2..n {
            if a.gcd(&n) == 1 {
                cof = cof.mul(&self.galois(a as i64));
            }
        }
        let norm = self.mul(&cof);
        (norm.to_rational().expect("norm is rational"), cof)
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(q) = self.to_rational() {
            return Some(Self::from_rational(q.recip()));
        }
        let (norm, cof) = self.norm_cofactor();
        Some(cof.scale(&norm.recip()))
    }

    pub fn pow(&self, e: u64) -> Self {
        <Self as field::Field>::pow(self, e)
    }

    /// Floating point value under `zeta_n ↦ exp(2 pi i / n)`; test and display use only.
    pub fn to_complex_f64(&self) -> (f64, f64) {
        let n = self.conductor as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (e, c) in &self.coeffs {
            let c = rational_to_f64(c);
            let t = 2.0 * std::f64::consts::PI * (*e as f64) / n;
            re += c * t.cos();
            im += c * t.sin();
        }
        (re, im)
    }

    /// Canonical text form, e.g. `1/2 + 3*E(5)^2`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (e, c) in &self.coeffs {
            if self.conductor == 1 || *e == 0 {
                parts.push(format!("{c}"));
            } else if c.is_one() {
                parts.push(format!("E({})^{e}", self.conductor));
            } else {
                parts.push(format!("{c}*E({})^{e}", self.conductor));
            }
        }
        parts.join(" + ")
    }
}

pub(crate) fn rational_to_f64(q: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or_else(|| {
        let n = q.numer().to_f64().unwrap_or(f64::NAN);
        let d = q.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

impl PartialOrd for CycloElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Structural total order (conductor, then coordinates); used for
/// deterministic sorting only, not the real ordering.
impl Ord for CycloElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.conductor
            .cmp(&other.conductor)
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl fmt::Debug for CycloElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Display for CycloElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl field::Field for CycloElement {
    fn zero() -> Self {
        CycloElement::zero()
    }
    fn one() -> Self {
        CycloElement::one()
    }
    fn is_zero(&self) -> bool {
        CycloElement::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        CycloElement::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        CycloElement::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        CycloElement::mul(self, other)
    }
    fn neg(&self) -> Self {
        CycloElement::neg(self)
    }
    fn inv(&self) -> Option<Self> {
        CycloElement::inv(self)
    }
    fn from_rational(q: &Rational) -> Self {
        CycloElement::from_rational(q.clone())
    }
}

pub(crate) fn rational_to_string(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub(crate) fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}

#[derive(Serialize, Deserialize)]
struct CycloJson {
    conductor: u32,
    coeffs: BTreeMap<String, String>,
}

impl Serialize for CycloElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        CycloJson {
            conductor: self.conductor,
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (e.to_string(), rational_to_string(c)))
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CycloElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = CycloJson::deserialize(deserializer)?;
        if raw.conductor == 0 {
            return Err(D::Error::custom("conductor must be positive"));
        }
        let mut terms = Vec::with_capacity(raw.coeffs.len());
        for (e, c) in raw.coeffs {
            let e: u32 = e
                .parse()
                .map_err(|_| D::Error::custom(format!("bad exponent {e:?}")))?;
            let c = parse_rational(&c)
                .ok_or_else(|| D::Error::custom(format!("bad rational {c:?}")))?;
            terms.push((e, c));
        }
        Ok(CycloElement::from_terms(raw.conductor, terms))
    }
}

/// `sqrt(d)` for a nonzero integer `d`, as a Gauss-sum expression in the
/// cyclotomic field of conductor dividing `4|d|`.
pub fn sqrt_int(d: i64) -> CycloElement {
    assert!(d != 0);
    let mut out = CycloElement::one();
    let mut rest = d.unsigned_abs();
    let mut square = 1i64;
    for (p, k) in factorize(rest) {
        let p = p as i64;
        square *= p.pow(k / 2);
        if k % 2 == 1 {
            out = out.mul(&sqrt_prime_signed(p));
        }
        rest /= (p as u64).pow(k);
    }
    debug_assert_eq!(rest, 1);
    // out^2 = product of p* = (+-p); fix the overall sign with i.
    let sq = out.mul(&out).to_rational().expect("rational square");
    let target = Rational::from_integer(BigInt::from(d))
        / Rational::from_integer(BigInt::from(square * square));
    if sq != target {
        debug_assert_eq!(sq, -target);
        out = out.mul(&CycloElement::root_of_unity(4, 1));
    }
    let r = out.scale(&Rational::from_integer(BigInt::from(square)));
    // Choose the branch that is positive real or positive imaginary.
    let (re, im) = r.to_complex_f64();
    if re < -1e-9 || (re.abs() < 1e-9 && im < 0.0) {
        r.neg()
    } else {
        r
    }
}

/// Square root of `p* = (-1)^((p-1)/2) p` for odd `p`, `sqrt(2)` for `p = 2`,
/// via the quadratic Gauss sum.
fn sqrt_prime_signed(p: i64) -> CycloElement {
    if p == 2 {
        // zeta_8 + zeta_8^-1 = sqrt(2)
        return CycloElement::root_of_unity(8, 1).add(&CycloElement::root_of_unity(8, -1));
    }
    let mut terms = Vec::new();
    for a in 1..p {
        let legendre = if (1..p).any(|x| (x * x) % p == a) {
            1
        } else {
            -1
        };
        terms.push((a as u32, rat(legendre, 1)));
    }
    CycloElement::from_terms(p as u32, terms)
}

impl CycloElement {
    /// True when every coordinate is an integer.
    pub fn has_integral_coords(&self) -> bool {
        self.coeffs.iter().all(|(_, c)| c.is_integer())
    }

    pub fn abs_coeff_sum(&self) -> Rational {
        self.coeffs
            .iter()
            .fold(Rational::zero(), |acc, (_, c)| acc + c.abs())
    }
}
