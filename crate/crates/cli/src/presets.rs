//! Named groups, built as permutation groups.

use eigenone::{Perm, PermGroup};

use crate::error::{CliError, CliResult};

/// Families listed in "unknown preset" suggestions.
pub const PRESET_NAMES: &[&str] = &[
    "S1", "S2", "S3", "S4", "S5", "S6", "S7", "S8", "A3", "A4", "A5", "A6", "A7", "A8", "C2", "C3",
    "C4", "C6", "D6", "D8", "D10", "D12", "Q8", "ES32+", "ES32-", "SL2(3)", "SL2(5)", "PSL2(4)",
    "PSL2(5)", "PSL2(7)", "PSL2(8)", "PSL2(9)", "PSL2(11)", "PGL2(3)", "C2^4", "A5xA5",
];

/// Generators (0-based images) of a named group, without products or powers.
pub fn preset_generators(name: &str) -> Option<(usize, Vec<Perm>)> {
    if let Some(n) = numbered(name, "S") {
        return (1..=8).contains(&n).then(|| symmetric(n));
    }
    if let Some(n) = numbered(name, "A") {
        return (1..=8).contains(&n).then(|| alternating(n));
    }
    if let Some(n) = numbered(name, "C") {
        return (n >= 1).then(|| (n, vec![cycle(n, &(0..n as u32).collect::<Vec<_>>())]));
    }
    if let Some(n) = numbered(name, "D") {
        return (n >= 2 && n % 2 == 0).then(|| dihedral(n / 2));
    }
    match name {
        "Q8" => Some((8, quaternion())),
        "ES32+" => Some(extraspecial(false)),
        "ES32-" => Some(extraspecial(true)),
        "SL2(3)" => Some(special_linear(3)),
        "SL2(5)" => Some(special_linear(5)),
        "PGL2(3)" => Some(projective_line(&Gf::new(3), true)),
        _ => {
            let q = name
                .strip_prefix("PSL2(")?
                .strip_suffix(')')?
                .parse::<u32>()
                .ok()?;
            [4, 5, 7, 8, 9, 11]
                .contains(&q)
                .then(|| projective_line(&Gf::new(q), false))
        }
    }
}

fn numbered(name: &str, prefix: &str) -> Option<usize> {
    let rest = name.strip_prefix(prefix)?;
    if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    rest.parse().ok()
}

fn cycle(degree: usize, pts: &[u32]) -> Perm {
    Perm::from_cycles(degree, &[pts.to_vec()]).expect("valid cycle")
}

fn symmetric(n: usize) -> (usize, Vec<Perm>) {
    if n == 1 {
        return (1, vec![Perm::identity(1)]);
    }
    let all: Vec<u32> = (0..n as u32).collect();
    (n, vec![cycle(n, &[0, 1]), cycle(n, &all)])
}

fn alternating(n: usize) -> (usize, Vec<Perm>) {
    if n < 3 {
        return (n, vec![Perm::identity(n)]);
    }
    let long: Vec<u32> = if n % 2 == 1 {
        (0..n as u32).collect()
    } else {
        (1..n as u32).collect()
    };
    (n, vec![cycle(n, &[0, 1, 2]), cycle(n, &long)])
}

/// Dihedral of order `2n`, on `n` points (or 4 points for the Klein group).
fn dihedral(n: usize) -> (usize, Vec<Perm>) {
    match n {
        1 => (2, vec![cycle(2, &[0, 1])]),
        2 => {
            let a = Perm::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap();
            let b = Perm::from_cycles(4, &[vec![0, 2], vec![1, 3]]).unwrap();
            (4, vec![a, b])
        }
        _ => {
            let rot = cycle(n, &(0..n as u32).collect::<Vec<_>>());
            let refl =
                Perm::from_images((0..n as u32).map(|i| (n as u32 - i) % n as u32).collect())
                    .unwrap();
            (n, vec![rot, refl])
        }
    }
}

/// The quaternion group in its regular action.
fn quaternion() -> Vec<Perm> {
    ["(1,2,4,7)(3,6,8,5)", "(1,3,4,8)(2,5,7,6)"]
        .iter()
        .map(|s| Perm::parse_cycles(s, Some(8)).unwrap())
        .collect()
}

/// `(D8 x D8)/<zz>` (plus type) or `(D8 x Q8)/<zz>` (minus type), acting on cosets.
fn extraspecial(minus: bool) -> (usize, Vec<Perm>) {
    let (d, mut gens) = dihedral(4);
    let second: Vec<Perm> = if minus { quaternion() } else { dihedral(4).1 };
    let degree = d + second[0].degree();
    let shift = |p: &Perm, off: usize| {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for (i, &x) in p.images().iter().enumerate() {
            images[i + off] = x + off as u32;
        }
        Perm::from_images(images).unwrap()
    };
    gens = gens.iter().map(|p| shift(p, 0)).collect();
    gens.extend(second.iter().map(|p| shift(p, d)));
    let product = PermGroup::generate(degree, gens).unwrap();
    let z1 = shift(&dihedral(4).1[0].pow(2), 0);
    let z2 = shift(&second[0].pow(2), d);
    let zz = product.index_of(&z1.mul(&z2)).unwrap();
    let (q, _) = product.quotient(&[0, zz]).unwrap();
    (q.degree(), q.generators().to_vec())
}

/// SL2(p) acting on the nonzero vectors of `F_p^2`.
fn special_linear(p: u32) -> (usize, Vec<Perm>) {
    let degree = (p * p - 1) as usize;
    let act = |m: [[u32; 2]; 2]| {
        let images = (1..p * p)
            .map(|v| {
                let (x, y) = (v % p, v / p);
                let nx = (m[0][0] * x + m[0][1] * y) % p;
                let ny = (m[1][0] * x + m[1][1] * y) % p;
                nx + p * ny - 1
            })
            .collect();
        Perm::from_images(images).unwrap()
    };
    (
        degree,
        vec![act([[1, 1], [0, 1]]), act([[0, p - 1], [1, 0]])],
    )
}

/// PSL2(q), or PGL2(q) when `full`, acting on the projective line.
fn projective_line(f: &Gf, full: bool) -> (usize, Vec<Perm>) {
    let q = f.q;
    let w = f.primitive();
    let scale = if full || q.is_multiple_of(2) {
        w
    } else {
        f.mul(w, w)
    };
    let minus_one = f.neg(1);
    let maps = [[1, 1, 0, 1], [scale, 0, 0, 1], [0, minus_one, 1, 0]];
    let gens = maps
        .iter()
        .map(|&[a, b, c, d]| {
            let images = (0..=q).map(|x| f.mobius(a, b, c, d, x)).collect();
            Perm::from_images(images).unwrap()
        })
        .collect();
    (q as usize + 1, gens)
}

/// A small finite field; elements are base-`p` digit strings of polynomials.
pub struct Gf {
    p: u32,
    k: u32,
    pub q: u32,
    /// Monic modulus coefficients, lowest first, degree `k`.
    modulus: Vec<u32>,
}

impl Gf {
    pub fn new(q: u32) -> Gf {
        let (p, k, modulus) = match q {
            4 => (2, 2, vec![1, 1, 1]),
            8 => (2, 3, vec![1, 1, 0, 1]),
            9 => (3, 2, vec![1, 0, 1]),
            _ => (q, 1, vec![0, 1]),
        };
        Gf { p, k, q, modulus }
    }

    fn digits(&self, mut x: u32) -> Vec<u32> {
        (0..self.k)
            .map(|_| {
                let d = x % self.p;
                x /= self.p;
                d
            })
            .collect()
    }

    fn pack(&self, d: &[u32]) -> u32 {
        d.iter().rev().fold(0, |acc, &x| acc * self.p + x)
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        let (x, y) = (self.digits(a), self.digits(b));
        self.pack(
            &x.iter()
                .zip(&y)
                .map(|(u, v)| (u + v) % self.p)
                .collect::<Vec<_>>(),
        )
    }

    pub fn neg(&self, a: u32) -> u32 {
        self.pack(
            &self
                .digits(a)
                .iter()
                .map(|u| (self.p - u) % self.p)
                .collect::<Vec<_>>(),
        )
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        let (p, k) = (self.p, self.k as usize);
        let (x, y) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u32; 2 * k];
        for i in 0..k {
            for j in 0..k {
                prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
            }
        }
        for i in (k..2 * k).rev() {
            let c = prod[i];
            if c != 0 {
                for j in 0..=k {
                    let t = i - k + j;
                    prod[t] = (prod[t] + (p - c) * self.modulus[j]) % p;
                }
            }
        }
        self.pack(&prod[..k])
    }

    pub fn inv(&self, a: u32) -> u32 {
        (1..self.q)
            .find(|&b| self.mul(a, b) == 1)
            .expect("nonzero element")
    }

    pub fn primitive(&self) -> u32 {
        (1..self.q)
            .find(|&g| {
                let mut x = g;
                let mut order = 1;
                while x != 1 {
                    x = self.mul(x, g);
                    order += 1;
                }
                order == self.q - 1
            })
            .unwrap()
    }

    /// `x -> (a x + b)/(c x + d)` on `F_q` plus the point `q` at infinity.
    fn mobius(&self, a: u32, b: u32, c: u32, d: u32, x: u32) -> u32 {
        let inf = self.q;
        let (num, den) = if x == inf {
            (a, c)
        } else {
            (self.add(self.mul(a, x), b), self.add(self.mul(c, x), d))
        };
        if den == 0 {
            inf
        } else {
            self.mul(num, self.inv(den))
        }
    }
}

/// Direct product, acting on the disjoint union of the point sets.
pub fn direct_product(factors: &[(usize, Vec<Perm>)]) -> (usize, Vec<Perm>) {
    let degree: usize = factors.iter().map(|f| f.0).sum();
    let mut gens = Vec::new();
    let mut off = 0;
    for (d, fg) in factors {
        for p in fg {
            let mut images: Vec<u32> = (0..degree as u32).collect();
            for (i, &x) in p.images().iter().enumerate() {
                images[i + off] = x + off as u32;
            }
            gens.push(Perm::from_images(images).unwrap());
        }
        off += d;
    }
    if gens.is_empty() {
        gens.push(Perm::identity(degree.max(1)));
    }
    (degree.max(1), gens)
}

/// Close under products, failing beyond `bound` elements.
pub fn build(degree: usize, gens: Vec<Perm>, bound: usize) -> CliResult<PermGroup> {
    PermGroup::generate_with_bound(degree, gens, bound).map_err(CliError::from)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(name: &str) -> usize {
        let (d, g) = preset_generators(name).unwrap();
        PermGroup::generate(d, g).unwrap().order()
    }

    #[test]
    fn orders() {
        let expected = [
            ("S1", 1),
            ("S4", 24),
            ("A4", 12),
            ("A5", 60),
            ("C7", 7),
            ("D4", 4),
            ("D8", 8),
            ("D10", 10),
            ("Q8", 8),
            ("ES32+", 32),
            ("ES32-", 32),
            ("SL2(3)", 24),
            ("SL2(5)", 120),
            ("PGL2(3)", 24),
            ("PSL2(4)", 60),
            ("PSL2(5)", 60),
            ("PSL2(7)", 168),
            ("PSL2(8)", 504),
            ("PSL2(9)", 360),
            ("PSL2(11)", 660),
        ];
        for (name, n) in expected {
            assert_eq!(order(name), n, "{name}");
        }
    }

    #[test]
    fn field_arithmetic() {
        for q in [4, 8, 9, 7] {
            let f = Gf::new(q);
            for a in 1..q {
                assert_eq!(f.mul(a, f.inv(a)), 1);
                assert_eq!(f.add(a, f.neg(a)), 0);
            }
        }
    }

    #[test]
    fn extraspecial_types() {
        for (name, involutions) in [("ES32+", 19), ("ES32-", 11)] {
            let (d, g) = preset_generators(name).unwrap();
            let g = PermGroup::generate(d, g).unwrap();
            assert_eq!(g.exponent(), 4);
            assert_eq!(g.center().len(), 2);
            let inv = (0..g.order()).filter(|&x| g.element_order(x) == 2).count();
            assert_eq!(inv, involutions, "{name}");
        }
    }

    #[test]
    fn unknown_names() {
        assert!(preset_generators("S9").is_none());
        assert!(preset_generators("PSL2(13)").is_none());
        assert!(preset_generators("D7").is_none());
    }
}
