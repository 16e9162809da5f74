//! Linear algebra over a prime field `F_p` with `p < 2^32`.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        debug_assert!(p > 1 && p < (1 << 32));
        Fp { p }
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        (self.p - a) % self.p
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1 % self.p;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero mod {}", self.p);
        self.pow(a, self.p - 2)
    }

    pub fn from_i64(&self, a: i64) -> u64 {
        a.rem_euclid(self.p as i64) as u64
    }

    /// Symmetric representative in `(-p/2, p/2]`.
    pub fn signed(&self, a: u64) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&self, rows: &mut [Vec<u64>]) -> Vec<usize> {
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..ncols {
            if r == rows.len() {
                break;
            }
            let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
                continue;
            };
            rows.swap(r, piv);
            let inv = self.inv(rows[r][c]);
            for x in rows[r].iter_mut() {
                *x = self.mul(*x, inv);
            }
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i == r || row[c] == 0 {
                    continue;
                }
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    if y != 0 {
                        *x = self.sub(*x, self.mul(f, y));
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Basis of the right kernel `{v : M v = 0}`.
    pub fn nullspace(&self, m: &[Vec<u64>], ncols: usize) -> Vec<Vec<u64>> {
        let mut rows = m.to_vec();
        let pivots = self.rref(&mut rows);
        let mut is_pivot = vec![false; ncols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        (0..ncols)
            .filter(|&c| !is_pivot[c])
            .map(|f| {
                let mut v = vec![0; ncols];
                v[f] = 1;
                for (i, &c) in pivots.iter().enumerate() {
                    v[c] = self.neg(rows[i][f]);
                }
                v
            })
            .collect()
    }

    /// Characteristic polynomial `det(xI - M)`, ascending coefficients.
    pub fn charpoly(&self, m: &[Vec<u64>]) -> Vec<u64> {
        let n = m.len();
        if n == 0 {
            return vec![1];
        }
        let mut vec = vec![1, self.neg(m[n - 1][n - 1])];
        for k in (0..n - 1).rev() {
            let size = n - k;
            let r: Vec<u64> = (k + 1..n).map(|j| m[k][j]).collect();
            let mut c: Vec<u64> = (k + 1..n).map(|i| m[i][k]).collect();
            let mut t = vec![1, self.neg(m[k][k])];
            for _ in 2..=size {
                let rc = r
                    .iter()
                    .zip(&c)
                    .fold(0, |acc, (&x, &y)| self.add(acc, self.mul(x, y)));
                t.push(self.neg(rc));
                c = (k + 1..n)
                    .map(|i| {
                        (k + 1..n)
                            .zip(&c)
                            .fold(0, |acc, (j, &cj)| self.add(acc, self.mul(m[i][j], cj)))
                    })
                    .collect();
            }
            let mut next = vec![0; size + 1];
            for (i, slot) in next.iter_mut().enumerate() {
                for (j, &v) in vec.iter().enumerate().take(i + 1) {
                    *slot = self.add(*slot, self.mul(t[i - j], v));
                }
            }
            vec = next;
        }
        vec.reverse();
        vec
    }

    pub fn eval(&self, poly: &[u64], x: u64) -> u64 {
        poly.iter()
            .rev()
            .fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }

    /// Distinct roots in `F_p` of a polynomial that splits into linear factors.
    pub fn roots(&self, poly: &[u64]) -> Vec<u64> {
        let deg = poly.len().saturating_sub(1);
        let mut out = Vec::new();
        if deg == 0 {
            return out;
        }
        // Deflate by each root found so the scan can stop early.
        let mut rest = poly.to_vec();
        for x in 0..self.p {
            if self.eval(&rest, x) == 0 {
                out.push(x);
                while rest.len() > 1 && self.eval(&rest, x) == 0 {
                    rest = self.deflate(&rest, x);
                }
                if rest.len() == 1 {
                    break;
                }
            }
        }
        out
    }

    /// `poly / (x - a)` for a root `a`.
    fn deflate(&self, poly: &[u64], a: u64) -> Vec<u64> {
        let n = poly.len() - 1;
        let mut q = vec![0; n];
        let mut carry = 0;
        for i in (0..n).rev() {
            carry = self.add(poly[i + 1], self.mul(carry, a));
            q[i] = carry;
        }
        q
    }

    /// A generator of the multiplicative group.
    pub fn primitive_root(&self) -> u64 {
        let phi = self.p - 1;
        let factors = prime_factors(phi);
        (2..self.p)
            .find(|&g| factors.iter().all(|&q| self.pow(g, phi / q) != 1))
            .unwrap_or(1)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest prime `p > lower` with `p = 1 mod modulus`.
pub fn prime_one_mod(modulus: u64, lower: u64) -> u64 {
    let mut p = (lower / modulus + 1) * modulus + 1;
    while !is_prime(p) {
        p += modulus;
    }
    p
}
