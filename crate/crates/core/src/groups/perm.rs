use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `{0, .., degree-1}` stored as its image list.
///
/// Products compose left to right: `a.mul(&b)` applies `a` first, then `b`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            let slot = seen
                .get_mut(i as usize)
                .ok_or_else(|| Error::InvalidPerm(format!("image {i} out of range")))?;
            if *slot {
                return Err(Error::InvalidPerm(format!("image {i} repeated")));
            }
            *slot = true;
        }
        Ok(Perm { images })
    }

    /// Build from 0-based cycles on `degree` points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (idx, &p) in cycle.iter().enumerate() {
                let p = p as usize;
                if p >= degree {
                    return Err(Error::InvalidPerm(format!(
                        "point {} exceeds degree {degree}",
                        p + 1
                    )));
                }
                if touched[p] {
                    return Err(Error::InvalidPerm(format!("point {} appears twice", p + 1)));
                }
                touched[p] = true;
                images[p] = cycle[(idx + 1) % cycle.len()];
            }
        }
        Ok(Perm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, p: u32) -> u32 {
        self.images[p as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self` then `other`.
    pub fn mul(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Perm { images }
    }

    pub fn pow(&self, e: i64) -> Perm {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Perm::identity(self.degree());
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            e >>= 1;
        }
        acc
    }

    /// Disjoint cycles of length > 1, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start as u32];
            seen[start] = true;
            let mut p = self.images[start];
            while p as usize != start {
                seen[p as usize] = true;
                cycle.push(p);
                p = self.images[p as usize];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| num_integer::lcm(acc, c.len() as u64))
    }

    /// 1-based cycle notation, `()` for the identity.
    pub fn to_cycle_string(&self) -> String {
        let cs = self.cycles();
        if cs.is_empty() {
            return "()".into();
        }
        cs.iter()
            .map(|c| {
                let pts: Vec<String> = c.iter().map(|p| (p + 1).to_string()).collect();
                format!("({})", pts.join(","))
            })
            .collect()
    }

    /// Parse 1-based cycle notation such as `(1,2)(3,4,5)`.
    pub fn parse_cycles(text: &str, degree: Option<usize>) -> Result<Perm> {
        let cycles = parse_cycle_list(text)?;
        let max = cycles
            .iter()
            .flatten()
            .copied()
            .max()
            .map_or(0, |m| m as usize + 1);
        let degree = degree.unwrap_or(max).max(max);
        Perm::from_cycles(degree, &cycles)
    }

    /// Extend to a larger degree by fixing the new points.
    pub fn extend(&self, degree: usize) -> Perm {
        let mut images = self.images.clone();
        images.extend(self.images.len() as u32..degree as u32);
        Perm { images }
    }
}

/// Parse `(a,b,..)(c,..)` into 0-based cycles.
pub fn parse_cycle_list(text: &str) -> Result<Vec<Vec<u32>>> {
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let offset = text.len() - rest.len();
        if !rest.starts_with('(') {
            return Err(Error::InvalidPerm(format!(
                "expected '(' at position {offset} in {text:?}"
            )));
        }
        let close = rest
            .find(')')
            .ok_or_else(|| Error::InvalidPerm(format!("unclosed cycle at position {offset}")))?;
        let body = rest[1..close].trim();
        if !body.is_empty() {
            let mut cycle = Vec::new();
            for tok in body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
            {
                let v: u32 = tok.parse().map_err(|_| {
                    Error::InvalidPerm(format!("bad point {tok:?} near position {offset}"))
                })?;
                if v == 0 {
                    return Err(Error::InvalidPerm("points are numbered from 1".into()));
                }
                cycle.push(v - 1);
            }
            cycles.push(cycle);
        }
        rest = rest[close + 1..].trim_start();
    }
    Ok(cycles)
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string())
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_is_left_to_right() {
        let a = Perm::parse_cycles("(1,2)", Some(3)).unwrap();
        let b = Perm::parse_cycles("(1,2,3)", Some(3)).unwrap();
        // 1 -a-> 2 -b-> 3
        assert_eq!(a.mul(&b).apply(0), 2);
        assert_eq!(a.mul(&b).to_cycle_string(), "(1,3)");
        assert!(a.mul(&a).is_identity());
        assert_eq!(b.order(), 3);
        assert_eq!(b.pow(-1), b.inverse());
    }

    #[test]
    fn parse_errors() {
        assert!(Perm::parse_cycles("(1,2", None).is_err());
        assert!(Perm::parse_cycles("(1,1)", None).is_err());
        assert!(Perm::parse_cycles("(0,1)", None).is_err());
        assert!(Perm::from_images(vec![0, 0]).is_err());
        assert_eq!(Perm::parse_cycles("", Some(2)).unwrap(), Perm::identity(2));
    }
}
