//! Group specifications: presets, cycle notation, and matrices over prime fields.
//!
//! Points in cycle notation are 1-based; the library works 0-based.

use std::collections::HashMap;

use eigenone::{Perm, PermGroup};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};
use crate::presets::{build, direct_product, preset_generators, PRESET_NAMES};

/// Matrix groups act right-regularly, so their degree is the group order.
pub const MATRIX_ORDER_BOUND: usize = 2048;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpecKind {
    Preset,
    Cycles,
    MatrixOverPrimeField,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    pub kind: SpecKind,
    pub payload: String,
}

impl GroupSpec {
    pub fn classify(text: &str) -> GroupSpec {
        let t = text.trim();
        let kind = if t.starts_with("mat(") {
            SpecKind::MatrixOverPrimeField
        } else if t.starts_with('(') {
            SpecKind::Cycles
        } else {
            SpecKind::Preset
        };
        GroupSpec {
            kind,
            payload: t.to_string(),
        }
    }
}

/// Parse a group specification, closing it up to `bound` elements.
pub fn parse_group_spec(text: &str, bound: usize) -> CliResult<PermGroup> {
    let lead = text.len() - text.trim_start().len();
    let spec = GroupSpec::classify(text);
    let shift = |e: CliError| match e {
        CliError::Syntax { position, message } => CliError::Syntax {
            position: position + lead,
            message,
        },
        other => other,
    };
    match spec.kind {
        SpecKind::Preset => parse_preset(&spec.payload, bound).map_err(shift),
        SpecKind::Cycles => parse_cycles(&spec.payload, bound).map_err(shift),
        SpecKind::MatrixOverPrimeField => parse_matrices(&spec.payload, bound).map_err(shift),
    }
}

fn syntax(position: usize, message: impl Into<String>) -> CliError {
    CliError::Syntax {
        position,
        message: message.into(),
    }
}

fn suggestions(name: &str) -> Vec<String> {
    let mut scored: Vec<(usize, &str)> = PRESET_NAMES
        .iter()
        .map(|p| {
            (
                strsim::levenshtein(&name.to_uppercase(), &p.to_uppercase()),
                *p,
            )
        })
        .collect();
    scored.sort();
    scored
        .into_iter()
        .take(5)
        .map(|(_, p)| p.to_string())
        .collect()
}

fn parse_preset(text: &str, bound: usize) -> CliResult<PermGroup> {
    if text.is_empty() {
        return Err(syntax(0, "empty group specification"));
    }
    let mut factors = Vec::new();
    let mut pos = 0;
    for part in text.split('x') {
        let (name, power) = match part.split_once('^') {
            Some((n, k)) => {
                let k: usize = k
                    .trim()
                    .parse()
                    .map_err(|_| syntax(pos + n.len() + 1, format!("bad exponent {k:?}")))?;
                (n.trim(), k)
            }
            None => (part.trim(), 1),
        };
        if name.is_empty() {
            return Err(syntax(pos, "missing factor name"));
        }
        let gens = preset_generators(name).ok_or_else(|| CliError::UnknownPreset {
            name: name.to_string(),
            suggestions: suggestions(name),
        })?;
        for _ in 0..power {
            factors.push(gens.clone());
        }
        pos += part.len() + 1;
    }
    let (degree, gens) = if factors.len() == 1 {
        factors.pop().unwrap()
    } else {
        direct_product(&factors)
    };
    build(degree, gens, bound)
}

/// `(1,2)(3,4); (1,3,5)`: generators separated by semicolons.
fn parse_cycles(text: &str, bound: usize) -> CliResult<PermGroup> {
    let mut gens: Vec<(usize, Vec<Vec<u32>>)> = Vec::new();
    let mut current: Vec<Vec<u32>> = Vec::new();
    let mut cycle: Option<Vec<u32>> = None;
    let mut number: Option<(usize, u32)> = None;
    let mut start = 0;
    let finish_number = |number: &mut Option<(usize, u32)>, cycle: &mut Option<Vec<u32>>| {
        if let Some((at, v)) = number.take() {
            if v == 0 {
                return Err(syntax(at, "points are numbered from 1"));
            }
            cycle.as_mut().unwrap().push(v - 1);
        }
        Ok(())
    };
    for (i, ch) in text.char_indices() {
        match ch {
            '0'..='9' => {
                if cycle.is_none() {
                    return Err(syntax(i, "digit outside a cycle"));
                }
                let d = ch.to_digit(10).unwrap();
                number = Some(match number {
                    Some((at, v)) => (
                        at,
                        v.checked_mul(10)
                            .and_then(|v| v.checked_add(d))
                            .ok_or_else(|| syntax(at, "point out of range"))?,
                    ),
                    None => (i, d),
                });
            }
            '(' => {
                if cycle.is_some() {
                    return Err(syntax(i, "nested '('"));
                }
                cycle = Some(Vec::new());
            }
            ',' => {
                if cycle.is_none() || number.is_none() {
                    return Err(syntax(i, "unexpected ','"));
                }
                finish_number(&mut number, &mut cycle)?;
            }
            ')' => {
                if cycle.is_none() {
                    return Err(syntax(i, "unmatched ')'"));
                }
                finish_number(&mut number, &mut cycle)?;
                let c = cycle.take().unwrap();
                if let Some((k, _)) = c.iter().enumerate().find(|(k, p)| c[..*k].contains(p)) {
                    return Err(syntax(i, format!("point {} repeated in a cycle", c[k] + 1)));
                }
                current.push(c);
            }
            ';' => {
                if cycle.is_some() {
                    return Err(syntax(i, "';' inside a cycle"));
                }
                gens.push((start, std::mem::take(&mut current)));
                start = i + 1;
            }
            c if c.is_whitespace() => {
                if cycle.is_some() && number.is_some() {
                    finish_number(&mut number, &mut cycle)?;
                }
            }
            other => return Err(syntax(i, format!("unexpected character {other:?}"))),
        }
    }
    if cycle.is_some() {
        return Err(syntax(text.len(), "unclosed cycle"));
    }
    gens.push((start, current));
    let degree = gens
        .iter()
        .flat_map(|(_, g)| g.iter().flatten())
        .map(|&p| p as usize + 1)
        .max()
        .unwrap_or(1);
    let perms = gens
        .iter()
        .map(|(at, cycles)| {
            Perm::from_cycles(degree, cycles).map_err(|e| syntax(*at, e.to_string()))
        })
        .collect::<CliResult<Vec<_>>>()?;
    build(degree, perms, bound)
}

fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

fn rank_mod(mut m: Vec<Vec<u64>>, p: u64) -> usize {
    let n = m.len();
    let mut rank = 0;
    for col in 0..n {
        let Some(r) = (rank..n).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, r);
        let inv = (1..p).find(|&x| x * m[rank][col] % p == 1).unwrap();
        for row in 0..n {
            if row != rank && m[row][col] != 0 {
                let f = m[row][col] * inv % p;
                for c in 0..n {
                    m[row][c] = (m[row][c] + p * p - f * m[rank][c] % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `mat(p) [[a,b],[c,d]]; [[..]]`, converted to the right-regular action.
fn parse_matrices(text: &str, bound: usize) -> CliResult<PermGroup> {
    let close = text
        .find(')')
        .ok_or_else(|| syntax(3, "expected 'mat(p)'"))?;
    let p: u64 = text[4..close]
        .trim()
        .parse()
        .map_err(|_| syntax(4, "expected a prime modulus"))?;
    if !is_prime(p) || p > 1 << 16 {
        return Err(syntax(4, format!("modulus {p} is not a (small) prime")));
    }
    let mut mats: Vec<Vec<Vec<u64>>> = Vec::new();
    let mut offset = close + 1;
    for seg in text[close + 1..].split(';') {
        let rows: Vec<Vec<i64>> = serde_json::from_str(seg).map_err(|e| {
            let col = seg
                .lines()
                .take(e.line().saturating_sub(1))
                .map(|l| l.len() + 1)
                .sum::<usize>()
                + e.column().saturating_sub(1);
            syntax(offset + col, format!("bad matrix: {e}"))
        })?;
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(syntax(offset, "matrix must be square and nonempty"));
        }
        if mats.first().is_some_and(|m| m.len() != n) {
            return Err(syntax(offset, "matrices have different sizes"));
        }
        let m: Vec<Vec<u64>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect())
            .collect();
        if rank_mod(m.clone(), p) != n {
            return Err(syntax(offset, "matrix is singular"));
        }
        mats.push(m);
        offset += seg.len() + 1;
    }
    let n = mats[0].len();
    let flat = |m: &Vec<Vec<u64>>| m.concat();
    let mul = |a: &[u64], b: &[u64]| -> Vec<u64> {
        (0..n * n)
            .map(|ij| {
                let (i, j) = (ij / n, ij % n);
                (0..n).map(|k| a[i * n + k] * b[k * n + j] % p).sum::<u64>() % p
            })
            .collect()
    };
    let bound = bound.min(MATRIX_ORDER_BOUND);
    let gens: Vec<Vec<u64>> = mats.iter().map(flat).collect();
    let identity: Vec<u64> = (0..n * n).map(|ij| u64::from(ij / n == ij % n)).collect();
    let mut elements = vec![identity.clone()];
    let mut index: HashMap<Vec<u64>, usize> = HashMap::from([(identity, 0)]);
    let mut i = 0;
    while i < elements.len() {
        for s in &gens {
            let y = mul(&elements[i], s);
            if !index.contains_key(&y) {
                if elements.len() >= bound {
                    return Err(eigenone::Error::OrderBound { bound }.into());
                }
                index.insert(y.clone(), elements.len());
                elements.push(y);
            }
        }
        i += 1;
    }
    let perms = gens
        .iter()
        .map(|s| {
            let images = elements.iter().map(|x| index[&mul(x, s)] as u32).collect();
            Perm::from_images(images).map_err(CliError::from)
        })
        .collect::<CliResult<Vec<_>>>()?;
    build(elements.len(), perms, bound)
}
