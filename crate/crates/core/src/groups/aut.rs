//! Automorphisms, isomorphism search and characteristic structure.

use std::collections::BTreeMap;
use std::fmt;

use super::group::PermGroup;
use super::perm::Perm;
use crate::error::{Error, Result};

/// Default largest group order for which the full automorphism group is searched.
pub const DEFAULT_AUT_BOUND: usize = 720;

/// An automorphism of a specific [`PermGroup`], stored as a map on element indices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Automorphism {
    map: Vec<usize>,
}

impl fmt::Debug for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Automorphism({:?})", self.map)
    }
}

/// Extend generator images to a homomorphism on the subgroup generated by
/// `src_gens`, or `None` if the assignment is inconsistent or not injective.
/// Returns the map with `usize::MAX` outside that subgroup.
fn extend_injective(
    src: &PermGroup,
    src_gens: &[usize],
    dst: &PermGroup,
    imgs: &[usize],
) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; src.order()];
    let mut used = vec![false; dst.order()];
    map[0] = 0;
    used[0] = true;
    let mut queue = vec![0usize];
    let mut k = 0;
    while k < queue.len() {
        let x = queue[k];
        k += 1;
        for (&s, &t) in src_gens.iter().zip(imgs) {
            let y = src.mul(x, s);
            let img = dst.mul(map[x], t);
            if map[y] == usize::MAX {
                if used[img] {
                    return None;
                }
                used[img] = true;
                map[y] = img;
                queue.push(y);
            } else if map[y] != img {
                return None;
            }
        }
    }
    Some(map)
}

/// Element invariant preserved by isomorphisms.
fn invariant(g: &PermGroup, i: usize) -> (usize, usize) {
    (g.element_order(i), g.centralizer_order_idx(i))
}

/// A generating set chosen so that each generator has few candidate images.
fn search_generators(g: &PermGroup) -> Vec<usize> {
    let mut counts: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for i in 0..g.order() {
        *counts.entry(invariant(g, i)).or_default() += 1;
    }
    let mut cands: Vec<usize> = (1..g.order()).collect();
    // Prefer rare invariants, then high element order.
    cands.sort_by_key(|&i| {
        (
            counts[&invariant(g, i)],
            std::cmp::Reverse(g.element_order(i)),
            i,
        )
    });
    let mut gens = Vec::new();
    let mut inside = vec![false; g.order()];
    inside[0] = true;
    let mut size = 1;
    for i in cands {
        if size == g.order() {
            break;
        }
        if inside[i] {
            continue;
        }
        gens.push(i);
        let sub = g.closure(&gens);
        size = sub.len();
        for y in sub {
            inside[y] = true;
        }
    }
    gens
}

/// Backtracking search for injective homomorphisms `src -> dst` that are
/// bijective; calls `found` for each and stops when it returns `false`.
fn search_isomorphisms(
    src: &PermGroup,
    dst: &PermGroup,
    mut found: impl FnMut(Vec<usize>) -> bool,
) {
    if src.order() != dst.order() {
        return;
    }
    let gens = search_generators(src);
    let cands: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| {
            let inv = invariant(src, s);
            (0..dst.order())
                .filter(|&t| invariant(dst, t) == inv)
                .collect()
        })
        .collect();
    let mut imgs = Vec::with_capacity(gens.len());
    fn rec(
        src: &PermGroup,
        dst: &PermGroup,
        gens: &[usize],
        cands: &[Vec<usize>],
        imgs: &mut Vec<usize>,
        found: &mut dyn FnMut(Vec<usize>) -> bool,
    ) -> bool {
        let j = imgs.len();
        if j == gens.len() {
            let map = extend_injective(src, gens, dst, imgs).expect("checked at previous level");
            return found(map);
        }
        for &c in &cands[j] {
            imgs.push(c);
            let ok = extend_injective(src, &gens[..=j], dst, imgs).is_some();
            if ok && !rec(src, dst, gens, cands, imgs, found) {
                imgs.pop();
                return false;
            }
            imgs.pop();
        }
        true
    }
    if gens.is_empty() {
        found(vec![0]);
        return;
    }
    rec(src, dst, &gens, &cands, &mut imgs, &mut found);
}

/// An isomorphism `src -> dst` as a map on element indices, if one exists.
pub fn find_isomorphism(src: &PermGroup, dst: &PermGroup) -> Option<Vec<usize>> {
    let mut out = None;
    search_isomorphisms(src, dst, |m| {
        out = Some(m);
        false
    });
    out
}

impl Automorphism {
    pub fn identity(g: &PermGroup) -> Self {
        Automorphism {
            map: (0..g.order()).collect(),
        }
    }

    /// Validate a full element map as a bijective homomorphism.
    pub fn from_map(g: &PermGroup, map: Vec<usize>) -> Result<Self> {
        if map.len() != g.order() {
            return Err(Error::InvalidAutomorphism(
                "map has the wrong length".into(),
            ));
        }
        let gi = g.generator_indices();
        let imgs: Vec<usize> = gi.iter().map(|&s| map[s]).collect();
        match extend_injective(g, &gi, g, &imgs) {
            Some(m) if m == map => Ok(Automorphism { map }),
            _ => Err(Error::InvalidAutomorphism(
                "not a bijective homomorphism".into(),
            )),
        }
    }

    /// The automorphism sending the i-th group generator to `images[i]`.
    pub fn from_generator_images(g: &PermGroup, images: &[Perm]) -> Result<Self> {
        if images.len() != g.generators().len() {
            return Err(Error::InvalidAutomorphism(format!(
                "expected {} generator images, got {}",
                g.generators().len(),
                images.len()
            )));
        }
        let imgs = images
            .iter()
            .map(|p| {
                g.index_of(p)
                    .ok_or_else(|| Error::InvalidAutomorphism(format!("{p} is not in the group")))
            })
            .collect::<Result<Vec<_>>>()?;
        let map = extend_injective(g, &g.generator_indices(), g, &imgs).ok_or_else(|| {
            Error::InvalidAutomorphism("generator images do not define an automorphism".into())
        })?;
        Ok(Automorphism { map })
    }

    /// `x -> h x h^-1`.
    pub fn inner(g: &PermGroup, h: usize) -> Self {
        Automorphism {
            map: (0..g.order()).map(|x| g.conjugate(x, h)).collect(),
        }
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn generator_images(&self, g: &PermGroup) -> Vec<Perm> {
        g.generator_indices()
            .iter()
            .map(|&s| g.element(self.map[s]).clone())
            .collect()
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            map: self.map.iter().map(|&x| other.map[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Automorphism {
        let mut map = vec![0; self.map.len()];
        for (i, &x) in self.map.iter().enumerate() {
            map[x] = i;
        }
        Automorphism { map }
    }

    pub fn pow(&self, e: usize) -> Automorphism {
        let mut acc = Automorphism {
            map: (0..self.map.len()).collect(),
        };
        for _ in 0..e {
            acc = acc.then(self);
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn order(&self) -> usize {
        let mut seen = vec![false; self.map.len()];
        let mut ord = 1;
        for s in 0..self.map.len() {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut p = s;
            while !seen[p] {
                seen[p] = true;
                p = self.map[p];
                len += 1;
            }
            ord = num_integer::lcm(ord, len);
        }
        ord
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.map.len()).filter(|&i| self.map[i] == i).collect()
    }

    /// Some `h` with `self = ad_h`, if the automorphism is inner.
    pub fn inner_witness(&self, g: &PermGroup) -> Option<usize> {
        let gi = g.generator_indices();
        (0..g.order()).find(|&h| gi.iter().all(|&s| g.conjugate(s, h) == self.map[s]))
    }

    /// Canonical key of the coset `Inn(G) self`: the smallest generator-image
    /// tuple of `ad_h . self` over all `h`, and the `h` attaining it.
    fn inner_coset_key(&self, g: &PermGroup) -> (Vec<usize>, usize) {
        let gi = g.generator_indices();
        (0..g.order())
            .map(|h| {
                (
                    gi.iter()
                        .map(|&s| g.conjugate(self.map[s], h))
                        .collect::<Vec<_>>(),
                    h,
                )
            })
            .min()
            .expect("nonempty group")
    }

    /// The automorphism `x -> h self(x) h^-1`.
    pub fn then_inner(&self, g: &PermGroup, h: usize) -> Automorphism {
        Automorphism {
            map: self.map.iter().map(|&x| g.conjugate(x, h)).collect(),
        }
    }
}

/// Every automorphism of `g`, sorted by element map.
pub fn automorphism_group(g: &PermGroup) -> Result<Vec<Automorphism>> {
    automorphism_group_bounded(g, DEFAULT_AUT_BOUND)
}

pub fn automorphism_group_bounded(g: &PermGroup, bound: usize) -> Result<Vec<Automorphism>> {
    if g.order() > bound {
        return Err(Error::AutomorphismBound {
            bound,
            order: g.order(),
        });
    }
    let mut out = Vec::new();
    search_isomorphisms(g, g, |map| {
        out.push(Automorphism { map });
        true
    });
    out.sort();
    Ok(out)
}

/// `{x : alpha(x) = x}` as a group.
pub fn fixed_subgroup(g: &PermGroup, alpha: &Automorphism) -> Result<PermGroup> {
    g.subgroup(&alpha.fixed_points())
}

/// One automorphism per `Inn(G)`-coset among those fixing the class function
/// `chi` (values indexed by class). The inner class comes first, represented
/// by the identity; other representatives are canonical within their coset.
pub fn outer_classes_fixing_char<T: PartialEq>(
    g: &PermGroup,
    auts: &[Automorphism],
    chi: &[T],
) -> Vec<Automorphism> {
    let classes = g.conjugacy_classes();
    let fixes = |a: &Automorphism| {
        classes
            .iter()
            .enumerate()
            .all(|(c, cl)| chi[g.class_of(a.apply(cl.representative))] == chi[c])
    };
    let mut reps: BTreeMap<Vec<usize>, Automorphism> = BTreeMap::new();
    for a in auts {
        if !fixes(a) {
            continue;
        }
        if a.inner_witness(g).is_some() {
            continue;
        }
        let (key, h) = a.inner_coset_key(g);
        reps.entry(key).or_insert_with(|| a.then_inner(g, h));
    }
    let mut out = vec![Automorphism::identity(g)];
    out.extend(reps.into_values());
    out
}

/// Characteristic subgroups and characteristic simplicity.
#[derive(Debug)]
pub struct CharStructure {
    /// Proper nontrivial characteristic subgroups (sorted element indices), by order.
    pub characteristic: Vec<Vec<usize>>,
    /// Whether `characteristic` lists all of them (false when no automorphism list was given).
    pub complete: bool,
    pub char_simple: bool,
    /// `G = L x ... x L` with `L` simple, when `G` is characteristically simple.
    pub direct_power: Option<(PermGroup, usize)>,
}

fn image_of(alpha: &Automorphism, sub: &[usize]) -> Vec<usize> {
    let mut v: Vec<usize> = sub.iter().map(|&x| alpha.apply(x)).collect();
    v.sort_unstable();
    v
}

/// Characteristic structure of `g`. Without `auts`, only subgroups that are
/// characteristic by construction (centre, derived series, socle) are listed.
pub fn characteristic_structure(
    g: &PermGroup,
    auts: Option<&[Automorphism]>,
) -> Result<CharStructure> {
    let n = g.order();
    let minimal = g.minimal_normal_subgroups();
    let direct_power = if n == 1 {
        None
    } else {
        direct_power_decomposition(g, &minimal)?
    };
    let (characteristic, complete) = match auts {
        Some(auts) => {
            let chars = g
                .normal_subgroups()
                .into_iter()
                .filter(|s| s.len() > 1 && s.len() < n)
                .filter(|s| auts.iter().all(|a| image_of(a, s) == *s))
                .collect::<Vec<_>>();
            (chars, true)
        }
        None => {
            let mut chars: Vec<Vec<usize>> = Vec::new();
            let mut add = |s: Vec<usize>| {
                if s.len() > 1 && s.len() < n && !chars.contains(&s) {
                    chars.push(s);
                }
            };
            add(g.center());
            for d in g.derived_series() {
                add(d);
            }
            let mut socle_gens = Vec::new();
            for m in &minimal {
                socle_gens.extend(g.generators_of(m));
            }
            add(g.closure(&socle_gens));
            chars.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
            (chars, false)
        }
    };
    let char_simple = if complete {
        n > 1 && characteristic.is_empty()
    } else {
        direct_power.is_some()
    };
    Ok(CharStructure {
        characteristic,
        complete,
        char_simple,
        direct_power: if char_simple { direct_power } else { None },
    })
}

/// `G = T^k` with `T` simple, from the minimal normal subgroups.
fn direct_power_decomposition(
    g: &PermGroup,
    minimal: &[Vec<usize>],
) -> Result<Option<(PermGroup, usize)>> {
    let n = g.order();
    if g.is_abelian() {
        // Elementary abelian iff every nontrivial element has the same prime order.
        let p = g.element_order(1);
        let prime = p > 1 && (2..p).all(|d| !p.is_multiple_of(d));
        if prime && (1..n).all(|i| g.element_order(i) == p) {
            let k = (n as f64).log(p as f64).round() as usize;
            let first = g.subgroup(&g.closure(&[1]))?;
            return Ok(Some((first, k)));
        }
        return Ok(None);
    }
    if minimal.iter().any(|m| {
        let sub = g.subgroup(m).expect("normal subgroup");
        sub.is_abelian()
    }) {
        return Ok(None);
    }
    let total: usize = minimal.iter().map(|m| m.len()).product();
    if total != n {
        return Ok(None);
    }
    let first = g.subgroup(&minimal[0])?;
    if first.normal_subgroups().len() != 2 {
        return Ok(None);
    }
    for m in &minimal[1..] {
        let other = g.subgroup(m)?;
        if find_isomorphism(&first, &other).is_none() {
            return Ok(None);
        }
    }
    Ok(Some((first, minimal.len())))
}
