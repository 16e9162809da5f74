use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use super::perm::Perm;
use crate::error::{Error, Result};

/// Default cap on the number of elements enumerated by [`PermGroup::generate`].
pub const DEFAULT_ORDER_BOUND: usize = 10_000;

/// Groups up to this order keep a full multiplication table.
const TABLE_LIMIT: usize = 2048;

/// A conjugacy class, stored by element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjClass {
    /// Index of the smallest member.
    pub representative: usize,
    pub size: usize,
    /// Sorted element indices.
    pub members: Vec<usize>,
}

#[derive(Debug)]
struct ClassData {
    classes: Vec<ConjClass>,
    class_of: Vec<usize>,
}

/// A finite permutation group with its complete, sorted element list.
///
/// Elements are addressed by their index in that list; index 0 is the identity.
pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    /// BFS parent: element = parent * gens[gen].
    parent: Vec<(usize, usize)>,
    inverse: Vec<usize>,
    orders: Vec<u32>,
    table: Option<Vec<u32>>,
    classes: OnceLock<ClassData>,
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("gens", &self.gens)
            .finish()
    }
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        PermGroup::generate_with_bound(self.degree, self.gens.clone(), usize::MAX)
            .expect("regenerating an existing group")
    }
}

impl PermGroup {
    pub fn generate(degree: usize, gens: Vec<Perm>) -> Result<Self> {
        Self::generate_with_bound(degree, gens, DEFAULT_ORDER_BOUND)
    }

    /// Enumerate the closure of `gens` on `degree` points, failing past `bound` elements.
    pub fn generate_with_bound(degree: usize, gens: Vec<Perm>, bound: usize) -> Result<Self> {
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::InvalidPerm(format!(
                    "generator {g} has degree {} but the group has degree {degree}",
                    g.degree()
                )));
            }
        }
        let id = Perm::identity(degree);
        let mut found: HashMap<Perm, usize> = HashMap::new();
        let mut list = vec![id.clone()];
        let mut parent = vec![(0usize, usize::MAX)];
        found.insert(id, 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for (gi, s) in gens.iter().enumerate() {
                let y = list[i].mul(s);
                if !found.contains_key(&y) {
                    if list.len() >= bound {
                        return Err(Error::OrderBound { bound });
                    }
                    found.insert(y.clone(), list.len());
                    list.push(y);
                    parent.push((i, gi));
                    queue.push_back(list.len() - 1);
                }
            }
        }
        // Sort lexicographically and re-index.
        let mut order: Vec<usize> = (0..list.len()).collect();
        order.sort_by(|&a, &b| list[a].cmp(&list[b]));
        let mut new_pos = vec![0; list.len()];
        for (pos, &old) in order.iter().enumerate() {
            new_pos[old] = pos;
        }
        let elements: Vec<Perm> = order.iter().map(|&o| list[o].clone()).collect();
        let parent: Vec<(usize, usize)> = order
            .iter()
            .map(|&o| {
                let (p, g) = parent[o];
                (new_pos[p], g)
            })
            .collect();
        let index: HashMap<Perm, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let inverse = elements.iter().map(|p| index[&p.inverse()]).collect();
        let orders = elements.iter().map(|p| p.order() as u32).collect();
        let n = elements.len();
        let table = (n <= TABLE_LIMIT).then(|| {
            let mut t = Vec::with_capacity(n * n);
            for a in &elements {
                for b in &elements {
                    t.push(index[&a.mul(b)] as u32);
                }
            }
            t
        });
        Ok(PermGroup {
            degree,
            gens,
            elements,
            index,
            parent,
            inverse,
            orders,
            table,
            classes: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        Self::generate(degree, Vec::new()).expect("trivial group")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    /// Generator positions in the element list.
    pub fn generator_indices(&self) -> Vec<usize> {
        self.gens.iter().map(|g| self.index[g]).collect()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.index.contains_key(p)
    }

    /// Index of `elements[a] * elements[b]`.
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.elements.len() + b] as usize,
            None => self.index[&self.elements[a].mul(&self.elements[b])],
        }
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn pow(&self, a: usize, e: i64) -> usize {
        let base = if e < 0 { self.inv(a) } else { a };
        let mut acc = 0;
        for _ in 0..e.unsigned_abs() % self.orders[a] as u64 {
            acc = self.mul(acc, base);
        }
        acc
    }

    /// `g x g^-1`.
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.orders[a] as usize
    }

    pub fn exponent(&self) -> usize {
        self.orders
            .iter()
            .fold(1usize, |acc, &o| num_integer::lcm(acc, o as usize))
    }

    /// A shortest word in the generators (generator indices, applied left to right).
    pub fn word(&self, mut i: usize) -> Vec<usize> {
        let mut w = Vec::new();
        while i != 0 {
            let (p, g) = self.parent[i];
            w.push(g);
            i = p;
        }
        w.reverse();
        w
    }

    pub fn word_string(&self, i: usize) -> String {
        if i == 0 {
            return "id".into();
        }
        self.word(i)
            .iter()
            .map(|g| format!("g{}", g + 1))
            .collect::<Vec<_>>()
            .join("*")
    }

    pub fn is_abelian(&self) -> bool {
        let gi = self.generator_indices();
        gi.iter()
            .all(|&a| gi.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    fn class_data(&self) -> &ClassData {
        self.classes.get_or_init(|| {
            let n = self.order();
            let gi = self.generator_indices();
            let mut class_of = vec![usize::MAX; n];
            let mut raw: Vec<Vec<usize>> = Vec::new();
            for start in 0..n {
                if class_of[start] != usize::MAX {
                    continue;
                }
                let id = raw.len();
                let mut members = vec![start];
                class_of[start] = id;
                let mut k = 0;
                while k < members.len() {
                    let x = members[k];
                    for &s in &gi {
                        let y = self.conjugate(x, s);
                        if class_of[y] == usize::MAX {
                            class_of[y] = id;
                            members.push(y);
                        }
                    }
                    k += 1;
                }
                members.sort_unstable();
                raw.push(members);
            }
            let mut perm: Vec<usize> = (0..raw.len()).collect();
            perm.sort_by_key(|&c| (raw[c].len(), raw[c][0]));
            let mut relabel = vec![0; raw.len()];
            for (new, &old) in perm.iter().enumerate() {
                relabel[old] = new;
            }
            let classes = perm
                .iter()
                .map(|&c| ConjClass {
                    representative: raw[c][0],
                    size: raw[c].len(),
                    members: raw[c].clone(),
                })
                .collect();
            let class_of = class_of.into_iter().map(|c| relabel[c]).collect();
            ClassData { classes, class_of }
        })
    }

    /// Conjugacy classes sorted by size, then by smallest member; identity first.
    pub fn conjugacy_classes(&self) -> &[ConjClass] {
        &self.class_data().classes
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.class_data().class_of[i]
    }

    pub fn class_count(&self) -> usize {
        self.conjugacy_classes().len()
    }

    pub fn centralizer_order(&self, g: &Perm) -> Result<usize> {
        let i = self.index_of(g).ok_or(Error::NotInGroup)?;
        Ok(self.centralizer_order_idx(i))
    }

    pub fn centralizer_order_idx(&self, i: usize) -> usize {
        self.order() / self.conjugacy_classes()[self.class_of(i)].size
    }

    pub fn center(&self) -> Vec<usize> {
        self.conjugacy_classes()
            .iter()
            .filter(|c| c.size == 1)
            .map(|c| c.representative)
            .collect()
    }

    /// Sorted element indices of the subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.order()];
        let mut out = vec![0];
        inside[0] = true;
        let mut k = 0;
        while k < out.len() {
            let x = out[k];
            for &s in gens {
                let y = self.mul(x, s);
                if !inside[y] {
                    inside[y] = true;
                    out.push(y);
                }
            }
            k += 1;
        }
        out.sort_unstable();
        out
    }

    /// A small generating set of the subgroup with the given (sorted) elements.
    pub fn generators_of(&self, subgroup: &[usize]) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut inside = vec![false; self.order()];
        inside[0] = true;
        for &x in subgroup {
            if inside[x] {
                continue;
            }
            gens.push(x);
            for y in self.closure(&gens) {
                inside[y] = true;
            }
        }
        gens
    }

    /// Normal closure of `set` in the subgroup generated by `within`.
    pub fn normal_closure(&self, set: &[usize], within: &[usize]) -> Vec<usize> {
        let mut gens: Vec<usize> = set.to_vec();
        let mut sub = self.closure(&gens);
        let mut member = vec![false; self.order()];
        for &x in &sub {
            member[x] = true;
        }
        loop {
            let mut added = false;
            let snapshot = gens.clone();
            for &x in &snapshot {
                for &w in within {
                    let y = self.conjugate(x, w);
                    if !member[y] {
                        gens.push(y);
                        sub = self.closure(&gens);
                        for &z in &sub {
                            member[z] = true;
                        }
                        added = true;
                    }
                }
            }
            if !added {
                return sub;
            }
        }
    }

    /// Commutator subgroup of the subgroup with the given elements.
    pub fn derived_subgroup_of(&self, subgroup: &[usize]) -> Vec<usize> {
        let gens = self.generators_of(subgroup);
        let mut comms = Vec::new();
        for &a in &gens {
            for &b in &gens {
                let c = self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b));
                if c != 0 {
                    comms.push(c);
                }
            }
        }
        self.normal_closure(&comms, &gens)
    }

    pub fn derived_series(&self) -> Vec<Vec<usize>> {
        let mut series = vec![(0..self.order()).collect::<Vec<_>>()];
        loop {
            let d = self.derived_subgroup_of(series.last().unwrap());
            if d.len() == series.last().unwrap().len() {
                return series;
            }
            let done = d.len() == 1;
            series.push(d);
            if done {
                return series;
            }
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().len() == 1
    }

    /// The subgroup on the given element indices as a standalone group.
    pub fn subgroup(&self, elements: &[usize]) -> Result<PermGroup> {
        let gens = self.generators_of(elements);
        let g = PermGroup::generate_with_bound(
            self.degree,
            gens.iter().map(|&i| self.elements[i].clone()).collect(),
            usize::MAX,
        )?;
        if g.order() != elements.len() {
            return Err(Error::NotSubgroup("element set is not closed".into()));
        }
        Ok(g)
    }

    /// Subgroup generated by the given permutations, which must lie in `self`.
    pub fn subgroup_from_gens(&self, gens: Vec<Perm>) -> Result<PermGroup> {
        for g in &gens {
            if !self.contains(g) {
                return Err(Error::NotSubgroup(format!("{g} is not in the group")));
            }
        }
        PermGroup::generate_with_bound(self.degree, gens, usize::MAX)
    }

    /// Element indices of `self` for the elements of the subgroup `h`.
    pub fn embed(&self, h: &PermGroup) -> Result<Vec<usize>> {
        h.elements()
            .iter()
            .map(|p| {
                self.index_of(p)
                    .ok_or_else(|| Error::NotSubgroup(format!("{p} is not in the group")))
            })
            .collect()
    }

    /// `G / N` acting on the right cosets of the normal subgroup `N`, with the
    /// projection of each element. Generators are the images of `G`'s generators.
    pub fn quotient(&self, normal: &[usize]) -> Result<(PermGroup, Vec<usize>)> {
        if !self.is_normal(normal) || self.closure(normal).len() != normal.len() {
            return Err(Error::NotSubgroup("not a normal subgroup".into()));
        }
        let mut coset = vec![usize::MAX; self.order()];
        let mut reps = Vec::new();
        for x in 0..self.order() {
            if coset[x] != usize::MAX {
                continue;
            }
            for &k in normal {
                coset[self.mul(k, x)] = reps.len();
            }
            reps.push(x);
        }
        let action = |x: usize| {
            Perm::from_images(reps.iter().map(|&r| coset[self.mul(r, x)] as u32).collect())
        };
        let gens = self
            .generator_indices()
            .iter()
            .map(|&s| action(s))
            .collect::<Result<Vec<_>>>()?;
        let q = PermGroup::generate_with_bound(reps.len(), gens, usize::MAX)?;
        let projection = (0..self.order())
            .map(|x| {
                let p = action(x)?;
                q.index_of(&p)
                    .ok_or_else(|| Error::Invariant("coset action leaves the quotient".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((q, projection))
    }

    pub fn is_normal(&self, subgroup: &[usize]) -> bool {
        let mut member = vec![false; self.order()];
        for &x in subgroup {
            member[x] = true;
        }
        let gi = self.generator_indices();
        subgroup
            .iter()
            .all(|&x| gi.iter().all(|&s| member[self.conjugate(x, s)]))
    }

    /// All normal subgroups, each as a sorted element list, sorted by order.
    pub fn normal_subgroups(&self) -> Vec<Vec<usize>> {
        let all: Vec<usize> = self.generator_indices();
        let classes = self.conjugacy_classes();
        let to_mask = |sub: &[usize]| -> Vec<bool> {
            let mut m = vec![false; classes.len()];
            for &x in sub {
                m[self.class_of(x)] = true;
            }
            m
        };
        let mut found: Vec<(Vec<bool>, Vec<usize>)> = Vec::new();
        let push = |sub: Vec<usize>, found: &mut Vec<(Vec<bool>, Vec<usize>)>| -> bool {
            let m = to_mask(&sub);
            if found.iter().any(|(f, _)| *f == m) {
                false
            } else {
                found.push((m, sub));
                true
            }
        };
        push(vec![0], &mut found);
        let mut basic = Vec::new();
        for c in classes.iter().skip(1) {
            let n = self.normal_closure(&[c.representative], &all);
            if push(n.clone(), &mut found) {
                basic.push(n);
            }
        }
        // Joins of class closures give every normal subgroup.
        let mut k = 1;
        while k < found.len() {
            let current = found[k].1.clone();
            for b in &basic {
                let mut gens = self.generators_of(&current);
                gens.extend(self.generators_of(b));
                let j = self.closure(&gens);
                push(j, &mut found);
            }
            k += 1;
        }
        let mut subs: Vec<Vec<usize>> = found.into_iter().map(|(_, s)| s).collect();
        subs.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        subs
    }

    /// Minimal nontrivial normal subgroups.
    pub fn minimal_normal_subgroups(&self) -> Vec<Vec<usize>> {
        let normals = self.normal_subgroups();
        let nontrivial: Vec<&Vec<usize>> = normals.iter().filter(|n| n.len() > 1).collect();
        nontrivial
            .iter()
            .filter(|n| {
                !nontrivial
                    .iter()
                    .any(|m| m.len() < n.len() && n.len() % m.len() == 0 && is_subset(m, n))
            })
            .map(|n| (*n).clone())
            .collect()
    }
}

/// Whether sorted `a` is contained in sorted `b`.
pub fn is_subset(a: &[usize], b: &[usize]) -> bool {
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
    }
    true
}
