#![allow(dead_code)]

use std::sync::Arc;

use eigenone::{CharacterTable, Perm, PermGroup};

pub fn group(degree: usize, gens: &[&str]) -> Arc<PermGroup> {
    Arc::new(
        PermGroup::generate(
            degree,
            gens.iter()
                .map(|g| Perm::parse_cycles(g, Some(degree)).unwrap())
                .collect(),
        )
        .unwrap(),
    )
}

pub fn table(g: &Arc<PermGroup>) -> CharacterTable {
    CharacterTable::compute(g.clone()).unwrap()
}

/// The extraspecial group of order 32 and plus type, as (D8 x D8) / <(z, z)>.
pub fn extraspecial_plus() -> Arc<PermGroup> {
    let d8d8 = group(8, &["(1,2,3,4)", "(1,3)", "(5,6,7,8)", "(5,7)"]);
    let zz = d8d8
        .index_of(&Perm::parse_cycles("(1,3)(2,4)(5,7)(6,8)", Some(8)).unwrap())
        .unwrap();
    let (q, _) = d8d8.quotient(&[0, zz]).unwrap();
    Arc::new(q)
}

pub fn elementary_abelian(p: usize, n: usize) -> Arc<PermGroup> {
    let gens: Vec<String> = (0..n)
        .map(|i| {
            let pts: Vec<String> = (1..=p).map(|j| (i * p + j).to_string()).collect();
            format!("({})", pts.join(","))
        })
        .collect();
    let refs: Vec<&str> = gens.iter().map(|s| s.as_str()).collect();
    group(p * n, &refs)
}
