//! Passing to the faithful quotient `G / ker chi`.

use std::sync::Arc;

use crate::characters::{CharacterTable, ClassFunction};
use crate::error::Result;
use crate::groups::PermGroup;

#[derive(Debug, Clone)]
pub struct Quotient {
    pub group: Arc<PermGroup>,
    /// Image in `group` of each element of the original group.
    pub projection: Vec<usize>,
    /// The descended character on the classes of `group`.
    pub character: ClassFunction,
    /// Whether the character was already faithful (then `group` is the original).
    pub faithful: bool,
}

/// `G / ker chi` as a permutation group on the right cosets of the kernel.
pub fn faithful_quotient(table: &CharacterTable, chi: &[crate::CycloElement]) -> Result<Quotient> {
    let g = table.group();
    let kernel = table.kernel(chi);
    if kernel.len() == 1 {
        return Ok(Quotient {
            group: g.clone(),
            projection: (0..g.order()).collect(),
            character: chi.to_vec(),
            faithful: true,
        });
    }
    let (q, projection) = g.quotient(&kernel)?;
    let q = Arc::new(q);
    let mut preimage = vec![usize::MAX; q.order()];
    for (x, &y) in projection.iter().enumerate() {
        if preimage[y] == usize::MAX {
            preimage[y] = x;
        }
    }
    let character = q
        .conjugacy_classes()
        .iter()
        .map(|c| table.value_at(chi, preimage[c.representative]))
        .collect();
    Ok(Quotient {
        group: q,
        projection,
        character,
        faithful: false,
    })
}
