//! The group generated by the inner automorphisms of `G` together with one
//! further automorphism `nu`.

use std::sync::Arc;

use super::aut::Automorphism;
use super::group::PermGroup;
use super::perm::Perm;
use crate::error::Result;

#[derive(Debug, Clone)]
pub struct ExtendedGroup {
    base: Arc<PermGroup>,
    nu: Automorphism,
    nu_order: usize,
}

impl ExtendedGroup {
    pub fn new(base: Arc<PermGroup>, nu: Automorphism) -> Self {
        let nu_order = nu.order();
        ExtendedGroup { base, nu, nu_order }
    }

    pub fn base(&self) -> &PermGroup {
        &self.base
    }

    pub fn nu(&self) -> &Automorphism {
        &self.nu
    }

    /// Order of `nu` in `Aut(G)`.
    pub fn nu_order(&self) -> usize {
        self.nu_order
    }

    /// `alpha_g = ad_g . nu`, i.e. `x -> g nu(x) g^-1`.
    pub fn coset_element(&self, g: usize) -> Automorphism {
        self.nu.then_inner(&self.base, g)
    }

    /// Smallest `i > 0` with `nu^i` inner.
    pub fn outer_order(&self) -> usize {
        let mut p = self.nu.clone();
        for i in 1..=self.nu_order {
            if p.inner_witness(&self.base).is_some() {
                return i;
            }
            p = p.then(&self.nu);
        }
        self.nu_order
    }

    /// `|<Inn(G), nu>| = |G/Z(G)| * k'` with `k'` the order of `nu` modulo `Inn(G)`.
    pub fn image_order(&self) -> usize {
        self.base.order() / self.base.center().len() * self.outer_order()
    }

    /// Number of cosets of `Inn(G)` in the extended group.
    pub fn coset_count(&self) -> usize {
        self.outer_order()
    }

    /// The concrete carrier on the `|G|` element points: right translations by
    /// the generators of `G` together with `nu`, so its elements act as
    /// `x -> nu^i(x) g`.
    pub fn carrier(&self) -> Result<PermGroup> {
        let g = &self.base;
        let n = g.order();
        let mut gens: Vec<Perm> = g
            .generator_indices()
            .iter()
            .map(|&s| Perm::from_images((0..n).map(|x| g.mul(x, s) as u32).collect()))
            .collect::<Result<_>>()?;
        gens.push(Perm::from_images(
            self.nu.map().iter().map(|&x| x as u32).collect(),
        )?);
        PermGroup::generate_with_bound(n, gens, usize::MAX)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::aut::automorphism_group;

    fn grp(degree: usize, gens: &[&str]) -> Arc<PermGroup> {
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

    #[test]
    fn inversion_on_c3_gives_s3() {
        let c3 = grp(3, &["(1,2,3)"]);
        let inv = Automorphism::from_map(&c3, (0..3).map(|i| c3.inv(i)).collect()).unwrap();
        let eg = ExtendedGroup::new(c3.clone(), inv);
        let carrier = eg.carrier().unwrap();
        assert_eq!(carrier.order(), 6);
        assert!(!carrier.is_abelian());
        // Inn(C3) is trivial, so <Inn, nu> is just <nu>.
        assert_eq!(eg.image_order(), 2);
        // every coset element alpha_g is an involution
        assert!((0..3).all(|g| eg.coset_element(g).order() == 2));
    }

    #[test]
    fn three_cycle_on_klein_four_gives_a4() {
        let v4 = grp(4, &["(1,2)(3,4)", "(1,3)(2,4)"]);
        let nu = automorphism_group(&v4)
            .unwrap()
            .into_iter()
            .find(|a| a.order() == 3)
            .unwrap();
        let eg = ExtendedGroup::new(v4, nu);
        let carrier = eg.carrier().unwrap();
        assert_eq!(carrier.order(), 12);
        assert_eq!(carrier.class_count(), 4);
    }

    #[test]
    fn identity_extension() {
        let s3 = grp(3, &["(1,2)", "(1,2,3)"]);
        let eg = ExtendedGroup::new(s3.clone(), Automorphism::identity(&s3));
        assert_eq!(eg.coset_count(), 1);
        assert_eq!(eg.image_order(), 6);
    }
}
