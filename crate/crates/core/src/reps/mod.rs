//! Real matrix representations affording given characters.

mod quotient;
mod rep;

pub use quotient::{faithful_quotient, Quotient};
pub use rep::{
    build_irreducible_rep, build_irreducible_rep_bounded, determinants_are_roots_of_unity,
    endomorphism_dimension, verify_rep, MatrixRep, RepCertificate, DEFAULT_REP_BOUND,
};

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::characters::CharacterTable;
    use crate::exact::{Field, Matrix, RealCyclo};
    use crate::groups::{Perm, PermGroup};
    use crate::CycloElement;

    fn table(degree: usize, gens: &[&str]) -> CharacterTable {
        let g = PermGroup::generate(
            degree,
            gens.iter()
                .map(|g| Perm::parse_cycles(g, Some(degree)).unwrap())
                .collect(),
        )
        .unwrap();
        CharacterTable::compute(Arc::new(g)).unwrap()
    }

    #[test]
    fn trivial_and_sign() {
        let c2 = table(2, &["(1,2)"]);
        let triv = build_irreducible_rep(&c2, 0, 0).unwrap();
        assert_eq!(triv.gen_matrices()[0], Matrix::identity(1));
        let sign = build_irreducible_rep(&c2, 1, 0).unwrap();
        assert_eq!(
            sign.gen_matrices()[0],
            Matrix::scalar(1, RealCyclo::from_int(-1))
        );
    }

    #[test]
    fn s3_two_dimensional() {
        let s3 = table(3, &["(1,2)", "(1,2,3)"]);
        let rep = build_irreducible_rep(&s3, 2, 0).unwrap();
        assert_eq!(rep.dim(), 2);
        let cert = verify_rep(&rep, &s3, 2, 0);
        assert!(cert.is_valid());
        let g = s3.group();
        for (c, cl) in g.conjugacy_classes().iter().enumerate() {
            assert_eq!(
                rep.image(cl.representative).trace().unwrap().value(),
                &s3.character(2)[c]
            );
        }
        assert!(determinants_are_roots_of_unity(&rep).unwrap());
    }

    #[test]
    fn corrupted_matrix_is_rejected() {
        let s3 = table(3, &["(1,2)", "(1,2,3)"]);
        let rep = build_irreducible_rep(&s3, 2, 0).unwrap();
        let mut gens = rep.gen_matrices().to_vec();
        let v = gens[0].get(0, 0).add(&RealCyclo::one());
        gens[0].set(0, 0, v);
        let bad = MatrixRep::from_generators(s3.group().clone(), gens).unwrap();
        let cert = verify_rep(&bad, &s3, 2, 0);
        assert!(!cert.homomorphism_checked);
        assert!(!cert.is_valid());
    }

    #[test]
    fn a5_odd_characters() {
        let a5 = table(5, &["(1,2,3)", "(1,2,3,4,5)"]);
        for chi in a5.odd_real_nontrivial().unwrap() {
            let rep = build_irreducible_rep(&a5, chi, 7).unwrap();
            assert_eq!(rep.dim(), a5.degree(chi));
            assert!(rep
                .gen_matrices()
                .iter()
                .flat_map(|m| m.entries())
                .all(|x| x.value().is_real()));
        }
    }

    #[test]
    fn quotient_of_c6() {
        let c6 = table(6, &["(1,2,3,4,5,6)"]);
        // a character with kernel of order 2 has order 3 on the generator
        let chi = c6
            .irr()
            .iter()
            .find(|c| c6.kernel(c).len() == 2)
            .unwrap()
            .clone();
        let q = faithful_quotient(&c6, &chi).unwrap();
        assert_eq!(q.group.order(), 3);
        assert!(!q.faithful);
        let faithful = c6.irr().iter().find(|c| c6.kernel(c).len() == 1).unwrap();
        assert_eq!(faithful_quotient(&c6, faithful).unwrap().group.order(), 6);
        let triv = faithful_quotient(&c6, c6.character(0)).unwrap();
        assert_eq!(triv.group.order(), 1);
        assert_eq!(triv.character, vec![CycloElement::one()]);
    }
}
