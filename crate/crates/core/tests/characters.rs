mod common;

use eigenone::characters::{parabolic_odd_constituent, restrict};
use eigenone::{CycloElement, Perm};

use common::*;

fn idx(g: &eigenone::PermGroup, cycles: &str) -> usize {
    g.index_of(&Perm::parse_cycles(cycles, Some(g.degree())).unwrap())
        .unwrap()
}

#[test]
fn borel_of_pgl2_3_has_sign_constituent() {
    // PGL2(3) on the projective line is S4; the Borel is the stabiliser of a point.
    let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
    let borel = group(4, &["(1,2)", "(1,2,3)"]);
    let tg = table(&s4);
    let tp = table(&borel);
    let k = borel.closure(&[idx(&borel, "(1,2,3)")]);
    for chi in tg.odd_real_nontrivial().unwrap() {
        let (lambda, mult) = parabolic_odd_constituent(&tg, chi, &tp, &k, true)
            .unwrap()
            .unwrap();
        assert_eq!(tp.degree(lambda), 1);
        assert_eq!(mult % 2, 1);
    }
}

#[test]
fn sylow_parabolic_with_trivial_kernel() {
    let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
    let d8 = group(4, &["(1,2,3,4)", "(1,3)"]);
    let tg = table(&s4);
    let tp = table(&d8);
    for chi in tg.odd_real_nontrivial().unwrap() {
        let found = parabolic_odd_constituent(&tg, chi, &tp, &[0], false).unwrap();
        assert!(found.is_some());
    }
}

#[test]
fn parabolic_equal_to_group() {
    let a5 = group(5, &["(1,2,3)", "(1,2,3,4,5)"]);
    let t = table(&a5);
    for chi in t.odd_real_nontrivial().unwrap() {
        assert_eq!(
            parabolic_odd_constituent(&t, chi, &t, &[0], false).unwrap(),
            Some((chi, 1))
        );
    }
    let two = (0..t.len()).find(|&i| t.degree(i) == 4).unwrap();
    assert!(parabolic_odd_constituent(&t, two, &t, &[0], false).is_err());
}

#[test]
fn s3_two_dimensional_restricted_to_c3() {
    let s3 = group(3, &["(1,2)", "(1,2,3)"]);
    let c3 = group(3, &["(1,2,3)"]);
    let (ts, tc) = (table(&s3), table(&c3));
    let r = restrict(&ts, ts.character(2), &tc).unwrap();
    assert_eq!(r.multiplicities, vec![0, 1, 1]);
    let r = restrict(&ts, ts.character(0), &tc).unwrap();
    assert_eq!(r.multiplicities, vec![1, 0, 0]);
    let r = restrict(&ts, ts.character(2), &ts).unwrap();
    assert_eq!(r.multiplicities, vec![0, 0, 1]);
}

#[test]
fn tables_of_assorted_groups() {
    let groups = [
        group(4, &["(1,2,3,4)", "(1,3)"]),
        group(8, &["(1,2,4,7)(3,6,8,5)", "(1,3,4,8)(2,5,7,6)"]),
        group(4, &["(1,2,3)", "(2,3,4)"]),
        group(5, &["(1,2,3,4,5)", "(1,2)"]),
        group(6, &["(1,2,3)", "(1,2)", "(4,5,6)", "(4,5)"]),
        group(7, &["(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"]),
        extraspecial_plus(),
    ];
    for g in &groups {
        let t = table(g);
        t.verify().unwrap();
        let real_classes = g
            .conjugacy_classes()
            .iter()
            .enumerate()
            .filter(|(c, _)| t.inverse_class(*c) == *c)
            .count();
        let real_chars = (0..t.len()).filter(|&i| t.is_real(i)).count();
        assert_eq!(real_chars, real_classes);
        for i in 0..t.len() {
            let ind = t.fs_indicator(i);
            assert_eq!(ind != 0, t.is_real(i));
            assert_eq!(
                t.inner_product(t.character(i), t.character(i)),
                CycloElement::one()
            );
        }
    }
}

#[test]
fn table_from_rows_rejects_corruption() {
    let s3 = group(3, &["(1,2)", "(1,2,3)"]);
    let t = table(&s3);
    let mut rows = t.irr().to_vec();
    assert!(eigenone::CharacterTable::from_rows(s3.clone(), rows.clone()).is_ok());
    rows[2][1] = CycloElement::from_int(1);
    assert!(eigenone::CharacterTable::from_rows(s3, rows).is_err());
}
