mod common;

use eigenone::e1::{
    check_group, check_triple, cor4_certificate, default_characters, prop2_certificate,
    restriction_strategy, solve_intertwiner, Method, Mode, Options, Status,
};
use eigenone::exact::{Matrix, RealCyclo};
use eigenone::groups::{automorphism_group, outer_classes_fixing_char, ExtendedGroup};
use eigenone::reps::{build_irreducible_rep, MatrixRep};
use eigenone::{Automorphism, CharacterTable};
use nalgebra::DMatrix;

use common::*;

fn validate() -> Options {
    Options {
        mode: Mode::Validate,
        ..Options::default()
    }
}

#[test]
fn trivial_module_fails_for_minus_identity() {
    let c2 = group(2, &["(1,2)"]);
    let t = table(&c2);
    let rep = MatrixRep::from_generators(c2.clone(), vec![Matrix::identity(1)]).unwrap();
    let it = solve_intertwiner(&rep, &Automorphism::identity(&c2), t.character(0), 0).unwrap();
    assert_eq!((it.k, it.lambda.clone()), (1, RealCyclo::from_int(1)));
    assert!(check_triple(&rep, &it, 1).unwrap().holds());
    let minus = check_triple(&rep, &it, -1).unwrap();
    assert!(!minus.holds());
    assert_eq!(minus.scanned, 2);
}

#[test]
fn sign_of_c2_holds_with_generator_witness() {
    let c2 = group(2, &["(1,2)"]);
    let t = table(&c2);
    let rep = build_irreducible_rep(&t, 1, 0).unwrap();
    let it = solve_intertwiner(&rep, &Automorphism::identity(&c2), t.character(1), 0).unwrap();
    let scan = check_triple(&rep, &it, -1).unwrap();
    assert_eq!(scan.witness, Some(c2.generator_indices()[0]));
    let v = check_group(&t, &validate()).unwrap();
    assert_eq!(v.overall, Status::Holds);
    assert_eq!(v.characters.len(), 1);
}

#[test]
fn s3_sign_both_signs() {
    let s3 = group(3, &["(1,2)", "(1,2,3)"]);
    let t = table(&s3);
    let v = check_group(&t, &validate()).unwrap();
    assert_eq!(v.overall, Status::Holds);
    assert!(v.characters[0]
        .nu_classes
        .iter()
        .all(|x| x.status == Status::Holds));
    assert_eq!(v.characters[0].nu_classes.len(), 2);
}

#[test]
fn elementary_abelian_groups() {
    for n in 1..=4 {
        let g = elementary_abelian(2, n);
        let v = check_group(&table(&g), &Options::default()).unwrap();
        assert_eq!(v.overall, Status::Holds, "C2^{n}");
    }
    let g = elementary_abelian(3, 3);
    let t = table(&g);
    assert!(default_characters(&t, false).unwrap().is_empty());
    assert_eq!(
        check_group(&t, &Options::default()).unwrap().overall,
        Status::Holds
    );
}

#[test]
fn a5_holds_with_cor4_everywhere() {
    let a5 = group(5, &["(1,2,3)", "(1,2,3,4,5)"]);
    let t = table(&a5);
    let v = check_group(&t, &validate()).unwrap();
    assert_eq!(v.overall, Status::Holds);
    let degrees: Vec<usize> = v.characters.iter().map(|c| c.degree).collect();
    assert_eq!(degrees, vec![3, 3, 5]);
    for c in &v.characters {
        for task in &c.nu_classes {
            let val = task.validation.as_ref().unwrap();
            assert!(val.agree);
            assert!(val.certificates.contains(&Method::Cor4));
        }
    }
}

/// Floating-point test whether `rho(g) n` (with `n = scale * m`) has eigenvalue
/// one, via the smallest singular value of `rho(g) n - 1`.
fn has_float_eigenvalue_one(a: &Matrix<RealCyclo>, scale: f64) -> bool {
    let d = a.rows();
    let m = DMatrix::from_fn(d, d, |i, j| a.get(i, j).to_f64() * scale) - DMatrix::identity(d, d);
    m.singular_values().min() < 1e-9
}

#[test]
fn extraspecial_plus_fails_in_degree_four() {
    let g = extraspecial_plus();
    assert_eq!(g.order(), 32);
    let t = table(&g);
    let chi = (0..t.len()).find(|&i| t.degree(i) == 4).unwrap();
    assert_eq!(t.fs_indicator(chi), 1);
    let opts = Options {
        pairs_even_ok: true,
        ..Options::default()
    };
    let v = eigenone::e1::check_characters(&t, &[chi], &opts, None).unwrap();
    assert_eq!(v.overall, Status::Fails);
    let failing: Vec<_> = v.characters[0]
        .nu_classes
        .iter()
        .filter(|x| x.status == Status::Fails)
        .collect();
    assert!(!failing.is_empty());

    // independent rescan in floating point
    let rep = build_irreducible_rep(&t, chi, 0).unwrap();
    let auts = automorphism_group(&g).unwrap();
    let nus = outer_classes_fixing_char(&g, &auts, t.character(chi));
    let mut float_failures = 0;
    for nu in &nus {
        let it = solve_intertwiner(&rep, nu, t.character(chi), 0).unwrap();
        let s = it.lambda.to_f64().abs().powf(-1.0 / it.k as f64);
        for sign in [1.0, -1.0] {
            let exact = check_triple(&rep, &it, sign as i8).unwrap().holds();
            let float = (0..g.order())
                .any(|x| has_float_eigenvalue_one(&rep.image(x).mul(&it.m).unwrap(), sign * s));
            assert_eq!(exact, float);
            if !float {
                float_failures += 1;
            }
        }
    }
    assert_eq!(float_failures, failing.len());
}

#[test]
fn verdict_independent_of_seed() {
    let g = extraspecial_plus();
    let t = table(&g);
    let chi = (0..t.len()).find(|&i| t.degree(i) == 4).unwrap();
    let run = |seed| {
        let opts = Options {
            pairs_even_ok: true,
            seed,
            ..Options::default()
        };
        let v = eigenone::e1::check_characters(&t, &[chi], &opts, None).unwrap();
        v.characters[0]
            .nu_classes
            .iter()
            .map(|x| x.status)
            .collect::<Vec<_>>()
    };
    assert_eq!(run(0), run(17));
}

#[test]
fn cor4_on_inverted_c3() {
    let c3 = group(3, &["(1,2,3)"]);
    let inv = Automorphism::from_map(&c3, (0..3).map(|i| c3.inv(i)).collect()).unwrap();
    assert!(cor4_certificate(&ExtendedGroup::new(c3.clone(), inv)).is_some());
    assert!(
        cor4_certificate(&ExtendedGroup::new(c3.clone(), Automorphism::identity(&c3))).is_none()
    );
}

#[test]
fn prop2_on_a5_involution() {
    let a5 = group(5, &["(1,2,3)", "(1,2,3,4,5)"]);
    let t = table(&a5);
    let chi = t.odd_real_nontrivial().unwrap()[0];
    let rep = build_irreducible_rep(&t, chi, 0).unwrap();
    let id = Automorphism::identity(&a5);
    let it = solve_intertwiner(&rep, &id, t.character(chi), 0).unwrap();
    let eg = ExtendedGroup::new(a5.clone(), id);
    let inv = (0..a5.order()).find(|&x| a5.element_order(x) == 2).unwrap();
    let cert = prop2_certificate(&rep, &it, &eg, inv).unwrap().unwrap();
    assert_eq!(cert.method, Method::Prop2);
    assert!(check_triple(&rep, &it, 1).unwrap().holds());
    assert!(check_triple(&rep, &it, -1).unwrap().holds());
    let three = (0..a5.order()).find(|&x| a5.element_order(x) == 3).unwrap();
    assert!(prop2_certificate(&rep, &it, &eg, three).is_err());
}

#[test]
fn restriction_to_cyclic_subgroup_of_d12() {
    let d12 = group(6, &["(1,2,3,4,5,6)", "(1,6)(2,5)(3,4)"]);
    let t = table(&d12);
    let c6: Vec<usize> = d12.closure(&[d12.generator_indices()[0]]);
    let auts = automorphism_group(&d12).unwrap();
    let mut fired = 0;
    for chi in (1..t.len()).filter(|&i| t.degree(i) == 1) {
        let rep = build_irreducible_rep(&t, chi, 0).unwrap();
        for nu in outer_classes_fixing_char(&d12, &auts, t.character(chi)) {
            let it = solve_intertwiner(&rep, &nu, t.character(chi), 0).unwrap();
            let eg = ExtendedGroup::new(d12.clone(), nu.clone());
            for sign in [1, -1] {
                let direct = check_triple(&rep, &it, sign).unwrap();
                if let Some(r) = restriction_strategy(&t, chi, &rep, &it, &eg, &c6, sign).unwrap() {
                    fired += 1;
                    assert!(direct.holds());
                    assert!(eigenone::e1::is_witness(&rep, &it, sign, r.witness).unwrap());
                }
            }
        }
    }
    assert!(fired > 0);
}

#[test]
fn a5_squared_is_characteristically_simple() {
    let g = group(10, &["(1,2,3)", "(1,2,3,4,5)", "(6,7,8)", "(6,7,8,9,10)"]);
    let t = CharacterTable::compute(g).unwrap();
    let v = check_group(&t, &Options::default()).unwrap();
    assert_eq!(v.overall, Status::Holds);
    assert_eq!(v.structural.unwrap().method, Method::CharSimpleProp1);
}

#[test]
fn solvable_groups_get_cor3() {
    let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
    let t = table(&s4);
    let fast = check_group(&t, &Options::default()).unwrap();
    assert_eq!(
        fast.structural.as_ref().unwrap().method,
        Method::SolvableCor3
    );
    let slow = check_group(&t, &validate()).unwrap();
    assert_eq!(fast.overall, slow.overall);
    assert!(slow.characters.iter().flat_map(|c| &c.nu_classes).all(|x| x
        .validation
        .as_ref()
        .unwrap()
        .agree));
}
