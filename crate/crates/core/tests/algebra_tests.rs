use leibniz2::fixtures::{fix_a, fix_b, fix_b_bad, fix_c, fix_d, leib3, mixed, skel};
use leibniz2::scalar::int;
use leibniz2::{
    compose_hom, identity_hom, invert_hom, is_strict, verify_algebra, verify_derivation,
    verify_hom, Derivation2, Error, Hom2, Leibniz2Algebra, Mat, MultiMap,
};

#[test]
fn structure_laws_hold_on_the_good_fixtures() {
    for (name, g) in [
        ("fix_a", fix_a()),
        ("fix_b", fix_b()),
        ("fix_c", fix_c()),
        ("fix_d", fix_d()),
        ("skel", skel()),
        ("mixed", mixed()),
        ("leib3", leib3()),
    ] {
        let report = verify_algebra(&g).unwrap();
        assert!(report.is_ok(), "{name}: {:?}", report.violations);
    }
}

#[test]
fn broken_bracket_reports_the_leibniz_law() {
    let report = verify_algebra(&fix_b_bad()).unwrap();
    assert!(!report.is_ok());
    let v = &report.violations[0];
    assert_eq!(v.law, "(d)");
    assert_eq!(v.at, vec![0, 0, 0]);
    assert_eq!(v.residual, vec![int(-1), int(0)]);
}

#[test]
fn homotopy_can_absorb_a_bracket_defect() {
    // On the abelian complex a bare homotopy is unconstrained.
    let mut g = fix_a();
    g.l3.set(0, &[0, 0, 0], int(1));
    let report = verify_algebra(&g).unwrap();
    assert!(report.is_ok(), "{:?}", report.violations);
    assert!(!is_strict(&g));
}

#[test]
fn homotopy_with_invertible_differential_breaks_the_leibniz_law() {
    // With d = [1] the same homotopy forces d∘l3 ≠ 0 while the brackets
    // vanish, so law (d) must fail.
    let mut g = fix_c();
    g.l3.set(0, &[0, 0, 0], int(1));
    let report = verify_algebra(&g).unwrap();
    assert!(!report.is_ok());
    let v = &report.violations[0];
    assert_eq!(v.law, "(d)");
    assert_eq!(v.at, vec![0, 0, 0]);
    assert_eq!(v.residual, vec![int(-1)]);
}

#[test]
fn strictness_detector() {
    assert!(is_strict(&fix_b()));
    assert!(is_strict(&fix_c()));
    assert!(!is_strict(&fix_d()));
    assert!(!is_strict(&skel()));
}

#[test]
fn identity_is_a_morphism_everywhere() {
    for g in [fix_a(), fix_b(), fix_c(), fix_d(), skel(), mixed()] {
        let id = identity_hom(&g);
        assert!(verify_hom(&g, &g, &id).unwrap().is_ok());
    }
}

#[test]
fn swapping_generators_is_not_a_morphism() {
    let g = fix_b();
    let swap = Hom2 {
        f0: Mat::from_rows(vec![vec![int(0), int(1)], vec![int(1), int(0)]]).unwrap(),
        f1: Mat::identity(0),
        f2: MultiMap::zeros(vec![2, 2], 0),
    };
    let report = verify_hom(&g, &g, &swap).unwrap();
    assert!(!report.is_ok());
    let v = &report.violations[0];
    assert_eq!(v.law, "(j)");
    assert_eq!(v.at, vec![0, 0]);
    assert_eq!(v.residual, vec![int(1), int(0)]);
}

fn scaling_auto(g: &Leibniz2Algebra, t: i64) -> Hom2 {
    // e1 ↦ t·e1 forces e2 ↦ t²·e2 under [e1,e1] = e2.
    let mut f0 = Mat::zeros(g.dim0, g.dim0);
    f0.set(0, 0, int(t));
    f0.set(1, 1, int(t * t));
    Hom2 { f0, f1: Mat::identity(0), f2: MultiMap::zeros(vec![2, 2], 0) }
}

#[test]
fn scaling_automorphisms_compose_and_invert() {
    let g = fix_b();
    let a = scaling_auto(&g, 2);
    let b = scaling_auto(&g, 3);
    assert!(verify_hom(&g, &g, &a).unwrap().is_ok());
    assert!(verify_hom(&g, &g, &b).unwrap().is_ok());

    let ab = compose_hom(&a, &b).unwrap();
    assert_eq!(ab, scaling_auto(&g, 6));

    let inv = invert_hom(&a).unwrap();
    assert_eq!(compose_hom(&a, &inv).unwrap(), identity_hom(&g));
    assert_eq!(compose_hom(&inv, &a).unwrap(), identity_hom(&g));
}

#[test]
fn singular_degree_zero_part_cannot_be_inverted() {
    let g = fix_b();
    let mut h = identity_hom(&g);
    h.f0 = Mat::zeros(2, 2);
    assert!(matches!(invert_hom(&h), Err(Error::NotInvertible)));
}

#[test]
fn inverse_homotopy_cancels_in_the_composite() {
    // A morphism with nonzero f2 on the abelian fixture; invert_hom must
    // produce the two-sided inverse including its homotopy part.
    let g = fix_a();
    let mut f2 = MultiMap::zeros(vec![1, 1], 1);
    f2.set(0, &[0, 0], int(5));
    let h = Hom2 {
        f0: Mat::from_rows(vec![vec![int(2)]]).unwrap(),
        f1: Mat::from_rows(vec![vec![int(3)]]).unwrap(),
        f2,
    };
    assert!(verify_hom(&g, &g, &h).unwrap().is_ok());
    let inv = invert_hom(&h).unwrap();
    assert_eq!(compose_hom(&h, &inv).unwrap(), identity_hom(&g));
    assert_eq!(compose_hom(&inv, &h).unwrap(), identity_hom(&g));
}

#[test]
fn weighted_scaling_is_a_derivation() {
    let g = fix_b();
    let mut d0 = Mat::zeros(2, 2);
    d0.set(0, 0, int(1));
    d0.set(1, 1, int(2));
    let der = Derivation2 { d0, d1: Mat::identity(0), d2: MultiMap::zeros(vec![2, 2], 0) };
    assert!(verify_derivation(&g, &der).unwrap().is_ok());
}

#[test]
fn unweighted_scaling_is_not_a_derivation() {
    let g = fix_b();
    let der = Derivation2 {
        d0: Mat::identity(2),
        d1: Mat::identity(0),
        d2: MultiMap::zeros(vec![2, 2], 0),
    };
    let report = verify_derivation(&g, &der).unwrap();
    assert!(!report.is_ok());
    let v = &report.violations[0];
    assert_eq!(v.law, "(n)");
    assert_eq!(v.at, vec![0, 0]);
    assert_eq!(v.residual, vec![int(0), int(-1)]);
}

#[test]
fn derivations_form_a_vector_space_on_samples() {
    let g = fix_b();
    let mut d0 = Mat::zeros(2, 2);
    d0.set(0, 0, int(1));
    d0.set(1, 1, int(2));
    let a = Derivation2 { d0, d1: Mat::identity(0), d2: MultiMap::zeros(vec![2, 2], 0) };
    let sum = a.add(&a).unwrap();
    assert!(verify_derivation(&g, &sum).unwrap().is_ok());
    assert!(verify_derivation(&g, &Derivation2::zero(&g)).unwrap().is_ok());
}
