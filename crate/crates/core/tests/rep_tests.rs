use leibniz2::fixtures::{fix_a, fix_b, fix_c, fix_d, leib3, mixed, rep_b, skel, trivial_rep};
use leibniz2::scalar::int;
use leibniz2::{
    adjoint_rep, endv_bracket, endv_delta, verify_representation, EndV, Mat, Representation,
    TwoTermComplex,
};

#[test]
fn adjoint_representation_of_every_fixture_is_valid() {
    for (name, g) in [
        ("fix_a", fix_a()),
        ("fix_b", fix_b()),
        ("fix_c", fix_c()),
        ("fix_d", fix_d()),
        ("skel", skel()),
        ("mixed", mixed()),
        ("leib3", leib3()),
    ] {
        let rep = adjoint_rep(&g).unwrap();
        let report = verify_representation(&g, &rep).unwrap();
        assert!(report.is_ok(), "{name}: {:?}", report.violations);
    }
}

#[test]
fn adjoint_operators_reproduce_the_brackets() {
    let g = fix_b();
    let rep = adjoint_rep(&g).unwrap();
    // left action of e1 on e1 is [e1, e1] = e2, right action the same
    assert_eq!(rep.l0_0.eval_basis(&[0, 0]), vec![int(0), int(1)]);
    assert_eq!(rep.r0_0.eval_basis(&[0, 0]), vec![int(0), int(1)]);
    // e2 acts trivially on both sides
    assert_eq!(rep.l0_0.eval_basis(&[1, 0]), vec![int(0), int(0)]);
    assert_eq!(rep.r0_0.eval_basis(&[1, 1]), vec![int(0), int(0)]);
}

#[test]
fn adjoint_binary_operators_negate_the_homotopy() {
    let g = skel();
    let rep = adjoint_rep(&g).unwrap();
    // l3(e1, e1, e1) = a, so the binary operator value at that tuple is -a
    assert_eq!(rep.l2.eval_basis(&[0, 0, 0]), vec![int(-1)]);
    assert_eq!(rep.m2.eval_basis(&[0, 0, 0]), vec![int(-1)]);
    assert_eq!(rep.r2.eval_basis(&[0, 0, 0]), vec![int(-1)]);
}

#[test]
fn trivial_and_twisted_coefficients_are_valid() {
    for g in [fix_a(), fix_b(), fix_c(), fix_d(), skel(), mixed()] {
        let rep = trivial_rep(&g);
        assert!(verify_representation(&g, &rep).unwrap().is_ok());
    }
    let report = verify_representation(&fix_b(), &rep_b()).unwrap();
    assert!(report.is_ok(), "{:?}", report.violations);
}

#[test]
fn breaking_one_action_coefficient_is_detected() {
    let g = fix_b();
    let mut rep = rep_b();
    rep.l0_0.set(0, &[1, 0], int(5));
    let report = verify_representation(&g, &rep).unwrap();
    assert!(!report.is_ok());
    let v = &report.violations[0];
    // the two grades of the degree-0 action no longer interleave with the
    // differential of V
    assert_eq!(v.law, "end0(l0)");
    assert_eq!(v.at, vec![1, 0]);
    assert_eq!(v.residual, vec![int(3)]);
}

#[test]
fn zero_action_on_mismatched_complex_is_rejected() {
    let g = fix_b();
    let v = TwoTermComplex::new(1, 1, Mat::zeros(1, 1)).unwrap();
    let rep = Representation::zero(&fix_a(), v);
    assert!(rep.validate(&g).is_err());
}

#[test]
fn delta_of_a_degree_shifting_map() {
    let v = TwoTermComplex::new(1, 1, Mat::from_rows(vec![vec![int(1)]]).unwrap()).unwrap();
    let a = Mat::from_rows(vec![vec![int(4)]]).unwrap();
    let d = endv_delta(&v, &a).unwrap();
    assert_eq!(d.x0, Mat::from_rows(vec![vec![int(4)]]).unwrap());
    assert_eq!(d.x1, Mat::from_rows(vec![vec![int(4)]]).unwrap());
    assert!(d.in_end0(&v).unwrap());
}

#[test]
fn bracket_with_a_scalar_pair_vanishes() {
    let x = EndV {
        x0: Mat::from_rows(vec![vec![int(2)]]).unwrap(),
        x1: Mat::from_rows(vec![vec![int(2)]]).unwrap(),
    };
    let a = Mat::from_rows(vec![vec![int(3)]]).unwrap();
    assert!(endv_bracket(&x, &a).unwrap().is_zero());
}

#[test]
fn bracket_detects_noncommuting_pairs() {
    let x = EndV {
        x0: Mat::from_rows(vec![vec![int(2)]]).unwrap(),
        x1: Mat::from_rows(vec![vec![int(5)]]).unwrap(),
    };
    let a = Mat::from_rows(vec![vec![int(3)]]).unwrap();
    // x1·a - a·x0 = 15 - 6
    assert_eq!(endv_bracket(&x, &a).unwrap(), Mat::from_rows(vec![vec![int(9)]]).unwrap());
}
