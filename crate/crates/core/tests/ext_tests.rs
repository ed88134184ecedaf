use leibniz2::fixtures::{fix_a, fix_b, fix_c, fix_d, psi_extension, rep_b, trivial_rep, Lcg};
use leibniz2::scalar::int;
use leibniz2::{
    adjoint_rep, build_extension, cohomology, d1_apply, extensions_equivalent, extract_cocycle,
    find_splitting, induced_rep, verify_algebra, verify_hom, Cochain1, Cochain2, Error, Extension,
    GradedMap, Leibniz2Algebra, Mat, MultiMap, Representation, Scalar, TwoTermComplex,
};

#[test]
fn built_extension_has_the_block_shape() {
    let e = psi_extension();
    assert_eq!((e.hat.dim0, e.hat.dim1), (2, 2));
    let expect = Mat::from_rows(vec![vec![int(0), int(0)], vec![int(1), int(0)]]).unwrap();
    assert_eq!(e.hat.d, expect);

    // retraction splits the inclusion, splitting splits the projection
    assert_eq!(e.q().m0.mul(&e.i.m0).unwrap(), Mat::identity(1));
    assert_eq!(e.q().m1.mul(&e.i.m1).unwrap(), Mat::identity(1));
    let s = find_splitting(&e).unwrap();
    assert_eq!(e.p.m0.mul(&s.s0).unwrap(), Mat::identity(1));
    assert_eq!(e.p.m1.mul(&s.s1).unwrap(), Mat::identity(1));
    s.validate(&e).unwrap();
}

fn rand_vec(lcg: &mut Lcg, n: usize) -> Vec<Scalar> {
    (0..n).map(|_| lcg.scalar(-2, 2)).collect()
}

#[test]
fn round_trip_recovers_the_cocycle() {
    // every basis cocycle of the two small acyclic/abelian cases
    for (g, rep) in [(fix_a(), trivial_rep(&fix_a())), (fix_c(), trivial_rep(&fix_c()))] {
        let summary = cohomology(&g, &rep).unwrap();
        for z in &summary.z2_basis {
            let c = Cochain2::unflatten(&g, &rep.v, z).unwrap();
            let e = build_extension(&g, &rep, &c).unwrap();
            assert!(verify_algebra(&e.hat).unwrap().is_ok());
            let s = find_splitting(&e).unwrap();
            assert_eq!(extract_cocycle(&e, &s).unwrap(), c);
        }
    }

    // coboundaries over a twisted representation with nonzero binary parts
    let g = fix_b();
    let rep = rep_b();
    let mut lcg = Lcg::new(5);
    for _ in 0..4 {
        let lam =
            Cochain1::unflatten(&g, &rep.v, &rand_vec(&mut lcg, Cochain1::dim(&g, &rep.v)))
                .unwrap();
        let c = d1_apply(&g, &rep, &lam).unwrap();
        let e = build_extension(&g, &rep, &c).unwrap();
        let s = find_splitting(&e).unwrap();
        assert_eq!(extract_cocycle(&e, &s).unwrap(), c);
    }
}

#[test]
fn induced_representation_matches_the_input() {
    let cases: Vec<(Leibniz2Algebra, Representation)> = vec![
        (fix_a(), trivial_rep(&fix_a())),
        (fix_c(), trivial_rep(&fix_c())),
        (fix_b(), rep_b()),
        (fix_b(), adjoint_rep(&fix_b()).unwrap()),
        (fix_d(), adjoint_rep(&fix_d()).unwrap()),
    ];
    for (g, rep) in cases {
        let zero = Cochain2::zero(&g, &rep.v);
        let e = build_extension(&g, &rep, &zero).unwrap();
        assert_eq!(induced_rep(&e).unwrap(), rep);
    }
    // a twisting cocycle does not change the induced unary actions
    let e = psi_extension();
    assert_eq!(induced_rep(&e).unwrap(), trivial_rep(&fix_a()));
}

#[test]
fn splitting_solver_picks_the_canonical_preimage() {
    let hat = Leibniz2Algebra::new(
        2,
        2,
        Mat::zeros(2, 2),
        MultiMap::zeros(vec![2, 2], 2),
        MultiMap::zeros(vec![2, 2], 2),
        MultiMap::zeros(vec![2, 2], 2),
        MultiMap::zeros(vec![2, 2, 2], 2),
    )
    .unwrap();
    let base = fix_a();
    let fiber = TwoTermComplex::new(1, 1, Mat::zeros(1, 1)).unwrap();
    let inc = Mat::from_rows(vec![vec![int(1)], vec![int(-1)]]).unwrap();
    let proj = Mat::from_rows(vec![vec![int(1), int(1)]]).unwrap();
    let e = Extension::new(
        hat,
        base,
        fiber,
        GradedMap { m0: inc.clone(), m1: inc },
        GradedMap { m0: proj.clone(), m1: proj },
    )
    .unwrap();
    let s = find_splitting(&e).unwrap();
    let expect = Mat::from_rows(vec![vec![int(1)], vec![int(0)]]).unwrap();
    assert_eq!(s.s0, expect);
    assert_eq!(s.s1, expect);
}

#[test]
fn non_cocycle_input_is_rejected_with_the_failing_law() {
    let g = fix_c();
    let rep = trivial_rep(&g);
    let mut c = Cochain2::zero(&g, &rep.v);
    c.omega.set(0, &[0, 0], int(1));
    match build_extension(&g, &rep, &c) {
        Err(Error::NotCocycle(msg)) => assert!(msg.contains("coc01"), "{msg}"),
        other => panic!("expected a cocycle failure, got {other:?}"),
    }
}

#[test]
fn invalid_coefficients_are_rejected() {
    let g = fix_b();
    let mut rep = rep_b();
    rep.l0_0.set(0, &[1, 0], int(9));
    let c = Cochain2::zero(&g, &rep.v);
    assert!(matches!(build_extension(&g, &rep, &c), Err(Error::Invalid(_))));
}

#[test]
fn degenerate_inclusions_and_broken_algebras_are_rejected() {
    let e = psi_extension();

    let bad_i = GradedMap { m0: Mat::zeros(2, 1), m1: e.i.m1.clone() };
    let r = Extension::new(
        e.hat.clone(),
        e.base.clone(),
        e.fiber.clone(),
        bad_i,
        e.p.clone(),
    );
    assert!(matches!(r, Err(Error::InvalidExtension(_))));

    let mut bad_hat = e.hat.clone();
    bad_hat.b00.set(0, &[0, 0], int(1));
    let r = Extension::new(bad_hat, e.base.clone(), e.fiber.clone(), e.i.clone(), e.p.clone());
    match r {
        Err(Error::InvalidExtension(msg)) => assert!(msg.contains("structure laws"), "{msg}"),
        other => panic!("expected an invalid extension, got {other:?}"),
    }
}

#[test]
fn cohomologous_cocycles_give_equivalent_extensions() {
    let g = fix_c();
    let rep = trivial_rep(&g);
    let mut lcg = Lcg::new(31);
    let base_c = Cochain2::zero(&g, &rep.v);
    let ea = build_extension(&g, &rep, &base_c).unwrap();
    for _ in 0..5 {
        let lam =
            Cochain1::unflatten(&g, &rep.v, &rand_vec(&mut lcg, Cochain1::dim(&g, &rep.v)))
                .unwrap();
        let shifted = base_c.add(&d1_apply(&g, &rep, &lam).unwrap()).unwrap();
        let eb = build_extension(&g, &rep, &shifted).unwrap();
        let f = extensions_equivalent(&ea, &eb)
            .unwrap()
            .expect("cohomologous cocycles must be equivalent");
        assert!(verify_hom(&ea.hat, &eb.hat, &f).unwrap().is_ok());
        // the witness commutes with the inclusions and projections
        assert_eq!(f.f0.mul(&ea.i.m0).unwrap(), eb.i.m0);
        assert_eq!(f.f1.mul(&ea.i.m1).unwrap(), eb.i.m1);
        assert_eq!(eb.p.m0.mul(&f.f0).unwrap(), ea.p.m0);
        assert_eq!(eb.p.m1.mul(&f.f1).unwrap(), ea.p.m1);
    }
}

#[test]
fn distinct_classes_give_inequivalent_extensions() {
    let g = fix_a();
    let rep = trivial_rep(&g);
    let ea = psi_extension();
    let eb = build_extension(&g, &rep, &Cochain2::zero(&g, &rep.v)).unwrap();
    assert!(extensions_equivalent(&ea, &eb).unwrap().is_none());
}

#[test]
fn mismatched_extensions_cannot_be_compared() {
    let g = fix_c();
    let rep = trivial_rep(&g);
    let other = build_extension(&g, &rep, &Cochain2::zero(&g, &rep.v)).unwrap();
    assert!(extensions_equivalent(&psi_extension(), &other).is_err());
}

#[test]
fn semidirect_products_verify() {
    for g in [fix_b(), fix_d()] {
        let rep = adjoint_rep(&g).unwrap();
        let zero = Cochain2::zero(&g, &rep.v);
        let e = build_extension(&g, &rep, &zero).unwrap();
        assert!(verify_algebra(&e.hat).unwrap().is_ok());
        let s = find_splitting(&e).unwrap();
        assert!(extract_cocycle(&e, &s).unwrap().is_zero());
    }
}
