//! End-to-end checks, one test per documented guarantee of the library.
//! Each test prints a single `PASS` line when every assertion holds; the
//! final guarantee (deterministic command-line reports) lives with the
//! command-line crate.

use leibniz2::fixtures::{
    bim_b, bim_leib3, fix_a, fix_b, fix_b_bad, fix_c, fix_d, leib3, mixed, psi_extension, rep_b,
    skel, trivial_rep, Lcg,
};
use leibniz2::scalar::int;
use leibniz2::{
    adjoint_rep, aut_induce, build_extension, cohomology, compose_hom, d1_apply, d1_matrix,
    d2_matrix, d_lambda, der_induce, exactness_report, extensions_equivalent, extract_cocycle,
    f_lambda, find_splitting, is_cocycle2, project_aut, project_der, strict_to_xmod,
    verify_algebra, verify_derivation, verify_hom, verify_representation, verify_xmod, wells_aut,
    wells_der, xmod_aut_induce, xmod_der_induce, xmod_semidirect, xmod_to_strict, AutPair,
    Bimodule, Cochain1, Cochain2, DerPair, Derivation2, Hom2, Leibniz2Algebra, Mat, MultiMap,
    Representation, Scalar, TwoTermComplex, XModPair, XModRep,
};

fn coefficient_pairs() -> Vec<(Leibniz2Algebra, Representation)> {
    let mut out = Vec::new();
    for g in [fix_a(), fix_b(), fix_c(), fix_d(), skel(), mixed(), leib3()] {
        let rep = adjoint_rep(&g).unwrap();
        out.push((g, rep));
    }
    out.push((fix_a(), trivial_rep(&fix_a())));
    out.push((fix_c(), trivial_rep(&fix_c())));
    out.push((fix_b(), rep_b()));
    out
}

fn rand_cochain1(lcg: &mut Lcg, g: &Leibniz2Algebra, v: &TwoTermComplex) -> Cochain1 {
    let data: Vec<Scalar> = (0..Cochain1::dim(g, v)).map(|_| lcg.scalar(-3, 3)).collect();
    Cochain1::unflatten(g, v, &data).unwrap()
}

#[test]
fn acceptance_01_axiom_verifiers() {
    let start = std::time::Instant::now();
    for g in [fix_a(), fix_b(), fix_c()] {
        assert!(verify_algebra(&g).unwrap().is_ok());
    }
    let ver = verify_algebra(&fix_b_bad()).unwrap();
    assert!(!ver.is_ok());
    let witness = &ver.violations[0];
    assert_eq!(witness.law, "(d)");
    assert_eq!(witness.at, vec![0, 0, 0]);
    assert_eq!(witness.residual, vec![int(-1), int(0)]);
    assert!(start.elapsed().as_secs() < 1, "verification must finish in under a second");
    println!("acceptance 01 (axiom verifiers and mutation witness): PASS");
}

#[test]
fn acceptance_02_classical_coboundary_squares_to_zero() {
    let three = leib3();
    assert!(verify_algebra(&three).unwrap().is_ok());
    let trivial = |g: &Leibniz2Algebra| Bimodule {
        m_dim: 1,
        left: MultiMap::zeros(vec![g.dim0, 1], 1),
        right: MultiMap::zeros(vec![1, g.dim0], 1),
    };
    let cases = vec![
        (fix_b(), trivial(&fix_b())),
        (fix_b(), bim_b()),
        (three.clone(), trivial(&three)),
        (three.clone(), bim_leib3()),
    ];
    for (g, bim) in &cases {
        for n in 1..=2 {
            let low = leibniz2::cochain::dl_matrix(g, bim, n).unwrap();
            let high = leibniz2::cochain::dl_matrix(g, bim, n + 1).unwrap();
            assert!(high.mul(&low).unwrap().is_zero());
        }
    }
    println!("acceptance 02 (one-space coboundary composes to zero): PASS");
}

#[test]
fn acceptance_03_two_term_coboundary_squares_to_zero() {
    for (g, rep) in coefficient_pairs() {
        let d1 = d1_matrix(&g, &rep).unwrap();
        let d2 = d2_matrix(&g, &rep).unwrap();
        assert!(d2.mul(&d1).unwrap().is_zero());
    }
    println!("acceptance 03 (two-term coboundary composes to zero): PASS");
}

#[test]
fn acceptance_04_coboundaries_are_cocycles() {
    for (g, rep) in coefficient_pairs() {
        let d1 = d1_matrix(&g, &rep).unwrap();
        for j in 0..d1.cols() {
            let c = Cochain2::unflatten(&g, &rep.v, &d1.col(j)).unwrap();
            assert!(is_cocycle2(&g, &rep, &c).unwrap().is_cocycle);
        }
    }
    println!("acceptance 04 (coboundaries satisfy the cocycle conditions): PASS");
}

#[test]
fn acceptance_05_extension_round_trip() {
    for g in [fix_a(), fix_c()] {
        let rep = trivial_rep(&g);
        let summary = cohomology(&g, &rep).unwrap();
        for flat in &summary.z2_basis {
            let c = Cochain2::unflatten(&g, &rep.v, flat).unwrap();
            let e = build_extension(&g, &rep, &c).unwrap();
            assert!(verify_algebra(&e.hat).unwrap().is_ok());
            let s = find_splitting(&e).unwrap();
            assert_eq!(extract_cocycle(&e, &s).unwrap(), c);
        }
    }
    println!("acceptance 05 (cocycle to extension round trip): PASS");
}

#[test]
fn acceptance_06_second_cohomology_classifies_extensions() {
    let g = fix_c();
    let rep = trivial_rep(&g);
    let mut c = Cochain2::zero(&g, &rep.v);
    c.psi.set(0, 0, int(1));
    assert!(is_cocycle2(&g, &rep, &c).unwrap().is_cocycle);
    let e = build_extension(&g, &rep, &c).unwrap();
    let mut lcg = Lcg::new(2026);
    for _ in 0..20 {
        let lam = rand_cochain1(&mut lcg, &g, &rep.v);
        let shifted = c.add(&d1_apply(&g, &rep, &lam).unwrap()).unwrap();
        let e2 = build_extension(&g, &rep, &shifted).unwrap();
        let w = extensions_equivalent(&e, &e2).unwrap().expect("cohomologous classes must agree");
        assert!(verify_hom(&e.hat, &e2.hat, &w).unwrap().is_ok());
    }

    let a = fix_a();
    let arep = trivial_rep(&a);
    let mut psi = Cochain2::zero(&a, &arep.v);
    psi.psi.set(0, 0, int(1));
    let twisted = build_extension(&a, &arep, &psi).unwrap();
    let split = build_extension(&a, &arep, &Cochain2::zero(&a, &arep.v)).unwrap();
    assert!(extensions_equivalent(&twisted, &split).unwrap().is_none());
    println!("acceptance 06 (cohomology classes classify extensions): PASS");
}

#[test]
fn acceptance_07_adjoint_representations() {
    for g in [fix_a(), fix_b(), fix_c(), fix_d(), skel(), mixed(), leib3()] {
        let rep = adjoint_rep(&g).unwrap();
        assert!(verify_representation(&g, &rep).unwrap().is_ok());
    }
    println!("acceptance 07 (adjoint coefficients satisfy the action laws): PASS");
}

fn scalar_pair(b: i64, a0: i64, a1: i64) -> AutPair {
    AutPair {
        beta0: Mat::from_rows(vec![vec![int(b)]]).unwrap(),
        beta1: Mat::from_rows(vec![vec![int(b)]]).unwrap(),
        alpha: Hom2 {
            f0: Mat::from_rows(vec![vec![int(a0)]]).unwrap(),
            f1: Mat::from_rows(vec![vec![int(a1)]]).unwrap(),
            f2: MultiMap::zeros(vec![1, 1], 1),
        },
    }
}

fn scalar_der_pair(b: i64, a0: i64, a1: i64) -> DerPair {
    DerPair {
        beta0: Mat::from_rows(vec![vec![int(b)]]).unwrap(),
        beta1: Mat::from_rows(vec![vec![int(b)]]).unwrap(),
        alpha: Derivation2 {
            d0: Mat::from_rows(vec![vec![int(a0)]]).unwrap(),
            d1: Mat::from_rows(vec![vec![int(a1)]]).unwrap(),
            d2: MultiMap::zeros(vec![1, 1], 1),
        },
    }
}

#[test]
fn acceptance_08_inducibility_dichotomy() {
    let e = psi_extension();
    let g = e.base.clone();
    let rep = trivial_rep(&g);
    let c = extract_cocycle(&e, &find_splitting(&e).unwrap()).unwrap();

    // doubling the fiber over the identity is obstructed
    let blocked = aut_induce(&e, &scalar_pair(2, 1, 1)).unwrap();
    assert!(blocked.compatible);
    assert!(blocked.obstruction_class.unwrap().iter().any(|x| x != &int(0)));
    assert!(blocked.induced.is_none());

    // doubling fiber and degree-1 base together lifts
    let pair = scalar_pair(2, 1, 2);
    let lifted = aut_induce(&e, &pair).unwrap();
    let f = lifted.induced.expect("matched pair must lift");
    assert!(verify_hom(&e.hat, &e.hat, &f).unwrap().is_ok());
    assert_eq!(project_aut(&e, &f).unwrap(), pair);

    for b in 1..=3i64 {
        for a0 in 1..=3i64 {
            for a1 in 1..=3i64 {
                let pair = scalar_pair(b, a0, a1);
                let class = wells_aut(&g, &rep, &c, &pair).unwrap();
                let report = aut_induce(&e, &pair).unwrap();
                assert_eq!(report.induced.is_some(), class.iter().all(|x| x == &int(0)));
            }
        }
    }

    let dblocked = der_induce(&e, &scalar_der_pair(1, 0, 0)).unwrap();
    assert!(dblocked.compatible);
    assert!(dblocked.obstruction_class.unwrap().iter().any(|x| x != &int(0)));
    assert!(dblocked.induced.is_none());

    let dpair = scalar_der_pair(1, 0, 1);
    let dlifted = der_induce(&e, &dpair).unwrap();
    let d = dlifted.induced.expect("matched derivation pair must lift");
    assert!(verify_derivation(&e.hat, &d).unwrap().is_ok());
    assert_eq!(project_der(&e, &d).unwrap(), dpair);

    for b in 0..=2i64 {
        for a0 in 0..=2i64 {
            for a1 in 0..=2i64 {
                let pair = scalar_der_pair(b, a0, a1);
                let class = wells_der(&g, &rep, &c, &pair).unwrap();
                let report = der_induce(&e, &pair).unwrap();
                assert_eq!(report.induced.is_some(), class.iter().all(|x| x == &int(0)));
            }
        }
    }
    println!("acceptance 08 (inducibility dichotomy with witnesses): PASS");
}

#[test]
fn acceptance_09_exact_sequence_checks() {
    let e = psi_extension();
    let g = e.base.clone();
    let rep = trivial_rep(&g);
    let c = extract_cocycle(&e, &find_splitting(&e).unwrap()).unwrap();
    let mut lcg = Lcg::new(4099);

    let mut lambdas = vec![Cochain1::zero(&g, &e.fiber)];
    for _ in 0..5 {
        lambdas.push(rand_cochain1(&mut lcg, &g, &e.fiber));
    }
    for (i, a) in lambdas.iter().enumerate() {
        let fa = f_lambda(&e, a).unwrap();
        assert!(verify_hom(&e.hat, &e.hat, &fa).unwrap().is_ok());
        assert_eq!(project_aut(&e, &fa).unwrap(), AutPair::identity(&g, &e.fiber));
        for b in lambdas.iter().skip(i + 1) {
            if a != b {
                assert_ne!(fa, f_lambda(&e, b).unwrap(), "distinct cocycles give distinct maps");
            }
            let sum = f_lambda(&e, &a.add(b).unwrap()).unwrap();
            assert_eq!(sum, compose_hom(&fa, &f_lambda(&e, b).unwrap()).unwrap());
        }
    }

    let mut autos = vec![f_lambda(&e, &lambdas[1]).unwrap()];
    autos.push(aut_induce(&e, &scalar_pair(3, 1, 3)).unwrap().induced.unwrap());
    for f in &autos {
        let pair = project_aut(&e, f).unwrap();
        let class = wells_aut(&g, &rep, &c, &pair).unwrap();
        assert!(class.iter().all(|x| x == &int(0)), "projected pairs carry no obstruction");
    }
    let dd = d_lambda(&e, &lambdas[2]).unwrap();
    let dpair = project_der(&e, &dd).unwrap();
    assert_eq!(dpair, DerPair::zero(&g, &e.fiber));
    let dclass = wells_der(&g, &rep, &c, &dpair).unwrap();
    assert!(dclass.iter().all(|x| x == &int(0)));

    let samples = leibniz2::ExactnessSamples {
        lambdas,
        autos,
        pairs: vec![
            AutPair::identity(&g, &e.fiber),
            scalar_pair(2, 1, 2),
            scalar_pair(2, 1, 1),
            scalar_pair(3, 2, 3),
        ],
    };
    let report = exactness_report(&e, &samples).unwrap();
    assert!(report.all_hold(), "{report:?}");
    println!("acceptance 09 (exact-sequence spot checks): PASS");
}

#[test]
fn acceptance_10_crossed_module_coherence() {
    // round trips
    for g in [fix_b(), fix_c(), leib3()] {
        let xm = strict_to_xmod(&g).unwrap();
        assert_eq!(xmod_to_strict(&xm).unwrap(), g);
        assert_eq!(strict_to_xmod(&xmod_to_strict(&xm).unwrap()).unwrap(), xm);
    }

    // semidirect products satisfy the crossed module laws
    let (xm, rep, c) = leibniz2::fixtures::xmod_case();
    let semi = xmod_semidirect(&xm, &rep).unwrap();
    assert!(verify_xmod(&semi).unwrap().is_ok());

    // the direct solvers agree with the strict-algebra route
    let g = xmod_to_strict(&xm).unwrap();
    let rep2 = rep.to_representation();
    let e = build_extension(&g, &rep2, &c).unwrap();
    let pair = XModPair {
        beta0: Mat::from_rows(vec![vec![int(3)]]).unwrap(),
        beta1: Mat::identity(1),
        alpha0: Mat::from_rows(vec![vec![int(2), int(0)], vec![int(0), int(4)]]).unwrap(),
        alpha1: Mat::identity(0),
    };
    let direct = xmod_aut_induce(&xm, &rep, &c, &pair).unwrap();
    let strict = aut_induce(
        &e,
        &AutPair {
            beta0: pair.beta0.clone(),
            beta1: pair.beta1.clone(),
            alpha: Hom2 {
                f0: pair.alpha0.clone(),
                f1: pair.alpha1.clone(),
                f2: MultiMap::zeros(vec![g.dim0, g.dim0], g.dim1),
            },
        },
    )
    .unwrap();
    assert_eq!(direct.compatible, strict.compatible);
    assert_eq!(direct.obstruction_class, strict.obstruction_class);
    assert_eq!(direct.witness.is_some(), strict.witness.is_some());

    let dpair = XModPair {
        beta0: Mat::from_rows(vec![vec![int(5)]]).unwrap(),
        beta1: Mat::from_rows(vec![vec![int(5)]]).unwrap(),
        alpha0: Mat::from_rows(vec![vec![int(1), int(0)], vec![int(0), int(2)]]).unwrap(),
        alpha1: Mat::identity(0),
    };
    let ddirect = xmod_der_induce(&xm, &rep, &c, &dpair).unwrap();
    let dstrict = der_induce(
        &e,
        &DerPair {
            beta0: dpair.beta0.clone(),
            beta1: dpair.beta1.clone(),
            alpha: Derivation2 {
                d0: dpair.alpha0.clone(),
                d1: dpair.alpha1.clone(),
                d2: MultiMap::zeros(vec![g.dim0, g.dim0], g.dim1),
            },
        },
    )
    .unwrap();
    assert_eq!(ddirect.compatible, dstrict.compatible);
    assert_eq!(ddirect.obstruction_class, dstrict.obstruction_class);
    assert_eq!(ddirect.witness.is_some(), dstrict.witness.is_some());

    // a second coefficient system over a base with nonzero structure map
    let gc = fix_c();
    let xc = strict_to_xmod(&gc).unwrap();
    let v = TwoTermComplex::new(1, 1, Mat::zeros(1, 1)).unwrap();
    let zrep = XModRep {
        v: v.clone(),
        l0_0: MultiMap::zeros(vec![1, 1], 1),
        l0_1: MultiMap::zeros(vec![1, 1], 1),
        r0_0: MultiMap::zeros(vec![1, 1], 1),
        r0_1: MultiMap::zeros(vec![1, 1], 1),
        l1: MultiMap::zeros(vec![1, 1], 1),
        r1: MultiMap::zeros(vec![1, 1], 1),
    };
    let zc = Cochain2::zero(&gc, &v);
    let cpair = XModPair {
        beta0: Mat::from_rows(vec![vec![int(2)]]).unwrap(),
        beta1: Mat::from_rows(vec![vec![int(3)]]).unwrap(),
        alpha0: Mat::from_rows(vec![vec![int(2)]]).unwrap(),
        alpha1: Mat::from_rows(vec![vec![int(2)]]).unwrap(),
    };
    let creport = xmod_aut_induce(&xc, &zrep, &zc, &cpair).unwrap();
    assert!(creport.compatible);
    assert!(creport.induced.is_some());
    let cstrict = aut_induce(
        &build_extension(&gc, &zrep.to_representation(), &zc).unwrap(),
        &AutPair {
            beta0: cpair.beta0.clone(),
            beta1: cpair.beta1.clone(),
            alpha: Hom2 {
                f0: cpair.alpha0.clone(),
                f1: cpair.alpha1.clone(),
                f2: MultiMap::zeros(vec![1, 1], 1),
            },
        },
    )
    .unwrap();
    assert_eq!(creport.obstruction_class, cstrict.obstruction_class);
    assert_eq!(creport.witness.is_some(), cstrict.witness.is_some());
    println!("acceptance 10 (crossed module coherence): PASS");
}
