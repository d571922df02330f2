use proptest::prelude::*;
use trilie::yang_baxter::{
    dual_bracket_residual, form_from_r, rformula_residual, thm_condition_terms, verify_3sb,
    verify_local_cocycle_bialgebra,
};
use trilie::*;

mod common;

use common::*;

#[test]
fn zero_r_gives_zero_everything() {
    let a = alg("dim4.1");
    let r = RElement::zero(a);
    let d = delta_from_r(&r);
    assert!(d.parts().iter().all(|c| c.is_zero()));
    assert!(triple_r_bracket(&r).is_zero());
    assert!(rrr_variants(&r).iter().all(Tensor::is_zero));
    let (report, terms) = verify_thm_condition(&r);
    assert!(report.passed);
    assert!(terms.iter().all(|t| t.summands.iter().all(Tensor::is_zero)));
    assert!(is_cybe_solution(&r).passed);
}

#[test]
fn delta_matches_definition() {
    let a = alg("dim4.1");
    let r = r_from(&a, &[vec![1, 2, 0, -1], vec![0, 3, 1, 0], vec![2, 0, -2, 1], vec![1, 1, 0, 0]]);
    let d = delta_from_r(&r);
    for m in 0..4 {
        let want = delta_oracle(&r, m);
        for (part, w) in d.parts().iter().zip(&want) {
            assert_eq!(&part.image(m + 1).unwrap(), w);
        }
    }
}

#[test]
fn dim3_closed_form() {
    let a = alg("dim3");
    for (r12, r13, r23) in [(1, 2, 3), (0, 0, 1), (-2, 5, 0), (7, -1, -4)] {
        let r = skew_from(&a, &[r12, r13, r23]);
        let got = delta_from_r(&r).sum();
        assert_eq!(got, dim3_delta_closed_form(&s(r12), &s(r13), &s(r23)));
    }
}

#[test]
fn class1_delta1_is_catalog_coproduct() {
    let (a, delta) = get_paper_bialgebra();
    let r = r_from(&a, &[vec![1, 0, 0, 0], vec![0, -1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, -1]]);
    assert!(r.is_symmetric());
    assert_eq!(delta_from_r(&r).delta1, delta);
}

#[test]
fn catalog_coproduct_dual_is_three_lie() {
    let (_, delta) = get_paper_bialgebra();
    assert!(delta.induces_skew_dual());
    let dual = dual_structure(&delta).unwrap();
    assert!(dual.verify_fundamental_identity().passed);
    assert!(verify_co_jacobi(&delta).unwrap().passed);
}

#[test]
fn zero_comultiplication() {
    let d = Comultiplication::zero(alg("dim3"));
    assert!(dual_structure(&d).unwrap().is_abelian());
    assert!(verify_co_jacobi(&d).unwrap().passed);
}

#[test]
fn dual_constants_of_dim3_example() {
    let a = alg("dim3");
    let r = skew_from(&a, &[2, -3, 5]);
    let dual = dual_structure(&delta_from_r(&r).sum()).unwrap();
    // ⟨e_l, [e1*,e2*,e3*]*⟩ is the wedge coefficient of Δ(e_l)
    let b = dual.bracket_basis(1, 2, 3).unwrap();
    assert_eq!(b, Vector::from_vec(vec![s(-25), s(-15), s(-10)]));
}

#[test]
fn non_skew_dual_is_rejected() {
    let a = alg("dim3");
    let mut t = Tensor::zeros(4, 3);
    t.set(&[1, 1, 2, 3], s(1)).unwrap();
    let d = Comultiplication::new(a, t).unwrap();
    assert!(!d.induces_skew_dual());
    assert!(dual_structure(&d).is_err());
    assert!(verify_co_jacobi(&d).is_err());
}

#[test]
fn perturbed_coproduct_fails_co_jacobi_like_fi() {
    let (a, delta) = get_paper_bialgebra();
    // add e1∧e2∧e3 to Δ(e1): still skew, but the dual bracket loses FI
    let mut images: Vec<Tensor> = (1..=4).map(|m| delta.image(m).unwrap()).collect();
    images[0] = &images[0] + &wedge3(1, 2, 3, 4).unwrap();
    let bad = Comultiplication::from_images(a, &images).unwrap();
    let fi = dual_structure(&bad).unwrap().verify_fundamental_identity();
    let co = verify_co_jacobi(&bad).unwrap();
    assert_eq!(fi.passed, co.passed);
    assert!(!co.passed);
    assert!(co.witness.is_some());
}

#[test]
fn rrr_matches_quadruple_loop() {
    let a = alg("dim4.1");
    let r = skew_from(&a, &[1, 0, 0, 0, 0, 0]);
    let t = triple_r_bracket(&r);
    assert_eq!(t, rrr_oracle(&r));
    assert_eq!(is_cybe_solution(&r).passed, t.is_zero());
    let g = r_from(&a, &[vec![1, 2, 0, -1], vec![0, 3, 1, 0], vec![2, 0, -2, 1], vec![1, 1, 0, 0]]);
    assert_eq!(triple_r_bracket(&g), rrr_oracle(&g));
}

#[test]
fn dim3_skew_r_solves_cybe() {
    let a = alg("dim3");
    let r = skew_from(&a, &[0, 0, 1]);
    assert!(is_cybe_solution(&r).passed);
    let r = skew_from(&a, &[3, -1, 4]);
    assert!(triple_r_bracket(&r).is_zero());
}

#[test]
fn mixed_bracket_rank_one_monomial() {
    // r = e2⊗e1 + e3⊗e3: the surviving monomials put [e1,e2,e3] at slot 3
    let a = alg("dim3");
    let r = r_from(&a, &[vec![0, 0, 0], vec![1, 0, 0], vec![0, 0, 1]]);
    let t = mixed_triple_bracket(&r, [(1, 3), (3, 2), (3, 4)]).unwrap();
    let mut want = Tensor::zeros(4, 3);
    let terms = rank_one_terms(&r);
    for (xi, yi) in &terms {
        for (xj, yj) in &terms {
            for (xk, yk) in &terms {
                want = &want + &outer(&[xi, yj, &br(&a, yi, xj, xk), yk]);
            }
        }
    }
    assert!(!want.is_zero());
    assert_eq!(t, want);
}

#[test]
fn skew_variants_and_class1_summands() {
    let a = alg("dim4.1");
    let r = r_from(&a, &[vec![1, 0, 0, 0], vec![0, -1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, -1]]);
    let (report, terms) = verify_thm_condition(&r);
    assert!(report.passed);
    for t in &terms {
        for (k, summand) in t.summands.iter().enumerate() {
            assert!(!summand.is_zero(), "summand {} vanishes for e{}", k + 1, t.basis);
        }
        assert!(t.total().is_zero());
    }
}

#[test]
fn symmetric_class1_variants_nonzero() {
    let a = alg("dim4.1");
    let r = r_from(&a, &[vec![1, 0, 0, 0], vec![0, -1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, -1]]);
    let v = rrr_variants(&r);
    assert!(v.iter().all(|t| !t.is_zero()));
}

#[test]
fn local_cocycle_bialgebra_from_dim3_example() {
    let a = alg("dim3");
    let r = skew_from(&a, &[1, 2, 3]);
    let d = delta_from_r(&r);
    assert!(!d.sum().is_zero());
    assert!(verify_local_cocycle_bialgebra(&a, &d.delta1, &d.delta2, &d.delta3).passed);
    let z = Comultiplication::zero(a.clone());
    assert!(verify_local_cocycle_bialgebra(&a, &z, &z, &z).passed);
}

#[test]
fn local_cocycle_rejects_broken_piece() {
    let a = alg("dim3");
    let r = skew_from(&a, &[1, 2, 3]);
    let d = delta_from_r(&r);
    let mut t = Tensor::zeros(4, 3);
    t.set(&[1, 1, 1, 1], s(1)).unwrap();
    let junk = Comultiplication::new(a.clone(), t).unwrap();
    let report = verify_local_cocycle_bialgebra(&a, &junk, &d.delta2, &d.delta3);
    assert!(!report.passed);
}

#[test]
fn r_map_pairing() {
    let a = alg("dim3");
    let r = r_from(&a, &[vec![1, 2, 0], vec![0, 3, 1], vec![2, 0, -2]]);
    let xi = Vector::from_ints(&[1, -1, 2]);
    let eta = Vector::from_ints(&[0, 3, 1]);
    let lhs = r.as_map().apply(&xi).unwrap().pairing(&eta).unwrap();
    let rhs = r.matrix().apply(&eta).unwrap().pairing(&xi).unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn rformula_requires_skew() {
    let a = alg("dim3");
    let r = r_from(&a, &[vec![1, 0, 0], vec![0, 0, 0], vec![0, 0, 0]]);
    let v = Vector::from_ints(&[1, 0, 0]);
    assert!(rformula_residual(&r, &v, &v, &v).is_err());
}

#[test]
fn three_sb_examples() {
    let a = alg("dim4.3");
    let r = skew_from(&a, &[1, 0, 0, 0, 0, 1]);
    let b = form_from_r(&r).unwrap();
    assert_eq!(verify_3sb(&a, &b).unwrap().passed, is_cybe_solution(&r).passed);
    let z = alg("trivial:4");
    let rz = skew_from(&z, &[1, 0, 0, 0, 0, 1]);
    assert!(verify_3sb(&z, &form_from_r(&rz).unwrap()).unwrap().passed);
    assert!(form_from_r(&skew_from(&alg("dim3"), &[1, 2, 3])).is_err());
}

fn small() -> impl Strategy<Value = i64> {
    -3i64..=3
}

fn general_r(a: &ThreeLieAlgebra, v: &[i64]) -> RElement {
    let n = a.dim();
    r_from(a, &v.chunks(n).map(<[i64]>::to_vec).collect::<Vec<_>>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(25))]

    #[test]
    fn any_r_induces_skew_dual(v in prop::collection::vec(small(), 16)) {
        let r = general_r(&alg("dim4.1"), &v);
        prop_assert!(delta_from_r(&r).sum().induces_skew_dual());
    }

    #[test]
    fn skew_variant_signs(v in prop::collection::vec(small(), 6)) {
        let r = skew_from(&alg("dim4.1"), &v);
        let t = triple_r_bracket(&r);
        let [v1, v2, v3] = rrr_variants(&r);
        prop_assert_eq!(&v1, &t);
        prop_assert_eq!(v2, -&t);
        prop_assert_eq!(&v3, &t);
    }

    #[test]
    fn thm_condition_iff_co_jacobi_dim4(v in prop::collection::vec(small(), 16), skew in any::<bool>()) {
        let a = alg("dim4.1");
        let r = if skew { skew_from(&a, &v[..6]) } else { general_r(&a, &v) };
        let delta = delta_from_r(&r).sum();
        let co = verify_co_jacobi(&delta).unwrap().passed;
        let fi = dual_structure(&delta).unwrap().verify_fundamental_identity().passed;
        prop_assert_eq!(co, fi);
        prop_assert_eq!(verify_thm_condition(&r).0.passed, co);
    }

    #[test]
    fn thm_condition_iff_co_jacobi_dim3(v in prop::collection::vec(small(), 9)) {
        let r = general_r(&alg("dim3"), &v);
        let delta = delta_from_r(&r).sum();
        prop_assert_eq!(verify_thm_condition(&r).0.passed, verify_co_jacobi(&delta).unwrap().passed);
    }

    #[test]
    fn rformula_and_dual_bracket_vanish(
        v in prop::collection::vec(small(), 6),
        xs in prop::collection::vec(small(), 12),
        class in 1u8..=7,
    ) {
        let id = if class == 6 { CatalogId::parse("dim4.6", Some(s(2))).unwrap() } else { format!("dim4.{class}").parse().unwrap() };
        let a = get_algebra(&id);
        let r = skew_from(&a, &v);
        let xi = Vector::from_ints(&xs[0..4]);
        let eta = Vector::from_ints(&xs[4..8]);
        let gamma = Vector::from_ints(&xs[8..12]);
        prop_assert!(rformula_residual(&r, &xi, &eta, &gamma).unwrap().is_zero());
        prop_assert!(dual_bracket_residual(&r, &xi, &eta, &gamma).unwrap().is_zero());
    }

    #[test]
    fn skew_cybe_solutions_give_bialgebras(v in prop::collection::vec(small(), 3)) {
        let a = alg("dim3");
        let r = skew_from(&a, &v);
        let d = delta_from_r(&r);
        prop_assert!(is_cybe_solution(&r).passed);
        prop_assert!(verify_local_cocycle_bialgebra(&a, &d.delta1, &d.delta2, &d.delta3).passed);
    }

    #[test]
    fn closed_form_agrees(r12 in -9i64..=9, r13 in -9i64..=9, r23 in -9i64..=9) {
        let r = skew_from(&alg("dim3"), &[r12, r13, r23]);
        prop_assert_eq!(delta_from_r(&r).sum(), dim3_delta_closed_form(&s(r12), &s(r13), &s(r23)));
    }

    #[test]
    fn cybe_iff_3sb(v in prop::collection::vec(small(), 6), class in 1u8..=7) {
        let id = if class == 6 { CatalogId::parse("dim4.6", Some(s(-1))).unwrap() } else { format!("dim4.{class}").parse().unwrap() };
        let a = get_algebra(&id);
        let r = skew_from(&a, &v);
        prop_assume!(!r.matrix().determinant().unwrap().is_zero());
        let b = form_from_r(&r).unwrap();
        prop_assert_eq!(verify_3sb(&a, &b).unwrap().passed, is_cybe_solution(&r).passed);
    }
}

#[test]
fn condition_terms_expose_every_basis_element() {
    let a = alg("dim3");
    let r = skew_from(&a, &[1, 1, 1]);
    let terms = thm_condition_terms(&r);
    assert_eq!(terms.iter().map(|t| t.basis).collect::<Vec<_>>(), vec![1, 2, 3]);
    assert!(terms.iter().all(|t| t.summands.iter().all(|s| s.order() == 5)));
}
