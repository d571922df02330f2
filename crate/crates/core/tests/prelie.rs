use proptest::prelude::*;
use trilie::prelie::{alternate_prelie_constants, verify_form_prelie};
use trilie::yang_baxter::{form_from_r, verify_3sb};
use trilie::*;

mod common;

use common::*;

fn coadjoint(a: &ThreeLieAlgebra) -> Representation {
    Representation::coadjoint(a).unwrap()
}

/// The dim-3 O-operator from a skew `r`, seen as `A* → A`.
fn dim3_operator(upper: &[i64]) -> (ThreeLieAlgebra, Representation, LinearOperator) {
    let a = alg("dim3");
    let r = skew_from(&a, upper);
    let rep = coadjoint(&a);
    (a, rep, LinearOperator::new(r.as_map()))
}

/// `[Tu,Tv,Tw] − T(ρ(Tu,Tv)w + ρ(Tv,Tw)u + ρ(Tw,Tu)v)` by plain loops over all triples.
fn o_operator_oracle(t: &Matrix, a: &ThreeLieAlgebra, rep: &Representation) -> bool {
    let m = rep.module_dim();
    let col = |i: usize| t.column(i).unwrap();
    let e = |i: usize| Vector::basis(i, m).unwrap();
    for i in 1..=m {
        for j in 1..=m {
            for k in 1..=m {
                let lhs = a.bracket(&col(i), &col(j), &col(k)).unwrap();
                let mut inner = rep.rho_of(&col(i), &col(j)).unwrap().apply(&e(k)).unwrap();
                inner = &inner + &rep.rho_of(&col(j), &col(k)).unwrap().apply(&e(i)).unwrap();
                inner = &inner + &rep.rho_of(&col(k), &col(i)).unwrap().apply(&e(j)).unwrap();
                if lhs != t.apply(&inner).unwrap() {
                    return false;
                }
            }
        }
    }
    true
}

#[test]
fn zero_operator() {
    let a = alg("dim3");
    let rep = coadjoint(&a);
    let t = LinearOperator::zero(3, 3);
    assert!(verify_o_operator(&t, &a, &rep).unwrap().passed);
    let (big, r) = r_from_o_operator(&t, &a, &rep).unwrap();
    assert_eq!(big.dim(), 6);
    assert!(r.matrix().is_zero());
    assert!(is_cybe_solution(&r).passed);
    let p = prelie_from_o_operator(&t, &a, &rep).unwrap();
    assert!(p.constants().is_zero());
}

#[test]
fn shape_mismatch_is_an_error() {
    let a = alg("dim3");
    let rep = coadjoint(&a);
    assert!(verify_o_operator(&LinearOperator::zero(2, 3), &a, &rep).is_err());
}

#[test]
fn skew_cybe_solution_is_o_operator() {
    let (a, rep, t) = dim3_operator(&[1, -2, 3]);
    assert!(verify_o_operator(&t, &a, &rep).unwrap().passed);
    let (big, r) = r_from_o_operator(&t, &a, &rep).unwrap();
    assert!(r.is_skew());
    let rrr = triple_r_bracket(&r);
    assert_eq!(rrr, rrr_oracle(&r));
    assert!(rrr.is_zero());
    assert!(big.verify_fundamental_identity().passed);
}

#[test]
fn identity_on_dim3_is_not_rota_baxter() {
    let a = alg("dim3");
    let rep = Representation::adjoint(&a).unwrap();
    let t = LinearOperator::identity(3);
    assert!(!verify_o_operator(&t, &a, &rep).unwrap().passed);
    assert!(!o_operator_oracle(t.matrix(), &a, &rep));
    let (_, r) = r_from_o_operator(&t, &a, &rep).unwrap();
    let rrr = triple_r_bracket(&r);
    assert_eq!(rrr, rrr_oracle(&r));
    assert!(!is_cybe_solution(&r).passed);
}

#[test]
fn prelie_from_dim3_operator() {
    let (a, rep, t) = dim3_operator(&[2, 1, -1]);
    let p = prelie_from_o_operator(&t, &a, &rep).unwrap();
    assert!(verify_prelie(&p).passed);
    let sub = subadjacent(&p).unwrap();
    assert!(sub.verify_fundamental_identity().passed);
    assert!(ThreeLieAlgebra::is_morphism(&sub, &a, t.matrix()).unwrap().passed);
    assert!(left_representation(&p).unwrap().verify().passed);
}

#[test]
fn prelie_from_non_o_operator_is_rejected() {
    let a = alg("dim3");
    let rep = Representation::adjoint(&a).unwrap();
    assert!(prelie_from_o_operator(&LinearOperator::identity(3), &a, &rep).is_err());
}

#[test]
fn identity_is_o_operator_for_left_representation() {
    let (a, rep, t) = dim3_operator(&[1, 1, 1]);
    let p = prelie_from_o_operator(&t, &a, &rep).unwrap();
    let sub = subadjacent(&p).unwrap();
    let left = left_representation(&p).unwrap();
    let id = LinearOperator::identity(p.dim());
    assert!(verify_o_operator(&id, &sub, &left).unwrap().passed);
}

#[test]
fn alternate_formula_breaks_first_slot_antisymmetry() {
    let (a, rep, t) = dim3_operator(&[2, 1, -1]);
    let c = alternate_prelie_constants(&t, &a, &rep).unwrap();
    assert!(!c.is_antisymmetric_in(1, 2).unwrap());
    assert!(PreLieAlgebra::new(c).is_err());
}

#[test]
fn invalid_prelie_reports_axiom() {
    // {e1,e2,e3} = e1 alone: the cyclic bracket is the dim-3 algebra, but L fails to represent it
    let p = PreLieAlgebra::from_products(3, &[([1, 2, 3], vec![(1, s(1))])]).unwrap();
    let report = verify_prelie(&p);
    assert!(!report.passed);
    let label = report.witness.unwrap().equation.unwrap();
    assert!(label == "d2" || label == "d3", "{label}");
    assert!(subadjacent(&p).is_err());
}

fn invertible_class_instance() -> (ThreeLieAlgebra, RElement) {
    let a = alg("dim4.3");
    let r = skew_from(&a, &[1, 0, 0, 0, 0, 1]);
    (a, r)
}

#[test]
fn compatible_prelie_reproduces_bracket() {
    let (a, r) = invertible_class_instance();
    assert!(is_cybe_solution(&r).passed);
    let rep = coadjoint(&a);
    let t = LinearOperator::new(r.as_map());
    let p = compatible_prelie_from_invertible_o(&t, &a, &rep).unwrap();
    assert!(verify_prelie(&p).passed);
    assert_eq!(subadjacent(&p).unwrap(), a);
}

#[test]
fn form_and_operator_paths_agree() {
    let (a, r) = invertible_class_instance();
    let b = form_from_r(&r).unwrap();
    assert!(verify_3sb(&a, &b).unwrap().passed);
    let from_form = prelie_from_form(&a, &b).unwrap();
    assert!(verify_form_prelie(&a, &b, &from_form).unwrap().passed);
    assert!(verify_prelie(&from_form).passed);
    let t = LinearOperator::new(r.as_map());
    let from_op = compatible_prelie_from_invertible_o(&t, &a, &coadjoint(&a)).unwrap();
    assert_eq!(from_form, from_op);
}

#[test]
fn zero_algebra_compatible_prelie() {
    let z = alg("trivial:3");
    let rep = Representation::zero(z.clone(), 3);
    let p = compatible_prelie_from_invertible_o(&LinearOperator::identity(3), &z, &rep).unwrap();
    assert!(p.constants().is_zero());
    let z4 = alg("trivial:4");
    let b = form_from_r(&skew_from(&z4, &[1, 2, 0, 0, 3, 1])).unwrap();
    assert!(prelie_from_form(&z4, &b).unwrap().constants().is_zero());
}

#[test]
fn singular_operator_rejected() {
    let (a, rep, t) = dim3_operator(&[1, 2, 3]);
    assert!(matches!(compatible_prelie_from_invertible_o(&t, &a, &rep), Err(Error::Singular(_))));
}

#[test]
fn canonical_r_from_dim3_prelie() {
    let (a, rep, t) = dim3_operator(&[2, 1, -1]);
    let p = prelie_from_o_operator(&t, &a, &rep).unwrap();
    let (big, r) = canonical_r(&p).unwrap();
    assert_eq!(big.dim(), 6);
    assert!(r.is_skew());
    assert!(big.verify_fundamental_identity().passed);
    let rrr = triple_r_bracket(&r);
    assert_eq!(rrr, rrr_oracle(&r));
    assert!(rrr.is_zero());
}

#[test]
fn canonical_r_on_zero_prelie() {
    let (big, r) = canonical_r(&PreLieAlgebra::zero(2)).unwrap();
    assert!(big.is_abelian());
    assert!(is_cybe_solution(&r).passed);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn o_operator_iff_cybe(v in prop::collection::vec(-2i64..=2, 9), skew in any::<bool>()) {
        let a = alg("dim3");
        let rep = coadjoint(&a);
        let mut m = Matrix::from_fn(3, 3, |i, j| s(v[(i - 1) * 3 + j - 1]));
        if skew {
            m = &m - &m.transpose();
        }
        let t = LinearOperator::new(m);
        let is_o = verify_o_operator(&t, &a, &rep).unwrap().passed;
        prop_assert_eq!(is_o, o_operator_oracle(t.matrix(), &a, &rep));
        let (_, r) = r_from_o_operator(&t, &a, &rep).unwrap();
        prop_assert_eq!(is_cybe_solution(&r).passed, is_o);
    }

    #[test]
    fn skew_r_cybe_iff_coadjoint_o_operator(v in prop::collection::vec(-2i64..=2, 6), class in 1u8..=5) {
        let a = alg(&format!("dim4.{class}"));
        let r = skew_from(&a, &v);
        let t = LinearOperator::new(r.as_map());
        prop_assert_eq!(verify_o_operator(&t, &a, &coadjoint(&a)).unwrap().passed, is_cybe_solution(&r).passed);
    }

    #[test]
    fn skew_operators_give_prelie(v in prop::collection::vec(-3i64..=3, 3)) {
        let (a, rep, t) = dim3_operator(&v);
        let p = prelie_from_o_operator(&t, &a, &rep).unwrap();
        prop_assert!(verify_prelie(&p).passed);
        let sub = subadjacent(&p).unwrap();
        prop_assert!(ThreeLieAlgebra::is_morphism(&sub, &a, t.matrix()).unwrap().passed);
        prop_assert!(left_representation(&p).unwrap().verify().passed);
    }
}
