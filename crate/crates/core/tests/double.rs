use proptest::prelude::*;
use trilie::*;

mod common;

use common::*;

fn c(a: &ThreeLieAlgebra, i: usize, j: usize, k: usize, l: usize) -> Scalar {
    a.structure_constant(i + 1, j + 1, k + 1, l + 1).unwrap().clone()
}

/// The 8-term bracket on basis elements of `A⊕A*`, written out with `⟨ad*_{x,y}ξ, z⟩ = −⟨ξ,[x,y,z]⟩`.
fn double_oracle(a: &ThreeLieAlgebra, astar: &ThreeLieAlgebra) -> Tensor {
    let n = a.dim();
    let mut t = Tensor::zeros(4, 2 * n);
    let side = |i: usize| (i >= n, i % n);
    for i in 0..2 * n {
        for j in 0..2 * n {
            for k in 0..2 * n {
                let ids = [side(i), side(j), side(k)];
                let stars = ids.iter().filter(|s| s.0).count();
                for l in 0..n {
                    let (mut on_a, mut on_dual) = (s(0), s(0));
                    match stars {
                        0 => on_a = c(a, ids[0].1, ids[1].1, ids[2].1, l),
                        3 => on_dual = c(astar, ids[0].1, ids[1].1, ids[2].1, l),
                        1 => {
                            // rotate so the dual element is last: [x,y,γ] = ad*_{x,y}γ
                            let p = ids.iter().position(|s| s.0).unwrap();
                            let (x, y, g) = (ids[(p + 1) % 3].1, ids[(p + 2) % 3].1, ids[p].1);
                            on_dual = -c(a, x, y, l, g);
                        }
                        _ => {
                            let p = ids.iter().position(|s| !s.0).unwrap();
                            let (xi, eta, z) = (ids[(p + 1) % 3].1, ids[(p + 2) % 3].1, ids[p].1);
                            on_a = -c(astar, xi, eta, l, z);
                        }
                    }
                    t.set(&[i + 1, j + 1, k + 1, l + 1], on_a).unwrap();
                    t.set(&[i + 1, j + 1, k + 1, n + l + 1], on_dual).unwrap();
                }
            }
        }
    }
    t
}

/// Brute-force invariance over every quadruple.
fn invariance_oracle(a: &ThreeLieAlgebra, b: &BilinearForm) -> bool {
    let n = a.dim();
    let e = |i: usize| Vector::basis(i + 1, n).unwrap();
    for q in 0..n.pow(4) {
        let (x1, x2, x3, x4) = (q / n.pow(3), (q / (n * n)) % n, (q / n) % n, q % n);
        let lhs = b.eval(&a.bracket(&e(x1), &e(x2), &e(x3)).unwrap(), &e(x4)).unwrap();
        let rhs = b.eval(&a.bracket(&e(x1), &e(x2), &e(x4)).unwrap(), &e(x3)).unwrap();
        if !(&lhs + &rhs).is_zero() {
            return false;
        }
    }
    true
}

/// The coefficient identity behind b1, evaluated entry by entry.
fn b1_oracle(a: &ThreeLieAlgebra, delta: &Comultiplication) -> bool {
    let n = a.dim();
    let d = |m: usize, p: usize, q: usize, r: usize| delta.tensor().get(&[m + 1, p + 1, q + 1, r + 1]).unwrap().clone();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for al in 0..n {
                    for be in 0..n {
                        for m in 0..n {
                            let mut v = s(0);
                            for l in 0..n {
                                v += &(&c(a, i, j, k, l) * &d(l, al, be, m));
                                v -= &(&c(a, j, k, l, m) * &d(i, al, be, l));
                                v -= &(&c(a, k, i, l, m) * &d(j, al, be, l));
                                v -= &(&c(a, i, j, l, m) * &d(k, al, be, l));
                            }
                            if !v.is_zero() {
                                return false;
                            }
                        }
                    }
                }
            }
        }
    }
    true
}

fn passes(a: &ThreeLieAlgebra, d: &Comultiplication, eq: BialgebraEquation) -> bool {
    verify_bialgebra_equations(a, d, &[eq]).unwrap()[0].passed
}

fn class1_dual() -> (ThreeLieAlgebra, Comultiplication, ThreeLieAlgebra) {
    let (a, d) = get_paper_bialgebra();
    let dual = yang_baxter::dual_structure(&d).unwrap();
    (a, d, dual)
}

/// Class (1) with only `Δ(e1) = e2∧e3∧e4`: its dual is a 3-Lie algebra but b1 fails.
fn lopsided_delta() -> Comultiplication {
    let a = alg("dim4.1");
    let z = Tensor::zeros(3, 4);
    Comultiplication::from_images(a, &[wedge3(2, 3, 4, 4).unwrap(), z.clone(), z.clone(), z]).unwrap()
}

fn from_kernel(a: &ThreeLieAlgebra, basis: &[Tensor], weights: &[i64]) -> Comultiplication {
    let n = a.dim();
    let mut v = Tensor::zeros(1, n.pow(4));
    for (b, w) in basis.iter().zip(weights) {
        v = &v + &b.scale(&s(*w));
    }
    Comultiplication::new(a.clone(), Tensor::from_vec(4, n, v.data().to_vec()).unwrap()).unwrap()
}

#[test]
fn plus_form_is_nondegenerate() {
    for n in 1..=4 {
        let f = plus_form(n).unwrap();
        assert!(f.is_nondegenerate());
        let det = f.matrix().determinant().unwrap();
        assert!(det == s(1) || det == s(-1));
    }
}

#[test]
fn double_bracket_matches_oracle() {
    let (a, _, dual) = class1_dual();
    let d = double_bracket(&a, &dual).unwrap();
    assert_eq!(d.constants(), &double_oracle(&a, &dual));
    assert!(d.verify_fundamental_identity().passed);
    let other = alg("dim4.5");
    assert_eq!(double_bracket(&alg("dim4.3"), &other).unwrap().constants(), &double_oracle(&alg("dim4.3"), &other));
    assert!(double_bracket(&alg("dim3"), &a).is_err());
}

#[test]
fn zero_dual_gives_semidirect_product() {
    let a = alg("dim4.4");
    let d = double_bracket(&a, &alg("trivial:4")).unwrap();
    let semi = Representation::coadjoint(&a).unwrap().semidirect_product().unwrap();
    assert_eq!(d, semi);
    assert!(double_bracket(&alg("trivial:3"), &alg("trivial:3")).unwrap().is_abelian());
    assert!(verify_manin_triple(&a, &alg("trivial:4")).unwrap().passed);
}

#[test]
fn invariance_examples() {
    let id3 = BilinearForm::new(Matrix::identity(3), Symmetry::Symmetric).unwrap();
    let z = alg("trivial:3");
    assert!(verify_invariance(&z, &id3).unwrap().passed);
    assert!(is_pseudo_metric(&z, &id3).unwrap().passed);
    let report = verify_invariance(&alg("dim3"), &id3).unwrap();
    assert!(!report.passed);
    let w = report.witness.unwrap();
    assert_eq!(w.indices, vec![1, 2, 3, 1]);
    assert_eq!(w.residual, s(1));
    assert!(!invariance_oracle(&alg("dim3"), &id3));
    let degenerate = BilinearForm::new(Matrix::zeros(3, 3), Symmetry::Symmetric).unwrap();
    assert!(!is_pseudo_metric(&z, &degenerate).unwrap().passed);
    assert!(verify_invariance(&alg("dim4.1"), &id3).is_err());
}

#[test]
fn class1_example_is_manin_triple() {
    let (a, _, dual) = class1_dual();
    assert!(verify_manin_triple(&a, &dual).unwrap().passed);
    let broken = ThreeLieAlgebra::from_fn_increasing(4, |i, j, k, l| {
        let v = dual.structure_constant(i, j, k, l).unwrap().clone();
        if [i, j, k, l] == [1, 2, 3, 1] {
            &v + &s(1)
        } else {
            v
        }
    });
    assert!(!verify_manin_triple(&a, &broken).unwrap().passed);
}

#[test]
fn class1_example_bialgebra_equations() {
    let (a, d) = get_paper_bialgebra();
    for eq in BialgebraEquation::ALL {
        let expected = eq != BialgebraEquation::Derivation;
        assert_eq!(passes(&a, &d, eq), expected, "{eq}");
    }
    assert!(b1_oracle(&a, &d));
    assert!(verify_delta_skew(&d).passed);
}

#[test]
fn zero_delta_passes_everything() {
    for id in CatalogId::all_nontrivial(s(1)) {
        let a = get_algebra(&id);
        let z = Comultiplication::zero(a.clone());
        for r in verify_bialgebra_equations(&a, &z, &BialgebraEquation::ALL).unwrap() {
            assert!(r.passed, "{id} {}", r.check);
        }
        let rel = theorem_relations(&a, &z).unwrap();
        assert!(rel.report.passed && rel.bialgebra && rel.manin_triple && rel.matched_pair, "{id}");
    }
}

#[test]
fn theorem_relations_on_examples() {
    let (a, d) = get_paper_bialgebra();
    let rel = theorem_relations(&a, &d).unwrap();
    assert!(rel.report.passed && rel.bialgebra && rel.manin_triple && rel.matched_pair);

    let bad = lopsided_delta();
    assert!(!b1_oracle(&a, &bad));
    let rel = theorem_relations(&a, &bad).unwrap();
    assert!(rel.report.passed);
    assert!(!rel.bialgebra && !rel.manin_triple && !rel.matched_pair);
}

#[test]
fn theorem_relations_needs_a_dual() {
    let a = alg("dim3");
    let mut t = Tensor::zeros(3, 3);
    t.set(&[1, 1, 1], s(1)).unwrap();
    let z = Tensor::zeros(3, 3);
    let d = Comultiplication::from_images(a.clone(), &[t, z.clone(), z]).unwrap();
    assert!(theorem_relations(&a, &d).is_err());
}

#[test]
fn reduced_and_full_matched_pair_agree() {
    let (a, _, dual) = class1_dual();
    let m = MatchedPairData::coadjoint_pair(&a, &dual).unwrap();
    assert!(verify_matched_pair(&m).unwrap().passed);
    assert!(verify_matched_pair_reduced(&a, &dual).unwrap().passed);
    assert!(matched_pair_bracket(&m).verify_fundamental_identity().passed);

    let bad_dual = yang_baxter::dual_structure(&lopsided_delta()).unwrap();
    let m = MatchedPairData::coadjoint_pair(&a, &bad_dual).unwrap();
    assert!(!verify_matched_pair(&m).unwrap().passed);
    assert!(!verify_matched_pair_reduced(&a, &bad_dual).unwrap().passed);
}

#[test]
fn trivial_matched_pair() {
    let z = alg("trivial:2");
    let m = MatchedPairData::new(Representation::zero(z.clone(), 3), Representation::zero(alg("trivial:3"), 2)).unwrap();
    assert!(verify_matched_pair(&m).unwrap().passed);
    assert!(matched_pair_bracket(&m).is_abelian());
    assert!(verify_matched_pair_reduced(&alg("trivial:3"), &alg("trivial:3")).unwrap().passed);
    assert!(MatchedPairData::new(Representation::zero(z, 2), Representation::zero(alg("trivial:3"), 2)).is_err());
}

#[test]
fn incompatible_mu_names_the_equation() {
    // an abelian A′ acting on dim3 by a non-derivation
    let a = alg("dim3");
    let ap = alg("trivial:2");
    let mut e = Matrix::zeros(3, 3);
    e.set(2, 1, s(1)).unwrap();
    let mu = Representation::new(ap.clone(), 3, vec![((1, 2), e)]).unwrap();
    assert!(mu.verify().passed);
    let m = MatchedPairData::new(Representation::zero(a, 2), mu).unwrap();
    let report = verify_matched_pair(&m).unwrap();
    assert!(!report.passed);
    assert_eq!(report.witness.unwrap().equation.as_deref(), Some("deri1"));
    assert!(!matched_pair_bracket(&m).verify_fundamental_identity().passed);
    assert!(report.notes.is_empty());
}

#[test]
fn invalid_representation_is_an_error() {
    let a = alg("dim3");
    let mut e = Matrix::zeros(3, 3);
    e.set(1, 2, s(1)).unwrap();
    let bad = Representation::new(a.clone(), 3, vec![((1, 2), e)]).unwrap();
    assert!(!bad.verify().passed);
    let m = MatchedPairData::new(bad, Representation::zero(a, 3)).unwrap();
    assert!(matches!(verify_matched_pair(&m), Err(Error::Precondition(_))));
}

#[test]
fn full_matched_pair_notes_substitution() {
    let z = alg("trivial:2");
    let m = MatchedPairData::new(Representation::zero(z.clone(), 2), Representation::zero(z, 2)).unwrap();
    let report = verify_matched_pair(&m).unwrap();
    assert!(report.notes.iter().any(|n| n.contains("mp6")));
}

#[test]
fn rigidity_kernels() {
    let cases: [(&str, &[BialgebraConstraint]); 4] = [
        ("dim3", &[BialgebraConstraint::Skew, BialgebraConstraint::B1]),
        ("dim4.2", &[BialgebraConstraint::Skew, BialgebraConstraint::B1, BialgebraConstraint::B2]),
        ("dim4.5", &[BialgebraConstraint::Skew, BialgebraConstraint::B1, BialgebraConstraint::B2]),
        ("dim4.6", &[BialgebraConstraint::Skew, BialgebraConstraint::B1, BialgebraConstraint::B2]),
    ];
    for (id, cons) in cases {
        let alpha = (id == "dim4.6").then(|| s(1));
        let a = get_algebra(&CatalogId::parse(id, alpha).unwrap());
        assert_eq!(solve_bialgebra_space(&a, cons).unwrap().kernel_dim(), 0, "{id}");
    }
}

#[test]
fn class1_kernel_contains_catalog_delta() {
    use BialgebraConstraint::*;
    let (a, d) = get_paper_bialgebra();
    let sol = solve_bialgebra_space(&a, &[Skew, B1, B2]).unwrap();
    assert!(sol.kernel_dim() >= 1);
    // the catalog Δ lies in the span: adding it does not raise the rank
    let mut vectors: Vec<Vec<Scalar>> = sol.kernel_basis.iter().map(|t| t.data().to_vec()).collect();
    let rank_before = Matrix::from_rows(vectors.clone()).unwrap().rank();
    vectors.push(d.tensor().data().to_vec());
    assert_eq!(Matrix::from_rows(vectors).unwrap().rank(), rank_before);
    for b in &sol.kernel_basis {
        let k = from_kernel(&a, std::slice::from_ref(b), &[1]);
        assert!(verify_delta_skew(&k).passed);
        assert!(passes(&a, &k, BialgebraEquation::B1) && passes(&a, &k, BialgebraEquation::B2));
    }
}

#[test]
fn b1_kernel_matches_oracle() {
    let a = alg("dim4.4");
    let sol = solve_bialgebra_space(&a, &[BialgebraConstraint::B1]).unwrap();
    assert!(sol.kernel_dim() > 0);
    for b in sol.kernel_basis.iter().take(8) {
        let k = from_kernel(&a, std::slice::from_ref(b), &[1]);
        assert!(b1_oracle(&a, &k));
    }
}

#[test]
fn local_triples_from_class1_example() {
    let (a, d) = get_paper_bialgebra();
    let third = Scalar::parse("1/3").unwrap();
    let t = local_from_double(&a, &d, [third.clone(), third.clone(), third]).unwrap();
    assert!(yang_baxter::verify_local_cocycle_bialgebra(&a, &t.delta1, &t.delta2, &t.delta3).passed);
    let t = local_from_double(&a, &d, [s(1), s(0), s(0)]).unwrap();
    assert!(yang_baxter::verify_local_cocycle_bialgebra(&a, &t.delta1, &t.delta2, &t.delta3).passed);
    assert!(matches!(local_from_double(&a, &d, [s(1), s(1), s(0)]), Err(Error::InvalidArgument(_))));
    assert!(matches!(local_from_double(&a, &lopsided_delta(), [s(1), s(0), s(0)]), Err(Error::Precondition(_))));
    let z = Comultiplication::zero(a.clone());
    let t = local_from_double(&a, &z, [s(5), s(-7), s(3)]).unwrap();
    assert!(yang_baxter::verify_local_cocycle_bialgebra(&a, &t.delta1, &t.delta2, &t.delta3).passed);
}

fn catalog_id() -> impl Strategy<Value = String> {
    prop_oneof![Just("dim4.1"), Just("dim4.2"), Just("dim4.3"), Just("dim4.4"), Just("dim4.5"), Just("dim4.7")]
        .prop_map(str::to_string)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn plus_form_invariant_on_doubles(x in catalog_id(), y in catalog_id()) {
        let d = double_bracket(&alg(&x), &alg(&y)).unwrap();
        let f = plus_form(4).unwrap();
        prop_assert!(verify_invariance(&d, &f).unwrap().passed);
    }

    #[test]
    fn invariance_matches_oracle(x in catalog_id(), v in prop::collection::vec(-1i64..=1, 10)) {
        let a = alg(&x);
        let mut it = v.iter();
        let mut m = Matrix::zeros(4, 4);
        for i in 1..=4 {
            for j in i..=4 {
                let e = s(*it.next().unwrap());
                m.set(i, j, e.clone()).unwrap();
                m.set(j, i, e).unwrap();
            }
        }
        let b = BilinearForm::new(m, Symmetry::Symmetric).unwrap();
        prop_assert_eq!(verify_invariance(&a, &b).unwrap().passed, invariance_oracle(&a, &b));
    }

    #[test]
    fn variants_agree_on_b1_solutions(x in catalog_id(), w in prop::collection::vec(-2i64..=2, 64)) {
        use BialgebraConstraint::*;
        let a = alg(&x);
        let sol = solve_bialgebra_space(&a, &[Skew, B1]).unwrap();
        let d = from_kernel(&a, &sol.kernel_basis, &w);
        prop_assert!(b1_oracle(&a, &d));
        for eq in [BialgebraEquation::B1, BialgebraEquation::B1V1, BialgebraEquation::B1V2] {
            prop_assert!(passes(&a, &d, eq), "{}", eq);
        }
        let b2 = passes(&a, &d, BialgebraEquation::B2);
        for eq in [BialgebraEquation::B2V1, BialgebraEquation::B2V2] {
            prop_assert_eq!(passes(&a, &d, eq), b2);
        }
        let b3 = passes(&a, &d, BialgebraEquation::B3);
        for eq in [BialgebraEquation::B3V1, BialgebraEquation::B3V2] {
            prop_assert_eq!(passes(&a, &d, eq), b3);
        }
        // any two of b1, b2, b3 force the third
        prop_assert!(!b2 || b3);
        prop_assert!(!b3 || b2);
    }

    #[test]
    fn variants_agree_on_random_skew_delta(x in catalog_id(), w in prop::collection::vec(-1i64..=1, 16)) {
        let a = alg(&x);
        let wedges = [[2, 3, 4], [1, 3, 4], [1, 2, 4], [1, 2, 3]];
        let images: Vec<Tensor> = (0..4)
            .map(|m| {
                let mut t = Tensor::zeros(3, 4);
                for (q, [i, j, k]) in wedges.iter().enumerate() {
                    t = &t + &wedge3(*i, *j, *k, 4).unwrap().scale(&s(w[m * 4 + q]));
                }
                t
            })
            .collect();
        let d = Comultiplication::from_images(a.clone(), &images).unwrap();
        for eq in BialgebraEquation::ALL {
            if let Some(parent) = eq.parent() {
                prop_assert_eq!(passes(&a, &d, eq), passes(&a, &d, parent), "{}", eq);
            }
        }
        prop_assert_eq!(passes(&a, &d, BialgebraEquation::B1), b1_oracle(&a, &d));
    }

    #[test]
    fn relations_agree_on_r_matrix_duals(v in prop::collection::vec(-1i64..=1, 6), x in catalog_id()) {
        let a = alg(&x);
        let r = skew_from(&a, &v);
        let d = delta_from_r(&r).sum();
        if let Ok(dual) = yang_baxter::dual_structure(&d) {
            if dual.verify_fundamental_identity().passed {
                let rel = theorem_relations(&a, &d).unwrap();
                prop_assert!(rel.report.passed, "{:?}", rel.report.notes);
                let m = MatchedPairData::coadjoint_pair(&a, &dual).unwrap();
                let full = verify_matched_pair(&m).unwrap().passed;
                prop_assert_eq!(full, rel.matched_pair);
                if full {
                    prop_assert!(matched_pair_bracket(&m).verify_fundamental_identity().passed);
                }
            }
        }
    }
}
