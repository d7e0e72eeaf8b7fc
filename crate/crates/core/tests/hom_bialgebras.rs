use std::sync::Arc;

use homq::catalog::matrices::{self, MatrixKind};
use homq::hombialg::{verify_hom_bialgebra, verify_morphism, HomBialgebra, HomError};
use homq::ncpoly::{NCPoly, Tensor};

fn field() -> homq::scalars::ScalarField {
    matrices::matrix_field()
}

fn mq2() -> Arc<HomBialgebra> {
    matrices::untwisted(MatrixKind::Mq2, &field(), 4).unwrap().h().clone()
}

#[test]
fn coproduct_of_a() {
    let h = mq2();
    let p = h.pres();
    let d = h.delta(&p.gen("a"));
    assert_eq!(h.render_tensor(&d), render_sorted(&h, &["a ⊗ a", "b ⊗ c"]));
}

fn render_sorted(h: &HomBialgebra, parts: &[&str]) -> String {
    let p = h.pres();
    let mut t = Tensor::zero();
    for s in parts {
        let (l, r) = s.split_once(" ⊗ ").unwrap();
        t.add_term(
            vec![p.parse_word(l).unwrap(), p.parse_word(r).unwrap()],
            p.field().one(),
        );
    }
    h.render_tensor(&t)
}

#[test]
fn quantum_determinant_is_group_like_and_central() {
    let h = mq2();
    let p = h.pres();
    let det = matrices::quantum_determinant(p);
    assert_eq!(
        p.render_poly(&det),
        p.render_poly(&p.poly(&[("ad", "1"), ("bc", "-q^-1")]).unwrap())
    );
    assert!(h.is_group_like(&det));
    for g in ["a", "b", "c", "d"] {
        let x = p.gen(g);
        assert!((&p.multiply(&det, &x) - &p.multiply(&x, &det)).is_zero(), "{g}");
    }
}

#[test]
fn twisted_coproduct_matches_matrix_formula() {
    let f = field();
    let lambda = f.var("lambda").unwrap();
    let c = matrices::twisted(MatrixKind::Mq2, &f, &lambda, 4).unwrap();
    let h = c.h();
    let p = h.pres();
    let term = |l: &str, r: &str, coef: &str| {
        let mut t = Tensor::zero();
        t.add_term(
            vec![p.parse_word(l).unwrap(), p.parse_word(r).unwrap()],
            f.parse(coef).unwrap(),
        );
        t
    };
    let expect = [
        ("a", &term("a", "a", "1") + &term("b", "c", "1")),
        ("b", &term("a", "b", "lambda") + &term("b", "d", "lambda")),
        ("c", &term("c", "a", "lambda^-1") + &term("d", "c", "lambda^-1")),
        ("d", &term("c", "b", "1") + &term("d", "d", "1")),
    ];
    for (g, t) in expect {
        assert_eq!(h.delta(&p.gen(g)), t, "{g}");
    }
    assert_eq!(h.alpha(&p.gen("b")), p.poly(&[("b", "lambda")]).unwrap());
}

#[test]
fn corrupted_alpha_is_rejected() {
    let h = mq2();
    let p = h.pres();
    let one = p.field().one();
    let table: Vec<NCPoly> = p
        .generators()
        .iter()
        .map(|g| match g.as_str() {
            "b" => p.poly(&[("b", "lambda")]).unwrap(),
            other => NCPoly::term(p.gen_word(other), one.clone()),
        })
        .collect();
    let rep = verify_morphism(&table, &h).unwrap();
    let fail = rep.get("morphism_relations").unwrap();
    assert!(!fail.passed());
    assert!(fail.witness.as_ref().unwrap().to_string().contains("da"));
    assert!(matches!(h.twist(table), Err(HomError::NotMorphism(_))));
}

#[test]
fn twisted_axioms_hold_at_degree_three() {
    let f = field();
    let c = matrices::twisted(MatrixKind::Mq2, &f, &f.int(2), 4).unwrap();
    let rep = verify_hom_bialgebra(c.h(), 3).unwrap();
    assert!(rep.passed(), "{}", rep.summary());
}

#[test]
fn half_twist_breaks_coassociativity() {
    let f = field();
    let base = mq2();
    let table = matrices::alpha_table(base.pres(), &f.var("lambda").unwrap()).unwrap();
    let bad = base.twist_unchecked(table, true, false);
    let rep = verify_hom_bialgebra(&bad, 1).unwrap();
    let c = rep.get("hom_coassociativity").unwrap();
    assert!(!c.passed());
    assert!(c.witness.is_some());
}

fn poly_from(h: &HomBialgebra, terms: &[(Vec<u8>, i64)]) -> NCPoly {
    let p = h.pres();
    let mut out = NCPoly::zero();
    for (w, c) in terms {
        let w: Vec<u8> = w.iter().map(|g| g % 4).collect();
        out.add_term(homq::ncpoly::word(&w), p.field().int(*c));
    }
    p.normal_form(&out)
}

fn terms() -> impl proptest::strategy::Strategy<Value = Vec<(Vec<u8>, i64)>> {
    use proptest::prelude::*;
    prop::collection::vec((prop::collection::vec(0u8..4, 0..3), -3i64..=3), 1..4)
}

proptest::proptest! {
    #![proptest_config(proptest::prelude::ProptestConfig::with_cases(40))]

    #[test]
    fn identity_twist_changes_nothing(x in terms(), y in terms()) {
        let h = mq2();
        let p = h.pres();
        let id: Vec<NCPoly> = p.generators().iter().map(|g| p.gen(g)).collect();
        let t = h.twist(id).unwrap();
        let (u, v) = (poly_from(&h, &x), poly_from(&h, &y));
        proptest::prop_assert_eq!(t.mu(&u, &v), h.mu(&u, &v));
        proptest::prop_assert_eq!(t.delta(&u), h.delta(&u));
    }

    #[test]
    fn twisted_structure_maps_compose_with_alpha(x in terms(), y in terms()) {
        let f = field();
        let c = matrices::twisted(MatrixKind::Mq2, &f, &f.var("lambda").unwrap(), 4).unwrap();
        let t = c.h();
        let base = t.base();
        let (u, v) = (poly_from(t, &x), poly_from(t, &y));
        proptest::prop_assert_eq!(t.mu(&u, &v), t.alpha(&base.mu(&u, &v)));
        proptest::prop_assert_eq!(t.delta(&u), t.alpha_tensor(&base.delta(&u)));
        proptest::prop_assert_eq!(t.alpha(&t.mu(&u, &v)), t.mu(&t.alpha(&u), &t.alpha(&v)));
    }
}
