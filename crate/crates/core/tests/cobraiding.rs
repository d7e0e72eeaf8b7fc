use std::sync::Arc;

use homq::catalog::groups;
use homq::catalog::matrices::{self, MatrixKind};
use homq::cobraid::{
    check_alpha_invariance, check_recursion_coherence, check_relation_compatibility, verify_cobraided, verify_oqhybe,
    CobraidError, CobraidedHomBialgebra, CobraidingForm,
};
use homq::ncpoly::{NCPoly, Word};
use homq::report::Report;
use homq::scalars::ScalarField;

fn field() -> ScalarField {
    matrices::matrix_field()
}

fn twisted(kind: MatrixKind) -> Arc<CobraidedHomBialgebra> {
    let f = field();
    matrices::twisted(kind, &f, &f.var("lambda").unwrap(), 4).unwrap()
}

fn failed(rep: &Report, name: &str) -> bool {
    rep.get(name).is_some_and(|c| !c.passed())
}

#[test]
fn generator_values() {
    let f = field();
    let c = matrices::untwisted(MatrixKind::Mq2, &f, 4).unwrap();
    assert_eq!(c.eval_text("a", "a").unwrap(), f.parse("q_half").unwrap());
    assert_eq!(
        c.eval_text("b", "c").unwrap(),
        f.parse("q^(-1)*q_half*(q - q^-1)").unwrap()
    );
    assert!(c.eval_text("1", "d").unwrap().is_one());
    assert!(c.eval_text("c", "1").unwrap().is_zero());
    assert!(c.eval_text("ab", "a").unwrap().is_zero());
}

#[test]
fn quantum_matrix_families_satisfy_the_axioms() {
    for kind in [MatrixKind::Mq2, MatrixKind::Slq2, MatrixKind::Mpq2, MatrixKind::Mq11] {
        let c = twisted(kind);
        for rep in [
            verify_cobraided(&c, 2).unwrap(),
            verify_oqhybe(&c, 2).unwrap(),
            check_alpha_invariance(&c, 3).unwrap(),
            check_relation_compatibility(&c, 3).unwrap(),
            check_recursion_coherence(&c, 3).unwrap(),
        ] {
            assert!(rep.passed(), "{}: {}", kind.name(), rep.summary());
        }
    }
}

#[test]
fn general_linear_quantum_group_on_its_domain() {
    let f = field();
    let c = matrices::twisted(MatrixKind::Glq2, &f, &f.parse("3").unwrap(), 4).unwrap();
    let rep = verify_cobraided(&c, 2).unwrap();
    assert!(rep.passed(), "{}", rep.summary());
    assert!(check_alpha_invariance(&c, 2).unwrap().passed());
    let h = c.h();
    let p = h.pres();
    let det = matrices::quantum_determinant(p);
    assert_eq!(h.alpha(&det), det);
    assert_eq!(h.alpha(&p.gen("t")), p.gen("t"));
    assert_eq!(p.multiply(&p.gen("t"), &det), p.one());
    assert!(matches!(c.eval_text("t", "a"), Err(CobraidError::OutsideDomain(_))));
}

#[test]
fn special_linear_determinant_is_one() {
    let f = field();
    let c = matrices::untwisted(MatrixKind::Slq2, &f, 4).unwrap();
    let p = c.h().pres();
    assert_eq!(matrices::quantum_determinant(p), p.one());
}

#[test]
fn determinant_is_central_and_group_like() {
    let f = field();
    let c = matrices::untwisted(MatrixKind::Mq2, &f, 4).unwrap();
    let h = c.h();
    let p = h.pres();
    let det = matrices::quantum_determinant(p);
    assert_eq!(det, p.poly(&[("ad", "1"), ("bc", "-q^-1")]).unwrap());
    for g in ["a", "b", "c", "d"] {
        assert_eq!(p.multiply(&det, &p.gen(g)), p.multiply(&p.gen(g), &det), "{g}");
    }
    assert!(h.is_group_like(&det));
}

fn corrupted(scale: &str) -> CobraidedHomBialgebra {
    let f = field();
    let c = twisted(MatrixKind::Mq2);
    let p = c.h().pres();
    let mut form = matrices::cobraiding_form(p, &matrices::r_matrix(&f, MatrixKind::Mq2));
    let (b, cc) = (p.generator("b").unwrap(), p.generator("c").unwrap());
    let v = form.gen_value(b, cc).unwrap() * &f.parse(scale).unwrap();
    form.set(b, cc, v);
    CobraidedHomBialgebra::new(c.h().clone(), form).unwrap()
}

#[test]
fn doubled_form_value_breaks_quasi_commutativity_and_oqhybe() {
    let bad = corrupted("2");
    let rep = verify_cobraided(&bad, 2).unwrap();
    assert!(failed(&rep, "cobraid_quasi_commutativity"), "{}", rep.summary());
    let rep = verify_oqhybe(&bad, 2).unwrap();
    assert!(failed(&rep, "oqhybe_first"), "{}", rep.summary());
}

#[test]
fn zeroed_form_value_breaks_only_quasi_commutativity() {
    let bad = corrupted("0");
    let rep = verify_cobraided(&bad, 2).unwrap();
    assert!(failed(&rep, "cobraid_quasi_commutativity"));
    assert!(!failed(&rep, "cobraid_product_left"));
    assert!(!failed(&rep, "cobraid_product_right"));
    assert!(verify_oqhybe(&bad, 2).unwrap().passed());
}

#[test]
fn form_with_missing_values_is_rejected() {
    let f = field();
    let c = twisted(MatrixKind::Mq2);
    let form = CobraidingForm::new(4, f.one());
    assert!(CobraidedHomBialgebra::new(c.h().clone(), form).is_err());
}

fn power(g: u8, k: usize) -> Word {
    Word::from_vec(vec![g; k])
}

#[test]
fn finite_anyon_values_after_r_power_twist() {
    for t in 1..=2u32 {
        let c = groups::anyon(5, 2, t, 6).unwrap();
        assert_eq!(c.r_power(), t);
        let rep = verify_cobraided(&c, 4).unwrap();
        assert!(rep.passed(), "t = {t}: {}", rep.summary());
        assert!(verify_oqhybe(&c, 4).unwrap().passed());
        let f = c.h().pres().field().clone();
        let e = 4i64.pow(t);
        for a in 0..5 {
            for b in 0..5 {
                let u = NCPoly::term(power(0, a), f.one());
                let v = NCPoly::term(power(0, b), f.one());
                let want = f.zeta_pow(e * (a * b) as i64).unwrap();
                assert_eq!(c.eval(&u, &v).unwrap(), want, "t = {t}, ({a}, {b})");
            }
        }
    }
}

#[test]
fn anyon_parameters_are_checked() {
    assert!(groups::anyon(5, 0, 1, 4).is_err());
    assert!(groups::anyon(6, 2, 1, 4).is_err());
    assert!(groups::anyon(6, 2, 0, 4).is_ok());
}

#[test]
fn integral_anyon_values() {
    for t in 1..=2u32 {
        let c = groups::integral_anyon(3, t, 6).unwrap();
        let f = c.h().pres().field().clone();
        let elem = |m: i64| {
            let g = if m >= 0 { 0u8 } else { 1u8 };
            NCPoly::term(power(g, m.unsigned_abs() as usize), f.one())
        };
        let e = 9i64.pow(t);
        for m in -2..=2i64 {
            for n in -2..=2i64 {
                let want = f.parse("q").unwrap().pow(e * m * n).unwrap();
                assert_eq!(c.eval(&elem(m), &elem(n)).unwrap(), want, "t = {t}, ({m}, {n})");
            }
        }
        assert!(verify_cobraided(&c, 2).unwrap().passed());
    }
}

#[test]
fn klein_group_twisted_by_a_non_invariant_swap() {
    for t in 0..=1 {
        let c = groups::klein(t, 4).unwrap();
        let rep = verify_cobraided(&c, 2).unwrap();
        assert!(rep.passed(), "{}", rep.summary());
    }
    let c = groups::klein(0, 4).unwrap();
    assert!(!check_alpha_invariance(&c, 2).unwrap().passed());
    assert_eq!(c.eval_text("g", "h").unwrap(), c.h().pres().field().int(-1));
    assert!(c.eval_text("h", "g").unwrap().is_one());
}

#[test]
fn r_power_twist_of_quantum_matrices() {
    let c = twisted(MatrixKind::Mq2);
    for n in 1..=2 {
        let tw = c.twist_r_power(n).unwrap();
        let rep = verify_cobraided(&tw, 2).unwrap();
        assert!(rep.passed(), "n = {n}: {}", rep.summary());
    }
}
