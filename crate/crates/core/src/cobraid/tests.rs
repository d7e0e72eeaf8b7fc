use super::*;
use crate::catalog::matrices::{self, MatrixKind};

fn mq2() -> Arc<CobraidedHomBialgebra> {
    matrices::untwisted(MatrixKind::Mq2, &matrices::matrix_field(), 4).unwrap()
}

#[test]
fn validation_names_the_missing_entry() {
    let c = mq2();
    let p = c.h().pres();
    let names = p.generators();
    let mut form = matrices::cobraiding_form(p, &matrices::r_matrix(p.field(), MatrixKind::Mq2));
    form.gen_table.remove(&(0, 1));
    assert_eq!(
        form.validate(names),
        Err(CobraidError::MissingPair("b".into(), "c".into()))
    );
    let mut form = CobraidingForm::new(4, p.field().one());
    for g in 0..4 {
        for h in 0..4 {
            form.set(g, h, p.field().one());
        }
    }
    assert_eq!(form.validate(names), Err(CobraidError::MissingUnit("b".into())));
}

#[test]
fn restricted_domain_skips_validation_outside() {
    let f = matrices::matrix_field();
    let mut form = CobraidingForm::new(2, f.one());
    form.set(0, 0, f.one());
    form.set_unit_left(0, f.one());
    form.set_unit_right(0, f.one());
    form.restrict(vec![true, false]);
    assert!(form.validate(&["g".into(), "t".into()]).is_ok());
    assert!(form.in_domain(&crate::ncpoly::word(&[0, 0])));
    assert!(!form.in_domain(&crate::ncpoly::word(&[0, 1])));
}

#[test]
fn evaluation_is_bilinear_and_cached_consistently() {
    let c = mq2();
    let p = c.h().pres();
    let u = p.poly(&[("a", "2"), ("bc", "q")]).unwrap();
    let v = p.poly(&[("d", "1"), ("1", "-1")]).unwrap();
    let mut parts = p.field().zero();
    for (w1, c1) in u.terms() {
        for (w2, c2) in v.terms() {
            parts = parts + &(c1 * c2) * &c.eval_base_words(w1, w2);
        }
    }
    assert_eq!(c.eval(&u, &v).unwrap(), parts);
    assert_eq!(c.eval(&u, &v).unwrap(), parts);
}
