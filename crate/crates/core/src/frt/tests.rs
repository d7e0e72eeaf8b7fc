use super::*;
use crate::catalog::matrices::matrix_field;

#[test]
fn missing_entries_read_as_zero() {
    let f = matrix_field();
    let s = RMatrixSpec::sl2(&f);
    assert!(s.c(1, 1, 2, 2).is_zero());
    assert_eq!(s.c(1, 1, 1, 1), f.parse("t").unwrap());
    assert_eq!(s.nonzero().count(), 5);
}

#[test]
fn setting_zero_removes_the_entry() {
    let f = matrix_field();
    let mut s = RMatrixSpec::sl2(&f);
    s.set(2, 1, 2, 1, f.zero()).unwrap();
    assert_eq!(s.nonzero().count(), 4);
    assert!(matches!(s.set(0, 1, 1, 1, f.one()), Err(FrtError::Index(0, 2))));
}

#[test]
fn gamma_columns_are_images_of_basis_tensors() {
    let f = matrix_field();
    let g = RMatrixSpec::sl2(&f).gamma();
    // γ(v_1⊗v_2) = t⁻¹ v_2⊗v_1
    assert_eq!(g.get(2, 1), &f.parse("t^-1").unwrap());
    // γ(v_2⊗v_1) = t⁻¹ v_1⊗v_2 + t⁻¹(q − q⁻¹) v_2⊗v_1
    assert_eq!(g.get(1, 2), &f.parse("t^-1").unwrap());
    assert_eq!(g.get(2, 2), &f.parse("t^-1*(q - q^-1)").unwrap());
    assert!(g.get(0, 3).is_zero());
}

#[test]
fn standard_solutions_satisfy_ybe() {
    let f = matrix_field();
    for s in [
        RMatrixSpec::identity(&f, 3),
        RMatrixSpec::flip(&f, 3),
        RMatrixSpec::sl2(&f),
        RMatrixSpec::mpq2(&f),
        RMatrixSpec::mq11(&f),
    ] {
        assert!(verify_ybe(&s).passed());
    }
}
