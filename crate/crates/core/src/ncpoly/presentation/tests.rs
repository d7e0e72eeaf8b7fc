use proptest::prelude::*;

use super::*;
use crate::ncpoly::word;

fn field() -> ScalarField {
    ScalarField::rational(&["t"])
}

fn mq2() -> Presentation {
    Presentation::builder(&field(), &["b", "c", "a", "d"])
        .rule("ab", &[("ba", "q^-1")])
        .unwrap()
        .rule("ac", &[("ca", "q^-1")])
        .unwrap()
        .rule("db", &[("bd", "q")])
        .unwrap()
        .rule("dc", &[("cd", "q")])
        .unwrap()
        .rule("cb", &[("bc", "1")])
        .unwrap()
        .rule("da", &[("ad", "1"), ("bc", "q - q^-1")])
        .unwrap()
        .build(4)
        .unwrap()
}

fn plane_standard() -> Presentation {
    Presentation::builder(&field(), &["x", "y"])
        .rule("yx", &[("xy", "q")])
        .unwrap()
        .build(4)
        .unwrap()
}

fn plane_fermionic() -> Presentation {
    Presentation::builder(&field(), &["x", "y"])
        .rule("xx", &[])
        .unwrap()
        .rule("yy", &[])
        .unwrap()
        .rule("yx", &[("xy", "-q^-1")])
        .unwrap()
        .build(4)
        .unwrap()
}

#[test]
fn mq2_normal_forms() {
    let p = mq2();
    let f = field();
    let ba = p.nf_word(&p.parse_word("ba").unwrap());
    assert_eq!(ba, p.poly(&[("ba", "1")]).unwrap());
    // ab is rewritten towards ba, so ba itself is the normal word and
    // the relation reads ab = q^-1 ba.
    let ab = p.nf_word(&p.parse_word("ab").unwrap());
    assert_eq!(ab, p.poly(&[("ba", "q^-1")]).unwrap());
    let da = p.nf_word(&p.parse_word("da").unwrap());
    assert_eq!(da, p.poly(&[("ad", "1"), ("bc", "q - q^-1")]).unwrap());
    assert_eq!(
        p.render_poly(&da),
        format!("ad + ({})*bc", f.parse("q - q^-1").unwrap())
    );
}

#[test]
fn standard_plane_yxx() {
    let p = plane_standard();
    let w = p.nf_word(&p.parse_word("yxx").unwrap());
    assert_eq!(w, p.poly(&[("xxy", "q^2")]).unwrap());
}

#[test]
fn plane_products() {
    let s = plane_standard();
    let x = s.gen("x");
    let y = s.gen("y");
    assert_eq!(s.multiply(&x, &y), s.poly(&[("xy", "1")]).unwrap());
    let f = plane_fermionic();
    assert_eq!(
        f.multiply(&f.gen("y"), &f.gen("x")),
        f.poly(&[("xy", "-q^-1")]).unwrap()
    );
    assert!(f.multiply(&f.gen("x"), &f.gen("x")).is_zero());
}

#[test]
fn confluence_passes_and_fails() {
    assert!(mq2().check_local_confluence(4).passed());
    assert!(plane_fermionic().check_local_confluence(4).passed());
    let bad = Presentation::builder(&field(), &["a", "b"])
        .rule("ba", &[("ab", "1")])
        .unwrap()
        .rule("ba", &[("ab", "2")])
        .unwrap()
        .build(4)
        .unwrap();
    let rep = bad.check_local_confluence(4);
    assert!(!rep.passed());
    let w = rep.checks[0].witness.as_ref().unwrap();
    assert_eq!(w["critical_pair"], "ba");
}

#[test]
fn rejects_non_decreasing_rule() {
    let r = Presentation::builder(&field(), &["a", "b"])
        .rule("ab", &[("ba", "1")])
        .unwrap()
        .build(4);
    assert!(matches!(r, Err(PresentationError::NotDecreasing { .. })));
}

#[test]
fn graded_bases() {
    let f = plane_fermionic();
    let b = f.graded_basis(Some(2)).unwrap();
    let names: Vec<String> = b.iter().map(|w| f.render_word(w)).collect();
    assert_eq!(names, ["1", "x", "y", "xy"]);
    assert_eq!(f.graded_basis(None).unwrap().len(), 4);
    let s = plane_standard();
    let names: Vec<String> = s
        .graded_basis(Some(2))
        .unwrap()
        .iter()
        .map(|w| s.render_word(w))
        .collect();
    assert_eq!(names, ["1", "x", "y", "xx", "xy", "yy"]);
    assert!(matches!(s.graded_basis(None), Err(PresentationError::NotFinite(_))));
    assert_eq!(mq2().graded_basis(Some(2)).unwrap().len(), 1 + 4 + 10);
}

#[test]
fn word_parsing() {
    let p = mq2();
    assert_eq!(p.parse_word("a^2b").unwrap(), word(&[2, 2, 0]));
    assert_eq!(p.parse_word("1").unwrap(), Word::new());
    let q = Presentation::builder(&field(), &["K", "Xp", "Xm"]).build(2).unwrap();
    let w = q.parse_word("K*Xp*Xm").unwrap();
    assert_eq!(q.render_word(&w), "K*Xp*Xm");
    assert!(p.parse_word("z").is_err());
}

fn arb_poly(ngens: u8) -> impl Strategy<Value = Vec<(Vec<u8>, i64)>> {
    prop::collection::vec((prop::collection::vec(0..ngens, 0..5), -3i64..4), 0..6)
}

fn build(p: &Presentation, raw: &[(Vec<u8>, i64)]) -> NCPoly {
    let mut out = NCPoly::zero();
    for (w, c) in raw {
        out.add_term(word(w), p.field().int(*c));
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn normal_form_idempotent_and_linear(a in arb_poly(4), b in arb_poly(4)) {
        let p = mq2();
        let (x, y) = (build(&p, &a), build(&p, &b));
        let nx = p.normal_form(&x);
        prop_assert_eq!(p.normal_form(&nx), nx.clone());
        let ny = p.normal_form(&y);
        prop_assert_eq!(p.normal_form(&(&x + &y)), &nx + &ny);
        prop_assert_eq!(p.multiply(&p.one(), &nx), nx.clone());
        prop_assert_eq!(p.multiply(&nx, &p.one()), nx);
    }

    #[test]
    fn multiply_associative(a in arb_poly(4), b in arb_poly(4), c in arb_poly(4)) {
        let p = mq2();
        let (x, y, z) = (
            p.normal_form(&build(&p, &a)),
            p.normal_form(&build(&p, &b)),
            p.normal_form(&build(&p, &c)),
        );
        prop_assert_eq!(
            p.multiply(&p.multiply(&x, &y), &z),
            p.multiply(&x, &p.multiply(&y, &z))
        );
    }
}
