use homq::catalog::matrices::{self, MatrixKind};
use homq::cobraid::{check_alpha_invariance, verify_cobraided, verify_oqhybe};
use homq::frt::{frt_construct, frt_twist, lambda_endomorphism, verify_ybe, FrtError, FrtNaming, RMatrixSpec};
use homq::ncpoly::{Presentation, Word};
use homq::scalars::{Scalar, ScalarField};

fn field() -> ScalarField {
    matrices::matrix_field()
}

fn words(ngens: u8, max_len: usize) -> Vec<Word> {
    let mut all = vec![Word::new()];
    let mut level = vec![Word::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &level {
            for g in 0..ngens {
                let mut v = w.clone();
                v.push(g);
                next.push(v);
            }
        }
        all.extend(next.iter().cloned());
        level = next;
    }
    all
}

/// Normal forms agree on every word up to `max_len`, compared by rendered text.
fn same_normal_forms(a: &Presentation, b: &Presentation, max_len: usize) {
    assert_eq!(a.generators(), b.generators());
    for w in words(a.generators().len() as u8, max_len) {
        let x = a.render_poly(&a.nf_word(&w));
        let y = b.render_poly(&b.nf_word(&w));
        assert_eq!(x, y, "word {}", a.render_word(&w));
    }
}

#[test]
fn sl2_gives_the_quantum_matrices() {
    let f = field();
    let inst = frt_construct(&RMatrixSpec::sl2(&f), &FrtNaming::quantum_matrices(), 4).unwrap();
    assert_eq!(inst.retained, 6);
    assert_eq!(inst.chb.h().pres().rules().len(), 6);
    let hand = matrices::presentation(&f, MatrixKind::Mq2, 4).unwrap();
    same_normal_forms(inst.chb.h().pres(), &hand, 3);
}

#[test]
fn other_specs_give_their_catalog_presentations() {
    let f = field();
    for (spec, kind, rules) in [
        (RMatrixSpec::mpq2(&f), MatrixKind::Mpq2, 6),
        (RMatrixSpec::mq11(&f), MatrixKind::Mq11, 8),
    ] {
        let inst = frt_construct(&spec, &FrtNaming::quantum_matrices(), 4).unwrap();
        assert_eq!(inst.retained, rules, "{}", kind.name());
        let hand = matrices::presentation(&f, kind, 4).unwrap();
        same_normal_forms(inst.chb.h().pres(), &hand, 3);
    }
}

#[test]
fn frt_forms_match_catalog_forms() {
    let f = field();
    for kind in [MatrixKind::Mq2, MatrixKind::Mpq2, MatrixKind::Mq11] {
        let inst = frt_construct(&matrices::r_matrix(&f, kind), &FrtNaming::quantum_matrices(), 4).unwrap();
        let cat = matrices::untwisted(kind, &f, 4).unwrap();
        for x in ["a", "b", "c", "d", "ab", "1"] {
            for y in ["a", "b", "c", "d", "cd", "1"] {
                assert_eq!(
                    inst.chb.eval_text(x, y).unwrap(),
                    cat.eval_text(x, y).unwrap(),
                    "{}: R({x}, {y})",
                    kind.name()
                );
            }
        }
    }
}

#[test]
fn identity_spec_gives_the_free_algebra() {
    let f = ScalarField::rational(&["t"]);
    let inst = frt_construct(&RMatrixSpec::identity(&f, 2), &FrtNaming::standard(2), 3).unwrap();
    assert_eq!(inst.retained, 0);
    let p = inst.chb.h().pres();
    assert_eq!(p.graded_basis(Some(2)).unwrap().len(), 1 + 4 + 16);
}

#[test]
fn flip_spec_gives_the_commutative_algebra() {
    let f = ScalarField::rational(&["t"]);
    let inst = frt_construct(&RMatrixSpec::flip(&f, 2), &FrtNaming::standard(2), 3).unwrap();
    assert_eq!(inst.retained, 6);
    let p = inst.chb.h().pres();
    assert_eq!(p.graded_basis(Some(2)).unwrap().len(), 1 + 4 + 10);
    let (x, y) = (p.gen("T12"), p.gen("T21"));
    assert_eq!(p.multiply(&x, &y), p.multiply(&y, &x));
}

#[test]
fn non_solutions_are_rejected() {
    let f = field();
    let mut spec = RMatrixSpec::sl2(&f);
    spec.set(2, 1, 2, 1, f.int(3)).unwrap();
    assert!(!verify_ybe(&spec).passed());
    let err = frt_construct(&spec, &FrtNaming::quantum_matrices(), 3).unwrap_err();
    assert!(matches!(err, FrtError::NotYbe));
}

#[test]
fn spec_indices_are_range_checked() {
    let f = field();
    let mut spec = RMatrixSpec::sl2(&f);
    assert!(matches!(spec.set(3, 1, 1, 1, f.one()), Err(FrtError::Index(3, 2))));
}

#[test]
fn lambda_twists_stay_cobraided() {
    let f = field();
    let inst = frt_construct(&RMatrixSpec::sl2(&f), &FrtNaming::quantum_matrices(), 4).unwrap();
    let lam = f.parse("lambda").unwrap();
    let xi = f.parse("xi").unwrap();
    for l in [vec![lam.clone(), f.one()], vec![lam, xi]] {
        let tw = frt_twist(&inst, &l).unwrap();
        assert!(check_alpha_invariance(&tw.chb, 3).unwrap().passed());
        let rep = verify_cobraided(&tw.chb, 2).unwrap();
        assert!(rep.passed(), "{}", rep.summary());
        assert!(verify_oqhybe(&tw.chb, 2).unwrap().passed());
    }
}

#[test]
fn unit_lambda_is_the_identity() {
    let f = field();
    let inst = frt_construct(&RMatrixSpec::sl2(&f), &FrtNaming::quantum_matrices(), 3).unwrap();
    let table = lambda_endomorphism(&inst, &[f.one(), f.one()]).unwrap();
    let p = inst.chb.h().pres();
    for (g, img) in table.iter().enumerate() {
        assert_eq!(img, &p.gen(&p.generators()[g]));
    }
}

/// `γ = τ∘(σ⊗σ)` with `σ` swapping the two basis vectors.
fn swap_spec(f: &ScalarField) -> RMatrixSpec {
    let mut s = RMatrixSpec::new(f, 2);
    for (i, j) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        s.set(i, j, 3 - j, 3 - i, f.one()).unwrap();
    }
    s
}

#[test]
fn inadmissible_lambda_is_rejected() {
    let f = field();
    let spec = swap_spec(&f);
    assert!(verify_ybe(&spec).passed());
    let inst = frt_construct(&spec, &FrtNaming::standard(2), 3).unwrap();
    let lam: Scalar = f.parse("lambda").unwrap();
    assert!(matches!(frt_twist(&inst, &[lam, f.one()]), Err(FrtError::Lambda(_))));
    assert!(matches!(
        frt_twist(&inst, &[f.one()]),
        Err(FrtError::LambdaLength { got: 1, want: 2 })
    ));
    assert!(matches!(
        frt_twist(&inst, &[f.zero(), f.one()]),
        Err(FrtError::LambdaZero(_))
    ));
    assert!(frt_twist(&inst, &[f.int(-1), f.one()]).is_ok());
}

#[test]
fn spec_json_round_trips() {
    let f = field();
    for spec in [RMatrixSpec::sl2(&f), RMatrixSpec::mpq2(&f), RMatrixSpec::mq11(&f)] {
        let back = RMatrixSpec::from_json(&spec.to_json()).unwrap();
        assert_eq!(back.gamma(), spec.gamma());
    }
    let bad = serde_json::json!({"dim": 2, "entries": "nope"});
    assert!(matches!(RMatrixSpec::from_json(&bad), Err(FrtError::Spec(_))));
}
