use std::sync::Arc;

use homq::catalog::matrices::{self, MatrixKind};
use homq::catalog::planes;
use homq::cobraid::CobraidedHomBialgebra;
use homq::comodule::{
    b_alpha, bvw, closed_form_coaction, frt_comodule, verify_hybe, verify_mixed_hybe, ComoduleAlgebra, ComoduleError,
    PlaneKind,
};
use homq::frt::{frt_construct, frt_twist, FrtNaming, RMatrixSpec};
use homq::ncpoly::{NCPoly, Tensor, Word};
use homq::scalars::{Scalar, ScalarField};

fn field() -> ScalarField {
    matrices::matrix_field()
}

fn s(f: &ScalarField, text: &str) -> Scalar {
    f.parse(text).unwrap()
}

fn monomial(i: usize, j: usize) -> Word {
    let mut w = Word::new();
    w.extend(std::iter::repeat_n(0u8, i));
    w.extend(std::iter::repeat_n(1u8, j));
    w
}

fn specs(f: &ScalarField) -> [RMatrixSpec; 3] {
    [RMatrixSpec::sl2(f), RMatrixSpec::mpq2(f), RMatrixSpec::mq11(f)]
}

#[test]
fn frt_comodule_recovers_gamma() {
    let f = field();
    for spec in specs(&f) {
        let inst = frt_construct(&spec, &FrtNaming::quantum_matrices(), 3).unwrap();
        let v = frt_comodule(&inst).unwrap();
        assert!(v.verify().passed());
        assert_eq!(bvw(&v, &v).unwrap(), spec.gamma());
    }
}

#[test]
fn twisted_frt_comodule_solves_hybe() {
    let f = field();
    let lambda = s(&f, "lambda");
    for spec in specs(&f) {
        let inst = frt_construct(&spec, &FrtNaming::quantum_matrices(), 3).unwrap();
        let tw = frt_twist(&inst, &[lambda.clone(), f.one()]).unwrap();
        let v = frt_comodule(&tw).unwrap();
        assert!(v.verify().passed(), "{}", v.verify().summary());
        let b = bvw(&v, &v).unwrap();
        assert_eq!(b_alpha(&v), b);
        let rep = verify_hybe(&b, v.alpha());
        assert!(rep.passed(), "{}", rep.summary());
        let mut expected = spec.gamma();
        expected = expected.mul(&v.alpha().kron(v.alpha()));
        assert_eq!(b, expected);
    }
}

#[test]
fn hybe_fails_for_non_commuting_alpha() {
    let f = field();
    let inst = frt_construct(&RMatrixSpec::sl2(&f), &FrtNaming::quantum_matrices(), 3).unwrap();
    let v = frt_comodule(&inst).unwrap();
    let b = bvw(&v, &v).unwrap();
    let mut alpha = homq::linalg::Matrix::identity(&f, 2);
    alpha.set(0, 1, f.one());
    let rep = verify_hybe(&b, &alpha);
    assert!(rep.get("alpha_commutation").is_some_and(|c| !c.passed()));
}

#[test]
fn hom_quantum_planes_are_comodule_hom_algebras() {
    let f = field();
    let (lambda, xi) = (s(&f, "lambda"), s(&f, "xi"));
    for kind in [PlaneKind::Standard, PlaneKind::Fermionic, PlaneKind::Mixed] {
        let pl = planes::twisted(kind, &lambda, &xi, 4).unwrap();
        let rep = pl.verify(3).unwrap();
        assert!(rep.passed(), "{kind:?}: {}", rep.summary());
        for d in 1..=2 {
            let piece = pl.piece(d).unwrap();
            assert!(piece.verify().passed());
            let b = b_alpha(&piece);
            let rep = verify_hybe(&b, piece.alpha());
            assert!(rep.passed(), "{kind:?} degree {d}: {}", rep.summary());
        }
    }
}

#[test]
fn graded_piece_dimensions() {
    let f = field();
    let one = f.one();
    let dims = |kind| {
        let pl = planes::twisted(kind, &one, &one, 4).unwrap();
        (1..=3).map(|d| pl.piece(d).unwrap().dim()).collect::<Vec<_>>()
    };
    assert_eq!(dims(PlaneKind::Standard), vec![2, 3, 4]);
    assert_eq!(dims(PlaneKind::Fermionic), vec![2, 1, 0]);
    assert_eq!(dims(PlaneKind::Mixed), vec![2, 2, 2]);
}

#[test]
fn closed_form_coactions_match_multiplicative_extension() {
    let f = field();
    let (lambda, xi) = (s(&f, "lambda"), s(&f, "xi"));
    for (kind, imax, jmax) in [
        (PlaneKind::Standard, 4, 4),
        (PlaneKind::Fermionic, 1, 1),
        (PlaneKind::Mixed, 3, 1),
    ] {
        let pl = planes::twisted(kind, &lambda, &xi, 5).unwrap();
        for i in 0..=imax {
            for j in 0..=jmax {
                if kind == PlaneKind::Standard && i + j > 4 {
                    continue;
                }
                let got = pl.rho(&NCPoly::term(monomial(i, j), f.one()));
                let want = closed_form_coaction(kind, i, j, pl.host().h().pres(), pl.carrier(), &xi, &lambda).unwrap();
                assert_eq!(
                    got,
                    want,
                    "{kind:?} x^{i}y^{j}: {} vs {}",
                    pl.render(&got),
                    pl.render(&want)
                );
            }
        }
    }
}

#[test]
fn fermionic_top_coaction_is_scaled_determinant() {
    let f = field();
    let (lambda, xi) = (s(&f, "lambda"), s(&f, "xi"));
    let pl = planes::twisted(PlaneKind::Fermionic, &lambda, &xi, 4).unwrap();
    let hp = pl.host().h().pres();
    let det = matrices::quantum_determinant(hp);
    let mut want = Tensor::zero();
    let xy = NCPoly::term(monomial(1, 1), f.one());
    want.add_scaled(&Tensor::pair(&det, &xy), &s(&f, "lambda^-1*xi^2"));
    assert_eq!(pl.rho(&xy), want);
}

#[test]
fn closed_form_rejects_out_of_range_exponents() {
    let f = field();
    let one = f.one();
    let pl = planes::twisted(PlaneKind::Fermionic, &one, &one, 4).unwrap();
    let r = closed_form_coaction(
        PlaneKind::Fermionic,
        2,
        0,
        pl.host().h().pres(),
        pl.carrier(),
        &one,
        &one,
    );
    assert!(matches!(r, Err(ComoduleError::Range(2, 0))));
}

#[test]
fn fermionic_twisted_product_table() {
    let f = field();
    let (lambda, xi) = (s(&f, "lambda"), s(&f, "xi"));
    let pl = planes::twisted(PlaneKind::Fermionic, &lambda, &xi, 4).unwrap();
    let c = pl.carrier();
    let basis = ["1", "x", "y", "xy"];
    // Rows a, columns b of μ_α(a, b) as (coefficient, monomial).
    let table: [[(&str, &str); 4]; 4] = [
        [("1", "1"), ("xi", "x"), ("lambda^-1*xi", "y"), ("lambda^-1*xi^2", "xy")],
        [("xi", "x"), ("0", "1"), ("lambda^-1*xi^2", "xy"), ("0", "1")],
        [
            ("lambda^-1*xi", "y"),
            ("-q^-1*lambda^-1*xi^2", "xy"),
            ("0", "1"),
            ("0", "1"),
        ],
        [("lambda^-1*xi^2", "xy"), ("0", "1"), ("0", "1"), ("0", "1")],
    ];
    for (i, a) in basis.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            let pa = NCPoly::term(c.parse_word(a).unwrap(), f.one());
            let pb = NCPoly::term(c.parse_word(b).unwrap(), f.one());
            let (coef, mono) = table[i][j];
            let want = NCPoly::term(c.parse_word(mono).unwrap(), s(&f, coef));
            assert_eq!(pl.mu(&pa, &pb), want, "μ_α({a}, {b})");
        }
    }
}

#[test]
fn standard_twisted_product_formula() {
    let f = field();
    let (lambda, xi) = (s(&f, "lambda"), s(&f, "xi"));
    let q = s(&f, "q");
    let pl = planes::twisted(PlaneKind::Standard, &lambda, &xi, 8).unwrap();
    for i in 0..=3 {
        for j in 0..=3 {
            for k in 0..=3 {
                for l in 0..=3 {
                    let a = NCPoly::term(monomial(i, j), f.one());
                    let b = NCPoly::term(monomial(k, l), f.one());
                    let coef = &(&q.pow((j * k) as i64).unwrap() * &lambda.pow(-((j + l) as i64)).unwrap())
                        * &xi.pow((i + j + k + l) as i64).unwrap();
                    let want = NCPoly::term(monomial(i + k, j + l), coef);
                    assert_eq!(pl.mu(&a, &b), want, "x^{i}y^{j} · x^{k}y^{l}");
                }
            }
        }
    }
}

#[test]
fn sign_flipped_coaction_is_not_a_comodule() {
    let f = field();
    let host = matrices::untwisted(MatrixKind::Mq2, &f, 4).unwrap();
    let plane = Arc::new(planes::presentation(&f, PlaneKind::Standard, 4).unwrap());
    let hp = host.h().pres().clone();
    let coact = |l: &str, r: &str, sign: i64| {
        let mut t = Tensor::zero();
        t.add_term(vec![hp.gen_word(l), plane.gen_word("x")], f.int(sign));
        t.add_term(vec![hp.gen_word(r), plane.gen_word("y")], f.int(sign));
        t
    };
    let alg = ComoduleAlgebra::new(host, plane.clone(), vec![coact("a", "b", 1), coact("c", "d", -1)]).unwrap();
    let rep = alg.verify(2).unwrap();
    assert!(rep.get("comodule_coassociativity").is_some_and(|c| !c.passed()));
}

#[test]
fn mismatched_twists_do_not_intertwine() {
    let f = field();
    let r = planes::twisted_mismatched(PlaneKind::Standard, &s(&f, "lambda"), &s(&f, "2"), &s(&f, "xi"), 4);
    let err = r.expect_err("mismatched λ must be rejected");
    assert!(err.to_string().contains("intertwine"), "{err}");
}

#[test]
fn mixed_plane_over_standard_matrices_breaks_multiplicativity() {
    let f = field();
    let host = matrices::untwisted(MatrixKind::Mq2, &f, 4).unwrap();
    let plane = Arc::new(planes::presentation(&f, PlaneKind::Mixed, 4).unwrap());
    let hp = host.h().pres().clone();
    let coact = |l: &str, r: &str| {
        let mut t = Tensor::zero();
        t.add_term(vec![hp.gen_word(l), plane.gen_word("x")], f.one());
        t.add_term(vec![hp.gen_word(r), plane.gen_word("y")], f.one());
        t
    };
    let alg = ComoduleAlgebra::new(host, plane.clone(), vec![coact("a", "b"), coact("c", "d")]).unwrap();
    let rep = alg.verify(2).unwrap();
    assert!(
        rep.get("coaction_multiplicativity").is_some_and(|c| !c.passed()),
        "{}",
        rep.summary()
    );
}

fn mixed_triple(host: Option<Arc<CobraidedHomBialgebra>>) -> Result<homq::report::Report, ComoduleError> {
    let f = field();
    let lambda = s(&f, "lambda");
    let pl = planes::twisted(PlaneKind::Standard, &lambda, &s(&f, "xi"), 4).unwrap();
    let host = host.unwrap_or_else(|| pl.host().clone());
    let inst = frt_construct(&RMatrixSpec::sl2(&f), &FrtNaming::quantum_matrices(), 3).unwrap();
    let tw = frt_twist(&inst, &[lambda, f.one()]).unwrap();
    let u = frt_comodule(&tw).unwrap().with_host(host.clone())?;
    let v = pl.piece(1)?.with_host(host.clone())?;
    let w = pl.piece(2)?.with_host(host)?;
    verify_mixed_hybe(&u, &v, &w, 2)
}

#[test]
fn mixed_identity_for_heterogeneous_triple() {
    let rep = mixed_triple(None).unwrap();
    assert!(rep.passed(), "{}", rep.summary());
    for name in [
        "mixed_hybe",
        "alpha_commutation_uv",
        "alpha_commutation_uw",
        "alpha_commutation_vw",
    ] {
        assert!(rep.get(name).is_some(), "{name} missing");
    }
}

#[test]
fn mixed_identity_requires_invariant_form() {
    let f = field();
    let base = matrices::untwisted(MatrixKind::Mq2, &f, 4).unwrap();
    let p = base.h().pres();
    let table: Vec<NCPoly> = p
        .generators()
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let c = if g == "b" { s(&f, "lambda") } else { f.one() };
            NCPoly::term(homq::ncpoly::word(&[i as u8]), c)
        })
        .collect();
    let h = Arc::new(base.h().twist_unchecked(table, true, true));
    let host = Arc::new(base.with_h(h));
    assert!(matches!(mixed_triple(Some(host)), Err(ComoduleError::NotInvariant(_))));
}

#[test]
fn comodules_over_different_hosts_are_rejected() {
    let f = field();
    let a = planes::twisted(PlaneKind::Standard, &f.one(), &f.one(), 4).unwrap();
    let b = planes::twisted(PlaneKind::Standard, &f.one(), &f.one(), 4).unwrap();
    let r = bvw(&a.piece(1).unwrap(), &b.piece(1).unwrap());
    assert!(matches!(r, Err(ComoduleError::HostMismatch)));
}
