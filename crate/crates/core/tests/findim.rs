use homq::catalog::{enveloping, groups};
use homq::findim::{materialize, materialize_cobraided, FinDimHomBialgebra, Sparse};
use homq::hombialg::HomBialgebra;
use homq::ncpoly::{NCPoly, Tensor};
use proptest::prelude::*;
use std::sync::OnceLock;

struct Pair {
    h: std::sync::Arc<HomBialgebra>,
    b: FinDimHomBialgebra,
}

fn small() -> &'static Pair {
    static P: OnceLock<Pair> = OnceLock::new();
    P.get_or_init(|| {
        let u = enveloping::small(3, None, 4).unwrap();
        let b = materialize(&u.h, &u.r).unwrap();
        Pair { h: u.h.clone(), b }
    })
}

fn anyon() -> &'static Pair {
    static P: OnceLock<Pair> = OnceLock::new();
    P.get_or_init(|| {
        let c = groups::anyon(5, 2, 1, 6).unwrap();
        let b = materialize_cobraided(&c).unwrap();
        Pair { h: c.h().clone(), b }
    })
}

fn element(p: &Pair, coefs: &[(usize, i64)]) -> (NCPoly, Sparse<usize>) {
    let pres = p.h.pres();
    let f = pres.field();
    let mut poly = NCPoly::zero();
    let mut v = Sparse::new();
    for &(i, c) in coefs {
        let i = i % p.b.dim();
        let w = pres.parse_word(&p.b.labels()[i]).unwrap();
        poly.add_term(w, f.int(c));
        let e = v.remove(&i).unwrap_or_else(|| f.zero()) + f.int(c);
        if !e.is_zero() {
            v.insert(i, e);
        }
    }
    (poly, v)
}

fn flatten(p: &Pair, x: &NCPoly) -> Sparse<usize> {
    let pres = p.h.pres();
    x.terms()
        .iter()
        .map(|(w, c)| (p.b.index(&pres.render_word(w)).unwrap(), c.clone()))
        .collect()
}

fn flatten2(p: &Pair, t: &Tensor) -> Sparse<(usize, usize)> {
    let pres = p.h.pres();
    let look = |w| p.b.index(&pres.render_word(w)).unwrap();
    t.terms()
        .iter()
        .map(|(k, c)| ((look(&k[0]), look(&k[1])), c.clone()))
        .collect()
}

fn coefs() -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec((0usize..64, -3i64..=3), 1..4)
}

fn agrees(p: &Pair, x: &[(usize, i64)], y: &[(usize, i64)]) {
    let (px, vx) = element(p, x);
    let (py, vy) = element(p, y);
    assert_eq!(p.b.mul(&vx, &vy), flatten(p, &p.h.mu(&px, &py)));
    assert_eq!(p.b.coproduct(&vx), flatten2(p, &p.h.delta(&px)));
    assert_eq!(p.b.apply_alpha(&vx), flatten(p, &p.h.alpha(&px)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(25))]

    #[test]
    fn small_quantum_group_tables_agree_with_rewriting(x in coefs(), y in coefs()) {
        agrees(small(), &x, &y);
    }

    #[test]
    fn anyon_tables_agree_with_rewriting(x in coefs(), y in coefs()) {
        agrees(anyon(), &x, &y);
    }
}
