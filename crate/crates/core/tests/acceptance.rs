//! End-to-end acceptance suite. Each criterion runs under its own time limit
//! and prints one pass/fail line.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use homq::catalog::matrices::{self, MatrixKind};
use homq::catalog::{build, enveloping, groups, planes, Instance, Params, NAMES};
use homq::cobraid::{verify_cobraided, verify_oqhybe};
use homq::comodule::{b_alpha, bvw, closed_form_coaction, frt_comodule, verify_hybe, verify_mixed_hybe, PlaneKind};
use homq::findim::{materialize, FinDimHomBialgebra, RKind, Sparse};
use homq::frt::{frt_construct, frt_twist, FrtNaming, RMatrixSpec};
use homq::ncpoly::{NCPoly, Presentation, Tensor, Word};
use homq::report::Report;
use homq::scalars::{Scalar, ScalarField};

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn passes(rep: &Report, what: &str) -> Outcome {
    ensure(rep.passed(), || format!("{what}: {}", rep.summary()))
}

fn field() -> ScalarField {
    matrices::matrix_field()
}

fn s(f: &ScalarField, text: &str) -> Scalar {
    f.parse(text).unwrap()
}

fn words(ngens: u8, max_len: usize) -> Vec<Word> {
    let mut all = vec![Word::new()];
    let mut level = vec![Word::new()];
    for _ in 0..max_len {
        let next: Vec<Word> = level
            .iter()
            .flat_map(|w| {
                (0..ngens).map(move |g| {
                    let mut v = w.clone();
                    v.push(g);
                    v
                })
            })
            .collect();
        all.extend(next.iter().cloned());
        level = next;
    }
    all
}

fn monomial(i: usize, j: usize) -> Word {
    let mut w = Word::new();
    w.extend(std::iter::repeat_n(0u8, i));
    w.extend(std::iter::repeat_n(1u8, j));
    w
}

fn frt_normal_forms() -> Outcome {
    let f = field();
    let inst = frt_construct(&RMatrixSpec::sl2(&f), &FrtNaming::quantum_matrices(), 4).map_err(|e| e.to_string())?;
    let a = inst.chb.h().pres();
    let b = matrices::presentation(&f, MatrixKind::Mq2, 4).map_err(|e| e.to_string())?;
    ensure(a.generators() == b.generators(), || "generator names differ".into())?;
    for w in words(4, 4) {
        let (x, y) = (a.nf_word(&w), b.nf_word(&w));
        ensure(x == y, || {
            format!("{}: {} vs {}", a.render_word(&w), a.render_poly(&x), b.render_poly(&y))
        })?;
    }
    Ok(())
}

fn gamma_recovery(spec: RMatrixSpec) -> Outcome {
    let inst = frt_construct(&spec, &FrtNaming::quantum_matrices(), 3).map_err(|e| e.to_string())?;
    let v = frt_comodule(&inst).map_err(|e| e.to_string())?;
    passes(&v.verify(), "comodule axioms")?;
    ensure(bvw(&v, &v).map_err(|e| e.to_string())? == spec.gamma(), || {
        "B_{V,V} differs from the input tensor".into()
    })
}

fn twisted_matrix_families() -> Outcome {
    let f = field();
    let lambda = s(&f, "lambda");
    for kind in [MatrixKind::Mq2, MatrixKind::Slq2, MatrixKind::Mpq2, MatrixKind::Mq11] {
        let c = matrices::twisted(kind, &f, &lambda, 4).map_err(|e| e.to_string())?;
        passes(&verify_cobraided(&c, 3).map_err(|e| e.to_string())?, kind.name())?;
        passes(&verify_oqhybe(&c, 2).map_err(|e| e.to_string())?, kind.name())?;
    }
    Ok(())
}

fn anyon_power_twists() -> Outcome {
    for t in 1..=2u32 {
        let c = groups::anyon(5, 2, t, 6).map_err(|e| e.to_string())?;
        passes(
            &verify_cobraided(&c, 4).map_err(|e| e.to_string())?,
            &format!("t = {t}"),
        )?;
        let f = c.h().pres().field().clone();
        let e = 4i64.pow(t);
        for a in 0..5usize {
            for b in 0..5usize {
                let u = NCPoly::term(Word::from_vec(vec![0; a]), f.one());
                let v = NCPoly::term(Word::from_vec(vec![0; b]), f.one());
                let got = c.eval(&u, &v).map_err(|e| e.to_string())?;
                let want = f.zeta_pow(e * (a * b) as i64).map_err(|e| e.to_string())?;
                ensure(got == want, || format!("t = {t}, R({a}, {b}) = {got}, expected {want}"))?;
            }
        }
    }
    Ok(())
}

fn corrupt(b: &FinDimHomBialgebra) -> FinDimHomBialgebra {
    let two = b.field().int(2);
    let (e, f) = (b.index("E").unwrap(), b.index("F").unwrap());
    let r: Sparse<(usize, usize)> = b
        .r_entries()
        .iter()
        .map(|(&k, v)| (k, if k == (e, f) { v * &two } else { v.clone() }))
        .collect();
    b.with_r(RKind::Element, r)
}

fn duality() -> Outcome {
    let u = enveloping::small(3, Some("lambda"), 4).map_err(|e| e.to_string())?;
    let b = materialize(&u.h, &u.r).map_err(|e| e.to_string())?;
    ensure(b.dim() == 27, || format!("dimension {}", b.dim()))?;
    passes(&b.verify_braided().map_err(|e| e.to_string())?, "u_q braided")?;
    let d = b.dualize();
    passes(&d.verify_cobraided().map_err(|e| e.to_string())?, "dual cobraided")?;
    ensure(d.dualize() == b, || "double dual differs".into())?;
    let bad = corrupt(&b);
    ensure(!bad.verify_braided().map_err(|e| e.to_string())?.passed(), || {
        "corrupted R passes".into()
    })?;
    ensure(
        !bad.dualize().verify_cobraided().map_err(|e| e.to_string())?.passed(),
        || "corrupted dual passes".into(),
    )?;
    let u = enveloping::reduced(2, Some("lambda"), 4).map_err(|e| e.to_string())?;
    let b = materialize(&u.h, &u.r).map_err(|e| e.to_string())?;
    ensure(b.dim() == 32, || format!("dimension {}", b.dim()))?;
    passes(&b.verify_braided().map_err(|e| e.to_string())?, "U_q braided")
}

fn hybe_operators() -> Outcome {
    let f = field();
    let (lambda, xi) = (s(&f, "lambda"), s(&f, "xi"));
    let inst = frt_construct(&RMatrixSpec::sl2(&f), &FrtNaming::quantum_matrices(), 3).map_err(|e| e.to_string())?;
    let tw = frt_twist(&inst, &[lambda.clone(), f.one()]).map_err(|e| e.to_string())?;
    let v = frt_comodule(&tw).map_err(|e| e.to_string())?;
    let b = bvw(&v, &v).map_err(|e| e.to_string())?;
    passes(&verify_hybe(&b, v.alpha()), "FRT comodule")?;
    for kind in [PlaneKind::Standard, PlaneKind::Fermionic, PlaneKind::Mixed] {
        let pl = planes::twisted(kind, &lambda, &xi, 4).map_err(|e| e.to_string())?;
        for d in 1..=2 {
            let piece = pl.piece(d).map_err(|e| e.to_string())?;
            passes(
                &verify_hybe(&b_alpha(&piece), piece.alpha()),
                &format!("{kind:?} piece {d}"),
            )?;
        }
    }
    Ok(())
}

fn mixed_triple() -> Outcome {
    let f = field();
    let lambda = s(&f, "lambda");
    let pl = planes::twisted(PlaneKind::Standard, &lambda, &s(&f, "xi"), 4).map_err(|e| e.to_string())?;
    let host = pl.host().clone();
    let inst = frt_construct(&RMatrixSpec::sl2(&f), &FrtNaming::quantum_matrices(), 3).map_err(|e| e.to_string())?;
    let tw = frt_twist(&inst, &[lambda, f.one()]).map_err(|e| e.to_string())?;
    let run = || -> Result<Report, homq::comodule::ComoduleError> {
        let u = frt_comodule(&tw)?.with_host(host.clone())?;
        let v = pl.piece(1)?.with_host(host.clone())?;
        let w = pl.piece(2)?.with_host(host.clone())?;
        verify_mixed_hybe(&u, &v, &w, 2)
    };
    passes(&run().map_err(|e| e.to_string())?, "mixed triple")
}

fn closed_forms() -> Outcome {
    let f = field();
    let (lambda, xi) = (s(&f, "lambda"), s(&f, "xi"));
    for (kind, imax, jmax) in [
        (PlaneKind::Standard, 4, 4),
        (PlaneKind::Fermionic, 1, 1),
        (PlaneKind::Mixed, 3, 1),
    ] {
        let pl = planes::twisted(kind, &lambda, &xi, 5).map_err(|e| e.to_string())?;
        for i in 0..=imax {
            for j in 0..=jmax {
                if kind == PlaneKind::Standard && i + j > 4 {
                    continue;
                }
                let got = pl.rho(&NCPoly::term(monomial(i, j), f.one()));
                let want = closed_form_coaction(kind, i, j, pl.host().h().pres(), pl.carrier(), &xi, &lambda)
                    .map_err(|e| e.to_string())?;
                ensure(got == want, || format!("{kind:?} x^{i}y^{j}"))?;
            }
        }
    }
    let pl = planes::twisted(PlaneKind::Fermionic, &lambda, &xi, 4).map_err(|e| e.to_string())?;
    let xy = NCPoly::term(monomial(1, 1), f.one());
    let det = matrices::quantum_determinant(pl.host().h().pres());
    let mut want = Tensor::zero();
    want.add_scaled(&Tensor::pair(&det, &xy), &s(&f, "lambda^-1*xi^2"));
    ensure(pl.rho(&xy) == want, || "fermionic ρ(xy)".into())?;
    let c = pl.carrier();
    let basis = ["1", "x", "y", "xy"];
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
            ensure(pl.mu(&pa, &pb) == want, || format!("μ_α({a}, {b})"))?;
        }
    }
    Ok(())
}

fn presentations(inst: &Instance) -> Vec<&Presentation> {
    match inst {
        Instance::Cobraided(c) => vec![c.h().pres()],
        Instance::Braided(b) => vec![b.h.pres()],
        Instance::Plane(p) => vec![p.host().h().pres(), p.carrier()],
    }
}

fn confluence() -> Outcome {
    for name in NAMES {
        let inst = build(name, &Params::new(), 4).map_err(|e| e.to_string())?;
        for p in presentations(&inst) {
            passes(&p.check_local_confluence(4), name)?;
        }
    }
    Ok(())
}

fn run(n: usize, name: &str, limit: Duration, body: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(body)).unwrap_or_else(|p| {
        Err(p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default())
    });
    let took = start.elapsed();
    let outcome = outcome.and_then(|_| ensure(took <= limit, || format!("exceeded {limit:?}")));
    match &outcome {
        Ok(()) => println!("PASS {n}. {name} ({:.2?} of {limit:?})", took),
        Err(e) => println!("FAIL {n}. {name} ({:.2?} of {limit:?}): {e}", took),
    }
    outcome.is_ok()
}

#[test]
fn acceptance() {
    let f = field();
    let secs = Duration::from_secs;
    let results = [
        run(
            1,
            "FRT normal forms match M_q(2) through degree 4",
            secs(30),
            frt_normal_forms,
        ),
        run(2, "γ recovered from the FRT comodule", secs(15), || {
            for spec in [RMatrixSpec::sl2(&f), RMatrixSpec::mpq2(&f), RMatrixSpec::mq11(&f)] {
                let start = Instant::now();
                gamma_recovery(spec)?;
                ensure(start.elapsed() <= secs(5), || "single spec exceeded 5s".into())?;
            }
            Ok(())
        }),
        run(
            3,
            "twisted matrix families are cobraided and satisfy OQHYBE",
            secs(300),
            twisted_matrix_families,
        ),
        run(4, "anyon R-power twists", secs(5), anyon_power_twists),
        run(5, "braided/cobraided duality for u_q and U_q", secs(600), duality),
        run(
            6,
            "HYBE for the FRT comodule and plane pieces",
            secs(120),
            hybe_operators,
        ),
        run(7, "mixed three-comodule identity", secs(120), mixed_triple),
        run(
            8,
            "closed-form coactions and the fermionic product table",
            secs(60),
            closed_forms,
        ),
        run(
            9,
            "local confluence at degree 4 for every catalog presentation",
            secs(60),
            confluence,
        ),
    ];
    let failed = results.iter().filter(|ok| !**ok).count();
    assert_eq!(failed, 0, "{failed} acceptance criteria failed");
}
