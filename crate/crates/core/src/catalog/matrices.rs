//! Quantum matrices and their relatives: M_q(2), SL_q(2), GL_q(2), M_{p,q}(2), M_q(1|1).

use std::sync::Arc;

use crate::cobraid::{CobraidedHomBialgebra, CobraidingForm};
use crate::frt::RMatrixSpec;
use crate::hombialg::HomBialgebra;
use crate::ncpoly::{word, NCPoly, Presentation, PresentationBuilder, Tensor};
use crate::scalars::{Scalar, ScalarField};

use super::CatalogError;

/// Largest `l` for which the rule `a·d^l·t → …` is installed in GL_q(2).
pub const GL_RULE_CAP: usize = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixKind {
    Mq2,
    Slq2,
    Glq2,
    Mpq2,
    Mq11,
}

impl MatrixKind {
    pub fn name(self) -> &'static str {
        match self {
            MatrixKind::Mq2 => "mq2",
            MatrixKind::Slq2 => "slq2",
            MatrixKind::Glq2 => "glq2",
            MatrixKind::Mpq2 => "mpq2",
            MatrixKind::Mq11 => "mq11",
        }
    }
}

/// Variables `t` (with `q = t²`), `p`, `lambda` and `xi`.
pub fn matrix_field() -> ScalarField {
    ScalarField::rational(&["t", "p", "lambda", "xi"])
}

fn quantum_matrix_rules(b: PresentationBuilder, kind: MatrixKind) -> Result<PresentationBuilder, CatalogError> {
    let b = match kind {
        MatrixKind::Mpq2 => b
            .rule("ab", &[("ba", "q^-1")])?
            .rule("db", &[("bd", "p")])?
            .rule("ac", &[("ca", "p^-1")])?
            .rule("dc", &[("cd", "q")])?
            .rule("cb", &[("bc", "p*q^-1")])?
            .rule("da", &[("ad", "1"), ("bc", "p - q^-1")])?,
        MatrixKind::Mq11 => b
            .rule("ab", &[("ba", "q^-1")])?
            .rule("db", &[("bd", "-q^-1")])?
            .rule("ac", &[("ca", "q^-1")])?
            .rule("dc", &[("cd", "-q^-1")])?
            .rule("bb", &[])?
            .rule("cc", &[])?
            .rule("cb", &[("bc", "1")])?
            .rule("da", &[("ad", "1"), ("bc", "q - q^-1")])?,
        _ => b
            .rule("ab", &[("ba", "q^-1")])?
            .rule("db", &[("bd", "q")])?
            .rule("ac", &[("ca", "q^-1")])?
            .rule("dc", &[("cd", "q")])?
            .rule("cb", &[("bc", "1")])?
            .rule("da", &[("ad", "1"), ("bc", "q - q^-1")])?,
    };
    Ok(b)
}

/// The presentation with generator order `b < c < a < d` (and `t` last for GL_q(2)).
pub fn presentation(field: &ScalarField, kind: MatrixKind, max_degree: usize) -> Result<Presentation, CatalogError> {
    let pres = match kind {
        MatrixKind::Slq2 => {
            let b = Presentation::builder(field, &["b", "c", "a", "d"]);
            quantum_matrix_rules(b, MatrixKind::Mq2)?
                .rule("da", &[("1", "1"), ("bc", "q")])?
                .rule("ad", &[("1", "1"), ("bc", "q^-1")])?
                .build(max_degree)?
        }
        MatrixKind::Glq2 => {
            let b = Presentation::builder(field, &["b", "c", "a", "d", "t"]);
            let mut b = quantum_matrix_rules(b, MatrixKind::Mq2)?
                .rule("tb", &[("bt", "1")])?
                .rule("tc", &[("ct", "1")])?
                .rule("ta", &[("at", "1")])?
                .rule("td", &[("dt", "1")])?;
            for l in 1..=GL_RULE_CAP {
                let dl = "d".repeat(l - 1);
                let lhs = format!("a{}dt", dl);
                let low = if dl.is_empty() { "1".to_string() } else { dl.clone() };
                b = b.rule(&lhs, &[(&low, "1"), (&format!("bc{dl}t"), "q^-1")])?;
            }
            b.build(max_degree)?
        }
        k => {
            let b = Presentation::builder(field, &["b", "c", "a", "d"]);
            quantum_matrix_rules(b, k)?.build(max_degree)?
        }
    };
    Ok(pres)
}

/// `Δ(a) = a⊗a + b⊗c`, `Δ(b) = a⊗b + b⊗d`, `Δ(c) = c⊗a + d⊗c`, `Δ(d) = c⊗b + d⊗d`, `Δ(t) = t⊗t`.
pub fn delta_table(pres: &Presentation) -> Vec<Tensor> {
    let one = pres.field().one();
    let g = |n: &str| pres.gen_word(n);
    let pair = |pairs: &[(&str, &str)]| {
        let mut t = Tensor::zero();
        for (l, r) in pairs {
            t.add_term(vec![g(l), g(r)], one.clone());
        }
        t
    };
    pres.generators()
        .iter()
        .map(|name| match name.as_str() {
            "a" => pair(&[("a", "a"), ("b", "c")]),
            "b" => pair(&[("a", "b"), ("b", "d")]),
            "c" => pair(&[("c", "a"), ("d", "c")]),
            "d" => pair(&[("c", "b"), ("d", "d")]),
            _ => pair(&[(name, name)]),
        })
        .collect()
}

/// `α_λ`: `b ↦ λb`, `c ↦ λ^{-1}c`, other generators fixed.
pub fn alpha_table(pres: &Presentation, lambda: &Scalar) -> Result<Vec<NCPoly>, CatalogError> {
    let inv = lambda
        .inv()
        .map_err(|_| CatalogError::Parameter("lambda must be invertible".into()))?;
    Ok(pres
        .generators()
        .iter()
        .enumerate()
        .map(|(i, name)| {
            let w = word(&[i as u8]);
            match name.as_str() {
                "b" => NCPoly::term(w, lambda.clone()),
                "c" => NCPoly::term(w, inv.clone()),
                _ => NCPoly::term(w, pres.field().one()),
            }
        })
        .collect())
}

/// The R-matrix whose FRT quantum group is the given algebra.
pub fn r_matrix(field: &ScalarField, kind: MatrixKind) -> RMatrixSpec {
    match kind {
        MatrixKind::Mpq2 => RMatrixSpec::mpq2(field),
        MatrixKind::Mq11 => RMatrixSpec::mq11(field),
        _ => RMatrixSpec::sl2(field),
    }
}

/// `R(T_i^m⊗T_j^n) = c_{ji}^{mn}` with `T_1^1 = a, T_1^2 = b, T_2^1 = c, T_2^2 = d`,
/// unit values 1 on `a, d` and 0 on `b, c`; any further generator is left out of the domain.
pub fn cobraiding_form(pres: &Presentation, spec: &RMatrixSpec) -> CobraidingForm {
    let field = pres.field();
    let n = pres.generators().len();
    let mut form = CobraidingForm::new(n, field.one());
    let tij = |i: usize, j: usize| {
        pres.generator(["a", "b", "c", "d"][2 * (i - 1) + (j - 1)])
            .expect("matrix generator")
    };
    for i in 1..=2 {
        for m in 1..=2 {
            let g = tij(i, m);
            let u = if i == m { field.one() } else { field.zero() };
            form.set_unit_left(g, u.clone());
            form.set_unit_right(g, u);
            for j in 1..=2 {
                for k in 1..=2 {
                    form.set(g, tij(j, k), spec.c(j, i, m, k));
                }
            }
        }
    }
    let domain = pres
        .generators()
        .iter()
        .map(|g| ["a", "b", "c", "d"].contains(&g.as_str()))
        .collect();
    form.restrict(domain);
    form
}

/// `det_q = ad − q^{-1}bc` in normal form.
pub fn quantum_determinant(pres: &Presentation) -> NCPoly {
    pres.normal_form(&pres.poly(&[("ad", "1"), ("bc", "-q^-1")]).expect("matrix generators"))
}

/// The untwisted cobraided bialgebra.
pub fn untwisted(
    kind: MatrixKind,
    field: &ScalarField,
    max_degree: usize,
) -> Result<Arc<CobraidedHomBialgebra>, CatalogError> {
    let pres = Arc::new(presentation(field, kind, max_degree)?);
    let delta = delta_table(&pres);
    let form = cobraiding_form(&pres, &r_matrix(field, kind));
    let h = Arc::new(HomBialgebra::new(pres, delta)?);
    Ok(Arc::new(CobraidedHomBialgebra::new(h, form)?))
}

/// The twisted cobraided Hom-bialgebra `A_α` for `α = α_λ`.
pub fn twisted(
    kind: MatrixKind,
    field: &ScalarField,
    lambda: &Scalar,
    max_degree: usize,
) -> Result<Arc<CobraidedHomBialgebra>, CatalogError> {
    let base = untwisted(kind, field, max_degree)?;
    let table = alpha_table(base.h().pres(), lambda)?;
    let h = Arc::new(base.h().twist(table)?);
    Ok(Arc::new(base.with_h(h)))
}
