//! The standard, fermionic and mixed quantum planes as comodule algebras over
//! the quantum matrices.

use std::sync::Arc;

use crate::comodule::{ComoduleAlgebra, PlaneKind};
use crate::ncpoly::{word, NCPoly, Presentation, Tensor};
use crate::scalars::{Scalar, ScalarField};

use super::matrices::{self, MatrixKind};
use super::CatalogError;

/// The host family of each plane.
pub fn host_kind(kind: PlaneKind) -> MatrixKind {
    match kind {
        PlaneKind::Mixed => MatrixKind::Mq11,
        _ => MatrixKind::Mq2,
    }
}

/// The plane on `x < y`.
pub fn presentation(field: &ScalarField, kind: PlaneKind, max_degree: usize) -> Result<Presentation, CatalogError> {
    let b = Presentation::builder(field, &["x", "y"]);
    let b = match kind {
        PlaneKind::Standard => b.rule("yx", &[("xy", "q")])?,
        PlaneKind::Fermionic => b.rule("xx", &[])?.rule("yy", &[])?.rule("yx", &[("xy", "-q^-1")])?,
        PlaneKind::Mixed => b.rule("yy", &[])?.rule("yx", &[("xy", "q")])?,
    };
    Ok(b.build(max_degree)?)
}

/// `x ↦ ξx`, `y ↦ λ^{-1}ξy`.
pub fn alpha_table(pres: &Presentation, xi: &Scalar, lambda: &Scalar) -> Result<Vec<NCPoly>, CatalogError> {
    if lambda.is_zero() {
        return Err(CatalogError::Parameter("lambda must be invertible".into()));
    }
    Ok(vec![
        NCPoly::term(pres.gen_word("x"), xi.clone()),
        NCPoly::term(pres.gen_word("y"), &lambda.inv()? * xi),
    ])
}

/// The untwisted comodule algebra with `ρ(x) = a⊗x + b⊗y`, `ρ(y) = c⊗x + d⊗y`.
pub fn untwisted(kind: PlaneKind, max_degree: usize) -> Result<ComoduleAlgebra, CatalogError> {
    let field = matrices::matrix_field();
    let host = matrices::untwisted(host_kind(kind), &field, max_degree)?;
    let plane = Arc::new(presentation(&field, kind, max_degree)?);
    let hp = host.h().pres().clone();
    let one = field.one();
    let coact = |l: &str, r: &str| {
        let mut t = Tensor::zero();
        t.add_term(vec![hp.gen_word(l), word(&[0])], one.clone());
        t.add_term(vec![hp.gen_word(r), word(&[1])], one.clone());
        t
    };
    let rho = vec![coact("a", "b"), coact("c", "d")];
    ComoduleAlgebra::new(host, plane, rho).map_err(|e| CatalogError::Parameter(e.to_string()))
}

/// The Hom-quantum plane over the twisted host `α_λ`, with the plane twisted
/// by `(ξ, λ)`.
pub fn twisted(
    kind: PlaneKind,
    lambda: &Scalar,
    xi: &Scalar,
    max_degree: usize,
) -> Result<ComoduleAlgebra, CatalogError> {
    twisted_mismatched(kind, lambda, lambda, xi, max_degree)
}

/// As [`twisted`] but with separate λ for the host and for the plane.
pub fn twisted_mismatched(
    kind: PlaneKind,
    host_lambda: &Scalar,
    plane_lambda: &Scalar,
    xi: &Scalar,
    max_degree: usize,
) -> Result<ComoduleAlgebra, CatalogError> {
    let base = untwisted(kind, max_degree)?;
    let field = base.carrier().field().clone();
    let host = matrices::twisted(host_kind(kind), &field, host_lambda, max_degree)?;
    let table = alpha_table(base.carrier(), xi, plane_lambda)?;
    base.twist(host, table)
        .map_err(|e| CatalogError::Parameter(e.to_string()))
}
