//! Builders for the named instances.

pub mod enveloping;
pub mod groups;
pub mod matrices;
pub mod planes;

use std::collections::BTreeMap;
use std::sync::Arc;

use thiserror::Error;

use crate::cobraid::{verify_cobraided, verify_oqhybe, CobraidError, CobraidedHomBialgebra};
use crate::comodule::{b_alpha, verify_hybe, ComoduleAlgebra, ComoduleError, PlaneKind};
use crate::findim::{materialize, FinDimError};
use crate::hombialg::{verify_hom_bialgebra, HomError};
use crate::ncpoly::PresentationError;
use crate::report::Report;
use crate::scalars::ScalarError;

pub use enveloping::BraidedInstance;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CatalogError {
    #[error("unknown instance `{0}`")]
    Unknown(String),
    #[error("parameter violation: {0}")]
    Parameter(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Hom(#[from] HomError),
    #[error(transparent)]
    Cobraid(#[from] CobraidError),
}

/// Every name accepted by [`build`].
pub const NAMES: &[&str] = &[
    "mq2",
    "slq2",
    "glq2",
    "mpq2",
    "mq11",
    "plane_standard",
    "plane_fermionic",
    "plane_mixed",
    "group_bialgebra",
    "anyon",
    "integral_anyon",
    "uq_small",
    "uq_reduced",
];

/// A built instance.
pub enum Instance {
    Cobraided(Arc<CobraidedHomBialgebra>),
    Braided(BraidedInstance),
    Plane(ComoduleAlgebra),
}

impl Instance {
    /// The host cobraided Hom-bialgebra, if any.
    pub fn cobraided(&self) -> Option<&Arc<CobraidedHomBialgebra>> {
        match self {
            Instance::Cobraided(c) => Some(c),
            Instance::Plane(p) => Some(p.host()),
            Instance::Braided(_) => None,
        }
    }
}

/// Instance parameters as `key=value` text.
pub type Params = BTreeMap<String, String>;

struct Reader<'a> {
    params: &'a Params,
    allowed: &'static [&'static str],
}

impl Reader<'_> {
    fn check(&self) -> Result<(), CatalogError> {
        match self.params.keys().find(|k| !self.allowed.contains(&k.as_str())) {
            Some(k) => Err(CatalogError::Parameter(format!("unknown parameter `{k}`"))),
            None => Ok(()),
        }
    }

    fn text(&self, key: &str, default: &'static str) -> &str {
        self.params.get(key).map(String::as_str).unwrap_or(default)
    }

    fn int<T: std::str::FromStr>(&self, key: &str, default: T) -> Result<T, CatalogError> {
        match self.params.get(key) {
            None => Ok(default),
            Some(v) => v
                .trim()
                .parse()
                .map_err(|_| CatalogError::Parameter(format!("`{key}` must be an integer, got `{v}`"))),
        }
    }
}

fn matrix_kind(name: &str) -> Option<matrices::MatrixKind> {
    use matrices::MatrixKind::*;
    Some(match name {
        "mq2" => Mq2,
        "slq2" => Slq2,
        "glq2" => Glq2,
        "mpq2" => Mpq2,
        "mq11" => Mq11,
        _ => return None,
    })
}

fn plane_kind(name: &str) -> Option<PlaneKind> {
    Some(match name {
        "plane_standard" => PlaneKind::Standard,
        "plane_fermionic" => PlaneKind::Fermionic,
        "plane_mixed" => PlaneKind::Mixed,
        _ => return None,
    })
}

fn small_u32(v: i64, key: &str) -> Result<u32, CatalogError> {
    u32::try_from(v).map_err(|_| CatalogError::Parameter(format!("`{key}` must be a nonnegative integer")))
}

/// Builds a named instance. Scalars are parsed in the instance's field;
/// `lambda` and `xi` default to 1.
pub fn build(name: &str, params: &Params, max_degree: usize) -> Result<Instance, CatalogError> {
    let reader = |allowed| Reader { params, allowed };
    if let Some(kind) = matrix_kind(name) {
        let r = reader(&["lambda"]);
        r.check()?;
        let field = matrices::matrix_field();
        let lambda = field.parse(r.text("lambda", "1"))?;
        return Ok(Instance::Cobraided(matrices::twisted(
            kind, &field, &lambda, max_degree,
        )?));
    }
    if let Some(kind) = plane_kind(name) {
        let r = reader(&["lambda", "xi"]);
        r.check()?;
        let field = matrices::matrix_field();
        let lambda = field.parse(r.text("lambda", "1"))?;
        let xi = field.parse(r.text("xi", "1"))?;
        if xi.is_zero() {
            return Err(CatalogError::Parameter("xi must be nonzero".into()));
        }
        return Ok(Instance::Plane(planes::twisted(kind, &lambda, &xi, max_degree)?));
    }
    let c = match name {
        "group_bialgebra" => {
            let r = reader(&["t"]);
            r.check()?;
            groups::klein(small_u32(r.int("t", 0)?, "t")?, max_degree)?
        }
        "anyon" => {
            let r = reader(&["n", "k", "t"]);
            r.check()?;
            let n = small_u32(r.int("n", 5)?, "n")?;
            let k = small_u32(r.int("k", 2)?, "k")?;
            groups::anyon(n, k, small_u32(r.int("t", 1)?, "t")?, max_degree)?
        }
        "integral_anyon" => {
            let r = reader(&["k", "t"]);
            r.check()?;
            groups::integral_anyon(r.int("k", 3)?, small_u32(r.int("t", 1)?, "t")?, max_degree)?
        }
        "uq_small" => {
            let r = reader(&["l", "lambda"]);
            r.check()?;
            let l = small_u32(r.int("l", 3)?, "l")?;
            return Ok(Instance::Braided(enveloping::small(
                l,
                Some(r.text("lambda", "1")),
                max_degree,
            )?));
        }
        "uq_reduced" => {
            let r = reader(&["r", "lambda"]);
            r.check()?;
            let rr = small_u32(r.int("r", 2)?, "r")?;
            return Ok(Instance::Braided(enveloping::reduced(
                rr,
                Some(r.text("lambda", "1")),
                max_degree,
            )?));
        }
        _ => return Err(CatalogError::Unknown(name.to_string())),
    };
    Ok(Instance::Cobraided(c))
}

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error(transparent)]
    Cobraid(#[from] CobraidError),
    #[error(transparent)]
    Hom(#[from] HomError),
    #[error(transparent)]
    FinDim(#[from] FinDimError),
    #[error(transparent)]
    Comodule(#[from] ComoduleError),
}

/// Confluence, Hom-bialgebra axioms, cobraiding axioms at `degree` and OQHYBE
/// at `min(degree, 2)`.
pub fn cobraided_suite(c: &CobraidedHomBialgebra, degree: usize) -> Result<Report, SuiteError> {
    let pres = c.h().pres();
    let mut rep = pres.check_local_confluence(pres.max_degree());
    rep.extend(verify_hom_bialgebra(c.h(), degree)?);
    rep.extend(verify_cobraided(c, degree)?);
    rep.extend(verify_oqhybe(c, degree.min(2))?);
    Ok(rep)
}

/// The full verification suite of an instance.
pub fn verify_suite(inst: &Instance, degree: usize) -> Result<Report, SuiteError> {
    let rep = match inst {
        Instance::Cobraided(c) => cobraided_suite(c, degree)?,
        Instance::Braided(b) => {
            let pres = b.h.pres();
            let mut rep = pres.check_local_confluence(pres.max_degree());
            let m = materialize(&b.h, &b.r)?;
            rep.extend(m.verify_hom_bialgebra());
            rep.extend(m.verify_braided()?);
            rep.push(m.check_alpha_invariance());
            rep
        }
        Instance::Plane(p) => {
            let carrier = p.carrier();
            let mut rep = carrier.check_local_confluence(carrier.max_degree());
            rep.extend(p.verify(degree)?);
            for d in 1..=degree.min(2) {
                let piece = p.piece(d)?;
                rep.extend(verify_hybe(&b_alpha(&piece), piece.alpha()).prefixed(&format!("piece{d}")));
            }
            rep
        }
    };
    Ok(rep.sorted())
}
