//! JSON forms of presentations, Hom-bialgebras and cobraiding forms.
//!
//! Scalars are strings in the canonical grammar; monomials are rendered by
//! [`Presentation::render_word`].

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::catalog::matrices::matrix_field;
use crate::cobraid::{CobraidError, CobraidedHomBialgebra, CobraidingForm};
use crate::frt::FieldJson;
use crate::hombialg::{HomBialgebra, HomError};
use crate::ncpoly::{NCPoly, Presentation, PresentationError, Tensor};
use crate::scalars::{ScalarError, ScalarField};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum IoError {
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("missing entry for generator `{0}`")]
    Missing(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Hom(#[from] HomError),
    #[error(transparent)]
    Cobraid(#[from] CobraidError),
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct TermJson {
    pub mono: String,
    pub coef: String,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct RuleJson {
    pub lhs: String,
    pub rhs: Vec<TermJson>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct LegTermJson {
    pub legs: Vec<String>,
    pub coef: String,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct PresentationJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldJson>,
    pub generators: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<u32>>,
    pub rules: Vec<RuleJson>,
    pub max_degree: usize,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct PairJson {
    pub left: String,
    pub right: String,
    pub value: String,
}

#[derive(Serialize, Deserialize, Clone, Debug, Default)]
pub struct FormJson {
    pub gen_table: Vec<PairJson>,
    #[serde(default)]
    pub unit_left: BTreeMap<String, String>,
    #[serde(default)]
    pub unit_right: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit_unit: Option<String>,
    /// Generators the form is defined on; all when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub domain: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct InstanceJson {
    #[serde(flatten)]
    pub presentation: PresentationJson,
    pub delta: BTreeMap<String, Vec<LegTermJson>>,
    #[serde(default)]
    pub alpha: BTreeMap<String, Vec<TermJson>>,
    #[serde(default)]
    pub twisted: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<FormJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r_power: Option<u32>,
}

fn parse<T: for<'de> Deserialize<'de>>(v: &Value) -> Result<T, IoError> {
    serde_json::from_value(v.clone()).map_err(|e| IoError::Json(e.to_string()))
}

fn poly_json(p: &Presentation, poly: &NCPoly) -> Vec<TermJson> {
    poly.terms()
        .iter()
        .map(|(w, c)| TermJson {
            mono: p.render_word(w),
            coef: c.to_string(),
        })
        .collect()
}

fn poly_from(p: &Presentation, terms: &[TermJson]) -> Result<NCPoly, IoError> {
    let mut out = NCPoly::zero();
    for t in terms {
        out.add_term(p.parse_word(&t.mono)?, p.field().parse(&t.coef)?);
    }
    Ok(out)
}

fn tensor_json(p: &Presentation, t: &Tensor) -> Vec<LegTermJson> {
    t.terms()
        .iter()
        .map(|(legs, c)| LegTermJson {
            legs: legs.iter().map(|w| p.render_word(w)).collect(),
            coef: c.to_string(),
        })
        .collect()
}

fn tensor_from(p: &Presentation, terms: &[LegTermJson]) -> Result<Tensor, IoError> {
    let mut out = Tensor::zero();
    for t in terms {
        let legs = t.legs.iter().map(|l| p.parse_word(l)).collect::<Result<Vec<_>, _>>()?;
        out.add_term(legs, p.field().parse(&t.coef)?);
    }
    Ok(out)
}

pub fn presentation_json(p: &Presentation) -> PresentationJson {
    let weights = p.weights();
    PresentationJson {
        field: Some(FieldJson::of(p.field())),
        generators: p.generators().to_vec(),
        weights: weights.iter().any(|&w| w != 1).then(|| weights.to_vec()),
        rules: p
            .rules()
            .iter()
            .map(|r| RuleJson {
                lhs: p.render_word(&r.lhs),
                rhs: poly_json(p, &r.rhs),
            })
            .collect(),
        max_degree: p.max_degree(),
    }
}

pub fn presentation_to_json(p: &Presentation) -> Value {
    serde_json::to_value(presentation_json(p)).expect("serializable")
}

/// Builds a presentation; the field defaults to the quantum-matrix field
/// with variables `t, p, lambda, xi`.
pub fn presentation_from(pj: &PresentationJson) -> Result<Presentation, IoError> {
    let field = match &pj.field {
        Some(f) => f.build()?,
        None => matrix_field(),
    };
    let mut b = Presentation::builder(&field, &pj.generators);
    if let Some(w) = &pj.weights {
        b = b.weights(w);
    }
    let free = b.clone().build(1)?;
    for r in &pj.rules {
        b = b.rule_poly(free.parse_word(&r.lhs)?, poly_from(&free, &r.rhs)?);
    }
    Ok(b.build(pj.max_degree)?)
}

pub fn presentation_from_json(v: &Value) -> Result<Presentation, IoError> {
    presentation_from(&parse(v)?)
}

fn hom_json(h: &HomBialgebra) -> InstanceJson {
    let p = h.pres();
    let names = p.generators();
    InstanceJson {
        presentation: presentation_json(p),
        delta: names
            .iter()
            .cloned()
            .zip(h.delta_table().iter().map(|t| tensor_json(p, t)))
            .collect(),
        alpha: if h.is_twisted() {
            names
                .iter()
                .cloned()
                .zip(h.alpha_table().iter().map(|a| poly_json(p, a)))
                .collect()
        } else {
            BTreeMap::new()
        },
        twisted: h.is_twisted(),
        r: None,
        r_power: None,
    }
}

pub fn hom_bialgebra_to_json(h: &HomBialgebra) -> Value {
    serde_json::to_value(hom_json(h)).expect("serializable")
}

fn hom_from(ij: &InstanceJson) -> Result<HomBialgebra, IoError> {
    let pres = Arc::new(presentation_from(&ij.presentation)?);
    let mut delta = Vec::new();
    for g in pres.generators() {
        let terms = ij.delta.get(g).ok_or_else(|| IoError::Missing(g.clone()))?;
        delta.push(tensor_from(&pres, terms)?);
    }
    let h = HomBialgebra::new(pres.clone(), delta)?;
    if !ij.twisted {
        return Ok(h);
    }
    let mut alpha = Vec::new();
    for g in pres.generators() {
        let terms = ij.alpha.get(g).ok_or_else(|| IoError::Missing(g.clone()))?;
        alpha.push(poly_from(&pres, terms)?);
    }
    Ok(h.twist(alpha)?)
}

pub fn hom_bialgebra_from_json(v: &Value) -> Result<HomBialgebra, IoError> {
    hom_from(&parse(v)?)
}

pub fn form_json(p: &Presentation, f: &CobraidingForm) -> FormJson {
    let names = p.generators();
    let n = names.len();
    let mut out = FormJson::default();
    for g in 0..n {
        for h in 0..n {
            if let Some(v) = f.gen_value(g as u8, h as u8) {
                out.gen_table.push(PairJson {
                    left: names[g].clone(),
                    right: names[h].clone(),
                    value: v.to_string(),
                });
            }
        }
        if let Some(v) = f.unit_left(g as u8) {
            out.unit_left.insert(names[g].clone(), v.to_string());
        }
        if let Some(v) = f.unit_right(g as u8) {
            out.unit_right.insert(names[g].clone(), v.to_string());
        }
    }
    if !f.unit_unit().is_one() {
        out.unit_unit = Some(f.unit_unit().to_string());
    }
    if f.domain().iter().any(|d| !d) {
        out.domain = Some((0..n).filter(|&g| f.domain()[g]).map(|g| names[g].clone()).collect());
    }
    out
}

pub fn form_to_json(p: &Presentation, f: &CobraidingForm) -> Value {
    serde_json::to_value(form_json(p, f)).expect("serializable")
}

fn gen_index(p: &Presentation, name: &str) -> Result<u8, IoError> {
    p.generator(name)
        .ok_or_else(|| IoError::Presentation(PresentationError::UnknownGenerator(name.to_string())))
}

pub fn form_from(p: &Presentation, fj: &FormJson) -> Result<CobraidingForm, IoError> {
    let field: &ScalarField = p.field();
    let uu = match &fj.unit_unit {
        Some(s) => field.parse(s)?,
        None => field.one(),
    };
    let mut f = CobraidingForm::new(p.generators().len(), uu);
    for e in &fj.gen_table {
        f.set(gen_index(p, &e.left)?, gen_index(p, &e.right)?, field.parse(&e.value)?);
    }
    for (g, v) in &fj.unit_left {
        f.set_unit_left(gen_index(p, g)?, field.parse(v)?);
    }
    for (g, v) in &fj.unit_right {
        f.set_unit_right(gen_index(p, g)?, field.parse(v)?);
    }
    if let Some(d) = &fj.domain {
        let mut dom = vec![false; p.generators().len()];
        for g in d {
            dom[gen_index(p, g)? as usize] = true;
        }
        f.restrict(dom);
    }
    Ok(f)
}

pub fn form_from_json(p: &Presentation, v: &Value) -> Result<CobraidingForm, IoError> {
    form_from(p, &parse(v)?)
}

/// Instance JSON with the `r` entry and, when nonzero, the R-power.
pub fn cobraided_to_json(c: &CobraidedHomBialgebra) -> Value {
    let mut ij = hom_json(c.h());
    ij.r = Some(form_json(c.h().pres(), c.form()));
    ij.r_power = (c.r_power() > 0).then_some(c.r_power());
    serde_json::to_value(ij).expect("serializable")
}

/// The Hom-bialgebra of an instance JSON, with its cobraiding form when the
/// `r` entry is present.
pub fn instance_from_json(v: &Value) -> Result<(Arc<HomBialgebra>, Option<CobraidedHomBialgebra>), IoError> {
    let ij: InstanceJson = parse(v)?;
    let h = Arc::new(hom_from(&ij)?);
    let Some(fj) = &ij.r else {
        return Ok((h, None));
    };
    let form = form_from(h.pres(), fj)?;
    let mut c = CobraidedHomBialgebra::new(h.clone(), form)?;
    if let Some(n) = ij.r_power.filter(|&n| n > 0) {
        c = c.twist_r_power(n)?;
    }
    Ok((h, Some(c)))
}
