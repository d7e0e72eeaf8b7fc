//! Comodules over cobraided Hom-bialgebras, the operators `B_{V,W}` and
//! `B_α`, HYBE checks and comodule Hom-algebras on the quantum planes.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde_json::{json, Value};
use thiserror::Error;

use crate::cobraid::{check_alpha_invariance, CobraidError, CobraidedHomBialgebra};
use crate::frt::FrtInstance;
use crate::hombialg::{render_tensor, HomError};
use crate::linalg::Matrix;
use crate::ncpoly::{word, NCPoly, Presentation, PresentationError, Tensor, Word};
use crate::report::{Check, Report};
use crate::scalars::{Scalar, ScalarField};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ComoduleError {
    #[error(transparent)]
    Cobraid(#[from] CobraidError),
    #[error(transparent)]
    Hom(#[from] HomError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error("comodules live over different hosts")]
    HostMismatch,
    #[error("host form is not α-invariant: {0}")]
    NotInvariant(String),
    #[error("coaction does not intertwine the twisting maps at {0}")]
    NotIntertwining(String),
    #[error("exponents ({0}, {1}) are outside the closed form's range")]
    Range(usize, usize),
    #[error("shape mismatch: {0}")]
    Shape(String),
}

/// `Σ c·h ⊗ v_k`, keyed by (host word, carrier index).
pub type Coaction = BTreeMap<(Word, usize), Scalar>;

fn put<K: Ord>(m: &mut BTreeMap<K, Scalar>, k: K, c: Scalar) {
    if c.is_zero() {
        return;
    }
    let e = m.entry(k);
    match e {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = e.get() + &c;
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

/// A finite comodule `(V, α_V)` with its untwisted coaction `ρ`. Over a
/// twisted host the structure map is `ρ∘α_V`.
#[derive(Clone, Debug)]
pub struct Comodule {
    host: Arc<CobraidedHomBialgebra>,
    labels: Vec<String>,
    rho: Vec<Coaction>,
    alpha: Matrix,
}

impl Comodule {
    pub fn new(
        host: Arc<CobraidedHomBialgebra>,
        labels: Vec<String>,
        rho: Vec<Coaction>,
        alpha: Matrix,
    ) -> Result<Comodule, ComoduleError> {
        let n = labels.len();
        if rho.len() != n || alpha.rows != n || alpha.cols != n {
            return Err(ComoduleError::Shape(format!(
                "{n} labels, {} coactions, α {}×{}",
                rho.len(),
                alpha.rows,
                alpha.cols
            )));
        }
        if rho.iter().any(|r| r.keys().any(|(_, k)| *k >= n)) {
            return Err(ComoduleError::Shape("coaction leaves the carrier".into()));
        }
        Ok(Comodule {
            host,
            labels,
            rho,
            alpha,
        })
    }

    pub fn host(&self) -> &Arc<CobraidedHomBialgebra> {
        &self.host
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn alpha(&self) -> &Matrix {
        &self.alpha
    }

    /// Same carrier and coaction with another twisting map.
    pub fn with_alpha(&self, alpha: Matrix) -> Comodule {
        Comodule { alpha, ..self.clone() }
    }

    /// Same carrier over another host on the same generators.
    pub fn with_host(&self, host: Arc<CobraidedHomBialgebra>) -> Result<Comodule, ComoduleError> {
        if host.h().pres().generators() != self.host.h().pres().generators() {
            return Err(ComoduleError::HostMismatch);
        }
        Ok(Comodule { host, ..self.clone() })
    }

    pub fn base_rho(&self, i: usize) -> &Coaction {
        &self.rho[i]
    }

    /// Labels, the untwisted ρ-table and the α_V matrix.
    pub fn to_json(&self) -> Value {
        let p = self.host.h().pres();
        let rho: serde_json::Map<String, Value> = self
            .labels
            .iter()
            .zip(&self.rho)
            .map(|(l, r)| {
                let terms: Vec<Value> = r
                    .iter()
                    .map(|((w, k), c)| json!({"legs": [p.render_word(w), self.labels[*k]], "coef": c.to_string()}))
                    .collect();
                (l.clone(), Value::Array(terms))
            })
            .collect();
        json!({"labels": self.labels, "rho": rho, "alpha": self.alpha.to_json()})
    }

    fn field(&self) -> &ScalarField {
        self.host.h().pres().field()
    }

    fn apply_alpha_v(&self, i: usize) -> Vec<(usize, Scalar)> {
        (0..self.dim())
            .filter(|&k| !self.alpha.get(k, i).is_zero())
            .map(|k| (k, self.alpha.get(k, i).clone()))
            .collect()
    }

    /// The structure map of the instance on `v_i`.
    pub fn rho(&self, i: usize) -> Coaction {
        if !self.host.h().is_twisted() {
            return self.rho[i].clone();
        }
        let mut out = Coaction::new();
        for (k, c) in self.apply_alpha_v(i) {
            for (key, v) in &self.rho[k] {
                put(&mut out, key.clone(), &c * v);
            }
        }
        out
    }

    fn render(&self, t: &BTreeMap<(Word, Word, usize), Scalar>) -> String {
        let p = self.host.h().pres();
        if t.is_empty() {
            return "0".into();
        }
        t.iter()
            .map(|((u, v, k), c)| {
                format!(
                    "({c})*({} ⊗ {} ⊗ {})",
                    p.render_word(u),
                    p.render_word(v),
                    self.labels[*k]
                )
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Hom-coassociativity and comultiplicativity on every basis vector.
    pub fn verify(&self) -> Report {
        let h = self.host.h();
        let n = self.dim();
        let rhos: Vec<Coaction> = (0..n).map(|i| self.rho(i)).collect();
        let mut coass = Vec::new();
        let mut comult = Vec::new();
        for (i, r) in rhos.iter().enumerate() {
            let mut l = BTreeMap::new();
            let mut rr = BTreeMap::new();
            for ((w, k), c) in r {
                for (legs, d) in h.delta(&h.word_poly(w)).terms() {
                    for (m, a) in self.apply_alpha_v(*k) {
                        put(&mut l, (legs[0].clone(), legs[1].clone(), m), &(c * d) * &a);
                    }
                }
                for (u, a) in h.alpha_word(w).terms() {
                    for ((v, m), b) in &rhos[*k] {
                        put(&mut rr, (u.clone(), v.clone(), *m), &(c * a) * b);
                    }
                }
            }
            if l != rr {
                coass.push(json!({"v": self.labels[i], "lhs": self.render(&l), "rhs": self.render(&rr)}));
            }
            let mut l = Coaction::new();
            for ((w, k), c) in r {
                for (u, a) in h.alpha_word(w).terms() {
                    for (m, b) in self.apply_alpha_v(*k) {
                        put(&mut l, (u.clone(), m), &(c * a) * &b);
                    }
                }
            }
            let mut rr = Coaction::new();
            for (k, a) in self.apply_alpha_v(i) {
                for (key, b) in &rhos[k] {
                    put(&mut rr, key.clone(), &a * b);
                }
            }
            if l != rr {
                comult.push(json!({"v": self.labels[i]}));
            }
        }
        let mut rep = Report::new();
        rep.push(Check::from_failures("comodule_coassociativity", None, n, coass));
        rep.push(Check::from_failures("comodule_comultiplicativity", None, n, comult));
        rep
    }
}

/// `B_{V,W}(v⊗w) = Σ R(w_A⊗v_A) w_W⊗v_V` with the instance coactions and form.
/// Column `(v_i, w_j)` is `i·dim W + j`, row `(w_k, v_l)` is `k·dim V + l`.
pub fn bvw(v: &Comodule, w: &Comodule) -> Result<Matrix, ComoduleError> {
    if !Arc::ptr_eq(&v.host, &w.host) {
        return Err(ComoduleError::HostMismatch);
    }
    let c = &v.host;
    let h = c.h();
    let (dv, dw) = (v.dim(), w.dim());
    let mut m = Matrix::zeros(v.field(), dw * dv, dv * dw);
    let rv: Vec<Coaction> = (0..dv).map(|i| v.rho(i)).collect();
    let rw: Vec<Coaction> = (0..dw).map(|j| w.rho(j)).collect();
    for i in 0..dv {
        for j in 0..dw {
            for ((va, l), cv) in &rv[i] {
                for ((wa, k), cw) in &rw[j] {
                    let r = c.eval(&h.word_poly(wa), &h.word_poly(va))?;
                    if r.is_zero() {
                        continue;
                    }
                    let row = k * dv + l;
                    let col = i * dw + j;
                    let cur = m.get(row, col).clone();
                    m.set(row, col, cur + &(&r * cv) * cw);
                }
            }
        }
    }
    Ok(m)
}

/// `B_α(v⊗w) = Σ R(w_A⊗v_A) α_V(w_V)⊗α_V(v_V)` from the untwisted coaction
/// and the untwisted form.
pub fn b_alpha(v: &Comodule) -> Matrix {
    let c = &v.host;
    let n = v.dim();
    let mut plain = Matrix::zeros(v.field(), n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            for ((va, l), cv) in &v.rho[i] {
                for ((wa, k), cw) in &v.rho[j] {
                    let r = c.eval_base_words(wa, va);
                    if r.is_zero() {
                        continue;
                    }
                    let (row, col) = (k * n + l, i * n + j);
                    let cur = plain.get(row, col).clone();
                    plain.set(row, col, cur + &(&r * cv) * cw);
                }
            }
        }
    }
    v.alpha.kron(&v.alpha).mul(&plain)
}

fn matrix_witness(l: &Matrix, r: &Matrix) -> Vec<Value> {
    for i in 0..l.rows {
        for j in 0..l.cols {
            if l.get(i, j) != r.get(i, j) {
                return vec![
                    json!({"row": i, "col": j, "lhs": l.get(i, j).to_string(), "rhs": r.get(i, j).to_string()}),
                ];
            }
        }
    }
    Vec::new()
}

/// The HYBE for `(V, α)` and the commutation of `B` with `α^{⊗2}`.
pub fn verify_hybe(b: &Matrix, alpha: &Matrix) -> Report {
    let a2 = alpha.kron(alpha);
    let ab = alpha.kron(b);
    let ba = b.kron(alpha);
    let lhs = ab.mul(&ba).mul(&ab);
    let rhs = ba.mul(&ab).mul(&ba);
    let mut rep = Report::new();
    rep.push(Check::from_failures(
        "hybe",
        None,
        lhs.rows * lhs.cols,
        matrix_witness(&lhs, &rhs),
    ));
    rep.push(Check::from_failures(
        "alpha_commutation",
        None,
        b.rows * b.cols,
        matrix_witness(&a2.mul(b), &b.mul(&a2)),
    ));
    rep
}

/// The three-comodule identity on `U⊗V⊗W`, after certifying that the host
/// form is α-invariant up to `degree`.
pub fn verify_mixed_hybe(u: &Comodule, v: &Comodule, w: &Comodule, degree: usize) -> Result<Report, ComoduleError> {
    let inv = check_alpha_invariance(&u.host, degree)?;
    if let Some(f) = inv.failures().next() {
        return Err(ComoduleError::NotInvariant(
            f.witness.as_ref().map(|x| x.to_string()).unwrap_or_default(),
        ));
    }
    let (b_uv, b_uw, b_vw) = (bvw(u, v)?, bvw(u, w)?, bvw(v, w)?);
    let lhs = w.alpha.kron(&b_uv).mul(&b_uw.kron(&v.alpha)).mul(&u.alpha.kron(&b_vw));
    let rhs = b_vw.kron(&u.alpha).mul(&v.alpha.kron(&b_uw)).mul(&b_uv.kron(&w.alpha));
    let mut rep = Report::new();
    rep.push(Check::from_failures(
        "mixed_hybe",
        None,
        lhs.rows * lhs.cols,
        matrix_witness(&lhs, &rhs),
    ));
    for (name, (x, y, b)) in [("uv", (u, v, &b_uv)), ("uw", (u, w, &b_uw)), ("vw", (v, w, &b_vw))] {
        let l = y.alpha.kron(&x.alpha).mul(b);
        let r = b.mul(&x.alpha.kron(&y.alpha));
        rep.push(Check::from_failures(
            format!("alpha_commutation_{name}"),
            None,
            b.rows * b.cols,
            matrix_witness(&l, &r),
        ));
    }
    Ok(rep)
}

/// The standard comodule `ρ(v_i) = Σ T_i^k ⊗ v_k`, with `α_V = diag(λ_i)`
/// when the instance carries a λ-vector.
pub fn frt_comodule(inst: &FrtInstance) -> Result<Comodule, ComoduleError> {
    let n = inst.spec.dim();
    let field = inst.spec.field().clone();
    let rho = (1..=n)
        .map(|i| {
            let mut r = Coaction::new();
            for k in 1..=n {
                r.insert((inst.generator(i, k), k - 1), field.one());
            }
            r
        })
        .collect();
    let mut alpha = Matrix::identity(&field, n);
    if let Some(l) = &inst.lambda {
        for (i, v) in l.iter().enumerate() {
            alpha.set(i, i, v.clone());
        }
    }
    Comodule::new(inst.chb.clone(), (1..=n).map(|i| format!("v{i}")).collect(), rho, alpha)
}

/// A comodule algebra over a host, optionally twisted: the carrier product is
/// `α_A∘μ` and the coaction `ρ∘α_A` once twisted.
#[derive(Clone, Debug)]
pub struct ComoduleAlgebra {
    host: Arc<CobraidedHomBialgebra>,
    carrier: Arc<Presentation>,
    /// `ρ` on carrier generators, legs `[host word, carrier word]`.
    rho_gens: Vec<Tensor>,
    alpha: Vec<NCPoly>,
    twisted: bool,
}

impl ComoduleAlgebra {
    /// The untwisted comodule algebra with `ρ` given on generators.
    pub fn new(
        host: Arc<CobraidedHomBialgebra>,
        carrier: Arc<Presentation>,
        rho_gens: Vec<Tensor>,
    ) -> Result<ComoduleAlgebra, ComoduleError> {
        let n = carrier.generators().len();
        if rho_gens.len() != n {
            return Err(ComoduleError::Shape(format!(
                "{} coactions for {n} generators",
                rho_gens.len()
            )));
        }
        let one = carrier.field().one();
        let alpha = (0..n).map(|g| NCPoly::term(word(&[g as u8]), one.clone())).collect();
        Ok(ComoduleAlgebra {
            host,
            carrier,
            rho_gens,
            alpha,
            twisted: false,
        })
    }

    pub fn host(&self) -> &Arc<CobraidedHomBialgebra> {
        &self.host
    }

    pub fn carrier(&self) -> &Arc<Presentation> {
        &self.carrier
    }

    pub fn is_twisted(&self) -> bool {
        self.twisted
    }

    /// Carrier presentation, ρ on generators and the α_A table.
    pub fn to_json(&self) -> Value {
        let hp = self.host.h().pres();
        let c = &self.carrier;
        let gens = c.generators();
        let rho: serde_json::Map<String, Value> = gens
            .iter()
            .zip(&self.rho_gens)
            .map(|(g, t)| {
                let terms: Vec<Value> = t
                    .terms()
                    .iter()
                    .map(|(legs, v)| json!({"legs": [hp.render_word(&legs[0]), c.render_word(&legs[1])], "coef": v.to_string()}))
                    .collect();
                (g.clone(), Value::Array(terms))
            })
            .collect();
        let alpha: serde_json::Map<String, Value> = gens
            .iter()
            .zip(&self.alpha)
            .map(|(g, a)| {
                let terms: Vec<Value> = a
                    .terms()
                    .iter()
                    .map(|(w, v)| json!({"mono": c.render_word(w), "coef": v.to_string()}))
                    .collect();
                (g.clone(), Value::Array(terms))
            })
            .collect();
        json!({
            "carrier": crate::io::presentation_to_json(c),
            "rho": rho,
            "alpha": alpha,
            "twisted": self.twisted,
        })
    }

    /// Twists by a host of the same presentation (carrying `α_H`) and an algebra
    /// endomorphism `α_A`, after checking `ρ∘α_A = (α_H⊗α_A)∘ρ` on generators.
    pub fn twist(
        &self,
        host: Arc<CobraidedHomBialgebra>,
        alpha: Vec<NCPoly>,
    ) -> Result<ComoduleAlgebra, ComoduleError> {
        if self.twisted {
            return Err(HomError::AlreadyTwisted.into());
        }
        if host.h().pres().generators() != self.host.h().pres().generators() {
            return Err(ComoduleError::HostMismatch);
        }
        let n = self.carrier.generators().len();
        if alpha.len() != n {
            return Err(ComoduleError::Shape(format!(
                "{} images for {n} generators",
                alpha.len()
            )));
        }
        let cand = ComoduleAlgebra {
            host,
            carrier: self.carrier.clone(),
            rho_gens: self.rho_gens.clone(),
            alpha,
            twisted: true,
        };
        for r in self.carrier.rules() {
            let lhs = cand.alpha_poly(&NCPoly::term(r.lhs.clone(), self.carrier.field().one()));
            let rhs = cand.alpha_poly(&r.rhs);
            if lhs != rhs {
                return Err(ComoduleError::NotIntertwining(format!(
                    "relation {}",
                    self.carrier.render_word(&r.lhs)
                )));
            }
        }
        for g in 0..n {
            let gw = word(&[g as u8]);
            let l = cand.base_rho(&cand.alpha_poly(&NCPoly::term(gw.clone(), self.carrier.field().one())));
            let h = cand.host.h();
            let r = cand
                .base_rho_word(&gw)
                .map_legs(&[&|w| h.alpha_word(w), &|w| cand.alpha_word(w)]);
            if l != r {
                return Err(ComoduleError::NotIntertwining(self.carrier.generators()[g].clone()));
            }
        }
        Ok(cand)
    }

    pub fn alpha_word(&self, w: &Word) -> NCPoly {
        let mut acc = self.carrier.one();
        for &g in w.iter() {
            acc = self.carrier.multiply(&acc, &self.alpha[g as usize]);
        }
        acc
    }

    pub fn alpha_poly(&self, p: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in p.terms() {
            out.add_scaled(&self.alpha_word(w), c);
        }
        out
    }

    /// The carrier product of the instance.
    pub fn mu(&self, a: &NCPoly, b: &NCPoly) -> NCPoly {
        let p = self.carrier.multiply(a, b);
        if self.twisted {
            self.alpha_poly(&p)
        } else {
            p
        }
    }

    /// Untwisted `ρ`, extended multiplicatively from the generators.
    pub fn base_rho_word(&self, w: &Word) -> Tensor {
        let hp = self.host.h().pres();
        let mut acc = Tensor::pair(&hp.one(), &self.carrier.one());
        for &g in w.iter() {
            acc = crate::hombialg::tensor_mul(&[hp, &self.carrier], &acc, &self.rho_gens[g as usize]);
        }
        acc
    }

    pub fn base_rho(&self, p: &NCPoly) -> Tensor {
        let mut out = Tensor::zero();
        for (w, c) in p.terms() {
            out.add_scaled(&self.base_rho_word(w), c);
        }
        out
    }

    /// The instance coaction.
    pub fn rho(&self, p: &NCPoly) -> Tensor {
        if self.twisted {
            self.base_rho(&self.alpha_poly(p))
        } else {
            self.base_rho(p)
        }
    }

    pub fn render(&self, t: &Tensor) -> String {
        render_tensor(&[self.host.h().pres(), &self.carrier], t)
    }

    /// Comodule axioms and multiplicativity of `ρ` on carrier basis monomials
    /// of degree at most `degree`.
    pub fn verify(&self, degree: usize) -> Result<Report, ComoduleError> {
        let h = self.host.h();
        let basis = self.carrier.graded_basis(Some(degree))?;
        let polys: Vec<NCPoly> = basis
            .iter()
            .map(|w| NCPoly::term(w.clone(), self.carrier.field().one()))
            .collect();
        let rhos: Vec<Tensor> = polys.iter().map(|p| self.rho(p)).collect();
        let name = |w: &Word| Value::String(self.carrier.render_word(w));
        let mut coass = Vec::new();
        let mut comult = Vec::new();
        for (i, r) in rhos.iter().enumerate() {
            let l = r.expand_leg(0, &|w| h.delta(&h.word_poly(w))).map_legs(&[
                &|w| h.word_poly(w),
                &|w| h.word_poly(w),
                &|w| self.alpha_word(w),
            ]);
            let rr = r
                .map_legs(&[&|w| h.alpha_word(w), &|w| {
                    NCPoly::term(w.clone(), self.carrier.field().one())
                }])
                .expand_leg(1, &|w| self.rho(&NCPoly::term(w.clone(), self.carrier.field().one())));
            if l != rr {
                coass.push(json!({"x": name(&basis[i])}));
            }
            let l = r.map_legs(&[&|w| h.alpha_word(w), &|w| self.alpha_word(w)]);
            let rr = self.rho(&self.alpha_poly(&polys[i]));
            if l != rr {
                comult.push(json!({"x": name(&basis[i]), "lhs": self.render(&l), "rhs": self.render(&rr)}));
            }
        }
        let mut mult = Vec::new();
        for i in 0..basis.len() {
            for j in 0..basis.len() {
                let l = self.rho(&self.mu(&polys[i], &polys[j]));
                let r = self.tensor_mu(&rhos[i], &rhos[j]);
                if l != r {
                    mult.push(json!({"x": name(&basis[i]), "y": name(&basis[j]),
                        "lhs": self.render(&l), "rhs": self.render(&r)}));
                }
            }
        }
        let nb = basis.len();
        let mut rep = Report::new();
        rep.push(Check::from_failures(
            "comodule_coassociativity",
            Some(degree),
            nb,
            coass,
        ));
        rep.push(Check::from_failures(
            "comodule_comultiplicativity",
            Some(degree),
            nb,
            comult,
        ));
        rep.push(Check::from_failures(
            "coaction_multiplicativity",
            Some(degree),
            nb * nb,
            mult,
        ));
        Ok(rep)
    }

    /// `Σ μ_H(a_H, b_H) ⊗ μ_A(a_A, b_A)` with the instance products.
    fn tensor_mu(&self, a: &Tensor, b: &Tensor) -> Tensor {
        let h = self.host.h();
        let mut out = Tensor::zero();
        for (ka, ca) in a.terms() {
            for (kb, cb) in b.terms() {
                let l = h.mu(&h.word_poly(&ka[0]), &h.word_poly(&kb[0]));
                let one = self.carrier.field().one();
                let r = self.mu(
                    &NCPoly::term(ka[1].clone(), one.clone()),
                    &NCPoly::term(kb[1].clone(), one),
                );
                out.add_scaled(&Tensor::pair(&l, &r), &(ca * cb));
            }
        }
        out
    }

    /// The degree-`d` graded piece as a finite comodule, with the untwisted
    /// coaction and `α_V = α_A` restricted.
    pub fn piece(&self, d: usize) -> Result<Comodule, ComoduleError> {
        let basis: Vec<Word> = self
            .carrier
            .graded_basis(Some(d))?
            .into_iter()
            .filter(|w| w.len() == d)
            .collect();
        let index: BTreeMap<&Word, usize> = basis.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let field = self.carrier.field().clone();
        let lookup = |w: &Word| {
            index
                .get(w)
                .copied()
                .ok_or_else(|| ComoduleError::Shape(format!("{} leaves the piece", self.carrier.render_word(w))))
        };
        let mut rho = Vec::new();
        for w in &basis {
            let mut r = Coaction::new();
            for (legs, c) in self.base_rho_word(w).terms() {
                put(&mut r, (legs[0].clone(), lookup(&legs[1])?), c.clone());
            }
            rho.push(r);
        }
        let mut alpha = Matrix::zeros(&field, basis.len(), basis.len());
        for (i, w) in basis.iter().enumerate() {
            for (u, c) in self.alpha_word(w).terms() {
                alpha.set(lookup(u)?, i, c.clone());
            }
        }
        let labels = basis.iter().map(|w| self.carrier.render_word(w)).collect();
        Comodule::new(self.host.clone(), labels, rho, alpha)
    }
}

/// The three quantum planes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlaneKind {
    Standard,
    Fermionic,
    Mixed,
}

impl PlaneKind {
    pub fn name(self) -> &'static str {
        match self {
            PlaneKind::Standard => "standard",
            PlaneKind::Fermionic => "fermionic",
            PlaneKind::Mixed => "mixed",
        }
    }
}

/// `(n)_x = 1 + x + … + x^{n-1}`.
pub fn q_number(x: &Scalar, n: usize) -> Scalar {
    let mut s = x.field().zero();
    let mut p = x.field().one();
    for _ in 0..n {
        s = &s + &p;
        p = &p * x;
    }
    s
}

/// `binom(n, r)_x` by the product formula.
pub fn q_binomial(x: &Scalar, n: usize, r: usize) -> Scalar {
    let fact = |m: usize| (1..=m).fold(x.field().one(), |acc, k| &acc * &q_number(x, k));
    fact(n)
        .checked_div(&(&fact(r) * &fact(n - r)))
        .expect("q-factorials are nonzero for formal q")
}

fn pow(x: &Scalar, n: i64) -> Scalar {
    let base = if n < 0 { x.inv().expect("invertible") } else { x.clone() };
    (0..n.unsigned_abs()).fold(x.field().one(), |acc, _| &acc * &base)
}

/// The literal closed-form twisted coaction `ρ_α(x^i y^j)` on a quantum plane
/// over the matrix host presentation `host` (generators `a, b, c, d`).
pub fn closed_form_coaction(
    kind: PlaneKind,
    i: usize,
    j: usize,
    host: &Presentation,
    plane: &Presentation,
    xi: &Scalar,
    lambda: &Scalar,
) -> Result<Tensor, ComoduleError> {
    let f = host.field();
    let q = f.parse("q").expect("matrix field declares t");
    let q2 = &q * &q;
    let hw = |s: String| {
        let s = if s.is_empty() { "1".to_string() } else { s };
        host.nf_word(&host.parse_word(&s).expect("matrix word"))
    };
    let pw = |xs: usize, ys: usize| {
        let mut w = Word::new();
        w.extend(std::iter::repeat_n(0u8, xs));
        w.extend(std::iter::repeat_n(1u8, ys));
        plane.nf_word(&w)
    };
    let rep = |g: &str, n: usize| g.repeat(n);
    let scale = &pow(lambda, -(j as i64)) * &pow(xi, (i + j) as i64);
    let mut out = Tensor::zero();
    match kind {
        PlaneKind::Standard => {
            for r in 0..=i {
                for s in 0..=j {
                    let c = &(&pow(&q, ((i - r) * s) as i64) * &q_binomial(&q2, i, r)) * &q_binomial(&q2, j, s);
                    let m = hw(format!(
                        "{}{}{}{}",
                        rep("a", r),
                        rep("b", i - r),
                        rep("c", s),
                        rep("d", j - s)
                    ));
                    out.add_scaled(&Tensor::pair(&m, &pw(r + s, i + j - r - s)), &(&c * &scale));
                }
            }
        }
        PlaneKind::Fermionic => match (i, j) {
            (0, 0) => out = Tensor::pair(&host.one(), &plane.one()),
            (1, 0) => {
                out.add_scaled(&Tensor::pair(&hw("a".into()), &pw(1, 0)), &scale);
                out.add_scaled(&Tensor::pair(&hw("b".into()), &pw(0, 1)), &scale);
            }
            (0, 1) => {
                out.add_scaled(&Tensor::pair(&hw("c".into()), &pw(1, 0)), &scale);
                out.add_scaled(&Tensor::pair(&hw("d".into()), &pw(0, 1)), &scale);
            }
            (1, 1) => {
                let det = crate::catalog::matrices::quantum_determinant(host);
                out.add_scaled(&Tensor::pair(&det, &pw(1, 1)), &scale);
            }
            _ => return Err(ComoduleError::Range(i, j)),
        },
        PlaneKind::Mixed => match j {
            0 => {
                out.add_scaled(&Tensor::pair(&hw(rep("a", i)), &pw(i, 0)), &scale);
                if i > 0 {
                    let c = &q_number(&q2, i) * &scale;
                    out.add_scaled(&Tensor::pair(&hw(format!("{}b", rep("a", i - 1))), &pw(i - 1, 1)), &c);
                }
            }
            1 => {
                out.add_scaled(&Tensor::pair(&hw(format!("{}c", rep("a", i))), &pw(i + 1, 0)), &scale);
                let mut m = hw(format!("{}d", rep("a", i)));
                if i > 0 {
                    m.add_scaled(&hw(format!("{}bc", rep("a", i - 1))), &(&q * &q_number(&q2, i)));
                }
                out.add_scaled(&Tensor::pair(&m, &pw(i, 1)), &scale);
            }
            _ => return Err(ComoduleError::Range(i, j)),
        },
    }
    Ok(out)
}
