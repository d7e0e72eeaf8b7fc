//! Hom-cobraiding forms: storage, recursive extension, the cobraided axiom
//! suite, the operator quantum Hom-Yang-Baxter equations and the R-power twist.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, RwLock};

use rayon::prelude::*;
use serde_json::{json, Value};
use thiserror::Error;

use crate::hombialg::{HomBialgebra, HomError};
use crate::linalg::Matrix;
use crate::ncpoly::{word, NCPoly, PresentationError, Tensor, Word};
use crate::report::{Check, Report};
use crate::scalars::Scalar;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CobraidError {
    #[error("no value for R({0} ⊗ {1})")]
    MissingPair(String, String),
    #[error("no unit value for {0}")]
    MissingUnit(String),
    #[error("{0} lies outside the domain of R")]
    OutsideDomain(String),
    #[error("twisting map is not injective: {0} lies in its kernel")]
    NotInjective(String),
    #[error("R is not α-invariant: {0}")]
    NotInvariant(String),
    #[error("form and bialgebra have different generator counts")]
    Mismatch,
    #[error(transparent)]
    Hom(#[from] HomError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}

/// The untwisted bilinear form on generators together with its unit values.
#[derive(Clone, Debug)]
pub struct CobraidingForm {
    gen_table: HashMap<(u8, u8), Scalar>,
    unit_left: Vec<Option<Scalar>>,
    unit_right: Vec<Option<Scalar>>,
    unit_unit: Scalar,
    domain: Vec<bool>,
}

impl CobraidingForm {
    /// An empty form on `ngens` generators with `R(1⊗1) = unit_unit`.
    pub fn new(ngens: usize, unit_unit: Scalar) -> CobraidingForm {
        CobraidingForm {
            gen_table: HashMap::new(),
            unit_left: vec![None; ngens],
            unit_right: vec![None; ngens],
            unit_unit,
            domain: vec![true; ngens],
        }
    }

    pub fn set(&mut self, g: u8, h: u8, v: Scalar) {
        self.gen_table.insert((g, h), v);
    }

    /// Sets `R(1⊗g)`.
    pub fn set_unit_left(&mut self, g: u8, v: Scalar) {
        self.unit_left[g as usize] = Some(v);
    }

    /// Sets `R(g⊗1)`.
    pub fn set_unit_right(&mut self, g: u8, v: Scalar) {
        self.unit_right[g as usize] = Some(v);
    }

    /// Limits R to the subalgebra generated by the flagged generators.
    pub fn restrict(&mut self, domain: Vec<bool>) {
        self.domain = domain;
    }

    pub fn ngens(&self) -> usize {
        self.domain.len()
    }

    pub fn domain(&self) -> &[bool] {
        &self.domain
    }

    pub fn gen_value(&self, g: u8, h: u8) -> Option<&Scalar> {
        self.gen_table.get(&(g, h))
    }

    pub fn unit_left(&self, g: u8) -> Option<&Scalar> {
        self.unit_left[g as usize].as_ref()
    }

    pub fn unit_right(&self, g: u8) -> Option<&Scalar> {
        self.unit_right[g as usize].as_ref()
    }

    pub fn unit_unit(&self) -> &Scalar {
        &self.unit_unit
    }

    pub fn in_domain(&self, w: &Word) -> bool {
        w.iter().all(|&g| self.domain[g as usize])
    }

    /// Every table entry the recursion can reach on the domain is present.
    fn validate(&self, names: &[String]) -> Result<(), CobraidError> {
        let n = self.ngens();
        for g in (0..n).filter(|&g| self.domain[g]) {
            if self.unit_left[g].is_none() || self.unit_right[g].is_none() {
                return Err(CobraidError::MissingUnit(names[g].clone()));
            }
            for h in (0..n).filter(|&h| self.domain[h]) {
                if !self.gen_table.contains_key(&(g as u8, h as u8)) {
                    return Err(CobraidError::MissingPair(names[g].clone(), names[h].clone()));
                }
            }
        }
        Ok(())
    }
}

type Cache = Arc<RwLock<HashMap<(Word, Word), Scalar>>>;

/// A Hom-bialgebra with a cobraiding form. The stored form is untwisted; the
/// instance form is `R∘(αⁿ⊗αⁿ)` with `n = r_power`.
pub struct CobraidedHomBialgebra {
    h: Arc<HomBialgebra>,
    base: Arc<HomBialgebra>,
    form: Arc<CobraidingForm>,
    r_power: u32,
    cache: Cache,
}

impl std::fmt::Debug for CobraidedHomBialgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CobraidedHomBialgebra")
            .field("h", &self.h)
            .field("r_power", &self.r_power)
            .finish()
    }
}

impl CobraidedHomBialgebra {
    pub fn new(h: Arc<HomBialgebra>, form: CobraidingForm) -> Result<Self, CobraidError> {
        if form.ngens() != h.pres().generators().len() {
            return Err(CobraidError::Mismatch);
        }
        form.validate(h.pres().generators())?;
        let base = Arc::new(h.base());
        Ok(CobraidedHomBialgebra {
            h,
            base,
            form: Arc::new(form),
            r_power: 0,
            cache: Arc::default(),
        })
    }

    pub fn h(&self) -> &Arc<HomBialgebra> {
        &self.h
    }

    pub fn form(&self) -> &CobraidingForm {
        &self.form
    }

    pub fn r_power(&self) -> u32 {
        self.r_power
    }

    /// Same form over a different Hom-bialgebra structure on the same presentation.
    pub fn with_h(&self, h: Arc<HomBialgebra>) -> CobraidedHomBialgebra {
        CobraidedHomBialgebra {
            h,
            base: self.base.clone(),
            form: self.form.clone(),
            r_power: self.r_power,
            cache: self.cache.clone(),
        }
    }

    /// The untwisted form on two normal words of the domain.
    pub fn eval_base_words(&self, m: &Word, n: &Word) -> Scalar {
        let f = &*self.form;
        match (m.len(), n.len()) {
            (0, 0) => return f.unit_unit.clone(),
            (0, 1) => return f.unit_left(n[0]).expect("validated").clone(),
            (1, 0) => return f.unit_right(m[0]).expect("validated").clone(),
            (1, 1) => return f.gen_value(m[0], n[0]).expect("validated").clone(),
            _ => {}
        }
        let key = (m.clone(), n.clone());
        if let Some(v) = self.cache.read().unwrap().get(&key) {
            return v.clone();
        }
        let field = self.h.pres().field();
        let mut acc = field.zero();
        if m.is_empty() {
            // R(1⊗yz) = R(1⊗z)R(1⊗y)
            let y = word(&n[..1]);
            let z = word(&n[1..]);
            let a = self.eval_base_words(m, &z);
            if !a.is_zero() {
                acc = a * self.eval_base_words(m, &y);
            }
        } else if m.len() == 1 {
            // R(g⊗yz) = Σ R(g_1⊗z)R(g_2⊗y)
            let y = word(&n[..1]);
            let z = word(&n[1..]);
            for (legs, c) in self.base.base_delta_word(m).terms() {
                let a = self.eval_base_words(&legs[0], &z);
                if a.is_zero() {
                    continue;
                }
                let b = self.eval_base_words(&legs[1], &y);
                if !b.is_zero() {
                    acc = acc + c * &(a * b);
                }
            }
        } else {
            // R(g m′⊗n) = Σ R(g⊗n_1)R(m′⊗n_2)
            let g = word(&m[..1]);
            let rest = word(&m[1..]);
            for (legs, c) in self.base.base_delta_word(n).terms() {
                let a = self.eval_base_words(&g, &legs[0]);
                if a.is_zero() {
                    continue;
                }
                let b = self.eval_base_words(&rest, &legs[1]);
                if !b.is_zero() {
                    acc = acc + c * &(a * b);
                }
            }
        }
        self.cache.write().unwrap().insert(key, acc.clone());
        acc
    }

    /// Untwisted form, bilinearly extended. Both arguments must lie in the domain.
    pub fn eval_base(&self, u: &NCPoly, v: &NCPoly) -> Scalar {
        let mut acc = self.h.pres().field().zero();
        for (m, a) in u.terms() {
            for (n, b) in v.terms() {
                let r = self.eval_base_words(m, n);
                if !r.is_zero() {
                    acc = acc + &(a * b) * &r;
                }
            }
        }
        acc
    }

    fn eval_unchecked(&self, u: &NCPoly, v: &NCPoly) -> Scalar {
        if self.r_power == 0 {
            self.eval_base(u, v)
        } else {
            self.eval_base(&self.h.alpha_pow(u, self.r_power), &self.h.alpha_pow(v, self.r_power))
        }
    }

    fn eval_words(&self, m: &Word, n: &Word) -> Scalar {
        if self.r_power == 0 {
            self.eval_base_words(m, n)
        } else {
            self.eval_unchecked(&self.h.word_poly(m), &self.h.word_poly(n))
        }
    }

    /// The instance form `R(αⁿu ⊗ αⁿv)`.
    pub fn eval(&self, u: &NCPoly, v: &NCPoly) -> Result<Scalar, CobraidError> {
        for w in u.terms().keys().chain(v.terms().keys()) {
            if !self.form.in_domain(w) {
                return Err(CobraidError::OutsideDomain(self.h.pres().render_word(w)));
            }
        }
        Ok(self.eval_unchecked(u, v))
    }

    /// Parses both arguments in the presentation's word syntax and evaluates.
    pub fn eval_text(&self, u: &str, v: &str) -> Result<Scalar, CobraidError> {
        let p = self.h.pres();
        let one = p.field().one();
        let u = p.normal_form(&NCPoly::term(p.parse_word(u)?, one.clone()));
        let v = p.normal_form(&NCPoly::term(p.parse_word(v)?, one));
        self.eval(&u, &v)
    }

    /// The cobraided Hom-bialgebra `(A, μ, Δ, α, R^{αⁿ})`, after certifying
    /// that α is injective on the basis up to the presentation's `max_degree`.
    pub fn twist_r_power(&self, n: u32) -> Result<CobraidedHomBialgebra, CobraidError> {
        if n > 0 {
            alpha_injectivity(&self.h, self.h.pres().max_degree())?;
        }
        Ok(CobraidedHomBialgebra {
            h: self.h.clone(),
            base: self.base.clone(),
            form: self.form.clone(),
            r_power: self.r_power + n,
            cache: self.cache.clone(),
        })
    }

    /// Normal words of the domain up to `degree`.
    pub fn domain_basis(&self, degree: usize) -> Result<Vec<Word>, CobraidError> {
        let basis = self.h.pres().graded_basis(Some(degree))?;
        Ok(basis.into_iter().filter(|w| self.form.in_domain(w)).collect())
    }
}

/// Certifies that α has trivial kernel on the span of normal words up to
/// `degree`; the error carries a kernel element.
pub fn alpha_injectivity(h: &HomBialgebra, degree: usize) -> Result<(), CobraidError> {
    let p = h.pres();
    let basis = p.graded_basis(Some(degree))?;
    let images: Vec<NCPoly> = basis.iter().map(|w| h.alpha_word(w)).collect();
    let mut seen = BTreeSet::new();
    let monomial = images
        .iter()
        .all(|im| im.len() == 1 && seen.insert(im.terms().keys().next().cloned().unwrap_or_default()));
    if monomial {
        return Ok(());
    }
    let words: Vec<Word> = images
        .iter()
        .flat_map(|im| im.terms().keys().cloned())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let index: HashMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut m = Matrix::zeros(p.field(), words.len(), basis.len());
    for (j, im) in images.iter().enumerate() {
        for (w, c) in im.terms() {
            m.set(index[w], j, c.clone());
        }
    }
    match m.kernel_vector() {
        None => Ok(()),
        Some(v) => {
            let mut k = NCPoly::zero();
            for (w, c) in basis.iter().zip(v) {
                k.add_term(w.clone(), c);
            }
            Err(CobraidError::NotInjective(p.render_poly(&k)))
        }
    }
}

fn wname(c: &CobraidedHomBialgebra, w: &Word) -> Value {
    Value::String(c.h.pres().render_word(w))
}

struct Cached {
    basis: Vec<Word>,
    polys: Vec<NCPoly>,
    alphas: Vec<NCPoly>,
    deltas: Vec<Tensor>,
}

impl Cached {
    fn new(c: &CobraidedHomBialgebra, degree: usize) -> Result<Cached, CobraidError> {
        let h = &c.h;
        let basis = c.domain_basis(degree)?;
        let polys: Vec<NCPoly> = basis.iter().map(|w| h.word_poly(w)).collect();
        let alphas = polys.iter().map(|p| h.alpha(p)).collect();
        let deltas = polys.iter().map(|p| h.delta(p)).collect();
        Ok(Cached {
            basis,
            polys,
            alphas,
            deltas,
        })
    }
}

fn leg_terms(t: &Tensor) -> Vec<(Word, Word, Scalar)> {
    t.terms()
        .iter()
        .map(|(k, c)| (k[0].clone(), k[1].clone(), c.clone()))
        .collect()
}

/// Axioms (a) `R(xy⊗α(z)) = Σ R(α(x)⊗z_1)R(α(y)⊗z_2)`, (b) `R(α(x)⊗yz) =
/// Σ R(x_1⊗α(z))R(x_2⊗α(y))` and (c) `Σ y_1x_1 R(x_2⊗y_2) = Σ R(x_1⊗y_1) x_2y_2`
/// on basis monomials of the domain up to `degree`.
pub fn verify_cobraided(c: &CobraidedHomBialgebra, degree: usize) -> Result<Report, CobraidError> {
    let h = &*c.h;
    let k = Cached::new(c, degree)?;
    let nb = k.basis.len();
    let dl: Vec<Vec<(Word, Word, Scalar)>> = k.deltas.iter().map(leg_terms).collect();
    let pairs: Vec<(usize, usize)> = (0..nb).flat_map(|i| (0..nb).map(move |j| (i, j))).collect();
    let mus: Vec<NCPoly> = pairs.par_iter().map(|&(i, j)| h.mu(&k.polys[i], &k.polys[j])).collect();
    let mu = |i: usize, j: usize| &mus[i * nb + j];
    let field = h.pres().field();
    let mut rep = Report::new();

    rep.timed(|| {
        let fails: Vec<Value> = (0..nb)
            .into_par_iter()
            .flat_map_iter(|z| {
                let mut out = Vec::new();
                for x in 0..nb {
                    for y in 0..nb {
                        let l = c.eval_unchecked(mu(x, y), &k.alphas[z]);
                        let mut r = field.zero();
                        for (z1, z2, cz) in &dl[z] {
                            let a = c.eval_unchecked(&k.alphas[x], &h.word_poly(z1));
                            if a.is_zero() {
                                continue;
                            }
                            r = r + cz * &(a * c.eval_unchecked(&k.alphas[y], &h.word_poly(z2)));
                        }
                        if l != r {
                            out.push(json!({"x": wname(c, &k.basis[x]), "y": wname(c, &k.basis[y]),
                                "z": wname(c, &k.basis[z]), "lhs": l.to_string(), "rhs": r.to_string()}));
                        }
                    }
                }
                out
            })
            .collect();
        Check::from_failures("cobraid_product_left", Some(degree), nb * nb * nb, fails)
    });

    rep.timed(|| {
        let fails: Vec<Value> = (0..nb)
            .into_par_iter()
            .flat_map_iter(|x| {
                let mut out = Vec::new();
                for y in 0..nb {
                    for z in 0..nb {
                        let l = c.eval_unchecked(&k.alphas[x], mu(y, z));
                        let mut r = field.zero();
                        for (x1, x2, cx) in &dl[x] {
                            let a = c.eval_unchecked(&h.word_poly(x1), &k.alphas[z]);
                            if a.is_zero() {
                                continue;
                            }
                            r = r + cx * &(a * c.eval_unchecked(&h.word_poly(x2), &k.alphas[y]));
                        }
                        if l != r {
                            out.push(json!({"x": wname(c, &k.basis[x]), "y": wname(c, &k.basis[y]),
                                "z": wname(c, &k.basis[z]), "lhs": l.to_string(), "rhs": r.to_string()}));
                        }
                    }
                }
                out
            })
            .collect();
        Check::from_failures("cobraid_product_right", Some(degree), nb * nb * nb, fails)
    });

    rep.timed(|| {
        let fails: Vec<Value> = pairs
            .par_iter()
            .filter_map(|&(x, y)| {
                let mut l = NCPoly::zero();
                let mut r = NCPoly::zero();
                for (x1, x2, cx) in &dl[x] {
                    for (y1, y2, cy) in &dl[y] {
                        let cc = cx * cy;
                        let a = c.eval_words(x2, y2);
                        if !a.is_zero() {
                            l.add_scaled(&h.mu(&h.word_poly(y1), &h.word_poly(x1)), &(&cc * &a));
                        }
                        let b = c.eval_words(x1, y1);
                        if !b.is_zero() {
                            r.add_scaled(&h.mu(&h.word_poly(x2), &h.word_poly(y2)), &(&cc * &b));
                        }
                    }
                }
                (l != r).then(|| {
                    json!({"x": wname(c, &k.basis[x]), "y": wname(c, &k.basis[y]),
                    "lhs": h.render(&l), "rhs": h.render(&r)})
                })
            })
            .collect();
        Check::from_failures("cobraid_quasi_commutativity", Some(degree), pairs.len(), fails)
    });
    Ok(rep)
}

/// The two scalar operator quantum Hom-Yang-Baxter equations on basis triples.
pub fn verify_oqhybe(c: &CobraidedHomBialgebra, degree: usize) -> Result<Report, CobraidError> {
    let h = &*c.h;
    let k = Cached::new(c, degree)?;
    let nb = k.basis.len();
    let dl: Vec<Vec<(Word, Word, Scalar)>> = k.deltas.iter().map(leg_terms).collect();
    let field = h.pres().field();
    let r = |a: &Word, b: &Word| c.eval_words(a, b);
    let ra = |a: &Word, b: &Word| c.eval_unchecked(&h.word_poly(a), &h.alpha_word(b));
    let ar = |a: &Word, b: &Word| c.eval_unchecked(&h.alpha_word(a), &h.word_poly(b));
    let triples: Vec<(usize, usize, usize)> = (0..nb)
        .flat_map(|x| (0..nb).flat_map(move |y| (0..nb).map(move |z| (x, y, z))))
        .collect();
    let mut rep = Report::new();

    rep.timed(|| {
        let fails: Vec<Value> = triples
            .par_iter()
            .filter_map(|&(x, y, z)| {
                let mut l = field.zero();
                let mut rr = field.zero();
                for (x1, x2, cx) in &dl[x] {
                    for (y1, y2, cy) in &dl[y] {
                        let cxy = cx * cy;
                        let l1 = ra(x1, y1);
                        let r3 = ra(x2, y2);
                        for (z1, z2, cz) in &dl[z] {
                            let c3 = &cxy * cz;
                            if !l1.is_zero() {
                                let l2 = ra(x2, z1);
                                if !l2.is_zero() {
                                    l = l + &c3 * &(&l1 * &(l2 * r(y2, z2)));
                                }
                            }
                            if !r3.is_zero() {
                                let r1 = r(y1, z1);
                                if !r1.is_zero() {
                                    rr = rr + &c3 * &(&r3 * &(r1 * ra(x1, z2)));
                                }
                            }
                        }
                    }
                }
                (l != rr).then(|| {
                    json!({"x": wname(c, &k.basis[x]), "y": wname(c, &k.basis[y]),
                    "z": wname(c, &k.basis[z]), "lhs": l.to_string(), "rhs": rr.to_string()})
                })
            })
            .collect();
        Check::from_failures("oqhybe_first", Some(degree), triples.len(), fails)
    });

    rep.timed(|| {
        let fails: Vec<Value> = triples
            .par_iter()
            .filter_map(|&(x, y, z)| {
                let mut l = field.zero();
                let mut rr = field.zero();
                for (x1, x2, cx) in &dl[x] {
                    for (y1, y2, cy) in &dl[y] {
                        let cxy = cx * cy;
                        let l1 = r(x1, y1);
                        let r3 = r(x2, y2);
                        for (z1, z2, cz) in &dl[z] {
                            let c3 = &cxy * cz;
                            if !l1.is_zero() {
                                let l2 = ar(x2, z1);
                                if !l2.is_zero() {
                                    l = l + &c3 * &(&l1 * &(l2 * ar(y2, z2)));
                                }
                            }
                            if !r3.is_zero() {
                                let r1 = ar(y1, z1);
                                if !r1.is_zero() {
                                    rr = rr + &c3 * &(&r3 * &(r1 * ar(x1, z2)));
                                }
                            }
                        }
                    }
                }
                (l != rr).then(|| {
                    json!({"x": wname(c, &k.basis[x]), "y": wname(c, &k.basis[y]),
                    "z": wname(c, &k.basis[z]), "lhs": l.to_string(), "rhs": rr.to_string()})
                })
            })
            .collect();
        Check::from_failures("oqhybe_second", Some(degree), triples.len(), fails)
    });
    Ok(rep)
}

/// `R(α(m)⊗α(n)) = R(m⊗n)` for the instance form on basis pairs.
pub fn check_alpha_invariance(c: &CobraidedHomBialgebra, degree: usize) -> Result<Report, CobraidError> {
    let k = Cached::new(c, degree)?;
    let nb = k.basis.len();
    let pairs: Vec<(usize, usize)> = (0..nb).flat_map(|i| (0..nb).map(move |j| (i, j))).collect();
    let fails: Vec<Value> = pairs
        .par_iter()
        .filter_map(|&(i, j)| {
            let l = c.eval_unchecked(&k.alphas[i], &k.alphas[j]);
            let r = c.eval_words(&k.basis[i], &k.basis[j]);
            (l != r).then(|| {
                json!({"x": wname(c, &k.basis[i]), "y": wname(c, &k.basis[j]),
                "lhs": l.to_string(), "rhs": r.to_string()})
            })
        })
        .collect();
    let mut rep = Report::new();
    rep.push(Check::from_failures(
        "alpha_invariance",
        Some(degree),
        pairs.len(),
        fails,
    ));
    Ok(rep)
}

/// Well-definedness on the quotient: every rule's two sides give the same
/// values against every basis monomial, in both slots.
pub fn check_relation_compatibility(c: &CobraidedHomBialgebra, degree: usize) -> Result<Report, CobraidError> {
    let p = c.h.pres();
    let basis = c.domain_basis(degree)?;
    let one = p.field().one();
    let mut fails = Vec::new();
    let mut cases = 0;
    for rule in p.rules() {
        if !c.form.in_domain(&rule.lhs) {
            continue;
        }
        let lhs_free = NCPoly::term(rule.lhs.clone(), one.clone());
        for z in &basis {
            cases += 2;
            let zp = NCPoly::term(z.clone(), one.clone());
            let a = free_eval(c, &lhs_free, &zp, true);
            let b = c.eval_base(&rule.rhs, &zp);
            if a != b {
                fails.push(
                    json!({"rule": p.render_word(&rule.lhs), "z": p.render_word(z), "slot": "left",
                    "lhs": a.to_string(), "rhs": b.to_string()}),
                );
            }
            let a = free_eval(c, &lhs_free, &zp, false);
            let b = c.eval_base(&zp, &rule.rhs);
            if a != b {
                fails.push(
                    json!({"rule": p.render_word(&rule.lhs), "z": p.render_word(z), "slot": "right",
                    "lhs": a.to_string(), "rhs": b.to_string()}),
                );
            }
        }
    }
    let mut rep = Report::new();
    rep.push(Check::from_failures(
        "relation_compatibility",
        Some(degree),
        cases,
        fails,
    ));
    Ok(rep)
}

/// Evaluates R with one argument a free (possibly non-normal) word, splitting
/// it into generators via the recursion so that no rewriting is applied.
fn free_eval(c: &CobraidedHomBialgebra, free: &NCPoly, other: &NCPoly, left: bool) -> Scalar {
    let field = c.h.pres().field();
    let mut acc = field.zero();
    for (w, a) in free.terms() {
        for (n, b) in other.terms() {
            let v = if left { free_left(c, w, n) } else { free_right(c, n, w) };
            acc = acc + &(a * b) * &v;
        }
    }
    acc
}

fn free_left(c: &CobraidedHomBialgebra, m: &Word, n: &Word) -> Scalar {
    if m.len() <= 1 {
        return c.eval_base_words(m, n);
    }
    let g = word(&m[..1]);
    let rest = word(&m[1..]);
    let mut acc = c.h.pres().field().zero();
    for (legs, k) in c.base.base_delta_word(n).terms() {
        let a = c.eval_base_words(&g, &legs[0]);
        if !a.is_zero() {
            acc = acc + k * &(a * free_left(c, &rest, &legs[1]));
        }
    }
    acc
}

fn free_right(c: &CobraidedHomBialgebra, m: &Word, n: &Word) -> Scalar {
    if n.len() <= 1 {
        return c.eval_base_words(m, n);
    }
    let y = word(&n[..1]);
    let z = word(&n[1..]);
    let mut acc = c.h.pres().field().zero();
    if m.is_empty() {
        return free_right(c, m, &z) * c.eval_base_words(m, &y);
    }
    if m.len() == 1 {
        for (legs, k) in c.base.base_delta_word(m).terms() {
            let a = free_right(c, &legs[0], &z);
            if !a.is_zero() {
                acc = acc + k * &(a * c.eval_base_words(&legs[1], &y));
            }
        }
        return acc;
    }
    let g = word(&m[..1]);
    let rest = word(&m[1..]);
    let t = free_delta(c, n);
    for (legs, k) in t.terms() {
        let a = free_right(c, &g, &legs[0]);
        if !a.is_zero() {
            acc = acc + k * &(a * free_right(c, &rest, &legs[1]));
        }
    }
    acc
}

/// Coproduct of a free word computed leg-wise without rewriting.
fn free_delta(c: &CobraidedHomBialgebra, n: &Word) -> Tensor {
    let one = c.h.pres().field().one();
    let mut acc = Tensor::zero();
    acc.add_term(vec![Word::new(), Word::new()], one);
    for &g in n.iter() {
        let d = &c.base.delta_table()[g as usize];
        let mut next = Tensor::zero();
        for (ka, ca) in acc.terms() {
            for (kb, cb) in d.terms() {
                let l0 = crate::ncpoly::concat(&ka[0], &kb[0]);
                let l1 = crate::ncpoly::concat(&ka[1], &kb[1]);
                next.add_term(vec![l0, l1], ca * cb);
            }
        }
        acc = next;
    }
    acc
}

/// Evaluating `R(g·m′ ⊗ n′·h)` by splitting the left slot first and by
/// splitting the right slot first gives the same value.
pub fn check_recursion_coherence(c: &CobraidedHomBialgebra, degree: usize) -> Result<Report, CobraidError> {
    let basis = c.domain_basis(degree)?;
    let mut fails = Vec::new();
    let mut cases = 0;
    for m in basis.iter().filter(|w| w.len() >= 2) {
        for n in basis.iter().filter(|w| w.len() >= 2) {
            cases += 1;
            let a = c.eval_base_words(m, n);
            let b = right_first(c, m, n);
            if a != b {
                fails.push(json!({"m": wname(c, m), "n": wname(c, n), "left_first": a.to_string(),
                    "right_first": b.to_string()}));
            }
        }
    }
    let mut rep = Report::new();
    rep.push(Check::from_failures("recursion_coherence", Some(degree), cases, fails));
    Ok(rep)
}

/// `R(m⊗yz) = Σ R(m_1⊗z)R(m_2⊗y)` applied to a composite left argument.
fn right_first(c: &CobraidedHomBialgebra, m: &Word, n: &Word) -> Scalar {
    let y = word(&n[..1]);
    let z = word(&n[1..]);
    let mut acc = c.h.pres().field().zero();
    for (legs, k) in c.base.base_delta_word(m).terms() {
        let a = c.eval_base_words(&legs[0], &z);
        if !a.is_zero() {
            acc = acc + k * &(a * c.eval_base_words(&legs[1], &y));
        }
    }
    acc
}

#[cfg(test)]
mod tests;
