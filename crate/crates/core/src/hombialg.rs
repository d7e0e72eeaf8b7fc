//! Hom-bialgebras on presented algebras and their axiom suite.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use rayon::prelude::*;
use serde_json::{json, Value};
use thiserror::Error;

use crate::ncpoly::{NCPoly, Presentation, PresentationError, Tensor, Word};
use crate::report::{Check, Report};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HomError {
    #[error("table has {got} entries for {want} generators")]
    TableSize { got: usize, want: usize },
    #[error("twisting requires an untwisted base")]
    AlreadyTwisted,
    #[error("not a bialgebra morphism: {0}")]
    NotMorphism(String),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}

/// Product in a tensor power whose legs live in the given presentations.
pub fn tensor_mul(legs: &[&Presentation], a: &Tensor, b: &Tensor) -> Tensor {
    let mut out = Tensor::zero();
    for (ka, ca) in a.terms() {
        for (kb, cb) in b.terms() {
            let mut acc = Tensor::zero();
            acc.add_term(Vec::new(), ca * cb);
            for (i, p) in legs.iter().enumerate() {
                acc = acc.tensor_poly(&p.multiply_words(&ka[i], &kb[i]));
                if acc.is_zero() {
                    break;
                }
            }
            for (k, c) in acc.terms() {
                out.add_term(k.clone(), c.clone());
            }
        }
    }
    out
}

/// Renders a tensor as `c*(u ⊗ v) + ...` with legs rendered by `legs[i]`.
pub fn render_tensor(legs: &[&Presentation], t: &Tensor) -> String {
    if t.is_zero() {
        return "0".into();
    }
    t.terms()
        .iter()
        .map(|(k, c)| {
            let body: Vec<String> = k.iter().enumerate().map(|(i, w)| legs[i].render_word(w)).collect();
            let cs = c.to_string();
            if c.is_one() {
                body.join(" ⊗ ")
            } else if cs.contains(' ') {
                format!("({cs})*({})", body.join(" ⊗ "))
            } else {
                format!("{cs}*({})", body.join(" ⊗ "))
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// A presented algebra with a multiplicative coproduct table and a twisting
/// table. When twisted the structure maps are `μ_α = α∘μ` and `Δ_α = Δ∘α`.
pub struct HomBialgebra {
    pres: Arc<Presentation>,
    delta_table: Vec<Tensor>,
    alpha_table: Vec<NCPoly>,
    mu_twisted: bool,
    delta_twisted: bool,
    delta_cache: RwLock<HashMap<Word, Tensor>>,
    alpha_cache: RwLock<HashMap<Word, NCPoly>>,
}

impl std::fmt::Debug for HomBialgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("HomBialgebra")
            .field("pres", &self.pres)
            .field("twisted", &self.is_twisted())
            .finish()
    }
}

impl HomBialgebra {
    /// The untwisted bialgebra (α = Id) with the given coproduct on generators.
    pub fn new(pres: Arc<Presentation>, delta_table: Vec<Tensor>) -> Result<HomBialgebra, HomError> {
        let n = pres.generators().len();
        if delta_table.len() != n {
            return Err(HomError::TableSize {
                got: delta_table.len(),
                want: n,
            });
        }
        let alpha_table = (0..n)
            .map(|g| NCPoly::term(crate::ncpoly::word(&[g as u8]), pres.field().one()))
            .collect();
        Ok(Self::assemble(pres, delta_table, alpha_table, false, false))
    }

    fn assemble(
        pres: Arc<Presentation>,
        delta_table: Vec<Tensor>,
        alpha_table: Vec<NCPoly>,
        mu_twisted: bool,
        delta_twisted: bool,
    ) -> HomBialgebra {
        HomBialgebra {
            pres,
            delta_table,
            alpha_table,
            mu_twisted,
            delta_twisted,
            delta_cache: RwLock::new(HashMap::new()),
            alpha_cache: RwLock::new(HashMap::new()),
        }
    }

    /// Builds the Hom-bialgebra `A_α` after certifying that `alpha_table`
    /// defines a bialgebra endomorphism.
    pub fn twist(&self, alpha_table: Vec<NCPoly>) -> Result<HomBialgebra, HomError> {
        if self.is_twisted() {
            return Err(HomError::AlreadyTwisted);
        }
        let rep = verify_morphism(&alpha_table, self)?;
        if let Some(f) = rep.failures().next() {
            return Err(HomError::NotMorphism(
                f.witness.as_ref().map(|w| w.to_string()).unwrap_or_default(),
            ));
        }
        Ok(self.twist_unchecked(alpha_table, true, true))
    }

    /// Installs a twisting table without any check, choosing which structure
    /// maps get composed with it.
    pub fn twist_unchecked(&self, alpha_table: Vec<NCPoly>, mu: bool, delta: bool) -> HomBialgebra {
        Self::assemble(self.pres.clone(), self.delta_table.clone(), alpha_table, mu, delta)
    }

    pub fn pres(&self) -> &Arc<Presentation> {
        &self.pres
    }

    pub fn is_twisted(&self) -> bool {
        self.mu_twisted || self.delta_twisted
    }

    pub fn delta_table(&self) -> &[Tensor] {
        &self.delta_table
    }

    pub fn alpha_table(&self) -> &[NCPoly] {
        &self.alpha_table
    }

    /// The underlying untwisted bialgebra.
    pub fn base(&self) -> HomBialgebra {
        HomBialgebra::new(self.pres.clone(), self.delta_table.clone()).expect("sizes match")
    }

    pub fn multiply(&self, a: &NCPoly, b: &NCPoly) -> NCPoly {
        self.pres.multiply(a, b)
    }

    /// The instance multiplication.
    pub fn mu(&self, a: &NCPoly, b: &NCPoly) -> NCPoly {
        let p = self.pres.multiply(a, b);
        if self.mu_twisted {
            self.alpha(&p)
        } else {
            p
        }
    }

    pub fn alpha_word(&self, w: &Word) -> NCPoly {
        if w.is_empty() {
            return self.pres.one();
        }
        if let Some(hit) = self.alpha_cache.read().unwrap().get(w) {
            return hit.clone();
        }
        let prefix = crate::ncpoly::word(&w[..w.len() - 1]);
        let last = w[w.len() - 1] as usize;
        let res = self.pres.multiply(&self.alpha_word(&prefix), &self.alpha_table[last]);
        self.alpha_cache.write().unwrap().insert(w.clone(), res.clone());
        res
    }

    /// The twisting map, extended multiplicatively from its table.
    pub fn alpha(&self, p: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in p.terms() {
            out.add_scaled(&self.alpha_word(w), c);
        }
        out
    }

    pub fn alpha_pow(&self, p: &NCPoly, n: u32) -> NCPoly {
        (0..n).fold(p.clone(), |acc, _| self.alpha(&acc))
    }

    /// Untwisted coproduct of a normal word.
    pub fn base_delta_word(&self, w: &Word) -> Tensor {
        if w.is_empty() {
            let mut t = Tensor::zero();
            t.add_term(vec![Word::new(), Word::new()], self.pres.field().one());
            return t;
        }
        if let Some(hit) = self.delta_cache.read().unwrap().get(w) {
            return hit.clone();
        }
        let prefix = crate::ncpoly::word(&w[..w.len() - 1]);
        let last = w[w.len() - 1] as usize;
        let p = &*self.pres;
        let res = tensor_mul(&[p, p], &self.base_delta_word(&prefix), &self.delta_table[last]);
        self.delta_cache.write().unwrap().insert(w.clone(), res.clone());
        res
    }

    pub fn base_delta(&self, p: &NCPoly) -> Tensor {
        let mut out = Tensor::zero();
        for (w, c) in p.terms() {
            out.add_scaled(&self.base_delta_word(w), c);
        }
        out
    }

    /// The instance coproduct.
    pub fn delta(&self, p: &NCPoly) -> Tensor {
        if self.delta_twisted {
            self.base_delta(&self.alpha(p))
        } else {
            self.base_delta(p)
        }
    }

    /// Applies α to every leg.
    pub fn alpha_tensor(&self, t: &Tensor) -> Tensor {
        let f = |w: &Word| self.alpha_word(w);
        let maps: Vec<&dyn Fn(&Word) -> NCPoly> = (0..arity(t)).map(|_| &f as &dyn Fn(&Word) -> NCPoly).collect();
        t.map_legs(&maps)
    }

    pub fn word_poly(&self, w: &Word) -> NCPoly {
        NCPoly::term(w.clone(), self.pres.field().one())
    }

    pub fn render(&self, p: &NCPoly) -> String {
        self.pres.render_poly(p)
    }

    pub fn render_tensor(&self, t: &Tensor) -> String {
        let p = &*self.pres;
        render_tensor(&[p, p, p, p], t)
    }

    pub fn is_group_like(&self, g: &NCPoly) -> bool {
        self.delta(g) == Tensor::pair(g, g)
    }
}

pub(crate) fn arity(t: &Tensor) -> usize {
    t.terms().keys().next().map(|k| k.len()).unwrap_or(0)
}

/// Checks that `endo` (a table on generators) preserves every relation and
/// commutes with the untwisted coproduct on generators.
pub fn verify_morphism(endo: &[NCPoly], h: &HomBialgebra) -> Result<Report, HomError> {
    let pres = h.pres();
    let n = pres.generators().len();
    if endo.len() != n {
        return Err(HomError::TableSize {
            got: endo.len(),
            want: n,
        });
    }
    let probe = h.twist_unchecked(endo.to_vec(), false, false);
    let base = h.base();
    let mut rel_fail = Vec::new();
    for r in pres.rules() {
        let lhs = probe.alpha_word(&r.lhs);
        let rhs = probe.alpha(&r.rhs);
        if lhs != rhs {
            rel_fail.push(json!({
                "relation": format!("{} = {}", pres.render_word(&r.lhs), pres.render_poly(&r.rhs)),
                "lhs_image": pres.render_poly(&lhs),
                "rhs_image": pres.render_poly(&rhs),
            }));
        }
    }
    let mut co_fail = Vec::new();
    for g in 0..n {
        let w = crate::ncpoly::word(&[g as u8]);
        let a = base.base_delta(&probe.alpha_word(&w));
        let b = probe.alpha_tensor(&base.base_delta_word(&w));
        if a != b {
            co_fail.push(json!({
                "generator": pres.generators()[g],
                "delta_alpha": probe.render_tensor(&a),
                "alpha_delta": probe.render_tensor(&b),
            }));
        }
    }
    let mut rep = Report::new();
    rep.push(Check::from_failures(
        "morphism_relations",
        None,
        pres.rules().len(),
        rel_fail,
    ));
    rep.push(Check::from_failures("morphism_coproduct", None, n, co_fail));
    Ok(rep)
}

fn wname(h: &HomBialgebra, w: &Word) -> Value {
    Value::String(h.pres().render_word(w))
}

/// Definition-level axioms on all basis monomials of degree at most `degree`,
/// with the instance's own μ, Δ and α.
pub fn verify_hom_bialgebra(h: &HomBialgebra, degree: usize) -> Result<Report, HomError> {
    let pres = h.pres();
    let basis = pres.graded_basis(Some(degree))?;
    let polys: Vec<NCPoly> = basis.iter().map(|w| h.word_poly(w)).collect();
    let alphas: Vec<NCPoly> = polys.iter().map(|p| h.alpha(p)).collect();
    let deltas: Vec<Tensor> = polys.iter().map(|p| h.delta(p)).collect();
    let nb = basis.len();
    let pairs: Vec<(usize, usize)> = (0..nb).flat_map(|i| (0..nb).map(move |j| (i, j))).collect();
    let mus: Vec<NCPoly> = pairs.par_iter().map(|&(i, j)| h.mu(&polys[i], &polys[j])).collect();
    let mu = |i: usize, j: usize| &mus[i * nb + j];
    let mut rep = Report::new();

    rep.timed(|| {
        let fails: Vec<Value> = pairs
            .par_iter()
            .filter_map(|&(i, j)| {
                let l = h.alpha(mu(i, j));
                let r = h.mu(&alphas[i], &alphas[j]);
                (l != r).then(|| {
                    json!({"x": wname(h, &basis[i]), "y": wname(h, &basis[j]),
                    "lhs": h.render(&l), "rhs": h.render(&r)})
                })
            })
            .collect();
        Check::from_failures("multiplicativity", Some(degree), pairs.len(), fails)
    });

    rep.timed(|| {
        let fails: Vec<Value> = (0..nb)
            .into_par_iter()
            .flat_map_iter(|i| {
                let mut out = Vec::new();
                for j in 0..nb {
                    for k in 0..nb {
                        let l = h.mu(&alphas[i], mu(j, k));
                        let r = h.mu(mu(i, j), &alphas[k]);
                        if l != r {
                            out.push(json!({"x": wname(h, &basis[i]), "y": wname(h, &basis[j]),
                                "z": wname(h, &basis[k]), "lhs": h.render(&l), "rhs": h.render(&r)}));
                        }
                    }
                }
                out
            })
            .collect();
        Check::from_failures("hom_associativity", Some(degree), nb * nb * nb, fails)
    });

    rep.timed(|| {
        let fails: Vec<Value> = (0..nb)
            .into_par_iter()
            .filter_map(|i| {
                let l = h.delta(&alphas[i]);
                let r = h.alpha_tensor(&deltas[i]);
                (l != r).then(|| {
                    json!({"x": wname(h, &basis[i]),
                    "lhs": h.render_tensor(&l), "rhs": h.render_tensor(&r)})
                })
            })
            .collect();
        Check::from_failures("comultiplicativity", Some(degree), nb, fails)
    });

    rep.timed(|| {
        let fails: Vec<Value> = (0..nb)
            .into_par_iter()
            .filter_map(|i| {
                let d = &deltas[i];
                let l = d.expand_leg(1, &|w| h.delta(&h.word_poly(w)));
                let l = l.map_legs(&[&|w| h.alpha_word(w), &|w| h.word_poly(w), &|w| h.word_poly(w)]);
                let r = d.expand_leg(0, &|w| h.delta(&h.word_poly(w)));
                let r = r.map_legs(&[&|w| h.word_poly(w), &|w| h.word_poly(w), &|w| h.alpha_word(w)]);
                (l != r).then(|| {
                    json!({"x": wname(h, &basis[i]),
                    "lhs": h.render_tensor(&l), "rhs": h.render_tensor(&r)})
                })
            })
            .collect();
        Check::from_failures("hom_coassociativity", Some(degree), nb, fails)
    });

    rep.timed(|| {
        let fails: Vec<Value> = pairs
            .par_iter()
            .filter_map(|&(i, j)| {
                let l = h.delta(mu(i, j));
                let r = mu_tensor(h, &deltas[i], &deltas[j]);
                (l != r).then(|| {
                    json!({"x": wname(h, &basis[i]), "y": wname(h, &basis[j]),
                    "lhs": h.render_tensor(&l), "rhs": h.render_tensor(&r)})
                })
            })
            .collect();
        Check::from_failures("compatibility", Some(degree), pairs.len(), fails)
    });
    Ok(rep)
}

/// `Σ μ(x_1, y_1) ⊗ μ(x_2, y_2)` with the instance product on each leg.
pub fn mu_tensor(h: &HomBialgebra, a: &Tensor, b: &Tensor) -> Tensor {
    let mut out = Tensor::zero();
    for (ka, ca) in a.terms() {
        for (kb, cb) in b.terms() {
            let c = ca * cb;
            let mut acc = Tensor::zero();
            acc.add_term(Vec::new(), c);
            for i in 0..ka.len() {
                let m = h.mu(&h.word_poly(&ka[i]), &h.word_poly(&kb[i]));
                acc = acc.tensor_poly(&m);
                if acc.is_zero() {
                    break;
                }
            }
            for (k, v) in acc.terms() {
                out.add_term(k.clone(), v.clone());
            }
        }
    }
    out
}
