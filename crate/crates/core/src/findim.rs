//! Finite-dimensional Hom-bialgebras as structure-constant tensors, the
//! braided axioms and linear duality.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::cobraid::{CobraidError, CobraidedHomBialgebra};
use crate::frt::FieldJson;
use crate::hombialg::HomBialgebra;
use crate::linalg::Matrix;
use crate::ncpoly::{NCPoly, PresentationError, Tensor, Word};
use crate::report::{Check, Report};
use crate::scalars::{Scalar, ScalarError, ScalarField};

pub type Sparse<K> = BTreeMap<K, Scalar>;
type V1 = Sparse<usize>;
type V2 = Sparse<(usize, usize)>;
type V3 = Sparse<(usize, usize, usize)>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FinDimError {
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Cobraid(#[from] CobraidError),
    #[error("`{0}` is not a normal basis monomial")]
    OutsideBasis(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("expected an R datum of kind {0:?}")]
    Kind(RKind),
    #[error("malformed dump: {0}")]
    Json(String),
}

fn put<K: Ord>(m: &mut Sparse<K>, k: K, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match m.entry(k) {
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

/// Whether R is an element of `A⊗A` or a bilinear form on `A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RKind {
    Element,
    Form,
}

/// Structure constants over a labelled basis `e_0..e_{d-1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct FinDimHomBialgebra {
    field: ScalarField,
    labels: Vec<String>,
    /// `mu[i*d + j] = e_i e_j`
    mu: Vec<V1>,
    /// `delta[i] = Δ(e_i)`
    delta: Vec<V2>,
    /// `alpha[i] = α(e_i)`
    alpha: Vec<V1>,
    r_kind: RKind,
    /// Coefficient of `e_i⊗e_j` (element) or the value `R(e_i⊗e_j)` (form).
    r: V2,
}

impl FinDimHomBialgebra {
    pub fn new(
        field: ScalarField,
        labels: Vec<String>,
        mu: Vec<Sparse<usize>>,
        delta: Vec<Sparse<(usize, usize)>>,
        alpha: Vec<Sparse<usize>>,
        r_kind: RKind,
        r: Sparse<(usize, usize)>,
    ) -> Result<Self, FinDimError> {
        let d = labels.len();
        if mu.len() != d * d || delta.len() != d || alpha.len() != d {
            return Err(FinDimError::Shape(format!(
                "dim {d}: mu {}, delta {}, alpha {}",
                mu.len(),
                delta.len(),
                alpha.len()
            )));
        }
        let bad1 = |v: &V1| v.keys().any(|&k| k >= d);
        let bad2 = |v: &V2| v.keys().any(|&(a, b)| a >= d || b >= d);
        if mu.iter().any(bad1) || alpha.iter().any(bad1) || delta.iter().any(bad2) || bad2(&r) {
            return Err(FinDimError::Shape("index out of range".into()));
        }
        Ok(FinDimHomBialgebra {
            field,
            labels,
            mu,
            delta,
            alpha,
            r_kind,
            r,
        })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn field(&self) -> &ScalarField {
        &self.field
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn r_kind(&self) -> RKind {
        self.r_kind
    }

    pub fn r_entries(&self) -> &Sparse<(usize, usize)> {
        &self.r
    }

    /// The R datum as a `d×d` matrix.
    pub fn r_matrix(&self) -> Matrix {
        let d = self.dim();
        let mut m = Matrix::zeros(&self.field, d, d);
        for (&(i, j), c) in &self.r {
            m.set(i, j, c.clone());
        }
        m
    }

    /// α as a matrix acting on coordinate columns.
    pub fn alpha_matrix(&self) -> Matrix {
        let d = self.dim();
        let mut m = Matrix::zeros(&self.field, d, d);
        for (i, col) in self.alpha.iter().enumerate() {
            for (&k, c) in col {
                m.set(k, i, c.clone());
            }
        }
        m
    }

    /// Same structure maps with a different R datum.
    pub fn with_r(&self, kind: RKind, r: Sparse<(usize, usize)>) -> Self {
        FinDimHomBialgebra {
            r_kind: kind,
            r,
            ..self.clone()
        }
    }

    pub fn index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn basis(&self, i: usize) -> Sparse<usize> {
        BTreeMap::from([(i, self.field.one())])
    }

    pub fn mul(&self, x: &V1, y: &V1) -> V1 {
        let d = self.dim();
        let mut out = V1::new();
        for (&i, a) in x {
            for (&j, b) in y {
                let ab = a * b;
                for (&k, c) in &self.mu[i * d + j] {
                    put(&mut out, k, &ab * c);
                }
            }
        }
        out
    }

    pub fn apply_alpha(&self, x: &V1) -> V1 {
        let mut out = V1::new();
        for (&i, a) in x {
            for (&k, c) in &self.alpha[i] {
                put(&mut out, k, a * c);
            }
        }
        out
    }

    pub fn coproduct(&self, x: &V1) -> V2 {
        let mut out = V2::new();
        for (&i, a) in x {
            for (&k, c) in &self.delta[i] {
                put(&mut out, k, a * c);
            }
        }
        out
    }

    fn alpha2(&self, t: &V2) -> V2 {
        let mut out = V2::new();
        for (&(i, j), c) in t {
            for (&k, a) in &self.alpha[i] {
                for (&l, b) in &self.alpha[j] {
                    put(&mut out, (k, l), &(c * a) * b);
                }
            }
        }
        out
    }

    /// Legwise product of two 2-tensors.
    fn mul2(&self, x: &V2, y: &V2) -> V2 {
        let d = self.dim();
        let mut out = V2::new();
        for (&(a, b), c) in x {
            for (&(e, f), g) in y {
                let cg = c * g;
                for (&k, u) in &self.mu[a * d + e] {
                    let cu = &cg * u;
                    for (&l, v) in &self.mu[b * d + f] {
                        put(&mut out, (k, l), &cu * v);
                    }
                }
            }
        }
        out
    }

    fn form(&self, x: &V1, y: &V1) -> Scalar {
        let mut s = self.field.zero();
        for (&i, a) in x {
            for (&j, b) in y {
                if let Some(r) = self.r.get(&(i, j)) {
                    s = s + &(a * b) * r;
                }
            }
        }
        s
    }

    fn render1(&self, v: &V1) -> String {
        render_terms(v.iter().map(|(&i, c)| (self.labels[i].clone(), c)))
    }

    fn render2(&self, v: &V2) -> String {
        render_terms(
            v.iter()
                .map(|(&(i, j), c)| (format!("{} ⊗ {}", self.labels[i], self.labels[j]), c)),
        )
    }

    fn render3(&self, v: &V3) -> String {
        render_terms(v.iter().map(|(&(i, j, k), c)| {
            (
                format!("{} ⊗ {} ⊗ {}", self.labels[i], self.labels[j], self.labels[k]),
                c,
            )
        }))
    }

    /// The Hom-bialgebra axioms on all basis tuples.
    pub fn verify_hom_bialgebra(&self) -> Report {
        let d = self.dim();
        let al = &self.alpha;
        let pairs: Vec<(usize, usize)> = (0..d).flat_map(|i| (0..d).map(move |j| (i, j))).collect();
        let lab = |i: usize| Value::String(self.labels[i].clone());
        let mut rep = Report::new();

        rep.timed(|| {
            let fails: Vec<Value> = pairs
                .par_iter()
                .filter_map(|&(i, j)| {
                    let l = self.apply_alpha(&self.mu[i * d + j]);
                    let r = self.mul(&al[i], &al[j]);
                    (l != r)
                        .then(|| json!({"x": lab(i), "y": lab(j), "lhs": self.render1(&l), "rhs": self.render1(&r)}))
                })
                .collect();
            Check::from_failures("multiplicativity", None, pairs.len(), fails)
        });

        rep.timed(|| {
            let fails: Vec<Value> = pairs
                .par_iter()
                .flat_map_iter(|&(i, j)| {
                    let mut out = Vec::new();
                    for k in 0..d {
                        let l = self.mul(&al[i], &self.mu[j * d + k]);
                        let r = self.mul(&self.mu[i * d + j], &al[k]);
                        if l != r {
                            out.push(json!({"x": lab(i), "y": lab(j), "z": lab(k),
                                "lhs": self.render1(&l), "rhs": self.render1(&r)}));
                        }
                    }
                    out
                })
                .collect();
            Check::from_failures("hom_associativity", None, d * d * d, fails)
        });

        rep.timed(|| {
            let fails: Vec<Value> = (0..d)
                .into_par_iter()
                .filter_map(|i| {
                    let l = self.coproduct(&al[i]);
                    let r = self.alpha2(&self.delta[i]);
                    (l != r).then(|| json!({"x": lab(i), "lhs": self.render2(&l), "rhs": self.render2(&r)}))
                })
                .collect();
            Check::from_failures("comultiplicativity", None, d, fails)
        });

        rep.timed(|| {
            let fails: Vec<Value> = (0..d)
                .into_par_iter()
                .filter_map(|i| {
                    let mut l = V3::new();
                    let mut r = V3::new();
                    for (&(a, b), c) in &self.delta[i] {
                        for (&(u, v), x) in &self.delta[b] {
                            for (&k, y) in &self.alpha[a] {
                                put(&mut l, (k, u, v), &(c * x) * y);
                            }
                        }
                        for (&(u, v), x) in &self.delta[a] {
                            for (&k, y) in &self.alpha[b] {
                                put(&mut r, (u, v, k), &(c * x) * y);
                            }
                        }
                    }
                    (l != r).then(|| json!({"x": lab(i), "lhs": self.render3(&l), "rhs": self.render3(&r)}))
                })
                .collect();
            Check::from_failures("hom_coassociativity", None, d, fails)
        });

        rep.timed(|| {
            let fails: Vec<Value> = pairs
                .par_iter()
                .filter_map(|&(i, j)| {
                    let l = self.coproduct(&self.mu[i * d + j]);
                    let r = self.mul2(&self.delta[i], &self.delta[j]);
                    (l != r)
                        .then(|| json!({"x": lab(i), "y": lab(j), "lhs": self.render2(&l), "rhs": self.render2(&r)}))
                })
                .collect();
            Check::from_failures("compatibility", None, pairs.len(), fails)
        });
        rep
    }

    /// The braided axioms for an element datum `R = Σ r_ab e_a⊗e_b`.
    pub fn verify_braided(&self) -> Result<Report, FinDimError> {
        if self.r_kind != RKind::Element {
            return Err(FinDimError::Kind(RKind::Element));
        }
        let d = self.dim();
        let r: Vec<((usize, usize), Scalar)> = self.r.iter().map(|(k, c)| (*k, c.clone())).collect();
        let mut rep = Report::new();

        rep.timed(|| {
            let mut lhs = V3::new();
            for &((a, b), ref c) in &r {
                for (&(u, v), x) in &self.delta[a] {
                    for (&k, y) in &self.alpha[b] {
                        put(&mut lhs, (u, v, k), &(c * x) * y);
                    }
                }
            }
            let rhs = self.r_cubed(&r, |this, (a, b), (c, e)| {
                (this.alpha[a].clone(), this.alpha[c].clone(), this.mu[b * d + e].clone())
            });
            let fails = diff3(self, &lhs, &rhs);
            Check::from_failures("braided_coproduct_left", None, 1, fails)
        });

        rep.timed(|| {
            let mut lhs = V3::new();
            for &((a, b), ref c) in &r {
                for (&k, y) in &self.alpha[a] {
                    for (&(u, v), x) in &self.delta[b] {
                        put(&mut lhs, (k, u, v), &(c * x) * y);
                    }
                }
            }
            let rhs = self.r_cubed(&r, |this, (a, b), (c, e)| {
                (this.mu[a * d + c].clone(), this.alpha[e].clone(), this.alpha[b].clone())
            });
            let fails = diff3(self, &lhs, &rhs);
            Check::from_failures("braided_coproduct_right", None, 1, fails)
        });

        rep.timed(|| {
            let rv: V2 = self.r.clone();
            let fails: Vec<Value> = (0..d)
                .into_par_iter()
                .filter_map(|i| {
                    let flipped: V2 = self.delta[i].iter().map(|(&(a, b), c)| ((b, a), c.clone())).collect();
                    let l = self.mul2(&flipped, &rv);
                    let r = self.mul2(&rv, &self.delta[i]);
                    (l != r).then(|| json!({"x": self.labels[i], "lhs": self.render2(&l), "rhs": self.render2(&r)}))
                })
                .collect();
            Check::from_failures("braided_quasi_commutativity", None, d, fails)
        });
        Ok(rep)
    }

    /// `Σ_{(a,b),(c,e)} r_ab r_ce f(a,b,c,e)` where `f` returns three leg vectors.
    fn r_cubed<F>(&self, r: &[((usize, usize), Scalar)], f: F) -> V3
    where
        F: Fn(&Self, (usize, usize), (usize, usize)) -> (V1, V1, V1) + Sync,
    {
        let parts: Vec<V3> = r
            .par_iter()
            .map(|(p, c1)| {
                let mut out = V3::new();
                for (q, c2) in r {
                    let (x, y, z) = f(self, *p, *q);
                    let c = c1 * c2;
                    for (&i, a) in &x {
                        let ca = &c * a;
                        for (&j, b) in &y {
                            let cab = &ca * b;
                            for (&k, e) in &z {
                                put(&mut out, (i, j, k), &cab * e);
                            }
                        }
                    }
                }
                out
            })
            .collect();
        let mut out = V3::new();
        for p in parts {
            for (k, c) in p {
                put(&mut out, k, c);
            }
        }
        out
    }

    /// The cobraided axioms for a form datum, on all basis triples.
    pub fn verify_cobraided(&self) -> Result<Report, FinDimError> {
        if self.r_kind != RKind::Form {
            return Err(FinDimError::Kind(RKind::Form));
        }
        let d = self.dim();
        let e: Vec<V1> = (0..d).map(|i| self.basis(i)).collect();
        let lab = |i: usize| Value::String(self.labels[i].clone());
        let pairs: Vec<(usize, usize)> = (0..d).flat_map(|i| (0..d).map(move |j| (i, j))).collect();
        let mut rep = Report::new();

        rep.timed(|| {
            let fails: Vec<Value> = pairs
                .par_iter()
                .flat_map_iter(|&(i, j)| {
                    let xy = &self.mu[i * d + j];
                    let mut out = Vec::new();
                    for k in 0..d {
                        let l = self.form(xy, &self.alpha[k]);
                        let mut r = self.field.zero();
                        for (&(u, v), c) in &self.delta[k] {
                            r = r + &(c * &self.form(&self.alpha[i], &e[u])) * &self.form(&self.alpha[j], &e[v]);
                        }
                        if l != r {
                            out.push(json!({"x": lab(i), "y": lab(j), "z": lab(k),
                                "lhs": l.to_string(), "rhs": r.to_string()}));
                        }
                    }
                    out
                })
                .collect();
            Check::from_failures("cobraid_product_left", None, d * d * d, fails)
        });

        rep.timed(|| {
            let fails: Vec<Value> = pairs
                .par_iter()
                .flat_map_iter(|&(j, k)| {
                    let yz = &self.mu[j * d + k];
                    let mut out = Vec::new();
                    for i in 0..d {
                        let l = self.form(&self.alpha[i], yz);
                        let mut r = self.field.zero();
                        for (&(u, v), c) in &self.delta[i] {
                            r = r + &(c * &self.form(&e[u], &self.alpha[k])) * &self.form(&e[v], &self.alpha[j]);
                        }
                        if l != r {
                            out.push(json!({"x": lab(i), "y": lab(j), "z": lab(k),
                                "lhs": l.to_string(), "rhs": r.to_string()}));
                        }
                    }
                    out
                })
                .collect();
            Check::from_failures("cobraid_product_right", None, d * d * d, fails)
        });

        rep.timed(|| {
            let fails: Vec<Value> = pairs
                .par_iter()
                .filter_map(|&(i, j)| {
                    let mut l = V1::new();
                    let mut r = V1::new();
                    for (&(x1, x2), a) in &self.delta[i] {
                        for (&(y1, y2), b) in &self.delta[j] {
                            let ab = a * b;
                            let rl = self.r.get(&(x2, y2));
                            if let Some(rv) = rl {
                                for (&k, c) in &self.mu[y1 * d + x1] {
                                    put(&mut l, k, &(&ab * rv) * c);
                                }
                            }
                            if let Some(rv) = self.r.get(&(x1, y1)) {
                                for (&k, c) in &self.mu[x2 * d + y2] {
                                    put(&mut r, k, &(&ab * rv) * c);
                                }
                            }
                        }
                    }
                    (l != r)
                        .then(|| json!({"x": lab(i), "y": lab(j), "lhs": self.render1(&l), "rhs": self.render1(&r)}))
                })
                .collect();
            Check::from_failures("cobraid_quasi_commutativity", None, pairs.len(), fails)
        });
        Ok(rep)
    }

    /// `α^{⊗2}(R) = R` for elements, `R∘α^{⊗2} = R` for forms.
    pub fn check_alpha_invariance(&self) -> Check {
        let d = self.dim();
        let fails: Vec<Value> = match self.r_kind {
            RKind::Element => {
                let moved = self.alpha2(&self.r);
                if moved == self.r {
                    Vec::new()
                } else {
                    vec![json!({"lhs": self.render2(&moved), "rhs": self.render2(&self.r)})]
                }
            }
            RKind::Form => (0..d)
                .flat_map(|i| (0..d).map(move |j| (i, j)))
                .filter_map(|(i, j)| {
                    let l = self.form(&self.alpha[i], &self.alpha[j]);
                    let r = self.r.get(&(i, j)).cloned().unwrap_or_else(|| self.field.zero());
                    (l != r).then(|| {
                        json!({"x": self.labels[i], "y": self.labels[j],
                        "lhs": l.to_string(), "rhs": r.to_string()})
                    })
                })
                .collect(),
        };
        let cases = if self.r_kind == RKind::Element { 1 } else { d * d };
        Check::from_failures("alpha_invariance", None, cases, fails)
    }

    /// The linear dual on the dual basis: `μ* = Δ^T`, `Δ* = μ^T`, `α* = α^T`,
    /// and the R datum switches kind with the same coefficients.
    pub fn dualize(&self) -> FinDimHomBialgebra {
        let d = self.dim();
        let mut mu = vec![V1::new(); d * d];
        for (k, dk) in self.delta.iter().enumerate() {
            for (&(i, j), c) in dk {
                put(&mut mu[i * d + j], k, c.clone());
            }
        }
        let mut delta = vec![V2::new(); d];
        for i in 0..d {
            for j in 0..d {
                for (&k, c) in &self.mu[i * d + j] {
                    put(&mut delta[k], (i, j), c.clone());
                }
            }
        }
        let mut alpha = vec![V1::new(); d];
        for (k, col) in self.alpha.iter().enumerate() {
            for (&i, c) in col {
                put(&mut alpha[i], k, c.clone());
            }
        }
        let labels = self
            .labels
            .iter()
            .map(|l| match l.strip_prefix('*') {
                Some(s) => s.to_string(),
                None => format!("*{l}"),
            })
            .collect();
        let r_kind = match self.r_kind {
            RKind::Element => RKind::Form,
            RKind::Form => RKind::Element,
        };
        FinDimHomBialgebra {
            field: self.field.clone(),
            labels,
            mu,
            delta,
            alpha,
            r_kind,
            r: self.r.clone(),
        }
    }

    pub fn to_json(&self) -> Value {
        let d = self.dim();
        let mut mu = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for (&k, c) in &self.mu[i * d + j] {
                    mu.push(json!({"i": i, "j": j, "k": k, "value": c.to_string()}));
                }
            }
        }
        let mut delta = Vec::new();
        for (i, di) in self.delta.iter().enumerate() {
            for (&(j, k), c) in di {
                delta.push(json!({"i": i, "j": j, "k": k, "value": c.to_string()}));
            }
        }
        let mut alpha = Vec::new();
        for (i, col) in self.alpha.iter().enumerate() {
            for (&k, c) in col {
                alpha.push(json!({"i": i, "k": k, "value": c.to_string()}));
            }
        }
        let r: Vec<Value> = self
            .r
            .iter()
            .map(|(&(i, j), c)| json!({"i": i, "j": j, "value": c.to_string()}))
            .collect();
        json!({
            "field": FieldJson::of(&self.field),
            "labels": self.labels,
            "mu": mu,
            "delta": delta,
            "alpha": alpha,
            "r": {"kind": self.r_kind, "entries": r},
        })
    }

    pub fn from_json(v: &Value) -> Result<FinDimHomBialgebra, FinDimError> {
        let dump: DumpJson = serde_json::from_value(v.clone()).map_err(|e| FinDimError::Json(e.to_string()))?;
        let field = dump.field.build()?;
        let d = dump.labels.len();
        let check = |i: usize| {
            if i < d {
                Ok(i)
            } else {
                Err(FinDimError::Shape(format!("index {i} ≥ {d}")))
            }
        };
        let mut mu = vec![V1::new(); d * d];
        for e in &dump.mu {
            put(
                &mut mu[check(e.i)? * d + check(e.j)?],
                check(e.k)?,
                field.parse(&e.value)?,
            );
        }
        let mut delta = vec![V2::new(); d];
        for e in &dump.delta {
            put(
                &mut delta[check(e.i)?],
                (check(e.j)?, check(e.k)?),
                field.parse(&e.value)?,
            );
        }
        let mut alpha = vec![V1::new(); d];
        for e in &dump.alpha {
            put(&mut alpha[check(e.i)?], check(e.k)?, field.parse(&e.value)?);
        }
        let mut r = V2::new();
        for e in &dump.r.entries {
            put(&mut r, (check(e.i)?, check(e.j)?), field.parse(&e.value)?);
        }
        FinDimHomBialgebra::new(field, dump.labels, mu, delta, alpha, dump.r.kind, r)
    }
}

#[derive(Deserialize)]
struct TripleJson {
    i: usize,
    j: usize,
    k: usize,
    value: String,
}

#[derive(Deserialize)]
struct PairJson {
    i: usize,
    k: usize,
    value: String,
}

#[derive(Deserialize)]
struct REntryJson {
    i: usize,
    j: usize,
    value: String,
}

#[derive(Deserialize)]
struct RJson {
    kind: RKind,
    entries: Vec<REntryJson>,
}

#[derive(Deserialize)]
struct DumpJson {
    field: FieldJson,
    labels: Vec<String>,
    mu: Vec<TripleJson>,
    delta: Vec<TripleJson>,
    alpha: Vec<PairJson>,
    r: RJson,
}

fn render_terms<'a>(it: impl Iterator<Item = (String, &'a Scalar)>) -> String {
    let parts: Vec<String> = it
        .map(|(l, c)| if c.is_one() { l } else { format!("({c})*{l}") })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn diff3(b: &FinDimHomBialgebra, l: &V3, r: &V3) -> Vec<Value> {
    let mut keys: Vec<&(usize, usize, usize)> = l.keys().chain(r.keys()).collect();
    keys.sort();
    keys.dedup();
    keys.into_iter()
        .filter(|k| l.get(k) != r.get(k))
        .map(|&(i, j, k)| {
            let z = b.field.zero();
            json!({"entry": format!("{} ⊗ {} ⊗ {}", b.labels[i], b.labels[j], b.labels[k]),
                "lhs": l.get(&(i, j, k)).unwrap_or(&z).to_string(),
                "rhs": r.get(&(i, j, k)).unwrap_or(&z).to_string()})
        })
        .collect()
}

fn expand(index: &HashMap<Word, usize>, h: &HomBialgebra, p: &NCPoly) -> Result<V1, FinDimError> {
    let mut out = V1::new();
    for (w, c) in p.terms() {
        let i = index
            .get(w)
            .ok_or_else(|| FinDimError::OutsideBasis(h.pres().render_word(w)))?;
        put(&mut out, *i, c.clone());
    }
    Ok(out)
}

fn expand2(index: &HashMap<Word, usize>, h: &HomBialgebra, t: &Tensor) -> Result<V2, FinDimError> {
    let mut out = V2::new();
    for (k, c) in t.terms() {
        let look = |w: &Word| {
            index
                .get(w)
                .copied()
                .ok_or_else(|| FinDimError::OutsideBasis(h.pres().render_word(w)))
        };
        put(&mut out, (look(&k[0])?, look(&k[1])?), c.clone());
    }
    Ok(out)
}

fn structure(h: &HomBialgebra) -> Result<(Vec<Word>, HashMap<Word, usize>, Vec<V1>, Vec<V2>, Vec<V1>), FinDimError> {
    let basis = h.pres().graded_basis(None)?;
    let index: HashMap<Word, usize> = basis.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
    let polys: Vec<NCPoly> = basis.iter().map(|w| h.word_poly(w)).collect();
    let d = basis.len();
    let mu: Vec<V1> = (0..d * d)
        .into_par_iter()
        .map(|ij| expand(&index, h, &h.mu(&polys[ij / d], &polys[ij % d])))
        .collect::<Result<_, _>>()?;
    let delta: Vec<V2> = polys
        .par_iter()
        .map(|p| expand2(&index, h, &h.delta(p)))
        .collect::<Result<_, _>>()?;
    let alpha: Vec<V1> = polys
        .par_iter()
        .map(|p| expand(&index, h, &h.alpha(p)))
        .collect::<Result<_, _>>()?;
    Ok((basis, index, mu, delta, alpha))
}

/// Structure constants of a presented Hom-bialgebra with finitely many normal
/// monomials, carrying the braiding element `r ∈ A⊗A`.
pub fn materialize(h: &HomBialgebra, r: &Tensor) -> Result<FinDimHomBialgebra, FinDimError> {
    let (basis, index, mu, delta, alpha) = structure(h)?;
    let rr = expand2(&index, h, r)?;
    let labels = basis.iter().map(|w| h.pres().render_word(w)).collect();
    FinDimHomBialgebra::new(h.pres().field().clone(), labels, mu, delta, alpha, RKind::Element, rr)
}

/// Structure constants of a finite cobraided instance, R tabulated as a form.
pub fn materialize_cobraided(c: &CobraidedHomBialgebra) -> Result<FinDimHomBialgebra, FinDimError> {
    let h = c.h();
    let (basis, _, mu, delta, alpha) = structure(h)?;
    let mut r = V2::new();
    for (i, u) in basis.iter().enumerate() {
        for (j, v) in basis.iter().enumerate() {
            put(&mut r, (i, j), c.eval(&h.word_poly(u), &h.word_poly(v))?);
        }
    }
    let labels = basis.iter().map(|w| h.pres().render_word(w)).collect();
    FinDimHomBialgebra::new(h.pres().field().clone(), labels, mu, delta, alpha, RKind::Form, r)
}
