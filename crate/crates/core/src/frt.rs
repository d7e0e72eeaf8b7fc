//! The FRT construction: R-matrix specifications, the quantum group A(γ),
//! λ-scaling endomorphisms and their twists.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::json;
use thiserror::Error;

use crate::cobraid::{CobraidError, CobraidedHomBialgebra, CobraidingForm};
use crate::hombialg::{HomBialgebra, HomError};
use crate::linalg::Matrix;
use crate::ncpoly::{word, NCPoly, Presentation, PresentationError, Rule, Tensor, Word};
use crate::report::{Check, Report};
use crate::scalars::{Scalar, ScalarError, ScalarField};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FrtError {
    #[error("index {0} out of range 1..={1}")]
    Index(usize, usize),
    #[error("R-matrix fails the Yang-Baxter equation")]
    NotYbe,
    #[error("λ violates λ_iλ_j c = λ_mλ_n c at {0:?}")]
    Lambda(Vec<[usize; 4]>),
    #[error("λ has {got} entries for dimension {want}")]
    LambdaLength { got: usize, want: usize },
    #[error("λ_{0} is zero")]
    LambdaZero(usize),
    #[error("naming must give {0} distinct names and a permutation of them")]
    Naming(usize),
    #[error("bad spec: {0}")]
    Spec(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Hom(#[from] HomError),
    #[error(transparent)]
    Cobraid(#[from] CobraidError),
}

/// Structure constants `c_{ij}^{mn}` of `γ(v_i⊗v_j) = Σ c_{ij}^{mn} v_m⊗v_n`,
/// indices starting at 1.
#[derive(Clone, Debug, PartialEq)]
pub struct RMatrixSpec {
    dim: usize,
    field: ScalarField,
    entries: BTreeMap<[usize; 4], Scalar>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct FieldJson {
    #[serde(default)]
    pub variables: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cyclotomic_order: Option<u32>,
}

impl FieldJson {
    pub fn of(f: &ScalarField) -> FieldJson {
        FieldJson {
            variables: f.variables().to_vec(),
            cyclotomic_order: f.cyclotomic_order(),
        }
    }

    pub fn build(&self) -> Result<ScalarField, ScalarError> {
        ScalarField::new(&self.variables, self.cyclotomic_order)
    }
}

#[derive(Serialize, Deserialize)]
struct EntryJson {
    i: usize,
    j: usize,
    m: usize,
    n: usize,
    value: String,
}

#[derive(Serialize, Deserialize)]
struct SpecJson {
    dim: usize,
    field: FieldJson,
    entries: Vec<EntryJson>,
}

impl RMatrixSpec {
    pub fn new(field: &ScalarField, dim: usize) -> RMatrixSpec {
        RMatrixSpec {
            dim,
            field: field.clone(),
            entries: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> &ScalarField {
        &self.field
    }

    pub fn set(&mut self, i: usize, j: usize, m: usize, n: usize, v: Scalar) -> Result<(), FrtError> {
        for x in [i, j, m, n] {
            if x == 0 || x > self.dim {
                return Err(FrtError::Index(x, self.dim));
            }
        }
        if v.is_zero() {
            self.entries.remove(&[i, j, m, n]);
        } else {
            self.entries.insert([i, j, m, n], v);
        }
        Ok(())
    }

    fn put(mut self, i: usize, j: usize, m: usize, n: usize, text: &str) -> RMatrixSpec {
        let v = self.field.parse(text).expect("catalog constant");
        self.set(i, j, m, n, v).expect("catalog index");
        self
    }

    pub fn c(&self, i: usize, j: usize, m: usize, n: usize) -> Scalar {
        self.entries
            .get(&[i, j, m, n])
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (&[usize; 4], &Scalar)> {
        self.entries.iter()
    }

    /// The N²×N² matrix of γ; column `(i,j)` holds `γ(v_i⊗v_j)`.
    pub fn gamma(&self) -> Matrix {
        let n = self.dim;
        let mut g = Matrix::zeros(&self.field, n * n, n * n);
        for (&[i, j, m, k], v) in &self.entries {
            g.set((m - 1) * n + (k - 1), (i - 1) * n + (j - 1), v.clone());
        }
        g
    }

    /// The standard sl2 R-matrix with `q^{1/2} = t`.
    pub fn sl2(field: &ScalarField) -> RMatrixSpec {
        RMatrixSpec::new(field, 2)
            .put(1, 1, 1, 1, "t")
            .put(2, 2, 2, 2, "t")
            .put(1, 2, 2, 1, "t^-1")
            .put(2, 1, 1, 2, "t^-1")
            .put(2, 1, 2, 1, "t^-1*(q - q^-1)")
    }

    /// Two-parameter R-matrix for `M_{p,q}(2)`; the field must declare `t` and `p`.
    pub fn mpq2(field: &ScalarField) -> RMatrixSpec {
        RMatrixSpec::new(field, 2)
            .put(1, 1, 1, 1, "t")
            .put(2, 2, 2, 2, "t")
            .put(1, 2, 2, 1, "t/p")
            .put(2, 1, 1, 2, "t^-1")
            .put(2, 1, 2, 1, "t*(1 - p^-1*t^-2)")
    }

    /// Alexander–Conway R-matrix for `M_q(1|1)`.
    pub fn mq11(field: &ScalarField) -> RMatrixSpec {
        RMatrixSpec::new(field, 2)
            .put(1, 1, 1, 1, "t")
            .put(2, 2, 2, 2, "-t^-3")
            .put(1, 2, 2, 1, "t^-1")
            .put(2, 1, 1, 2, "t^-1")
            .put(2, 1, 2, 1, "t^-1*(q - q^-1)")
    }

    /// `γ = Id`.
    pub fn identity(field: &ScalarField, dim: usize) -> RMatrixSpec {
        let mut s = RMatrixSpec::new(field, dim);
        for i in 1..=dim {
            for j in 1..=dim {
                s.set(i, j, i, j, field.one()).expect("in range");
            }
        }
        s
    }

    /// `γ = τ`, the flip `v_i⊗v_j ↦ v_j⊗v_i`.
    pub fn flip(field: &ScalarField, dim: usize) -> RMatrixSpec {
        let mut s = RMatrixSpec::new(field, dim);
        for i in 1..=dim {
            for j in 1..=dim {
                s.set(i, j, j, i, field.one()).expect("in range");
            }
        }
        s
    }

    pub fn from_json(v: &serde_json::Value) -> Result<RMatrixSpec, FrtError> {
        let sj: SpecJson = serde_json::from_value(v.clone()).map_err(|e| FrtError::Spec(e.to_string()))?;
        let field = sj.field.build()?;
        let mut s = RMatrixSpec::new(&field, sj.dim);
        for e in sj.entries {
            let v = field.parse(&e.value)?;
            s.set(e.i, e.j, e.m, e.n, v)?;
        }
        Ok(s)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<EntryJson> = self
            .entries
            .iter()
            .map(|(&[i, j, m, n], v)| EntryJson {
                i,
                j,
                m,
                n,
                value: v.to_string(),
            })
            .collect();
        serde_json::to_value(SpecJson {
            dim: self.dim,
            field: FieldJson::of(&self.field),
            entries,
        })
        .expect("serializable")
    }
}

fn kron_id_left(n: usize, g: &Matrix) -> Matrix {
    let f = g.get(0, 0).field().clone();
    let id = Matrix::identity(&f, n);
    id.kron(g)
}

fn kron_id_right(g: &Matrix, n: usize) -> Matrix {
    let f = g.get(0, 0).field().clone();
    g.kron(&Matrix::identity(&f, n))
}

/// `(Id⊗γ)(γ⊗Id)(Id⊗γ) = (γ⊗Id)(Id⊗γ)(γ⊗Id)` and invertibility of γ.
pub fn verify_ybe(spec: &RMatrixSpec) -> Report {
    let n = spec.dim;
    let g = spec.gamma();
    let g1 = kron_id_right(&g, n);
    let g2 = kron_id_left(n, &g);
    let l = g2.mul(&g1).mul(&g2);
    let r = g1.mul(&g2).mul(&g1);
    let mut fails = Vec::new();
    let idx = |k: usize| [k / (n * n) + 1, (k / n) % n + 1, k % n + 1];
    for row in 0..l.rows {
        for col in 0..l.cols {
            if l.get(row, col) != r.get(row, col) {
                fails.push(json!({"input": idx(col), "output": idx(row),
                    "lhs": l.get(row, col).to_string(), "rhs": r.get(row, col).to_string()}));
            }
        }
    }
    let mut rep = Report::new();
    rep.push(Check::from_failures("ybe", None, l.rows * l.cols, fails));
    let rank = g.rank();
    let inv = if rank == n * n {
        vec![]
    } else {
        vec![json!({"rank": rank, "size": n * n})]
    };
    rep.push(Check::from_failures("gamma_invertible", None, 1, inv));
    rep
}

/// Names for the generators `T_i^j` (row-major) and their order in the presentation.
#[derive(Clone, Debug, PartialEq)]
pub struct FrtNaming {
    pub names: Vec<String>,
    pub order: Vec<String>,
}

impl FrtNaming {
    /// `T11, T12, …` in row-major order.
    pub fn standard(dim: usize) -> FrtNaming {
        let names: Vec<String> = (1..=dim)
            .flat_map(|i| (1..=dim).map(move |j| format!("T{i}{j}")))
            .collect();
        FrtNaming {
            order: names.clone(),
            names,
        }
    }

    /// `a, b, c, d` for `T_1^1, T_1^2, T_2^1, T_2^2`, ordered `b < c < a < d`.
    pub fn quantum_matrices() -> FrtNaming {
        let v = |s: &[&str]| s.iter().map(|x| x.to_string()).collect();
        FrtNaming {
            names: v(&["a", "b", "c", "d"]),
            order: v(&["b", "c", "a", "d"]),
        }
    }
}

/// An FRT quantum group together with its construction data.
#[derive(Debug)]
pub struct FrtInstance {
    pub spec: RMatrixSpec,
    pub naming: FrtNaming,
    /// `gens[i][j]` is the generator index of `T_{i+1}^{j+1}`.
    pub gens: Vec<Vec<u8>>,
    pub chb: Arc<CobraidedHomBialgebra>,
    /// Number of independent relations kept as rewrite rules.
    pub retained: usize,
    pub lambda: Option<Vec<Scalar>>,
}

impl FrtInstance {
    pub fn generator(&self, i: usize, j: usize) -> Word {
        word(&[self.gens[i - 1][j - 1]])
    }
}

/// The relations `C_{ij}^{mn}` as free degree-2 polynomials.
fn relation_polys(spec: &RMatrixSpec, gens: &[Vec<u8>]) -> Vec<NCPoly> {
    let n = spec.dim;
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            for m in 1..=n {
                for k2 in 1..=n {
                    let mut p = NCPoly::zero();
                    for k in 1..=n {
                        for l in 1..=n {
                            let a = spec.c(i, j, k, l);
                            if !a.is_zero() {
                                p.add_term(word(&[gens[k - 1][m - 1], gens[l - 1][k2 - 1]]), a);
                            }
                            let b = spec.c(k, l, m, k2);
                            if !b.is_zero() {
                                p.add_term(word(&[gens[i - 1][k - 1], gens[j - 1][l - 1]]), -&b);
                            }
                        }
                    }
                    out.push(p);
                }
            }
        }
    }
    out
}

/// Builds A(γ): relations oriented by Gaussian elimination over the span of
/// degree-2 words, the matrix coproduct and `R(T_i^m⊗T_j^n) = c_{ji}^{mn}`.
pub fn frt_construct(spec: &RMatrixSpec, naming: &FrtNaming, max_degree: usize) -> Result<FrtInstance, FrtError> {
    if !verify_ybe(spec).passed() {
        return Err(FrtError::NotYbe);
    }
    let n = spec.dim;
    let field = spec.field.clone();
    if naming.names.len() != n * n || naming.order.len() != n * n {
        return Err(FrtError::Naming(n * n));
    }
    let mut gens = vec![vec![0u8; n]; n];
    for (pos, name) in naming.names.iter().enumerate() {
        let g = naming
            .order
            .iter()
            .position(|o| o == name)
            .ok_or(FrtError::Naming(n * n))?;
        gens[pos / n][pos % n] = g as u8;
    }
    let scratch = Presentation::new(field.clone(), &naming.order, None, Vec::new(), 0)?;
    let ng = n * n;
    let mut cols: Vec<Word> = (0..ng)
        .flat_map(|a| (0..ng).map(move |b| word(&[a as u8, b as u8])))
        .collect();
    cols.sort_by(|a, b| scratch.cmp_words(b, a));
    let col_of: HashMap<Word, usize> = cols.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let rels: Vec<NCPoly> = relation_polys(spec, &gens)
        .into_iter()
        .filter(|p| !p.is_zero())
        .collect();
    let mut m = Matrix::zeros(&field, rels.len(), cols.len());
    for (r, p) in rels.iter().enumerate() {
        for (w, c) in p.terms() {
            m.set(r, col_of[w], c.clone());
        }
    }
    let pivots = if rels.is_empty() { Vec::new() } else { m.rref() };
    let mut rules = Vec::new();
    for (row, &pc) in pivots.iter().enumerate() {
        let mut rhs = NCPoly::zero();
        for (c, w) in cols.iter().enumerate() {
            if c != pc {
                rhs.add_term(w.clone(), -m.get(row, c));
            }
        }
        rules.push(Rule {
            lhs: cols[pc].clone(),
            rhs,
        });
    }
    let retained = rules.len();
    let pres = Arc::new(Presentation::new(
        field.clone(),
        &naming.order,
        None,
        rules,
        max_degree,
    )?);

    let one = field.one();
    let mut delta = vec![Tensor::zero(); ng];
    for i in 0..n {
        for j in 0..n {
            let mut t = Tensor::zero();
            for k in 0..n {
                t.add_term(vec![word(&[gens[i][k]]), word(&[gens[k][j]])], one.clone());
            }
            delta[gens[i][j] as usize] = t;
        }
    }
    let h = Arc::new(HomBialgebra::new(pres, delta)?);
    let mut form = CobraidingForm::new(ng, one.clone());
    for i in 0..n {
        for mm in 0..n {
            let g = gens[i][mm];
            let d = if i == mm { one.clone() } else { field.zero() };
            form.set_unit_left(g, d.clone());
            form.set_unit_right(g, d);
            for j in 0..n {
                for nn in 0..n {
                    form.set(g, gens[j][nn], spec.c(j + 1, i + 1, mm + 1, nn + 1));
                }
            }
        }
    }
    let chb = Arc::new(CobraidedHomBialgebra::new(h, form)?);
    Ok(FrtInstance {
        spec: spec.clone(),
        naming: naming.clone(),
        gens,
        chb,
        retained,
        lambda: None,
    })
}

/// Checks `λ_iλ_j c_{ij}^{mn} = λ_mλ_n c_{ij}^{mn}` and returns the table
/// `T_i^j ↦ λ_iλ_j^{-1} T_i^j`.
pub fn lambda_endomorphism(inst: &FrtInstance, lambda: &[Scalar]) -> Result<Vec<NCPoly>, FrtError> {
    let n = inst.spec.dim;
    if lambda.len() != n {
        return Err(FrtError::LambdaLength {
            got: lambda.len(),
            want: n,
        });
    }
    if let Some(i) = lambda.iter().position(Scalar::is_zero) {
        return Err(FrtError::LambdaZero(i + 1));
    }
    let bad: Vec<[usize; 4]> = inst
        .spec
        .nonzero()
        .filter(|(&[i, j, m, k], _)| &lambda[i - 1] * &lambda[j - 1] != &lambda[m - 1] * &lambda[k - 1])
        .map(|(idx, _)| *idx)
        .collect();
    if !bad.is_empty() {
        return Err(FrtError::Lambda(bad));
    }
    let ng = n * n;
    let mut table = vec![NCPoly::zero(); ng];
    for i in 0..n {
        for j in 0..n {
            let s = &lambda[i] * &lambda[j].inv()?;
            table[inst.gens[i][j] as usize] = NCPoly::term(word(&[inst.gens[i][j]]), s);
        }
    }
    Ok(table)
}

/// The twisted FRT Hom-quantum group `A(γ)_α` for an admissible λ.
pub fn frt_twist(inst: &FrtInstance, lambda: &[Scalar]) -> Result<FrtInstance, FrtError> {
    let table = lambda_endomorphism(inst, lambda)?;
    let h = Arc::new(inst.chb.h().twist(table)?);
    let chb = inst.chb.with_h(h);
    let ng = inst.spec.dim * inst.spec.dim;
    for g in 0..ng {
        for k in 0..ng {
            let (u, v) = (word(&[g as u8]), word(&[k as u8]));
            let l = chb.eval_base(&chb.h().alpha_word(&u), &chb.h().alpha_word(&v));
            if l != chb.eval_base_words(&u, &v) {
                let p = chb.h().pres();
                return Err(
                    CobraidError::NotInvariant(format!("{} ⊗ {}", p.render_word(&u), p.render_word(&v))).into(),
                );
            }
        }
    }
    Ok(FrtInstance {
        spec: inst.spec.clone(),
        naming: inst.naming.clone(),
        gens: inst.gens.clone(),
        chb: Arc::new(chb),
        retained: inst.retained,
        lambda: Some(lambda.to_vec()),
    })
}

#[cfg(test)]
mod tests;
