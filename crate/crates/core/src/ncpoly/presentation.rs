use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::RwLock;

use serde_json::json;
use thiserror::Error;

use super::{concat, NCPoly, Word};
use crate::report::{Check, Report};
use crate::scalars::{Scalar, ScalarError, ScalarField};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PresentationError {
    #[error("unknown generator in `{0}`")]
    UnknownGenerator(String),
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("too many generators ({0}); at most 255 are supported")]
    TooManyGenerators(usize),
    #[error("rule with empty left side")]
    EmptyLhs,
    #[error("rule {lhs} does not decrease: {mono} is not below it")]
    NotDecreasing { lhs: String, mono: String },
    #[error("normal monomials continue past degree {0}")]
    NotFinite(usize),
    #[error("scalar: {0}")]
    Scalar(#[from] ScalarError),
}

/// A rewrite rule `lhs → rhs`.
#[derive(Clone, Debug, PartialEq)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: NCPoly,
}

/// Generators, oriented relations and the truncation degree for verification.
///
/// Words are compared by weighted degree, then length, then lexicographically
/// in the declared generator order. With all weights 1 this is graded-lex.
pub struct Presentation {
    field: ScalarField,
    generators: Vec<String>,
    weights: Vec<u32>,
    rules: Vec<Rule>,
    max_degree: usize,
    by_last: Vec<Vec<usize>>,
    cache: RwLock<HashMap<Word, NCPoly>>,
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Presentation")
            .field("generators", &self.generators)
            .field("rules", &self.rules.len())
            .field("max_degree", &self.max_degree)
            .finish()
    }
}

impl Clone for Presentation {
    fn clone(&self) -> Self {
        Presentation {
            field: self.field.clone(),
            generators: self.generators.clone(),
            weights: self.weights.clone(),
            rules: self.rules.clone(),
            max_degree: self.max_degree,
            by_last: self.by_last.clone(),
            cache: RwLock::new(HashMap::new()),
        }
    }
}

/// Incremental construction with textual rules.
#[derive(Clone)]
pub struct PresentationBuilder {
    field: ScalarField,
    generators: Vec<String>,
    weights: Option<Vec<u32>>,
    rules: Vec<Rule>,
}

impl PresentationBuilder {
    pub fn weights(mut self, w: &[u32]) -> Self {
        self.weights = Some(w.to_vec());
        self
    }

    fn scratch(&self) -> Presentation {
        Presentation::raw(
            self.field.clone(),
            self.generators.clone(),
            vec![1; self.generators.len()],
            Vec::new(),
            0,
        )
    }

    /// Adds `lhs → Σ coef·mono`, all given as text.
    pub fn rule(mut self, lhs: &str, rhs: &[(&str, &str)]) -> Result<Self, PresentationError> {
        let p = self.scratch();
        let l = p.parse_word(lhs)?;
        let mut r = NCPoly::zero();
        for (m, c) in rhs {
            r.add_term(p.parse_word(m)?, self.field.parse(c)?);
        }
        self.rules.push(Rule { lhs: l, rhs: r });
        Ok(self)
    }

    pub fn rule_poly(mut self, lhs: Word, rhs: NCPoly) -> Self {
        self.rules.push(Rule { lhs, rhs });
        self
    }

    pub fn build(self, max_degree: usize) -> Result<Presentation, PresentationError> {
        let weights = self.weights.unwrap_or_else(|| vec![1; self.generators.len()]);
        Presentation::new(self.field, &self.generators, Some(weights), self.rules, max_degree)
    }
}

impl Presentation {
    fn raw(
        field: ScalarField,
        generators: Vec<String>,
        weights: Vec<u32>,
        rules: Vec<Rule>,
        max_degree: usize,
    ) -> Presentation {
        let mut by_last = vec![Vec::new(); generators.len()];
        for (i, r) in rules.iter().enumerate() {
            if let Some(&g) = r.lhs.last() {
                by_last[g as usize].push(i);
            }
        }
        Presentation {
            field,
            generators,
            weights,
            rules,
            max_degree,
            by_last,
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn builder<S: AsRef<str>>(field: &ScalarField, generators: &[S]) -> PresentationBuilder {
        PresentationBuilder {
            field: field.clone(),
            generators: generators.iter().map(|s| s.as_ref().to_string()).collect(),
            weights: None,
            rules: Vec::new(),
        }
    }

    pub fn new<S: AsRef<str>>(
        field: ScalarField,
        generators: &[S],
        weights: Option<Vec<u32>>,
        rules: Vec<Rule>,
        max_degree: usize,
    ) -> Result<Presentation, PresentationError> {
        let gens: Vec<String> = generators.iter().map(|s| s.as_ref().to_string()).collect();
        if gens.len() > 255 {
            return Err(PresentationError::TooManyGenerators(gens.len()));
        }
        for (i, g) in gens.iter().enumerate() {
            if gens[..i].contains(g) || g.is_empty() {
                return Err(PresentationError::DuplicateGenerator(g.clone()));
            }
        }
        let weights = weights.unwrap_or_else(|| vec![1; gens.len()]);
        assert_eq!(weights.len(), gens.len(), "one weight per generator");
        let p = Presentation::raw(field, gens, weights, rules, max_degree);
        for r in &p.rules {
            if r.lhs.is_empty() {
                return Err(PresentationError::EmptyLhs);
            }
            if r.lhs.iter().any(|&g| g as usize >= p.generators.len()) {
                return Err(PresentationError::UnknownGenerator(format!("{:?}", r.lhs)));
            }
            for m in r.rhs.terms().keys() {
                if p.cmp_words(m, &r.lhs) != Ordering::Less {
                    return Err(PresentationError::NotDecreasing {
                        lhs: p.render_word(&r.lhs),
                        mono: p.render_word(m),
                    });
                }
            }
        }
        Ok(p)
    }

    pub fn field(&self) -> &ScalarField {
        &self.field
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn generator(&self, name: &str) -> Option<u8> {
        self.generators.iter().position(|g| g == name).map(|i| i as u8)
    }

    pub fn gen_word(&self, name: &str) -> Word {
        let g = self.generator(name).unwrap_or_else(|| panic!("no generator {name}"));
        super::word(&[g])
    }

    pub fn weighted_degree(&self, w: &Word) -> u64 {
        w.iter().map(|&g| self.weights[g as usize] as u64).sum()
    }

    pub fn cmp_words(&self, a: &Word, b: &Word) -> Ordering {
        self.weighted_degree(a)
            .cmp(&self.weighted_degree(b))
            .then(a.len().cmp(&b.len()))
            .then_with(|| a.cmp(b))
    }

    /// Parses `1`, concatenated names (`aab`, `a^2b`) or `*`-separated names.
    pub fn parse_word(&self, text: &str) -> Result<Word, PresentationError> {
        let t = text.trim();
        if t == "1" || t.is_empty() {
            return Ok(Word::new());
        }
        let mut w = Word::new();
        let b = t.as_bytes();
        let mut i = 0;
        while i < b.len() {
            if b[i] == b'*' || b[i].is_ascii_whitespace() {
                i += 1;
                continue;
            }
            let mut best: Option<(usize, usize)> = None;
            for (gi, g) in self.generators.iter().enumerate() {
                if t[i..].starts_with(g.as_str()) && best.is_none_or(|(_, l)| g.len() > l) {
                    best = Some((gi, g.len()));
                }
            }
            let (gi, len) = best.ok_or_else(|| PresentationError::UnknownGenerator(text.to_string()))?;
            i += len;
            let mut count = 1usize;
            if i < b.len() && b[i] == b'^' {
                i += 1;
                let start = i;
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
                count = t[start..i]
                    .parse()
                    .map_err(|_| PresentationError::UnknownGenerator(text.to_string()))?;
            }
            for _ in 0..count {
                w.push(gi as u8);
            }
        }
        Ok(w)
    }

    pub fn render_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".into();
        }
        let names: Vec<&str> = w.iter().map(|&g| self.generators[g as usize].as_str()).collect();
        if self.generators.iter().all(|g| g.chars().count() == 1) {
            names.concat()
        } else {
            names.join("*")
        }
    }

    /// Human-readable polynomial, greatest word first.
    pub fn render_poly(&self, p: &NCPoly) -> String {
        if p.is_zero() {
            return "0".into();
        }
        let mut terms: Vec<(&Word, &Scalar)> = p.terms().iter().collect();
        terms.sort_by(|a, b| self.cmp_words(b.0, a.0));
        terms
            .iter()
            .map(|(w, c)| {
                let cs = c.to_string();
                let cs = if cs.contains(' ') { format!("({cs})") } else { cs };
                if w.is_empty() {
                    cs
                } else if c.is_one() {
                    self.render_word(w)
                } else {
                    format!("{cs}*{}", self.render_word(w))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    pub fn one(&self) -> NCPoly {
        NCPoly::constant(self.field.one())
    }

    pub fn gen(&self, name: &str) -> NCPoly {
        NCPoly::term(self.gen_word(name), self.field.one())
    }

    /// Parses a polynomial given as (monomial, coefficient) text pairs.
    pub fn poly(&self, terms: &[(&str, &str)]) -> Result<NCPoly, PresentationError> {
        let mut p = NCPoly::zero();
        for (m, c) in terms {
            p.add_term(self.parse_word(m)?, self.field.parse(c)?);
        }
        Ok(p)
    }

    fn suffix_rule(&self, w: &Word) -> Option<&Rule> {
        let g = *w.last()? as usize;
        self.by_last[g]
            .iter()
            .map(|&i| &self.rules[i])
            .find(|r| w.ends_with(&r.lhs))
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        (1..=w.len()).all(|n| self.suffix_rule(&super::word(&w[..n])).is_none())
    }

    /// Normal form of `u·g` for a normal word `u`.
    fn append_gen(&self, u: &Word, g: u8) -> NCPoly {
        let mut w = u.clone();
        w.push(g);
        if let Some(hit) = self.cache.read().unwrap().get(&w) {
            return hit.clone();
        }
        let res = match self.suffix_rule(&w) {
            None => NCPoly::term(w.clone(), self.field.one()),
            Some(rule) => {
                let prefix = super::word(&w[..w.len() - rule.lhs.len()]);
                let start = NCPoly::term(prefix, self.field.one());
                let mut out = NCPoly::zero();
                for (m, c) in rule.rhs.terms() {
                    out.add_scaled(&self.extend(&start, m), c);
                }
                out
            }
        };
        self.cache.write().unwrap().insert(w, res.clone());
        res
    }

    /// Normal form of `p·m` for normal `p` and any word `m`.
    fn extend(&self, p: &NCPoly, m: &Word) -> NCPoly {
        let mut cur = p.clone();
        for &g in m.iter() {
            let mut next = NCPoly::zero();
            for (u, c) in cur.terms() {
                next.add_scaled(&self.append_gen(u, g), c);
            }
            cur = next;
            if cur.is_zero() {
                break;
            }
        }
        cur
    }

    pub fn nf_word(&self, w: &Word) -> NCPoly {
        self.extend(&self.one(), w)
    }

    /// Exhaustive rewriting to the unique irreducible form.
    pub fn normal_form(&self, p: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in p.terms() {
            out.add_scaled(&self.nf_word(w), c);
        }
        out
    }

    /// Product of two normal-form polynomials, renormalized.
    pub fn multiply(&self, a: &NCPoly, b: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (v, cb) in b.terms() {
            let prod = self.extend(a, v);
            out.add_scaled(&prod, cb);
        }
        out
    }

    /// Normal form of a product of words.
    pub fn multiply_words(&self, a: &Word, b: &Word) -> NCPoly {
        self.extend(&NCPoly::term(a.clone(), self.field.one()), b)
    }

    fn ambiguities(&self) -> Vec<(Word, NCPoly, NCPoly, usize, usize)> {
        let mut out = Vec::new();
        let one = self.field.one();
        for (i, ri) in self.rules.iter().enumerate() {
            for (j, rj) in self.rules.iter().enumerate() {
                let (li, lj) = (&ri.lhs, &rj.lhs);
                // Overlap: a proper suffix of li equals a proper prefix of lj.
                for k in 1..li.len().min(lj.len()) {
                    if li[li.len() - k..] == lj[..k] {
                        let tail = super::word(&lj[k..]);
                        let head = super::word(&li[..li.len() - k]);
                        let w = concat(li, &tail);
                        let r1 = ri.rhs.free_mul(&NCPoly::term(tail, one.clone()));
                        let r2 = NCPoly::term(head, one.clone()).free_mul(&rj.rhs);
                        out.push((w, r1, r2, i, j));
                    }
                }
                // Inclusion: lj occurs inside li.
                if i != j && lj.len() <= li.len() {
                    for p in 0..=li.len() - lj.len() {
                        if li[p..p + lj.len()] == lj[..] {
                            let head = NCPoly::term(super::word(&li[..p]), one.clone());
                            let tail = NCPoly::term(super::word(&li[p + lj.len()..]), one.clone());
                            let r2 = head.free_mul(&rj.rhs).free_mul(&tail);
                            out.push((li.clone(), ri.rhs.clone(), r2, i, j));
                        }
                    }
                }
            }
        }
        out
    }

    fn words_up_to(&self, n: usize) -> Vec<Word> {
        let mut all = vec![Word::new()];
        let mut level = vec![Word::new()];
        for _ in 0..n {
            let mut next = Vec::new();
            for w in &level {
                for g in 0..self.generators.len() {
                    let mut v = w.clone();
                    v.push(g as u8);
                    next.push(v);
                }
            }
            all.extend(next.iter().cloned());
            level = next;
        }
        all
    }

    /// Resolves every overlap and inclusion ambiguity of total length at most
    /// `degree`, inside every two-sided context that stays within the bound.
    pub fn check_local_confluence(&self, degree: usize) -> Report {
        let one = self.field.one();
        let mut failures = Vec::new();
        let mut cases = 0;
        let mut seen = BTreeSet::new();
        for (w, r1, r2, i, j) in self.ambiguities() {
            if w.len() > degree {
                continue;
            }
            let slack = degree - w.len();
            let ctx = self.words_up_to(slack);
            for left in &ctx {
                for right in &ctx {
                    if left.len() + right.len() > slack {
                        continue;
                    }
                    if !seen.insert((left.clone(), w.clone(), right.clone(), i, j)) {
                        continue;
                    }
                    cases += 1;
                    let l = NCPoly::term(left.clone(), one.clone());
                    let r = NCPoly::term(right.clone(), one.clone());
                    let a = self.normal_form(&l.free_mul(&r1).free_mul(&r));
                    let b = self.normal_form(&l.free_mul(&r2).free_mul(&r));
                    if a != b {
                        let word = concat(&concat(left, &w), right);
                        failures.push(json!({
                            "critical_pair": self.render_word(&word),
                            "rules": [self.render_word(&self.rules[i].lhs), self.render_word(&self.rules[j].lhs)],
                            "left": self.render_poly(&a),
                            "right": self.render_poly(&b),
                        }));
                    }
                }
            }
        }
        let mut rep = Report::new();
        rep.push(Check::from_failures("local_confluence", Some(degree), cases, failures));
        rep
    }

    /// Normal words up to `degree` (word length), or all of them when `None`,
    /// in increasing order.
    pub fn graded_basis(&self, degree: Option<usize>) -> Result<Vec<Word>, PresentationError> {
        const FINITE_LIMIT: usize = 64;
        let limit = degree.unwrap_or(FINITE_LIMIT);
        let mut all = vec![Word::new()];
        let mut level = vec![Word::new()];
        let mut d = 0;
        while !level.is_empty() && d < limit {
            let mut next = Vec::new();
            for u in &level {
                for g in 0..self.generators.len() {
                    let mut w = u.clone();
                    w.push(g as u8);
                    if self.suffix_rule(&w).is_none() {
                        next.push(w);
                    }
                }
            }
            all.extend(next.iter().cloned());
            level = next;
            d += 1;
        }
        if degree.is_none() && !level.is_empty() {
            return Err(PresentationError::NotFinite(FINITE_LIMIT));
        }
        all.sort_by(|a, b| self.cmp_words(a, b));
        Ok(all)
    }
}

#[cfg(test)]
mod tests;
