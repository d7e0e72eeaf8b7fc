//! Noncommutative polynomials, tensor elements and rewriting presentations.

mod presentation;

use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use smallvec::SmallVec;

use crate::scalars::Scalar;

pub use presentation::{Presentation, PresentationBuilder, PresentationError, Rule};

/// A word in generator indices; the empty word is the unit.
pub type Word = SmallVec<[u8; 12]>;

pub fn word(indices: &[u8]) -> Word {
    SmallVec::from_slice(indices)
}

pub fn concat(a: &Word, b: &Word) -> Word {
    let mut w = a.clone();
    w.extend_from_slice(b);
    w
}

/// Finite linear combination of words with no zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NCPoly {
    terms: BTreeMap<Word, Scalar>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly::default()
    }

    pub fn term(w: Word, c: Scalar) -> Self {
        let mut p = NCPoly::zero();
        p.add_term(w, c);
        p
    }

    pub fn constant(c: Scalar) -> Self {
        NCPoly::term(Word::new(), c)
    }

    pub fn terms(&self) -> &BTreeMap<Word, Scalar> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Word, Scalar> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> Option<&Scalar> {
        self.terms.get(w)
    }

    /// Adds `c·w`, dropping the entry if it cancels.
    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
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

    pub fn add_scaled(&mut self, o: &NCPoly, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (w, a) in &o.terms {
            self.add_term(w.clone(), a * c);
        }
    }

    pub fn scale(&self, c: &Scalar) -> NCPoly {
        if c.is_zero() {
            return NCPoly::zero();
        }
        NCPoly {
            terms: self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect(),
        }
    }

    /// Concatenation product without normalization.
    pub fn free_mul(&self, o: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (u, a) in &self.terms {
            for (v, b) in &o.terms {
                out.add_term(concat(u, v), a * b);
            }
        }
        out
    }

    /// Largest word length occurring.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }
}

impl<'a> Add<&'a NCPoly> for &'a NCPoly {
    type Output = NCPoly;
    fn add(self, o: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a NCPoly> for &'a NCPoly {
    type Output = NCPoly;
    fn sub(self, o: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        NCPoly {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

/// Element of a tensor power: each key holds one word per tensor leg.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tensor {
    terms: BTreeMap<Vec<Word>, Scalar>,
}

impl Tensor {
    pub fn zero() -> Self {
        Tensor::default()
    }

    pub fn terms(&self) -> &BTreeMap<Vec<Word>, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, legs: Vec<Word>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(legs) {
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

    pub fn add_scaled(&mut self, o: &Tensor, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (k, a) in &o.terms {
            self.add_term(k.clone(), a * c);
        }
    }

    pub fn scale(&self, c: &Scalar) -> Tensor {
        let mut out = Tensor::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn from_poly(p: &NCPoly) -> Tensor {
        let mut out = Tensor::zero();
        for (w, c) in p.terms() {
            out.add_term(vec![w.clone()], c.clone());
        }
        out
    }

    /// `self ⊗ p`, appending one leg.
    pub fn tensor_poly(&self, p: &NCPoly) -> Tensor {
        let mut out = Tensor::zero();
        for (k, a) in &self.terms {
            for (w, b) in p.terms() {
                let mut key = k.clone();
                key.push(w.clone());
                out.add_term(key, a * b);
            }
        }
        out
    }

    /// `a ⊗ b` for two polynomials.
    pub fn pair(a: &NCPoly, b: &NCPoly) -> Tensor {
        Tensor::from_poly(a).tensor_poly(b)
    }

    /// `self ⊗ o`, concatenating leg lists.
    pub fn tensor(&self, o: &Tensor) -> Tensor {
        let mut out = Tensor::zero();
        for (k, a) in &self.terms {
            for (l, b) in &o.terms {
                let mut key = k.clone();
                key.extend(l.iter().cloned());
                out.add_term(key, a * b);
            }
        }
        out
    }

    /// Applies one linear map per leg, each given on words.
    pub fn map_legs(&self, maps: &[&dyn Fn(&Word) -> NCPoly]) -> Tensor {
        let mut out = Tensor::zero();
        for (k, c) in &self.terms {
            let mut acc = Tensor::zero();
            acc.add_term(Vec::new(), c.clone());
            for (i, w) in k.iter().enumerate() {
                acc = acc.tensor_poly(&maps[i](w));
                if acc.is_zero() {
                    break;
                }
            }
            for (legs, v) in acc.terms {
                out.add_term(legs, v);
            }
        }
        out
    }

    /// Replaces leg `i` by a tensor produced from it (e.g. a coproduct),
    /// splicing the new legs in place.
    pub fn expand_leg(&self, i: usize, f: &dyn Fn(&Word) -> Tensor) -> Tensor {
        let mut out = Tensor::zero();
        for (k, c) in &self.terms {
            let img = f(&k[i]);
            for (legs, b) in img.terms() {
                let mut key: Vec<Word> = k[..i].to_vec();
                key.extend(legs.iter().cloned());
                key.extend(k[i + 1..].iter().cloned());
                out.add_term(key, c * b);
            }
        }
        out
    }
}

impl<'a> Sub<&'a Tensor> for &'a Tensor {
    type Output = Tensor;
    fn sub(self, o: &Tensor) -> Tensor {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(k.clone(), -c);
        }
        out
    }
}

impl<'a> Add<&'a Tensor> for &'a Tensor {
    type Output = Tensor;
    fn add(self, o: &Tensor) -> Tensor {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }
}
