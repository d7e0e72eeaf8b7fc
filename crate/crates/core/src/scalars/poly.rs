//! Sparse commutative polynomials in a fixed number of variables with
//! coefficients in Q(ζ_n), ordered graded-lexicographically.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow};
use smallvec::SmallVec;

use super::cyclo::{Cyc, Cyclo};

pub type Exps = SmallVec<[u32; 4]>;

/// Terms kept sorted with the greatest monomial first; no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Exps, Cyc)>,
}

pub fn cmp_exps(a: &Exps, b: &Exps) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

fn zero_exps(n: usize) -> Exps {
    SmallVec::from_elem(0, n)
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn constant(c: Cyc, nvars: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: vec![(zero_exps(nvars), c)],
        }
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(Cyc::one(), nvars)
    }

    pub fn monomial(exps: Exps, c: Cyc) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: vec![(exps, c)] }
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        let mut e = zero_exps(nvars);
        e[i] = 1;
        Poly::monomial(e, Cyc::one())
    }

    fn from_unsorted(mut raw: Vec<(Exps, Cyc)>) -> Self {
        raw.sort_by(|a, b| cmp_exps(&b.0, &a.0));
        let mut terms: Vec<(Exps, Cyc)> = Vec::with_capacity(raw.len());
        for (e, c) in raw {
            match terms.last_mut() {
                Some(last) if last.0 == e => last.1 = last.1.add(&c),
                _ => terms.push((e, c)),
            }
        }
        terms.retain(|t| !t.1.is_zero());
        Poly { terms }
    }

    pub fn terms(&self) -> &[(Exps, Cyc)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.iter().all(|&e| e == 0))
    }

    pub fn is_one(&self) -> bool {
        self.is_constant() && self.terms.len() == 1 && self.terms[0].1.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn constant_value(&self) -> Option<Cyc> {
        if self.is_zero() {
            Some(Cyc::zero())
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    pub fn lc(&self) -> &Cyc {
        &self.terms[0].1
    }

    pub fn lm(&self) -> &Exps {
        &self.terms[0].0
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(e, _)| e.iter().sum::<u32>()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms.iter().map(|(e, _)| e[v]).max().unwrap_or(0)
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < o.terms.len() {
            match cmp_exps(&self.terms[i].0, &o.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(o.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = self.terms[i].1.add(&o.terms[j].1);
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&o.terms[j..]);
        Poly { terms: out }
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &Cyc, k: &Cyclo) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        Poly {
            terms: self.terms.iter().map(|(e, a)| (e.clone(), k.mul(a, c))).collect(),
        }
    }

    pub fn mul(&self, o: &Poly, k: &Cyclo) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        if self.is_one() {
            return o.clone();
        }
        if o.is_one() {
            return self.clone();
        }
        let mut raw = Vec::with_capacity(self.terms.len() * o.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                let e: Exps = ea.iter().zip(eb.iter()).map(|(x, y)| x + y).collect();
                raw.push((e, k.mul(ca, cb)));
            }
        }
        if self.terms.len() == 1 || o.terms.len() == 1 {
            // Multiplying by a monomial preserves order.
            raw.retain(|t| !t.1.is_zero());
            return Poly { terms: raw };
        }
        Poly::from_unsorted(raw)
    }

    pub fn pow(&self, n: u32, k: &Cyclo) -> Poly {
        let nv = self.terms.first().map(|t| t.0.len()).unwrap_or(0);
        let mut acc = Poly::one(nv);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base, k);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base, k);
            }
        }
        acc
    }

    /// Scale so that the leading coefficient is 1.
    pub fn monic(&self, k: &Cyclo) -> Poly {
        if self.is_zero() || self.lc().is_one() {
            return self.clone();
        }
        let inv = k.inv(self.lc()).expect("nonzero leading coefficient");
        self.scale(&inv, k)
    }

    /// Exact division; `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly, k: &Cyclo) -> Option<Poly> {
        if d.is_zero() {
            return None;
        }
        if d.is_one() {
            return Some(self.clone());
        }
        let lc_inv = k.inv(d.lc())?;
        let dlm = d.lm().clone();
        let mut r = self.clone();
        let mut q: Vec<(Exps, Cyc)> = Vec::new();
        while !r.is_zero() {
            let rlm = r.lm();
            if !rlm.iter().zip(dlm.iter()).all(|(a, b)| a >= b) {
                return None;
            }
            let e: Exps = rlm.iter().zip(dlm.iter()).map(|(a, b)| a - b).collect();
            let c = k.mul(r.lc(), &lc_inv);
            let t = Poly::monomial(e.clone(), c.clone());
            r = r.sub(&t.mul(d, k));
            q.push((e, c));
        }
        Some(Poly { terms: q })
    }

    /// Coefficient of `x_v^d`, as a polynomial not involving `x_v`.
    fn coeff_in(&self, v: usize, d: u32) -> Poly {
        let raw: Vec<(Exps, Cyc)> = self
            .terms
            .iter()
            .filter(|(e, _)| e[v] == d)
            .map(|(e, c)| {
                let mut e = e.clone();
                e[v] = 0;
                (e, c.clone())
            })
            .collect();
        Poly::from_unsorted(raw)
    }

    fn content_in(&self, v: usize, k: &Cyclo) -> Poly {
        let mut degs: Vec<u32> = self.terms.iter().map(|(e, _)| e[v]).collect();
        degs.sort_unstable();
        degs.dedup();
        let mut g = Poly::zero();
        for d in degs {
            g = gcd(&g, &self.coeff_in(v, d), k);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn primitive_part_in(&self, v: usize, k: &Cyclo) -> Poly {
        let c = self.content_in(v, k);
        self.div_exact(&c, k).expect("content divides").monic(k)
    }

    /// Substitute every variable and evaluate, combining with the provided
    /// ring operations. Used for specialization into other fields.
    pub fn eval_with<T: Clone>(
        &self,
        zero: T,
        coef: impl Fn(&Cyc) -> T,
        var_pow: impl Fn(usize, u32) -> T,
        add: impl Fn(&T, &T) -> T,
        mul: impl Fn(&T, &T) -> T,
    ) -> T {
        let mut acc = zero;
        for (e, c) in &self.terms {
            let mut t = coef(c);
            for (i, &p) in e.iter().enumerate() {
                if p > 0 {
                    t = mul(&t, &var_pow(i, p));
                }
            }
            acc = add(&acc, &t);
        }
        acc
    }

    /// Indices of variables that occur.
    pub fn support_vars(&self) -> Vec<usize> {
        let n = self.terms.first().map(|t| t.0.len()).unwrap_or(0);
        (0..n).filter(|&v| self.degree_in(v) > 0).collect()
    }
}

fn monomial_gcd(m: &Poly, p: &Poly) -> Poly {
    let mut e = m.lm().clone();
    for (pe, _) in p.terms() {
        for (a, b) in e.iter_mut().zip(pe.iter()) {
            *a = (*a).min(*b);
        }
    }
    Poly::monomial(e, Cyc::one())
}

fn prem(a: &Poly, b: &Poly, v: usize, k: &Cyclo) -> Poly {
    let db = b.degree_in(v);
    let lcb = b.coeff_in(v, db);
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(v) >= db {
        let dr = r.degree_in(v);
        let lcr = r.coeff_in(v, dr);
        let nv = b.lm().len();
        let mut e = zero_exps(nv);
        e[v] = dr - db;
        let shift = Poly::monomial(e, Cyc::one());
        r = r.mul(&lcb, k).sub(&lcr.mul(&shift, k).mul(b, k));
    }
    r
}

/// Evaluates every variable except `v` at `point[i]`.
fn eval_except(p: &Poly, v: usize, point: &[i64], k: &Cyclo) -> Poly {
    let nv = p.lm().len();
    let raw: Vec<(Exps, Cyc)> = p
        .terms
        .iter()
        .map(|(e, c)| {
            let mut f = BigRational::one();
            for (i, &x) in e.iter().enumerate() {
                if i != v && x > 0 {
                    f *= BigRational::from_integer(BigInt::from(point[i]).pow(x));
                }
            }
            let mut ex = zero_exps(nv);
            ex[v] = e[v];
            (ex, c.scale(&f))
        })
        .collect();
    let _ = k;
    Poly::from_unsorted(raw)
}

/// Euclid over the coefficient field for polynomials in the single variable `v`.
fn univariate_gcd_degree(a: &Poly, b: &Poly, v: usize, k: &Cyclo) -> u32 {
    let (mut r0, mut r1) = (a.monic(k), b.monic(k));
    if r0.degree_in(v) < r1.degree_in(v) {
        std::mem::swap(&mut r0, &mut r1);
    }
    while !r1.is_zero() {
        let db = r1.degree_in(v);
        let mut r = r0;
        while !r.is_zero() && r.degree_in(v) >= db {
            let c = r.lc().clone();
            let mut e = r.lm().clone();
            e[v] -= db;
            r = r.sub(&r1.mul(&Poly::monomial(e, c), k));
        }
        r0 = r1;
        r1 = r.monic(k);
    }
    r0.degree_in(v)
}

const POINTS: [i64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Upper bound on the degree in `v` of `gcd(a, b)`, from one evaluation of the
/// remaining variables at which both leading coefficients in `v` survive.
/// The bound is exact when it is zero.
fn gcd_degree_bound(a: &Poly, b: &Poly, v: usize, k: &Cyclo) -> u32 {
    let nv = a.lm().len();
    let (da, db) = (a.degree_in(v), b.degree_in(v));
    let la = a.coeff_in(v, da);
    let lb = b.coeff_in(v, db);
    for attempt in 0..8usize {
        let point: Vec<i64> = (0..nv)
            .map(|i| POINTS[(i * 5 + attempt * 7) % POINTS.len()] + attempt as i64)
            .collect();
        if eval_except(&la, v, &point, k).is_zero() || eval_except(&lb, v, &point, k).is_zero() {
            continue;
        }
        let ea = eval_except(a, v, &point, k);
        let eb = eval_except(b, v, &point, k);
        return univariate_gcd_degree(&ea, &eb, v, k);
    }
    da.min(db)
}

/// Monic greatest common divisor.
pub fn gcd(a: &Poly, b: &Poly, k: &Cyclo) -> Poly {
    if a.is_zero() {
        return b.monic(k);
    }
    if b.is_zero() {
        return a.monic(k);
    }
    let nv = a.lm().len();
    if a.is_constant() || b.is_constant() {
        return Poly::one(nv);
    }
    if a.is_monomial() {
        return monomial_gcd(a, b);
    }
    if b.is_monomial() {
        return monomial_gcd(b, a);
    }
    if a == b {
        return a.monic(k);
    }
    // A variable present in only one argument can be split off via contents.
    for v in 0..nv {
        let (da, db) = (a.degree_in(v), b.degree_in(v));
        if da > 0 && db == 0 {
            return gcd(&a.content_in(v, k), b, k);
        }
        if db > 0 && da == 0 {
            return gcd(a, &b.content_in(v, k), k);
        }
    }
    let mut best: Option<(u32, usize)> = None;
    for v in 0..nv {
        if a.degree_in(v) == 0 {
            continue;
        }
        let bound = gcd_degree_bound(a, b, v, k);
        if bound == 0 {
            return gcd(&a.content_in(v, k), &b.content_in(v, k), k);
        }
        if best.is_none_or(|(bb, _)| bound < bb) {
            best = Some((bound, v));
        }
    }
    let (bound, v) = best.expect("nonconstant");
    let (da, db) = (a.degree_in(v), b.degree_in(v));
    if bound == db && db <= da && a.div_exact(b, k).is_some() {
        return b.monic(k);
    }
    if bound == da && da <= db && b.div_exact(a, k).is_some() {
        return a.monic(k);
    }
    let ca = a.content_in(v, k);
    let cb = b.content_in(v, k);
    let g = gcd(&ca, &cb, k);
    let pa = a.div_exact(&ca, k).expect("content divides");
    let pb = b.div_exact(&cb, k).expect("content divides");
    let (mut r0, mut r1) = if da >= db { (pa, pb) } else { (pb, pa) };
    let h = loop {
        let r = prem(&r0, &r1, v, k);
        if r.is_zero() {
            break r1.primitive_part_in(v, k);
        }
        if r.degree_in(v) == 0 {
            break Poly::one(nv);
        }
        r0 = r1;
        r1 = r.primitive_part_in(v, k);
    };
    g.mul(&h, k).monic(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use smallvec::smallvec;

    fn q() -> Cyclo {
        Cyclo::new(1)
    }

    fn x(nv: usize, i: usize) -> Poly {
        Poly::var(i, nv)
    }

    fn c(n: i64, nv: usize) -> Poly {
        Poly::constant(Cyc::from_int(n), nv)
    }

    #[test]
    fn graded_lex_order() {
        let a: Exps = smallvec![2, 0];
        let b: Exps = smallvec![0, 3];
        let d: Exps = smallvec![1, 1];
        assert_eq!(cmp_exps(&a, &b), Ordering::Less);
        assert_eq!(cmp_exps(&a, &d), Ordering::Greater);
    }

    #[test]
    fn gcd_of_products() {
        let k = q();
        let (s, t) = (x(2, 0), x(2, 1));
        let f = s.add(&t).mul(&s.sub(&c(1, 2)), &k);
        let g = s.add(&t).mul(&t.add(&c(2, 2)), &k);
        assert_eq!(gcd(&f, &g, &k), s.add(&t));
    }

    #[test]
    fn gcd_univariate_difference_of_squares() {
        let k = q();
        let t = x(1, 0);
        let f = t.mul(&t, &k).sub(&c(1, 1));
        let g = t.sub(&c(1, 1));
        assert_eq!(gcd(&f, &g, &k), g);
        assert_eq!(f.div_exact(&g, &k).unwrap(), t.add(&c(1, 1)));
    }

    #[test]
    fn gcd_coprime_is_one() {
        let k = q();
        let (s, t) = (x(2, 0), x(2, 1));
        let f = s.mul(&s, &k).add(&t);
        let g = t.mul(&t, &k).add(&s);
        assert!(gcd(&f, &g, &k).is_one());
    }

    #[test]
    fn gcd_over_cyclotomic_coefficients() {
        let k = Cyclo::new(3);
        let t = x(1, 0);
        let z = Poly::constant(k.zeta_pow(1), 1);
        // (t - ζ)(t + 1) and (t - ζ)(t - 1)
        let f = t.sub(&z).mul(&t.add(&c(1, 1)), &k);
        let g = t.sub(&z).mul(&t.sub(&c(1, 1)), &k);
        assert_eq!(gcd(&f, &g, &k), t.sub(&z));
    }
}
