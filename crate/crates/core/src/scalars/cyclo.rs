//! Elements of the cyclotomic field Q(ζ_n), stored as rational polynomials in ζ
//! reduced modulo the n-th cyclotomic polynomial.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense coefficient vector `c_0 + c_1 ζ + ...`, trailing zeros trimmed.
/// The empty vector is zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Cyc(Vec<BigRational>);

/// Arithmetic context for Q(ζ_n). Order 1 is plain Q.
#[derive(Clone, Debug)]
pub struct Cyclo {
    order: u32,
    /// Monic Φ_n, low degree first.
    modulus: Vec<BigRational>,
}

fn trim(v: &mut Vec<BigRational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn upoly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn upoly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
        let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
        out.push(x - y);
    }
    trim(&mut out);
    out
}

/// Polynomial long division over Q. `b` must be nonzero.
fn upoly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lb = b[db].clone();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() / &lb;
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] -= &c * bj;
        }
        q[shift] = c;
        r.pop();
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

fn cyclotomic_polynomial(n: u32) -> Vec<BigRational> {
    let mut num = vec![BigRational::zero(); n as usize + 1];
    num[0] = -BigRational::one();
    num[n as usize] = BigRational::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            let phi_d = cyclotomic_polynomial(d);
            num = upoly_divrem(&num, &phi_d).0;
        }
    }
    num
}

impl Cyclo {
    pub fn new(order: u32) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        Cyclo {
            order,
            modulus: cyclotomic_polynomial(order),
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Degree of Q(ζ_n) over Q.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    fn reduce(&self, mut v: Vec<BigRational>) -> Cyc {
        let deg = self.degree();
        while v.len() > deg {
            let top = v.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = v.len() - deg;
            for j in 0..deg {
                v[shift + j] -= &top * &self.modulus[j];
            }
        }
        trim(&mut v);
        Cyc(v)
    }

    pub fn zeta_pow(&self, k: i64) -> Cyc {
        let e = k.rem_euclid(self.order as i64) as usize;
        let mut v = vec![BigRational::zero(); e + 1];
        v[e] = BigRational::one();
        self.reduce(v)
    }

    pub fn mul(&self, a: &Cyc, b: &Cyc) -> Cyc {
        if a.0.len() == 1 && b.0.len() == 1 {
            return Cyc(vec![&a.0[0] * &b.0[0]]);
        }
        self.reduce(upoly_mul(&a.0, &b.0))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: &Cyc) -> Option<Cyc> {
        if a.is_zero() {
            return None;
        }
        if a.0.len() == 1 {
            return Some(Cyc(vec![a.0[0].recip()]));
        }
        // Extended Euclid: track s with s*a ≡ r (mod Φ).
        let (mut r0, mut r1) = (self.modulus.clone(), a.0.clone());
        let (mut s0, mut s1): (Vec<BigRational>, Vec<BigRational>) = (Vec::new(), vec![BigRational::one()]);
        while !r1.is_empty() {
            let (q, r) = upoly_divrem(&r0, &r1);
            let s = upoly_sub(&s0, &upoly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        // r0 is a nonzero constant since Φ_n is irreducible.
        debug_assert_eq!(r0.len(), 1);
        let c = r0[0].recip();
        let s: Vec<BigRational> = s0.into_iter().map(|x| x * &c).collect();
        Some(self.reduce(s))
    }

    /// Image of ζ_n-polynomial `a` (of this field) in a field of order `target`,
    /// where `self.order` divides `target`.
    pub fn embed(&self, a: &Cyc, target: &Cyclo) -> Option<Cyc> {
        if !target.order.is_multiple_of(self.order) {
            return if a.0.len() <= 1 { Some(a.clone()) } else { None };
        }
        let step = (target.order / self.order) as i64;
        let mut acc = Cyc::zero();
        for (i, c) in a.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let z = target.zeta_pow(step * i as i64);
            acc = acc.add(&z.scale(c));
        }
        Some(acc)
    }
}

impl Cyc {
    pub fn zero() -> Self {
        Cyc(Vec::new())
    }

    pub fn one() -> Self {
        Cyc(vec![BigRational::one()])
    }

    pub fn from_rational(r: BigRational) -> Self {
        if r.is_zero() {
            Cyc::zero()
        } else {
            Cyc(vec![r])
        }
    }

    pub fn from_int(i: i64) -> Self {
        Cyc::from_rational(BigRational::from_integer(BigInt::from(i)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.0
    }

    /// The rational value, when the element lies in Q.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.0.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.0[0].clone()),
            _ => None,
        }
    }

    pub fn add(&self, o: &Cyc) -> Cyc {
        let n = self.0.len().max(o.0.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            match (self.0.get(i), o.0.get(i)) {
                (Some(a), Some(b)) => v.push(a + b),
                (Some(a), None) => v.push(a.clone()),
                (None, Some(b)) => v.push(b.clone()),
                (None, None) => unreachable!(),
            }
        }
        trim(&mut v);
        Cyc(v)
    }

    pub fn neg(&self) -> Cyc {
        Cyc(self.0.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, o: &Cyc) -> Cyc {
        self.add(&o.neg())
    }

    pub fn scale(&self, r: &BigRational) -> Cyc {
        if r.is_zero() {
            return Cyc::zero();
        }
        Cyc(self.0.iter().map(|c| c * r).collect())
    }

    /// Nonzero entries as `(power of ζ, coefficient)`, highest power first.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigRational)> {
        self.0.iter().enumerate().rev().filter(|(_, c)| !c.is_zero())
    }

    /// True when exactly one power of ζ carries a nonzero coefficient.
    pub fn is_single_term(&self) -> bool {
        self.terms().count() == 1
    }

    /// Sign of the leading rational coefficient (used only for rendering).
    pub fn leading_is_negative(&self) -> bool {
        self.terms().next().is_some_and(|(_, c)| c.is_negative())
    }
}
