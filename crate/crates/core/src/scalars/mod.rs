//! Exact scalars: rational functions in declared variables over Q(ζ_n).

mod cyclo;
mod poly;
mod text;

use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

pub use cyclo::{Cyc, Cyclo};
pub use poly::{gcd, Exps, Poly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("undeclared variable `{0}`")]
    UndeclaredVariable(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("`zeta` used but the field has no cyclotomic order")]
    ZetaWithoutCyclotomic,
    #[error("pole: denominator vanishes under assignment {assignment}")]
    Pole { assignment: String },
    #[error("variable `{0}` is not assigned")]
    Unassigned(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("cannot map Q(zeta_{from}) into Q(zeta_{to})")]
    IncompatibleCyclotomic { from: u32, to: u32 },
}

#[derive(Debug)]
struct FieldData {
    variables: Vec<String>,
    cyclotomic_order: Option<u32>,
    cyclo: Cyclo,
}

/// A rational function field `K(x_1, ..., x_k)` with `K = Q` or `Q(ζ_n)`.
#[derive(Clone, Debug)]
pub struct ScalarField(Arc<FieldData>);

impl PartialEq for ScalarField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.variables == other.0.variables && self.0.cyclotomic_order == other.0.cyclotomic_order)
    }
}
impl Eq for ScalarField {}

fn valid_name(s: &str) -> bool {
    let mut ch = s.chars();
    matches!(ch.next(), Some(c) if c.is_ascii_alphabetic()) && ch.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl ScalarField {
    pub fn new<S: AsRef<str>>(variables: &[S], cyclotomic_order: Option<u32>) -> Result<Self, ScalarError> {
        let variables: Vec<String> = variables.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, v) in variables.iter().enumerate() {
            if !valid_name(v) {
                return Err(ScalarError::InvalidField(format!("bad variable name `{v}`")));
            }
            if v == "zeta" {
                return Err(ScalarError::InvalidField("`zeta` is reserved".into()));
            }
            if variables[..i].contains(v) {
                return Err(ScalarError::InvalidField(format!("duplicate variable `{v}`")));
            }
        }
        if cyclotomic_order == Some(0) {
            return Err(ScalarError::InvalidField("cyclotomic order must be positive".into()));
        }
        Ok(ScalarField(Arc::new(FieldData {
            cyclo: Cyclo::new(cyclotomic_order.unwrap_or(1)),
            variables,
            cyclotomic_order,
        })))
    }

    /// Field over Q in the given variables. Panics on invalid names.
    pub fn rational<S: AsRef<str>>(variables: &[S]) -> Self {
        Self::new(variables, None).expect("valid field")
    }

    pub fn variables(&self) -> &[String] {
        &self.0.variables
    }

    pub fn cyclotomic_order(&self) -> Option<u32> {
        self.0.cyclotomic_order
    }

    pub(crate) fn cyclo(&self) -> &Cyclo {
        &self.0.cyclo
    }

    fn nvars(&self) -> usize {
        self.0.variables.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.variables.iter().position(|v| v == name)
    }

    pub fn zero(&self) -> Scalar {
        Scalar {
            num: Poly::zero(),
            den: Poly::one(self.nvars()),
            field: self.clone(),
        }
    }

    pub fn one(&self) -> Scalar {
        self.int(1)
    }

    pub fn int(&self, n: i64) -> Scalar {
        self.from_cyc(Cyc::from_int(n))
    }

    pub fn big_rational(&self, r: BigRational) -> Scalar {
        self.from_cyc(Cyc::from_rational(r))
    }

    /// `n/d`; panics when `d == 0`.
    pub fn frac(&self, n: i64, d: i64) -> Scalar {
        assert!(d != 0, "zero denominator");
        self.big_rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn from_cyc(&self, c: Cyc) -> Scalar {
        Scalar {
            num: Poly::constant(c, self.nvars()),
            den: Poly::one(self.nvars()),
            field: self.clone(),
        }
    }

    pub fn var(&self, name: &str) -> Result<Scalar, ScalarError> {
        let i = self
            .var_index(name)
            .ok_or_else(|| ScalarError::UndeclaredVariable(name.to_string()))?;
        Ok(Scalar {
            num: Poly::var(i, self.nvars()),
            den: Poly::one(self.nvars()),
            field: self.clone(),
        })
    }

    /// `ζ^k`; errors when the field has no cyclotomic order.
    pub fn zeta_pow(&self, k: i64) -> Result<Scalar, ScalarError> {
        if self.0.cyclotomic_order.is_none() {
            return Err(ScalarError::ZetaWithoutCyclotomic);
        }
        Ok(self.from_cyc(self.0.cyclo.zeta_pow(k)))
    }

    pub fn parse(&self, text: &str) -> Result<Scalar, ScalarError> {
        text::parse(text, self)
    }
}

/// An element `num/den` kept in canonical form: coprime, `den` monic.
#[derive(Clone)]
pub struct Scalar {
    num: Poly,
    den: Poly,
    field: ScalarField,
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.num == other.num && self.den == other.den
    }
}
impl Eq for Scalar {}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({})", self)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::render(self))
    }
}

impl Scalar {
    /// Builds `num/den` and canonicalizes. `den` must be nonzero.
    pub fn from_parts(num: Poly, den: Poly, field: &ScalarField) -> Result<Scalar, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Scalar {
            num,
            den,
            field: field.clone(),
        }
        .canonicalize())
    }

    pub fn canonicalize(self) -> Scalar {
        let k = self.field.cyclo();
        let nv = self.field.nvars();
        if self.num.is_zero() {
            return self.field.zero();
        }
        if self.den.is_one() {
            return self;
        }
        let g = gcd(&self.num, &self.den, k);
        let (mut num, mut den) = if g.is_one() {
            (self.num, self.den)
        } else {
            (
                self.num.div_exact(&g, k).expect("gcd divides"),
                self.den.div_exact(&g, k).expect("gcd divides"),
            )
        };
        if !den.lc().is_one() {
            let inv = k.inv(den.lc()).expect("nonzero");
            num = num.scale(&inv, k);
            den = den.scale(&inv, k);
        }
        if den.is_constant() {
            den = Poly::one(nv);
        }
        Scalar {
            num,
            den,
            field: self.field,
        }
    }

    pub fn field(&self) -> &ScalarField {
        &self.field
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The value as an element of the base field, if it involves no variables.
    pub fn as_constant(&self) -> Option<Cyc> {
        if self.den.is_one() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        self.as_constant().and_then(|c| c.as_rational())
    }

    fn check_field(&self, o: &Scalar) {
        assert!(
            self.field == o.field,
            "scalar field mismatch: {:?} vs {:?}",
            self.field.variables(),
            o.field.variables()
        );
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Scalar {
            num: self.den.clone(),
            den: self.num.clone(),
            field: self.field.clone(),
        }
        .canonicalize())
    }

    pub fn checked_div(&self, o: &Scalar) -> Result<Scalar, ScalarError> {
        Ok(self * &o.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Scalar, ScalarError> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let k = self.field.cyclo();
        let e = e as u32;
        Ok(Scalar {
            num: self.num.pow(e, k),
            den: self.den.pow(e, k),
            field: self.field.clone(),
        })
    }

    /// Substitutes each variable of `self` by a scalar of `target`. Variables
    /// left unassigned pass through when `target` declares the same name.
    pub fn specialize(
        &self,
        assignment: &BTreeMap<String, Scalar>,
        target: &ScalarField,
    ) -> Result<Scalar, ScalarError> {
        let src_k = self.field.cyclo();
        let dst_k = target.cyclo();
        if src_k.order() > 1 && !dst_k.order().is_multiple_of(src_k.order()) {
            return Err(ScalarError::IncompatibleCyclotomic {
                from: src_k.order(),
                to: dst_k.order(),
            });
        }
        let mut images: Vec<Option<Scalar>> = Vec::new();
        for v in self.field.variables() {
            let img = match assignment.get(v) {
                Some(s) => {
                    assert!(s.field == *target, "assignment outside target field");
                    Some(s.clone())
                }
                None => target.var(v).ok(),
            };
            images.push(img);
        }
        let used = |p: &Poly| p.support_vars();
        for i in used(&self.num).into_iter().chain(used(&self.den)) {
            if images[i].is_none() {
                return Err(ScalarError::Unassigned(self.field.variables()[i].clone()));
            }
        }
        let eval = |p: &Poly| -> Scalar {
            p.eval_with(
                target.zero(),
                |c| target.from_cyc(src_k.embed(c, dst_k).expect("compatible orders")),
                |i, e| images[i].as_ref().unwrap().pow(e as i64).unwrap(),
                |a, b| a + b,
                |a, b| a * b,
            )
        };
        let n = eval(&self.num);
        let d = eval(&self.den);
        if d.is_zero() {
            let desc: Vec<String> = assignment.iter().map(|(k, v)| format!("{k}={v}")).collect();
            return Err(ScalarError::Pole {
                assignment: desc.join(", "),
            });
        }
        n.checked_div(&d)
    }

    /// Re-expresses `self` in `target`, which must declare every variable that
    /// occurs and have a compatible cyclotomic order.
    pub fn embed(&self, target: &ScalarField) -> Result<Scalar, ScalarError> {
        if self.field == *target {
            return Ok(self.clone());
        }
        self.specialize(&BTreeMap::new(), target)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        self.check_field(o);
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let k = self.field.cyclo();
        if self.den == o.den {
            return Scalar {
                num: self.num.add(&o.num),
                den: self.den.clone(),
                field: self.field.clone(),
            }
            .canonicalize();
        }
        let g = gcd(&self.den, &o.den, k);
        let b1 = self.den.div_exact(&g, k).unwrap();
        let d1 = o.den.div_exact(&g, k).unwrap();
        Scalar {
            num: self.num.mul(&d1, k).add(&o.num.mul(&b1, k)),
            den: self.den.mul(&d1, k),
            field: self.field.clone(),
        }
        .canonicalize()
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        self.check_field(o);
        if self.is_zero() || o.is_zero() {
            return self.field.zero();
        }
        if self.is_one() {
            return o.clone();
        }
        if o.is_one() {
            return self.clone();
        }
        let k = self.field.cyclo();
        let nv = self.field.nvars();
        let reduce = |a: &Poly, b: &Poly| -> (Poly, Poly) {
            if b.is_one() {
                return (a.clone(), b.clone());
            }
            let g = gcd(a, b, k);
            if g.is_one() {
                (a.clone(), b.clone())
            } else {
                (a.div_exact(&g, k).unwrap(), b.div_exact(&g, k).unwrap())
            }
        };
        let (a, d) = reduce(&self.num, &o.den);
        let (c, b) = reduce(&o.num, &self.den);
        let mut num = a.mul(&c, k);
        let mut den = b.mul(&d, k);
        if !den.lc().is_one() {
            let inv = k.inv(den.lc()).unwrap();
            num = num.scale(&inv, k);
            den = den.scale(&inv, k);
        }
        if den.is_constant() {
            den = Poly::one(nv);
        }
        Scalar {
            num,
            den,
            field: self.field.clone(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: self.num.neg(),
            den: self.den.clone(),
            field: self.field.clone(),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        self + &(-o)
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    /// Panics on division by zero; use [`Scalar::checked_div`] otherwise.
    fn div(self, o: &Scalar) -> Scalar {
        self.checked_div(o).expect("division by zero scalar")
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar { (&self).$m(&o) }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar { (&self).$m(o) }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar { self.$m(&o) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(mut iter: I) -> Scalar {
        let first = iter.next().expect("sum of empty scalar iterator has no field");
        iter.fold(first, |a, b| a + b)
    }
}

/// Rational number helper used by callers that build q-numbers.
pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl ScalarField {
    /// `(n)_x = 1 + x + ... + x^{n-1}`.
    pub fn q_number(&self, x: &Scalar, n: u32) -> Scalar {
        let mut acc = self.zero();
        let mut p = self.one();
        for _ in 0..n {
            acc = &acc + &p;
            p = &p * x;
        }
        acc
    }

    /// `(n)_x! = (1)_x (2)_x ... (n)_x`.
    pub fn q_factorial(&self, x: &Scalar, n: u32) -> Scalar {
        (1..=n).fold(self.one(), |acc, i| &acc * &self.q_number(x, i))
    }

    /// Gaussian binomial `binom(n, k)_x`; errors when a denominator vanishes.
    pub fn q_binomial(&self, x: &Scalar, n: u32, k: u32) -> Result<Scalar, ScalarError> {
        if k > n {
            return Ok(self.zero());
        }
        let num = self.q_factorial(x, n);
        let den = &self.q_factorial(x, k) * &self.q_factorial(x, n - k);
        num.checked_div(&den)
    }
}
