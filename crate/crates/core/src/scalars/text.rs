//! Scalar expression grammar.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' exp)?
//! exp    := ('-' | '+')? INT | '(' ('-' | '+')? INT ')'
//! atom   := INT | NAME | '(' expr ')'
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::{Cyc, Exps, Poly, Scalar, ScalarError, ScalarField};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Sym(char),
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ScalarError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = text[start..i].parse().expect("digits");
            out.push((start, Tok::Int(n)));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Name(text[start..i].to_string())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(ScalarError::Syntax {
                pos: i,
                msg: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    field: &'a ScalarField,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.0).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ScalarError> {
        Err(ScalarError::Syntax {
            pos: self.here(),
            msg: msg.into(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Scalar, ScalarError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Scalar, ScalarError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.peek() == Some(&Tok::Sym('/')) {
                self.pos += 1;
                let d = self.unary()?;
                acc = acc.checked_div(&d)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Scalar, ScalarError> {
        if self.eat('-') {
            Ok(-self.unary()?)
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn signed_int(&mut self) -> Result<i64, ScalarError> {
        let neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                let v: i64 = i64::try_from(&n).or_else(|_| self.err("exponent too large"))?;
                Ok(if neg { -v } else { v })
            }
            _ => self.err("expected integer exponent"),
        }
    }

    fn power(&mut self) -> Result<Scalar, ScalarError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let e = if self.eat('(') {
            let e = self.signed_int()?;
            if !self.eat(')') {
                return self.err("expected `)` after exponent");
            }
            e
        } else {
            self.signed_int()?
        };
        if self.peek() == Some(&Tok::Sym('^')) {
            return self.err("chained exponents need parentheses");
        }
        base.pow(e)
    }

    fn atom(&mut self) -> Result<Scalar, ScalarError> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(self.field.big_rational(BigRational::from_integer(n)))
            }
            Some(Tok::Name(name)) => {
                self.pos += 1;
                resolve_name(&name, self.field)
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected `)`");
                }
                Ok(v)
            }
            Some(t) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

fn resolve_name(name: &str, field: &ScalarField) -> Result<Scalar, ScalarError> {
    if let Ok(v) = field.var(name) {
        return Ok(v);
    }
    match name {
        "zeta" => field.zeta_pow(1),
        "q" if field.var_index("t").is_some() => Ok(field.var("t")?.pow(2).unwrap()),
        "q_half" if field.var_index("t").is_some() => field.var("t"),
        _ => Err(ScalarError::UndeclaredVariable(name.to_string())),
    }
}

pub fn parse(text: &str, field: &ScalarField) -> Result<Scalar, ScalarError> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
        field,
    };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(v)
}

fn render_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn render_monomial(e: &Exps, field: &ScalarField) -> Vec<String> {
    let mut parts = Vec::new();
    for (i, &p) in e.iter().enumerate() {
        match p {
            0 => {}
            1 => parts.push(field.variables()[i].clone()),
            _ => parts.push(format!("{}^{}", field.variables()[i], p)),
        }
    }
    parts
}

fn zeta_factor(k: usize) -> Option<String> {
    match k {
        0 => None,
        1 => Some("zeta".into()),
        _ => Some(format!("zeta^{k}")),
    }
}

fn render_cyc(c: &Cyc) -> String {
    let mut s = String::new();
    for (n, (k, r)) in c.terms().enumerate() {
        let neg = r.is_negative();
        let a = r.abs();
        if n == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let mut parts = Vec::new();
        if !a.is_one() || k == 0 {
            parts.push(render_rational(&a));
        }
        parts.extend(zeta_factor(k));
        s.push_str(&parts.join("*"));
    }
    s
}

/// Renders one term; returns (is_negative, text of absolute value).
fn render_term(e: &Exps, c: &Cyc, field: &ScalarField) -> (bool, String) {
    let mono = render_monomial(e, field);
    if c.is_single_term() {
        let (k, r) = c.terms().next().unwrap();
        let a = r.abs();
        let mut parts = Vec::new();
        if !a.is_one() || (k == 0 && mono.is_empty()) {
            parts.push(render_rational(&a));
        }
        parts.extend(zeta_factor(k));
        parts.extend(mono);
        (r.is_negative(), parts.join("*"))
    } else {
        let mut parts = vec![format!("({})", render_cyc(c))];
        parts.extend(mono);
        (false, parts.join("*"))
    }
}

pub fn render_poly(p: &Poly, field: &ScalarField) -> String {
    if p.is_zero() {
        return "0".into();
    }
    if p.terms().len() == 1 && p.is_constant() && !p.lc().is_single_term() {
        return render_cyc(p.lc());
    }
    let mut s = String::new();
    for (n, (e, c)) in p.terms().iter().enumerate() {
        let (neg, body) = render_term(e, c, field);
        if n == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        s.push_str(&body);
    }
    s
}

pub fn render(s: &Scalar) -> String {
    let f = s.field();
    let num = render_poly(s.numerator(), f);
    if s.denominator().is_one() {
        return num;
    }
    let num =
        if s.numerator().terms().len() > 1 || (s.numerator().is_constant() && !s.numerator().lc().is_single_term()) {
            format!("({num})")
        } else {
            num
        };
    let d = s.denominator();
    let simple_den = d.terms().len() == 1 && d.lc().is_one() && d.lm().iter().filter(|&&x| x > 0).count() == 1;
    let den = render_poly(d, f);
    if simple_den {
        format!("{num}/{den}")
    } else {
        format!("{num}/({den})")
    }
}
