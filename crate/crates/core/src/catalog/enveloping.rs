//! Finite quotients of `U_q(sl2)` at roots of unity with their braiding
//! elements.

use std::sync::Arc;

use crate::hombialg::{tensor_mul, HomBialgebra};
use crate::ncpoly::{word, NCPoly, Presentation, Tensor, Word};
use crate::scalars::{Scalar, ScalarField};

use super::CatalogError;

/// A braided instance before materialization.
pub struct BraidedInstance {
    pub h: Arc<HomBialgebra>,
    pub r: Tensor,
}

fn power(g: u8, k: usize) -> Word {
    Word::from_vec(vec![g; k])
}

fn gen_poly(one: &Scalar, w: Word) -> NCPoly {
    NCPoly::term(w, one.clone())
}

/// `(n)_x! = Π_{m ≤ n} (1 + x + … + x^{m-1})`.
fn q_factorial(x: &Scalar, n: usize) -> Scalar {
    let one = x.field().one();
    let mut f = one.clone();
    let mut sum = one.clone();
    let mut pw = one;
    for _ in 1..n {
        pw = &pw * x;
        sum = &sum + &pw;
        f = &f * &sum;
    }
    if n == 0 {
        x.field().one()
    } else {
        f
    }
}

fn coefficient(base: &Scalar, x: &Scalar, n: usize) -> Result<Scalar, CatalogError> {
    let mut num = base.field().one();
    for _ in 0..n {
        num = &num * base;
    }
    let fact = q_factorial(x, n);
    if fact.is_zero() {
        return Err(CatalogError::Parameter(format!("q-factorial ({n})! vanishes")));
    }
    Ok(num.checked_div(&fact)?)
}

fn field(order: u32) -> Result<ScalarField, CatalogError> {
    Ok(ScalarField::new(&["lambda"], Some(order))?)
}

fn twist(h: HomBialgebra, table: Vec<NCPoly>) -> Result<Arc<HomBialgebra>, CatalogError> {
    Ok(Arc::new(h.twist(table)?))
}

/// `u_q(sl2)` at `q = ζ_l` on generators `g < E < F` (`g` of weight 0),
/// twisted by `E ↦ λE`, `F ↦ λ^{-1}F`.
pub fn small(l: u32, lambda: Option<&str>, max_degree: usize) -> Result<BraidedInstance, CatalogError> {
    if l < 3 || l.is_multiple_of(2) {
        return Err(CatalogError::Parameter("l must be odd and greater than 1".into()));
    }
    let f = field(l)?;
    let one = f.one();
    let q = f.zeta_pow(1)?;
    let qi = q.inv()?;
    let n = l as usize;
    let (g, e, ff) = (0u8, 1u8, 2u8);
    let ginv = NCPoly::term(power(g, n - 1), one.clone());
    let mut comm = NCPoly::term(power(g, 1), one.clone());
    comm.add_scaled(&ginv, &f.int(-1));
    let comm = comm.scale(&(&q - &qi).inv()?);
    let mut ef = NCPoly::term(word(&[e, ff]), one.clone());
    ef.add_scaled(&comm, &f.int(-1));
    let pres = Presentation::builder(&f, &["g", "E", "F"])
        .weights(&[0, 1, 1])
        .rule_poly(word(&[e, g]), NCPoly::term(word(&[g, e]), &qi * &qi))
        .rule_poly(word(&[ff, g]), NCPoly::term(word(&[g, ff]), &q * &q))
        .rule_poly(word(&[ff, e]), ef)
        .rule_poly(power(g, n), NCPoly::constant(one.clone()))
        .rule_poly(power(e, n), NCPoly::zero())
        .rule_poly(power(ff, n), NCPoly::zero())
        .build(max_degree)?;
    let pres = Arc::new(pres);
    let gw = word(&[g]);
    let gi = power(g, n - 1);
    let delta = vec![
        Tensor::pair(&gen_poly(&one, gw.clone()), &gen_poly(&one, gw.clone())),
        {
            let mut t = Tensor::pair(&gen_poly(&one, word(&[e])), &gen_poly(&one, gw.clone()));
            t.add_scaled(&Tensor::pair(&pres.one(), &gen_poly(&one, word(&[e]))), &one);
            t
        },
        {
            let mut t = Tensor::pair(&gen_poly(&one, word(&[ff])), &pres.one());
            t.add_scaled(&Tensor::pair(&gen_poly(&one, gi), &gen_poly(&one, word(&[ff]))), &one);
            t
        },
    ];
    let base = HomBialgebra::new(pres.clone(), delta)?;

    let mut rg = Tensor::zero();
    let inv_l = f.frac(1, l as i64);
    for a in 0..n {
        for b in 0..n {
            let c = &inv_l * &f.zeta_pow(-2 * (a * b) as i64)?;
            rg.add_term(vec![power(g, a), power(g, b)], c);
        }
    }
    let mut re = Tensor::zero();
    let qq = &qi * &qi;
    for k in 0..n {
        let c = coefficient(&(&q - &qi), &qq, k)?;
        re.add_term(vec![power(e, k), power(ff, k)], c);
    }
    let r = tensor_mul(&[&pres, &pres], &rg, &re);

    let lam = parse_lambda(&f, lambda)?;
    let table = vec![
        gen_poly(&one, gw),
        gen_poly(&lam, word(&[e])),
        gen_poly(&lam.inv()?, word(&[ff])),
    ];
    Ok(BraidedInstance {
        h: twist(base, table)?,
        r,
    })
}

/// `U_q^{(r)}(sl2)` with `q = ζ_{4r}^2` on generators `K < Xp < Xm`
/// (`K` of weight 0), twisted by `X± ↦ λ^{±1}X±`.
pub fn reduced(r: u32, lambda: Option<&str>, max_degree: usize) -> Result<BraidedInstance, CatalogError> {
    if r < 2 {
        return Err(CatalogError::Parameter("r must be greater than 1".into()));
    }
    let f = field(4 * r)?;
    let one = f.one();
    let q = f.zeta_pow(2)?;
    let qi = q.inv()?;
    let n = r as usize;
    let order = 4 * n;
    let (k, xp, xm) = (0u8, 1u8, 2u8);
    let mut comm = NCPoly::term(power(k, 2), one.clone());
    comm.add_term(power(k, order - 2), f.int(-1));
    let comm = comm.scale(&(&q - &qi).inv()?);
    let mut pm = NCPoly::term(word(&[xp, xm]), one.clone());
    pm.add_scaled(&comm, &f.int(-1));
    let pres = Presentation::builder(&f, &["K", "Xp", "Xm"])
        .weights(&[0, 1, 1])
        .rule_poly(word(&[xp, k]), NCPoly::term(word(&[k, xp]), qi.clone()))
        .rule_poly(word(&[xm, k]), NCPoly::term(word(&[k, xm]), q.clone()))
        .rule_poly(word(&[xm, xp]), pm)
        .rule_poly(power(k, order), NCPoly::constant(one.clone()))
        .rule_poly(power(xp, n), NCPoly::zero())
        .rule_poly(power(xm, n), NCPoly::zero())
        .build(max_degree)?;
    let pres = Arc::new(pres);
    let kw = word(&[k]);
    let ki = power(k, order - 1);
    let side = |x: u8| {
        let mut t = Tensor::pair(&gen_poly(&one, word(&[x])), &gen_poly(&one, kw.clone()));
        t.add_scaled(
            &Tensor::pair(&gen_poly(&one, ki.clone()), &gen_poly(&one, word(&[x]))),
            &one,
        );
        t
    };
    let delta = vec![
        Tensor::pair(&gen_poly(&one, kw.clone()), &gen_poly(&one, kw.clone())),
        side(xp),
        side(xm),
    ];
    let base = HomBialgebra::new(pres.clone(), delta)?;

    let mut rk = Tensor::zero();
    let inv = f.frac(1, order as i64);
    for a in 0..order {
        for b in 0..order {
            rk.add_term(vec![power(k, a), power(k, b)], &inv * &f.zeta_pow(-((a * b) as i64))?);
        }
    }
    let kxp = pres.multiply_words(&kw, &word(&[xp]));
    let kixm = pres.multiply_words(&ki, &word(&[xm]));
    let mut left = pres.one();
    let mut right = pres.one();
    let mut rx = Tensor::zero();
    let qq = &qi * &qi;
    for m in 0..n {
        let c = coefficient(&(&one - &qq), &qq, m)?;
        rx.add_scaled(&Tensor::pair(&left, &right), &c);
        left = pres.multiply(&left, &kxp);
        right = pres.multiply(&right, &kixm);
    }
    let rr = tensor_mul(&[&pres, &pres], &rk, &rx);

    let lam = parse_lambda(&f, lambda)?;
    let table = vec![
        gen_poly(&one, kw),
        gen_poly(&lam, word(&[xp])),
        gen_poly(&lam.inv()?, word(&[xm])),
    ];
    Ok(BraidedInstance {
        h: twist(base, table)?,
        r: rr,
    })
}

fn parse_lambda(f: &ScalarField, lambda: Option<&str>) -> Result<Scalar, CatalogError> {
    let lam = f.parse(lambda.unwrap_or("lambda"))?;
    if lam.is_zero() {
        return Err(CatalogError::Parameter("lambda must be invertible".into()));
    }
    Ok(lam)
}
