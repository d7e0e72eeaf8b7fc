//! Group bialgebras with bicharacter cobraiding forms.

use std::sync::Arc;

use crate::cobraid::{CobraidedHomBialgebra, CobraidingForm};
use crate::hombialg::HomBialgebra;
use crate::ncpoly::{word, NCPoly, Presentation, Tensor, Word};
use crate::scalars::{Scalar, ScalarField};

use super::CatalogError;

fn group_delta(pres: &Presentation) -> Vec<Tensor> {
    let one = pres.field().one();
    (0..pres.generators().len())
        .map(|g| {
            let mut t = Tensor::zero();
            t.add_term(vec![word(&[g as u8]), word(&[g as u8])], one.clone());
            t
        })
        .collect()
}

fn units(form: &mut CobraidingForm, n: usize, one: &Scalar) {
    for g in 0..n {
        form.set_unit_left(g as u8, one.clone());
        form.set_unit_right(g as u8, one.clone());
    }
}

fn power_word(g: u8, k: usize) -> Word {
    Word::from_vec(vec![g; k])
}

/// `CZ/n` on one generator `g` with `g^n = 1`, `R(g^a, g^b) = ζ^{ab}`.
pub fn cyclic(n: u32, max_degree: usize) -> Result<Arc<CobraidedHomBialgebra>, CatalogError> {
    if n < 2 {
        return Err(CatalogError::Parameter("n must be at least 2".into()));
    }
    let field = ScalarField::new::<&str>(&[], Some(n))?;
    let pres = Presentation::builder(&field, &["g"])
        .rule_poly(power_word(0, n as usize), NCPoly::constant(field.one()))
        .build(max_degree)?;
    let pres = Arc::new(pres);
    let delta = group_delta(&pres);
    let mut form = CobraidingForm::new(1, field.one());
    units(&mut form, 1, &field.one());
    form.set(0, 0, field.zeta_pow(1)?);
    let h = Arc::new(HomBialgebra::new(pres, delta)?);
    Ok(Arc::new(CobraidedHomBialgebra::new(h, form)?))
}

/// `α_k(g) = g^k` on `CZ/n`.
pub fn cyclic_alpha(c: &CobraidedHomBialgebra, k: u32) -> Vec<NCPoly> {
    let p = c.h().pres();
    vec![p.nf_word(&power_word(0, k as usize))]
}

/// The anyon-generating Hom-quantum group `(CZ/n)_α^{(t)}`.
pub fn anyon(n: u32, k: u32, t: u32, max_degree: usize) -> Result<Arc<CobraidedHomBialgebra>, CatalogError> {
    if k == 0 || k >= n {
        return Err(CatalogError::Parameter("k must lie in 1..n".into()));
    }
    if t > 0 && num_integer::gcd(k, n) != 1 {
        return Err(CatalogError::Parameter(
            "k and n must be coprime for an R-power twist".into(),
        ));
    }
    let base = cyclic(n, max_degree)?;
    let h = Arc::new(base.h().twist(cyclic_alpha(&base, k))?);
    Ok(Arc::new(base.with_h(h).twist_r_power(t)?))
}

/// `kZ` on generators `g`, `G = g^{-1}` with `R(g^m, g^n) = q^{mn}`.
pub fn integers(max_degree: usize) -> Result<Arc<CobraidedHomBialgebra>, CatalogError> {
    let field = ScalarField::rational(&["t"]);
    let pres = Presentation::builder(&field, &["g", "G"])
        .rule("gG", &[("1", "1")])?
        .rule("Gg", &[("1", "1")])?
        .build(max_degree)?;
    let pres = Arc::new(pres);
    let delta = group_delta(&pres);
    let q = field.parse("q")?;
    let qi = field.parse("q^-1")?;
    let mut form = CobraidingForm::new(2, field.one());
    units(&mut form, 2, &field.one());
    form.set(0, 0, q.clone());
    form.set(1, 1, q);
    form.set(0, 1, qi.clone());
    form.set(1, 0, qi);
    let h = Arc::new(HomBialgebra::new(pres, delta)?);
    Ok(Arc::new(CobraidedHomBialgebra::new(h, form)?))
}

/// `(Z_q)_α^{(t)}` with `α = α_k`.
pub fn integral_anyon(k: i64, t: u32, max_degree: usize) -> Result<Arc<CobraidedHomBialgebra>, CatalogError> {
    if k == 0 {
        return Err(CatalogError::Parameter("k must be nonzero".into()));
    }
    let base = integers(max_degree)?;
    let one = base.h().pres().field().one();
    let (a, b) = if k > 0 { (0u8, 1u8) } else { (1u8, 0u8) };
    let m = k.unsigned_abs() as usize;
    let table = vec![
        NCPoly::term(power_word(a, m), one.clone()),
        NCPoly::term(power_word(b, m), one),
    ];
    let h = Arc::new(base.h().twist(table)?);
    Ok(Arc::new(base.with_h(h).twist_r_power(t)?))
}

/// The Klein four-group `Z/2 × Z/2` on `g, h` with the non-symmetric
/// bicharacter `R(g^{a_1}h^{a_2}, g^{b_1}h^{b_2}) = (−1)^{a_1 b_2}`, twisted by
/// the automorphism swapping `g` and `h`.
pub fn klein(t: u32, max_degree: usize) -> Result<Arc<CobraidedHomBialgebra>, CatalogError> {
    let field = ScalarField::rational::<&str>(&[]);
    let pres = Presentation::builder(&field, &["g", "h"])
        .rule("gg", &[("1", "1")])?
        .rule("hh", &[("1", "1")])?
        .rule("hg", &[("gh", "1")])?
        .build(max_degree)?;
    let pres = Arc::new(pres);
    let delta = group_delta(&pres);
    let one = field.one();
    let mut form = CobraidingForm::new(2, one.clone());
    units(&mut form, 2, &one);
    form.set(0, 0, one.clone());
    form.set(0, 1, field.int(-1));
    form.set(1, 0, one.clone());
    form.set(1, 1, one.clone());
    let h = Arc::new(HomBialgebra::new(pres, delta)?);
    let base = CobraidedHomBialgebra::new(h, form)?;
    let swap = vec![NCPoly::term(word(&[1]), one.clone()), NCPoly::term(word(&[0]), one)];
    let h = Arc::new(base.h().twist(swap)?);
    Ok(Arc::new(base.with_h(h).twist_r_power(t)?))
}
