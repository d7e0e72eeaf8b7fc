//! Build a bialgebra from an R-matrix and recover the R-matrix from its comodule.
use homq::catalog::matrices;
use homq::comodule::{bvw, frt_comodule};
use homq::frt::{frt_construct, frt_twist, verify_ybe, FrtNaming, RMatrixSpec};

fn main() {
    let f = matrices::matrix_field();
    let spec = RMatrixSpec::sl2(&f);
    println!("YBE: {}", verify_ybe(&spec).summary());

    let inst = frt_construct(&spec, &FrtNaming::quantum_matrices(), 4).unwrap();
    let p = inst.chb.h().pres();
    println!("{} relations", inst.retained);
    for rule in p.rules() {
        println!("  {} -> {}", p.render_word(&rule.lhs), p.render_poly(&rule.rhs));
    }

    let v = frt_comodule(&inst).unwrap();
    assert_eq!(bvw(&v, &v).unwrap(), spec.gamma());
    println!("B_VV equals the input tensor");

    let tw = frt_twist(&inst, &[f.var("lambda").unwrap(), f.one()]).unwrap();
    println!("α(b) = {}", tw.chb.h().render(&tw.chb.h().alpha(&p.gen("b"))));
}
