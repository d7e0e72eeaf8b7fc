//! Twisted quantum planes as comodule Hom-algebras over M_q(2).
use homq::catalog::{matrices, planes};
use homq::comodule::PlaneKind;
use homq::ncpoly::NCPoly;

fn main() {
    let f = matrices::matrix_field();
    let (lambda, xi) = (f.var("lambda").unwrap(), f.var("xi").unwrap());
    for kind in [PlaneKind::Standard, PlaneKind::Fermionic, PlaneKind::Mixed] {
        let pl = planes::twisted(kind, &lambda, &xi, 4).unwrap();
        let c = pl.carrier();
        let xy = NCPoly::term(c.parse_word("xy").unwrap(), f.one());
        println!("{kind:?}");
        println!("  ρ(xy) = {}", pl.render(&pl.rho(&xy)));
        println!("  {}", pl.verify(2).unwrap().summary());
    }
}
