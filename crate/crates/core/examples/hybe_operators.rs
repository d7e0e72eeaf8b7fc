//! Solutions of the Hom-Yang-Baxter equation from comodules.
use homq::catalog::{matrices, planes};
use homq::comodule::{b_alpha, verify_hybe, PlaneKind};

fn main() {
    let f = matrices::matrix_field();
    let (lambda, xi) = (f.var("lambda").unwrap(), f.var("xi").unwrap());
    let pl = planes::twisted(PlaneKind::Standard, &lambda, &xi, 4).unwrap();
    for d in 1..=2 {
        let v = pl.piece(d).unwrap();
        let b = b_alpha(&v);
        println!("degree {d}: {}x{} operator", b.rows, b.cols);
        println!("  {}", verify_hybe(&b, v.alpha()).summary());
    }
    let v = pl.piece(1).unwrap();
    println!("{}", serde_json::to_string_pretty(&b_alpha(&v).to_json()).unwrap());
}
